#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ancsieve/qcalc.hpp"

namespace ancsieve {

/// An integer partition, stored as its weakly decreasing list of parts.
/// The empty partition is a valid value (weight 0, length 0).
class Partition {
public:
    Partition() = default;
    /// Parts in any order; they are sorted. Throws on non-positive parts.
    explicit Partition(std::vector<int> parts);

    /// Builds (1^{m_1}, 2^{m_2}, ...) from m[i] = multiplicity of part i
    /// (m[0] is ignored).
    static Partition from_multiplicities(std::span<const int> m);
    /// Accepts "(3,1)", "3,1", "()" or "" (whitespace-insensitive).
    static Partition parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    /// m[i] = number of parts equal to i, for 0 <= i <= largest().
    std::vector<int> multiplicities() const;
    /// Nonzero multiplicities only, in increasing part order.
    std::vector<int> nonzero_multiplicities() const;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Partitions of n into exactly k parts, lexicographically decreasing.
std::vector<Partition> par_set(int n, int k);

Partition conjugate(const Partition& lam);

/// sum_{i>=1} lam'_i lam'_{i+1}.
long tau(const Partition& lam);

bool is_divisible(const Partition& lam, int d);
/// Divides every multiplicity by d; part sizes are unchanged.
Partition divide(const Partition& lam, int d);
/// Multiplies every multiplicity by t (each part repeated t times).
Partition scale_multiplicities(const Partition& lam, int t);
/// Multiplies every part by t.
Partition scale_parts(const Partition& lam, int t);

/// k!/prod m_i!, the number of distinct rearrangements of the parts.
Integer rearrangement_count(const Partition& lam);

/// [k]_q!/prod [m_i]_q! for lam with exactly k parts.
QPolynomial q_multinomial_partition(int k, const Partition& lam);

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

}  // namespace ancsieve
