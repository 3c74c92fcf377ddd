#pragma once

// Connected annular noncrossing permutations of the (n,m)-annulus.
//
// Labels 1..n sit clockwise on the exterior circle and n+1..n+m
// counter-clockwise on the interior circle. A permutation pi of [n+m] is
// accepted as a connected annular noncrossing permutation when some cycle
// meets both circles and
//
//     cycles(pi) + cycles(pi^-1 . gamma) = n + m,
//
// with gamma = (1,...,n)(n+1,...,n+m) and right-to-left composition.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ancsieve/formulas.hpp"
#include "ancsieve/partitions.hpp"
#include "ancsieve/permutation.hpp"

namespace ancsieve {

class BoundExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class AnnularPermutation {
public:
    AnnularPermutation(int n, int m, Permutation perm);
    static AnnularPermutation parse(int n, int m, std::string_view cycle_notation);

    int n() const { return n_; }
    int m() const { return m_; }
    int size() const { return n_ + m_; }
    bool is_exterior(int x) const { return x <= n_; }
    int operator()(int x) const { return perm_(x); }
    const Permutation& permutation() const { return perm_; }
    std::vector<std::vector<int>> cycles() const { return perm_.cycles(); }
    std::string to_string() const { return perm_.to_string(); }

    friend auto operator<=>(const AnnularPermutation&, const AnnularPermutation&) = default;
    friend bool operator==(const AnnularPermutation&, const AnnularPermutation&) = default;

private:
    int n_;
    int m_;
    Permutation perm_;
};

/// {"n": 2, "m": 2, "cycles": [[1,3],[2,4]]}
void to_json(nlohmann::json& j, const AnnularPermutation& p);
void from_json(const nlohmann::json& j, AnnularPermutation& p);
AnnularPermutation annular_from_json(const nlohmann::json& j);

struct EnumerationOptions {
    /// Largest n + m the brute-force enumerators accept.
    int max_total = 10;
    /// 0 selects ANCSIEVE_WORKERS from the environment, else the hardware
    /// concurrency.
    unsigned workers = 0;
};

unsigned resolve_workers(unsigned requested);

/// The reference rotation (1,...,n)(n+1,...,n+m).
AnnularPermutation gamma(int n, int m);

/// True iff the cycle word can be rotated into an exterior block followed by
/// an interior block, each a cyclic rotation of its sorted elements.
bool is_clockwise_cycle(std::span<const int> cycle, int n, int m);

bool is_connected_anc(const AnnularPermutation& p);

/// Throws InvalidProfile unless p is a connected annular noncrossing
/// permutation.
CycleProfile profile_of(const AnnularPermutation& p);

/// All of anc(n,m) matching the filter, in lexicographic order of the image
/// sequence. Throws BoundExceeded when n + m > options.max_total.
std::vector<AnnularPermutation> enumerate_anc(int n, int m, const ProfileFilter& filter = {},
                                              const EnumerationOptions& options = {});

/// Exterior labels shift i -> i + ext_shift (mod n); interior labels
/// n+i -> n+j with j = i - int_shift (mod m).
struct RotationPair {
    int n = 1;
    int m = 1;
    int ext_shift = 0;
    int int_shift = 0;

    int exterior_order() const;
    int interior_order() const;
    bool is_annular() const { return exterior_order() == interior_order(); }
    /// Both circles turn by the same fraction of a full turn:
    /// ext_shift / n = int_shift / m (mod 1).
    bool is_rigid() const;
    /// lcm of the two component orders.
    int order() const;
    int apply(int label) const;

    friend bool operator==(const RotationPair&, const RotationPair&) = default;
};

/// sigma . pi . sigma^-1 for the label shift sigma of the rotation.
AnnularPermutation apply_rotation(const RotationPair& rot, const AnnularPermutation& p);

/// All pairs whose exterior and interior components both have order d.
std::vector<RotationPair> rotations_of_order(int n, int m, int d);

/// The order-d elements of the cyclic group generated by (n/g, m/g),
/// g = gcd(n, m): the rigid pairs among rotations_of_order(n, m, d).
std::vector<RotationPair> group_rotations_of_order(int n, int m, int d);

/// Elements of enumerate_anc(n, m, filter) fixed by rot.
std::vector<AnnularPermutation> fixed_points(const RotationPair& rot, const ProfileFilter& filter = {},
                                             const EnumerationOptions& options = {});
bool is_fixed_by(const RotationPair& rot, const AnnularPermutation& p);

/// Fixed by the order-2 annular rotation of its (even) circle sizes.
/// Throws std::invalid_argument when n or m is odd.
bool is_type_B(const AnnularPermutation& p);

/// anc_B(n,m): elements of anc(2n,2m) fixed by the order-2 rotation. The
/// filter is given in halved form and lifted with ProfileFilter::doubled.
std::vector<AnnularPermutation> enumerate_anc_B(int n, int m, const ProfileFilter& filter = {},
                                                const EnumerationOptions& options = {});

/// Connected annular noncrossing permutations all of whose cycles have size 2.
std::vector<AnnularPermutation> enumerate_matchings(int n, int m);

/// Number of connected cycles (pairs meeting both circles) of p.
int connected_cycle_count(const AnnularPermutation& p);

// Disc case: gamma = (1,...,n).
bool is_noncrossing_disc(const Permutation& p);
std::vector<Permutation> enumerate_nc_disc(int n, const std::optional<Partition>& cycle_type = std::nullopt,
                                           const EnumerationOptions& options = {});
Partition cycle_type(const Permutation& p);

}  // namespace ancsieve
