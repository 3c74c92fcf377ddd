#pragma once

// Forward map (gamma, pi) -> (a, b, R^E, R^I, V^E, V^I, V^CE, V^CI) used to
// count annular noncrossing permutations invariant under an annular
// rotation of order d. Only the forward direction is implemented; it is
// validated by injectivity and cardinality.

#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "ancsieve/annulus.hpp"

namespace ancsieve {

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BijectionTuple {
    /// Rank (1-based, ascending labels) of the cycle's first exterior element
    /// among the exterior elements of connected cycles; in [n-R].
    int a = 0;
    /// Rank of the cycle's last interior element among the interior elements
    /// of connected cycles; in [m-S].
    int b = 0;
    /// Exterior labels in [n/d] carrying an exterior-cycle parenthesis.
    std::vector<int> exterior_marks;
    /// Interior labels i - n in [m/d] carrying an interior-cycle parenthesis.
    std::vector<int> interior_marks;
    /// Parenthesis labels (cycle sizes) at exterior_marks, in mark order.
    std::vector<int> exterior_labels;
    std::vector<int> interior_labels;
    /// First c/d block sizes cut by the connected-cycle parentheses.
    std::vector<int> connected_exterior_sizes;
    std::vector<int> connected_interior_sizes;

    friend auto operator<=>(const BijectionTuple&, const BijectionTuple&) = default;
    friend bool operator==(const BijectionTuple&, const BijectionTuple&) = default;
};

void to_json(nlohmann::json& j, const BijectionTuple& t);

/// Throws PreconditionError unless p is a connected annular noncrossing
/// permutation fixed by some annular rotation of order d, every profile
/// parameter is divisible by d, and cycle is a connected cycle of p (in any
/// rotation of its cycle word).
BijectionTuple bijection_phi(std::span<const int> cycle, const AnnularPermutation& p, int d);

/// Membership in the target set for the given profile and order.
bool in_target_set(const BijectionTuple& t, const CycleProfile& p, int d);

/// (n-R)(m-S) C(n/d, r/d) C(m/d, s/d) |S(alpha/d)| |S(beta/d)| |S(lam/d)| |S(mu/d)|,
/// or 0 when the profile is not divisible by d.
Integer target_set_size(const CycleProfile& p, int d);

}  // namespace ancsieve
