#include "ancsieve/bijection.hpp"

#include <algorithm>
#include <set>

namespace ancsieve {

namespace {

bool profile_divisible(const CycleProfile& p, int d)
{
    for (int v : {p.n, p.m, p.c, p.r, p.s, p.R, p.S})
        if (v % d != 0)
            return false;
    return is_divisible(p.alpha, d) && is_divisible(p.beta, d) && is_divisible(p.lam, d) && is_divisible(p.mu, d);
}

std::vector<int> block_sizes(std::vector<int> cuts, int total, bool cuts_are_starts)
{
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> sizes;
    if (cuts_are_starts) {
        for (std::size_t i = 0; i < cuts.size(); ++i)
            sizes.push_back((i + 1 < cuts.size() ? cuts[i + 1] : total) - cuts[i]);
    } else {
        int prev = -1;
        for (int cut : cuts) {
            sizes.push_back(cut - prev);
            prev = cut;
        }
    }
    return sizes;
}

bool is_rearrangement_of(std::vector<int> values, const Partition& lam)
{
    std::sort(values.begin(), values.end(), std::greater<>());
    return std::equal(values.begin(), values.end(), lam.parts().begin(), lam.parts().end());
}

bool strictly_increasing_within(const std::vector<int>& v, int hi)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1 || v[i] > hi)
            return false;
        if (i > 0 && v[i] <= v[i - 1])
            return false;
    }
    return true;
}

}  // namespace

void to_json(nlohmann::json& j, const BijectionTuple& t)
{
    j = nlohmann::json{{"a", t.a},
                       {"b", t.b},
                       {"R_E", t.exterior_marks},
                       {"R_I", t.interior_marks},
                       {"V_E", t.exterior_labels},
                       {"V_I", t.interior_labels},
                       {"V_CE", t.connected_exterior_sizes},
                       {"V_CI", t.connected_interior_sizes}};
}

BijectionTuple bijection_phi(std::span<const int> cycle, const AnnularPermutation& p, int d)
{
    const int n = p.n(), m = p.m();
    if (d < 1)
        throw PreconditionError("bijection_phi: d must be positive");
    if (!is_connected_anc(p))
        throw PreconditionError("bijection_phi: " + p.to_string() + " is not connected annular noncrossing");
    const CycleProfile prof = profile_of(p);
    if (!profile_divisible(prof, d))
        throw PreconditionError("bijection_phi: profile " + prof.to_string() + " is not divisible by " +
                                std::to_string(d));
    const auto rots = rotations_of_order(n, m, d);
    if (std::none_of(rots.begin(), rots.end(), [&](const RotationPair& r) { return is_fixed_by(r, p); }))
        throw PreconditionError("bijection_phi: " + p.to_string() + " is not fixed by any annular rotation of order " +
                                std::to_string(d));

    const std::set<int> members(cycle.begin(), cycle.end());
    bool is_cycle = !cycle.empty() && members.size() == cycle.size();
    for (std::size_t i = 0; is_cycle && i < cycle.size(); ++i)
        is_cycle = cycle[i] >= 1 && cycle[i] <= n + m && p(cycle[i]) == cycle[(i + 1) % cycle.size()];
    if (!is_cycle)
        throw PreconditionError("bijection_phi: given word is not a cycle of " + p.to_string());
    const Permutation inv = p.permutation().inverse();
    int first_ext = 0;
    for (int x : cycle)
        if (x <= n && inv(x) > n)
            first_ext = x;
    if (first_ext == 0)
        throw PreconditionError("bijection_phi: cycle is not connected");
    const int last_int = inv(first_ext);

    // a, a+1, ..., n, 1, ..., a-1, b+1, ..., n+m, n+1, ..., b
    std::vector<int> seq;
    for (int i = 0; i < n; ++i)
        seq.push_back((first_ext - 1 + i) % n + 1);
    for (int i = 1; i <= m; ++i)
        seq.push_back(n + (last_int - n - 1 + i) % m + 1);
    std::vector<int> pos(static_cast<std::size_t>(n + m) + 1);
    for (std::size_t i = 0; i < seq.size(); ++i)
        pos[static_cast<std::size_t>(seq[i])] = static_cast<int>(i);

    std::vector<int> mark(static_cast<std::size_t>(n + m) + 1, 0);
    std::vector<bool> connected(static_cast<std::size_t>(n + m) + 1, false);
    std::vector<std::vector<int>> connected_cycles;
    for (const auto& cyc : p.cycles()) {
        const bool ext = std::any_of(cyc.begin(), cyc.end(), [n](int x) { return x <= n; });
        const bool in = std::any_of(cyc.begin(), cyc.end(), [n](int x) { return x > n; });
        if (ext && in) {
            for (int x : cyc)
                connected[static_cast<std::size_t>(x)] = true;
            connected_cycles.push_back(cyc);
            continue;
        }
        const int rightmost = *std::max_element(cyc.begin(), cyc.end(), [&](int x, int y) {
            return pos[static_cast<std::size_t>(x)] < pos[static_cast<std::size_t>(y)];
        });
        mark[static_cast<std::size_t>(rightmost)] = static_cast<int>(cyc.size());
    }

    BijectionTuple t;
    for (int x = 1; x <= n / d; ++x)
        if (mark[static_cast<std::size_t>(x)]) {
            t.exterior_marks.push_back(x);
            t.exterior_labels.push_back(mark[static_cast<std::size_t>(x)]);
        }
    for (int i = 1; i <= m / d; ++i)
        if (mark[static_cast<std::size_t>(n + i)]) {
            t.interior_marks.push_back(i);
            t.interior_labels.push_back(mark[static_cast<std::size_t>(n + i)]);
        }

    // Index of each connected element within the exterior / interior part of
    // the remaining sequence.
    std::vector<int> rest_index(static_cast<std::size_t>(n + m) + 1, -1);
    int ext_count = 0, int_count = 0;
    for (int x : seq)
        if (connected[static_cast<std::size_t>(x)])
            rest_index[static_cast<std::size_t>(x)] = x <= n ? ext_count++ : int_count++;

    std::vector<int> left_cuts, right_cuts;
    for (const auto& cyc : connected_cycles) {
        int leftmost = cyc.front(), rightmost = cyc.front();
        for (int x : cyc) {
            if (pos[static_cast<std::size_t>(x)] < pos[static_cast<std::size_t>(leftmost)])
                leftmost = x;
            if (pos[static_cast<std::size_t>(x)] > pos[static_cast<std::size_t>(rightmost)])
                rightmost = x;
        }
        left_cuts.push_back(rest_index[static_cast<std::size_t>(leftmost)]);
        right_cuts.push_back(rest_index[static_cast<std::size_t>(rightmost)]);
    }
    const auto blocks = static_cast<std::size_t>(prof.c / d);
    t.connected_exterior_sizes = block_sizes(left_cuts, ext_count, true);
    t.connected_interior_sizes = block_sizes(right_cuts, int_count, false);
    t.connected_exterior_sizes.resize(blocks);
    t.connected_interior_sizes.resize(blocks);

    std::vector<int> ext_labels, int_labels;
    for (int x = 1; x <= n + m; ++x)
        if (connected[static_cast<std::size_t>(x)])
            (x <= n ? ext_labels : int_labels).push_back(x);
    t.a = static_cast<int>(std::find(ext_labels.begin(), ext_labels.end(), first_ext) - ext_labels.begin()) + 1;
    t.b = static_cast<int>(std::find(int_labels.begin(), int_labels.end(), last_int) - int_labels.begin()) + 1;
    return t;
}

bool in_target_set(const BijectionTuple& t, const CycleProfile& p, int d)
{
    if (d < 1 || !profile_divisible(p, d))
        return false;
    return t.a >= 1 && t.a <= p.n - p.R && t.b >= 1 && t.b <= p.m - p.S &&
           strictly_increasing_within(t.exterior_marks, p.n / d) &&
           strictly_increasing_within(t.interior_marks, p.m / d) &&
           static_cast<int>(t.exterior_marks.size()) == p.r / d &&
           static_cast<int>(t.interior_marks.size()) == p.s / d &&
           is_rearrangement_of(t.exterior_labels, divide(p.alpha, d)) &&
           is_rearrangement_of(t.interior_labels, divide(p.beta, d)) &&
           is_rearrangement_of(t.connected_exterior_sizes, divide(p.lam, d)) &&
           is_rearrangement_of(t.connected_interior_sizes, divide(p.mu, d));
}

Integer target_set_size(const CycleProfile& p, int d)
{
    if (d < 1 || !profile_divisible(p, d))
        return 0;
    return Integer(p.n - p.R) * (p.m - p.S) * binomial(p.n / d, p.r / d) * binomial(p.m / d, p.s / d) *
           rearrangement_count(divide(p.alpha, d)) * rearrangement_count(divide(p.beta, d)) *
           rearrangement_count(divide(p.lam, d)) * rearrangement_count(divide(p.mu, d));
}

}  // namespace ancsieve
