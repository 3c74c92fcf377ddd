#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "ancsieve/bijection.hpp"

using namespace ancsieve;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

AnnularPermutation A(int n, int m, const char* text) { return AnnularPermutation::parse(n, m, text); }

bool is_connected_cycle(const std::vector<int>& cyc, int n)
{
    bool ext = false, in = false;
    for (int x : cyc)
        (x <= n ? ext : in) = true;
    return ext && in;
}

}  // namespace

TEST_CASE("golden tuple", "[bijection]")
{
    const auto p = A(2, 1, "(1,3)");
    const std::vector<int> cyc{1, 3};
    const auto t = bijection_phi(cyc, p, 1);
    CHECK(t.a == 1);
    CHECK(t.b == 1);
    CHECK(t.exterior_marks == std::vector<int>{2});
    CHECK(t.interior_marks.empty());
    CHECK(t.exterior_labels == std::vector<int>{1});
    CHECK(t.interior_labels.empty());
    CHECK(t.connected_exterior_sizes == std::vector<int>{1});
    CHECK(t.connected_interior_sizes == std::vector<int>{1});
    CHECK(nlohmann::json(t).dump() == R"({"R_E":[2],"R_I":[],"V_CE":[1],"V_CI":[1],"V_E":[1],"V_I":[],"a":1,"b":1})");
    const std::vector<int> rotated{3, 1};
    CHECK(bijection_phi(rotated, p, 1) == t);
}

TEST_CASE("cardinality on a small profile", "[bijection]")
{
    const CycleProfile prof(2, 1, P({1}), {}, P({1}), P({1}));
    std::vector<BijectionTuple> img;
    for (const auto& p : enumerate_anc(2, 1, ProfileFilter::exact(prof)))
        for (const auto& cyc : p.cycles())
            if (is_connected_cycle(cyc, 2))
                img.push_back(bijection_phi(cyc, p, 1));
    CHECK(img.size() == 2);
    CHECK(target_set_size(prof, 1) == 2);
    CHECK(std::set<BijectionTuple>(img.begin(), img.end()).size() == 2);
    for (const auto& t : img)
        CHECK(in_target_set(t, prof, 1));
}

TEST_CASE("preconditions", "[bijection]")
{
    const std::vector<int> cyc{1, 3};
    CHECK_THROWS_AS(bijection_phi(cyc, A(2, 1, "(1,3)"), 0), PreconditionError);
    CHECK_THROWS_AS(bijection_phi(cyc, A(2, 2, "(1,2)"), 1), PreconditionError);
    // c = 1 is not divisible by 2.
    CHECK_THROWS_AS(bijection_phi(cyc, A(2, 2, "(1,3,2,4)"), 2), PreconditionError);
    const std::vector<int> exterior{2};
    CHECK_THROWS_AS(bijection_phi(exterior, A(2, 1, "(1,3)"), 1), PreconditionError);
    const std::vector<int> bogus{1, 2};
    CHECK_THROWS_AS(bijection_phi(bogus, A(2, 1, "(1,3)"), 1), PreconditionError);
    CHECK(target_set_size(CycleProfile(2, 2, {}, {}, P({2}), P({2})), 2) == 0);
}

TEST_CASE("injective onto a set of the predicted size", "[bijection][property]")
{
    for (int d : {1, 2})
        for (int n = d; n <= 5; n += d)
            for (int m = d; n + m <= 6; m += d) {
                const RotationPair rot = group_rotations_of_order(n, m, d).front();
                std::map<CycleProfile, long> fixed;
                std::map<CycleProfile, std::vector<BijectionTuple>> img;
                for (const auto& p : fixed_points(rot)) {
                    const auto prof = profile_of(p);
                    ++fixed[prof];
                    for (const auto& cyc : p.cycles())
                        if (is_connected_cycle(cyc, n))
                            img[prof].push_back(bijection_phi(cyc, p, d));
                }
                for (const auto& [prof, tuples] : img) {
                    INFO("d=" << d << " " << prof.to_string());
                    CHECK(std::set<BijectionTuple>(tuples.begin(), tuples.end()).size() == tuples.size());
                    CHECK(Integer(static_cast<long>(tuples.size())) == target_set_size(prof, d));
                    CHECK(static_cast<long>(tuples.size()) == prof.c * fixed[prof]);
                    for (const auto& t : tuples)
                        CHECK(in_target_set(t, prof, d));
                }
            }
}
