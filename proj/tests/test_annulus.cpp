#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include "ancsieve/annulus.hpp"
#include "oracle.hpp"

using namespace ancsieve;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

AnnularPermutation A(int n, int m, const char* text) { return AnnularPermutation::parse(n, m, text); }

std::vector<std::vector<int>> images(const std::vector<AnnularPermutation>& ps)
{
    std::vector<std::vector<int>> out;
    for (const auto& p : ps) {
        const auto im = p.permutation().images();
        out.emplace_back(im.begin(), im.end());
    }
    return out;
}

}  // namespace

TEST_CASE("reference rotation and clockwise cycles", "[annulus]")
{
    CHECK(gamma(2, 2).to_string() == "(1,2)(3,4)");
    CHECK(gamma(1, 1).to_string() == "(1)(2)");
    CHECK(gamma(3, 2).to_string() == "(1,2,3)(4,5)");
    const std::vector<int> a{1, 3, 2}, fig{1, 2, 3, 6, 15, 10, 11};
    CHECK(is_clockwise_cycle(a, 2, 1));
    CHECK(is_clockwise_cycle(fig, 9, 6));
    CHECK_FALSE(is_clockwise_cycle(a, 3, 0));
}

TEST_CASE("membership", "[annulus]")
{
    CHECK(is_connected_anc(A(1, 1, "(1,2)")));
    CHECK_FALSE(is_connected_anc(A(2, 2, "(1,2)")));
    CHECK(is_connected_anc(A(2, 2, "(1,3)(2,4)")));
    CHECK(is_connected_anc(A(9, 6, "(1,2,3,6,15,10,11)(4,5)(7,8,9,13,14)(12)")));
    CHECK_THROWS_AS(A(2, 2, "(1,3"), ParseError);
    CHECK_THROWS(A(2, 2, "(1,5)"));
}

TEST_CASE("enumeration matches the brute-force oracle", "[annulus][property]")
{
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; n + m <= 7; ++m) {
            INFO("n=" << n << " m=" << m);
            const auto got = enumerate_anc(n, m);
            CHECK(images(got) == oracle::annular_noncrossing(n, m));
            CHECK(Integer(static_cast<long>(got.size())) == count_anc(n, m));
        }
    CHECK(enumerate_anc(1, 1).front().to_string() == "(1,2)");
    CHECK(enumerate_anc(2, 1).size() == 4);
    ProfileFilter c2;
    c2.c = 2;
    const auto two = enumerate_anc(2, 2, c2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].to_string() == "(1,3)(2,4)");
    CHECK(two[1].to_string() == "(1,4)(2,3)");
}

TEST_CASE("profiles of permutations", "[annulus]")
{
    const auto fig = profile_of(A(9, 6, "(1,2,3,6,15,10,11)(4,5)(7,8,9,13,14)(12)"));
    CHECK(fig.c == 2);
    CHECK(fig.r == 1);
    CHECK(fig.s == 1);
    CHECK(fig.R == 2);
    CHECK(fig.S == 1);
    CHECK(fig.alpha == P({2}));
    CHECK(fig.beta == P({1}));
    CHECK(fig.lam == P({4, 3}));
    CHECK(fig.mu == P({3, 2}));
    const auto unit = profile_of(A(1, 1, "(1,2)"));
    CHECK(unit == CycleProfile(1, 1, {}, {}, P({1}), P({1})));
    CHECK(profile_of(A(2, 2, "(1,3)(2,4)")) == CycleProfile(2, 2, {}, {}, P({1, 1}), P({1, 1})));
    CHECK_THROWS_AS(profile_of(A(2, 2, "(1,2)")), InvalidProfile);
}

TEST_CASE("profile classes match the count formula", "[annulus][property]")
{
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; n + m <= 7; ++m) {
            std::map<CycleProfile, long> classes;
            for (const auto& p : enumerate_anc(n, m))
                ++classes[profile_of(p)];
            for (const auto& prof : all_profiles(n, m)) {
                INFO(prof.to_string());
                const auto it = classes.find(prof);
                CHECK(Integer(it == classes.end() ? 0L : it->second) == count_anc(prof));
                CHECK(static_cast<long>(enumerate_anc(n, m, ProfileFilter::exact(prof)).size()) ==
                      (it == classes.end() ? 0L : it->second));
            }
        }
}

TEST_CASE("rotations", "[annulus]")
{
    const auto p = A(2, 2, "(1,3)(2,4)");
    CHECK(apply_rotation(RotationPair{2, 2, 0, 0}, p) == p);
    CHECK(apply_rotation(RotationPair{2, 2, 1, 1}, p) == p);
    for (const auto& q : enumerate_anc(2, 1))
        CHECK_FALSE(apply_rotation(RotationPair{2, 1, 1, 0}, q) == q);

    CHECK(rotations_of_order(2, 2, 2) == std::vector<RotationPair>{{2, 2, 1, 1}});
    CHECK(rotations_of_order(4, 4, 2) == std::vector<RotationPair>{{4, 4, 2, 2}});
    CHECK(rotations_of_order(6, 6, 3).size() == 4);
    CHECK(rotations_of_order(4, 2, 3).empty());
    CHECK(group_rotations_of_order(6, 6, 3).size() == 2);
    CHECK(RotationPair{3, 3, 1, 1}.is_rigid());
    CHECK_FALSE(RotationPair{3, 3, 1, 2}.is_rigid());
    CHECK(RotationPair{4, 2, 2, 1}.is_rigid());
    CHECK(RotationPair{4, 2, 2, 1}.order() == 2);
    CHECK(RotationPair{4, 2, 1, 1}.order() == 4);
    CHECK_FALSE(RotationPair{4, 2, 1, 1}.is_annular());
    CHECK(RotationPair{2, 2, 1, 1}.apply(1) == 2);
    CHECK(RotationPair{2, 2, 1, 1}.apply(3) == 4);
}

TEST_CASE("fixed points", "[annulus]")
{
    const auto two = fixed_points(RotationPair{2, 2, 1, 1});
    REQUIRE(two.size() == 2);
    CHECK(two[0].to_string() == "(1,3)(2,4)");
    CHECK(two[1].to_string() == "(1,4)(2,3)");
    CHECK(fixed_points(RotationPair{2, 2, 0, 0}).size() == 18);
    CHECK(fixed_points(RotationPair{2, 1, 1, 0}).empty());
    CHECK(fixed_points(RotationPair{4, 2, 1, 1}).empty());
}

TEST_CASE("rotation equivariance of profiles", "[annulus][property]")
{
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; n + m <= 7; ++m) {
            const auto all = enumerate_anc(n, m);
            const std::set<AnnularPermutation> members(all.begin(), all.end());
            for (int e = 0; e < n; ++e)
                for (int i = 0; i < m; ++i) {
                    const RotationPair rot{n, m, e, i};
                    for (const auto& p : all) {
                        const auto q = apply_rotation(rot, p);
                        CHECK(members.count(q) == 1);
                        CHECK(profile_of(q) == profile_of(p));
                        CHECK(is_fixed_by(rot, p) == (q == p));
                    }
                }
        }
}

TEST_CASE("non-rigid pairs of equal order fix nothing", "[annulus][property]")
{
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; n + m <= 8; ++m)
            for (int d = 2; d <= std::min(n, m); ++d)
                for (const auto& rot : rotations_of_order(n, m, d))
                    if (!rot.is_rigid())
                        CHECK(fixed_points(rot).empty());
}

TEST_CASE("type B", "[annulus]")
{
    CHECK(is_type_B(A(2, 2, "(1,3)(2,4)")));
    CHECK_FALSE(is_type_B(A(2, 2, "(1,3)")));
    CHECK_THROWS_AS(is_type_B(A(2, 1, "(1,3)")), std::invalid_argument);
    CHECK(enumerate_anc_B(1, 1).size() == 2);
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 2; ++m) {
            CHECK(Integer(static_cast<long>(enumerate_anc_B(n, m).size())) == count_anc_B(n, m));
            for (int c = 1; c <= std::min(n, m); ++c) {
                ProfileFilter f;
                f.c = c;
                CHECK(Integer(static_cast<long>(enumerate_anc_B(n, m, f).size())) == count_anc_B(n, m, c));
            }
        }
}

TEST_CASE("matchings", "[annulus]")
{
    CHECK(enumerate_matchings(2, 2).size() == 2);
    REQUIRE(enumerate_matchings(1, 1).size() == 1);
    CHECK(enumerate_matchings(1, 1).front().to_string() == "(1,2)");
    CHECK(enumerate_matchings(2, 1).empty());
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; n + m <= 8; ++m) {
            long oracle_count = 0;
            for (const auto& im : oracle::annular_noncrossing(n, m)) {
                bool all_pairs = true;
                for (int x = 0; x < n + m; ++x)
                    all_pairs = all_pairs && im[x] != x + 1 && im[im[x] - 1] == x + 1;
                oracle_count += all_pairs;
            }
            const auto got = enumerate_matchings(n, m);
            CHECK(static_cast<long>(got.size()) == oracle_count);
            if ((n - m) % 2 == 0)
                CHECK(Integer(oracle_count) == matching_total(n, m));
            for (const auto& p : got)
                CHECK((connected_cycle_count(p) - n) % 2 == 0);
        }
}

TEST_CASE("disc case", "[annulus]")
{
    CHECK(enumerate_nc_disc(3).size() == 5);
    CHECK(enumerate_nc_disc(4, P({2, 1, 1})).size() == 6);
    CHECK(is_noncrossing_disc(Permutation::identity(5)));
    CHECK_FALSE(is_noncrossing_disc(Permutation::parse(4, "(1,3)(2,4)")));
    CHECK(cycle_type(Permutation::parse(4, "(1,2)")) == P({2, 1, 1}));
    for (int n = 1; n <= 7; ++n) {
        const auto got = enumerate_nc_disc(n);
        std::vector<std::vector<int>> im;
        for (const auto& p : got)
            im.emplace_back(p.images().begin(), p.images().end());
        CHECK(im == oracle::disc_noncrossing(n));
        CHECK(Integer(static_cast<long>(got.size())) == catalan(n));
    }
}

TEST_CASE("bounds and workers", "[annulus]")
{
    CHECK_THROWS_AS(enumerate_anc(6, 6), BoundExceeded);
    EnumerationOptions big;
    big.max_total = 12;
    CHECK_THROWS_AS(enumerate_anc(7, 6, {}, big), BoundExceeded);
    CHECK(resolve_workers(3) == 3);
    CHECK(resolve_workers(0) >= 1);
    EnumerationOptions one, four;
    one.workers = 1;
    four.workers = 4;
    CHECK(enumerate_anc(4, 3, {}, one) == enumerate_anc(4, 3, {}, four));
}

TEST_CASE("annular json", "[annulus]")
{
    const nlohmann::json j = A(2, 2, "(1,3)(2,4)");
    CHECK(j.dump() == R"({"cycles":[[1,3],[2,4]],"m":2,"n":2})");
    CHECK(annular_from_json(j) == A(2, 2, "(1,3)(2,4)"));
}
