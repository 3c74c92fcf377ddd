#include <catch_amalgamated.hpp>

#include "ancsieve/formulas.hpp"
#include "oracle.hpp"

using namespace ancsieve;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

QPolynomial poly(std::vector<long> c) { return QPolynomial::from_integers(c); }

// |S(lam)| from the parts, independent of the library.
std::int64_t arrangements(const Partition& lam)
{
    std::int64_t r = 1;
    int placed = 0;
    for (int v : lam.nonzero_multiplicities()) {
        r *= oracle::binom(placed + v, v);
        placed += v;
    }
    return r;
}

}  // namespace

TEST_CASE("disc numbers", "[formulas]")
{
    CHECK(catalan(3) == 5);
    CHECK(narayana(3, 2) == 3);
    CHECK(kreweras(P({2, 1, 1})) == 6);
    for (int n = 1; n <= 12; ++n)
        CHECK(catalan(n) == oracle::binom(2 * n, n) / (n + 1));
    CHECK(catalan_q(2) == poly({1, 0, 1}));
    CHECK(narayana_q(4, 4) == QPolynomial(1));
    CHECK(kreweras_q(P({1, 1, 1, 1})) == QPolynomial(1));
    CHECK(kreweras_q(P({2})).at_one() == 1);
    CHECK(bessis_reiner_X(P({1, 1, 1})) == QPolynomial(1));
    CHECK(bessis_reiner_X(P({2, 1})) == poly({1, 1, 1}));
    CHECK(bessis_reiner_X(P({2, 1, 1})).at_one() == 6);

    QPolynomial sum;
    for (const auto& lam : par_set(3, 2))
        sum += kreweras_q(lam);
    CHECK(sum == narayana_q(3, 2));
    QPolynomial cat;
    for (int k = 0; k <= 4; ++k)
        cat += narayana_q(4, k);
    CHECK(cat == catalan_q(4));
}

TEST_CASE("profiles and exponents", "[formulas]")
{
    const CycleProfile unit(1, 1, {}, {}, P({1}), P({1}));
    CHECK(unit.c == 1);
    CHECK(exponents(unit) == ExponentQuadruple{0, 0, 0, 0});
    const CycleProfile p(2, 2, P({1}), P({1}), P({1}), P({1}));
    CHECK(exponents(p) == ExponentQuadruple{0, 4, 0, 0});
    const CycleProfile two(2, 2, {}, {}, P({1, 1}), P({1, 1}));
    CHECK(exponents(two) == ExponentQuadruple{2, 0, 0, 0});

    CHECK_THROWS_AS(CycleProfile(2, 2, {}, {}, P({1}), P({1, 1})), InvalidProfile);
    CHECK_THROWS_AS(CycleProfile(2, 2, {}, {}, P({1}), P({1})), InvalidProfile);
    CHECK_THROWS_AS(CycleProfile(1, 1, {}, {}, {}, {}), InvalidProfile);

    ProfileFilter f;
    f.c = 2;
    CHECK(f.matches(two));
    CHECK_FALSE(f.matches(p));
    CHECK(ProfileFilter::exact(p).matches(p));
    const auto d = f.doubled();
    CHECK(d.c == 4);
}

TEST_CASE("all_profiles enumerates admissible profiles", "[formulas]")
{
    const auto ps = all_profiles(2, 1);
    // c = 1 only; lam in Par(2 - R, 1), mu = (1).
    CHECK(ps.size() == 2);
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m)
            for (const auto& q : all_profiles(n, m)) {
                CHECK(q.R + q.lam.weight() == n);
                CHECK(q.S + q.mu.weight() == m);
                CHECK(q.lam.length() == q.mu.length());
            }
}

TEST_CASE("annular q-polynomials", "[formulas]")
{
    const CycleProfile unit(1, 1, {}, {}, P({1}), P({1}));
    CHECK(annular_kreweras_q(unit) == poly({1, 1}) / Rational(2));
    CHECK(annular_catalan_q(1, 1) == poly({1, 1}) / Rational(2));
    CHECK(annular_catalan_q(2, 2).at_one() == 18);
    CHECK(annular_catalan_q(2, 1).at_one() == 4);
    // q^4 (1 + q^2)(1 + q)^2 / 2
    CHECK(annular_narayana1_q(2, 2, 1, 1, 1, 1, 1) ==
          (poly({1, 0, 1}) * poly({1, 1}) * poly({1, 1})).shifted(4) / Rational(2));
    CHECK(annular_narayana1_q(2, 2, 1, 1, 1, 1, 1).at_one() == 4);
    CHECK(annular_narayana3_q(2, 2, 3).is_zero());
    CHECK(annular_narayana3_q(2, 2, 1) + annular_narayana3_q(2, 2, 2) == annular_catalan_q(2, 2));
    const CycleProfile two(2, 2, {}, {}, P({1, 1}), P({1, 1}));
    CHECK(annular_kreweras_q(two).at_one() == 2);
}

TEST_CASE("Kreweras specializes to the count formula", "[formulas][property]")
{
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m)
            for (const auto& p : all_profiles(n, m)) {
                INFO(p.to_string());
                // (n-R)(m-S)/c C(n,r) C(m,s) |S(alpha)| |S(beta)| |S(lam)| |S(mu)|
                const std::int64_t num = std::int64_t(n - p.R) * (m - p.S) * oracle::binom(n, p.r) *
                                         oracle::binom(m, p.s) * arrangements(p.alpha) * arrangements(p.beta) *
                                         arrangements(p.lam) * arrangements(p.mu);
                REQUIRE(num % p.c == 0);
                CHECK(count_anc(p) == num / p.c);
                CHECK(annular_kreweras_q(p).at_one() == Rational(num / p.c));
                CHECK(profile_sieving_q(p).at_one() == Rational(num / p.c));
                CHECK(fixed_count_formula(p, 1) == num / p.c);
            }
}

TEST_CASE("count formulas", "[formulas]")
{
    CHECK(count_anc(1, 1) == 1);
    CHECK(count_anc(2, 1) == 4);
    CHECK(count_anc(2, 2) == 18);
    CHECK(count_anc(2, 2, 1) == 16);
    CHECK(count_anc(2, 2, 2) == 2);
    for (int n = 1; n <= 7; ++n)
        for (int m = 1; m <= 7; ++m) {
            const std::int64_t total =
                std::int64_t(n) * m * oracle::binom(2 * n, n) * oracle::binom(2 * m, m) / (2 * (m + n));
            CHECK(count_anc(n, m) == total);
            Integer by_c = 0;
            for (int c = 1; c <= std::min(n, m); ++c)
                by_c += count_anc(n, m, c);
            CHECK(by_c == total);
        }
    CHECK(count_anc_B(1, 1) == 2);
    CHECK(count_anc_B(1, 1, 1) == 2);
    CHECK(binomial_ext(-1, -1) == 1);
    CHECK(binomial_ext(-1, 0) == 0);
    CHECK(q_binomial_ext(-1, -1) == QPolynomial(1));
}

TEST_CASE("fixed count formula", "[formulas]")
{
    const CycleProfile two(2, 2, {}, {}, P({1, 1}), P({1, 1}));
    CHECK(fixed_count_formula(two, 2) == 2);
    const CycleProfile one(2, 2, {}, {}, P({2}), P({2}));
    CHECK(fixed_count_formula(one, 2) == 0);
    CHECK_THROWS(fixed_count_formula(two, 0));
}

TEST_CASE("matching formulas", "[formulas]")
{
    CHECK(matching_count(2, 2, 2) == 2);
    CHECK(matching_count(4, 2, 2) == 8);
    CHECK(matching_count(2, 2, 4) == 0);
    CHECK(matching_total(2, 2) == 2);
    CHECK_THROWS_AS(matching_count(2, 2, 1), ParityError);
    CHECK_THROWS_AS(matching_total(2, 1), ParityError);
    for (int n = 1; n <= 8; ++n)
        for (int m = n % 2 == 0 ? 2 : 1; m <= 8; m += 2) {
            Integer sum = 0;
            for (int c = n % 2 == 0 ? 2 : 1; c <= std::min(n, m); c += 2)
                sum += matching_count(n, m, c);
            CHECK(sum == matching_total(n, m));
        }
}
