#include <catch_amalgamated.hpp>

#include <set>

#include "ancsieve/partitions.hpp"
#include "oracle.hpp"

using namespace ancsieve;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<Partition> all_of_weight(int n)
{
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : par_set(n, k))
            out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("construction and text form", "[partitions]")
{
    CHECK(P({1, 3}).parts()[0] == 3);
    CHECK(P({1, 3}).to_string() == "(3,1)");
    CHECK(Partition().to_string() == "()");
    CHECK(Partition::parse("(3, 1)") == P({3, 1}));
    CHECK(Partition::parse("1,3") == P({3, 1}));
    CHECK(Partition::parse("()").empty());
    CHECK(Partition::parse("").empty());
    CHECK_THROWS(Partition::parse("(3,x)"));
    CHECK_THROWS(P({2, 0}));
    const std::vector<int> m{0, 2, 1};
    CHECK(Partition::from_multiplicities(m) == P({2, 1, 1}));
    CHECK(P({2, 1, 1}).multiplicities() == std::vector<int>{0, 2, 1});
    CHECK(P({2, 2, 1}).weight() == 5);
    CHECK(P({2, 2, 1}).length() == 3);
    CHECK(P({4, 2}) > P({3, 3}));
}

TEST_CASE("par_set", "[partitions]")
{
    CHECK(par_set(4, 2) == std::vector<Partition>{P({3, 1}), P({2, 2})});
    CHECK(par_set(3, 5).empty());
    CHECK(par_set(0, 0) == std::vector<Partition>{Partition()});
    CHECK(par_set(3, 0).empty());
    for (int n = 0; n <= 12; ++n) {
        const auto all = all_of_weight(n);
        CHECK(static_cast<std::int64_t>(all.size()) == oracle::partitions_bounded(n, n));
        CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
        for (int k = 0; k <= n; ++k) {
            const auto ps = par_set(n, k);
            CHECK(std::is_sorted(ps.rbegin(), ps.rend()));
            for (const auto& p : ps) {
                CHECK(p.weight() == n);
                CHECK(p.length() == k);
            }
        }
    }
}

TEST_CASE("conjugate and tau", "[partitions]")
{
    CHECK(conjugate(P({2, 1})) == P({2, 1}));
    CHECK(conjugate(P({4})) == P({1, 1, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(tau(P({1, 1, 1})) == 0);
    CHECK(tau(P({2, 1})) == 2);
    CHECK(tau(P({5})) == 4);
    for (int n = 0; n <= 12; ++n)
        for (const auto& lam : all_of_weight(n)) {
            CHECK(conjugate(conjugate(lam)) == lam);
            // lam'_i counted directly from the parts.
            std::vector<long> col;
            for (int i = 1; i <= lam.largest(); ++i) {
                long c = 0;
                for (int part : lam.parts())
                    c += part >= i;
                col.push_back(c);
            }
            long t = 0;
            for (std::size_t i = 0; i + 1 < col.size(); ++i)
                t += col[i] * col[i + 1];
            CHECK(tau(lam) == t);
        }
}

TEST_CASE("divisibility and scaling", "[partitions]")
{
    CHECK(is_divisible(P({2, 2, 1, 1}), 2));
    CHECK(divide(P({2, 2, 1, 1}), 2) == P({2, 1}));
    CHECK_FALSE(is_divisible(P({2, 1}), 2));
    CHECK_THROWS(divide(P({2, 1}), 2));
    CHECK(divide(P({3, 1}), 1) == P({3, 1}));
    CHECK(scale_parts(P({2, 1}), 2) == P({4, 2}));
    CHECK(scale_parts(Partition(), 5) == Partition());
    CHECK(scale_parts(P({1, 1, 1}), 3) == P({3, 3, 3}));
    CHECK(scale_multiplicities(P({2, 1}), 2) == P({2, 2, 1, 1}));
    for (int n = 0; n <= 10; ++n)
        for (const auto& lam : all_of_weight(n))
            for (int d = 1; d <= 3; ++d) {
                const auto big = scale_multiplicities(lam, d);
                CHECK(is_divisible(big, d));
                CHECK(divide(big, d) == lam);
            }
}

TEST_CASE("rearrangement counts", "[partitions]")
{
    CHECK(rearrangement_count(P({2, 1})) == 2);
    CHECK(rearrangement_count(P({1, 1, 1})) == 1);
    CHECK(rearrangement_count(P({3, 2, 2, 1})) == 12);
    CHECK(rearrangement_count(Partition()) == 1);
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : all_of_weight(n)) {
            std::vector<int> seq(lam.parts().begin(), lam.parts().end());
            std::sort(seq.begin(), seq.end());
            long distinct = 0;
            do
                ++distinct;
            while (std::next_permutation(seq.begin(), seq.end()));
            CHECK(rearrangement_count(lam) == distinct);
            CHECK(q_multinomial_partition(lam.length(), lam).at_one() == Rational(distinct));
        }
    CHECK_THROWS(q_multinomial_partition(3, P({2, 1})));
}

TEST_CASE("partition json", "[partitions]")
{
    const nlohmann::json j = P({3, 1});
    CHECK(j.dump() == "[3,1]");
    CHECK(j.get<Partition>() == P({3, 1}));
    CHECK(nlohmann::json::parse("[]").get<Partition>().empty());
}
