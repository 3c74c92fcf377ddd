#include <catch_amalgamated.hpp>

#include <sstream>

#include "ancsieve/verify.hpp"

using namespace ancsieve;

namespace {

long count_lines(const std::string& s)
{
    std::istringstream in(s);
    std::string line;
    long n = 0;
    while (std::getline(in, line))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("small suites pass", "[verify]")
{
    const auto csp = verify_csp_annular(5);
    CHECK(csp.ok());
    CHECK(csp.attempted > 0);
    CHECK(csp.division_faults == 0);
    CHECK_FALSE(csp.first_failure.has_value());
    CHECK(verify_unequal_orders(6).ok());
    CHECK(verify_fixed_counts(6).ok());
    CHECK(verify_sum_chain(3, 3).ok());
    CHECK(verify_lemmas({5, 5, 3, 4}).ok());
    CHECK(verify_polynomiality({6, 5, 3, 5}).ok());
    CHECK(verify_disc_identities({5, 5, 4}).ok());
    CHECK(verify_counts({6, 1, 6}).ok());
    CHECK(verify_bijection(4).ok());
}

TEST_CASE("json lines are deterministic", "[verify]")
{
    const auto a = verify_csp_annular(4);
    const auto b = verify_csp_annular(4);
    CHECK(to_json_lines(a) == to_json_lines(b));
    CHECK(count_lines(to_json_lines(a)) == a.attempted + 1);
    CHECK(count_lines(to_json_lines(a, false, false)) == 1);
    const auto summary = summary_json(a);
    CHECK(summary["suite"] == "csp");
    CHECK(summary["attempted"] == a.attempted);
    CHECK_FALSE(summary.contains("wall_time_s"));
    CHECK(summary_json(a, true).contains("wall_time_s"));
}

TEST_CASE("report bookkeeping", "[verify]")
{
    VerificationReport r;
    r.suite = "x";
    r.record({"first", nlohmann::json::object(), true, "", ""});
    r.record({"second", {{"n", 1}}, false, "1", "2"});
    r.record({"third", nlohmann::json::object(), false, "3", "4"});
    CHECK(r.attempted == 3);
    CHECK(r.passed == 1);
    CHECK(r.failed() == 2);
    CHECK_FALSE(r.ok());
    REQUIRE(r.first_failure.has_value());
    CHECK(r.first_failure->check == "second");

    VerificationReport s;
    s.suite = "y";
    s.record({"fourth", nlohmann::json::object(), true, "", ""});
    s.merge(r);
    CHECK(s.attempted == 4);
    CHECK(s.passed == 2);
    CHECK(s.first_failure->check == "second");
    CHECK(s.checks.size() == 4);
    const nlohmann::json j = r.checks[1];
    CHECK(j["check"] == "second");
    CHECK(j["passed"] == false);
}
