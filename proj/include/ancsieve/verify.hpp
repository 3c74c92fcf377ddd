#pragma once

// Exhaustive verification suites. Each sweeps a bounded parameter grid in a
// fixed order and records one entry per check; failures never throw.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ancsieve/annulus.hpp"

namespace ancsieve {

struct CheckRecord {
    std::string check;
    nlohmann::json params;
    bool passed = false;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string suite;
    nlohmann::json ranges = nlohmann::json::object();
    long attempted = 0;
    long passed = 0;
    /// Checks that failed because an exact division left a remainder.
    long division_faults = 0;
    std::optional<CheckRecord> first_failure;
    std::vector<CheckRecord> checks;
    double seconds = 0.0;

    bool ok() const { return attempted == passed; }
    long failed() const { return attempted - passed; }

    void record(CheckRecord rec);
    /// Appends every check of other; the suite names are joined.
    void merge(const VerificationReport& other);
};

void to_json(nlohmann::json& j, const CheckRecord& c);

/// One JSON object per check followed by a summary object, newline
/// separated. Wall time is included only when requested so that repeated
/// runs are byte-identical by default.
std::string to_json_lines(const VerificationReport& r, bool include_timing = false, bool include_checks = true);
nlohmann::json summary_json(const VerificationReport& r, bool include_timing = false);

/// Fixed points of every order-d annular rotation against the root-of-unity
/// values of the Kreweras, Narayana 1/2/3, Catalan and profile sieving
/// polynomials, for all primitive d-th roots.
VerificationReport verify_csp_annular(int max_total = 8, const EnumerationOptions& options = {});

/// No rotation pair with unequal component orders fixes anything.
VerificationReport verify_unequal_orders(int max_total = 8, const EnumerationOptions& options = {});

/// fixed_count_formula against enumeration, for every d and profile, plus
/// invariance of the profile under every rotation.
VerificationReport verify_fixed_counts(int max_total = 8, const EnumerationOptions& options = {});

/// Kre -> Nara1 -> Nara2 -> Nara3 -> Cat as polynomial identities.
VerificationReport verify_sum_chain(int max_n = 6, int max_m = 6);

struct LemmaBounds {
    int sum2_max_n = 10;
    int sum3_max_n = 10;
    int sum1_max = 6;
    int vandermonde_max = 8;
};
VerificationReport verify_lemmas(const LemmaBounds& bounds = {});

struct PolynomialityBounds {
    /// Bound on N for the two quotient expressions.
    int max_N = 12;
    /// Bound on n + m for the profile-level formulas.
    int max_total = 9;
    /// Bound on n and m for the Narayana and Catalan levels.
    int max_nm = 6;
    /// Bound on n for the disc formulas.
    int disc_max_n = 8;
};
VerificationReport verify_polynomiality(const PolynomialityBounds& bounds = {});

struct DiscBounds {
    int count_max_n = 7;
    int identity_max_n = 8;
    int csp_max_n = 6;
};
VerificationReport verify_disc_identities(const DiscBounds& bounds = {}, const EnumerationOptions& options = {});

VerificationReport verify_anc_counts(int max_total = 9, const EnumerationOptions& options = {});
/// Halved circle sizes n, m <= max_half.
VerificationReport verify_type_b_counts(int max_half = 2, const EnumerationOptions& options = {});
VerificationReport verify_matching_counts(int max_total = 10, const EnumerationOptions& options = {});

struct CountBounds {
    int max_total = 9;
    int type_b_max_half = 2;
    int matching_max_total = 10;
};
VerificationReport verify_counts(const CountBounds& bounds = {}, const EnumerationOptions& options = {});

/// Injectivity and cardinality of bijection_phi for d in {1, 2}.
VerificationReport verify_bijection(int max_total = 6, const EnumerationOptions& options = {});

}  // namespace ancsieve
