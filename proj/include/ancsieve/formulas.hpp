#pragma once

// Closed-form counts and q-polynomials for noncrossing permutations of the
// disc and connected annular noncrossing permutations of the annulus.
//
// Every quotient is computed by exact polynomial (or integer) division, so
// a formula that fails to be a polynomial throws DivisionWithRemainder
// instead of returning a wrong value.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ancsieve/partitions.hpp"
#include "ancsieve/qcalc.hpp"

namespace ancsieve {

class InvalidProfile : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Integer analogue of DivisionWithRemainder.
class InexactIntegerDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exterior/interior/connected cycle data of a connected annular
/// noncrossing permutation of the (n,m)-annulus.
///
/// alpha: sizes of the exterior cycles; beta: sizes of the interior cycles;
/// lam / mu: exterior / interior sizes of the connected cycles. The counts
/// c, r, s and weights R, S are derived from the partitions.
struct CycleProfile {
    int n = 0;
    int m = 0;
    int c = 0;
    int r = 0;
    int s = 0;
    int R = 0;
    int S = 0;
    Partition alpha;
    Partition beta;
    Partition lam;
    Partition mu;

    CycleProfile() = default;
    /// Throws InvalidProfile unless lam and mu have the same positive
    /// length, |alpha| + |lam| = n and |beta| + |mu| = m.
    CycleProfile(int n, int m, Partition alpha, Partition beta, Partition lam, Partition mu);

    std::string to_string() const;

    friend auto operator<=>(const CycleProfile&, const CycleProfile&) = default;
    friend bool operator==(const CycleProfile&, const CycleProfile&) = default;
};

void to_json(nlohmann::json& j, const CycleProfile& p);

/// Every admissible full profile for the (n,m)-annulus, in a fixed order.
std::vector<CycleProfile> all_profiles(int n, int m);

/// A partial profile; unset fields match anything.
struct ProfileFilter {
    std::optional<int> c, r, s, R, S;
    std::optional<Partition> alpha, beta, lam, mu;

    bool matches(const CycleProfile& p) const;
    bool empty() const;
    /// Type-B lift: doubles c, r, s, R, S and doubles the multiplicities of
    /// the partitions.
    ProfileFilter doubled() const;
    static ProfileFilter exact(const CycleProfile& p);
};

struct ExponentQuadruple {
    long X = 0;
    long Y = 0;
    long Z = 0;
    long W = 0;
    friend bool operator==(const ExponentQuadruple&, const ExponentQuadruple&) = default;
};

/// Throws InvalidProfile if W comes out negative.
ExponentQuadruple exponents(const CycleProfile& p);

// Disc case.
Integer catalan(int n);
Integer narayana(int n, int k);
Integer kreweras(const Partition& lam);
QPolynomial kreweras_q(const Partition& lam);
QPolynomial narayana_q(int n, int k);
QPolynomial catalan_q(int n);
/// [n choose k-1]_q [k choose lam]_q / [k]_q.
QPolynomial bessis_reiner_X(const Partition& lam);

// Annular q-analogues.
QPolynomial annular_kreweras_q(const CycleProfile& p);
QPolynomial annular_narayana1_q(int n, int m, int c, int r, int s, int R, int S);
QPolynomial annular_narayana2_q(int n, int m, int c, int r, int s);
QPolynomial annular_narayana3_q(int n, int m, int c);
QPolynomial annular_catalan_q(int n, int m);
/// [(n-R)(m-S)]_q/[c]_q times the six q-binomial/multinomial factors: the
/// sieving polynomial of a single profile class.
QPolynomial profile_sieving_q(const CycleProfile& p);

/// q-binomial with the extra convention [-1 choose -1] = 1.
QPolynomial q_binomial_ext(long n, long k);
/// Binomial with the extra convention C(-1,-1) = 1.
Integer binomial_ext(long n, long k);

/// Number of elements of the profile class fixed by an annular rotation of
/// order d; zero unless every parameter is divisible by d.
Integer fixed_count_formula(const CycleProfile& p, int d);

// Closed forms for #anc at each granularity.
Integer count_anc(int n, int m);
Integer count_anc(int n, int m, int c);
Integer count_anc(int n, int m, int c, int r, int s);
Integer count_anc(int n, int m, int c, int r, int s, int R, int S);
Integer count_anc(const CycleProfile& p);

// Type B: elements of anc(2n,2m) fixed by the order-2 annular rotation,
// parameters given in halved form.
Integer count_anc_B(int n, int m);
Integer count_anc_B(int n, int m, int c);
Integer count_anc_B(int n, int m, int c, int r, int s);
Integer count_anc_B(int n, int m, int c, int r, int s, int R, int S);
Integer count_anc_B(const CycleProfile& p);

/// Matchings of the (n,m)-annulus with exactly c connected pairs.
/// Throws ParityError unless n = m = c (mod 2).
Integer matching_count(int n, int m, int c);
/// Connected matchings of the (n,m)-annulus. Throws ParityError unless
/// n = m (mod 2).
Integer matching_total(int n, int m);

}  // namespace ancsieve
