#pragma once

// Exact univariate polynomial arithmetic in q over the rationals, the
// standard q-analogues, and exact evaluation at primitive roots of unity.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace ancsieve {

using Integer = mpz_class;
using Rational = mpq_class;

/// Ordinary binomial coefficient; zero unless 0 <= k <= n.
Integer binomial(long n, long k);
Integer factorial(long n);
Integer multinomial(std::span<const int> multiplicities);

/// Dense polynomial sum_i c_i q^i with exact rational coefficients.
///
/// Always canonical: the highest stored coefficient is nonzero, and the
/// zero polynomial stores no coefficients.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(long constant);  // NOLINT(google-explicit-constructor)
    QPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    explicit QPolynomial(std::vector<Rational> coeffs);

    static QPolynomial monomial(const Rational& c, std::size_t degree);
    static QPolynomial from_integers(std::span<const long> coeffs);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const Rational> coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t i) const;

    bool has_integer_coefficients() const;
    bool has_nonnegative_coefficients() const;
    /// Least common multiple of the coefficient denominators (1 for zero).
    Integer common_denominator() const;

    Rational evaluate(const Rational& x) const;
    Rational at_one() const;

    /// Multiply by q^k.
    QPolynomial shifted(std::size_t k) const;

    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator-=(const QPolynomial& rhs);
    QPolynomial& operator*=(const QPolynomial& rhs);
    QPolynomial& operator*=(const Rational& rhs);
    QPolynomial& operator/=(const Rational& rhs);

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(QPolynomial a, const Rational& b) { return a *= b; }
    friend QPolynomial operator/(QPolynomial a, const Rational& b) { return a /= b; }
    QPolynomial operator-() const;

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form: "1 + q - 2q^3", or "(1 + q)/2" when the
    /// coefficients share a denominator.
    std::string to_string(char var = 'q') const;

private:
    void canonicalize();
    std::vector<Rational> coeffs_;
};

struct DivisionResult {
    QPolynomial quotient;
    QPolynomial remainder;
};

/// Euclidean division p = quotient * d + remainder, deg remainder < deg d.
DivisionResult divide(const QPolynomial& p, const QPolynomial& d);

class DivisionWithRemainder : public std::runtime_error {
public:
    DivisionWithRemainder(const QPolynomial& dividend, const QPolynomial& divisor,
                          QPolynomial remainder);
    const QPolynomial& remainder() const { return remainder_; }

private:
    QPolynomial remainder_;
};

/// p / d, throwing DivisionWithRemainder if d does not divide p.
QPolynomial exact_div(const QPolynomial& p, const QPolynomial& d);

// q-analogues. Results of q_binomial and q_multinomial are memoized; the
// cache is safe for concurrent use.
QPolynomial q_int(long n);
QPolynomial q_factorial(long n);
QPolynomial q_binomial(long n, long k);
QPolynomial q_pochhammer(long r);
/// [k]_q! / prod_i [m_i]_q! where k = sum of the multiplicities.
QPolynomial q_multinomial(std::span<const int> multiplicities);

/// d-th cyclotomic polynomial, memoized.
const QPolynomial& cyclotomic(long d);
long euler_phi(long d);

/// An element of Q(zeta_d) in the power basis 1, z, ..., z^(phi(d)-1).
class CyclotomicValue {
public:
    CyclotomicValue(long order, QPolynomial residue);

    long order() const { return order_; }
    const QPolynomial& residue() const { return residue_; }
    bool is_rational() const { return residue_.degree() <= 0; }
    bool is_integer() const;
    std::string to_string() const;

    friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;

private:
    long order_;
    QPolynomial residue_;
};

/// Substitutes q -> zeta_d^j and reduces modulo the d-th cyclotomic
/// polynomial. Requires gcd(j, d) = 1; d = 1 is evaluation at q = 1.
CyclotomicValue eval_at_primitive_root(const QPolynomial& p, long d, long j = 1);

/// The value as an ordinary integer, or nullopt when it is not one.
std::optional<Integer> cyclotomic_as_integer(const CyclotomicValue& v);

// {"coeffs": [[num, den], ...]} in ascending degree; entries too large for
// 64 bits are written as decimal strings.
void to_json(nlohmann::json& j, const QPolynomial& p);
void from_json(const nlohmann::json& j, QPolynomial& p);

}  // namespace ancsieve
