#include "ancsieve/formulas.hpp"

#include <algorithm>
#include <sstream>

namespace ancsieve {

namespace {

Integer exact_quotient(const Integer& num, const Integer& den, const char* what)
{
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InexactIntegerDivision(std::string("inexact integer division in ") + what + ": " +
                                num.get_str() + " / " + den.get_str());
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

QPolynomial qmult(const Partition& p)
{
    return q_multinomial_partition(p.length(), p);
}

// q^shift * numerator / denominator / scalar, rejecting a negative shift
// on a nonzero result.
QPolynomial assemble(const QPolynomial& numerator, const QPolynomial& denominator, long scalar,
                     long shift, const char* what)
{
    if (numerator.is_zero())
        return QPolynomial();
    QPolynomial quotient = exact_div(numerator, denominator);
    if (scalar != 1)
        quotient /= Rational(scalar);
    if (shift < 0)
        throw InvalidProfile(std::string("negative q-exponent ") + std::to_string(shift) + " in " + what);
    return quotient.shifted(static_cast<std::size_t>(shift));
}

void require_nonnegative(std::initializer_list<int> values, const char* what)
{
    for (int v : values)
        if (v < 0)
            throw InvalidProfile(std::string(what) + ": parameters must be nonnegative");
}

}  // namespace

// ---------------------------------------------------------------------------
// CycleProfile

CycleProfile::CycleProfile(int n_, int m_, Partition alpha_, Partition beta_, Partition lam_, Partition mu_)
    : n(n_), m(m_), alpha(std::move(alpha_)), beta(std::move(beta_)), lam(std::move(lam_)), mu(std::move(mu_))
{
    c = lam.length();
    r = alpha.length();
    s = beta.length();
    R = alpha.weight();
    S = beta.weight();
    if (n < 1 || m < 1)
        throw InvalidProfile("profile needs n >= 1 and m >= 1");
    if (c < 1)
        throw InvalidProfile("profile needs at least one connected cycle (lam must be nonempty)");
    if (mu.length() != c)
        throw InvalidProfile("lam and mu must have the same number of parts (c)");
    if (R + lam.weight() != n)
        throw InvalidProfile("|alpha| + |lam| must equal n = " + std::to_string(n));
    if (S + mu.weight() != m)
        throw InvalidProfile("|beta| + |mu| must equal m = " + std::to_string(m));
}

std::string CycleProfile::to_string() const
{
    std::ostringstream os;
    os << "n=" << n << " m=" << m << " c=" << c << " r=" << r << " s=" << s << " R=" << R << " S=" << S
       << " alpha=" << alpha.to_string() << " beta=" << beta.to_string() << " lam=" << lam.to_string()
       << " mu=" << mu.to_string();
    return os.str();
}

void to_json(nlohmann::json& j, const CycleProfile& p)
{
    j = nlohmann::json{{"n", p.n},         {"m", p.m},       {"c", p.c},       {"r", p.r},
                       {"s", p.s},         {"R", p.R},       {"S", p.S},       {"alpha", p.alpha},
                       {"beta", p.beta},   {"lam", p.lam},   {"mu", p.mu}};
}

std::vector<CycleProfile> all_profiles(int n, int m)
{
    struct Side {
        Partition cycles;
        Partition connected;
    };
    // Possible (cycle type, connected type) pairs on one circle of size len
    // with exactly c connected cycles.
    auto sides = [](int len, int c) {
        std::vector<Side> out;
        for (int weight = 0; weight <= len - c; ++weight)
            for (int count = (weight == 0 ? 0 : 1); count <= weight; ++count)
                for (const auto& cyc : par_set(weight, count))
                    for (const auto& con : par_set(len - weight, c))
                        out.push_back({cyc, con});
        return out;
    };
    std::vector<CycleProfile> out;
    for (int c = 1; c <= std::min(n, m); ++c) {
        const auto ext = sides(n, c);
        const auto in = sides(m, c);
        for (const auto& e : ext)
            for (const auto& i : in)
                out.emplace_back(n, m, e.cycles, i.cycles, e.connected, i.connected);
    }
    return out;
}

bool ProfileFilter::matches(const CycleProfile& p) const
{
    return (!c || *c == p.c) && (!r || *r == p.r) && (!s || *s == p.s) && (!R || *R == p.R) &&
           (!S || *S == p.S) && (!alpha || *alpha == p.alpha) && (!beta || *beta == p.beta) &&
           (!lam || *lam == p.lam) && (!mu || *mu == p.mu);
}

bool ProfileFilter::empty() const
{
    return !c && !r && !s && !R && !S && !alpha && !beta && !lam && !mu;
}

ProfileFilter ProfileFilter::doubled() const
{
    ProfileFilter f;
    auto twice = [](const std::optional<int>& v) { return v ? std::optional<int>(2 * *v) : std::nullopt; };
    auto twice_p = [](const std::optional<Partition>& v) {
        return v ? std::optional<Partition>(scale_multiplicities(*v, 2)) : std::nullopt;
    };
    f.c = twice(c);
    f.r = twice(r);
    f.s = twice(s);
    f.R = twice(R);
    f.S = twice(S);
    f.alpha = twice_p(alpha);
    f.beta = twice_p(beta);
    f.lam = twice_p(lam);
    f.mu = twice_p(mu);
    return f;
}

ProfileFilter ProfileFilter::exact(const CycleProfile& p)
{
    ProfileFilter f;
    f.c = p.c;
    f.r = p.r;
    f.s = p.s;
    f.R = p.R;
    f.S = p.S;
    f.alpha = p.alpha;
    f.beta = p.beta;
    f.lam = p.lam;
    f.mu = p.mu;
    return f;
}

ExponentQuadruple exponents(const CycleProfile& p)
{
    ExponentQuadruple e;
    const long c = p.c, r = p.r, s = p.s, n = p.n, m = p.m, R = p.R, S = p.S;
    e.X = c * (c - 1);
    e.Y = r * (c + r) + s * (c + s);
    e.Z = r * (n - c - R) + s * (m - c - S);
    e.W = r * (R - r) + s * (S - s) + c * (n - R - c) + c * (m - S - c) - tau(p.alpha) - tau(p.beta) -
          tau(p.lam) - tau(p.mu);
    if (e.W < 0)
        throw InvalidProfile("negative exponent W=" + std::to_string(e.W) + " for profile " + p.to_string());
    return e;
}

// ---------------------------------------------------------------------------
// Disc

Integer catalan(int n)
{
    require_nonnegative({n}, "catalan");
    return exact_quotient(binomial(2 * n, n), n + 1, "catalan");
}

Integer narayana(int n, int k)
{
    if (n < 1)
        throw InvalidProfile("narayana needs n >= 1");
    return exact_quotient(binomial(n, k - 1) * binomial(n, k), n, "narayana");
}

Integer kreweras(const Partition& lam)
{
    const int n = lam.weight(), k = lam.length();
    if (k < 1)
        throw InvalidProfile("kreweras needs a nonempty partition");
    return exact_quotient(binomial(n, k - 1) * rearrangement_count(lam), k, "kreweras");
}

QPolynomial kreweras_q(const Partition& lam)
{
    const long n = lam.weight(), k = lam.length();
    if (k < 1)
        throw InvalidProfile("kreweras_q needs a nonempty partition");
    return assemble(q_binomial(n, k - 1) * qmult(lam), q_int(k), 1, (n + 1) * (n - k) - tau(lam), "kreweras_q");
}

QPolynomial narayana_q(int n, int k)
{
    if (n < 1)
        throw InvalidProfile("narayana_q needs n >= 1");
    const long nn = n, kk = k;
    return assemble(q_binomial(n, k - 1) * q_binomial(n, k), q_int(n), 1, (nn - kk) * (nn + 1 - kk),
                    "narayana_q");
}

QPolynomial catalan_q(int n)
{
    require_nonnegative({n}, "catalan_q");
    return exact_div(q_binomial(2 * n, n), q_int(n + 1));
}

QPolynomial bessis_reiner_X(const Partition& lam)
{
    const long n = lam.weight(), k = lam.length();
    if (k < 1)
        throw InvalidProfile("bessis_reiner_X needs a nonempty partition");
    return exact_div(q_binomial(n, k - 1) * qmult(lam), q_int(k));
}

// ---------------------------------------------------------------------------
// Annulus

QPolynomial q_binomial_ext(long n, long k)
{
    if (n == -1 && k == -1)
        return 1;
    return q_binomial(n, k);
}

Integer binomial_ext(long n, long k)
{
    if (n == -1 && k == -1)
        return 1;
    return binomial(n, k);
}

QPolynomial annular_kreweras_q(const CycleProfile& p)
{
    const auto e = exponents(p);
    const long n = p.n, m = p.m, c = p.c;
    QPolynomial num = q_int(n * m) * q_int(2 * c) * q_int(n - p.R) * q_int(m - p.S) * q_binomial(n, p.r) *
                      q_binomial(m, p.s) * qmult(p.alpha) * qmult(p.beta) * qmult(p.lam) * qmult(p.mu);
    QPolynomial den = q_int(n) * q_int(m) * q_int(c) * q_int(c);
    return assemble(num, den, 2, e.X + e.Y + e.Z + e.W, "annular_kreweras_q");
}

QPolynomial annular_narayana1_q(int n, int m, int c, int r, int s, int R, int S)
{
    require_nonnegative({c, r, s, R, S}, "annular_narayana1_q");
    if (n < 1 || m < 1)
        throw InvalidProfile("annular_narayana1_q needs n, m >= 1");
    const long X = static_cast<long>(c) * (c - 1);
    const long Y = static_cast<long>(r) * (c + r) + static_cast<long>(s) * (c + s);
    const long Z = static_cast<long>(r) * (n - c - R) + static_cast<long>(s) * (m - c - S);
    QPolynomial num = q_int(static_cast<long>(n) * m) * q_int(2L * c) * q_binomial(n, r) * q_binomial(m, s) *
                      q_binomial_ext(R - 1, r - 1) * q_binomial_ext(S - 1, s - 1) * q_binomial(n - R, c) *
                      q_binomial(m - S, c);
    return assemble(num, q_int(n) * q_int(m), 2, X + Y + Z, "annular_narayana1_q");
}

QPolynomial annular_narayana2_q(int n, int m, int c, int r, int s)
{
    require_nonnegative({c, r, s}, "annular_narayana2_q");
    if (n < 1 || m < 1)
        throw InvalidProfile("annular_narayana2_q needs n, m >= 1");
    const long X = static_cast<long>(c) * (c - 1);
    const long Y = static_cast<long>(r) * (c + r) + static_cast<long>(s) * (c + s);
    QPolynomial num = q_int(static_cast<long>(n) * m) * q_int(2L * c) * q_binomial(n, r) * q_binomial(m, s) *
                      q_binomial(n, r + c) * q_binomial(m, s + c);
    return assemble(num, q_int(n) * q_int(m), 2, X + Y, "annular_narayana2_q");
}

QPolynomial annular_narayana3_q(int n, int m, int c)
{
    require_nonnegative({c}, "annular_narayana3_q");
    if (n < 1 || m < 1)
        throw InvalidProfile("annular_narayana3_q needs n, m >= 1");
    const long X = static_cast<long>(c) * (c - 1);
    QPolynomial num = q_int(static_cast<long>(n) * m) * q_int(2L * c) * q_binomial(2L * n, n - c) *
                      q_binomial(2L * m, m - c);
    return assemble(num, q_int(n) * q_int(m), 2, X, "annular_narayana3_q");
}

QPolynomial annular_catalan_q(int n, int m)
{
    if (n < 1 || m < 1)
        throw InvalidProfile("annular_catalan_q needs n, m >= 1");
    QPolynomial num = q_int(static_cast<long>(n) * m) * q_binomial(2L * n, n) * q_binomial(2L * m, m);
    return assemble(num, q_int(static_cast<long>(n) + m), 2, 0, "annular_catalan_q");
}

QPolynomial profile_sieving_q(const CycleProfile& p)
{
    QPolynomial num = q_int(static_cast<long>(p.n - p.R) * (p.m - p.S)) * q_binomial(p.n, p.r) *
                      q_binomial(p.m, p.s) * qmult(p.alpha) * qmult(p.beta) * qmult(p.lam) * qmult(p.mu);
    return assemble(num, q_int(p.c), 1, 0, "profile_sieving_q");
}

Integer fixed_count_formula(const CycleProfile& p, int d)
{
    if (d < 1)
        throw std::invalid_argument("rotation order must be positive");
    for (int v : {p.n, p.m, p.c, p.r, p.s, p.R, p.S})
        if (v % d != 0)
            return 0;
    for (const Partition* part : {&p.alpha, &p.beta, &p.lam, &p.mu})
        if (!is_divisible(*part, d))
            return 0;
    const long n = p.n / d, m = p.m / d, c = p.c / d, r = p.r / d, s = p.s / d, R = p.R / d, S = p.S / d;
    Integer num = Integer(d) * (n - R) * (m - S) * binomial(n, r) * binomial(m, s) *
                  rearrangement_count(divide(p.alpha, d)) * rearrangement_count(divide(p.beta, d)) *
                  rearrangement_count(divide(p.lam, d)) * rearrangement_count(divide(p.mu, d));
    return exact_quotient(num, c, "fixed_count_formula");
}

Integer count_anc(int n, int m)
{
    if (n < 1 || m < 1)
        throw InvalidProfile("count_anc needs n, m >= 1");
    return exact_quotient(Integer(n) * m * binomial(2L * n, n) * binomial(2L * m, m), Integer(2) * (m + n),
                          "count_anc(n,m)");
}

Integer count_anc(int n, int m, int c)
{
    require_nonnegative({c}, "count_anc");
    return Integer(c) * binomial(2L * n, n - c) * binomial(2L * m, m - c);
}

Integer count_anc(int n, int m, int c, int r, int s)
{
    require_nonnegative({c, r, s}, "count_anc");
    return Integer(c) * binomial(n, r) * binomial(m, s) * binomial(n, r + c) * binomial(m, s + c);
}

Integer count_anc(int n, int m, int c, int r, int s, int R, int S)
{
    require_nonnegative({c, r, s, R, S}, "count_anc");
    return Integer(c) * binomial(n, r) * binomial(m, s) * binomial_ext(R - 1, r - 1) *
           binomial_ext(S - 1, s - 1) * binomial(n - R, c) * binomial(m - S, c);
}

Integer count_anc(const CycleProfile& p)
{
    Integer num = Integer(p.n - p.R) * (p.m - p.S) * binomial(p.n, p.r) * binomial(p.m, p.s) *
                  rearrangement_count(p.alpha) * rearrangement_count(p.beta) * rearrangement_count(p.lam) *
                  rearrangement_count(p.mu);
    return exact_quotient(num, p.c, "count_anc(profile)");
}

Integer count_anc_B(int n, int m)
{
    if (n < 1 || m < 1)
        throw InvalidProfile("count_anc_B needs n, m >= 1");
    return exact_quotient(Integer(n) * m * binomial(2L * n, n) * binomial(2L * m, m), Integer(m + n),
                          "count_anc_B(n,m)");
}

Integer count_anc_B(int n, int m, int c)
{
    return 2 * count_anc(n, m, c);
}

Integer count_anc_B(int n, int m, int c, int r, int s)
{
    return 2 * count_anc(n, m, c, r, s);
}

Integer count_anc_B(int n, int m, int c, int r, int s, int R, int S)
{
    return 2 * count_anc(n, m, c, r, s, R, S);
}

Integer count_anc_B(const CycleProfile& p)
{
    Integer num = Integer(2) * (p.n - p.R) * (p.m - p.S) * binomial(p.n, p.r) * binomial(p.m, p.s) *
                  rearrangement_count(p.alpha) * rearrangement_count(p.beta) * rearrangement_count(p.lam) *
                  rearrangement_count(p.mu);
    return exact_quotient(num, p.c, "count_anc_B(profile)");
}

Integer matching_count(int n, int m, int c)
{
    if (n < 0 || m < 0 || c < 0)
        throw std::invalid_argument("matching_count: parameters must be nonnegative");
    if ((n - m) % 2 != 0 || (n - c) % 2 != 0)
        throw ParityError("matching_count needs n = m = c (mod 2), got n=" + std::to_string(n) +
                          " m=" + std::to_string(m) + " c=" + std::to_string(c));
    if (c > std::min(n, m))
        return 0;
    return Integer(c) * binomial(n, (n - c) / 2) * binomial(m, (m - c) / 2);
}

Integer matching_total(int n, int m)
{
    if (n < 1 || m < 1)
        throw std::invalid_argument("matching_total needs n, m >= 1");
    if ((n - m) % 2 != 0)
        throw ParityError("matching_total needs n = m (mod 2), got n=" + std::to_string(n) +
                          " m=" + std::to_string(m));
    const long hn = (n + 1) / 2, hm = (m + 1) / 2;
    return exact_quotient(Integer(2) * hn * hm * binomial(n, hn) * binomial(m, hm), Integer(n + m),
                          "matching_total");
}

}  // namespace ancsieve
