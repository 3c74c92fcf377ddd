#include "ancsieve/qcalc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <utility>

namespace ancsieve {

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n)
{
    if (n < 0)
        throw std::domain_error("factorial of a negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer multinomial(std::span<const int> multiplicities)
{
    Integer result = 1;
    long total = 0;
    for (int m : multiplicities) {
        total += m;
        result *= binomial(total, m);
    }
    return result;
}

// ---------------------------------------------------------------------------
// QPolynomial

QPolynomial::QPolynomial(long constant) : QPolynomial(Rational(constant)) {}

QPolynomial::QPolynomial(const Rational& constant)
{
    if (constant != 0)
        coeffs_.push_back(constant);
}

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        c.canonicalize();
    canonicalize();
}

QPolynomial QPolynomial::monomial(const Rational& c, std::size_t degree)
{
    QPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_[degree] = c;
    }
    return p;
}

QPolynomial QPolynomial::from_integers(std::span<const long> coeffs)
{
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs)
        v.emplace_back(c);
    return QPolynomial(std::move(v));
}

void QPolynomial::canonicalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational QPolynomial::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

bool QPolynomial::has_integer_coefficients() const
{
    for (const auto& c : coeffs_)
        if (c.get_den() != 1)
            return false;
    return true;
}

bool QPolynomial::has_nonnegative_coefficients() const
{
    for (const auto& c : coeffs_)
        if (sgn(c) < 0)
            return false;
    return true;
}

Integer QPolynomial::common_denominator() const
{
    Integer l = 1;
    for (const auto& c : coeffs_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

Rational QPolynomial::evaluate(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Rational QPolynomial::at_one() const
{
    Rational acc = 0;
    for (const auto& c : coeffs_)
        acc += c;
    return acc;
}

QPolynomial QPolynomial::shifted(std::size_t k) const
{
    QPolynomial p;
    if (is_zero())
        return p;
    p.coeffs_.assign(k, Rational(0));
    p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return p;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    canonicalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    canonicalize();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b)
{
    QPolynomial p;
    if (a.is_zero() || b.is_zero())
        return p;
    // Integer inputs are multiplied with mpz accumulators; this is the hot
    // path for every product of q-binomials.
    if (a.has_integer_coefficients() && b.has_integer_coefficients()) {
        std::vector<Integer> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            const mpz_srcptr ai = a.coeffs_[i].get_num_mpz_t();
            if (mpz_sgn(ai) == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                mpz_addmul(acc[i + j].get_mpz_t(), ai, b.coeffs_[j].get_num_mpz_t());
        }
        p.coeffs_.reserve(acc.size());
        for (auto& c : acc)
            p.coeffs_.emplace_back(c);
    } else {
        p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    p.canonicalize();
    return p;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs)
{
    *this = *this * rhs;
    return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& rhs)
{
    if (rhs == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= rhs;
    return *this;
}

QPolynomial& QPolynomial::operator/=(const Rational& rhs)
{
    if (rhs == 0)
        throw std::domain_error("polynomial divided by zero scalar");
    for (auto& c : coeffs_)
        c /= rhs;
    return *this;
}

QPolynomial QPolynomial::operator-() const
{
    QPolynomial p = *this;
    for (auto& c : p.coeffs_)
        c = -c;
    return p;
}

namespace {

std::string integer_poly_string(const QPolynomial& p, const Integer& scale, char var)
{
    std::ostringstream os;
    bool first = true;
    const auto coeffs = p.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Integer c = Rational(coeffs[i] * scale).get_num();
        if (c == 0)
            continue;
        const bool negative = c < 0;
        Integer mag = abs(c);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1)
            os << mag;
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

}  // namespace

std::string QPolynomial::to_string(char var) const
{
    if (is_zero())
        return "0";
    const Integer den = common_denominator();
    std::string body = integer_poly_string(*this, den, var);
    if (den == 1)
        return body;
    if (std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }) == 1)
        return body + "/" + den.get_str();
    return "(" + body + ")/" + den.get_str();
}

// ---------------------------------------------------------------------------
// Division

DivisionResult divide(const QPolynomial& p, const QPolynomial& d)
{
    if (d.is_zero())
        throw std::domain_error("polynomial division by zero");
    const auto dc = d.coefficients();
    const long dd = d.degree();
    std::vector<Rational> rem(p.coefficients().begin(), p.coefficients().end());
    const long pd = p.degree();
    if (pd < dd)
        return {QPolynomial(), p};

    std::vector<Rational> quot(static_cast<std::size_t>(pd - dd + 1));
    const Rational& lead = dc[static_cast<std::size_t>(dd)];
    const bool monic = lead == 1;
    Rational t;
    for (long i = pd; i >= dd; --i) {
        auto& top = rem[static_cast<std::size_t>(i)];
        if (top == 0)
            continue;
        Rational f = monic ? top : Rational(top / lead);
        const long shift = i - dd;
        for (long k = 0; k <= dd; ++k) {
            if (dc[static_cast<std::size_t>(k)] == 0)
                continue;
            mpq_mul(t.get_mpq_t(), f.get_mpq_t(), dc[static_cast<std::size_t>(k)].get_mpq_t());
            auto& slot = rem[static_cast<std::size_t>(shift + k)];
            slot -= t;
        }
        quot[static_cast<std::size_t>(shift)] = f;
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

DivisionWithRemainder::DivisionWithRemainder(const QPolynomial& dividend,
                                             const QPolynomial& divisor,
                                             QPolynomial remainder)
    : std::runtime_error("inexact polynomial division: (" + dividend.to_string() + ") / (" +
                         divisor.to_string() + ") leaves remainder " + remainder.to_string()),
      remainder_(std::move(remainder))
{
}

QPolynomial exact_div(const QPolynomial& p, const QPolynomial& d)
{
    auto [quot, rem] = divide(p, d);
    if (!rem.is_zero())
        throw DivisionWithRemainder(p, d, std::move(rem));
    return quot;
}

// ---------------------------------------------------------------------------
// q-analogues

QPolynomial q_int(long n)
{
    if (n < 0)
        throw std::domain_error("q_int of a negative number");
    return QPolynomial(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

QPolynomial q_factorial(long n)
{
    if (n < 0)
        throw std::domain_error("q_factorial of a negative number");
    QPolynomial p = 1;
    for (long i = 2; i <= n; ++i)
        p *= q_int(i);
    return p;
}

QPolynomial q_pochhammer(long r)
{
    if (r < 0)
        throw std::domain_error("q_pochhammer of a negative number");
    QPolynomial p = 1;
    for (long i = 1; i <= r; ++i)
        p *= QPolynomial(1) - QPolynomial::monomial(1, static_cast<std::size_t>(i));
    return p;
}

namespace {

template <class Key>
class Memo {
public:
    template <class F>
    const QPolynomial& get(const Key& key, F&& compute)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end())
                return it->second;
        }
        QPolynomial value = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, QPolynomial> table_;
};

Memo<long>& factorial_memo()
{
    static Memo<long> memo;
    return memo;
}

const QPolynomial& cached_q_factorial(long n)
{
    return factorial_memo().get(n, [n] { return q_factorial(n); });
}

}  // namespace

QPolynomial q_binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return QPolynomial();
    static Memo<std::pair<long, long>> memo;
    return memo.get({n, k}, [n, k] {
        return exact_div(cached_q_factorial(n), cached_q_factorial(k) * cached_q_factorial(n - k));
    });
}

QPolynomial q_multinomial(std::span<const int> multiplicities)
{
    static Memo<std::vector<int>> memo;
    std::vector<int> key;
    for (int m : multiplicities) {
        if (m < 0)
            throw std::domain_error("negative multiplicity");
        if (m > 0)
            key.push_back(m);
    }
    std::sort(key.begin(), key.end());
    return memo.get(key, [&key] {
        long total = std::accumulate(key.begin(), key.end(), 0L);
        QPolynomial den = 1;
        for (int m : key)
            den *= cached_q_factorial(m);
        return exact_div(cached_q_factorial(total), den);
    });
}

// ---------------------------------------------------------------------------
// Cyclotomic arithmetic

long euler_phi(long d)
{
    if (d < 1)
        throw std::domain_error("euler_phi needs a positive argument");
    long result = d;
    long x = d;
    for (long p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            while (x % p == 0)
                x /= p;
            result -= result / p;
        }
    }
    if (x > 1)
        result -= result / x;
    return result;
}

const QPolynomial& cyclotomic(long d)
{
    if (d < 1)
        throw std::domain_error("cyclotomic polynomial needs a positive order");
    static Memo<long> memo;
    return memo.get(d, [d] {
        QPolynomial num = QPolynomial::monomial(1, static_cast<std::size_t>(d)) - QPolynomial(1);
        QPolynomial den = 1;
        for (long e = 1; e < d; ++e)
            if (d % e == 0)
                den *= cyclotomic(e);
        return exact_div(num, den);
    });
}

namespace {

// Residues of z^0, ..., z^(d-1) modulo the d-th cyclotomic polynomial.
const std::vector<QPolynomial>& power_basis(long d)
{
    static std::shared_mutex mutex;
    static std::map<long, std::vector<QPolynomial>> table;
    {
        std::shared_lock lock(mutex);
        if (auto it = table.find(d); it != table.end())
            return it->second;
    }
    const QPolynomial& phi = cyclotomic(d);
    const auto deg = static_cast<std::size_t>(phi.degree());
    std::vector<QPolynomial> basis;
    basis.reserve(static_cast<std::size_t>(d));
    QPolynomial cur = 1;
    for (long e = 0; e < d; ++e) {
        basis.push_back(cur);
        cur = cur.shifted(1);
        if (cur.degree() == static_cast<long>(deg))
            cur -= phi * cur.coefficient(deg);
    }
    std::unique_lock lock(mutex);
    return table.try_emplace(d, std::move(basis)).first->second;
}

}  // namespace

CyclotomicValue::CyclotomicValue(long order, QPolynomial residue)
    : order_(order), residue_(std::move(residue))
{
    if (order_ < 1)
        throw std::domain_error("cyclotomic value needs a positive order");
    if (residue_.degree() >= euler_phi(order_))
        residue_ = divide(residue_, cyclotomic(order_)).remainder;
}

bool CyclotomicValue::is_integer() const
{
    return is_rational() && residue_.coefficient(0).get_den() == 1;
}

std::string CyclotomicValue::to_string() const
{
    if (is_rational())
        return residue_.coefficient(0).get_str();
    return residue_.to_string('z') + " (z = primitive " + std::to_string(order_) + "th root of unity)";
}

CyclotomicValue eval_at_primitive_root(const QPolynomial& p, long d, long j)
{
    if (d < 1)
        throw std::domain_error("root of unity order must be positive");
    long jr = ((j % d) + d) % d;
    if (std::gcd(jr, d) != 1)
        throw std::domain_error("eval_at_primitive_root: gcd(j, d) must be 1");
    const auto& basis = power_basis(d);
    const auto psize = static_cast<std::size_t>(euler_phi(d));
    std::vector<Rational> acc(psize);
    const auto coeffs = p.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0)
            continue;
        const long e = static_cast<long>((i * static_cast<std::size_t>(jr)) % static_cast<std::size_t>(d));
        const auto b = basis[static_cast<std::size_t>(e)].coefficients();
        for (std::size_t k = 0; k < b.size(); ++k)
            acc[k] += coeffs[i] * b[k];
    }
    return CyclotomicValue(d, QPolynomial(std::move(acc)));
}

std::optional<Integer> cyclotomic_as_integer(const CyclotomicValue& v)
{
    if (!v.is_integer())
        return std::nullopt;
    return v.residue().coefficient(0).get_num();
}

// ---------------------------------------------------------------------------
// JSON

namespace {

// Plain JSON numbers while they fit in 64 bits, decimal strings beyond.
nlohmann::json integer_json(const Integer& v)
{
    if (mpz_sizeinbase(v.get_mpz_t(), 2) < 63)
        return std::stoll(v.get_str());
    return v.get_str();
}

Integer integer_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<long long>()));
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw std::invalid_argument("coefficient entries must be integers or decimal strings");
}

}  // namespace

void to_json(nlohmann::json& j, const QPolynomial& p)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coefficients())
        coeffs.push_back({integer_json(c.get_num()), integer_json(c.get_den())});
    j = nlohmann::json{{"coeffs", coeffs}};
}

void from_json(const nlohmann::json& j, QPolynomial& p)
{
    std::vector<Rational> coeffs;
    for (const auto& entry : j.at("coeffs")) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("coefficient must be a [num, den] pair");
        const Integer num = integer_from_json(entry[0]);
        const Integer den = integer_from_json(entry[1]);
        if (den == 0)
            throw std::invalid_argument("zero denominator in polynomial coefficient");
        coeffs.emplace_back(num, den);
    }
    p = QPolynomial(std::move(coeffs));
}

}  // namespace ancsieve
