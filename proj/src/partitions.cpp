#include "ancsieve/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ancsieve {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p <= 0)
            throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::from_multiplicities(std::span<const int> m)
{
    std::vector<int> parts;
    for (std::size_t i = m.size(); i-- > 1;) {
        if (m[i] < 0)
            throw std::invalid_argument("negative multiplicity");
        parts.insert(parts.end(), static_cast<std::size_t>(m[i]), static_cast<int>(i));
    }
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text)
{
    std::string cleaned;
    for (char ch : text)
        if (ch != ' ' && ch != '\t' && ch != '\n')
            cleaned += ch;
    if (!cleaned.empty() && cleaned.front() == '(') {
        if (cleaned.back() != ')')
            throw std::invalid_argument("unbalanced parenthesis in partition '" + std::string(text) + "'");
        cleaned = cleaned.substr(1, cleaned.size() - 2);
    }
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < cleaned.size()) {
        std::size_t comma = cleaned.find(',', pos);
        if (comma == std::string::npos)
            comma = cleaned.size();
        const std::string tok = cleaned.substr(pos, comma - pos);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        parts.push_back(std::stoi(tok));
        pos = comma + 1;
        if (comma + 1 == cleaned.size())
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
    return Partition(std::move(parts));
}

int Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::multiplicities() const
{
    std::vector<int> m(static_cast<std::size_t>(largest()) + 1, 0);
    for (int p : parts_)
        ++m[static_cast<std::size_t>(p)];
    return m;
}

std::vector<int> Partition::nonzero_multiplicities() const
{
    std::vector<int> out;
    for (int x : multiplicities())
        if (x > 0)
            out.push_back(x);
    return out;
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void fill_par_set(int remaining, int slots, int max_part, std::vector<int>& prefix,
                  std::vector<Partition>& out)
{
    if (slots == 0) {
        if (remaining == 0)
            out.emplace_back(prefix);
        return;
    }
    // Each remaining slot needs at least 1 and at most max_part.
    const int hi = std::min(max_part, remaining - (slots - 1));
    for (int p = hi; p >= 1; --p) {
        if (p * slots < remaining)
            break;
        prefix.push_back(p);
        fill_par_set(remaining - p, slots - 1, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> par_set(int n, int k)
{
    std::vector<Partition> out;
    if (n < 0 || k < 0 || k > n || (k == 0 && n > 0))
        return out;
    std::vector<int> prefix;
    fill_par_set(n, k, n, prefix, out);
    return out;
}

Partition conjugate(const Partition& lam)
{
    std::vector<int> conj(static_cast<std::size_t>(lam.largest()), 0);
    for (int p : lam.parts())
        for (int i = 0; i < p; ++i)
            ++conj[static_cast<std::size_t>(i)];
    return Partition(std::move(conj));
}

long tau(const Partition& lam)
{
    const Partition conj = conjugate(lam);
    const auto c = conj.parts();
    long total = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        total += static_cast<long>(c[i]) * c[i + 1];
    return total;
}

bool is_divisible(const Partition& lam, int d)
{
    if (d < 1)
        throw std::invalid_argument("divisor must be positive");
    for (int x : lam.multiplicities())
        if (x % d != 0)
            return false;
    return true;
}

Partition divide(const Partition& lam, int d)
{
    if (!is_divisible(lam, d))
        throw std::invalid_argument("partition " + lam.to_string() + " is not divisible by " + std::to_string(d));
    auto m = lam.multiplicities();
    for (int& x : m)
        x /= d;
    return Partition::from_multiplicities(m);
}

Partition scale_multiplicities(const Partition& lam, int t)
{
    if (t < 1)
        throw std::invalid_argument("scale factor must be positive");
    auto m = lam.multiplicities();
    for (int& x : m)
        x *= t;
    return Partition::from_multiplicities(m);
}

Partition scale_parts(const Partition& lam, int t)
{
    if (t < 1)
        throw std::invalid_argument("scale factor must be positive");
    std::vector<int> parts(lam.parts().begin(), lam.parts().end());
    for (int& p : parts)
        p *= t;
    return Partition(std::move(parts));
}

Integer rearrangement_count(const Partition& lam)
{
    return multinomial(lam.nonzero_multiplicities());
}

QPolynomial q_multinomial_partition(int k, const Partition& lam)
{
    if (lam.length() != k)
        throw std::invalid_argument("q-multinomial: partition " + lam.to_string() + " does not have " +
                                    std::to_string(k) + " parts");
    return q_multinomial(lam.nonzero_multiplicities());
}

void to_json(nlohmann::json& j, const Partition& p)
{
    j = nlohmann::json(std::vector<int>(p.parts().begin(), p.parts().end()));
}

void from_json(const nlohmann::json& j, Partition& p)
{
    p = Partition(j.get<std::vector<int>>());
}

}  // namespace ancsieve
