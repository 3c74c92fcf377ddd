#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls into the library's combinatorics.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

inline std::int64_t binom(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Partitions of n with all parts <= k.
inline std::int64_t partitions_bounded(int n, int k)
{
    if (n == 0)
        return 1;
    if (n < 0 || k == 0)
        return 0;
    return partitions_bounded(n - k, k) + partitions_bounded(n, k - 1);
}

// Integer polynomial coefficients of [n choose k]_q by the q-Pascal rule
// [n, k] = [n-1, k-1] + q^k [n-1, k].
inline std::vector<std::int64_t> gaussian(int n, int k)
{
    if (k < 0 || k > n)
        return {};
    if (k == 0 || k == n)
        return {1};
    auto a = gaussian(n - 1, k - 1);
    auto b = gaussian(n - 1, k);
    std::vector<std::int64_t> out(std::max(a.size(), b.size() + static_cast<std::size_t>(k)), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i + static_cast<std::size_t>(k)] += b[i];
    return out;
}

inline int cycles(const std::vector<int>& img)  // 0-based images
{
    std::vector<char> seen(img.size(), 0);
    int c = 0;
    for (std::size_t s = 0; s < img.size(); ++s) {
        if (seen[s])
            continue;
        ++c;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(img[x]))
            seen[x] = 1;
    }
    return c;
}

// Brute force over S_{n+m}: connected and genus-zero against the two-cycle
// reference rotation. Returns 1-based image sequences in lexicographic order.
inline std::vector<std::vector<int>> annular_noncrossing(int n, int m)
{
    const int N = n + m;
    std::vector<int> g(static_cast<std::size_t>(N));
    for (int i = 0; i < n; ++i)
        g[i] = (i + 1) % n;
    for (int i = 0; i < m; ++i)
        g[n + i] = n + (i + 1) % m;
    std::vector<int> p(static_cast<std::size_t>(N));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool connected = false;
        for (int x = 0; x < n; ++x)
            connected = connected || p[x] >= n;
        if (!connected)
            continue;
        std::vector<int> inv(static_cast<std::size_t>(N)), h(static_cast<std::size_t>(N));
        for (int x = 0; x < N; ++x)
            inv[p[x]] = x;
        for (int x = 0; x < N; ++x)
            h[x] = inv[g[x]];
        if (cycles(p) + cycles(h) == N) {
            std::vector<int> one(p);
            for (int& v : one)
                ++v;
            out.push_back(one);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Noncrossing permutations of [n] as 1-based image sequences.
inline std::vector<std::vector<int>> disc_noncrossing(int n)
{
    std::vector<int> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g[i] = (i + 1) % n;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> inv(static_cast<std::size_t>(n)), h(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x)
            inv[p[x]] = x;
        for (int x = 0; x < n; ++x)
            h[x] = inv[g[x]];
        if (cycles(p) + cycles(h) == n + 1) {
            std::vector<int> one(p);
            for (int& v : one)
                ++v;
            out.push_back(one);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

template <class Coeff>
std::complex<long double> evaluate(const std::vector<Coeff>& c, std::complex<long double> z)
{
    std::complex<long double> acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * z + static_cast<long double>(*it);
    return acc;
}

inline std::complex<long double> root_of_unity(long d, long j)
{
    const long double pi = 3.141592653589793238462643383279502884L;
    return std::polar(1.0L, 2.0L * pi * static_cast<long double>(j) / static_cast<long double>(d));
}

}  // namespace oracle
