#include "ancsieve/annulus.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace ancsieve {

namespace {

constexpr int kMaxLabels = 32;

// Cycle count of a 1-based image array of length size, without allocation.
int fast_cycle_count(const int* images, int size)
{
    std::array<bool, kMaxLabels + 1> seen{};
    int count = 0;
    for (int start = 1; start <= size; ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        ++count;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = images[x - 1])
            seen[static_cast<std::size_t>(x)] = true;
    }
    return count;
}

// cycles(pi) + cycles(pi^-1 gamma) for gamma with the given successor map.
int genus_sum(const int* images, const int* gamma_succ, int size)
{
    std::array<int, kMaxLabels + 1> inv{};
    std::array<int, kMaxLabels> comp{};
    for (int x = 1; x <= size; ++x)
        inv[static_cast<std::size_t>(images[x - 1])] = x;
    for (int x = 1; x <= size; ++x)
        comp[static_cast<std::size_t>(x - 1)] = inv[static_cast<std::size_t>(gamma_succ[x - 1])];
    return fast_cycle_count(images, size) + fast_cycle_count(comp.data(), size);
}

std::vector<int> annulus_gamma_images(int n, int m)
{
    std::vector<int> g(static_cast<std::size_t>(n + m));
    for (int i = 1; i <= n; ++i)
        g[static_cast<std::size_t>(i - 1)] = i == n ? 1 : i + 1;
    for (int i = n + 1; i <= n + m; ++i)
        g[static_cast<std::size_t>(i - 1)] = i == n + m ? n + 1 : i + 1;
    return g;
}

bool anc_images(const int* images, int n, int m, const int* gamma_succ)
{
    bool connected = false;
    for (int x = 1; x <= n && !connected; ++x)
        connected = images[x - 1] > n;
    if (!connected)
        return false;
    return genus_sum(images, gamma_succ, n + m) == n + m;
}

// Brute force over S_size, split by the image of 1 across workers; results
// come back in lexicographic order of the image sequence.
template <class Accept>
std::vector<std::vector<int>> enumerate_images(int size, unsigned workers, const Accept& accept)
{
    std::vector<std::vector<std::vector<int>>> buckets(static_cast<std::size_t>(size));
    std::atomic<int> next{0};
    auto work = [&] {
        std::vector<int> img(static_cast<std::size_t>(size));
        for (int task; (task = next.fetch_add(1)) < size;) {
            img[0] = task + 1;
            std::size_t pos = 1;
            for (int v = 1; v <= size; ++v)
                if (v != task + 1)
                    img[pos++] = v;
            auto& out = buckets[static_cast<std::size_t>(task)];
            do {
                if (accept(img.data()))
                    out.push_back(img);
            } while (std::next_permutation(img.begin() + 1, img.end()));
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(size)));
    if (count == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < count; ++t)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }
    std::vector<std::vector<int>> all;
    for (auto& b : buckets)
        for (auto& img : b)
            all.push_back(std::move(img));
    return all;
}

void check_bound(int total, const EnumerationOptions& options)
{
    if (total > options.max_total || total > kMaxLabels)
        throw BoundExceeded("enumeration of S_" + std::to_string(total) + " exceeds the bound n+m <= " +
                            std::to_string(std::min(options.max_total, kMaxLabels)));
}

int shift_order(int size, int shift)
{
    return size / std::gcd(size, ((shift % size) + size) % size);
}

}  // namespace

unsigned resolve_workers(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("ANCSIEVE_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------

AnnularPermutation::AnnularPermutation(int n, int m, Permutation perm) : n_(n), m_(m), perm_(std::move(perm))
{
    if (n < 0 || m < 0)
        throw std::invalid_argument("circle sizes must be nonnegative");
    if (perm_.size() != n + m)
        throw std::invalid_argument("permutation size " + std::to_string(perm_.size()) + " does not match n+m = " +
                                    std::to_string(n + m));
}

AnnularPermutation AnnularPermutation::parse(int n, int m, std::string_view cycle_notation)
{
    return AnnularPermutation(n, m, Permutation::parse(n + m, cycle_notation));
}

void to_json(nlohmann::json& j, const AnnularPermutation& p)
{
    j = nlohmann::json{{"n", p.n()}, {"m", p.m()}, {"cycles", p.cycles()}};
}

AnnularPermutation annular_from_json(const nlohmann::json& j)
{
    const int n = j.at("n").get<int>();
    const int m = j.at("m").get<int>();
    return AnnularPermutation(n, m, Permutation::from_cycles(n + m, j.at("cycles").get<std::vector<std::vector<int>>>()));
}

void from_json(const nlohmann::json& j, AnnularPermutation& p)
{
    p = annular_from_json(j);
}

AnnularPermutation gamma(int n, int m)
{
    if (n < 1 || m < 1)
        throw std::invalid_argument("gamma needs n, m >= 1");
    return AnnularPermutation(n, m, Permutation(annulus_gamma_images(n, m)));
}

bool is_clockwise_cycle(std::span<const int> cycle, int n, int m)
{
    const std::size_t k = cycle.size();
    for (int x : cycle)
        if (x < 1 || x > n + m)
            throw std::invalid_argument("cycle element out of range");
    if (k <= 1)
        return true;
    std::vector<int> ext, in;
    for (int x : cycle)
        (x <= n ? ext : in).push_back(x);
    std::sort(ext.begin(), ext.end());
    std::sort(in.begin(), in.end());

    auto is_rotation_of_sorted = [](std::span<const int> word, const std::vector<int>& sorted) {
        if (word.empty())
            return true;
        const auto pos = static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), word[0]) - sorted.begin());
        for (std::size_t i = 0; i < word.size(); ++i)
            if (word[i] != sorted[(pos + i) % sorted.size()])
                return false;
        return true;
    };

    std::vector<int> word(k);
    for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t i = 0; i < k; ++i)
            word[i] = cycle[(t + i) % k];
        const std::size_t u = ext.size();
        bool blocks = true;
        for (std::size_t i = 0; i < k && blocks; ++i)
            blocks = (i < u) == (word[i] <= n);
        if (!blocks)
            continue;
        const std::span<const int> w(word);
        if (is_rotation_of_sorted(w.subspan(0, u), ext) && is_rotation_of_sorted(w.subspan(u), in))
            return true;
    }
    return false;
}

bool is_connected_anc(const AnnularPermutation& p)
{
    if (p.n() < 1 || p.m() < 1)
        return false;
    if (p.size() > kMaxLabels) {
        bool connected = false;
        for (int x = 1; x <= p.n() && !connected; ++x)
            connected = p(x) > p.n();
        const Permutation g = gamma(p.n(), p.m()).permutation();
        return connected && p.permutation().cycle_count() + compose(p.permutation().inverse(), g).cycle_count() ==
                                p.size();
    }
    const auto g = annulus_gamma_images(p.n(), p.m());
    return anc_images(p.permutation().images().data(), p.n(), p.m(), g.data());
}

int connected_cycle_count(const AnnularPermutation& p)
{
    int c = 0;
    for (const auto& cyc : p.cycles()) {
        const bool ext = std::any_of(cyc.begin(), cyc.end(), [&](int x) { return x <= p.n(); });
        const bool in = std::any_of(cyc.begin(), cyc.end(), [&](int x) { return x > p.n(); });
        c += ext && in;
    }
    return c;
}

CycleProfile profile_of(const AnnularPermutation& p)
{
    if (!is_connected_anc(p))
        throw InvalidProfile("profile_of: " + p.to_string() + " is not a connected (" + std::to_string(p.n()) + "," +
                             std::to_string(p.m()) + ")-annular noncrossing permutation");
    std::vector<int> alpha, beta, lam, mu;
    for (const auto& cyc : p.cycles()) {
        int ext = 0;
        for (int x : cyc)
            ext += x <= p.n();
        const int in = static_cast<int>(cyc.size()) - ext;
        if (in == 0)
            alpha.push_back(ext);
        else if (ext == 0)
            beta.push_back(in);
        else {
            lam.push_back(ext);
            mu.push_back(in);
        }
    }
    return CycleProfile(p.n(), p.m(), Partition(alpha), Partition(beta), Partition(lam), Partition(mu));
}

std::vector<AnnularPermutation> enumerate_anc(int n, int m, const ProfileFilter& filter,
                                              const EnumerationOptions& options)
{
    if (n < 1 || m < 1)
        throw std::invalid_argument("enumerate_anc needs n, m >= 1");
    check_bound(n + m, options);
    const auto g = annulus_gamma_images(n, m);
    const bool filtered = !filter.empty();
    auto accept = [&](const int* img) {
        if (!anc_images(img, n, m, g.data()))
            return false;
        if (!filtered)
            return true;
        AnnularPermutation p(n, m, Permutation(std::vector<int>(img, img + n + m)));
        return filter.matches(profile_of(p));
    };
    std::vector<AnnularPermutation> out;
    for (auto& img : enumerate_images(n + m, resolve_workers(options.workers), accept))
        out.emplace_back(n, m, Permutation(std::move(img)));
    return out;
}

// ---------------------------------------------------------------------------
// Rotations

int RotationPair::exterior_order() const
{
    return shift_order(n, ext_shift);
}

int RotationPair::interior_order() const
{
    return shift_order(m, int_shift);
}

int RotationPair::order() const
{
    return std::lcm(exterior_order(), interior_order());
}

bool RotationPair::is_rigid() const
{
    const long nm = static_cast<long>(n) * m;
    return ((static_cast<long>(ext_shift) * m - static_cast<long>(int_shift) * n) % nm + nm) % nm == 0;
}

int RotationPair::apply(int label) const
{
    if (label <= n) {
        const int i = label - 1;
        return ((i + ext_shift) % n + n) % n + 1;
    }
    const int i = label - n - 1;
    return n + ((i - int_shift) % m + m) % m + 1;
}

AnnularPermutation apply_rotation(const RotationPair& rot, const AnnularPermutation& p)
{
    if (rot.n != p.n() || rot.m != p.m())
        throw std::invalid_argument("rotation and permutation live on different annuli");
    std::vector<int> img(static_cast<std::size_t>(p.size()));
    for (int x = 1; x <= p.size(); ++x)
        img[static_cast<std::size_t>(rot.apply(x) - 1)] = rot.apply(p(x));
    return AnnularPermutation(p.n(), p.m(), Permutation(std::move(img)));
}

bool is_fixed_by(const RotationPair& rot, const AnnularPermutation& p)
{
    for (int x = 1; x <= p.size(); ++x)
        if (rot.apply(p(x)) != p(rot.apply(x)))
            return false;
    return true;
}

std::vector<RotationPair> rotations_of_order(int n, int m, int d)
{
    std::vector<RotationPair> out;
    if (n < 1 || m < 1 || d < 1 || n % d != 0 || m % d != 0)
        return out;
    for (int k1 = 0; k1 < n; ++k1) {
        if (shift_order(n, k1) != d)
            continue;
        for (int k2 = 0; k2 < m; ++k2)
            if (shift_order(m, k2) == d)
                out.push_back({n, m, k1, k2});
    }
    return out;
}

std::vector<RotationPair> group_rotations_of_order(int n, int m, int d)
{
    auto out = rotations_of_order(n, m, d);
    std::erase_if(out, [](const RotationPair& r) { return !r.is_rigid(); });
    return out;
}

std::vector<AnnularPermutation> fixed_points(const RotationPair& rot, const ProfileFilter& filter,
                                             const EnumerationOptions& options)
{
    std::vector<AnnularPermutation> out;
    for (auto& p : enumerate_anc(rot.n, rot.m, filter, options))
        if (is_fixed_by(rot, p))
            out.push_back(std::move(p));
    return out;
}

bool is_type_B(const AnnularPermutation& p)
{
    if (p.n() % 2 != 0 || p.m() % 2 != 0)
        throw std::invalid_argument("type B needs even circle sizes, got (" + std::to_string(p.n()) + "," +
                                    std::to_string(p.m()) + ")");
    return is_fixed_by(RotationPair{p.n(), p.m(), p.n() / 2, p.m() / 2}, p);
}

std::vector<AnnularPermutation> enumerate_anc_B(int n, int m, const ProfileFilter& filter,
                                                const EnumerationOptions& options)
{
    std::vector<AnnularPermutation> out;
    for (auto& p : enumerate_anc(2 * n, 2 * m, filter.doubled(), options))
        if (is_type_B(p))
            out.push_back(std::move(p));
    return out;
}

namespace {

void fill_matchings(std::vector<int>& img, int size, std::vector<std::vector<int>>& out)
{
    int first = 0;
    while (first < size && img[static_cast<std::size_t>(first)] != 0)
        ++first;
    if (first == size) {
        out.push_back(img);
        return;
    }
    for (int partner = first + 1; partner < size; ++partner) {
        if (img[static_cast<std::size_t>(partner)] != 0)
            continue;
        img[static_cast<std::size_t>(first)] = partner + 1;
        img[static_cast<std::size_t>(partner)] = first + 1;
        fill_matchings(img, size, out);
        img[static_cast<std::size_t>(first)] = 0;
        img[static_cast<std::size_t>(partner)] = 0;
    }
}

}  // namespace

std::vector<AnnularPermutation> enumerate_matchings(int n, int m)
{
    if (n < 1 || m < 1)
        throw std::invalid_argument("enumerate_matchings needs n, m >= 1");
    std::vector<AnnularPermutation> out;
    if ((n + m) % 2 != 0)
        return out;
    std::vector<int> img(static_cast<std::size_t>(n + m), 0);
    std::vector<std::vector<int>> all;
    fill_matchings(img, n + m, all);
    std::sort(all.begin(), all.end());
    for (auto& im : all) {
        AnnularPermutation p(n, m, Permutation(std::move(im)));
        if (is_connected_anc(p))
            out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Disc

bool is_noncrossing_disc(const Permutation& p)
{
    const int n = p.size();
    if (n == 0)
        return true;
    std::vector<int> g(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        g[static_cast<std::size_t>(i - 1)] = i == n ? 1 : i + 1;
    const Permutation composed = compose(p.inverse(), Permutation(std::move(g)));
    return p.cycle_count() + composed.cycle_count() == n + 1;
}

Partition cycle_type(const Permutation& p)
{
    std::vector<int> sizes;
    for (const auto& cyc : p.cycles())
        sizes.push_back(static_cast<int>(cyc.size()));
    return Partition(std::move(sizes));
}

std::vector<Permutation> enumerate_nc_disc(int n, const std::optional<Partition>& type,
                                           const EnumerationOptions& options)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_nc_disc needs n >= 1");
    check_bound(n, options);
    std::vector<int> g(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        g[static_cast<std::size_t>(i - 1)] = i == n ? 1 : i + 1;
    auto accept = [&](const int* img) {
        if (genus_sum(img, g.data(), n) != n + 1)
            return false;
        return !type || cycle_type(Permutation(std::vector<int>(img, img + n))) == *type;
    };
    std::vector<Permutation> out;
    for (auto& img : enumerate_images(n, resolve_workers(options.workers), accept))
        out.emplace_back(std::move(img));
    return out;
}

}  // namespace ancsieve
