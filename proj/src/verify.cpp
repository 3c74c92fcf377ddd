#include "ancsieve/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ancsieve/bijection.hpp"

namespace ancsieve {

using nlohmann::json;

void VerificationReport::record(CheckRecord rec)
{
    ++attempted;
    if (rec.passed)
        ++passed;
    else if (!first_failure)
        first_failure = rec;
    checks.push_back(std::move(rec));
}

void VerificationReport::merge(const VerificationReport& other)
{
    suite = suite.empty() ? other.suite : suite + "+" + other.suite;
    ranges[other.suite] = other.ranges;
    for (const auto& c : other.checks)
        record(c);
    division_faults += other.division_faults;
    seconds += other.seconds;
}

void to_json(json& j, const CheckRecord& c)
{
    j = json{{"check", c.check}, {"params", c.params}, {"passed", c.passed}};
    if (!c.passed) {
        j["expected"] = c.expected;
        j["actual"] = c.actual;
    }
}

json summary_json(const VerificationReport& r, bool include_timing)
{
    json j{{"summary", true},       {"suite", r.suite},   {"ranges", r.ranges},
           {"attempted", r.attempted}, {"passed", r.passed}, {"failed", r.failed()},
           {"division_faults", r.division_faults}};
    j["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
    if (include_timing)
        j["wall_time_s"] = r.seconds;
    return j;
}

std::string to_json_lines(const VerificationReport& r, bool include_timing, bool include_checks)
{
    std::string out;
    if (include_checks)
        for (const auto& c : r.checks) {
            json j = c;
            j["suite"] = r.suite;
            out += j.dump();
            out += '\n';
        }
    out += summary_json(r, include_timing).dump();
    out += '\n';
    return out;
}

namespace {

struct Outcome {
    bool pass;
    std::string expected;
    std::string actual;
};

std::string str(const Integer& v) { return v.get_str(); }
std::string str(long v) { return std::to_string(v); }
std::string str(const Rational& v) { return v.get_str(); }
std::string str(const QPolynomial& p) { return p.to_string(); }

template <class A, class B>
Outcome same(const A& expected, const B& actual)
{
    return {expected == actual, str(expected), str(actual)};
}

Outcome same_count(const Integer& expected, std::size_t actual)
{
    return same(expected, Integer(static_cast<unsigned long>(actual)));
}

class Suite {
public:
    explicit Suite(std::string name) : start_(std::chrono::steady_clock::now()) { report_.suite = std::move(name); }

    json& ranges() { return report_.ranges; }

    // Runs one check; exceptions become failures.
    void run(const std::string& check, json params, const std::function<Outcome()>& body)
    {
        CheckRecord rec{check, std::move(params), false, "", ""};
        try {
            Outcome o = body();
            rec.passed = o.pass;
            rec.expected = std::move(o.expected);
            rec.actual = std::move(o.actual);
        } catch (const DivisionWithRemainder& e) {
            ++report_.division_faults;
            rec.expected = "exact division";
            rec.actual = e.what();
        } catch (const InexactIntegerDivision& e) {
            ++report_.division_faults;
            rec.expected = "exact division";
            rec.actual = e.what();
        } catch (const std::exception& e) {
            rec.expected = "no error";
            rec.actual = e.what();
        }
        report_.record(std::move(rec));
    }

    // Evaluates a value that later checks depend on; on error a failed check
    // is recorded and nullopt returned.
    template <class T>
    std::optional<T> compute(const std::string& check, const json& params, const std::function<T()>& body)
    {
        std::optional<T> value;
        bool failed = false;
        run(check, params, [&]() -> Outcome {
            value = body();
            return {true, "", ""};
        });
        failed = !value.has_value();
        if (!failed) {
            // A successful evaluation is not itself a check.
            --report_.attempted;
            --report_.passed;
            report_.checks.pop_back();
        }
        return value;
    }

    VerificationReport finish()
    {
        report_.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(report_);
    }

private:
    VerificationReport report_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<std::pair<int, int>> annulus_sizes(int max_total, int min_total = 2)
{
    std::vector<std::pair<int, int>> out;
    for (int total = min_total; total <= max_total; ++total)
        for (int n = 1; n < total; ++n)
            out.emplace_back(n, total - n);
    return out;
}

std::vector<long> primitive_exponents(long d)
{
    std::vector<long> out;
    for (long j = 1; j <= d; ++j)
        if (std::gcd(j, d) == 1)
            out.push_back(j);
    return out;
}

json nm_params(int n, int m) { return json{{"n", n}, {"m", m}}; }

json rot_json(const RotationPair& r) { return json::array({r.ext_shift, r.int_shift}); }

std::string key5(int c, int r, int s, int R, int S)
{
    std::ostringstream os;
    os << "c=" << c << " r=" << r << " s=" << s << " R=" << R << " S=" << S;
    return os.str();
}

std::string key3(int c, int r, int s)
{
    std::ostringstream os;
    os << "c=" << c << " r=" << r << " s=" << s;
    return os.str();
}

std::string key1(int c) { return "c=" + std::to_string(c); }

// One level of the sieving hierarchy: keyed classes with their polynomial.
struct Level {
    std::string name;
    std::function<std::string(const CycleProfile&)> key;
    std::map<std::string, std::pair<json, QPolynomial>> classes;
};

std::vector<Level> csp_levels(Suite& suite, int n, int m, const std::vector<CycleProfile>& profiles)
{
    std::vector<Level> levels;
    levels.push_back({"kreweras", [](const CycleProfile& p) { return p.to_string(); }, {}});
    levels.push_back({"profile_sieving", [](const CycleProfile& p) { return p.to_string(); }, {}});
    levels.push_back(
        {"narayana1", [](const CycleProfile& p) { return key5(p.c, p.r, p.s, p.R, p.S); }, {}});
    levels.push_back({"narayana2", [](const CycleProfile& p) { return key3(p.c, p.r, p.s); }, {}});
    levels.push_back({"narayana3", [](const CycleProfile& p) { return key1(p.c); }, {}});
    levels.push_back({"catalan", [](const CycleProfile&) { return std::string("all"); }, {}});

    for (const auto& p : profiles) {
        json base = nm_params(n, m);
        auto add = [&](Level& level, json params, const std::function<QPolynomial()>& make) {
            const std::string k = level.key(p);
            if (level.classes.count(k))
                return;
            params["level"] = level.name;
            auto poly = suite.compute<QPolynomial>("polynomial", params, make);
            if (poly)
                level.classes.emplace(k, std::make_pair(params, std::move(*poly)));
        };
        json full = base;
        full["profile"] = p.to_string();
        add(levels[0], full, [&] { return annular_kreweras_q(p); });
        add(levels[1], full, [&] { return profile_sieving_q(p); });
        json p5 = base;
        p5.update(json{{"c", p.c}, {"r", p.r}, {"s", p.s}, {"R", p.R}, {"S", p.S}});
        add(levels[2], p5, [&] { return annular_narayana1_q(n, m, p.c, p.r, p.s, p.R, p.S); });
        json p3 = base;
        p3.update(json{{"c", p.c}, {"r", p.r}, {"s", p.s}});
        add(levels[3], p3, [&] { return annular_narayana2_q(n, m, p.c, p.r, p.s); });
        json p1 = base;
        p1["c"] = p.c;
        add(levels[4], p1, [&] { return annular_narayana3_q(n, m, p.c); });
        add(levels[5], base, [&] { return annular_catalan_q(n, m); });
    }
    return levels;
}

std::vector<CycleProfile> profiles_of(const std::vector<AnnularPermutation>& perms)
{
    std::vector<CycleProfile> out;
    out.reserve(perms.size());
    for (const auto& p : perms)
        out.push_back(profile_of(p));
    return out;
}

bool profile_divisible(const CycleProfile& p, int d)
{
    for (int v : {p.n, p.m, p.c, p.r, p.s, p.R, p.S})
        if (v % d != 0)
            return false;
    return is_divisible(p.alpha, d) && is_divisible(p.beta, d) && is_divisible(p.lam, d) &&
           is_divisible(p.mu, d);
}

}  // namespace

// ---------------------------------------------------------------------------

VerificationReport verify_csp_annular(int max_total, const EnumerationOptions& options)
{
    Suite suite("csp");
    suite.ranges() = json{{"max_total", max_total}};
    for (auto [n, m] : annulus_sizes(max_total)) {
        const auto perms = enumerate_anc(n, m, {}, options);
        const auto profs = profiles_of(perms);
        auto levels = csp_levels(suite, n, m, all_profiles(n, m));

        for (int d = 1; d <= std::min(n, m); ++d) {
            if (n % d != 0 || m % d != 0)
                continue;
            const auto rots = group_rotations_of_order(n, m, d);
            const auto js = primitive_exponents(d);

            // counts[level][key][rotation index]
            std::vector<std::map<std::string, std::vector<long>>> counts(levels.size());
            for (std::size_t li = 0; li < levels.size(); ++li)
                for (const auto& [k, _] : levels[li].classes)
                    counts[li][k].assign(rots.size(), 0);
            for (std::size_t ri = 0; ri < rots.size(); ++ri)
                for (std::size_t e = 0; e < perms.size(); ++e) {
                    if (!is_fixed_by(rots[ri], perms[e]))
                        continue;
                    for (std::size_t li = 0; li < levels.size(); ++li)
                        ++counts[li][levels[li].key(profs[e])][ri];
                }

            for (std::size_t li = 0; li < levels.size(); ++li) {
                for (const auto& [k, cls] : levels[li].classes) {
                    json params = cls.first;
                    params["d"] = d;
                    const auto& fixed = counts[li][k];
                    std::vector<std::optional<Integer>> values;
                    for (long j : js) {
                        json pj = params;
                        pj["j"] = j;
                        const CyclotomicValue v = eval_at_primitive_root(cls.second, d, j);
                        auto as_int = cyclotomic_as_integer(v);
                        values.push_back(as_int);
                        suite.run("integrality", pj, [&]() -> Outcome {
                            return {as_int.has_value(), "integer", v.to_string()};
                        });
                        if (!as_int)
                            continue;
                        for (std::size_t ri = 0; ri < rots.size(); ++ri) {
                            json pr = pj;
                            pr["rotation"] = rot_json(rots[ri]);
                            suite.run("fixed_points", pr, [&] { return same(*as_int, Integer(fixed[ri])); });
                        }
                    }
                    suite.run("well_defined", params, [&]() -> Outcome {
                        std::string all;
                        bool equal = true;
                        for (const auto& v : values) {
                            all += (all.empty() ? "" : ",") + (v ? v->get_str() : std::string("?"));
                            equal = equal && v && *v == *values.front();
                        }
                        return {equal, "equal integers for every primitive root", all};
                    });
                    suite.run("pair_independence", params, [&]() -> Outcome {
                        std::string all;
                        for (long f : fixed)
                            all += (all.empty() ? "" : ",") + std::to_string(f);
                        const bool equal = std::adjacent_find(fixed.begin(), fixed.end(), std::not_equal_to<>()) ==
                                           fixed.end();
                        return {equal, "equal counts for every rotation pair", all};
                    });
                }
            }
        }
    }
    return suite.finish();
}

VerificationReport verify_unequal_orders(int max_total, const EnumerationOptions& options)
{
    Suite suite("unequal");
    suite.ranges() = json{{"max_total", max_total}};
    for (auto [n, m] : annulus_sizes(max_total)) {
        const auto perms = enumerate_anc(n, m, {}, options);
        for (int k1 = 0; k1 < n; ++k1)
            for (int k2 = 0; k2 < m; ++k2) {
                const RotationPair rot{n, m, k1, k2};
                if (rot.is_annular())
                    continue;
                json params = nm_params(n, m);
                params["rotation"] = rot_json(rot);
                params["orders"] = json::array({rot.exterior_order(), rot.interior_order()});
                suite.run("no_fixed_points", params, [&] {
                    const auto fixed = std::count_if(perms.begin(), perms.end(),
                                                     [&](const AnnularPermutation& p) { return is_fixed_by(rot, p); });
                    return same(0L, static_cast<long>(fixed));
                });
            }
    }
    return suite.finish();
}

VerificationReport verify_fixed_counts(int max_total, const EnumerationOptions& options)
{
    Suite suite("rotation");
    suite.ranges() = json{{"max_total", max_total}};
    for (auto [n, m] : annulus_sizes(max_total)) {
        const auto perms = enumerate_anc(n, m, {}, options);
        const auto profs = profiles_of(perms);
        const auto classes = all_profiles(n, m);

        for (int k1 = 0; k1 < n; ++k1)
            for (int k2 = 0; k2 < m; ++k2) {
                const RotationPair rot{n, m, k1, k2};
                json params = nm_params(n, m);
                params["rotation"] = rot_json(rot);
                suite.run("profile_equivariance", params, [&]() -> Outcome {
                    for (std::size_t e = 0; e < perms.size(); ++e) {
                        const auto image = apply_rotation(rot, perms[e]);
                        if (!is_connected_anc(image) || profile_of(image) != profs[e])
                            return {false, profs[e].to_string(), perms[e].to_string() + " -> " + image.to_string()};
                    }
                    return {true, "", ""};
                });
            }

        for (int d = 1; d <= std::max(n, m); ++d) {
            for (const auto& rot : rotations_of_order(n, m, d)) {
                if (rot.is_rigid())
                    continue;
                json params = nm_params(n, m);
                params.update(json{{"d", d}, {"rotation", rot_json(rot)}});
                suite.run("non_rigid_no_fixed_points", params, [&] {
                    const auto fixed = std::count_if(perms.begin(), perms.end(),
                                                     [&](const AnnularPermutation& p) { return is_fixed_by(rot, p); });
                    return same(0L, static_cast<long>(fixed));
                });
            }
            const auto rots = group_rotations_of_order(n, m, d);
            if (rots.empty()) {
                for (const auto& p : classes) {
                    json params = nm_params(n, m);
                    params.update(json{{"d", d}, {"profile", p.to_string()}});
                    suite.run("formula_zero", params, [&] { return same(Integer(0), fixed_count_formula(p, d)); });
                }
                continue;
            }
            for (const auto& rot : rots) {
                std::map<CycleProfile, long> fixed;
                for (std::size_t e = 0; e < perms.size(); ++e)
                    if (is_fixed_by(rot, perms[e]))
                        ++fixed[profs[e]];
                for (const auto& p : classes) {
                    json params = nm_params(n, m);
                    params.update(json{{"d", d}, {"rotation", rot_json(rot)}, {"profile", p.to_string()}});
                    const long count = fixed.count(p) ? fixed.at(p) : 0L;
                    suite.run("fixed_count", params, [&] { return same(fixed_count_formula(p, d), Integer(count)); });
                    if (!profile_divisible(p, d))
                        suite.run("divisibility_zero", params, [&] { return same(Integer(0), fixed_count_formula(p, d)); });
                }
            }
        }
    }
    return suite.finish();
}

VerificationReport verify_sum_chain(int max_n, int max_m)
{
    Suite suite("sum_chain");
    suite.ranges() = json{{"max_n", max_n}, {"max_m", max_m}};
    for (int n = 1; n <= max_n; ++n)
        for (int m = 1; m <= max_m; ++m) {
            const int cmax = std::min(n, m);
            for (int c = 1; c <= cmax; ++c)
                for (int r = 0; r <= n; ++r)
                    for (int s = 0; s <= m; ++s)
                        for (int R = 0; R <= n - c; ++R)
                            for (int S = 0; S <= m - c; ++S) {
                                json params{{"n", n}, {"m", m}, {"c", c}, {"r", r}, {"s", s}, {"R", R}, {"S", S}};
                                suite.run("kreweras_to_narayana1", params, [&] {
                                    QPolynomial sum;
                                    for (const auto& alpha : par_set(R, r))
                                        for (const auto& beta : par_set(S, s))
                                            for (const auto& lam : par_set(n - R, c))
                                                for (const auto& mu : par_set(m - S, c))
                                                    sum += annular_kreweras_q(CycleProfile(n, m, alpha, beta, lam, mu));
                                    return same(annular_narayana1_q(n, m, c, r, s, R, S), sum);
                                });
                            }
            for (int c = 1; c <= cmax; ++c)
                for (int r = 0; r <= n; ++r)
                    for (int s = 0; s <= m; ++s) {
                        json params{{"n", n}, {"m", m}, {"c", c}, {"r", r}, {"s", s}};
                        suite.run("narayana1_to_narayana2", params, [&] {
                            QPolynomial sum;
                            for (int R = 0; R <= n - c; ++R)
                                for (int S = 0; S <= m - c; ++S)
                                    sum += annular_narayana1_q(n, m, c, r, s, R, S);
                            return same(annular_narayana2_q(n, m, c, r, s), sum);
                        });
                    }
            for (int c = 1; c <= cmax; ++c) {
                json params{{"n", n}, {"m", m}, {"c", c}};
                suite.run("narayana2_to_narayana3", params, [&] {
                    QPolynomial sum;
                    for (int r = 0; r <= n; ++r)
                        for (int s = 0; s <= m; ++s)
                            sum += annular_narayana2_q(n, m, c, r, s);
                    return same(annular_narayana3_q(n, m, c), sum);
                });
            }
            suite.run("narayana3_to_catalan", nm_params(n, m), [&] {
                QPolynomial sum;
                for (int c = 1; c <= cmax; ++c)
                    sum += annular_narayana3_q(n, m, c);
                return same(annular_catalan_q(n, m), sum);
            });
        }
    return suite.finish();
}

VerificationReport verify_lemmas(const LemmaBounds& b)
{
    Suite suite("lemmas");
    suite.ranges() = json{{"sum2_max_n", b.sum2_max_n},
                          {"sum3_max_n", b.sum3_max_n},
                          {"sum1_max", b.sum1_max},
                          {"vandermonde_max", b.vandermonde_max}};
    // q^e * p, failing on a negative exponent of a nonzero term.
    auto term = [](long e, const QPolynomial& p) {
        if (p.is_zero())
            return p;
        if (e < 0)
            throw std::domain_error("negative exponent " + std::to_string(e) + " on a nonzero term");
        return p.shifted(static_cast<std::size_t>(e));
    };

    for (int n = 1; n <= b.sum2_max_n; ++n)
        for (int k = 1; k <= n; ++k)
            suite.run("sum2", json{{"n", n}, {"k", k}}, [&] {
                QPolynomial sum;
                for (const auto& lam : par_set(n, k))
                    sum += term(static_cast<long>(k) * (n - k) - tau(lam), q_multinomial_partition(k, lam));
                return same(q_binomial(n - 1, k - 1), sum);
            });

    for (int n = 0; n <= b.sum3_max_n; ++n)
        for (int r = 0; r <= n; ++r)
            for (int c = 0; c <= n; ++c)
                suite.run("sum3", json{{"n", n}, {"r", r}, {"c", c}}, [&] {
                    QPolynomial sum;
                    for (int R = 0; R <= n; ++R)
                        sum += term(static_cast<long>(r) * (n - c - R), q_binomial_ext(R - 1, r - 1) * q_binomial(n - R, c));
                    return same(q_binomial(n, r + c), sum);
                });

    for (int n = 0; n <= b.sum1_max; ++n)
        for (int m = 0; m <= b.sum1_max; ++m)
            for (int k = 0; k <= b.sum1_max; ++k) {
                if (n + m + k == 0)
                    continue;  // both sides carry [0]_q / [0]_q
                suite.run("sum1", json{{"n", n}, {"m", m}, {"k", k}}, [&] {
                    QPolynomial sum;
                    for (int c = 0; c <= std::min(n, m); ++c)
                        sum += term(static_cast<long>(c) * (c - 1 + k), q_int(2 * c + k) * q_binomial(2 * n + k, n - c) *
                                                                           q_binomial(2 * m + k, m - c));
                    QPolynomial rhs = exact_div(q_int(n + k) * q_int(m + k) * q_binomial(2 * n + k, n + k) *
                                                    q_binomial(2 * m + k, m + k),
                                                q_int(n + m + k));
                    return same(rhs, sum);
                });
            }

    for (int m = 0; m <= b.vandermonde_max; ++m)
        for (int n = 0; n <= b.vandermonde_max; ++n)
            for (int k = 0; k <= m + n; ++k)
                suite.run("q_vandermonde", json{{"m", m}, {"n", n}, {"k", k}}, [&] {
                    QPolynomial sum;
                    for (int i = 0; i <= k; ++i)
                        sum += term(static_cast<long>(i) * (m - k + i), q_binomial(m, k - i) * q_binomial(n, i));
                    return same(q_binomial(m + n, k), sum);
                });
    return suite.finish();
}

VerificationReport verify_polynomiality(const PolynomialityBounds& b)
{
    Suite suite("polynomiality");
    suite.ranges() = json{
        {"max_N", b.max_N}, {"max_total", b.max_total}, {"max_nm", b.max_nm}, {"disc_max_n", b.disc_max_n}};
    auto natural = [](const QPolynomial& p) -> Outcome {
        const bool ok = p.has_integer_coefficients() && p.has_nonnegative_coefficients();
        return {ok, "nonnegative integer coefficients", p.to_string()};
    };
    auto polynomial = [](const QPolynomial& p) -> Outcome { return {true, "", p.to_string()}; };

    for (int n = 1; n <= b.max_N; ++n)
        for (int k = 1; k <= n; ++k)
            for (const auto& lam : par_set(n, k))
                suite.run("quotient_n_over_k", json{{"n", n}, {"k", k}, {"lambda", lam.to_string()}}, [&] {
                    return natural(exact_div(q_int(n) * q_multinomial_partition(k, lam), q_int(k)));
                });
    for (int N = 1; N <= b.max_N; ++N)
        for (int n = 0; n <= N; ++n)
            for (int k = 0; k <= n; ++k)
                for (const auto& lam : par_set(n, k))
                    suite.run("quotient_N_minus_n_over_N",
                              json{{"N", N}, {"n", n}, {"k", k}, {"lambda", lam.to_string()}}, [&] {
                                  return natural(exact_div(
                                      q_int(N - n) * q_binomial(N, k) * q_multinomial_partition(k, lam), q_int(N)));
                              });

    for (auto [n, m] : annulus_sizes(b.max_total))
        for (const auto& p : all_profiles(n, m)) {
            json params = nm_params(n, m);
            params["profile"] = p.to_string();
            suite.run("kreweras", params, [&] { return polynomial(annular_kreweras_q(p)); });
            suite.run("profile_sieving", params, [&] { return polynomial(profile_sieving_q(p)); });
            suite.run("kreweras_at_one", params, [&] {
                return same(Rational(count_anc(p)), annular_kreweras_q(p).at_one());
            });
            for (int d = 1; d <= std::min(n, m); ++d) {
                json pd = params;
                pd["d"] = d;
                suite.run("fixed_count_formula", pd, [&]() -> Outcome {
                    const Integer v = fixed_count_formula(p, d);
                    return {v >= 0, "nonnegative integer", v.get_str()};
                });
            }
        }
    for (int n = 1; n <= b.max_nm; ++n)
        for (int m = 1; m <= b.max_nm; ++m) {
            for (int c = 0; c <= std::min(n, m) + 1; ++c) {
                for (int r = 0; r <= n; ++r)
                    for (int s = 0; s <= m; ++s) {
                        for (int R = 0; R <= n; ++R)
                            for (int S = 0; S <= m; ++S)
                                suite.run("narayana1",
                                          json{{"n", n}, {"m", m}, {"c", c}, {"r", r}, {"s", s}, {"R", R}, {"S", S}},
                                          [&] { return polynomial(annular_narayana1_q(n, m, c, r, s, R, S)); });
                        suite.run("narayana2", json{{"n", n}, {"m", m}, {"c", c}, {"r", r}, {"s", s}},
                                  [&] { return polynomial(annular_narayana2_q(n, m, c, r, s)); });
                    }
                suite.run("narayana3", json{{"n", n}, {"m", m}, {"c", c}},
                          [&] { return polynomial(annular_narayana3_q(n, m, c)); });
            }
            suite.run("catalan", nm_params(n, m), [&] { return polynomial(annular_catalan_q(n, m)); });
            suite.run("catalan_at_one", nm_params(n, m), [&] {
                return same(Rational(count_anc(n, m)), annular_catalan_q(n, m).at_one());
            });
            suite.run("count_type_b", nm_params(n, m), [&]() -> Outcome {
                const Integer v = count_anc_B(n, m);
                return {v > 0, "positive integer", v.get_str()};
            });
        }
    for (int n = 1; n <= b.disc_max_n; ++n) {
        suite.run("catalan_disc", json{{"n", n}}, [&] { return natural(catalan_q(n)); });
        for (int k = 0; k <= n; ++k) {
            suite.run("narayana_disc", json{{"n", n}, {"k", k}}, [&] { return natural(narayana_q(n, k)); });
            for (const auto& lam : par_set(n, k)) {
                json params{{"n", n}, {"lambda", lam.to_string()}};
                suite.run("kreweras_disc", params, [&] { return natural(kreweras_q(lam)); });
                suite.run("bessis_reiner", params, [&] { return natural(bessis_reiner_X(lam)); });
            }
        }
    }
    return suite.finish();
}

VerificationReport verify_disc_identities(const DiscBounds& b, const EnumerationOptions& options)
{
    Suite suite("identities");
    suite.ranges() = json{{"count_max_n", b.count_max_n}, {"identity_max_n", b.identity_max_n}, {"csp_max_n", b.csp_max_n}};

    for (int n = 1; n <= b.count_max_n; ++n) {
        const auto perms = enumerate_nc_disc(n, std::nullopt, options);
        std::map<int, long> by_k;
        std::map<Partition, long> by_type;
        for (const auto& p : perms) {
            ++by_k[p.cycle_count()];
            ++by_type[cycle_type(p)];
        }
        suite.run("disc_catalan_count", json{{"n", n}}, [&] { return same_count(catalan(n), perms.size()); });
        for (int k = 1; k <= n; ++k) {
            suite.run("disc_narayana_count", json{{"n", n}, {"k", k}},
                      [&] { return same(narayana(n, k), Integer(by_k[k])); });
            for (const auto& lam : par_set(n, k))
                suite.run("disc_kreweras_count", json{{"n", n}, {"lambda", lam.to_string()}},
                          [&] { return same(kreweras(lam), Integer(by_type[lam])); });
        }
    }

    for (int n = 1; n <= b.identity_max_n; ++n) {
        QPolynomial total;
        for (int k = 0; k <= n; ++k) {
            suite.run("kreweras_q_sum", json{{"n", n}, {"k", k}}, [&] {
                QPolynomial sum;
                for (const auto& lam : par_set(n, k))
                    sum += kreweras_q(lam);
                return same(narayana_q(n, k), sum);
            });
        }
        suite.run("narayana_q_sum", json{{"n", n}}, [&] {
            QPolynomial sum;
            for (int k = 0; k <= n; ++k)
                sum += narayana_q(n, k);
            return same(catalan_q(n), sum);
        });
    }

    for (int n = 1; n <= b.csp_max_n; ++n)
        for (int k = 1; k <= n; ++k)
            for (const auto& lam : par_set(n, k)) {
                const auto perms = enumerate_nc_disc(n, lam, options);
                auto X = suite.compute<QPolynomial>("polynomial", json{{"n", n}, {"lambda", lam.to_string()}},
                                                    [&] { return bessis_reiner_X(lam); });
                if (!X)
                    continue;
                for (int t = 0; t < n; ++t) {
                    const long g = std::gcd(n, t);
                    const long d = n / g;
                    const long j = d == 1 ? 1 : t / g;
                    json params{{"n", n}, {"lambda", lam.to_string()}, {"shift", t}, {"d", d}, {"j", j}};
                    suite.run("bessis_reiner_csp", params, [&]() -> Outcome {
                        long fixed = 0;
                        for (const auto& p : perms) {
                            bool same_perm = true;
                            for (int x = 1; x <= n && same_perm; ++x)
                                same_perm = p((x - 1 + t) % n + 1) == (p(x) - 1 + t) % n + 1;
                            fixed += same_perm;
                        }
                        const CyclotomicValue v = eval_at_primitive_root(*X, d, j);
                        const auto as_int = cyclotomic_as_integer(v);
                        return {as_int && *as_int == fixed, std::to_string(fixed), v.to_string()};
                    });
                }
            }
    return suite.finish();
}

namespace {

// Grouped counts of a list of profiles at every granularity.
struct Tallies {
    std::map<CycleProfile, long> full;
    std::map<std::array<int, 5>, long> n1;
    std::map<std::array<int, 3>, long> n2;
    std::map<int, long> n3;
    long total = 0;

    void add(const CycleProfile& p)
    {
        ++full[p];
        ++n1[{p.c, p.r, p.s, p.R, p.S}];
        ++n2[{p.c, p.r, p.s}];
        ++n3[p.c];
        ++total;
    }
    template <class M, class K>
    static long get(const M& map, const K& k)
    {
        auto it = map.find(k);
        return it == map.end() ? 0 : it->second;
    }
};

// Checks tallies against count formulas over the full parameter grid of
// the (n,m)-annulus.
template <class Total, class C1, class C3, class C5, class Full>
void check_granularities(Suite& suite, const std::string& prefix, int n, int m, const Tallies& t, Total total, C1 by_c,
                         C3 by_crs, C5 by_crsRS, Full by_profile)
{
    const json base = nm_params(n, m);
    suite.run(prefix + "total", base, [&] { return same(total(), Integer(t.total)); });
    for (int c = 1; c <= std::min(n, m) + 1; ++c) {
        json pc = base;
        pc["c"] = c;
        suite.run(prefix + "by_c", pc, [&] { return same(by_c(c), Integer(Tallies::get(t.n3, c))); });
        for (int r = 0; r <= n; ++r)
            for (int s = 0; s <= m; ++s) {
                json p3 = pc;
                p3.update(json{{"r", r}, {"s", s}});
                suite.run(prefix + "by_c_r_s", p3, [&] {
                    return same(by_crs(c, r, s), Integer(Tallies::get(t.n2, std::array<int, 3>{c, r, s})));
                });
                for (int R = 0; R <= n - c; ++R)
                    for (int S = 0; S <= m - c; ++S) {
                        json p5 = p3;
                        p5.update(json{{"R", R}, {"S", S}});
                        suite.run(prefix + "by_c_r_s_R_S", p5, [&] {
                            return same(by_crsRS(c, r, s, R, S),
                                        Integer(Tallies::get(t.n1, std::array<int, 5>{c, r, s, R, S})));
                        });
                    }
            }
    }
    std::set<CycleProfile> keys;
    for (const auto& p : all_profiles(n, m))
        keys.insert(p);
    for (const auto& [p, _] : t.full)
        keys.insert(p);
    for (const auto& p : keys) {
        json pp = base;
        pp["profile"] = p.to_string();
        suite.run(prefix + "by_profile", pp, [&] { return same(by_profile(p), Integer(Tallies::get(t.full, p))); });
    }
}

}  // namespace

VerificationReport verify_anc_counts(int max_total, const EnumerationOptions& options)
{
    Suite suite("counts");
    suite.ranges() = json{{"max_total", max_total}};
    for (auto [n, m] : annulus_sizes(max_total)) {
        const auto perms = enumerate_anc(n, m, {}, options);
        Tallies t;
        for (const auto& p : perms)
            t.add(profile_of(p));
        suite.run("orientation", nm_params(n, m), [&]() -> Outcome {
            for (const auto& p : perms)
                for (const auto& cyc : p.cycles())
                    if (!is_clockwise_cycle(cyc, n, m))
                        return {false, "every cycle clockwise", p.to_string()};
            return {true, "", ""};
        });
        const int nn = n, mm = m;
        check_granularities(
            suite, "", n, m, t, [&] { return count_anc(nn, mm); }, [&](int c) { return count_anc(nn, mm, c); },
            [&](int c, int r, int s) { return count_anc(nn, mm, c, r, s); },
            [&](int c, int r, int s, int R, int S) { return count_anc(nn, mm, c, r, s, R, S); },
            [](const CycleProfile& p) { return count_anc(p); });
    }
    return suite.finish();
}

VerificationReport verify_type_b_counts(int max_half, const EnumerationOptions& options)
{
    Suite suite("type_b");
    suite.ranges() = json{{"max_half", max_half}};
    for (int n = 1; n <= max_half; ++n)
        for (int m = 1; m <= max_half; ++m) {
            const auto perms = enumerate_anc_B(n, m, {}, options);
            Tallies t;
            bool all_divisible = true;
            std::string witness;
            for (const auto& p : perms) {
                const CycleProfile full = profile_of(p);
                if (!profile_divisible(full, 2)) {
                    all_divisible = false;
                    witness = p.to_string();
                    continue;
                }
                t.add(CycleProfile(n, m, divide(full.alpha, 2), divide(full.beta, 2), divide(full.lam, 2),
                                   divide(full.mu, 2)));
            }
            suite.run("type_b_divisible", nm_params(n, m),
                      [&] { return Outcome{all_divisible, "every profile divisible by 2", witness}; });
            const int nn = n, mm = m;
            check_granularities(
                suite, "type_b_", n, m, t, [&] { return count_anc_B(nn, mm); },
                [&](int c) { return count_anc_B(nn, mm, c); },
                [&](int c, int r, int s) { return count_anc_B(nn, mm, c, r, s); },
                [&](int c, int r, int s, int R, int S) { return count_anc_B(nn, mm, c, r, s, R, S); },
                [](const CycleProfile& p) { return count_anc_B(p); });
        }
    return suite.finish();
}

VerificationReport verify_matching_counts(int max_total, const EnumerationOptions& options)
{
    Suite suite("matchings");
    suite.ranges() = json{{"max_total", max_total}};
    for (auto [n, m] : annulus_sizes(max_total)) {
        const auto matchings = enumerate_matchings(n, m);
        const json base = nm_params(n, m);
        if ((n - m) % 2 != 0) {
            suite.run("matching_parity_empty", base, [&] { return same(0L, static_cast<long>(matchings.size())); });
            suite.run("matching_parity_error", base, [&]() -> Outcome {
                try {
                    matching_total(n, m);
                } catch (const ParityError&) {
                    return {true, "", ""};
                }
                return {false, "ParityError", "no error"};
            });
            continue;
        }
        std::map<int, long> by_c;
        for (const auto& p : matchings)
            ++by_c[connected_cycle_count(p)];
        suite.run("matching_total", base, [&] { return same_count(matching_total(n, m), matchings.size()); });
        for (int c = 1; c <= std::min(n, m) + 2; ++c) {
            json pc = base;
            pc["c"] = c;
            if ((c - n) % 2 != 0) {
                suite.run("matching_count_parity", pc, [&]() -> Outcome {
                    try {
                        matching_count(n, m, c);
                    } catch (const ParityError&) {
                        return {by_c[c] == 0, "0", std::to_string(by_c[c])};
                    }
                    return {false, "ParityError", "no error"};
                });
                continue;
            }
            suite.run("matching_count", pc, [&] { return same(matching_count(n, m, c), Integer(by_c[c])); });
        }
        if (n + m <= std::min(8, options.max_total)) {
            suite.run("matching_cross_check", base, [&]() -> Outcome {
                std::vector<AnnularPermutation> filtered;
                for (const auto& p : enumerate_anc(n, m, {}, options)) {
                    const auto cycles = p.cycles();
                    if (std::all_of(cycles.begin(), cycles.end(), [](const auto& c) { return c.size() == 2; }))
                        filtered.push_back(p);
                }
                return {filtered == matchings, std::to_string(filtered.size()) + " matchings",
                        std::to_string(matchings.size()) + " matchings"};
            });
        }
    }
    return suite.finish();
}

VerificationReport verify_counts(const CountBounds& b, const EnumerationOptions& options)
{
    VerificationReport r = verify_anc_counts(b.max_total, options);
    r.merge(verify_type_b_counts(b.type_b_max_half, options));
    r.merge(verify_matching_counts(b.matching_max_total, options));
    r.suite = "counts";
    return r;
}

VerificationReport verify_bijection(int max_total, const EnumerationOptions& options)
{
    Suite suite("bijection");
    suite.ranges() = json{{"max_total", max_total}, {"d", json::array({1, 2})}};
    for (int d : {1, 2})
        for (auto [n, m] : annulus_sizes(max_total)) {
            if (n % d != 0 || m % d != 0)
                continue;
            const RotationPair rot = rotations_of_order(n, m, d).front();
            std::map<CycleProfile, long> fixed;
            std::map<CycleProfile, std::vector<BijectionTuple>> images;
            for (const auto& p : enumerate_anc(n, m, {}, options)) {
                if (!is_fixed_by(rot, p))
                    continue;
                const CycleProfile prof = profile_of(p);
                ++fixed[prof];
                for (const auto& cyc : p.cycles()) {
                    const bool meets_ext = std::any_of(cyc.begin(), cyc.end(), [&](int x) { return x <= n; });
                    const bool meets_int = std::any_of(cyc.begin(), cyc.end(), [&](int x) { return x > n; });
                    if (!meets_ext || !meets_int)
                        continue;
                    json params = nm_params(n, m);
                    params.update(json{{"d", d}, {"perm", p.to_string()}});
                    auto t = suite.compute<BijectionTuple>("bijection_phi", params,
                                                           [&] { return bijection_phi(cyc, p, d); });
                    if (t)
                        images[prof].push_back(std::move(*t));
                }
            }
            for (const auto& prof : all_profiles(n, m)) {
                if (!profile_divisible(prof, d))
                    continue;
                json params = nm_params(n, m);
                params.update(json{{"d", d}, {"profile", prof.to_string()}});
                const auto& img = images[prof];
                const long count = fixed.count(prof) ? fixed.at(prof) : 0L;
                suite.run("image_in_target", params, [&]() -> Outcome {
                    for (const auto& t : img)
                        if (!in_target_set(t, prof, d))
                            return {false, "tuple in target set", json(t).dump()};
                    return {true, "", ""};
                });
                suite.run("injective", params, [&] {
                    const std::set<BijectionTuple> distinct(img.begin(), img.end());
                    return same(static_cast<long>(img.size()), static_cast<long>(distinct.size()));
                });
                suite.run("size_A", params, [&] { return same(Integer(Integer(prof.c) * count), Integer(static_cast<long>(img.size()))); });
                suite.run("size_B", params, [&] { return same_count(target_set_size(prof, d), img.size()); });
                suite.run("fixed_count", params, [&] { return same(fixed_count_formula(prof, d), Integer(count)); });
            }
        }
    return suite.finish();
}

}  // namespace ancsieve
