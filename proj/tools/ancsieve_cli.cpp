#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ancsieve/annulus.hpp"
#include "ancsieve/formulas.hpp"
#include "ancsieve/render.hpp"
#include "ancsieve/verify.hpp"

using namespace ancsieve;

namespace {

// Exit status for bad input.
constexpr int kUsage = 2;

struct ProfileArgs {
    std::optional<int> c, r, s, R, S;
    std::optional<std::string> alpha, beta, lam, mu;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--c", c, "number of connected cycles");
        cmd->add_option("--r", r, "number of exterior cycles");
        cmd->add_option("--s", s, "number of interior cycles");
        cmd->add_option("--R", R, "total size of the exterior cycles");
        cmd->add_option("--S", S, "total size of the interior cycles");
        cmd->add_option("--alpha", alpha, "exterior cycle type, e.g. (2,1)");
        cmd->add_option("--beta", beta, "interior cycle type");
        cmd->add_option("--lam", lam, "exterior sizes of the connected cycles");
        cmd->add_option("--mu", mu, "interior sizes of the connected cycles");
    }

    bool has_partitions() const { return alpha || beta || lam || mu; }

    CycleProfile profile(int n, int m) const
    {
        if (!lam || !mu)
            throw InvalidProfile("a full profile needs at least --lam and --mu");
        CycleProfile p(n, m, Partition::parse(alpha.value_or("()")), Partition::parse(beta.value_or("()")),
                       Partition::parse(*lam), Partition::parse(*mu));
        for (auto [given, derived, name] : {std::tuple{c, p.c, "c"},
                                            {r, p.r, "r"},
                                            {s, p.s, "s"},
                                            {R, p.R, "R"},
                                            {S, p.S, "S"}})
            if (given && *given != derived)
                throw InvalidProfile(std::string("--") + name + " = " + std::to_string(*given) +
                                     " disagrees with the partitions (" + std::to_string(derived) + ")");
        return p;
    }

    ProfileFilter filter() const
    {
        ProfileFilter f;
        f.c = c;
        f.r = r;
        f.s = s;
        f.R = R;
        f.S = S;
        if (alpha)
            f.alpha = Partition::parse(*alpha);
        if (beta)
            f.beta = Partition::parse(*beta);
        if (lam)
            f.lam = Partition::parse(*lam);
        if (mu)
            f.mu = Partition::parse(*mu);
        return f;
    }
};

int need(const std::optional<int>& v, const char* name)
{
    if (!v)
        throw InvalidProfile(std::string("missing --") + name);
    return *v;
}

// ---------------------------------------------------------------------------

struct PolyArgs {
    std::string which;
    std::optional<int> n, m, k;
    std::optional<std::string> lambda, at_root;
    bool at_one = false;
    ProfileArgs profile;
};

QPolynomial build_poly(const PolyArgs& a)
{
    const auto& p = a.profile;
    if (a.which == "kre")
        return annular_kreweras_q(p.profile(need(a.n, "n"), need(a.m, "m")));
    if (a.which == "nara1")
        return annular_narayana1_q(need(a.n, "n"), need(a.m, "m"), need(p.c, "c"), need(p.r, "r"), need(p.s, "s"),
                                   need(p.R, "R"), need(p.S, "S"));
    if (a.which == "nara2")
        return annular_narayana2_q(need(a.n, "n"), need(a.m, "m"), need(p.c, "c"), need(p.r, "r"), need(p.s, "s"));
    if (a.which == "nara3")
        return annular_narayana3_q(need(a.n, "n"), need(a.m, "m"), need(p.c, "c"));
    if (a.which == "cat")
        return annular_catalan_q(need(a.n, "n"), need(a.m, "m"));
    if (a.which == "cat-disc")
        return catalan_q(need(a.n, "n"));
    if (a.which == "nara-disc") {
        const int n = need(a.n, "n"), k = need(a.k, "k");
        if (n < 1 || k < 0 || k > n)
            throw InvalidProfile("nara-disc needs 0 <= k <= n and n >= 1");
        return narayana_q(n, k);
    }
    if (!a.lambda)
        throw InvalidProfile("missing --lambda");
    const Partition lam = Partition::parse(*a.lambda);
    if (lam.empty())
        throw InvalidProfile("--lambda must be a nonempty partition");
    if (a.n && *a.n != lam.weight())
        throw InvalidProfile("--n must equal the weight of --lambda");
    return a.which == "kre-disc" ? kreweras_q(lam) : bessis_reiner_X(lam);
}

int run_poly(const PolyArgs& a)
{
    const QPolynomial poly = build_poly(a);
    if (a.at_root) {
        const std::string spec = *a.at_root;
        const auto comma = spec.find(',');
        const long d = std::stol(spec.substr(0, comma));
        const long j = comma == std::string::npos ? 1 : std::stol(spec.substr(comma + 1));
        if (d < 1)
            throw std::invalid_argument("--at-root needs d >= 1");
        std::cout << eval_at_primitive_root(poly, d, j).to_string() << '\n';
        return 0;
    }
    if (a.at_one) {
        std::cout << poly.at_one().get_str() << '\n';
        return 0;
    }
    nlohmann::json j = poly;
    std::cout << poly.to_string() << '\n' << j.dump() << '\n';
    return 0;
}

// ---------------------------------------------------------------------------

struct CountArgs {
    int n = 0, m = 0;
    bool type_b = false, matchings = false, check = false;
    int max_total = 10;
    ProfileArgs profile;
};

Integer closed_form(const CountArgs& a)
{
    const auto& p = a.profile;
    if (a.matchings)
        return p.c ? matching_count(a.n, a.m, *p.c) : matching_total(a.n, a.m);
    const bool B = a.type_b;
    if (p.has_partitions()) {
        const CycleProfile prof = p.profile(a.n, a.m);
        return B ? count_anc_B(prof) : count_anc(prof);
    }
    if (p.R || p.S) {
        const int c = need(p.c, "c"), r = need(p.r, "r"), s = need(p.s, "s"), R = need(p.R, "R"),
                  S = need(p.S, "S");
        return B ? count_anc_B(a.n, a.m, c, r, s, R, S) : count_anc(a.n, a.m, c, r, s, R, S);
    }
    if (p.r || p.s) {
        const int c = need(p.c, "c"), r = need(p.r, "r"), s = need(p.s, "s");
        return B ? count_anc_B(a.n, a.m, c, r, s) : count_anc(a.n, a.m, c, r, s);
    }
    if (p.c)
        return B ? count_anc_B(a.n, a.m, *p.c) : count_anc(a.n, a.m, *p.c);
    return B ? count_anc_B(a.n, a.m) : count_anc(a.n, a.m);
}

std::size_t enumeration_count(const CountArgs& a)
{
    EnumerationOptions opt;
    opt.max_total = a.max_total;
    if (a.matchings) {
        if (a.n + a.m > a.max_total)
            throw BoundExceeded("n + m exceeds the enumeration bound " + std::to_string(a.max_total));
        std::size_t count = 0;
        for (const auto& p : enumerate_matchings(a.n, a.m))
            count += !a.profile.c || connected_cycle_count(p) == *a.profile.c;
        return count;
    }
    const ProfileFilter f = a.profile.filter();
    return a.type_b ? enumerate_anc_B(a.n, a.m, f, opt).size() : enumerate_anc(a.n, a.m, f, opt).size();
}

int run_count(const CountArgs& a)
{
    if (a.n < 1 || a.m < 1)
        throw InvalidProfile("--n and --m must be positive");
    const Integer value = closed_form(a);
    if (!a.check) {
        std::cout << value.get_str() << '\n';
        return 0;
    }
    const std::size_t found = enumeration_count(a);
    const bool ok = value == Integer(static_cast<unsigned long>(found));
    std::cout << value.get_str() << " (enumeration: " << found << ", " << (ok ? "OK" : "MISMATCH") << ")\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct EnumArgs {
    int n = 0, m = 0;
    bool matchings = false;
    std::optional<int> fixed_by;
    std::string format = "cycles";
    int max_total = 10;
    ProfileArgs profile;
};

int run_enum(const EnumArgs& a)
{
    if (a.n < 1 || a.m < 1)
        throw InvalidProfile("--n and --m must be positive");
    EnumerationOptions opt;
    opt.max_total = a.max_total;
    const ProfileFilter f = a.profile.filter();
    std::vector<AnnularPermutation> perms;
    if (a.matchings) {
        if (a.n + a.m > a.max_total)
            throw BoundExceeded("n + m exceeds the enumeration bound " + std::to_string(a.max_total));
        for (auto& p : enumerate_matchings(a.n, a.m))
            if (f.matches(profile_of(p)))
                perms.push_back(std::move(p));
    } else {
        perms = enumerate_anc(a.n, a.m, f, opt);
    }
    if (a.fixed_by) {
        const int d = *a.fixed_by;
        if (d < 1 || a.n % d != 0 || a.m % d != 0)
            throw InvalidProfile("--fixed-by d needs d to divide both n and m");
        const RotationPair rot{a.n, a.m, a.n / d, a.m / d};
        std::erase_if(perms, [&](const AnnularPermutation& p) { return !is_fixed_by(rot, p); });
    }
    for (const auto& p : perms) {
        if (a.format == "json")
            std::cout << nlohmann::json(p).dump() << '\n';
        else
            std::cout << p.to_string() << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    std::optional<int> max_total, max_n, max_m, max_N;
    bool timing = false;
    bool summary_only = false;
};

int run_verify(const VerifyArgs& a)
{
    auto bound = [&](const std::optional<int>& given, int fallback) {
        if (given)
            return *given;
        return a.max_total ? std::min(fallback, *a.max_total) : fallback;
    };
    const int total8 = a.max_total.value_or(8);
    const int total9 = a.max_total.value_or(9);
    const bool all = a.suite == "all";
    std::vector<VerificationReport> reports;

    if (all || a.suite == "csp")
        reports.push_back(verify_csp_annular(total8));
    if (all || a.suite == "unequal")
        reports.push_back(verify_unequal_orders(total8));
    if (all || a.suite == "rotation")
        reports.push_back(verify_fixed_counts(total8));
    if (all || a.suite == "counts") {
        CountBounds b;
        b.max_total = total9;
        b.type_b_max_half = a.max_total ? std::min(2, *a.max_total / 2) : 2;
        b.matching_max_total = a.max_total.value_or(10);
        reports.push_back(verify_counts(b));
    }
    if (all || a.suite == "identities") {
        reports.push_back(verify_sum_chain(bound(a.max_n, 6), bound(a.max_m, 6)));
        DiscBounds d;
        d.count_max_n = bound(a.max_n, 7);
        d.identity_max_n = bound(a.max_n, 8);
        d.csp_max_n = bound(a.max_n, 6);
        reports.push_back(verify_disc_identities(d));
    }
    if (all || a.suite == "lemmas") {
        LemmaBounds l;
        l.sum2_max_n = bound(a.max_n, 10);
        l.sum3_max_n = bound(a.max_n, 10);
        l.sum1_max = bound(a.max_n, 6);
        l.vandermonde_max = bound(a.max_n, 8);
        reports.push_back(verify_lemmas(l));
    }
    if (all || a.suite == "polynomiality") {
        PolynomialityBounds p;
        p.max_N = bound(a.max_N, 12);
        p.max_total = total9;
        p.max_nm = bound(a.max_n, 6);
        p.disc_max_n = bound(a.max_n, 8);
        reports.push_back(verify_polynomiality(p));
    }
    if (all || a.suite == "bijection")
        reports.push_back(verify_bijection(a.max_total.value_or(6)));

    bool ok = true;
    for (const auto& r : reports) {
        std::cout << to_json_lines(r, a.timing, !a.summary_only);
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct RenderArgs {
    int n = 0, m = 0;
    std::string perm;
    std::string output;
    int size = 400;
    double stroke_width = 1.5;
    int font_size = 12;
    bool force = false;
};

int run_render(const RenderArgs& a)
{
    if (a.n < 1 || a.m < 1)
        throw InvalidProfile("--n and --m must be positive");
    RenderSpec spec;
    spec.n = a.n;
    spec.m = a.m;
    spec.perm = Permutation::parse(a.n + a.m, a.perm);
    spec.size = a.size;
    spec.stroke_width = a.stroke_width;
    spec.font_size = a.font_size;
    spec.force = a.force;
    const RenderResult result = render_svg(spec);
    for (const auto& w : result.warnings)
        std::cerr << "warning: " << w << '\n';
    if (a.output.empty() || a.output == "-") {
        std::cout << result.svg;
        return 0;
    }
    std::ofstream out(a.output, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + a.output + " for writing");
    out << result.svg;
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Connected annular noncrossing permutations: counts, q-polynomials, sieving checks"};
    app.require_subcommand(1);

    PolyArgs poly;
    auto* poly_cmd = app.add_subcommand("poly", "print a q-polynomial");
    poly_cmd->add_option("--which", poly.which)
        ->required()
        ->check(CLI::IsMember({"kre", "nara1", "nara2", "nara3", "cat", "kre-disc", "nara-disc", "cat-disc",
                               "bessis-reiner"}));
    poly_cmd->add_option("--n", poly.n);
    poly_cmd->add_option("--m", poly.m);
    poly_cmd->add_option("--k", poly.k, "number of blocks (nara-disc)");
    poly_cmd->add_option("--lambda", poly.lambda, "cycle type (kre-disc, bessis-reiner)");
    poly_cmd->add_option("--at-root", poly.at_root, "evaluate at zeta_d^j, given as d or d,j");
    poly_cmd->add_flag("--at-one", poly.at_one, "evaluate at q = 1");
    poly.profile.attach(poly_cmd);

    CountArgs count;
    auto* count_cmd = app.add_subcommand("count", "closed-form counts");
    count_cmd->add_option("--n", count.n)->required();
    count_cmd->add_option("--m", count.m)->required();
    count_cmd->add_flag("--type-b", count.type_b, "count inside anc(2n,2m) fixed by the order-2 rotation");
    count_cmd->add_flag("--matchings", count.matchings, "count connected matchings");
    count_cmd->add_flag("--check", count.check, "cross-check against brute-force enumeration");
    count_cmd->add_option("--max-total", count.max_total, "enumeration bound on the ambient n + m");
    count.profile.attach(count_cmd);

    EnumArgs en;
    auto* enum_cmd = app.add_subcommand("enum", "list permutations in canonical order");
    enum_cmd->add_option("--n", en.n)->required();
    enum_cmd->add_option("--m", en.m)->required();
    enum_cmd->add_flag("--matchings", en.matchings);
    enum_cmd->add_option("--fixed-by", en.fixed_by, "keep those fixed by the rotation (n/d, m/d)");
    enum_cmd->add_option("--format", en.format)->check(CLI::IsMember({"cycles", "json"}));
    enum_cmd->add_option("--max-total", en.max_total);
    en.profile.attach(enum_cmd);

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", ver.suite)
        ->check(CLI::IsMember({"csp", "counts", "identities", "lemmas", "polynomiality", "bijection", "unequal",
                               "rotation", "all"}));
    verify_cmd->add_option("--max-total", ver.max_total);
    verify_cmd->add_option("--max-n", ver.max_n);
    verify_cmd->add_option("--max-m", ver.max_m);
    verify_cmd->add_option("--max-N", ver.max_N);
    verify_cmd->add_flag("--timing", ver.timing, "include wall time in summaries");
    verify_cmd->add_flag("--summary-only", ver.summary_only, "print only the summary objects");

    RenderArgs ren;
    auto* render_cmd = app.add_subcommand("render", "draw an annulus diagram as SVG");
    render_cmd->add_option("--n", ren.n)->required();
    render_cmd->add_option("--m", ren.m)->required();
    render_cmd->add_option("--perm", ren.perm, "cycle notation, e.g. (1,3)(2,4)")->required();
    render_cmd->add_option("-o,--output", ren.output);
    render_cmd->add_option("--size", ren.size);
    render_cmd->add_option("--stroke-width", ren.stroke_width);
    render_cmd->add_option("--font-size", ren.font_size);
    render_cmd->add_flag("--force", ren.force, "suppress the noncrossing warning");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (poly_cmd->parsed())
            return run_poly(poly);
        if (count_cmd->parsed())
            return run_count(count);
        if (enum_cmd->parsed())
            return run_enum(en);
        if (verify_cmd->parsed())
            return run_verify(ver);
        if (render_cmd->parsed())
            return run_render(ren);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kUsage;
}
