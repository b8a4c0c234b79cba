// iwastat: class groups, Cohen-Lenstra densities, and Iwasawa lambda
// invariants of imaginary quadratic fields, plus sweep and simulation
// harnesses.  Subcommands: densities, classgroup, lambda, sweep, matrix-sim,
// verify.  Exit codes: 0 ok, 1 usage/bad input, 2 invariant violation,
// 3 I/O error.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iwastat/iwastat.hpp"

using namespace iwastat;
using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    bool json = false;
    bool no_header = false;
    std::string cache_dir;
};

std::string fmt10(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string fmt_bound(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

void print_header(const GlobalOpts& g, const std::string& cmd, const std::string& config) {
    if (g.no_header) return;
    std::time_t now = std::time(nullptr);
    char ts[64];
    std::strftime(ts, sizeof ts, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    std::cout << "# iwastat " << cmd << "\n# config: " << config << "\n# time: " << ts << "\n";
}

std::string resolve_cache_dir(const GlobalOpts& g) {
    if (!g.cache_dir.empty()) return g.cache_dir;
    const char* env = std::getenv("IWASTAT_CACHE");
    return env ? env : "";
}

// ---- densities --------------------------------------------------------------

int cmd_densities(const GlobalOpts& g, std::int64_t p, int n) {
    std::ostringstream cfg;
    cfg << "p=" << p << " n=" << n;
    print_header(g, "densities", cfg.str());

    auto poch = pochhammer(p);
    auto ge1 = density_rank_ge_1(p);
    auto exact_n = density_rank_exact(p, n);
    auto ge_n = density_rank_ge(p, n);
    auto bound = lambda_lower_bound(p, n);
    double resid = durfee_identity_residual(1.0 / static_cast<double>(p), 10);

    if (g.json) {
        ordered_json j;
        j["p"] = p;
        j["n"] = n;
        j["pochhammer"] = {{"value", poch.value}, {"error_bound", poch.error_bound}};
        j["rank_ge_1"] = {{"value", ge1.value}, {"error_bound", ge1.error_bound}};
        j["rank_exact_n"] = {{"value", exact_n.value}, {"error_bound", exact_n.error_bound}};
        j["rank_ge_n"] = {{"value", ge_n.value}, {"error_bound", ge_n.error_bound}};
        j["lambda_lower_bound_n"] = {{"value", bound.value}, {"error_bound", bound.error_bound}};
        j["identity31_residual_q_1_over_p_N10"] = resid;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "pochhammer(" << p << ") = " << fmt10(poch.value) << " +- "
              << fmt_bound(poch.error_bound) << "\n";
    std::cout << "d(F_{" << p << ",>=1}) = " << fmt10(ge1.value) << " +- "
              << fmt_bound(ge1.error_bound) << "\n";
    std::cout << "d(F_{" << p << "," << n << "}) = " << fmt10(exact_n.value) << " +- "
              << fmt_bound(exact_n.error_bound) << "\n";
    std::cout << "d(F_{" << p << ",>=" << n << "}) = " << fmt10(ge_n.value) << " +- "
              << fmt_bound(ge_n.error_bound) << "\n";
    std::cout << "lower-density bound for lambda_" << p << " >= " << n << " = " << fmt10(bound.value) << " +- " << fmt_bound(bound.error_bound)
              << "\n";
    std::cout << "Durfee identity residual at q=1/" << p << ", N=10: " << fmt_bound(resid) << "\n";
    return 0;
}

// ---- classgroup -------------------------------------------------------------

int cmd_classgroup(const GlobalOpts& g, std::int64_t delta, bool show_forms) {
    std::ostringstream cfg;
    cfg << "delta=" << delta;
    print_header(g, "classgroup", cfg.str());
    FundamentalDiscriminant d(delta);
    auto forms = reduced_forms(d);
    auto h = static_cast<std::int64_t>(forms.size());
    auto ha = class_number_analytic(d);
    if (h != ha) throw InvariantViolation("class number oracles disagree");
    auto structure = group_structure(d);

    if (g.json) {
        ordered_json j;
        j["delta"] = delta;
        j["h"] = h;
        j["divisors"] = structure.divisors();
        if (show_forms) {
            auto arr = ordered_json::array();
            for (const auto& f : forms) arr.push_back({f.a, f.b, f.c});
            j["forms"] = arr;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "h = " << h << "\n";
    std::cout << "divisors = [";
    for (std::size_t i = 0; i < structure.divisors().size(); ++i)
        std::cout << (i ? "," : "") << structure.divisors()[i];
    std::cout << "]\n";
    if (show_forms) {
        for (const auto& f : forms)
            std::cout << "form (" << f.a << "," << f.b << "," << f.c << ")\n";
    }
    return 0;
}

// ---- lambda -----------------------------------------------------------------

int cmd_lambda(const GlobalOpts& g, std::int64_t delta, std::int64_t p, int max_level,
               std::int64_t twist) {
    std::ostringstream cfg;
    cfg << "delta=" << delta << " p=" << p << " max_level=" << max_level;
    if (twist) cfg << " twist=" << twist;
    print_header(g, "lambda", cfg.str());
    FundamentalDiscriminant d(delta);
    auto r = lambda_invariant(d, p, max_level, twist);
    if (g.json) {
        ordered_json j;
        j["delta"] = delta;
        j["p"] = p;
        j["lambda"] = r.lambda;
        j["stable"] = r.stable;
        j["method"] = to_string(r.method);
        j["level"] = r.level_used;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "lambda=" << r.lambda << " method=" << to_string(r.method)
              << " stable=" << (r.stable ? "true" : "false") << " level=" << r.level_used << "\n";
    return 0;
}

// ---- matrix-sim -------------------------------------------------------------

void write_histogram_csv(std::ostream& os, const RankHistogram& hist) {
    os << "corank,count,empirical,predicted,abs_error\n";
    int maxk = 0;
    for (int k = 0; k <= hist.matrix_size; ++k)
        if (hist.counts[k]) maxk = k;
    for (int k = 0; k <= maxk; ++k) {
        double emp = hist.empirical(k);
        double pred = density_rank_exact(hist.p, k).value;
        os << k << ',' << hist.counts[k] << ',' << fmt10(emp) << ',' << fmt10(pred) << ','
           << fmt10(std::abs(emp - pred)) << "\n";
    }
}

int cmd_matrix_sim(const GlobalOpts& g, std::int64_t p, int size, std::int64_t trials,
                   std::uint64_t seed, int workers, const std::string& out) {
    std::ostringstream cfg;
    cfg << "p=" << p << " size=" << size << " trials=" << trials << " seed=" << seed
        << " workers=" << workers;
    print_header(g, "matrix-sim", cfg.str());
    auto hist = sample_corank_distribution(p, size, trials, seed, workers);
    if (!out.empty()) {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw IoError("cannot open output", out);
        write_histogram_csv(f, hist);
        if (!f) throw IoError("write failed", out);
        std::cout << "wrote " << out << "\n";
    } else if (g.json) {
        ordered_json j;
        j["p"] = p;
        j["size"] = size;
        j["trials"] = trials;
        j["seed"] = seed;
        auto arr = ordered_json::array();
        int maxk = 0;
        for (int k = 0; k <= hist.matrix_size; ++k)
            if (hist.counts[k]) maxk = k;
        for (int k = 0; k <= maxk; ++k) {
            arr.push_back({{"corank", k},
                           {"count", hist.counts[k]},
                           {"empirical", hist.empirical(k)},
                           {"predicted", density_rank_exact(p, k).value}});
        }
        j["histogram"] = arr;
        j["total_variation"] = total_variation_to_prediction(hist);
        std::cout << j.dump(2) << "\n";
    } else {
        write_histogram_csv(std::cout, hist);
    }
    return 0;
}

// ---- sweep ------------------------------------------------------------------

int cmd_sweep(const GlobalOpts& g, double x, std::vector<std::int64_t> primes,
              std::int64_t lambda_ceiling, int workers, std::string checkpoint, std::string out,
              bool svg, bool quiet) {
    if (out.empty()) {
        std::string cache = resolve_cache_dir(g);
        out = cache.empty() ? "." : cache;
    }
    std::ostringstream cfg;
    cfg << "x=" << x << " primes=";
    for (std::size_t i = 0; i < primes.size(); ++i) cfg << (i ? "," : "") << primes[i];
    cfg << " lambda_ceiling=" << lambda_ceiling << " workers=" << workers
        << " checkpoint=" << (checkpoint.empty() ? "(none)" : checkpoint) << " out=" << out;
    print_header(g, "sweep", cfg.str());

    SweepConfig sc;
    sc.x = x;
    sc.primes = primes;
    sc.lambda_ceiling = lambda_ceiling;
    sc.workers = workers;
    sc.checkpoint_path = checkpoint;
    auto records = run_sweep(sc, quiet ? nullptr : &std::cerr);

    std::vector<DensityEstimate> densities;
    for (std::int64_t p : primes) {
        FamilyPredicate rank{FamilyPredicate::Kind::rank_ge, p, 0, 1};
        densities.push_back(empirical_density(records, rank, x));
        if (lambda_ceiling >= 3) {
            FamilyPredicate lam{FamilyPredicate::Kind::lambda_ge, p, 0, 1};
            double lx = std::min<double>(x, static_cast<double>(lambda_ceiling));
            densities.push_back(empirical_density(records, lam, lx));
        }
    }

    ReportOptions opt;
    opt.csv = true;
    opt.json = true;
    opt.svg = svg;
    opt.x = x;
    opt.primes = primes;
    opt.lambda_ceiling = lambda_ceiling;
    auto written = report(records, densities, out, opt);

    if (g.json) {
        ordered_json j;
        j["records"] = records.size();
        auto dens = ordered_json::array();
        for (const auto& d : densities) {
            dens.push_back({{"family", d.family},
                            {"x", d.x},
                            {"count", d.family_count},
                            {"total", d.total_count},
                            {"empirical", d.empirical},
                            {"predicted", d.has_prediction ? ordered_json(d.predicted.value)
                                                           : ordered_json(nullptr)}});
        }
        j["densities"] = dens;
        j["reports"] = written;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "records: " << records.size() << "\n";
    for (const auto& d : densities) {
        std::cout << d.family << " at x=" << fmt10(d.x) << ": " << d.family_count << "/"
                  << d.total_count << " = " << fmt10(d.empirical);
        if (d.has_prediction)
            std::cout << (d.prediction_is_lower_bound ? "  (lower bound " : "  (predicted ")
                      << fmt10(d.predicted.value) << " +- " << fmt_bound(d.predicted.error_bound)
                      << ", |diff| = " << fmt10(d.abs_error) << ")";
        if (d.unstable_excluded) std::cout << "  [" << d.unstable_excluded << " unstable excluded]";
        std::cout << "\n";
    }
    for (const auto& w : written) std::cout << "wrote " << w << "\n";
    return 0;
}

// ---- verify -----------------------------------------------------------------

struct VerifyReporter {
    int failures = 0;
    int checks = 0;

    void check(bool ok, const std::string& name, const std::string& detail = "") {
        ++checks;
        if (ok) {
            std::cout << "ok " << name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << name << (detail.empty() ? "" : ": " + detail) << "\n";
        }
    }
};

int cmd_verify(const GlobalOpts& g) {
    print_header(g, "verify", "full invariant suite");
    VerifyReporter v;

    // arith: multiplicativity + periodicity of the quadratic character
    {
        bool ok = true;
        for (std::int64_t dv : {-3LL, -4LL, -15LL, -23LL, -47LL})
            for (std::int64_t a = 1; a <= 30 && ok; ++a)
                for (std::int64_t b = 1; b <= 30 && ok; ++b)
                    if (kronecker(dv, a * b) != kronecker(dv, a) * kronecker(dv, b)) ok = false;
        v.check(ok, "kronecker multiplicative");
        ok = true;
        for (std::int64_t dv : {-3LL, -4LL, -15LL, -23LL})
            for (std::int64_t a = 1; a <= 2 * (-dv) && ok; ++a)
                if (kronecker(dv, a) != kronecker(dv, a + (-dv))) ok = false;
        v.check(ok, "kronecker periodic mod |D|");
    }
    // classgroup: dual class-number oracle and batch sieve
    {
        bool ok = true;
        auto hs = class_numbers_upto(3000);
        for (const auto& d : enumerate_fundamental(3000)) {
            auto hf = class_number_forms(d);
            if (hf != class_number_analytic(d) || hf != hs[d.abs()]) {
                ok = false;
                break;
            }
        }
        v.check(ok, "dual class-number oracle |D| <= 3000");
    }
    // classgroup: group axioms on small fields
    {
        bool ok = true;
        for (std::int64_t dv : {-23LL, -47LL, -71LL, -95LL}) {
            FundamentalDiscriminant d(dv);
            auto forms = reduced_forms(d);
            auto id = principal_form(d);
            for (const auto& f : forms) {
                if (!(compose(id, f, d) == f)) ok = false;
                if (!(compose(f, inverse(f), d) == id)) ok = false;
            }
            for (const auto& f : forms)
                for (const auto& g2 : forms)
                    for (const auto& k : forms)
                        if (!(compose(compose(f, g2, d), k, d) == compose(f, compose(g2, k, d), d)))
                            ok = false;
        }
        v.check(ok, "group axioms on reduced forms");
    }
    // classgroup: structure vs torsion census
    {
        bool ok = true;
        for (const auto& d : enumerate_fundamental(300)) {
            auto forms = reduced_forms(d);
            auto g2 = group_structure(d);
            if (g2.order() != static_cast<std::int64_t>(forms.size())) ok = false;
            auto id = principal_form(d);
            for (std::int64_t k : {2LL, 3LL, 5LL}) {
                std::int64_t census = 0;
                for (const auto& f : forms)
                    if (form_pow(f, static_cast<std::uint64_t>(k), d) == id) ++census;
                std::int64_t expect = 1;
                for (std::int64_t dd : g2.divisors()) expect *= std::gcd(k, dd);
                if (census != expect) ok = false;
            }
        }
        v.check(ok, "group structure matches torsion census |D| <= 300");
    }
    // cldensity: golden values, consistency, pentagonal pattern, identity
    {
        v.check(std::abs(pochhammer(3).value - 0.560126077928) < 1e-9, "pochhammer(3) golden");
        v.check(std::abs(density_rank_ge(3, 2).value - 0.0197793636) < 1e-7, "d(F_{3,>=2}) golden");
        bool ok = true;
        for (std::int64_t p : {3LL, 5LL, 7LL}) {
            double s = 0;
            for (int n = 0; n <= 12; ++n) s += density_rank_exact(p, n).value;
            if (std::abs(s - 1.0) > 1e-10) ok = false;
        }
        v.check(ok, "rank-exact densities sum to 1");
        auto c = euler_expansion_coeffs(60);
        ok = true;
        for (int i = 0; i <= 60; ++i)
            if (c[i] != 0 && c[i] != 1 && c[i] != -1) ok = false;
        v.check(ok && c[1] == -1 && c[2] == -1 && c[5] == 1 && c[7] == 1,
                "euler expansion pentagonal prefix");
        v.check(durfee_identity_residual(1.0 / 3, 10) < 1e-6 && durfee_identity_residual(0.2, 8) < 1e-8,
                "Durfee identity residuals");
    }
    // iwasawa: rank inequality, split positivity, inert triviality, twists
    {
        bool rank_ok = true, split_ok = true, inert_zero = false, twist_ok = true;
        for (const auto& d : enumerate_fundamental(400)) {
            for (std::int64_t p : {3LL, 5LL}) {
                if (d.abs() % p == 0) continue;
                auto lam = lambda_invariant(d, p);
                if (!lam.stable || lam.method == LambdaMethod::unsupported) continue;
                if (lam.lambda < p_rank(group_structure(d), p)) rank_ok = false;
                auto st = splitting_type(d, p);
                if (st == SplittingType::split && lam.lambda < 1) split_ok = false;
                if (st == SplittingType::inert && lam.lambda == 0) inert_zero = true;
            }
        }
        v.check(rank_ok, "lambda >= r_p on |D| <= 400");
        v.check(split_ok, "split primes have lambda >= 1");
        v.check(inert_zero, "inert lambda = 0 occurs");
        for (std::int64_t dv : {-11LL, -23LL, -47LL}) {
            FundamentalDiscriminant d(dv);
            for (std::int64_t p : {3LL, 5LL}) {
                if (d.abs() % p == 0) continue;
                std::vector<std::int64_t> tw;
                for (std::int64_t cc = 2; cc < 60 && tw.size() < 2; ++cc)
                    if (detail::valid_twist(dv, p, cc)) tw.push_back(cc);
                auto a = stickelberger_series(d, p, 2, tw[0]).least_nonzero();
                auto b = stickelberger_series(d, p, 2, tw[1]).least_nonzero();
                if (!(a && b && *a == *b)) twist_ok = false;
            }
        }
        v.check(twist_ok, "twist independence sample");
        bool gold_ok = true;
        int gold_n = 0;
        for (const auto& d : enumerate_fundamental(300)) {
            for (std::int64_t p : {3LL, 5LL}) {
                if (d.abs() % p == 0 || splitting_type(d, p) != SplittingType::split) continue;
                if (class_number_forms(d) % p == 0) continue;
                auto lam = lambda_invariant(d, p);
                if (gold_criterion(d, p) != (lam.lambda >= 2)) gold_ok = false;
                ++gold_n;
            }
        }
        v.check(gold_ok && gold_n >= 50, "gold criterion agrees with lambda readout");
    }
    // randmatrix: exhaustive small cases and determinism
    {
        auto h1 = exhaustive_corank_distribution(3, 1);
        v.check(h1.counts[0] == 2 && h1.counts[1] == 1, "exhaustive 1x1 mod 3");
        auto h2 = exhaustive_corank_distribution(3, 2);
        v.check(h2.counts[0] == 48 && h2.counts[1] == 32 && h2.counts[2] == 1,
                "exhaustive 2x2 mod 3");
        auto s1 = sample_corank_distribution(3, 8, 2000, 42, 1);
        auto s2 = sample_corank_distribution(3, 8, 2000, 42, 3);
        v.check(s1.counts == s2.counts, "histogram independent of worker count");
    }
    // sweep: determinism of records and reports on a small range
    {
        SweepConfig sc;
        sc.x = 300;
        sc.primes = {3, 5};
        sc.lambda_ceiling = 300;
        sc.workers = 2;
        auto r1 = run_sweep(sc);
        sc.workers = 1;
        auto r2 = run_sweep(sc);
        bool same = r1.size() == r2.size();
        if (same)
            for (std::size_t i = 0; i < r1.size(); ++i)
                if (!(detail::record_to_json(r1[i]) == detail::record_to_json(r2[i]))) same = false;
        v.check(same, "sweep records independent of worker count");
        // containment shadow on the range
        bool contain = true;
        for (const auto& rec : r1)
            for (const auto& pp : rec.per_prime)
                if (pp.has_lambda && pp.lambda.stable &&
                    pp.lambda.method != LambdaMethod::unsupported)
                    if (pp.r >= 1 && pp.lambda.lambda < 1) contain = false;
        v.check(contain, "containment r_p>=1 implies lambda>=1 on sweep range");
    }

    std::cout << (v.failures == 0 ? "verify: all " : "verify: FAILURES ") << v.checks
              << " checks, " << v.failures << " failures\n";
    return v.failures == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"class groups, Cohen-Lenstra densities, and Iwasawa lambda invariants "
                 "of imaginary quadratic fields"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_flag("--json", g.json, "machine-readable JSON output");
    app.add_flag("--no-header", g.no_header, "suppress the config/timestamp header");
    app.add_option("--cache-dir", g.cache_dir,
                   "cache/output directory (default: IWASTAT_CACHE env)");

    // let --json / --no-header / --cache-dir appear after the subcommand too
    app.fallthrough();

    auto* cd = app.add_subcommand("densities", "evaluate the density formulas at (p, n)");
    std::int64_t d_p = 3;
    int d_n = 2;
    cd->add_option("--p", d_p, "odd prime")->required();
    cd->add_option("--n", d_n, "rank / lambda threshold")->required();

    auto* cc = app.add_subcommand("classgroup", "class number and group structure");
    std::int64_t c_delta = -23;
    bool c_forms = false;
    cc->add_option("--delta", c_delta, "negative fundamental discriminant")->required();
    cc->add_flag("--forms", c_forms, "also list the reduced forms");

    auto* cl = app.add_subcommand("lambda", "Iwasawa lambda invariant");
    std::int64_t l_delta = -11, l_twist = 0, l_p = 5;
    int l_max_level = 6;
    cl->add_option("--delta", l_delta, "negative fundamental discriminant")->required();
    cl->add_option("--p", l_p, "odd prime")->required();
    cl->add_option("--max-level", l_max_level, "maximum Stickelberger level");
    cl->add_option("--twist", l_twist, "twist parameter c (default: smallest valid)");

    auto* cs = app.add_subcommand("sweep", "discriminant sweep with reports");
    double s_x = 10000;
    std::vector<std::int64_t> s_primes{3, 5};
    std::int64_t s_ceiling = 2000;
    int s_workers = 0;
    std::string s_checkpoint, s_out;
    bool s_svg = false, s_quiet = false;
    cs->add_option("--x", s_x, "upper bound on |Delta|")->required();
    cs->add_option("--primes", s_primes, "odd primes to analyze")->delimiter(',');
    cs->add_option("--lambda-ceiling", s_ceiling, "compute lambda only for |Delta| <= this");
    cs->add_option("--workers", s_workers, "worker threads (0 = hardware)");
    cs->add_option("--checkpoint", s_checkpoint, "append-only JSONL checkpoint path");
    cs->add_option("--out", s_out, "report output directory");
    cs->add_flag("--svg", s_svg, "also write SVG histograms");
    cs->add_flag("--quiet", s_quiet, "suppress progress lines on stderr");

    auto* cm = app.add_subcommand("matrix-sim", "random-matrix corank simulation");
    std::int64_t m_p = 3, m_trials = 100000;
    int m_size = 60, m_workers = 0;
    std::uint64_t m_seed = 1;
    std::string m_out;
    cm->add_option("--p", m_p, "odd prime")->required();
    cm->add_option("--size", m_size, "matrix size N")->required();
    cm->add_option("--trials", m_trials, "number of trials")->required();
    cm->add_option("--seed", m_seed, "RNG seed")->required();
    cm->add_option("--workers", m_workers, "worker threads (0 = hardware)");
    cm->add_option("--out", m_out, "write histogram CSV here instead of stdout");

    app.add_subcommand("verify", "run the full invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (app.got_subcommand("densities")) return cmd_densities(g, d_p, d_n);
        if (app.got_subcommand("classgroup")) return cmd_classgroup(g, c_delta, c_forms);
        if (app.got_subcommand("lambda")) return cmd_lambda(g, l_delta, l_p, l_max_level, l_twist);
        if (app.got_subcommand("sweep"))
            return cmd_sweep(g, s_x, s_primes, s_ceiling, s_workers, s_checkpoint, s_out, s_svg,
                             s_quiet);
        if (app.got_subcommand("matrix-sim"))
            return cmd_matrix_sim(g, m_p, m_size, m_trials, m_seed, m_workers, m_out);
        if (app.got_subcommand("verify")) return cmd_verify(g);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const PartialDataError& e) {
        std::cerr << "partial data: " << e.what() << "\n";
        return 1;
    } catch (const OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
