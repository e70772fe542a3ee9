#include "orthoseq/arithmetic.hpp"
#include "orthoseq/cache.hpp"
#include "orthoseq/delta.hpp"
#include "orthoseq/dirichlet.hpp"
#include "orthoseq/errors.hpp"
#include "orthoseq/gfun.hpp"
#include "orthoseq/harmonic.hpp"
#include "orthoseq/identities.hpp"
#include "orthoseq/inequalities.hpp"
#include "orthoseq/k_estimate.hpp"
#include "orthoseq/oracles.hpp"
#include "orthoseq/quadrature.hpp"
#include "orthoseq/reports.hpp"
#include "orthoseq/signs.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace orthoseq;
using ordered_json = nlohmann::ordered_json;

namespace {

// exit codes: 0 pass, 1 fail, 2 indeterminate, 64 usage, 65 capacity or
// precision, 66 cache
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kIndeterminate = 2;
constexpr int kUsage = 64;
constexpr int kResource = 65;
constexpr int kCache = 66;

struct GlobalOpts {
    std::string engine = "ball";
    long n_max = 20000;
    bool n_max_explicit = false;
    long precision_bits = 0;
    double tolerance = -1; // < 0: per-command default
    std::string format = "text";
    bool use_cache = false;
    bool force = false;
};

double tol_or(const GlobalOpts& g, double fallback) {
    return g.tolerance < 0 ? fallback : g.tolerance;
}

std::string cache_file(const char* engine, long n_max, long precision_bits) {
    fs::path dir = default_cache_dir();
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw CacheError(CacheError::Kind::Io,
                         "cannot create cache directory " + dir.string());
    std::ostringstream name;
    name << engine << "-n" << n_max;
    if (precision_bits >= 0 && std::string(engine) == "ball")
        name << "-p" << precision_bits;
    name << ".tbl";
    return (dir / name.str()).string();
}

// exact runs default to a small range; a 20000-term exact table is a
// deliberate decision, not a default
long exact_n_max(const GlobalOpts& g) {
    if (g.n_max_explicit) return g.n_max;
    return std::min(g.n_max, 500L);
}

ExactTable acquire_exact(const GlobalOpts& g, long n_max) {
    std::string path;
    if (g.use_cache) {
        path = cache_file("exact", n_max, -1);
        if (!g.force && fs::exists(path)) {
            try {
                return load_exact(path);
            } catch (const CacheError& e) {
                std::cerr << "cache ignored (" << e.what() << "), recomputing\n";
            }
        }
    }
    ExactOptions eo;
    eo.cap = std::max(eo.cap, n_max);
    ExactTable t = exact_coefficients(n_max, eo);
    if (g.use_cache) store_exact(t, path);
    return t;
}

BallTable acquire_ball(const GlobalOpts& g, long n_max) {
    std::string path;
    if (g.use_cache) {
        path = cache_file("ball", n_max, g.precision_bits);
        if (!g.force && fs::exists(path)) {
            try {
                return load_ball(path);
            } catch (const CacheError& e) {
                std::cerr << "cache ignored (" << e.what() << "), recomputing\n";
            }
        }
    }
    BallOptions bo;
    bo.precision_bits = g.precision_bits;
    if (n_max >= 5000) {
        bo.progress = [](long done, long total) {
            if (done % 2000 == 0 || done == total) {
                std::fprintf(stderr, "\rcoefficients %ld/%ld%s", done, total,
                             done == total ? "\n" : "");
                std::fflush(stderr);
            }
        };
    }
    BallTable t = ball_coefficients(n_max, bo);
    if (g.use_cache) store_ball(t, path);
    return t;
}

std::string format_double(double v, int digits = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

int emit_table(const GlobalOpts& g, const std::string& column) {
    if (g.engine == "exact") {
        ExactTable t = acquire_exact(g, exact_n_max(g));
        if (g.format == "csv") {
            std::cout << table_csv(t, column);
        } else if (g.format == "json") {
            std::cout << table_json(t, column);
        } else {
            const auto& col = column == "coeffs"         ? t.coeffs
                              : column == "partial_sums" ? t.partial_sums
                              : column == "norms_sq"     ? t.norms_sq
                                                         : t.energies;
            for (long n = 0; n <= t.n_max(); ++n)
                std::cout << n << ' ' << col[static_cast<size_t>(n)].get_str() << '\n';
        }
        return kPass;
    }
    BallTable t = acquire_ball(g, g.n_max);
    if (g.format == "csv") {
        std::cout << table_csv(t, column);
    } else if (g.format == "json") {
        std::cout << table_json(t, column);
    } else {
        const auto& col = column == "coeffs"         ? t.coeffs
                          : column == "partial_sums" ? t.partial_sums
                          : column == "norms_sq"     ? t.norms_sq
                                                     : t.energies;
        for (long n = 0; n <= t.n_max(); ++n) {
            const Ball& b = col[static_cast<size_t>(n)];
            std::cout << n << ' ' << format_double(b.mid_double()) << " (radius "
                      << format_double(b.rad_double(), 3) << ")\n";
        }
    }
    return kPass;
}

const char* status_word(CheckStatus s) { return to_cstring(s); }

CheckStatus worst_of(CheckStatus a, CheckStatus b) {
    auto rank = [](CheckStatus s) {
        return s == CheckStatus::Fail ? 2 : (s == CheckStatus::Indeterminate ? 1 : 0);
    };
    return rank(a) >= rank(b) ? a : b;
}

int status_exit(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return kPass;
        case CheckStatus::Fail: return kFail;
        default: return kIndeterminate;
    }
}

struct SuiteResult {
    std::string suite;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

SuiteResult run_inequalities(const GlobalOpts& g) {
    SuiteResult r{"inequalities", CheckStatus::Pass, ""};
    InequalitySummary s;
    long n_used = 0;
    if (g.engine == "exact") {
        ExactTable t = acquire_exact(g, exact_n_max(g));
        n_used = t.n_max();
        s = verify_inequality_suite(t);
    } else {
        BallTable t = acquire_ball(g, g.n_max);
        n_used = t.n_max();
        s = verify_inequality_suite(t);
    }
    r.status = s.pass() ? CheckStatus::Pass
               : s.failures > 0 ? CheckStatus::Fail
                                : CheckStatus::Indeterminate;
    std::ostringstream d;
    d << "n_max=" << n_used << ", checks=" << s.checks << ", failures=" << s.failures
      << ", indeterminates=" << s.indeterminates;
    if (!s.problems.empty()) {
        d << ", first problem: n=" << s.problems.front().n << " "
          << s.problems.front().inequality_id;
    }
    r.detail = d.str();
    return r;
}

SuiteResult run_recurrence(const ExactTable& t) {
    SuiteResult r{"recurrence", CheckStatus::Pass, ""};
    long bad = -1;
    if (t.coeffs[0] != 1) bad = 0;
    for (long n = 1; bad < 0 && n <= t.n_max(); ++n) {
        Rational s = 0;
        for (long k = 0; k <= n; ++k)
            s += t.coeffs[static_cast<size_t>(k)] / (n + 1 + k);
        if (s != 0) bad = n;
    }
    std::ostringstream d;
    d << "n_max=" << t.n_max();
    if (bad >= 0) {
        r.status = CheckStatus::Fail;
        d << ", first failing n=" << bad;
    }
    r.detail = d.str();
    return r;
}

SuiteResult run_valuation(const ExactTable& t) {
    SuiteResult r{"valuation", CheckStatus::Pass, ""};
    long bad = -1;
    for (long n = 1; bad < 0 && n <= t.n_max(); ++n)
        if (!verify_two_adic_valuation(n, t.coeffs[static_cast<size_t>(n)]).pass)
            bad = n;
    std::ostringstream d;
    d << "n_max=" << t.n_max();
    if (bad >= 0) {
        r.status = CheckStatus::Fail;
        d << ", first failing n=" << bad;
    }
    r.detail = d.str();
    return r;
}

SuiteResult run_integrality(const ExactTable& t) {
    SuiteResult r{"integrality", CheckStatus::Pass, ""};
    long bad = -1;
    for (long n = 1; bad < 0 && n <= t.n_max(); ++n)
        if (!verify_integrality_and_lower_bound(n, t.coeffs[static_cast<size_t>(n)]).pass())
            bad = n;
    std::ostringstream d;
    d << "n_max=" << t.n_max();
    if (bad >= 0) {
        r.status = CheckStatus::Fail;
        d << ", first failing n=" << bad;
    }
    r.detail = d.str();
    return r;
}

SuiteResult run_oracles(const ExactTable& t) {
    SuiteResult r{"oracles", CheckStatus::Pass, ""};
    const long det_max = std::min(t.n_max(), 30L);
    const long perm_max = std::min(t.n_max(), 14L);
    long bad = -1;
    const char* which = "";
    for (long n = 1; bad < 0 && n <= det_max; ++n)
        if (coefficient_via_determinant(n) != t.coeffs[static_cast<size_t>(n)]) {
            bad = n;
            which = "determinant";
        }
    for (long n = 1; bad < 0 && n <= perm_max; ++n) {
        PermutationSum ps = coefficient_via_permutation_sum_detailed(n);
        if (ps.value != t.coeffs[static_cast<size_t>(n)] ||
            ps.terms != (1ull << (n - 1))) {
            bad = n;
            which = "permutation";
        }
    }
    std::ostringstream d;
    d << "determinant n<=" << det_max << ", permutation n<=" << perm_max;
    if (bad >= 0) {
        r.status = CheckStatus::Fail;
        d << ", first failing n=" << bad << " (" << which << ")";
    }
    r.detail = d.str();
    return r;
}

int cmd_verify(const GlobalOpts& g, std::vector<std::string> suites) {
    bool all = suites.empty();
    for (const auto& s : suites)
        if (s == "all") all = true;
    auto wants = [&](const char* name) {
        if (all) return true;
        for (const auto& s : suites)
            if (s == name) return true;
        return false;
    };

    std::vector<SuiteResult> results;
    if (wants("inequalities")) results.push_back(run_inequalities(g));

    const bool needs_exact =
        wants("recurrence") || wants("valuation") || wants("integrality") || wants("oracles");
    if (needs_exact) {
        // these suites read numerators and denominators, so they always run
        // on the exact engine, over a range that stays affordable
        const long n_exact = g.engine == "exact" ? exact_n_max(g)
                                                 : std::min(exact_n_max(g), 500L);
        ExactTable t = acquire_exact(g, n_exact);
        if (wants("recurrence")) results.push_back(run_recurrence(t));
        if (wants("valuation")) results.push_back(run_valuation(t));
        if (wants("integrality")) results.push_back(run_integrality(t));
        if (wants("oracles")) results.push_back(run_oracles(t));
    }

    CheckStatus worst = CheckStatus::Pass;
    for (const auto& r : results)
        worst = worst_of(worst, r.status);

    if (g.format == "json") {
        ordered_json j;
        ordered_json rows = ordered_json::array();
        for (const auto& r : results)
            rows.push_back(ordered_json{{"suite", r.suite},
                                        {"status", status_word(r.status)},
                                        {"detail", r.detail}});
        j["suites"] = std::move(rows);
        j["overall"] = status_word(worst);
        std::cout << j.dump(2) << "\n";
    } else if (g.format == "csv") {
        std::cout << "suite,status,detail\n";
        for (const auto& r : results)
            std::cout << r.suite << ',' << status_word(r.status) << ",\"" << r.detail
                      << "\"\n";
    } else {
        for (const auto& r : results)
            std::cout << r.suite << ": " << status_word(r.status) << " (" << r.detail
                      << ")\n";
        std::cout << "overall: " << status_word(worst) << "\n";
    }
    return status_exit(worst);
}

int cmd_signs(const GlobalOpts& g) {
    SignChangeReport rep;
    if (g.engine == "exact")
        rep = detect_sign_changes(acquire_exact(g, exact_n_max(g)));
    else
        rep = detect_sign_changes(acquire_ball(g, g.n_max));

    RatioReport ratios;
    bool have_ratios = false;
    try {
        ratios = sign_change_ratios(rep);
        have_ratios = true;
    } catch (const std::invalid_argument&) {
    }

    if (g.format == "json") {
        std::cout << to_json(rep, have_ratios ? &ratios : nullptr);
    } else if (g.format == "csv") {
        std::cout << "sign_change_index\n";
        for (long n : rep.indices)
            std::cout << n << '\n';
    } else {
        for (size_t i = 0; i < rep.indices.size(); ++i)
            std::cout << (i ? " " : "") << rep.indices[i];
        std::cout << '\n';
        std::cout << "ratios:";
        if (have_ratios)
            for (double v : ratios.ratios)
                std::cout << ' ' << format_double(v, 6);
        else
            std::cout << " n/a";
        std::cout << '\n';
        std::cout << "ambiguous: " << rep.ambiguous.size() << '\n';
    }
    return rep.ambiguous.empty() ? kPass : kIndeterminate;
}

int cmd_delta(const GlobalOpts& g, long n_point, std::vector<long> window) {
    BallTable t = acquire_ball(g, g.n_max);
    if (n_point > 0) {
        Ball d = delta_point_estimate(t, n_point);
        mpfr_t lo, hi;
        mpfr_init2(lo, 64);
        mpfr_init2(hi, 64);
        d.lower(lo);
        d.upper(hi);
        double dlo = mpfr_get_d(lo, MPFR_RNDD);
        double dhi = mpfr_get_d(hi, MPFR_RNDU);
        mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
        if (g.format == "json") {
            std::cout << ordered_json{{"kind", "delta_point"},
                                      {"n", n_point},
                                      {"approx", d.mid_double()},
                                      {"radius", d.rad_double()},
                                      {"lower", dlo},
                                      {"upper", dhi}}
                             .dump(2)
                      << "\n";
        } else if (g.format == "csv") {
            std::cout << "n,approx,lower,upper\n"
                      << n_point << ',' << format_double(d.mid_double()) << ','
                      << format_double(dlo) << ',' << format_double(dhi) << '\n';
        } else {
            std::cout << "delta(" << n_point << ") = " << format_double(d.mid_double())
                      << " in [" << format_double(dlo) << ", " << format_double(dhi)
                      << "]\n";
        }
        return kPass;
    }
    EnvelopeFit fit = fit_envelope_slope(t, window[0], window[1]);
    if (g.format == "json") {
        std::cout << to_json(fit);
    } else if (g.format == "csv") {
        std::cout << "n,delta\n";
        for (const auto& [n, d] : fit.points)
            std::cout << n << ',' << format_double(d) << '\n';
    } else {
        std::cout << "slope " << format_double(fit.slope, 8) << " +/- "
                  << format_double(fit.half_width, 3) << " over [" << fit.n_lo << ", "
                  << fit.n_hi << "] using " << fit.points.size() << " "
                  << (fit.used_local_maxima ? "local maxima" : "points") << "\n";
    }
    return kPass;
}

int cmd_identities(const GlobalOpts& g, std::vector<long> rs, long N) {
    BallTable t = acquire_ball(g, g.n_max);
    if (N <= 0) N = t.n_max();
    const double tol = tol_or(g, 1e-5);
    if (rs.empty()) rs = {0, 1, 2, 3};

    bool ok = true;
    ordered_json arr = ordered_json::array();
    for (long r : rs) {
        IdentityEvaluation ev = identity_partial_sum(t, r, N);
        Ball absres = abs_enclosure(ev.residual);
        mpfr_t u;
        mpfr_init2(u, 64);
        absres.upper(u);
        double mag = mpfr_get_d(u, MPFR_RNDU);
        mpfr_clear(u);
        bool this_ok = mag <= tol;
        if (ev.has_rearranged) {
            Ball rr = abs_enclosure(ev.rearranged_residual);
            mpfr_init2(u, 64);
            rr.upper(u);
            if (mpfr_get_d(u, MPFR_RNDU) > tol) this_ok = false;
            mpfr_clear(u);
        }
        ok = ok && this_ok;
        if (g.format == "json") {
            arr.push_back(ordered_json::parse(to_json(ev, tol)));
        } else if (g.format == "csv") {
            if (r == rs.front()) std::cout << "r,N,partial,target,residual,verdict\n";
            std::cout << r << ',' << N << ',' << format_double(ev.partial.mid_double())
                      << ',' << format_double(ev.target.mid_double()) << ','
                      << format_double(ev.residual.mid_double(), 6) << ','
                      << (this_ok ? "pass" : "fail") << '\n';
        } else {
            std::cout << "r=" << r << ": partial=" << format_double(ev.partial.mid_double())
                      << " target=" << format_double(ev.target.mid_double())
                      << " residual=" << format_double(ev.residual.mid_double(), 6)
                      << (this_ok ? " ok" : " FAIL") << '\n';
            if (ev.has_rearranged) {
                std::cout << "  rearranged: partial="
                          << format_double(ev.rearranged_partial.mid_double())
                          << " target=" << format_double(ev.rearranged_target.mid_double())
                          << " residual="
                          << format_double(ev.rearranged_residual.mid_double(), 6) << '\n';
            }
        }
    }
    if (g.format == "json") std::cout << arr.dump(2) << "\n";
    return ok ? kPass : kFail;
}

int cmd_functional(const GlobalOpts& g, std::vector<double> ts, long N) {
    BallTable tab = acquire_ball(g, g.n_max);
    if (N <= 0) N = tab.n_max();
    const double tol = tol_or(g, 1e-6);
    if (ts.empty()) ts = {0.1, 0.5, 0.9};

    bool ok = true;
    ordered_json arr = ordered_json::array();
    for (double tv : ts) {
        if (!(tv >= 0 && tv < 1)) {
            std::cerr << "t must lie in [0,1): " << tv << "\n";
            return kUsage;
        }
        Ball t = Ball::exact_double(tv, tab.precision_bits);
        FunctionalResidual fr = functional_equation_residual(tab, t, N);
        bool this_ok = fr.worst_case() <= tol;
        ok = ok && this_ok;
        if (g.format == "json") {
            arr.push_back(ordered_json::parse(to_json(fr, tv, tol)));
        } else if (g.format == "csv") {
            if (tv == ts.front())
                std::cout << "t,terms_used,partial,worst_case,verdict\n";
            std::cout << format_double(tv, 6) << ',' << fr.terms_used << ','
                      << format_double(fr.partial.mid_double()) << ','
                      << format_double(fr.worst_case(), 6) << ','
                      << (this_ok ? "pass" : "fail") << '\n';
        } else {
            std::cout << "t=" << format_double(tv, 6) << ": partial="
                      << format_double(fr.partial.mid_double()) << " worst_case=|sum-1|<="
                      << format_double(fr.worst_case(), 6) << " (terms=" << fr.terms_used
                      << ")" << (this_ok ? " ok" : " FAIL") << '\n';
        }
    }
    if (g.format == "json") std::cout << arr.dump(2) << "\n";
    return ok ? kPass : kFail;
}

int cmd_integral(const GlobalOpts& g, std::vector<double> ts, long N, long order) {
    BallTable tab = acquire_ball(g, g.n_max);
    if (N <= 0) N = tab.n_max();
    const double tol = tol_or(g, 1e-3);
    if (ts.empty()) ts = {0.1, 0.5, 0.9};

    bool ok = true;
    ordered_json arr = ordered_json::array();
    for (double tv : ts) {
        if (!(tv >= 0 && tv < 1)) {
            std::cerr << "t must lie in [0,1): " << tv << "\n";
            return kUsage;
        }
        Ball t = Ball::exact_double(tv, tab.precision_bits);
        IntegralResidual ir = integral_equation_residual(tab, t, N, order);
        mpfr_t u;
        mpfr_init2(u, 64);
        ir.residual_abs.upper(u);
        double resid = mpfr_get_d(u, MPFR_RNDU);
        mpfr_clear(u);
        bool this_ok = resid <= tol;
        ok = ok && this_ok;
        if (g.format == "json") {
            arr.push_back(ordered_json::parse(to_json(ir, tv, tol)));
        } else if (g.format == "csv") {
            if (tv == ts.front())
                std::cout << "t,order,value,residual,quad_error_estimate,verdict\n";
            std::cout << format_double(tv, 6) << ',' << ir.order << ','
                      << format_double(ir.value.mid_double()) << ','
                      << format_double(resid, 6) << ','
                      << format_double(ir.quad_error_estimate, 6) << ','
                      << (this_ok ? "pass" : "fail") << '\n';
        } else {
            std::cout << "t=" << format_double(tv, 6) << ": value="
                      << format_double(ir.value.mid_double()) << " |value-1|<="
                      << format_double(resid, 6)
                      << " quad_err~=" << format_double(ir.quad_error_estimate, 3)
                      << " (order=" << ir.order << ", heuristic)"
                      << (this_ok ? " ok" : " FAIL") << '\n';
        }
    }
    if (g.format == "json") std::cout << arr.dump(2) << "\n";
    return ok ? kPass : kFail;
}

int cmd_dirichlet(const GlobalOpts& g, double s_re, double s_im, long N) {
    BallTable tab = acquire_ball(g, g.n_max);
    if (N <= 0) N = tab.n_max();
    DirichletPoint pt = dirichlet_partial(tab, s_re, s_im, N);

    if (g.format == "json") {
        std::cout << to_json(pt);
    } else if (g.format == "csv") {
        std::cout << "s_re,s_im,N,real,imag,tail_bound\n"
                  << format_double(s_re, 6) << ',' << format_double(s_im, 6) << ',' << N
                  << ',' << format_double(pt.real_part.mid_double()) << ','
                  << format_double(pt.imag_part.mid_double()) << ','
                  << format_double(pt.tail_bound, 6) << '\n';
    } else {
        std::cout << "C_" << N << "(" << format_double(s_re, 6);
        if (s_im != 0) std::cout << (s_im > 0 ? "+" : "") << format_double(s_im, 6) << "i";
        std::cout << ") = " << format_double(pt.real_part.mid_double());
        if (s_im != 0)
            std::cout << " + " << format_double(pt.imag_part.mid_double()) << "i";
        std::cout << "  (tail <= " << format_double(pt.tail_bound, 3) << ")\n";
    }

    if (s_re == 0 && s_im == 0) {
        // the series value at 0 is -1; check the partial sum is consistent
        const double tol = tol_or(g, 1e-3);
        mpfr_t u;
        mpfr_init2(u, 64);
        Ball diff = abs_enclosure(pt.real_part + 1);
        diff.upper(u);
        double mag = mpfr_get_d(u, MPFR_RNDU);
        mpfr_clear(u);
        return mag <= pt.tail_bound + tol ? kPass : kFail;
    }
    return kPass;
}

int cmd_k(const GlobalOpts& g, long n_used) {
    BallTable tab = acquire_ball(g, g.n_max);
    KEstimate k = n_used > 0 ? estimate_K(tab, n_used) : estimate_K(tab);
    if (g.format == "json") {
        std::cout << to_json(k);
    } else if (g.format == "csv") {
        std::cout << "n_used,lower,upper,width\n"
                  << k.n_used << ',' << format_double(k.lower) << ','
                  << format_double(k.upper) << ',' << format_double(k.width(), 3) << '\n';
    } else {
        std::cout << "K in [" << format_double(k.lower) << ", " << format_double(k.upper)
                  << "]  (width " << format_double(k.width(), 3) << ", n_used=" << k.n_used
                  << ")\n";
    }
    return kPass;
}

int cmd_cross_validate(const GlobalOpts& g, long exact_n) {
    if (exact_n <= 0) exact_n = std::min(g.n_max, 500L);
    ExactTable et = acquire_exact(g, exact_n);
    BallTable bt = acquire_ball(g, g.n_max);
    CrossValidation cv = cross_validate(et, bt);
    if (g.format == "json") {
        std::cout << to_json(cv);
    } else if (g.format == "csv") {
        std::cout << "overlap_n_max,containment_violations,max_normalized_discrepancy\n"
                  << cv.overlap_n_max << ',' << cv.containment_violations << ','
                  << format_double(cv.max_normalized_discrepancy, 6) << '\n';
    } else {
        std::cout << "overlap n_max=" << cv.overlap_n_max
                  << " violations=" << cv.containment_violations
                  << " max_normalized_discrepancy="
                  << format_double(cv.max_normalized_discrepancy, 6)
                  << (cv.pass() ? " ok" : " FAIL") << '\n';
    }
    return cv.pass() ? kPass : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthorecursive expansion of 1 over x, x^2, x^3, ... on [0,1]"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    auto* nmax_opt =
        app.add_option("--n-max", g.n_max, "largest coefficient index")->capture_default_str();
    app.add_option("--engine", g.engine, "exact or ball")
        ->check(CLI::IsMember({"exact", "ball"}))
        ->capture_default_str();
    app.add_option("--precision-bits", g.precision_bits,
                   "ball midpoint precision; 0 picks 128 (n<=2000) or 256")
        ->capture_default_str();
    app.add_option("--tolerance", g.tolerance, "override the per-command tolerance");
    app.add_option("--format", g.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_flag("--cache", g.use_cache,
                 "reuse tables under $ORTHOSEQ_CACHE_DIR or ./.orthoseq-cache");
    app.add_flag("--force", g.force, "recompute even when a cached table exists");

    auto* coeffs = app.add_subcommand("coeffs", "coefficients c_n");
    auto* sums = app.add_subcommand("sums", "partial sums s_n = sum_{k<=n} c_k");
    auto* norms = app.add_subcommand("norms", "squared remainder norms");
    auto* energies = app.add_subcommand("energies", "derivative energies D(n)");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites;
    verify->add_option("--suite", suites,
                       "inequalities, recurrence, valuation, integrality, oracles, all")
        ->check(CLI::IsMember(
            {"inequalities", "recurrence", "valuation", "integrality", "oracles", "all"}));

    auto* signs = app.add_subcommand("signs", "certified sign-change indices");

    auto* delta = app.add_subcommand("delta", "decay exponent ln|c_n|/ln n");
    long delta_n = 0;
    std::vector<long> delta_window;
    delta->add_option("--n", delta_n, "single-point enclosure at this index");
    delta->add_option("--window", delta_window, "fit envelope slope over [lo, hi]")
        ->expected(2);

    auto* identities = app.add_subcommand("identities", "sum_n c_n h_r(n) = 1/(r+1)");
    std::vector<long> id_rs;
    long id_N = 0;
    identities->add_option("--r", id_rs, "shift parameters (default 0 1 2 3)");
    identities->add_option("--N", id_N, "partial-sum cutoff (default n-max)");

    auto* functional = app.add_subcommand("functional", "sum_n c_n t^n G_2n(t) = 1");
    std::vector<double> fn_ts;
    long fn_N = 0;
    functional->add_option("--t", fn_ts, "evaluation points in [0,1) (default 0.1 0.5 0.9)");
    functional->add_option("--N", fn_N, "series cutoff cap (default n-max)");

    auto* integral =
        app.add_subcommand("integral", "integral_0^1 F(t x^2)/(1-t x) dx = 1");
    std::vector<double> in_ts;
    long in_N = 0, in_order = 40;
    integral->add_option("--t", in_ts, "evaluation points in [0,1) (default 0.1 0.5 0.9)");
    integral->add_option("--N", in_N, "series cutoff cap (default n-max)");
    integral->add_option("--order", in_order, "base quadrature order")->capture_default_str();

    auto* dirichlet = app.add_subcommand("dirichlet", "partial sums of sum c_n n^{-s}");
    double di_re = 0, di_im = 0;
    long di_N = 0;
    dirichlet->add_option("--s-re", di_re, "Re s (> -1/2)")->capture_default_str();
    dirichlet->add_option("--s-im", di_im, "Im s")->capture_default_str();
    dirichlet->add_option("--N", di_N, "partial-sum cutoff (default n-max)");

    auto* kcmd = app.add_subcommand("k", "enclosure of lim |p_n|^2");
    long k_n_used = 0;
    kcmd->add_option("--n-used", k_n_used, "truncation index (default n-max)");

    auto* cross = app.add_subcommand("cross-validate",
                                     "exact values against ball enclosures");
    long cv_exact_n = 0;
    cross->add_option("--exact-n", cv_exact_n, "exact-side range (default min(n-max, 500))");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    g.n_max_explicit = nmax_opt->count() > 0;

    try {
        if (app.got_subcommand(coeffs)) return emit_table(g, "coeffs");
        if (app.got_subcommand(sums)) return emit_table(g, "partial_sums");
        if (app.got_subcommand(norms)) return emit_table(g, "norms_sq");
        if (app.got_subcommand(energies)) return emit_table(g, "energies");
        if (app.got_subcommand(verify)) return cmd_verify(g, suites);
        if (app.got_subcommand(signs)) return cmd_signs(g);
        if (app.got_subcommand(delta)) {
            if ((delta_n > 0) == (delta_window.size() == 2)) {
                std::cerr << "delta: pass exactly one of --n or --window\n";
                return kUsage;
            }
            return cmd_delta(g, delta_n, delta_window);
        }
        if (app.got_subcommand(identities)) return cmd_identities(g, id_rs, id_N);
        if (app.got_subcommand(functional)) return cmd_functional(g, fn_ts, fn_N);
        if (app.got_subcommand(integral)) return cmd_integral(g, in_ts, in_N, in_order);
        if (app.got_subcommand(dirichlet)) return cmd_dirichlet(g, di_re, di_im, di_N);
        if (app.got_subcommand(kcmd)) return cmd_k(g, k_n_used);
        if (app.got_subcommand(cross)) return cmd_cross_validate(g, cv_exact_n);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << " (requested " << e.requested()
                  << ", cap " << e.cap() << ")\n";
        return kResource;
    } catch (const PrecisionError& e) {
        std::cerr << "precision: " << e.what() << "\n";
        return kResource;
    } catch (const CacheError& e) {
        std::cerr << "cache: " << e.what() << "\n";
        return kCache;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return kUsage;
}
