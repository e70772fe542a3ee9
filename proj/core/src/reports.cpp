#include "orthoseq/reports.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orthoseq {

namespace {

using ordered_json = nlohmann::ordered_json;

double upper_double(const Ball& b) {
    mpfr_t u;
    mpfr_init2(u, 64);
    b.upper(u);
    double v = mpfr_get_d(u, MPFR_RNDU);
    mpfr_clear(u);
    return v;
}

ordered_json ball_json(const Ball& b) {
    return ordered_json{{"approx", b.mid_double()},
                        {"radius", b.rad_double()},
                        {"mid_hex", b.mid_hex()},
                        {"rad_hex", b.rad_hex()}};
}

const char* verdict_of(double magnitude, double tolerance) {
    return magnitude <= tolerance ? "pass" : "fail";
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string to_json(const InequalitySummary& s) {
    ordered_json j{{"n_max", s.n_max},
                   {"checks", s.checks},
                   {"failures", s.failures},
                   {"indeterminates", s.indeterminates},
                   {"pass", s.pass()}};
    ordered_json problems = ordered_json::array();
    for (const auto& row : s.problems)
        problems.push_back(ordered_json{{"n", row.n},
                                        {"id", row.inequality_id},
                                        {"status", to_cstring(row.status)}});
    j["problems"] = std::move(problems);
    if (!s.rows.empty()) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : s.rows)
            rows.push_back(ordered_json{{"n", row.n},
                                        {"id", row.inequality_id},
                                        {"status", to_cstring(row.status)}});
        j["rows"] = std::move(rows);
    }
    return dump(j);
}

std::string to_json(const SignChangeReport& s, const RatioReport* ratios) {
    ordered_json j{{"n_max", s.n_max},
                   {"indices", s.indices},
                   {"ambiguous", s.ambiguous},
                   {"includes_index_zero", s.includes_index_zero}};
    if (ratios) {
        ordered_json pairs = ordered_json::array();
        for (const auto& [a, b] : ratios->pairs)
            pairs.push_back(ordered_json::array({a, b}));
        j["ratios"] = ordered_json{{"pairs", std::move(pairs)},
                                   {"values", ratios->ratios}};
    }
    return dump(j);
}

std::string to_json(const EnvelopeFit& f) {
    ordered_json points = ordered_json::array();
    for (const auto& [n, d] : f.points)
        points.push_back(ordered_json{{"n", n}, {"delta", d}});
    return dump(ordered_json{{"n_lo", f.n_lo},
                             {"n_hi", f.n_hi},
                             {"slope", f.slope},
                             {"half_width", f.half_width},
                             {"used_local_maxima", f.used_local_maxima},
                             {"points", std::move(points)}});
}

std::string to_json(const KEstimate& k) {
    return dump(ordered_json{{"n_used", k.n_used},
                             {"lower", k.lower},
                             {"upper", k.upper},
                             {"width", k.width()},
                             {"enclosure", ball_json(k.enclosure)}});
}

std::string to_json(const CrossValidation& cv) {
    return dump(ordered_json{
        {"overlap_n_max", cv.overlap_n_max},
        {"containment_violations", cv.containment_violations},
        {"violating_indices", cv.violating_indices},
        {"max_normalized_discrepancy", cv.max_normalized_discrepancy},
        {"pass", cv.pass()}});
}

std::string to_json(const IdentityEvaluation& e, double tolerance) {
    const double resid_mag = upper_double(abs_enclosure(e.residual));
    ordered_json j{{"kind", "harmonic_identity"},
                   {"params", ordered_json{{"r", e.r}, {"N", e.N}}},
                   {"value", e.partial.mid_double()},
                   {"radius", e.partial.rad_double()},
                   {"target", e.target.mid_double()},
                   {"residual", e.residual.mid_double()},
                   {"residual_magnitude", resid_mag},
                   {"tail_bound", 0.0},
                   {"tolerance", tolerance},
                   {"verdict", verdict_of(resid_mag, tolerance)}};
    if (e.has_rearranged) {
        const double rmag = upper_double(abs_enclosure(e.rearranged_residual));
        j["rearranged"] = ordered_json{
            {"value", e.rearranged_partial.mid_double()},
            {"target", e.rearranged_target.mid_double()},
            {"residual", e.rearranged_residual.mid_double()},
            {"residual_magnitude", rmag},
            {"verdict", verdict_of(rmag, tolerance)}};
    }
    return dump(j);
}

std::string to_json(const FunctionalResidual& f, double t, double tolerance) {
    return dump(ordered_json{
        {"kind", "functional_equation"},
        {"params", ordered_json{{"t", t}, {"N", f.N}, {"terms_used", f.terms_used}}},
        {"value", f.partial.mid_double()},
        {"radius", f.partial.rad_double()},
        {"residual_magnitude", upper_double(f.residual_abs)},
        {"tail_bound", f.tail_bound},
        {"worst_case", f.worst_case()},
        {"tolerance", tolerance},
        {"verdict", verdict_of(f.worst_case(), tolerance)}});
}

std::string to_json(const IntegralResidual& i, double t, double tolerance) {
    const double resid = upper_double(i.residual_abs);
    return dump(ordered_json{
        {"kind", "integral_equation"},
        {"params",
         ordered_json{{"t", t}, {"order", i.order}, {"terms_used", i.terms_used}}},
        {"value", i.value.mid_double()},
        {"radius", i.value.rad_double()},
        {"residual_magnitude", resid},
        {"tail_bound", i.truncation_bound},
        {"quad_error_estimate", i.quad_error_estimate},
        {"rigorous", i.rigorous},
        {"tolerance", tolerance},
        {"verdict", verdict_of(resid, tolerance)}});
}

std::string to_json(const DirichletPoint& d) {
    return dump(ordered_json{
        {"kind", "dirichlet_partial"},
        {"params", ordered_json{{"s_re", d.s_re}, {"s_im", d.s_im}, {"N", d.N}}},
        {"value", d.real_part.mid_double()},
        {"value_im", d.imag_part.mid_double()},
        {"radius", std::max(d.real_part.rad_double(), d.imag_part.rad_double())},
        {"tail_bound", d.tail_bound},
        {"verdict", "none"}});
}

namespace {

const std::vector<Rational>& exact_column(const ExactTable& t, const std::string& name) {
    if (name == "coeffs") return t.coeffs;
    if (name == "partial_sums") return t.partial_sums;
    if (name == "norms_sq") return t.norms_sq;
    if (name == "energies") return t.energies;
    throw std::invalid_argument("unknown column: " + name);
}

const std::vector<Ball>& ball_column(const BallTable& t, const std::string& name) {
    if (name == "coeffs") return t.coeffs;
    if (name == "partial_sums") return t.partial_sums;
    if (name == "norms_sq") return t.norms_sq;
    if (name == "energies") return t.energies;
    throw std::invalid_argument("unknown column: " + name);
}

} // namespace

std::string table_csv(const ExactTable& t, const std::string& column) {
    const auto& col = exact_column(t, column);
    std::ostringstream out;
    out << "n," << column << "\n";
    for (long n = 0; n <= t.n_max(); ++n)
        out << n << ',' << col[static_cast<size_t>(n)].get_str() << '\n';
    return out.str();
}

std::string table_csv(const BallTable& t, const std::string& column) {
    const auto& col = ball_column(t, column);
    std::ostringstream out;
    out << "n,approx,mid_hex,rad_hex\n";
    for (long n = 0; n <= t.n_max(); ++n) {
        const Ball& b = col[static_cast<size_t>(n)];
        std::ostringstream approx;
        approx.precision(17);
        approx << b.mid_double();
        out << n << ',' << approx.str() << ',' << b.mid_hex() << ',' << b.rad_hex()
            << '\n';
    }
    return out.str();
}

std::string table_json(const ExactTable& t, const std::string& column) {
    const auto& col = exact_column(t, column);
    ordered_json values = ordered_json::array();
    for (long n = 0; n <= t.n_max(); ++n) {
        const Rational& q = col[static_cast<size_t>(n)];
        values.push_back(ordered_json{{"n", n},
                                      {"value", q.get_str()},
                                      {"approx", q.get_d()}});
    }
    return dump(ordered_json{{"engine", "exact"},
                             {"column", column},
                             {"n_max", t.n_max()},
                             {"values", std::move(values)}});
}

std::string table_json(const BallTable& t, const std::string& column) {
    const auto& col = ball_column(t, column);
    ordered_json values = ordered_json::array();
    for (long n = 0; n <= t.n_max(); ++n) {
        const Ball& b = col[static_cast<size_t>(n)];
        values.push_back(ordered_json{{"n", n},
                                      {"approx", b.mid_double()},
                                      {"radius", b.rad_double()},
                                      {"mid_hex", b.mid_hex()},
                                      {"rad_hex", b.rad_hex()}});
    }
    return dump(ordered_json{{"engine", "ball"},
                             {"column", column},
                             {"precision_bits", t.precision_bits},
                             {"n_max", t.n_max()},
                             {"values", std::move(values)}});
}

} // namespace orthoseq
