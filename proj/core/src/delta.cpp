#include "orthoseq/delta.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace orthoseq {

Ball delta_point_estimate(const BallTable& t, long n) {
    if (n < 2 || n > t.n_max())
        throw std::invalid_argument("delta_point_estimate: n out of range");
    const Ball& c = t.coeffs[n];
    if (c.certified_sign() == 0)
        throw std::domain_error("delta_point_estimate: sign of c_n not certified");
    const Ball num = log(abs_enclosure(c));
    const Ball den = log(Ball::exact_ui(static_cast<unsigned long>(n), c.precision()));
    return num / den;
}

EnvelopeFit fit_envelope_slope(const BallTable& t, long n_lo, long n_hi) {
    if (n_lo < 2 || n_hi > t.n_max() || n_lo >= n_hi)
        throw std::invalid_argument("fit_envelope_slope: bad window");

    // |midpoint| per index, NaN where the sign is uncertified
    auto am = [&](long n) -> double {
        if (t.coeffs[n].certified_sign() == 0) return std::nan("");
        return std::fabs(t.coeffs[n].mid_double());
    };

    std::vector<long> maxima;
    for (long n = n_lo + 1; n < n_hi; ++n) {
        double here = am(n), left = am(n - 1), right = am(n + 1);
        if (std::isnan(here) || std::isnan(left) || std::isnan(right)) continue;
        if (here > left && here > right) maxima.push_back(n);
    }

    EnvelopeFit fit;
    fit.n_lo = n_lo;
    fit.n_hi = n_hi;
    std::vector<long> ns;
    if (maxima.size() >= 10) {
        ns = std::move(maxima);
    } else {
        fit.used_local_maxima = false;
        for (long n = n_lo; n <= n_hi; ++n)
            if (!std::isnan(am(n))) ns.push_back(n);
    }
    if (ns.size() < 10)
        throw std::invalid_argument("fit_envelope_slope: fewer than 10 usable points");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(ns.size());
    for (long n : ns) {
        double x = std::log(static_cast<double>(n));
        double y = std::log(am(n));
        fit.points.emplace_back(n, y / x);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double sxx_c = sxx - sx * sx / m;
    const double slope = (sxy - sx * sy / m) / sxx_c;
    const double intercept = (sy - slope * sx) / m;

    double ssr = 0;
    for (long n : ns) {
        double x = std::log(static_cast<double>(n));
        double r = std::log(am(n)) - (intercept + slope * x);
        ssr += r * r;
    }
    const double var = ssr / (m - 2) / sxx_c;
    fit.slope = slope;
    fit.half_width = 2 * std::sqrt(var > 0 ? var : 0);
    return fit;
}

} // namespace orthoseq
