#pragma once

#include "orthoseq/ball_table.hpp"

#include <utility>
#include <vector>

namespace orthoseq {

// Enclosure of ln|c_n| / ln n for n >= 2. Requires the ball's sign to be
// certified (otherwise |c_n| has no positive lower bound).
Ball delta_point_estimate(const BallTable& table, long n);

struct EnvelopeFit {
    long n_lo = 0;
    long n_hi = 0;
    std::vector<std::pair<long, double>> points; // (n, ln|c_n|/ln n) per fitted point
    double slope = 0;
    double half_width = 0;       // 2 standard errors of the OLS slope
    bool used_local_maxima = true; // false: too few maxima, fitted all points
};

// Least-squares slope of ln|c_n| against ln n over [n_lo, n_hi], preferring
// the local maxima of |c_n| (the oscillation envelope). When the window
// offers fewer than 10 maxima (e.g. monotone decay) every certified point is
// used instead. Throws std::invalid_argument below 10 usable points.
EnvelopeFit fit_envelope_slope(const BallTable& table, long n_lo, long n_hi);

} // namespace orthoseq
