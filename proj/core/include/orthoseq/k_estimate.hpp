#pragma once

#include "orthoseq/ball_table.hpp"

namespace orthoseq {

// Two-sided enclosure of K = lim |p_n|^2. The limit exists (the norms are
// nonincreasing and nonnegative); the distance to the limit is
// sum_{k>N} c_k^2/(2k+1) <= sum_{k>N} 30782/(k^3 (2k+1)) <= 30782/(6 N^3).
struct KEstimate {
    long n_used = 0;
    Ball enclosure;
    double lower = 0; // outward-rounded doubles of the enclosure
    double upper = 0;

    double width() const { return upper - lower; }
};

KEstimate estimate_K(const BallTable& table, long n_used);
KEstimate estimate_K(const BallTable& table); // n_used = table.n_max()

} // namespace orthoseq
