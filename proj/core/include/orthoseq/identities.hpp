#pragma once

#include "orthoseq/ball_table.hpp"

namespace orthoseq {

// Partial sums of sum_n c_n h_r(n) = 1/(r+1), evaluated in ball arithmetic
// with incrementally maintained harmonic numbers.
struct IdentityEvaluation {
    long r = 0;
    long N = 0;
    Ball partial;  // sum_{n<=N} c_n h_r(n)
    Ball target;   // 1/(r+1)
    Ball residual; // partial - target

    // r = 0: sum_{n>=1} c_n (H_2n - H_n)/n          = 1 - pi^2/6
    // r = 1: sum_{n>=2} c_n (H_2n - H_{n+1})/(n-1)  = pi^2/4 - 19/8
    bool has_rearranged = false;
    Ball rearranged_partial;
    Ball rearranged_target;
    Ball rearranged_residual;
};

IdentityEvaluation identity_partial_sum(const BallTable& table, long r, long N);

} // namespace orthoseq
