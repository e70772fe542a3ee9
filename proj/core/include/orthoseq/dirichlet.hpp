#pragma once

#include "orthoseq/ball_table.hpp"

namespace orthoseq {

// Partial sum of C(s) = sum_{n>=1} c_n n^{-s} (the series converges for
// Re s > -1/2; C(0) = -1). Complex values are carried as two real balls.
struct DirichletPoint {
    double s_re = 0;
    double s_im = 0;
    long N = 0;
    Ball real_part;
    Ball imag_part;
    // |sum_{n>N} c_n n^{-s}| <= sqrt(30782) N^{-re(s)-1/2} / (re(s)+1/2)
    double tail_bound = 0;
};

// Throws std::domain_error for s_re <= -1/2 (no convergent tail bound there).
// At s = 0 the partial sum is taken directly from the partial_sums column
// (they are the same sum), keeping the two commands bit-identical.
DirichletPoint dirichlet_partial(const BallTable& table, double s_re, double s_im, long N);

} // namespace orthoseq
