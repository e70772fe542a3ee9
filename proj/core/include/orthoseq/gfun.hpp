#pragma once

#include "orthoseq/ball_table.hpp"

namespace orthoseq {

// G_n(t) = sum_{k>=0} t^k/(n+k+1) for 0 <= t < 1. Rigorous enclosure:
// series summation with a geometric tail bound when t <= 1/2, otherwise the
// closed form -(log(1-t) + sum_{k<=n} t^k/k)/t^{n+1} at elevated working
// precision (the numerator cancels down to ~t^{n+1}/(n+1)).
Ball G(long n, const Ball& t);

// sum_{n<=N} c_n t^n G_{2n}(t) = 1. The sum is cut off early once the
// remaining terms are provably below ~1e-30 (|c_n| <= sqrt(30782) n^{-3/2}
// makes the tail geometric); everything dropped is covered by tail_bound.
struct FunctionalResidual {
    long N = 0;          // terms available
    long terms_used = 0; // cutoff (number of summed terms)
    Ball partial;
    Ball residual_abs;       // |partial - 1|
    double tail_bound = 0;   // bound on sum_{n>=terms_used} |c_n t^n G_2n(t)|
    // largest possible |full sum - 1| consistent with this evaluation
    double worst_case() const;
};

FunctionalResidual functional_equation_residual(const BallTable& table, const Ball& t, long N);

} // namespace orthoseq
