#pragma once

#include "orthoseq/ball_table.hpp"

#include <vector>

namespace orthoseq {

// Gauss-Legendre rule on [0,1]. Nodes and weights are correctly rounded
// point values at `prec` bits (not enclosures); fine for the heuristic
// quadrature below, do not treat as rigorous.
struct GaussLegendre {
    long order;
    std::vector<Ball> nodes;
    std::vector<Ball> weights;
};

GaussLegendre gauss_legendre_01(long order, mpfr_prec_t prec);

// integral_0^1 F(t x^2)/(1 - t x) dx = 1, where F(z) = sum c_n z^n.
// The series for F is truncated with a rigorous tail folded into the ball;
// the quadrature discretization error is only *estimated* by comparing the
// rule with the doubled-order rule, hence rigorous = false, always.
struct IntegralResidual {
    long order = 0;      // order of the reported (doubled) rule
    long terms_used = 0; // largest series cutoff over the nodes
    Ball value;          // doubled-order quadrature of the integral
    Ball residual_abs;   // |value - 1|
    double quad_error_estimate = 0; // |Q_{2m} - Q_m|
    double truncation_bound = 0;    // informational: largest per-node F tail
    bool rigorous = false;
};

IntegralResidual integral_equation_residual(const BallTable& table, const Ball& t,
                                            long N, long order);

} // namespace orthoseq
