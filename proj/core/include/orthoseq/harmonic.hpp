#pragma once

#include "orthoseq/ball.hpp"
#include "orthoseq/rational.hpp"

#include <variant>

namespace orthoseq {

// H_n = 1 + 1/2 + ... + 1/n, exactly. O(n) big-rational additions; the
// denominators grow like e^n, so keep n modest.
Rational harmonic_number(long n);

// pi^2/6 as a ball
Ball zeta2(mpfr_prec_t prec);

// h_r(n) = (H_{2n} - H_{n+r})/(n - r) away from the diagonal (an exact
// rational), and pi^2/6 - sum_{1<=k<=2r} 1/k^2 on it (a ball).
Rational h_r_exact(long n, long r); // n != r
Ball h_r_diagonal(long r, mpfr_prec_t prec);
std::variant<Rational, Ball> h_r(long n, long r, mpfr_prec_t prec);
Ball h_r_ball(long n, long r, mpfr_prec_t prec);

} // namespace orthoseq
