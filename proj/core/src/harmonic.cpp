#include "orthoseq/harmonic.hpp"

#include <algorithm>
#include <stdexcept>

namespace orthoseq {

Rational harmonic_number(long n) {
    if (n < 0) throw std::invalid_argument("harmonic_number: n < 0");
    Rational h = 0;
    for (long k = 1; k <= n; ++k)
        h += Rational(1, k);
    return h;
}

Ball zeta2(mpfr_prec_t prec) {
    Ball p = Ball::pi(prec);
    return p * p / 6;
}

Rational h_r_exact(long n, long r) {
    if (n == r) throw std::invalid_argument("h_r_exact: diagonal n == r");
    Rational num = 0;
    // H_{2n} - H_{n+r} telescopes to sum over (min,max] of the two endpoints
    long lo = std::min(2 * n, n + r), hi = std::max(2 * n, n + r);
    for (long k = lo + 1; k <= hi; ++k)
        num += Rational(1, k);
    if (2 * n < n + r) num = -num;
    return num / (n - r);
}

Ball h_r_diagonal(long r, mpfr_prec_t prec) {
    Ball v = zeta2(prec);
    Rational squares = 0;
    for (long k = 1; k <= 2 * r; ++k)
        squares += Rational(1, k * k);
    return v - Ball::from_rational(squares, prec);
}

std::variant<Rational, Ball> h_r(long n, long r, mpfr_prec_t prec) {
    if (n == r) return h_r_diagonal(r, prec);
    return h_r_exact(n, r);
}

Ball h_r_ball(long n, long r, mpfr_prec_t prec) {
    if (n == r) return h_r_diagonal(r, prec);
    return Ball::from_rational(h_r_exact(n, r), prec);
}

} // namespace orthoseq
