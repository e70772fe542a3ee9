#include "orthoseq/identities.hpp"
#include "orthoseq/harmonic.hpp"

#include <stdexcept>

namespace orthoseq {

IdentityEvaluation identity_partial_sum(const BallTable& t, long r, long N) {
    if (r < 0) throw std::invalid_argument("identity_partial_sum: r < 0");
    if (N < 2 || N > t.n_max())
        throw std::invalid_argument("identity_partial_sum: N out of range");

    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(t.precision_bits);
    IdentityEvaluation ev;
    ev.r = r;
    ev.N = N;

    Ball H2n = Ball::exact_si(0, prec);
    Ball Hnr = Ball::exact_si(0, prec); // H_{n+r}
    for (long k = 1; k <= r; ++k)
        Hnr = Hnr + Ball::inv_ui(static_cast<unsigned long>(k), prec);

    Ball partial = Ball::exact_si(0, prec);
    Ball term0(prec), term1(prec);
    for (long n = 0; n <= N; ++n) {
        if (n > 0) {
            H2n = H2n + Ball::inv_ui(2 * n - 1, prec) + Ball::inv_ui(2 * n, prec);
            Hnr = Hnr + Ball::inv_ui(static_cast<unsigned long>(n + r), prec);
        }
        Ball h = (n == r) ? h_r_diagonal(r, prec) : (H2n - Hnr) / (n - r);
        Ball term = t.coeffs[n] * h;
        partial = partial + term;
        if (n == 0) term0 = term;
        if (n == 1) term1 = term;
    }

    ev.partial = partial;
    ev.target = Ball::from_rational(Rational(1, r + 1), prec);
    ev.residual = partial - ev.target;

    // dropping the first term(s) turns the identity into the reported
    // closed forms involving pi^2
    if (r == 0) {
        ev.has_rearranged = true;
        ev.rearranged_partial = partial - term0;
        ev.rearranged_target = Ball::exact_si(1, prec) - zeta2(prec);
        ev.rearranged_residual = ev.rearranged_partial - ev.rearranged_target;
    } else if (r == 1) {
        ev.has_rearranged = true;
        ev.rearranged_partial = partial - term0 - term1;
        Ball p = Ball::pi(prec);
        ev.rearranged_target = p * p / 4 - Ball::from_rational(Rational(19, 8), prec);
        ev.rearranged_residual = ev.rearranged_partial - ev.rearranged_target;
    }
    return ev;
}

} // namespace orthoseq
