#include "orthoseq/dirichlet.hpp"

#include <stdexcept>

namespace orthoseq {

namespace {

double dirichlet_tail_bound(double s_re, long N) {
    // sqrt(30782) N^{-(re+1/2)} / (re+1/2), every step rounded up
    mpfr_t tb, ex, dn, base, p;
    mpfr_inits2(64, tb, ex, dn, base, p, (mpfr_ptr) nullptr);
    mpfr_sqrt_ui(tb, 30782, MPFR_RNDU);
    mpfr_set_d(ex, s_re, MPFR_RNDN); // doubles are exact here
    mpfr_add_d(ex, ex, 0.5, MPFR_RNDD);
    mpfr_set(dn, ex, MPFR_RNDD);
    mpfr_neg(ex, ex, MPFR_RNDU);
    mpfr_set_ui(base, static_cast<unsigned long>(N), MPFR_RNDN);
    mpfr_pow(p, base, ex, MPFR_RNDU);
    mpfr_mul(tb, tb, p, MPFR_RNDU);
    mpfr_div(tb, tb, dn, MPFR_RNDU);
    double out = mpfr_get_d(tb, MPFR_RNDU);
    mpfr_clears(tb, ex, dn, base, p, (mpfr_ptr) nullptr);
    return out;
}

} // namespace

DirichletPoint dirichlet_partial(const BallTable& t, double s_re, double s_im, long N) {
    if (!(s_re > -0.5))
        throw std::domain_error("dirichlet_partial: need re(s) > -1/2");
    if (N < 1 || N > t.n_max())
        throw std::invalid_argument("dirichlet_partial: N out of range");

    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(t.precision_bits);
    DirichletPoint pt;
    pt.s_re = s_re;
    pt.s_im = s_im;
    pt.N = N;
    pt.tail_bound = dirichlet_tail_bound(s_re, N);

    if (s_re == 0 && s_im == 0) {
        // same sum as the partial-sums column, minus the n=0 term
        pt.real_part = t.partial_sums[N] - 1;
        pt.imag_part = Ball::exact_si(0, prec);
        return pt;
    }

    const Ball sigma = Ball::exact_double(s_re, prec);
    const Ball tau = Ball::exact_double(s_im, prec);
    Ball re = Ball::exact_si(0, prec);
    Ball im = Ball::exact_si(0, prec);
    for (long n = 1; n <= N; ++n) {
        Ball ln = log(Ball::exact_ui(static_cast<unsigned long>(n), prec));
        Ball r = exp(-(sigma * ln)); // n^{-re(s)}
        if (s_im == 0) {
            re = re + t.coeffs[n] * r;
        } else {
            Ball phase = tau * ln; // n^{-i tau} = cos - i sin
            re = re + t.coeffs[n] * r * cos(phase);
            im = im - t.coeffs[n] * r * sin(phase);
        }
    }
    pt.real_part = re;
    pt.imag_part = im;
    return pt;
}

} // namespace orthoseq
