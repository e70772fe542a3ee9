#include "orthoseq/k_estimate.hpp"

#include <stdexcept>

namespace orthoseq {

KEstimate estimate_K(const BallTable& t, long n_used) {
    if (n_used < 1 || n_used > t.n_max())
        throw std::invalid_argument("estimate_K: n_used out of range");

    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(t.precision_bits);
    KEstimate k;
    k.n_used = n_used;

    // |c_m|^2 <= 30782 / m^3, so the tail sum_{m>N} c_m^2/(2m+1) is at most
    // sum_{m>N} 30782 / (2 m^4) <= 30782 / (6 N^3) by integral comparison.
    mpfr_t tail, lo, hi;
    mpfr_init2(tail, 64);
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);

    mpfr_set_ui(tail, 30782, MPFR_RNDU);
    mpfr_div_ui(tail, tail, 6, MPFR_RNDU);
    for (int i = 0; i < 3; ++i)
        mpfr_div_ui(tail, tail, static_cast<unsigned long>(n_used), MPFR_RNDU);

    const Ball& norm = t.norms_sq[n_used];
    norm.lower(lo);
    mpfr_sub(lo, lo, tail, MPFR_RNDD);
    if (mpfr_sgn(lo) < 0) mpfr_set_zero(lo, 1); // the limit is a squared norm
    norm.upper(hi);

    k.enclosure = Ball::from_endpoints(lo, hi, prec);
    k.lower = mpfr_get_d(lo, MPFR_RNDD);
    k.upper = mpfr_get_d(hi, MPFR_RNDU);

    mpfr_clears(tail, lo, hi, (mpfr_ptr) nullptr);
    return k;
}

KEstimate estimate_K(const BallTable& t) { return estimate_K(t, t.n_max()); }

} // namespace orthoseq
