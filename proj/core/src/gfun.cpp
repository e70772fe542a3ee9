#include "orthoseq/gfun.hpp"

#include <cmath>
#include <stdexcept>

namespace orthoseq {

namespace {

// series with geometric tail, valid for any t in [0,1)
Ball g_series(long n, const Ball& t, mpfr_srcptr hi) {
    const mpfr_prec_t prec = t.precision();
    const double th = mpfr_get_d(hi, MPFR_RNDU);

    long m = 1;
    if (th > 0)
        m = static_cast<long>(std::ceil((prec + 8) / -std::log2(th))) + 1;

    Ball sum = Ball::exact_si(0, prec);
    Ball tp = Ball::exact_si(1, prec);
    for (long k = 0; k < m; ++k) {
        sum = sum + tp / (n + k + 1);
        tp = tp * t;
    }

    // tail in [0, t^m / ((n+m+1)(1-t))]
    mpfr_t tb, utp, zero;
    mpfr_init2(tb, 64);
    mpfr_init2(utp, prec);
    mpfr_init2(zero, 32);
    mpfr_set_zero(zero, 1);
    mpfr_ui_sub(tb, 1, hi, MPFR_RNDD);
    mpfr_mul_ui(tb, tb, static_cast<unsigned long>(n + m + 1), MPFR_RNDD);
    tp.upper(utp);
    if (mpfr_sgn(utp) < 0) mpfr_set_zero(utp, 1);
    mpfr_div(tb, utp, tb, MPFR_RNDU);
    Ball tail = Ball::from_endpoints(zero, tb, prec);
    mpfr_clears(tb, utp, zero, (mpfr_ptr) nullptr);
    return sum + tail;
}

// -(log(1-t) + sum_{1<=k<=n} t^k/k) / t^{n+1}, at elevated precision to
// absorb the cancellation of the numerator down to ~t^{n+1}/(n+1)
Ball g_closed_form(long n, const Ball& t, mpfr_srcptr lo) {
    const mpfr_prec_t prec = t.precision();
    const double tl = mpfr_get_d(lo, MPFR_RNDD);
    const long cancel = static_cast<long>(std::ceil((n + 1) * -std::log2(tl)));
    const mpfr_prec_t wp = prec + static_cast<mpfr_prec_t>(cancel) + 32;

    Ball L = log(Ball::exact_si(1, wp) - t);
    Ball S = Ball::exact_si(0, wp);
    Ball tp = Ball::exact_si(1, wp);
    for (long k = 1; k <= n; ++k) {
        tp = tp * t;
        S = S + tp / k;
    }
    return -(L + S) / (tp * t);
}

} // namespace

Ball G(long n, const Ball& t) {
    if (n < 0) throw std::invalid_argument("G: n < 0");
    const mpfr_prec_t prec = t.precision();
    mpfr_t lo, hi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    t.lower(lo);
    t.upper(hi);
    if (mpfr_sgn(lo) < 0 || mpfr_cmp_ui(hi, 1) >= 0) {
        mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
        throw std::domain_error("G: t must lie in [0,1)");
    }

    Ball out = (mpfr_cmp_d(hi, 0.5) > 0 && mpfr_cmp_d(lo, 0.25) >= 0)
                   ? g_closed_form(n, t, lo)
                   : g_series(n, t, hi);
    mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
    return out;
}

namespace {

// sum_{n>=m} |c_n| t^n G_2n(t) <= sqrt(30782) m^{-3/2} t^m / ((2m+1)(1-t)^2),
// rounded up throughout
double tail_bound_from(long m, mpfr_srcptr t_hi) {
    mpfr_t tb, s, p, d;
    mpfr_inits2(64, tb, s, p, d, (mpfr_ptr) nullptr);
    mpfr_sqrt_ui(tb, 30782, MPFR_RNDU);
    mpfr_sqrt_ui(s, static_cast<unsigned long>(m), MPFR_RNDD);
    mpfr_mul_ui(s, s, static_cast<unsigned long>(m), MPFR_RNDD);
    mpfr_div(tb, tb, s, MPFR_RNDU);
    mpfr_pow_ui(p, t_hi, static_cast<unsigned long>(m), MPFR_RNDU);
    mpfr_mul(tb, tb, p, MPFR_RNDU);
    mpfr_div_ui(tb, tb, static_cast<unsigned long>(2 * m + 1), MPFR_RNDU);
    mpfr_ui_sub(d, 1, t_hi, MPFR_RNDD);
    mpfr_sqr(d, d, MPFR_RNDD);
    mpfr_div(tb, tb, d, MPFR_RNDU);
    double out = mpfr_get_d(tb, MPFR_RNDU);
    mpfr_clears(tb, s, p, d, (mpfr_ptr) nullptr);
    return out;
}

constexpr double kCutoffTarget = 1e-30;

} // namespace

double FunctionalResidual::worst_case() const {
    mpfr_t u;
    mpfr_init2(u, 64);
    residual_abs.upper(u);
    double v = mpfr_get_d(u, MPFR_RNDU);
    mpfr_clear(u);
    return v + tail_bound;
}

FunctionalResidual functional_equation_residual(const BallTable& table, const Ball& t, long N) {
    if (N < 1 || N > table.n_max())
        throw std::invalid_argument("functional_equation_residual: N out of range");
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(table.precision_bits);

    mpfr_t hi;
    mpfr_init2(hi, prec);
    t.upper(hi);
    if (mpfr_cmp_ui(hi, 1) >= 0) {
        mpfr_clear(hi);
        throw std::domain_error("functional_equation_residual: t must lie in [0,1)");
    }

    FunctionalResidual res;
    res.N = N;

    Ball partial = Ball::exact_si(0, prec);
    Ball tp = Ball::exact_si(1, prec);
    long used = 0;
    double tail = 0;
    for (long n = 0; n <= N; ++n) {
        partial = partial + table.coeffs[n] * tp * G(2 * n, t);
        tp = tp * t;
        used = n + 1;
        tail = tail_bound_from(n + 1, hi);
        if (tail <= kCutoffTarget) break;
    }
    mpfr_clear(hi);

    res.terms_used = used;
    res.tail_bound = tail;
    res.partial = partial;
    res.residual_abs = abs_enclosure(partial - 1);
    return res;
}

} // namespace orthoseq
