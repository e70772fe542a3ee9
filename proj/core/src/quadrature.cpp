#include "orthoseq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orthoseq {

namespace {

// P_m and P_{m-1} at x via the three-term recurrence, m >= 1
void legendre_pair(long m, mpfr_srcptr x, mpfr_ptr pm, mpfr_ptr pmm1, mpfr_prec_t wp) {
    mpfr_t p0, p1, p2, t1, t2;
    mpfr_inits2(wp, p0, p1, p2, t1, t2, (mpfr_ptr) nullptr);
    mpfr_set_ui(p0, 1, MPFR_RNDN);
    mpfr_set(p1, x, MPFR_RNDN);
    for (long k = 1; k < m; ++k) {
        mpfr_mul(t1, x, p1, MPFR_RNDN);
        mpfr_mul_ui(t1, t1, static_cast<unsigned long>(2 * k + 1), MPFR_RNDN);
        mpfr_mul_ui(t2, p0, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_sub(p2, t1, t2, MPFR_RNDN);
        mpfr_div_ui(p2, p2, static_cast<unsigned long>(k + 1), MPFR_RNDN);
        mpfr_set(p0, p1, MPFR_RNDN);
        mpfr_set(p1, p2, MPFR_RNDN);
    }
    mpfr_set(pm, p1, MPFR_RNDN);
    mpfr_set(pmm1, p0, MPFR_RNDN);
    mpfr_clears(p0, p1, p2, t1, t2, (mpfr_ptr) nullptr);
}

} // namespace

GaussLegendre gauss_legendre_01(long order, mpfr_prec_t prec) {
    if (order < 1) throw std::invalid_argument("gauss_legendre_01: order < 1");
    const mpfr_prec_t wp = prec + 64;

    GaussLegendre gl;
    gl.order = order;
    gl.nodes.reserve(static_cast<size_t>(order));
    gl.weights.reserve(static_cast<size_t>(order));

    mpfr_t x, dx, pm, pmm1, dpm, t1, t2, tol, pi;
    mpfr_inits2(wp, x, dx, pm, pmm1, dpm, t1, t2, tol, pi, (mpfr_ptr) nullptr);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_ui(tol, 1, MPFR_RNDN);
    mpfr_div_2ui(tol, tol, static_cast<unsigned long>(prec + 32), MPFR_RNDN);

    mpfr_t xm, zr;
    mpfr_init2(xm, prec);
    mpfr_init2(zr, Ball::radius_precision);
    mpfr_set_zero(zr, 1);

    for (long i = 1; i <= order; ++i) {
        // seed: cos(pi (4i-1)/(4m+2))
        mpfr_mul_ui(x, pi, static_cast<unsigned long>(4 * i - 1), MPFR_RNDN);
        mpfr_div_ui(x, x, static_cast<unsigned long>(4 * order + 2), MPFR_RNDN);
        mpfr_cos(x, x, MPFR_RNDN);

        for (int it = 0; it < 200; ++it) {
            legendre_pair(order, x, pm, pmm1, wp);
            // P'_m = m (x P_m - P_{m-1}) / (x^2 - 1)
            mpfr_mul(t1, x, pm, MPFR_RNDN);
            mpfr_sub(t1, t1, pmm1, MPFR_RNDN);
            mpfr_mul_ui(t1, t1, static_cast<unsigned long>(order), MPFR_RNDN);
            mpfr_sqr(t2, x, MPFR_RNDN);
            mpfr_sub_ui(t2, t2, 1, MPFR_RNDN);
            mpfr_div(dpm, t1, t2, MPFR_RNDN);

            mpfr_div(dx, pm, dpm, MPFR_RNDN);
            mpfr_sub(x, x, dx, MPFR_RNDN);
            if (mpfr_cmpabs(dx, tol) <= 0) break;
        }

        legendre_pair(order, x, pm, pmm1, wp);
        mpfr_mul(t1, x, pm, MPFR_RNDN);
        mpfr_sub(t1, t1, pmm1, MPFR_RNDN);
        mpfr_mul_ui(t1, t1, static_cast<unsigned long>(order), MPFR_RNDN);
        mpfr_sqr(t2, x, MPFR_RNDN);
        mpfr_sub_ui(t2, t2, 1, MPFR_RNDN);
        mpfr_div(dpm, t1, t2, MPFR_RNDN);

        // weight on [0,1]: 1/((1-x^2) P'^2); node: (1+x)/2
        mpfr_sqr(t1, x, MPFR_RNDN);
        mpfr_ui_sub(t1, 1, t1, MPFR_RNDN);
        mpfr_sqr(t2, dpm, MPFR_RNDN);
        mpfr_mul(t1, t1, t2, MPFR_RNDN);
        mpfr_ui_div(t1, 1, t1, MPFR_RNDN);
        mpfr_set(xm, t1, MPFR_RNDN);
        gl.weights.push_back(Ball::from_parts(xm, zr));

        mpfr_add_ui(t1, x, 1, MPFR_RNDN);
        mpfr_div_2ui(t1, t1, 1, MPFR_RNDN);
        mpfr_set(xm, t1, MPFR_RNDN);
        gl.nodes.push_back(Ball::from_parts(xm, zr));
    }

    mpfr_clears(x, dx, pm, pmm1, dpm, t1, t2, tol, pi, (mpfr_ptr) nullptr);
    mpfr_clears(xm, zr, (mpfr_ptr) nullptr);
    return gl;
}

namespace {

constexpr double kSeriesCutoff = 1e-30;

// sum_{n>=m} |c_n| z^n <= sqrt(30782) m^{-3/2} z^m / (1-z), rounded up
double f_tail_bound(long m, mpfr_srcptr z_hi) {
    mpfr_t tb, s, p, d;
    mpfr_inits2(64, tb, s, p, d, (mpfr_ptr) nullptr);
    mpfr_sqrt_ui(tb, 30782, MPFR_RNDU);
    mpfr_sqrt_ui(s, static_cast<unsigned long>(m), MPFR_RNDD);
    mpfr_mul_ui(s, s, static_cast<unsigned long>(m), MPFR_RNDD);
    mpfr_div(tb, tb, s, MPFR_RNDU);
    mpfr_pow_ui(p, z_hi, static_cast<unsigned long>(m), MPFR_RNDU);
    mpfr_mul(tb, tb, p, MPFR_RNDU);
    mpfr_ui_sub(d, 1, z_hi, MPFR_RNDD);
    mpfr_div(tb, tb, d, MPFR_RNDU);
    double out = mpfr_get_d(tb, MPFR_RNDU);
    mpfr_clears(tb, s, p, d, (mpfr_ptr) nullptr);
    return out;
}

struct NodeEval {
    Ball F;
    double tail = 0;
    long used = 0;
};

// F(z) = sum c_n z^n truncated, rigorous tail folded into the ball
NodeEval F_at(const BallTable& table, const Ball& z, long N) {
    const mpfr_prec_t prec = z.precision();
    mpfr_t zh, tb;
    mpfr_init2(zh, prec);
    mpfr_init2(tb, 64);
    z.upper(zh);
    if (mpfr_cmp_ui(zh, 1) >= 0) {
        mpfr_clears(zh, tb, (mpfr_ptr) nullptr);
        throw std::domain_error("F_at: z must lie in [0,1)");
    }

    NodeEval ev;
    Ball sum = Ball::exact_si(0, prec);
    Ball zp = Ball::exact_si(1, prec);
    double tail = 0;
    long used = 0;
    for (long n = 0; n <= N; ++n) {
        sum = sum + table.coeffs[n] * zp;
        zp = zp * z;
        used = n + 1;
        tail = f_tail_bound(n + 1, zh);
        if (tail <= kSeriesCutoff) break;
    }
    mpfr_set_d(tb, tail, MPFR_RNDU);
    mpfr_t ntb;
    mpfr_init2(ntb, 64);
    mpfr_neg(ntb, tb, MPFR_RNDD);
    ev.F = sum + Ball::from_endpoints(ntb, tb, prec);
    ev.tail = tail;
    ev.used = used;
    mpfr_clears(zh, tb, ntb, (mpfr_ptr) nullptr);
    return ev;
}

Ball quadrature_pass(const BallTable& table, const Ball& t, long N, long order,
                     mpfr_prec_t prec, long& max_used, double& max_tail) {
    GaussLegendre gl = gauss_legendre_01(order, prec);
    Ball Q = Ball::exact_si(0, prec);
    for (long i = 0; i < order; ++i) {
        const Ball& x = gl.nodes[static_cast<size_t>(i)];
        Ball z = t * x * x;
        NodeEval fe = F_at(table, z, N);
        max_used = std::max(max_used, fe.used);
        max_tail = std::max(max_tail, fe.tail);
        Ball denom = Ball::exact_si(1, prec) - t * x;
        Q = Q + gl.weights[static_cast<size_t>(i)] * fe.F / denom;
    }
    return Q;
}

} // namespace

IntegralResidual integral_equation_residual(const BallTable& table, const Ball& t,
                                            long N, long order) {
    if (N < 1 || N > table.n_max())
        throw std::invalid_argument("integral_equation_residual: N out of range");
    if (order < 2) throw std::invalid_argument("integral_equation_residual: order < 2");
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(table.precision_bits);

    mpfr_t lo, hi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    t.lower(lo);
    t.upper(hi);
    const bool bad = mpfr_sgn(lo) < 0 || mpfr_cmp_ui(hi, 1) >= 0;
    mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
    if (bad) throw std::domain_error("integral_equation_residual: t must lie in [0,1)");

    IntegralResidual res;
    long used = 0;
    double tail = 0;
    Ball q1 = quadrature_pass(table, t, N, order, prec, used, tail);
    Ball q2 = quadrature_pass(table, t, N, 2 * order, prec, used, tail);

    res.order = 2 * order;
    res.terms_used = used;
    res.value = q2;
    res.residual_abs = abs_enclosure(q2 - 1);
    res.quad_error_estimate = std::fabs((q2 - q1).mid_double());
    res.truncation_bound = tail;
    res.rigorous = false;
    return res;
}

} // namespace orthoseq
