#include "orthoseq/ball_table.hpp"

#include "orthoseq/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace orthoseq {

namespace {

struct MpfrArray {
    std::vector<__mpfr_struct> v;

    MpfrArray(size_t n, mpfr_prec_t p) : v(n) {
        for (auto& s : v) mpfr_init2(&s, p);
    }
    ~MpfrArray() {
        for (auto& s : v) mpfr_clear(&s);
    }
    MpfrArray(const MpfrArray&) = delete;
    MpfrArray& operator=(const MpfrArray&) = delete;

    mpfr_ptr operator[](size_t i) { return &v[i]; }
};

// Midpoints are computed in plain round-to-nearest arithmetic; radii come
// from a stability bound rather than per-operation interval propagation
// (which feeds the full history back into every step and doubles the width
// each time, ~2^n).
//
// Write the defining equations as L c = e_0 with L lower triangular,
// L_{jk} = 1/(j+1+k) for k <= j. The computed midpoints chat satisfy
// L chat = e_0 + rho, where rho_j is the exact residual of equation j over
// the computed values; standard rounding analysis of the inner loop gives
//   |rho_j| <= 2j * 2^(maxexp - p) + 2^(exp(S) - p + 1),
// maxexp being the largest exponent seen among the partial results, S the
// computed sum before the final scaling. So chat - c = L^{-1} rho, and the
// entries of L^{-1} obey |(L^{-1})_{nj}| <= sqrt((2n+1)(2j+1)): the j-th
// column u of L^{-1} solves <phi_m, x^m> = delta_{mj} for
// phi_m = sum_{k=j..m} u_k x^k, i.e. phi is the orthorecursive remainder
// sequence seeded with (2j+1) x^j; its L2 norm is nonincreasing and
// u_m^2/(2m+1) = |phi_{m-1}|^2 - |phi_m|^2 <= |phi_j|^2 = 2j+1.
// Hence
//   |chat_n - c_n| <= sqrt(2n+1) * sum_{j<=n} sqrt(2j+1) |rho_j|,
// accumulated upward as A_n. The factor-2 slack in both per-op terms covers
// exponent changes under rounding.
struct Attempt {
    long n_max;
    mpfr_prec_t prec;
    double target_rel;
    MpfrArray mid;
    MpfrArray rad;
    bool ok = true;
    long failed_at = -1;

    Attempt(long n, mpfr_prec_t p, double target,
            const std::function<void(long, long)>& progress)
        : n_max(n), prec(p), target_rel(target),
          mid(n + 1, p), rad(n + 1, Ball::radius_precision) {
        mpfr_t acc, term, A, P, s_up, tmp;
        mpfr_init2(acc, p);
        mpfr_init2(term, p);
        mpfr_init2(A, Ball::radius_precision);
        mpfr_init2(P, Ball::radius_precision);
        mpfr_init2(s_up, Ball::radius_precision);
        mpfr_init2(tmp, Ball::radius_precision);
        mpfr_set_zero(A, 1);

        mpfr_set_ui(mid[0], 1, MPFR_RNDN);
        mpfr_set_zero(rad[0], 1);

        const long step = std::max(1L, n_max / 200);
        for (long n = 1; n <= n_max && ok; ++n) {
            mpfr_set_zero(acc, 1);
            mpfr_exp_t maxexp = 0;
            bool seen = false;
            for (long k = 0; k < n; ++k) {
                mpfr_div_ui(term, mid[k], static_cast<unsigned long>(n + 1 + k), MPFR_RNDN);
                if (!mpfr_zero_p(term)) {
                    mpfr_exp_t e = mpfr_get_exp(term);
                    if (!seen || e > maxexp) { maxexp = e; seen = true; }
                }
                mpfr_add(acc, acc, term, MPFR_RNDN);
                if (!mpfr_zero_p(acc)) {
                    mpfr_exp_t e = mpfr_get_exp(acc);
                    if (!seen || e > maxexp) { maxexp = e; seen = true; }
                }
            }

            // |rho_n| <= P = 2n 2^(maxexp-p) + 2^(exp(S)-p+1)
            if (seen) {
                mpfr_set_ui(P, static_cast<unsigned long>(2 * n), MPFR_RNDU);
                mpfr_mul_2si(P, P, maxexp - prec, MPFR_RNDU);
            } else {
                mpfr_set_zero(P, 1);
            }
            if (!mpfr_zero_p(acc)) {
                mpfr_set_ui_2exp(tmp, 1, mpfr_get_exp(acc) - prec + 1, MPFR_RNDU);
                mpfr_add(P, P, tmp, MPFR_RNDU);
            }

            mpfr_mul_ui(mid[n], acc, static_cast<unsigned long>(2 * n + 1), MPFR_RNDN);
            mpfr_neg(mid[n], mid[n], MPFR_RNDN);

            mpfr_sqrt_ui(s_up, static_cast<unsigned long>(2 * n + 1), MPFR_RNDU);
            mpfr_mul(P, P, s_up, MPFR_RNDU);
            mpfr_add(A, A, P, MPFR_RNDU);
            mpfr_mul(rad[n], s_up, A, MPFR_RNDU);

            if (target_rel > 0) {
                // need rad <= target_rel * |mid| certainly
                if (mpfr_zero_p(mid[n])) {
                    ok = false;
                    failed_at = n;
                } else {
                    mpfr_abs(tmp, mid[n], MPFR_RNDD);
                    mpfr_mul_d(tmp, tmp, target_rel, MPFR_RNDD);
                    if (mpfr_cmp(rad[n], tmp) > 0) {
                        ok = false;
                        failed_at = n;
                    }
                }
            }
            if (progress && (n % step == 0 || n == n_max)) progress(n, n_max);
        }

        mpfr_clears(acc, term, A, P, s_up, tmp, static_cast<mpfr_ptr>(nullptr));
    }
};

void fill_derived(BallTable& t) {
    const long n_max = t.n_max();
    const mpfr_prec_t p = static_cast<mpfr_prec_t>(t.precision_bits);

    t.partial_sums.reserve(n_max + 1);
    t.norms_sq.reserve(n_max + 1);
    t.energies.reserve(n_max + 1);

    t.partial_sums.push_back(t.coeffs[0]);
    t.norms_sq.push_back(Ball::exact_ui(1, p));
    t.energies.push_back(Ball::exact_ui(0, p));

    for (long n = 1; n <= n_max; ++n) {
        const Ball& c = t.coeffs[n];
        t.partial_sums.push_back(t.partial_sums[n - 1] + c);
        t.norms_sq.push_back(t.norms_sq[n - 1] - (c * c) / (2 * n + 1));
        if (n == 1) {
            t.energies.push_back(c * c);
        } else if (n == 2) {
            const Ball& c1 = t.coeffs[1];
            t.energies.push_back(c1 * c1 + (c1 * c) * 2L + (c * c) * 4L / 3L);
        } else {
            Ball d = c * (t.partial_sums[n - 1] * 2L - t.coeffs[n - 1]) * n;
            Ball e = (c * c) * (n * n) / (2 * n - 1);
            t.energies.push_back(t.energies[n - 1] + d + e);
        }
    }
}

} // namespace

BallTable ball_coefficients(long n_max, const BallOptions& options) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    if (options.target_rel_radius < 0)
        throw std::invalid_argument("target_rel_radius must be nonnegative");

    long prec = options.precision_bits;
    if (prec == 0) prec = (n_max <= 2000) ? 128 : 256;
    if (prec < MPFR_PREC_MIN) throw std::invalid_argument("precision too small");

    for (;;) {
        Attempt a(n_max, static_cast<mpfr_prec_t>(prec), options.target_rel_radius,
                  options.progress);
        if (a.ok) {
            BallTable t;
            t.precision_bits = prec;
            t.coeffs.reserve(n_max + 1);
            for (long n = 0; n <= n_max; ++n)
                t.coeffs.push_back(Ball::from_parts(a.mid[n], a.rad[n]));
            fill_derived(t);
            return t;
        }
        if (2 * prec > options.max_precision_bits)
            throw PrecisionError("target relative radius unreachable within the precision cap",
                                 a.failed_at - 1, prec);
        prec *= 2;
    }
}

BallTable promote(const ExactTable& exact, long precision_bits) {
    if (precision_bits < MPFR_PREC_MIN)
        throw std::invalid_argument("precision too small");
    BallTable t;
    t.precision_bits = precision_bits;
    auto conv = [&](const std::vector<Rational>& col, std::vector<Ball>& out) {
        out.reserve(col.size());
        for (const auto& q : col)
            out.push_back(Ball::from_rational(q, static_cast<mpfr_prec_t>(precision_bits)));
    };
    conv(exact.coeffs, t.coeffs);
    conv(exact.partial_sums, t.partial_sums);
    conv(exact.norms_sq, t.norms_sq);
    conv(exact.energies, t.energies);
    return t;
}

BallTable assemble_ball_table(std::vector<Ball> coeffs, long precision_bits) {
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
    BallTable t;
    t.precision_bits = precision_bits;
    t.coeffs = std::move(coeffs);
    fill_derived(t);
    return t;
}

BallTable table_from_midpoints(const std::vector<double>& coeffs, long precision_bits) {
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
    BallTable t;
    t.precision_bits = precision_bits;
    t.coeffs.reserve(coeffs.size());
    for (double c : coeffs)
        t.coeffs.push_back(Ball::exact_double(c, static_cast<mpfr_prec_t>(precision_bits)));
    fill_derived(t);
    return t;
}

CrossValidation cross_validate(const ExactTable& exact, const BallTable& ball) {
    CrossValidation cv;
    cv.overlap_n_max = std::min(exact.n_max(), ball.n_max());

    auto check_column = [&](const std::vector<Rational>& ex, const std::vector<Ball>& ba,
                            long n, bool& violated_here) {
        const Rational& q = ex[n];
        const Ball& b = ba[n];
        Rational mid = b.mid_rational();
        Rational diff = abs(mid - q);
        Rational r = b.upper_rational() - mid; // exact radius as a rational
        if (diff > r) {
            ++cv.containment_violations;
            violated_here = true;
        }
        if (sgn(r) > 0) {
            double nd = Rational(diff / r).get_d();
            cv.max_normalized_discrepancy = std::max(cv.max_normalized_discrepancy, nd);
        } else if (sgn(diff) != 0) {
            cv.max_normalized_discrepancy = std::numeric_limits<double>::infinity();
        }
    };

    for (long n = 0; n <= cv.overlap_n_max; ++n) {
        bool violated = false;
        check_column(exact.coeffs, ball.coeffs, n, violated);
        check_column(exact.partial_sums, ball.partial_sums, n, violated);
        check_column(exact.norms_sq, ball.norms_sq, n, violated);
        check_column(exact.energies, ball.energies, n, violated);
        if (violated) cv.violating_indices.push_back(n);
    }
    return cv;
}

} // namespace orthoseq
