#include "orthoseq/ball.hpp"

#include <algorithm>
#include <stdexcept>

namespace orthoseq {

const char* to_cstring(Trilean t) {
    switch (t) {
        case Trilean::False: return "false";
        case Trilean::True: return "true";
        default: return "unknown";
    }
}

namespace {

struct Scratch {
    mpfr_t x;
    explicit Scratch(mpfr_prec_t p) { mpfr_init2(x, p); }
    ~Scratch() { mpfr_clear(x); }
    Scratch(const Scratch&) = delete;
    Scratch& operator=(const Scratch&) = delete;
};

// One ulp of `result`, added to rad (rounding up). Covers the round-to-nearest
// error of the midpoint operation that produced `result` with a factor-2
// margin (half an ulp of the pre-rounding value, whose binade is at most one
// below the result's).
void add_result_ulp(mpfr_ptr rad, mpfr_srcptr result) {
    Scratch t(Ball::radius_precision);
    if (mpfr_zero_p(result)) {
        // nearest-rounding to zero is exact unless the value underflowed
        mpfr_set_ui_2exp(t.x, 1, mpfr_get_emin(), MPFR_RNDU);
    } else {
        mpfr_set_ui_2exp(t.x, 1, mpfr_get_exp(result) - mpfr_get_prec(result), MPFR_RNDU);
    }
    mpfr_add(rad, rad, t.x, MPFR_RNDU);
}

void require_finite(mpfr_srcptr mid) {
    if (!mpfr_number_p(mid))
        throw std::domain_error("ball operation produced a non-finite midpoint");
}

void finalize(mpfr_ptr rad, mpfr_srcptr mid, int ternary) {
    require_finite(mid);
    if (ternary != 0) add_result_ulp(rad, mid);
}

Rational rational_of(mpfr_srcptr x) {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

} // namespace

Ball::Ball(mpfr_prec_t precision) {
    if (precision < MPFR_PREC_MIN) precision = MPFR_PREC_MIN;
    mpfr_init2(mid_, precision);
    mpfr_init2(rad_, radius_precision);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& o) {
    mpfr_init2(mid_, mpfr_get_prec(o.mid_));
    mpfr_init2(rad_, radius_precision);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept {
    mpfr_init2(mid_, MPFR_PREC_MIN);
    mpfr_init2(rad_, radius_precision);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
}

Ball& Ball::operator=(const Ball& o) {
    if (this != &o) {
        mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
    }
    return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
    if (this != &o) {
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
    }
    return *this;
}

Ball::~Ball() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

Ball Ball::exact_si(long v, mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_set_si(b.mid_, v, MPFR_RNDN);
    finalize(b.rad_, b.mid_, t);
    return b;
}

Ball Ball::exact_ui(unsigned long v, mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_set_ui(b.mid_, v, MPFR_RNDN);
    finalize(b.rad_, b.mid_, t);
    return b;
}

Ball Ball::exact_double(double v, mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_set_d(b.mid_, v, MPFR_RNDN);
    finalize(b.rad_, b.mid_, t);
    return b;
}

Ball Ball::from_integer(const Integer& z, mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_set_z(b.mid_, z.get_mpz_t(), MPFR_RNDN);
    finalize(b.rad_, b.mid_, t);
    return b;
}

Ball Ball::from_rational(const Rational& q, mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_set_q(b.mid_, q.get_mpq_t(), MPFR_RNDN);
    finalize(b.rad_, b.mid_, t);
    return b;
}

Ball Ball::inv_ui(unsigned long v, mpfr_prec_t prec) {
    if (v == 0) throw std::domain_error("inv_ui(0)");
    Ball b(prec);
    mpfr_set_ui(b.mid_, 1, MPFR_RNDN);
    int t = mpfr_div_ui(b.mid_, b.mid_, v, MPFR_RNDN);
    finalize(b.rad_, b.mid_, t);
    return b;
}

Ball Ball::pi(mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_const_pi(b.mid_, MPFR_RNDN);
    finalize(b.rad_, b.mid_, t);
    return b;
}

Ball Ball::from_parts(mpfr_srcptr mid, mpfr_srcptr rad) {
    if (mpfr_sgn(rad) < 0) throw std::invalid_argument("negative ball radius");
    Ball b(mpfr_get_prec(mid));
    mpfr_set(b.mid_, mid, MPFR_RNDN);
    mpfr_set(b.rad_, rad, MPFR_RNDU);
    require_finite(b.mid_);
    return b;
}

Ball Ball::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
    if (mpfr_cmp(lo, hi) > 0) throw std::invalid_argument("from_endpoints: lo > hi");
    Ball b(prec);
    mpfr_add(b.mid_, lo, hi, MPFR_RNDN);
    mpfr_mul_2si(b.mid_, b.mid_, -1, MPFR_RNDN);
    require_finite(b.mid_);
    Scratch d1(radius_precision), d2(radius_precision);
    mpfr_sub(d1.x, b.mid_, lo, MPFR_RNDU);
    mpfr_sub(d2.x, hi, b.mid_, MPFR_RNDU);
    if (mpfr_cmp(d1.x, d2.x) >= 0)
        mpfr_set(b.rad_, d1.x, MPFR_RNDU);
    else
        mpfr_set(b.rad_, d2.x, MPFR_RNDU);
    if (mpfr_sgn(b.rad_) < 0) mpfr_set_zero(b.rad_, 1);
    return b;
}

void Ball::lower(mpfr_ptr out) const { mpfr_sub(out, mid_, rad_, MPFR_RNDD); }
void Ball::upper(mpfr_ptr out) const { mpfr_add(out, mid_, rad_, MPFR_RNDU); }

Rational Ball::mid_rational() const { return rational_of(mid_); }

Rational Ball::lower_rational() const { return rational_of(mid_) - rational_of(rad_); }

Rational Ball::upper_rational() const { return rational_of(mid_) + rational_of(rad_); }

double Ball::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

double Ball::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

bool Ball::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

bool Ball::definitely_positive() const {
    return mpfr_sgn(mid_) > 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

bool Ball::definitely_negative() const {
    return mpfr_sgn(mid_) < 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

int Ball::certified_sign() const {
    if (definitely_positive()) return 1;
    if (definitely_negative()) return -1;
    return 0;
}

bool Ball::contains(const Rational& q) const {
    Rational diff = q - rational_of(mid_);
    return abs(diff) <= rational_of(rad_);
}

bool Ball::contains(const Ball& o) const {
    return lower_rational() <= o.lower_rational() && o.upper_rational() <= upper_rational();
}

Trilean Ball::less_than(const Ball& o) const {
    if (upper_rational() < o.lower_rational()) return Trilean::True;
    if (lower_rational() >= o.upper_rational()) return Trilean::False;
    return Trilean::Unknown;
}

Trilean Ball::less_equal(const Ball& o) const {
    if (upper_rational() <= o.lower_rational()) return Trilean::True;
    if (lower_rational() > o.upper_rational()) return Trilean::False;
    return Trilean::Unknown;
}

std::string Ball::to_string(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re +/- %.3Re", digits, mid_, rad_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string Ball::mid_hex() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", mid_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string Ball::rad_hex() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", rad_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Ball operator-(const Ball& a) {
    Ball r(a.precision());
    mpfr_neg(r.mid_, a.mid_, MPFR_RNDN); // exact
    mpfr_set(r.rad_, a.rad_, MPFR_RNDU);
    return r;
}

Ball operator+(const Ball& a, const Ball& b) {
    Ball r(std::max(a.precision(), b.precision()));
    int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    finalize(r.rad_, r.mid_, t);
    return r;
}

Ball operator-(const Ball& a, const Ball& b) {
    Ball r(std::max(a.precision(), b.precision()));
    int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    finalize(r.rad_, r.mid_, t);
    return r;
}

Ball operator*(const Ball& a, const Ball& b) {
    Ball r(std::max(a.precision(), b.precision()));
    int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // |am| rb + |bm| ra + ra rb, everything upward
    Scratch am(Ball::radius_precision), bm(Ball::radius_precision), acc(Ball::radius_precision);
    mpfr_abs(am.x, a.mid_, MPFR_RNDU);
    mpfr_abs(bm.x, b.mid_, MPFR_RNDU);
    mpfr_mul(am.x, am.x, b.rad_, MPFR_RNDU);
    mpfr_mul(bm.x, bm.x, a.rad_, MPFR_RNDU);
    mpfr_mul(acc.x, a.rad_, b.rad_, MPFR_RNDU);
    mpfr_add(acc.x, acc.x, am.x, MPFR_RNDU);
    mpfr_add(acc.x, acc.x, bm.x, MPFR_RNDU);
    mpfr_set(r.rad_, acc.x, MPFR_RNDU);
    finalize(r.rad_, r.mid_, t);
    return r;
}

Ball operator/(const Ball& a, const Ball& b) {
    if (mpfr_cmpabs(b.mid_, b.rad_) <= 0)
        throw std::domain_error("ball division by an interval containing zero");
    Ball r(std::max(a.precision(), b.precision()));
    // lower bound on |y| for y in b
    Scratch lo(Ball::radius_precision);
    mpfr_abs(lo.x, b.mid_, MPFR_RNDD);
    mpfr_sub(lo.x, lo.x, b.rad_, MPFR_RNDD);
    if (mpfr_sgn(lo.x) <= 0)
        throw std::domain_error("ball division: divisor lower bound not positive");
    int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // upper bound on |am/bm|
    Scratch q(Ball::radius_precision), den(Ball::radius_precision), num(Ball::radius_precision);
    mpfr_abs(q.x, a.mid_, MPFR_RNDU);
    mpfr_abs(den.x, b.mid_, MPFR_RNDD);
    mpfr_div(q.x, q.x, den.x, MPFR_RNDU);
    mpfr_mul(q.x, q.x, b.rad_, MPFR_RNDU);
    mpfr_add(num.x, q.x, a.rad_, MPFR_RNDU);
    mpfr_div(num.x, num.x, lo.x, MPFR_RNDU);
    mpfr_set(r.rad_, num.x, MPFR_RNDU);
    finalize(r.rad_, r.mid_, t);
    return r;
}

Ball operator+(const Ball& a, long s) {
    Ball r(a.precision());
    int t = mpfr_add_si(r.mid_, a.mid_, s, MPFR_RNDN);
    mpfr_set(r.rad_, a.rad_, MPFR_RNDU);
    finalize(r.rad_, r.mid_, t);
    return r;
}

Ball operator-(const Ball& a, long s) { return a + (-s); }

Ball operator*(const Ball& a, long s) {
    Ball r(a.precision());
    int t = mpfr_mul_si(r.mid_, a.mid_, s, MPFR_RNDN);
    unsigned long mag = (s < 0) ? static_cast<unsigned long>(-(s + 1)) + 1UL
                                : static_cast<unsigned long>(s);
    mpfr_mul_ui(r.rad_, a.rad_, mag, MPFR_RNDU);
    finalize(r.rad_, r.mid_, t);
    return r;
}

Ball operator/(const Ball& a, long s) {
    if (s == 0) throw std::domain_error("ball division by zero scalar");
    Ball r(a.precision());
    int t = mpfr_div_si(r.mid_, a.mid_, s, MPFR_RNDN);
    unsigned long mag = (s < 0) ? static_cast<unsigned long>(-(s + 1)) + 1UL
                                : static_cast<unsigned long>(s);
    mpfr_div_ui(r.rad_, a.rad_, mag, MPFR_RNDU);
    finalize(r.rad_, r.mid_, t);
    return r;
}

Ball abs_enclosure(const Ball& a) {
    if (a.definitely_positive()) return a;
    if (a.definitely_negative()) return -a;
    // straddles zero: |x| in [0, |mid| + rad]
    Scratch zero(MPFR_PREC_MIN), hi(a.precision() + 32);
    mpfr_set_zero(zero.x, 1);
    mpfr_abs(hi.x, a.mid_, MPFR_RNDU);
    mpfr_add(hi.x, hi.x, a.rad_, MPFR_RNDU);
    return Ball::from_endpoints(zero.x, hi.x, a.precision());
}

namespace {

// monotone map applied to endpoints, rounded outward at prec+32
template <typename F>
Ball monotone_increasing(const Ball& a, mpfr_prec_t prec, F&& f) {
    Scratch lo(prec + 32), hi(prec + 32);
    mpfr_sub(lo.x, a.mid(), a.rad(), MPFR_RNDD);
    mpfr_add(hi.x, a.mid(), a.rad(), MPFR_RNDU);
    f(lo.x, lo.x, MPFR_RNDD);
    f(hi.x, hi.x, MPFR_RNDU);
    require_finite(lo.x);
    require_finite(hi.x);
    return Ball::from_endpoints(lo.x, hi.x, prec);
}

} // namespace

Ball sqrt(const Ball& a) {
    if (mpfr_cmp(a.mid(), a.rad()) < 0)
        throw std::domain_error("sqrt of a ball not certified nonnegative");
    return monotone_increasing(a, a.precision(), [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) {
        mpfr_sqrt(out, in, rnd);
    });
}

Ball log(const Ball& a) {
    if (mpfr_cmp(a.mid(), a.rad()) <= 0)
        throw std::domain_error("log of a ball not certified positive");
    return monotone_increasing(a, a.precision(), [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) {
        mpfr_log(out, in, rnd);
    });
}

Ball exp(const Ball& a) {
    return monotone_increasing(a, a.precision(), [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) {
        mpfr_exp(out, in, rnd);
    });
}

Ball sin(const Ball& a) {
    Ball r(a.precision());
    int t = mpfr_sin(r.mid_, a.mid_, MPFR_RNDN);
    mpfr_set(r.rad_, a.rad_, MPFR_RNDU); // Lipschitz constant 1
    finalize(r.rad_, r.mid_, t);
    return r;
}

Ball cos(const Ball& a) {
    Ball r(a.precision());
    int t = mpfr_cos(r.mid_, a.mid_, MPFR_RNDN);
    mpfr_set(r.rad_, a.rad_, MPFR_RNDU);
    finalize(r.rad_, r.mid_, t);
    return r;
}

Ball pow_ui(const Ball& a, unsigned long k) {
    mpfr_prec_t prec = a.precision();
    if (k == 0) return Ball::exact_ui(1, prec);
    if (k == 1) return a;

    Scratch lo(prec + 32), hi(prec + 32);
    mpfr_sub(lo.x, a.mid(), a.rad(), MPFR_RNDD);
    mpfr_add(hi.x, a.mid(), a.rad(), MPFR_RNDU);

    bool odd = (k % 2 != 0);
    if (odd || mpfr_sgn(lo.x) >= 0) {
        // x^k monotone increasing on the whole line (odd k) or on [0, inf)
        mpfr_pow_ui(lo.x, lo.x, k, MPFR_RNDD);
        mpfr_pow_ui(hi.x, hi.x, k, MPFR_RNDU);
        require_finite(lo.x);
        require_finite(hi.x);
        return Ball::from_endpoints(lo.x, hi.x, prec);
    }
    if (mpfr_sgn(hi.x) <= 0) {
        // even k on a nonpositive interval: decreasing
        Scratch out_lo(prec + 32), out_hi(prec + 32);
        mpfr_pow_ui(out_lo.x, hi.x, k, MPFR_RNDD);
        mpfr_pow_ui(out_hi.x, lo.x, k, MPFR_RNDU);
        require_finite(out_lo.x);
        require_finite(out_hi.x);
        return Ball::from_endpoints(out_lo.x, out_hi.x, prec);
    }
    // even k straddling zero: [0, max(|lo|, |hi|)^k]
    Scratch m(prec + 32), zero(MPFR_PREC_MIN);
    mpfr_abs(lo.x, lo.x, MPFR_RNDU);
    mpfr_abs(hi.x, hi.x, MPFR_RNDU);
    mpfr_max(m.x, lo.x, hi.x, MPFR_RNDU);
    mpfr_pow_ui(m.x, m.x, k, MPFR_RNDU);
    require_finite(m.x);
    mpfr_set_zero(zero.x, 1);
    return Ball::from_endpoints(zero.x, m.x, prec);
}

} // namespace orthoseq
