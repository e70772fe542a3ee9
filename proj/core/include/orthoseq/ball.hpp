#pragma once

#include "orthoseq/rational.hpp"

#include <mpfr.h>

#include <string>

namespace orthoseq {

enum class Trilean { False, True, Unknown };

const char* to_cstring(Trilean t);

// Real ball: the set of reals x with |x - mid| <= rad.
//
// Midpoints carry `precision` bits and are computed with round-to-nearest;
// radii live at a fixed small precision (radius_precision) and every radius
// operation rounds up. Every inexact midpoint operation widens the radius by
// one ulp of the result, so a Ball produced by any chain of operations
// encloses the exact value of the same chain applied to any members of the
// input balls.
class Ball {
public:
    static constexpr mpfr_prec_t radius_precision = 32;

    explicit Ball(mpfr_prec_t precision = 64);
    Ball(const Ball& o);
    Ball(Ball&& o) noexcept;
    Ball& operator=(const Ball& o);
    Ball& operator=(Ball&& o) noexcept;
    ~Ball();

    static Ball exact_si(long v, mpfr_prec_t prec);
    static Ball exact_ui(unsigned long v, mpfr_prec_t prec);
    static Ball exact_double(double v, mpfr_prec_t prec);
    static Ball from_integer(const Integer& z, mpfr_prec_t prec);
    static Ball from_rational(const Rational& q, mpfr_prec_t prec);
    static Ball inv_ui(unsigned long v, mpfr_prec_t prec); // 1/v
    static Ball pi(mpfr_prec_t prec);
    // takes ownership of nothing; copies mid at its own precision
    static Ball from_parts(mpfr_srcptr mid, mpfr_srcptr rad);
    // [lo, hi] as a ball at the given midpoint precision
    static Ball from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }
    mpfr_srcptr mid() const { return mid_; }
    mpfr_srcptr rad() const { return rad_; }
    bool is_exact() const { return mpfr_zero_p(rad_); }

    void lower(mpfr_ptr out) const; // rounded down into out
    void upper(mpfr_ptr out) const; // rounded up into out
    Rational lower_rational() const;
    Rational upper_rational() const;
    Rational mid_rational() const;
    double mid_double() const;
    double rad_double() const; // rounded up

    bool contains_zero() const;
    bool definitely_positive() const;
    bool definitely_negative() const;
    int certified_sign() const; // +1 / -1, or 0 when the sign is not certified
    bool contains(const Rational& q) const;
    bool contains(const Ball& o) const;
    Trilean less_than(const Ball& o) const;
    Trilean less_equal(const Ball& o) const;

    std::string to_string(int digits = 20) const;
    std::string mid_hex() const; // exact round-trippable hex float
    std::string rad_hex() const;

    friend Ball operator-(const Ball& a);
    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    friend Ball operator/(const Ball& a, const Ball& b);
    friend Ball operator+(const Ball& a, long s);
    friend Ball operator-(const Ball& a, long s);
    friend Ball operator*(const Ball& a, long s);
    friend Ball operator/(const Ball& a, long s);

    friend Ball abs_enclosure(const Ball& a); // enclosure of |x|
    friend Ball sqrt(const Ball& a);          // needs lower bound >= 0
    friend Ball log(const Ball& a);           // needs lower bound > 0
    friend Ball exp(const Ball& a);
    friend Ball sin(const Ball& a);
    friend Ball cos(const Ball& a);
    friend Ball pow_ui(const Ball& a, unsigned long k);

private:
    mpfr_t mid_;
    mpfr_t rad_;
};

} // namespace orthoseq
