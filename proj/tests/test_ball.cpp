#include "doctest.h"

#include "orthoseq/ball.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

using namespace orthoseq;

namespace {

Ball interval(double lo, double hi, mpfr_prec_t prec = 64) {
    mpfr_t a, b;
    mpfr_init2(a, 64);
    mpfr_init2(b, 64);
    mpfr_set_d(a, lo, MPFR_RNDD);
    mpfr_set_d(b, hi, MPFR_RNDU);
    Ball r = Ball::from_endpoints(a, b, prec);
    mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
    return r;
}

} // namespace

TEST_SUITE("ball") {

TEST_CASE("exact constructors carry zero radius") {
    Ball a = Ball::exact_si(-7, 64);
    CHECK(a.is_exact());
    CHECK(a.mid_double() == -7.0);
    CHECK(a.certified_sign() == -1);
    CHECK(a.precision() == 64);

    CHECK(Ball::exact_ui(42, 64).mid_double() == 42.0);
    CHECK(Ball::exact_double(0.1, 64).is_exact()); // 0.1 as a double is dyadic
    CHECK(Ball::from_rational(rational(3, 8), 64).is_exact());
    CHECK(Ball::inv_ui(4, 64).is_exact());
    CHECK_THROWS_AS(Ball::inv_ui(0, 64), std::domain_error);
}

TEST_CASE("inexact conversions widen but still contain the value") {
    Ball third = Ball::from_rational(rational(1, 3), 64);
    CHECK_FALSE(third.is_exact());
    CHECK(third.contains(rational(1, 3)));
    CHECK(third.rad_double() < 1e-18);

    Ball inv7 = Ball::inv_ui(7, 64);
    CHECK(inv7.contains(rational(1, 7)));

    Integer big = Integer(1) << 100;
    CHECK(Ball::from_integer(big, 64).is_exact()); // one significant bit
    Ball off = Ball::from_integer(big + 1, 64);
    CHECK_FALSE(off.is_exact());
    CHECK(off.contains(Rational(big + 1)));
}

TEST_CASE("pi") {
    Ball p = Ball::pi(128);
    CHECK(p.mid_double() == doctest::Approx(3.14159265358979323846).epsilon(1e-15));
    CHECK(p.rad_double() < 1e-35);
}

TEST_CASE("arithmetic encloses the exact rational result") {
    std::mt19937 rng(20260819u);
    std::uniform_int_distribution<long> num(-99, 99), den(1, 99);
    for (int round = 0; round < 200; ++round) {
        Rational a = rational(num(rng), den(rng));
        Rational b = rational(num(rng), den(rng));
        Ball A = Ball::from_rational(a, 64);
        Ball B = Ball::from_rational(b, 96);

        CHECK((A + B).contains(a + b));
        CHECK((A - B).contains(a - b));
        CHECK((A * B).contains(a * b));
        CHECK((A + B).precision() == 96);
        if (sgn(b) != 0 && !B.contains_zero())
            CHECK((A / B).contains(Rational(a / b)));

        CHECK((-A).contains(Rational(-a)));
        CHECK(abs_enclosure(A).contains(Rational(abs(a))));
        CHECK(pow_ui(A, 3).contains(Rational(a * a * a)));

        long s = num(rng);
        CHECK((A + s).contains(Rational(a + s)));
        CHECK((A - s).contains(Rational(a - s)));
        CHECK((A * s).contains(Rational(a * s)));
        if (s != 0) CHECK((A / s).contains(Rational(a / s)));
    }
    CHECK_THROWS_AS(Ball::exact_si(1, 64) / 0, std::domain_error);
}

TEST_CASE("division by an interval containing zero is refused") {
    Ball z = interval(-1.0, 1.0);
    CHECK_THROWS_AS(Ball::exact_si(1, 64) / z, std::domain_error);
}

TEST_CASE("endpoints and containment") {
    Ball b = interval(1.0, 2.0);
    CHECK(b.contains(rational(1)));
    CHECK(b.contains(rational(3, 2)));
    CHECK(b.contains(rational(2)));
    CHECK_FALSE(b.contains(rational(5, 2)));
    CHECK(b.lower_rational() <= 1);
    CHECK(b.upper_rational() >= 2);

    Ball inner = interval(1.2, 1.8);
    CHECK(b.contains(inner));
    CHECK_FALSE(inner.contains(b));

    mpfr_t lo, hi;
    mpfr_init2(lo, 64);
    mpfr_init2(hi, 64);
    mpfr_set_si(lo, 2, MPFR_RNDN);
    mpfr_set_si(hi, 1, MPFR_RNDN);
    CHECK_THROWS_AS(Ball::from_endpoints(lo, hi, 64), std::invalid_argument);
    mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
}

TEST_CASE("trilean comparisons") {
    Ball a = interval(1.0, 2.0), b = interval(3.0, 4.0), c = interval(1.5, 3.5);
    CHECK(a.less_than(b) == Trilean::True);
    CHECK(b.less_than(a) == Trilean::False);
    CHECK(a.less_than(c) == Trilean::Unknown);
    CHECK(a.less_equal(b) == Trilean::True);

    Ball one = Ball::exact_si(1, 64);
    CHECK(one.less_equal(one) == Trilean::True);
    CHECK(one.less_than(one) == Trilean::False);

    CHECK(std::string(to_cstring(Trilean::True)) == "true");
    CHECK(std::string(to_cstring(Trilean::False)) == "false");
    CHECK(std::string(to_cstring(Trilean::Unknown)) == "unknown");
}

TEST_CASE("certified signs") {
    CHECK(Ball::exact_si(5, 64).certified_sign() == 1);
    CHECK(Ball::exact_si(-5, 64).certified_sign() == -1);
    CHECK(interval(-0.5, 0.5).certified_sign() == 0);
    CHECK(interval(-0.5, 0.5).contains_zero());
    CHECK(interval(0.25, 0.5).definitely_positive());
    CHECK(interval(-0.5, -0.25).definitely_negative());
}

TEST_CASE("elementary functions enclose") {
    Ball two = Ball::exact_si(2, 128);
    Ball s = sqrt(two);
    CHECK((s * s).contains(rational(2)));

    Ball one = Ball::exact_si(1, 128);
    CHECK(log(exp(one)).contains(rational(1)));
    CHECK(sin(Ball::pi(128)).contains(rational(0)));
    CHECK(cos(Ball::exact_si(0, 128)).contains(rational(1)));
    CHECK(exp(Ball::exact_si(0, 128)).contains(rational(1)));
    CHECK(pow_ui(Ball::exact_si(3, 64), 4).contains(rational(81)));
    CHECK(pow_ui(Ball::exact_si(3, 64), 0).contains(rational(1)));

    CHECK_THROWS_AS(sqrt(Ball::exact_si(-1, 64)), std::domain_error);
    CHECK_THROWS_AS(log(Ball::exact_si(0, 64)), std::domain_error);
    CHECK_THROWS_AS(log(interval(-1.0, 1.0)), std::domain_error);
}

TEST_CASE("abs_enclosure on straddling intervals") {
    Ball b = abs_enclosure(interval(-2.0, 3.0));
    CHECK(b.contains(rational(0)));
    CHECK(b.contains(rational(3)));
    CHECK(b.lower_rational() <= 0);
    CHECK(b.upper_rational() >= 3);
    CHECK_FALSE(b.contains(rational(-1, 2))); // hull of |.|, clipped at zero
}

TEST_CASE("string forms") {
    Ball third = Ball::from_rational(rational(1, 3), 64);
    std::string s = third.to_string();
    CHECK(s.find("+/-") != std::string::npos);
    CHECK(s.find("3.333") != std::string::npos); // %Re scientific form

    // hex forms round-trip exactly
    mpfr_t back;
    mpfr_init2(back, 64);
    char* end = nullptr;
    int t = mpfr_strtofr(back, third.mid_hex().c_str(), &end, 0, MPFR_RNDN);
    CHECK(t == 0);
    CHECK(*end == '\0');
    CHECK(mpfr_cmp(back, third.mid()) == 0);
    mpfr_clear(back);
}

TEST_CASE("negative radius is rejected") {
    mpfr_t mid, rad;
    mpfr_init2(mid, 64);
    mpfr_init2(rad, Ball::radius_precision);
    mpfr_set_si(mid, 1, MPFR_RNDN);
    mpfr_set_si(rad, -1, MPFR_RNDN);
    CHECK_THROWS_AS(Ball::from_parts(mid, rad), std::invalid_argument);
    mpfr_clears(mid, rad, static_cast<mpfr_ptr>(nullptr));
}

} // TEST_SUITE
