#include "orthoseq/arithmetic.hpp"

#include <stdexcept>

namespace orthoseq {

ValuationCheck verify_two_adic_valuation(long n, const Rational& c_n) {
    if (n < 1) throw std::invalid_argument("valuation law starts at n = 1");
    ValuationCheck v;
    v.n = n;
    v.expected = 2 * n - binary_digit_sum(static_cast<unsigned long>(n));
    if (sgn(c_n) == 0) {
        v.actual = -1; // c_n = 0 has no denominator valuation; fails the law
        v.pass = false;
        return v;
    }
    v.actual = v2(c_n.get_den());
    v.pass = (v.actual == v.expected);
    return v;
}

IntegralityCheck verify_integrality_and_lower_bound(long n, const Rational& c_n) {
    if (n < 1) throw std::invalid_argument("integrality facts start at n = 1");
    IntegralityCheck r;
    r.n = n;
    r.nonzero = (sgn(c_n) != 0);

    Integer f = factorial(static_cast<unsigned long>(2 * n));
    Rational scaled = c_n * f;
    r.integral = (scaled.get_den() == 1);

    // |c_n| >= 1/(2n)!  <=>  |c_n * (2n)!| >= 1
    Rational mag = abs(scaled);
    r.lower_bound = (mag >= 1);

    Integer dd = odd_double_factorial(static_cast<unsigned long>(n));
    Rational normalized = scaled / dd;
    r.normalized_integral = (normalized.get_den() == 1);
    r.normalized_lower_bound = (mag >= dd);

    return r;
}

} // namespace orthoseq
