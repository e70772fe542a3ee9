#pragma once

#include <gmpxx.h>

#include <string>

namespace orthoseq {

// Exact rational arithmetic. mpq_class keeps values canonical
// (reduced, denominator > 0), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_strings(const std::string& num, const std::string& den);

Integer factorial(unsigned long n);

// (2n+1)!! = 1 * 3 * 5 * ... * (2n+1)
Integer odd_double_factorial(unsigned long n);

// 2-adic valuation of a nonzero integer.
long v2(const Integer& z);

// Number of ones in the binary expansion of n.
long binary_digit_sum(unsigned long n);

std::string to_string(const Rational& q);

} // namespace orthoseq
