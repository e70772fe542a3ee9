#pragma once

#include "orthoseq/rational.hpp"

namespace orthoseq {

// v_2(denominator of c_n) = 2n - (binary digit sum of n), n >= 1.
// Implies c_n != 0 for all n.
struct ValuationCheck {
    long n = 0;
    long expected = 0; // 2n - b(n)
    long actual = 0;   // v_2 of the reduced denominator
    bool pass = false;
};

ValuationCheck verify_two_adic_valuation(long n, const Rational& c_n);

// Integrality and size facts for c_n, n >= 1.
//
// The verdict rests on the provable statements:
//   integral:    c_n * (2n)! is an integer
//   nonzero:     c_n != 0
//   lower_bound: |c_n| >= 1/(2n)!   (immediate from the two above)
//
// The stronger normalized forms (divide out (2n+1)!!, respectively multiply
// the bound by it) are reported too; they hold at n = 1 and then fail
// (n = 2: c_2*4!/15 = 1/3, |c_2| = 5/24 < 15/24), so they carry no weight
// in pass().
struct IntegralityCheck {
    long n = 0;
    bool integral = false;
    bool nonzero = false;
    bool lower_bound = false;
    bool normalized_integral = false;
    bool normalized_lower_bound = false;

    bool pass() const { return integral && nonzero && lower_bound; }
};

IntegralityCheck verify_integrality_and_lower_bound(long n, const Rational& c_n);

} // namespace orthoseq
