#pragma once

#include "orthoseq/rational.hpp"

namespace orthoseq {

// Two formulas for c_n that are independent of the defining recurrence.
// Both are intentionally literal: they exist to cross-check the engine,
// not to be fast.

// c_n = (-1)^n (2n+1)!! det(A_n) where A_n is the n x n band matrix
// (A_n)_{ij} = 1/(i+j) for j - i <= 1 and 0 otherwise (1-based).
// Fraction-free Bareiss elimination; default cap keeps runtimes sane.
Rational coefficient_via_determinant(long n, long cap = 64);

// c_n = (-1)^n (2n+1)!! sum over compositions of [1..n] into consecutive
// blocks: a block [a..b] contributes (-1)^(b-a) / ((a+b) * prod_{i=a}^{b-1} (2i+1)).
// These are exactly the permutations with sigma(i) <= i+1. 2^(n-1) terms.
struct PermutationSum {
    Rational value;
    unsigned long long terms;
};

PermutationSum coefficient_via_permutation_sum_detailed(long n, long cap = 20);
Rational coefficient_via_permutation_sum(long n, long cap = 20);

} // namespace orthoseq
