#pragma once

#include "orthoseq/rational.hpp"

#include <vector>

namespace orthoseq {

// Coefficients c_n of the orthorecursive expansion of 1 with respect to
// x, x^2, x^3, ... in L^2[0,1], together with the derived columns:
//
//   partial_sums[n] = sum_{k<=n} c_k
//   norms_sq[n]     = |p_n|^2 = 1 - sum_{1<=k<=n} c_k^2/(2k+1)
//   energies[n]     = integral of p_n'(x)^2
//
// where p_n(x) = sum_{k<=n} c_k x^k is the n-th remainder. c_0 = 1 and
// sum_{k<=n} c_k/(n+1+k) = 0 for n >= 1, i.e. p_n is orthogonal to x^n.
struct ExactTable {
    std::vector<Rational> coeffs;
    std::vector<Rational> partial_sums;
    std::vector<Rational> norms_sq;
    std::vector<Rational> energies;

    long n_max() const { return static_cast<long>(coeffs.size()) - 1; }
};

struct ExactOptions {
    // Exact denominators grow like exp(c*n); the cap guards against
    // accidentally asking for a month of CPU. Raise it deliberately.
    long cap = 2000;
};

ExactTable exact_coefficients(long n_max, const ExactOptions& options = {});

// Derived columns recomputed from a given coefficient column (cache loads).
ExactTable assemble_exact_table(std::vector<Rational> coeffs);

// Dense polynomial sum a_k x^k, k = 0..degree.
struct ExactPolynomial {
    std::vector<Rational> coefficients;

    long degree() const { return static_cast<long>(coefficients.size()) - 1; }
};

// p_n(x) = sum_{k<=n} c_k x^k, the n-th remainder.
ExactPolynomial remainder_polynomial(const ExactTable& table, long n);

// integral_0^1 p(x) x^m dx
Rational inner_product_with_monomial(const ExactPolynomial& p, long m);

// integral_0^1 p(x) q(x) dx
Rational inner_product(const ExactPolynomial& p, const ExactPolynomial& q);

} // namespace orthoseq
