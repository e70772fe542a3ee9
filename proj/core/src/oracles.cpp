#include "orthoseq/oracles.hpp"

#include "orthoseq/errors.hpp"

#include <stdexcept>
#include <vector>

namespace orthoseq {

namespace {

// det of the n x n rational band matrix (A)_{ij} = 1/(i+j), j <= i+1,
// as det(B)/prod(L_i) where row i of B is row i of A scaled by
// L_i = lcm(i+1, ..., min(2i,2n)+1 range actually i+1..i+min(i+1,n)).
// Bareiss keeps every intermediate an integer (each is a minor of B).
Rational band_determinant(long n) {
    std::vector<std::vector<Integer>> M(n, std::vector<Integer>(n, Integer(0)));
    Integer scale = 1;
    for (long i = 1; i <= n; ++i) {
        long jmax = std::min(i + 1, n);
        Integer L = 1;
        for (long j = 1; j <= jmax; ++j)
            mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), static_cast<unsigned long>(i + j));
        for (long j = 1; j <= jmax; ++j)
            M[i - 1][j - 1] = L / (i + j);
        scale *= L;
    }

    int sign = 1;
    Integer prev = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (sgn(M[k][k]) == 0) {
            long piv = -1;
            for (long r = k + 1; r < n; ++r)
                if (sgn(M[r][k]) != 0) { piv = r; break; }
            if (piv < 0) return Rational(0);
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                Integer t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }

    Rational det(sign * M[n - 1][n - 1], scale);
    det.canonicalize();
    return det;
}

} // namespace

Rational coefficient_via_determinant(long n, long cap) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n > cap)
        throw CapacityError("determinant oracle cap exceeded", n, cap);
    if (n == 0) return Rational(1);

    Rational c = band_determinant(n) * odd_double_factorial(n);
    if (n % 2 != 0) c = -c;
    return c;
}

namespace {

void enumerate_blocks(long a, long n, const Rational& partial,
                      Rational& total, unsigned long long& terms) {
    if (a > n) {
        total += partial;
        ++terms;
        return;
    }
    Rational block = partial;
    for (long b = a; b <= n; ++b) {
        // extend the block [a..b-1] to [a..b]
        if (b > a) {
            block /= (2 * (b - 1) + 1); // new interior factor 1/(2(b-1)+1)
            block = -block;             // one more transposition in the cycle
        }
        Rational with_end = block / (a + b);
        enumerate_blocks(b + 1, n, with_end, total, terms);
    }
}

} // namespace

PermutationSum coefficient_via_permutation_sum_detailed(long n, long cap) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n > cap)
        throw CapacityError("permutation oracle cap exceeded (2^(n-1) terms)", n, cap);
    if (n == 0) return {Rational(1), 1};

    PermutationSum out{Rational(0), 0};
    enumerate_blocks(1, n, Rational(1), out.value, out.terms);

    out.value *= odd_double_factorial(n);
    if (n % 2 != 0) out.value = -out.value;
    return out;
}

Rational coefficient_via_permutation_sum(long n, long cap) {
    return coefficient_via_permutation_sum_detailed(n, cap).value;
}

} // namespace orthoseq
