#include "orthoseq/exact.hpp"

#include "orthoseq/errors.hpp"

#include <stdexcept>

namespace orthoseq {

Rational rational_from_strings(const std::string& num, const std::string& den) {
    Integer n(num), d(den);
    if (sgn(d) == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer odd_double_factorial(unsigned long n) {
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), 2 * n + 1);
    return r;
}

long v2(const Integer& z) {
    if (sgn(z) == 0) throw std::domain_error("v2 of zero");
    return static_cast<long>(mpz_scan1(z.get_mpz_t(), 0));
}

long binary_digit_sum(unsigned long n) {
    long s = 0;
    while (n) {
        s += static_cast<long>(n & 1);
        n >>= 1;
    }
    return s;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

namespace {

void derive_columns(ExactTable& t) {
    const long n_max = t.n_max();
    t.partial_sums.clear();
    t.norms_sq.clear();
    t.energies.clear();
    t.partial_sums.reserve(n_max + 1);
    t.norms_sq.reserve(n_max + 1);
    t.energies.reserve(n_max + 1);

    t.partial_sums.push_back(t.coeffs[0]);
    t.norms_sq.emplace_back(1);
    t.energies.emplace_back(0);

    Rational term;
    for (long n = 1; n <= n_max; ++n) {
        t.partial_sums.push_back(t.partial_sums[n - 1] + t.coeffs[n]);

        term = t.coeffs[n] * t.coeffs[n];
        term /= (2 * n + 1);
        t.norms_sq.push_back(t.norms_sq[n - 1] - term);

        // Energies D(n) = |p_n'|^2. From p_n' = p_{n-1}' + n c_n x^{n-1}:
        //   D(n) = D(n-1) + 2n c_n M_{n-1} + n^2 c_n^2/(2n-1),
        // where M_k = integral of p_k'(x) x^k. Integration by parts gives
        // M_k = (2 s_k - c_k)/2, but only for k >= 2: it uses
        // <p_{k-1}, x^{k-1}> = 0, which starts at k-1 = 1. So the first two
        // steps are direct: M_1 = c_1/2, hence
        // D(1) = c_1^2, D(2) = c_1^2 + 2 c_1 c_2 + (4/3) c_2^2.
        if (n == 1) {
            t.energies.push_back(t.coeffs[1] * t.coeffs[1]);
        } else if (n == 2) {
            Rational d = t.coeffs[1] * t.coeffs[1];
            d += 2 * t.coeffs[1] * t.coeffs[2];
            d += Rational(4, 3) * t.coeffs[2] * t.coeffs[2];
            t.energies.push_back(d);
        } else {
            Rational d = t.coeffs[n] * (2 * t.partial_sums[n - 1] - t.coeffs[n - 1]);
            d *= n;
            term = t.coeffs[n] * t.coeffs[n];
            term *= n * n;
            term /= (2 * n - 1);
            d += term;
            t.energies.push_back(t.energies[n - 1] + d);
        }
    }
}

} // namespace

ExactTable exact_coefficients(long n_max, const ExactOptions& options) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    if (n_max > options.cap)
        throw CapacityError("exact engine cap exceeded (raise ExactOptions::cap deliberately)",
                            n_max, options.cap);

    ExactTable t;
    t.coeffs.reserve(n_max + 1);
    t.coeffs.emplace_back(1);

    Rational term, S;
    for (long n = 1; n <= n_max; ++n) {
        // c_n = -(2n+1) * sum_{k<n} c_k/(n+1+k)
        S = 0;
        for (long k = 0; k < n; ++k) {
            term = t.coeffs[k];
            term /= (n + 1 + k);
            S += term;
        }
        S *= -(2 * n + 1);
        t.coeffs.push_back(S);
    }
    derive_columns(t);
    return t;
}

ExactTable assemble_exact_table(std::vector<Rational> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
    ExactTable t;
    t.coeffs = std::move(coeffs);
    derive_columns(t);
    return t;
}

ExactPolynomial remainder_polynomial(const ExactTable& table, long n) {
    if (n < 0 || n > table.n_max()) throw std::out_of_range("remainder index");
    ExactPolynomial p;
    p.coefficients.assign(table.coeffs.begin(), table.coeffs.begin() + n + 1);
    return p;
}

Rational inner_product_with_monomial(const ExactPolynomial& p, long m) {
    if (m < 0) throw std::invalid_argument("monomial degree must be nonnegative");
    Rational r = 0, term;
    for (long k = 0; k <= p.degree(); ++k) {
        term = p.coefficients[k];
        term /= (k + m + 1);
        r += term;
    }
    return r;
}

Rational inner_product(const ExactPolynomial& p, const ExactPolynomial& q) {
    Rational r = 0, term;
    for (long i = 0; i <= p.degree(); ++i) {
        if (sgn(p.coefficients[i]) == 0) continue;
        for (long j = 0; j <= q.degree(); ++j) {
            term = p.coefficients[i] * q.coefficients[j];
            term /= (i + j + 1);
            r += term;
        }
    }
    return r;
}

} // namespace orthoseq
