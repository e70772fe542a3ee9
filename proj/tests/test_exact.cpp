#include "doctest.h"

#include "fixtures.hpp"
#include "orthoseq/errors.hpp"
#include "orthoseq/exact.hpp"

#include <stdexcept>

using namespace orthoseq;

namespace {

ExactPolynomial derivative(const ExactPolynomial& p) {
    ExactPolynomial d;
    if (p.degree() < 1) {
        d.coefficients = {Rational(0)};
        return d;
    }
    d.coefficients.resize(static_cast<size_t>(p.degree()));
    for (long k = 1; k <= p.degree(); ++k)
        d.coefficients[static_cast<size_t>(k - 1)] = p.coefficients[static_cast<size_t>(k)] * k;
    return d;
}

} // namespace

TEST_SUITE("exact") {

TEST_CASE("first six coefficients, exact equality") {
    const auto& t = fixtures::exact60();
    CHECK(t.coeffs[0] == 1);
    CHECK(t.coeffs[1] == rational(-3, 2));
    CHECK(t.coeffs[2] == rational(5, 24));
    CHECK(t.coeffs[3] == rational(77, 720));
    CHECK(t.coeffs[4] == rational(277, 4480));
    CHECK(t.coeffs[5] == rational(140173, 3628800));
}

TEST_CASE("defining relations: c_0 = 1 and sum_{k<=n} c_k/(n+1+k) = 0") {
    const auto& t = fixtures::exact60();
    CHECK(t.coeffs[0] == 1);
    for (long n = 1; n <= t.n_max(); ++n) {
        Rational s = 0;
        for (long k = 0; k <= n; ++k)
            s += t.coeffs[k] / (n + 1 + k);
        CHECK_MESSAGE(s == 0, "projection relation fails at n = ", n);
    }
}

TEST_CASE("partial sums column") {
    const auto& t = fixtures::exact60();
    Rational s = 0;
    for (long n = 0; n <= t.n_max(); ++n) {
        s += t.coeffs[n];
        CHECK(t.partial_sums[n] == s);
    }
    CHECK(t.partial_sums[1] == rational(-1, 2));
}

TEST_CASE("norm column: frozen values, shortcut formula, direct integral") {
    const auto& t = fixtures::exact60();
    CHECK(t.norms_sq[0] == 1);
    CHECK(t.norms_sq[1] == rational(1, 4));
    CHECK(t.norms_sq[2] == rational(139, 576));

    // 1 - sum c_k^2/(2k+1)
    Rational s = 1;
    for (long n = 1; n <= t.n_max(); ++n) {
        s -= t.coeffs[n] * t.coeffs[n] / (2 * n + 1);
        CHECK(t.norms_sq[n] == s);
    }

    // = <p_n, p_n> by direct integration
    for (long n = 0; n <= 25; ++n) {
        ExactPolynomial p = remainder_polynomial(t, n);
        CHECK(inner_product(p, p) == t.norms_sq[n]);
    }

    // nonincreasing and positive (the limit K is ~0.239)
    for (long n = 1; n <= t.n_max(); ++n) {
        CHECK(t.norms_sq[n] <= t.norms_sq[n - 1]);
        CHECK(t.norms_sq[n] > 0);
    }
}

TEST_CASE("energy column: frozen values and the direct double sum") {
    const auto& t = fixtures::exact60();
    CHECK(t.energies[0] == 0);
    CHECK(t.energies[1] == rational(9, 4));
    CHECK(t.energies[2] == rational(727, 432));
    CHECK(t.energies[3] == rational_from_strings("1252337", "864000"));

    // D(n) = integral of p_n'^2 = sum_{i,j>=1} i j c_i c_j / (i+j-1)
    for (long n = 1; n <= 40; ++n) {
        Rational d = 0;
        for (long i = 1; i <= n; ++i)
            for (long j = 1; j <= n; ++j)
                d += t.coeffs[i] * t.coeffs[j] * (i * j) / (i + j - 1);
        CHECK_MESSAGE(t.energies[n] == d, "energy mismatch at n = ", n);
    }
}

TEST_CASE("orthogonality: <p_n, x^n> = 0 for n >= 1") {
    const auto& t = fixtures::exact60();
    for (long n = 1; n <= 30; ++n) {
        ExactPolynomial p = remainder_polynomial(t, n);
        CHECK(inner_product_with_monomial(p, n) == 0);
    }
    // and off the defining moment it is generically nonzero
    ExactPolynomial p2 = remainder_polynomial(t, 2);
    CHECK(inner_product_with_monomial(p2, 3) != 0);
}

TEST_CASE("derivative moments against x^n(1-x): -c_n/2 for n >= 2") {
    const auto& t = fixtures::exact60();
    for (long n = 2; n <= 30; ++n) {
        ExactPolynomial d = derivative(remainder_polynomial(t, n));
        Rational lhs = inner_product_with_monomial(d, n) - inner_product_with_monomial(d, n + 1);
        CHECK_MESSAGE(lhs == -t.coeffs[n] / 2, "moment fails at n = ", n);
    }

    // n = 1 is the bootstrap exception: <p_0, x^0> = 1 is not zero, so the
    // identity picks up an extra -1 and the integral is 3/4 - 1 = -1/4.
    ExactPolynomial d1 = derivative(remainder_polynomial(t, 1));
    Rational lhs1 = inner_product_with_monomial(d1, 1) - inner_product_with_monomial(d1, 2);
    CHECK(lhs1 == rational(-1, 4));
    CHECK(lhs1 != -t.coeffs[1] / 2);
}

TEST_CASE("derivative moments against x^{n+1}: s_n for n >= 1") {
    const auto& t = fixtures::exact60();
    for (long n = 1; n <= 30; ++n) {
        ExactPolynomial d = derivative(remainder_polynomial(t, n));
        CHECK(inner_product_with_monomial(d, n + 1) == t.partial_sums[n]);
    }
}

TEST_CASE("derivative moment <p_k', x^k>: (2s_k - c_k)/2 needs k >= 2") {
    const auto& t = fixtures::exact60();
    for (long k = 2; k <= 30; ++k) {
        ExactPolynomial d = derivative(remainder_polynomial(t, k));
        Rational m = inner_product_with_monomial(d, k);
        CHECK(m == (t.partial_sums[k] * 2 - t.coeffs[k]) / 2);
    }

    // k = 1: the true value is c_1/2 = -3/4; the s,c form gives 1/4. This is
    // why the energy recurrence only starts once D(1) and D(2) are pinned.
    ExactPolynomial d1 = derivative(remainder_polynomial(t, 1));
    Rational m1 = inner_product_with_monomial(d1, 1);
    CHECK(m1 == rational(-3, 4));
    CHECK(m1 == t.coeffs[1] / 2);
    CHECK((t.partial_sums[1] * 2 - t.coeffs[1]) / 2 == rational(1, 4));

    // frozen spot value
    ExactPolynomial d2 = derivative(remainder_polynomial(t, 2));
    CHECK(inner_product_with_monomial(d2, 2) == rational(-19, 48));
}

TEST_CASE("remainder_polynomial") {
    const auto& t = fixtures::exact60();
    ExactPolynomial p = remainder_polynomial(t, 3);
    CHECK(p.degree() == 3);
    CHECK(p.coefficients[0] == 1);
    CHECK(p.coefficients[3] == t.coeffs[3]);
    CHECK_THROWS_AS(remainder_polynomial(t, -1), std::out_of_range);
    CHECK_THROWS_AS(remainder_polynomial(t, t.n_max() + 1), std::out_of_range);
}

TEST_CASE("inner product validation") {
    ExactPolynomial one{{Rational(1)}};
    CHECK(inner_product_with_monomial(one, 0) == 1);
    CHECK_THROWS_AS(inner_product_with_monomial(one, -1), std::invalid_argument);
}

TEST_CASE("assemble_exact_table recomputes derived columns") {
    const auto& t = fixtures::exact60();
    ExactTable re = assemble_exact_table(t.coeffs);
    CHECK(re.n_max() == t.n_max());
    for (long n = 0; n <= t.n_max(); ++n) {
        CHECK(re.partial_sums[n] == t.partial_sums[n]);
        CHECK(re.norms_sq[n] == t.norms_sq[n]);
        CHECK(re.energies[n] == t.energies[n]);
    }
    CHECK_THROWS_AS(assemble_exact_table({}), std::invalid_argument);
}

TEST_CASE("capacity cap") {
    try {
        exact_coefficients(3000);
        FAIL("expected CapacityError");
    } catch (const CapacityError& e) {
        CHECK(e.requested() == 3000);
        CHECK(e.cap() == 2000);
    }

    ExactOptions o;
    o.cap = 5;
    CHECK_THROWS_AS(exact_coefficients(6, o), CapacityError);
    CHECK(exact_coefficients(5, o).n_max() == 5);
    CHECK_THROWS_AS(exact_coefficients(-1), std::invalid_argument);
}

} // TEST_SUITE
