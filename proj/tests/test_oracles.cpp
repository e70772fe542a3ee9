#include "doctest.h"

#include "fixtures.hpp"
#include "orthoseq/errors.hpp"
#include "orthoseq/oracles.hpp"

using namespace orthoseq;

TEST_SUITE("oracles") {

TEST_CASE("band determinant formula agrees with the recurrence, n <= 30") {
    const auto& t = fixtures::exact60();
    for (long n = 0; n <= 30; ++n)
        CHECK_MESSAGE(coefficient_via_determinant(n) == t.coeffs[n],
                      "determinant oracle disagrees at n = ", n);
}

TEST_CASE("permutation sum agrees with the recurrence and counts 2^(n-1) terms") {
    const auto& t = fixtures::exact60();
    CHECK(coefficient_via_permutation_sum_detailed(0).value == 1);
    for (long n = 1; n <= 14; ++n) {
        PermutationSum s = coefficient_via_permutation_sum_detailed(n);
        CHECK_MESSAGE(s.value == t.coeffs[n], "permutation oracle disagrees at n = ", n);
        CHECK(s.terms == (1ull << (n - 1)));
        CHECK(coefficient_via_permutation_sum(n) == s.value);
    }
}

TEST_CASE("the two oracles also agree with each other") {
    for (long n = 0; n <= 12; ++n)
        CHECK(coefficient_via_determinant(n) == coefficient_via_permutation_sum(n));
}

TEST_CASE("caps") {
    CHECK_THROWS_AS(coefficient_via_determinant(65), CapacityError);
    CHECK_THROWS_AS(coefficient_via_permutation_sum(21), CapacityError);
    CHECK_THROWS_AS(coefficient_via_determinant(-1), std::invalid_argument);

    // raising the cap deliberately works
    const auto& t = fixtures::exact60();
    CHECK(coefficient_via_determinant(35, 40) == t.coeffs[35]);
    CHECK(coefficient_via_permutation_sum(16, 16) == t.coeffs[16]);
}

} // TEST_SUITE
