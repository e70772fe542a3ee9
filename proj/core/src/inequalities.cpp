#include "orthoseq/inequalities.hpp"

namespace orthoseq {

const char* to_cstring(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "indeterminate";
    }
}

namespace {

struct Collector {
    InequalitySummary& sum;
    bool collect;

    void operator()(long n, const char* id, CheckStatus st) {
        ++sum.checks;
        if (st == CheckStatus::Fail) ++sum.failures;
        if (st == CheckStatus::Indeterminate) ++sum.indeterminates;
        if (collect) sum.rows.push_back({n, id, st});
        if (st != CheckStatus::Pass) sum.problems.push_back({n, id, st});
    }
};

CheckStatus status_of(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

CheckStatus status_of(Trilean t) {
    switch (t) {
        case Trilean::True: return CheckStatus::Pass;
        case Trilean::False: return CheckStatus::Fail;
        default: return CheckStatus::Indeterminate;
    }
}

Integer cube(long n) {
    Integer z;
    mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(n), 3);
    return z;
}

} // namespace

InequalitySummary verify_inequality_suite(const ExactTable& t, bool collect_rows) {
    InequalitySummary s;
    s.n_max = t.n_max();
    Collector put{s, collect_rows};

    Rational W = t.coeffs[0] * t.coeffs[0]; // sum_{k<n} (k+1) c_k^2
    for (long n = 1; n <= s.n_max; ++n) {
        const Rational& c = t.coeffs[n];
        const Rational c2 = c * c;
        const Rational n3{cube(n)};
        const Rational lhs = c2 * n3;
        const Rational s2 = t.partial_sums[n] * t.partial_sums[n];

        if (n >= 2) put(n, "cn2_le_energy_over_n3", status_of(lhs <= t.energies[n]));
        put(n, "sn2_le_energy_over_2n3", status_of(s2 * (2 * n + 3) <= t.energies[n]));
        Rational rhs = s2 * n + c2 * (n + 1) / 2 + W;
        put(n, "energy_le_weighted_sum", status_of(t.energies[n] <= rhs));
        if (n >= 2) put(n, "cn2_le_4wsum_over_n3", status_of(lhs <= 4 * W));
        put(n, "cn2_le_32_over_n", status_of(c2 * n <= 32));
        put(n, "cn2_lt_30782_over_n3", status_of(lhs < 30782));

        W += c2 * (n + 1);
    }
    return s;
}

InequalitySummary verify_inequality_suite(const BallTable& t, bool collect_rows) {
    InequalitySummary s;
    s.n_max = t.n_max();
    Collector put{s, collect_rows};
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(t.precision_bits);

    const Ball thirty_two = Ball::exact_si(32, prec);
    const Ball big = Ball::exact_si(30782, prec);

    Ball W = t.coeffs[0] * t.coeffs[0];
    for (long n = 1; n <= s.n_max; ++n) {
        const Ball& c = t.coeffs[n];
        const Ball c2 = c * c;
        const Ball lhs = c2 * Ball::from_integer(cube(n), prec);
        const Ball s2 = t.partial_sums[n] * t.partial_sums[n];

        if (n >= 2) put(n, "cn2_le_energy_over_n3", status_of(lhs.less_equal(t.energies[n])));
        put(n, "sn2_le_energy_over_2n3", status_of((s2 * (2 * n + 3)).less_equal(t.energies[n])));
        Ball rhs = s2 * n + c2 * (n + 1) / 2 + W;
        put(n, "energy_le_weighted_sum", status_of(t.energies[n].less_equal(rhs)));
        if (n >= 2) put(n, "cn2_le_4wsum_over_n3", status_of(lhs.less_equal(W * 4)));
        put(n, "cn2_le_32_over_n", status_of((c2 * n).less_equal(thirty_two)));
        put(n, "cn2_lt_30782_over_n3", status_of(lhs.less_than(big)));

        W = W + c2 * (n + 1);
    }
    return s;
}

} // namespace orthoseq
