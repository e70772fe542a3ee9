#pragma once

#include "orthoseq/ball.hpp"
#include "orthoseq/exact.hpp"

#include <functional>
#include <vector>

namespace orthoseq {

// Ball-arithmetic counterpart of ExactTable: every entry encloses the
// corresponding exact value.
struct BallTable {
    std::vector<Ball> coeffs;
    std::vector<Ball> partial_sums;
    std::vector<Ball> norms_sq;
    std::vector<Ball> energies;
    long precision_bits = 0;

    long n_max() const { return static_cast<long>(coeffs.size()) - 1; }
};

struct BallOptions {
    // 0 picks the schedule: 128 bits for n_max <= 2000, else 256.
    long precision_bits = 0;
    long max_precision_bits = 1 << 16;
    // Escalate (doubling precision) until every coefficient radius is below
    // target_rel_radius * |midpoint|. 0 disables the check.
    double target_rel_radius = 1e-10;
    // called now and then with (done, total); progress only, may be empty
    std::function<void(long, long)> progress;
};

BallTable ball_coefficients(long n_max, const BallOptions& options = {});

// Exact table as balls at the given precision. Radii are zero where the
// rational is exactly representable (dyadic), otherwise half an ulp.
BallTable promote(const ExactTable& exact, long precision_bits);

// Derived columns recomputed from a given coefficient column (cache loads).
BallTable assemble_ball_table(std::vector<Ball> coeffs, long precision_bits);

// Table over externally supplied midpoints (radius zero). For diagnostics and
// synthetic fixtures; derived columns are filled by the usual ball formulas.
BallTable table_from_midpoints(const std::vector<double>& coeffs, long precision_bits);

struct CrossValidation {
    long overlap_n_max = -1;
    long containment_violations = 0;
    std::vector<long> violating_indices; // across all four columns, deduplicated
    // max over all entries of |midpoint - exact| / radius (0 when radius = 0
    // and the midpoint is exact)
    double max_normalized_discrepancy = 0.0;

    bool pass() const { return containment_violations == 0; }
};

// Checks that every exact value of every column lies inside the ball the
// ball engine produced for it.
CrossValidation cross_validate(const ExactTable& exact, const BallTable& ball);

} // namespace orthoseq
