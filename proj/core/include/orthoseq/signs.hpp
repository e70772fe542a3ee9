#pragma once

#include "orthoseq/ball_table.hpp"
#include "orthoseq/exact.hpp"

#include <utility>
#include <vector>

namespace orthoseq {

struct SignChangeReport {
    long n_max = 0;
    // n such that sign(c_n) != sign(c_{n+1}), both signs certified
    std::vector<long> indices;
    // n whose ball does not certify a sign (never happens on exact tables)
    std::vector<long> ambiguous;
    // index 0 records the trivial c_0 > 0 > c_1 change; kept, but flagged so
    // callers can discount it
    bool includes_index_zero = false;
};

SignChangeReport detect_sign_changes(const BallTable& table);
SignChangeReport detect_sign_changes(const ExactTable& table);

struct RatioReport {
    std::vector<std::pair<long, long>> pairs; // consecutive nonzero indices
    std::vector<double> ratios;               // second/first for each pair
};

// Ratios of consecutive nonzero sign-change indices. Throws
// std::invalid_argument when fewer than two are available.
RatioReport sign_change_ratios(const SignChangeReport& report);

} // namespace orthoseq
