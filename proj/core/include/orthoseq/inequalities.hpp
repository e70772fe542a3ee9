#pragma once

#include "orthoseq/ball_table.hpp"
#include "orthoseq/exact.hpp"

#include <string>
#include <vector>

namespace orthoseq {

enum class CheckStatus { Pass, Fail, Indeterminate };

const char* to_cstring(CheckStatus s);

struct InequalityRow {
    long n = 0;
    std::string inequality_id;
    CheckStatus status = CheckStatus::Indeterminate;
};

// The six proved relations between c_n, s_n, |p_n|^2 and D(n):
//   cn2_le_energy_over_n3      n^3 c_n^2 <= D(n)                 (n >= 2)
//   sn2_le_energy_over_2n3     (2n+3) s_n^2 <= D(n)              (n >= 1)
//   energy_le_weighted_sum     D(n) <= n s_n^2 + (n+1) c_n^2/2
//                                      + sum_{k<n} (k+1) c_k^2   (n >= 1)
//   cn2_le_4wsum_over_n3       n^3 c_n^2 <= 4 sum_{k<n} (k+1) c_k^2  (n >= 2)
//   cn2_le_32_over_n           n c_n^2 <= 32                     (n >= 1)
//   cn2_lt_30782_over_n3       n^3 c_n^2 < 30782 (strict)        (n >= 1)
struct InequalitySummary {
    long n_max = 0;
    long checks = 0;
    long failures = 0;
    long indeterminates = 0;
    std::vector<InequalityRow> rows; // filled only when collect_rows
    std::vector<InequalityRow> problems; // every non-pass row

    bool pass() const { return failures == 0 && indeterminates == 0; }
};

InequalitySummary verify_inequality_suite(const ExactTable& table, bool collect_rows = false);
InequalitySummary verify_inequality_suite(const BallTable& table, bool collect_rows = false);

} // namespace orthoseq
