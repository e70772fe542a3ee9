#pragma once

#include "orthoseq/ball_table.hpp"
#include "orthoseq/exact.hpp"

// Shared tables, built once per process. exact540 covers everything the
// exact engine can reach in a few seconds (540 > 532, the last sign change
// it can see); the ball fixtures match the two precision-schedule tiers.
namespace fixtures {

const orthoseq::ExactTable& exact60();
const orthoseq::ExactTable& exact540();
const orthoseq::BallTable& ball200();
const orthoseq::BallTable& ball2000();

} // namespace fixtures
