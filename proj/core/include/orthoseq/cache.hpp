#pragma once

#include "orthoseq/ball_table.hpp"
#include "orthoseq/exact.hpp"

#include <string>

namespace orthoseq {

// On-disk table cache. A six-line header (magic/version, engine, n_max,
// precision_bits, rows, fnv1a-64 checksum of everything after the checksum
// line) followed by the CSV payload:
//   exact:  n,numerator,denominator
//   ball:   n,midpoint_hex,radius_hex,precision_bits
// Only the coefficient column is stored; derived columns are recomputed on
// load, which is deterministic.
//
// Loaders throw CacheError with a kind distinguishing unreadable files,
// malformed content, wrong format version, checksum mismatches, and
// engine mismatches.

enum class CacheEngine { Exact, Ball };

// $ORTHOSEQ_CACHE_DIR, or ".orthoseq-cache" under the working directory.
std::string default_cache_dir();

void store_exact(const ExactTable& table, const std::string& path);
ExactTable load_exact(const std::string& path);

void store_ball(const BallTable& table, const std::string& path);
BallTable load_ball(const std::string& path);

// Engine recorded in the file at `path` (header sniff only).
CacheEngine peek_engine(const std::string& path);

// Exact coefficients loaded into ball form: midpoints rounded to
// precision_bits, radius half an ulp where rounding was inexact, zero where
// the rational is dyadic.
BallTable load_exact_as_ball(const std::string& path, long precision_bits);

} // namespace orthoseq
