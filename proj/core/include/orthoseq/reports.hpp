#pragma once

#include "orthoseq/ball_table.hpp"
#include "orthoseq/delta.hpp"
#include "orthoseq/dirichlet.hpp"
#include "orthoseq/exact.hpp"
#include "orthoseq/gfun.hpp"
#include "orthoseq/identities.hpp"
#include "orthoseq/inequalities.hpp"
#include "orthoseq/k_estimate.hpp"
#include "orthoseq/quadrature.hpp"
#include "orthoseq/signs.hpp"

#include <string>

namespace orthoseq {

// JSON renderings of the report structs (pretty-printed, stable key order).
std::string to_json(const InequalitySummary& s);
std::string to_json(const SignChangeReport& s, const RatioReport* ratios);
std::string to_json(const EnvelopeFit& f);
std::string to_json(const KEstimate& k);
std::string to_json(const CrossValidation& cv);

// Series reports share one schema:
// {kind, params, value, radius, tail_bound, verdict}
std::string to_json(const IdentityEvaluation& e, double tolerance);
std::string to_json(const FunctionalResidual& f, double t, double tolerance);
std::string to_json(const IntegralResidual& i, double t, double tolerance);
std::string to_json(const DirichletPoint& d);

// Coefficient tables; column = "coeffs", "partial_sums", "norms_sq",
// "energies".
std::string table_csv(const ExactTable& t, const std::string& column);
std::string table_csv(const BallTable& t, const std::string& column);
std::string table_json(const ExactTable& t, const std::string& column);
std::string table_json(const BallTable& t, const std::string& column);

} // namespace orthoseq
