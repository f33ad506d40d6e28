// Ratio numbers, logarithms of huge coordinates, and the comparison between
// the logarithmic mutation chain and the classical Euclid chain.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mh/equation.hpp"
#include "mh/euclid.hpp"

namespace mh {

/// New coordinate of mu_i(x) divided by the product of the other
/// coordinates of x.
Rational ratio_number(const Equation& eq, const Point& x_before, std::size_t i,
                      const Limits& limits = {});

/// k_lambda - (x_j^2 + sum_{i != j} lambda_i prod_{m != i} x_m) / prod x.
/// Agrees with ratio_number on every solution; used as a second route.
Rational ratio_closed_form(const Equation& eq, const Point& x_before, std::size_t j);

struct RatioSequence {
  std::vector<Rational> values;  // k_1, k_2, ...
  BigInt k_lambda;
  bool from_root = true;  // monotonicity is only asserted from (1,...,1)
};

/// Ratio numbers along `word` from `start`, checking the product form
/// new = k_t * prod(others) at every step.
RatioSequence ratio_sequence(const Equation& eq, const Word& word, const Point& start,
                             const Limits& limits = {});
RatioSequence ratio_sequence(const Equation& eq, const Word& word, const Limits& limits = {});

/// Natural logarithm of v >= 1 from its top 64 bits:
/// (bitlen - 64) ln 2 + ln(mantissa). Relative error below 1e-12.
double big_log(const BigInt& v);

struct LogPoint {
  std::vector<double> values;
};

struct LogChain {
  std::vector<LogPoint> points;
  std::vector<double> log_k;           // log k_t per step
  double max_relative_residual = 0.0;  // worst deformed-Euclid identity mismatch
};

/// Relative tolerance of the per-step identity
/// log x_new = sum of the other logs + log k_t.
inline constexpr double kLogIdentityTolerance = 1e-9;

/// Coordinatewise big_log of the chain from (1,...,1). Throws
/// ConsistencyError if a step violates the deformed-Euclid identity.
LogChain log_chain(const Equation& eq, const Word& word, const Limits& limits = {});

struct QEstimate {
  std::vector<double> per_coordinate;  // log(x_j) / e_j
  double spread = 0.0;
  double q_mid = 0.0;
  std::size_t depth = 0;
  bool generic = true;  // every label seen in each window of the prefix
};

QEstimate q_estimate(const Equation& eq, const Word& word, std::size_t depth,
                     const Limits& limits = {});

/// q estimates at every depth 1..depth, computed in one pass.
std::vector<QEstimate> q_estimates(const Equation& eq, const Word& word, std::size_t depth,
                                   const Limits& limits = {});

struct ReportRow {
  std::size_t t = 0;
  std::size_t direction = 0;
  Rational k;         // exact k_t
  Rational gap;       // exact k_lambda - k_t
  double interval = 0.0;  // |L_t| of the log-comparison tuple
  double spread = 0.0;    // spread of the q quotients
};

std::vector<ReportRow> convergence_report(const Equation& eq, const Word& word, std::size_t depth,
                                          const Limits& limits = {});

}  // namespace mh
