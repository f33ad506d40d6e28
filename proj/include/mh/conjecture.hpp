// Bounded checks of the uniqueness conjecture and searches for fundamental
// solutions of the (a, b) family.
//
// The uniqueness check reads the conjecture literally: only tuples that are
// themselves sorted non-increasingly take part. Tuples are never sorted
// before comparison, because distinct lambda entries break the permutation
// symmetry of the equation. The alternative reading (compare sorted
// representatives of arbitrary solutions) is not implemented.
#pragma once

#include <chrono>
#include <cstddef>
#include <set>
#include <vector>

#include "mh/equation.hpp"

namespace mh {

struct Counterexample {
  BigInt max_coordinate;
  std::vector<BigInt> tail_1;
  std::vector<BigInt> tail_2;
};

struct UniquenessReport {
  Equation equation;
  BigInt bound;
  std::size_t fixed_position = 1;
  std::size_t groups_checked = 0;
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds elapsed{0};

  bool holds() const noexcept { return counterexamples.empty(); }
};

/// Groups the solutions with max <= bound whose first coordinate is the
/// maximum and whose remaining coordinates are non-increasing, and reports
/// every group with two distinct tails.
UniquenessReport check_uniqueness(const Equation& eq, const BigInt& bound, unsigned threads = 1);

/// Same check with the fixed (maximal) coordinate at `fixed_position`; the
/// other coordinates must be non-increasing in position order.
UniquenessReport positional_uniqueness(const Equation& eq, const BigInt& bound,
                                       std::size_t fixed_position, unsigned threads = 1);

/// Same grouping over an explicit solution set (used by the brute-force
/// cross-check).
UniquenessReport uniqueness_from_solutions(const Equation& eq, const BigInt& bound,
                                           std::size_t fixed_position,
                                           const std::set<Point>& solutions);

enum class FundamentalRule {
  ArgMax,  // the argmax mutation does not strictly lower the maximum
  Any,     // no mutation in any direction strictly lowers the maximum
};

struct FundamentalSet {
  Equation equation;
  std::size_t box_bound = 0;
  std::set<Point> solutions;      // terminals under FundamentalRule::ArgMax
  std::set<Point> any_rule;       // solutions in the box that satisfy FundamentalRule::Any
  std::size_t solutions_in_box = 0;
  bool exhaustive_within_box = true;

  bool rules_differ() const { return solutions != any_rule; }
};

/// Scans [1, box]^n, keeps the solutions, and descends each along its
/// argmax while the maximum strictly decreases and the mutation stays a
/// positive integer.
FundamentalSet find_fundamentals(const Equation& eq, std::size_t box_bound, unsigned threads = 1,
                                 const Limits& limits = {});

/// Whether x satisfies the given fundamental rule (x must be a solution).
bool is_fundamental(const Equation& eq, const Point& x, FundamentalRule rule);

}  // namespace mh
