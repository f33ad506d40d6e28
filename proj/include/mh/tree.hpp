// Breadth-first construction of the mutation tree and bounded enumeration
// of solutions.
//
// Pruning is complete for the default family: along any tree path away from
// the root the mutated coordinate becomes the new strict maximum, so the
// maximum never decreases going down. A solution with max <= B therefore has
// every ancestor (its descent chain) inside max <= B as well, and cutting a
// child whose maximum exceeds B cannot hide a solution below the bound.
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "mh/equation.hpp"

namespace mh {

struct TreeNode {
  Point point;
  Word word;  // path from the root
  std::size_t depth = 0;
  std::optional<std::size_t> incoming;  // label of the branch into this node
};

struct EnumerationBound {
  std::optional<std::size_t> max_depth;
  std::optional<BigInt> max_coordinate;
  std::size_t max_bits = std::size_t{1} << 20;

  static EnumerationBound depth(std::size_t d);
  static EnumerationBound coordinate(BigInt b);
};

struct TreeStats {
  std::size_t emitted = 0;
  std::size_t duplicates = 0;  // points emitted more than once
  std::size_t dead_ends = 0;   // branches that left the positive integers
};

using NodeSink = std::function<void(const TreeNode&)>;

/// Streams nodes level by level, in order of depth and then lexicographic
/// word. `threads` > 1 expands each level concurrently; emission order does
/// not depend on it.
TreeStats expand_tree(const Equation& eq, const Point& root, const EnumerationBound& bound,
                      const NodeSink& sink, unsigned threads = 1);

std::vector<TreeNode> expand_tree(const Equation& eq, const Point& root,
                                  const EnumerationBound& bound, unsigned threads = 1);

/// Every ordered solution tuple with maximum <= bound, for the default
/// family. Throws UnsupportedEquation otherwise.
std::set<Point> solutions_upto(const Equation& eq, const BigInt& bound, unsigned threads = 1,
                               std::size_t max_bits = std::size_t{1} << 20);

/// Reference path: scans every tuple in [1, bound]^n with the residual.
/// Exponential in n; meant for small cross-checks.
std::set<Point> brute_force_solutions(const Equation& eq, std::size_t bound);

}  // namespace mh
