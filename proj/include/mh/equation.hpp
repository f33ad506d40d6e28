// The generalized Markov-Hurwitz family
//
//   sum x_i^2 + sum lambda_i prod_{j != i} x_j = (a + sum lambda_i) prod x_i + b
//
// with a = n, b = 0 by default, together with the Vieta mutation that swaps
// one coordinate for the other root of the quadratic it satisfies.
#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mh/numeric.hpp"
#include "mh/words.hpp"

namespace mh {

class Equation {
 public:
  /// Default family: a = n, b = 0.
  Equation(std::size_t n, std::vector<BigInt> lambda);
  Equation(std::size_t n, std::vector<BigInt> lambda, BigInt a, BigInt b);

  /// Classical Markov-Hurwitz equation (all lambda_i = 0).
  static Equation markov_hurwitz(std::size_t n);
  static Equation from_ints(std::initializer_list<long> lambda);

  std::size_t n() const noexcept { return n_; }
  const std::vector<BigInt>& lambda() const noexcept { return lambda_; }
  const BigInt& lambda(std::size_t direction) const { return lambda_.at(direction - 1); }
  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }

  /// a + sum lambda_i; equals n + sum lambda_i for the default family.
  const BigInt& k_lambda() const noexcept { return k_lambda_; }
  bool is_default_family() const;

  std::string describe() const;

  friend bool operator==(const Equation&, const Equation&) = default;

 private:
  std::size_t n_;
  std::vector<BigInt> lambda_;
  BigInt a_;
  BigInt b_;
  BigInt k_lambda_;
};

/// An ordered tuple of positive integers.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<BigInt> coords);
  static Point ones(std::size_t n);
  static Point from_ints(std::initializer_list<long> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  /// 1-based access, matching direction labels.
  const BigInt& at(std::size_t direction) const { return coords_.at(direction - 1); }
  const std::vector<BigInt>& coords() const noexcept { return coords_; }

  const BigInt& max() const;
  bool is_all_ones() const;
  std::size_t max_bit_length() const;

  /// Copy with coordinate `direction` replaced.
  Point with(std::size_t direction, BigInt value) const;

  std::string to_string() const;

  friend bool operator==(const Point& lhs, const Point& rhs) { return lhs.coords_ == rhs.coords_; }
  friend std::strong_ordering operator<=>(const Point& lhs, const Point& rhs);

 private:
  std::vector<BigInt> coords_;
};

struct Limits {
  std::size_t max_bits = std::size_t{1} << 20;
  std::size_t max_steps = 10'000;
};

/// LHS minus RHS, exactly. Zero iff x is a solution.
BigInt residual(const Equation& eq, const Point& x);
bool is_solution(const Equation& eq, const Point& x);

/// Vieta mutation in direction i (1-based). Checks that x is a solution
/// first; throws NotASolution, DeadEnd or ResourceLimit.
Point mutate(const Equation& eq, const Point& x, std::size_t i, const Limits& limits = {});

/// Same mutation without the solution check. A non-exact division is
/// reported as NonIntegralRoot rather than truncated.
Point mutate_unchecked(const Equation& eq, const Point& x, std::size_t i,
                       const Limits& limits = {});

/// The other Vieta root in direction i, without building the new tuple or
/// applying the bit cap. Throws DeadEnd (root <= 0) or NonIntegralRoot.
BigInt vieta_partner(const Equation& eq, const Point& x, std::size_t i);

struct ArgMax {
  std::size_t direction;  // 1-based, smallest index on ties
  bool tied;              // tie away from the all-ones tuple
};

ArgMax argmax_coordinate(const Point& x);

enum class DescentEnd {
  AllOnes,        // reached (1,...,1)
  NonDecreasing,  // argmax mutation did not lower the maximum
  DeadEnd,        // argmax mutation left the positive integers
};

struct Descent {
  Word word;                 // directions applied, in order
  std::vector<Point> chain;  // x, then every intermediate tuple
  std::size_t ties = 0;      // argmax ties seen away from the all-ones tuple
  DescentEnd end = DescentEnd::AllOnes;

  const Point& terminal() const { return chain.back(); }
};

/// Mutates the largest coordinate until the maximum stops strictly
/// decreasing, and reports why it stopped. Throws NotASolution and
/// ResourceLimit (step cap).
Descent descend_until_stuck(const Equation& eq, const Point& x, const Limits& limits = {});

/// Descent that must reach (1,...,1): anything else raises
/// NonDecreasingStep carrying the stuck tuple.
Descent descend(const Equation& eq, const Point& x, const Limits& limits = {});

/// x0 followed by the successive mutations along `word`. Errors carry the
/// failing 1-based step.
std::vector<Point> apply_word(const Equation& eq, const Point& x0, const Word& word,
                              const Limits& limits = {});

/// Checks that x has eq.n() coordinates, each at least 1.
void check_point(const Equation& eq, const Point& x);

}  // namespace mh
