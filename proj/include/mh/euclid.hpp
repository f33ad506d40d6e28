// Classical and k-deformed n-branched Euclid chains and the comparison
// tuples between a deformed chain and a classical one.
//
// Everything here is exact rational arithmetic.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mh/numeric.hpp"
#include "mh/words.hpp"

namespace mh {

struct EuclidPoint {
  std::vector<Rational> coords;

  static EuclidPoint ones(std::size_t n);
  static EuclidPoint from_ints(std::initializer_list<long> values);

  std::size_t size() const noexcept { return coords.size(); }
  const Rational& at(std::size_t direction) const { return coords.at(direction - 1); }
  /// Sum of every coordinate except `direction`.
  Rational sum_except(std::size_t direction) const;

  friend bool operator==(const EuclidPoint&, const EuclidPoint&) = default;
};

/// Deformation parameters k_1, k_2, ... with declared bounds
/// 0 <= k_a <= k_t <= k_c.
class DeformationSchedule {
 public:
  static DeformationSchedule constant(Rational k);
  static DeformationSchedule sequence(std::vector<Rational> values, Rational k_a, Rational k_c);

  bool is_constant() const noexcept { return constant_; }
  const Rational& lower() const noexcept { return lower_; }
  const Rational& upper() const noexcept { return upper_; }

  /// Parameter used by the 1-based step t. Throws ScheduleError when a
  /// finite sequence runs out.
  const Rational& at(std::size_t step) const;

 private:
  DeformationSchedule() = default;

  bool constant_ = true;
  std::vector<Rational> values_;
  Rational lower_;
  Rational upper_;
};

/// Replaces coordinate i by the sum of the others plus k.
EuclidPoint euclid_mutate(const EuclidPoint& x, std::size_t i, const Rational& k);

struct EuclidChain {
  std::vector<EuclidPoint> points;     // x0 and every step
  std::vector<Rational> newly_changed;  // the coordinate written at each step
};

EuclidChain euclid_chain(const EuclidPoint& x0, const Word& word, const DeformationSchedule& sched);

struct ComparisonTuple {
  std::vector<Rational> values;

  std::size_t size() const noexcept { return values.size(); }
  const Rational& at(std::size_t direction) const { return values.at(direction - 1); }

  friend bool operator==(const ComparisonTuple&, const ComparisonTuple&) = default;
};

/// Coordinatewise y_j / x_j. Throws DivisionByZero on a zero x_j.
ComparisonTuple comparison_tuple(const EuclidPoint& y, const EuclidPoint& x);

/// Induced mutation on comparison tuples: entry i becomes the x-weighted
/// average of the other entries shifted right by k / S_i, where x is the
/// classical point before the step and S_i the sum of its other entries.
ComparisonTuple comparison_mutate(const ComparisonTuple& l, const EuclidPoint& x_before,
                                  std::size_t i, const Rational& k);

struct TotalInterval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains(const TotalInterval& other) const { return lo <= other.lo && other.hi <= hi; }
};

TotalInterval total_interval(const ComparisonTuple& l);
/// Interval of the n-1 entries other than `direction`: the range the
/// weighted average in a direction-i step is taken over.
TotalInterval total_interval_excluding(const ComparisonTuple& l, std::size_t direction);

/// u_j = l_j + k / ((n-2) x_j). Requires n >= 3 and x > 0.
ComparisonTuple auxiliary_tuple(const ComparisonTuple& l, const EuclidPoint& x, const Rational& k);

/// Starting points for the two constant-parameter companion chains that
/// bracket a chain whose parameter varies in [k_a, k_c], plus their
/// auxiliary tuples.
struct Envelope {
  ComparisonTuple lower;      // evolves with k_a
  ComparisonTuple upper;      // evolves with k_c
  ComparisonTuple lower_aux;  // l + k_a / ((n-2) x), evolves with k = 0
  ComparisonTuple upper_aux;  // l + k_c / ((n-2) x), evolves with k = 0
};

Envelope envelope_tuples(const ComparisonTuple& l, const EuclidPoint& x, const Rational& k_a,
                         const Rational& k_c);

/// Comparison chain evolved step by step with comparison_mutate, next to
/// the classical chain it is measured against.
struct ComparisonChain {
  std::vector<EuclidPoint> classical;  // x_t
  std::vector<ComparisonTuple> tuples;  // l_t
  std::vector<Rational> k;              // k_t used at step t (index t-1)
};

ComparisonChain comparison_chain(const EuclidPoint& y0, const EuclidPoint& x0, const Word& word,
                                 const DeformationSchedule& sched);

/// Removes a direction that no longer occurs: drops coordinate `frozen`
/// from the point, relabels directions above it down by one, and folds the
/// frozen value into the deformation parameter.
struct FrozenReduction {
  EuclidPoint point;
  Word word;
  Rational k;
};

FrozenReduction reduce_frozen_direction(const EuclidPoint& point, std::size_t frozen,
                                        const Word& tail, const Rational& k);

/// CSV trace: step,direction,k_t,l_1..l_n,interval,interval_decimal.
std::string comparison_trace_csv(const ComparisonChain& chain, const Word& word, int digits);

}  // namespace mh
