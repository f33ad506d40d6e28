#include "mh/euclid.hpp"

#include <algorithm>
#include <sstream>

#include "mh/errors.hpp"

namespace mh {

EuclidPoint EuclidPoint::ones(std::size_t n) { return {std::vector<Rational>(n, Rational(1))}; }

EuclidPoint EuclidPoint::from_ints(std::initializer_list<long> values) {
  EuclidPoint p;
  for (long v : values) p.coords.emplace_back(v);
  return p;
}

Rational EuclidPoint::sum_except(std::size_t direction) const {
  Rational s = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (j + 1 != direction) s += coords[j];
  }
  return s;
}

// ---------------------------------------------------------------------------

DeformationSchedule DeformationSchedule::constant(Rational k) {
  if (k < 0) throw ScheduleError("deformation parameter must be nonnegative, got " + to_fraction(k));
  DeformationSchedule s;
  s.constant_ = true;
  s.lower_ = k;
  s.upper_ = k;
  s.values_ = {std::move(k)};
  return s;
}

DeformationSchedule DeformationSchedule::sequence(std::vector<Rational> values, Rational k_a,
                                                  Rational k_c) {
  if (k_a < 0 || k_c < k_a) {
    throw ScheduleError("bounds must satisfy 0 <= k_a <= k_c, got " + to_fraction(k_a) + " and " +
                        to_fraction(k_c));
  }
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (values[t] < k_a || values[t] > k_c) {
      throw ScheduleError("k_" + std::to_string(t + 1) + " = " + to_fraction(values[t]) +
                          " lies outside [" + to_fraction(k_a) + ", " + to_fraction(k_c) + "]");
    }
  }
  DeformationSchedule s;
  s.constant_ = false;
  s.values_ = std::move(values);
  s.lower_ = std::move(k_a);
  s.upper_ = std::move(k_c);
  return s;
}

const Rational& DeformationSchedule::at(std::size_t step) const {
  if (constant_) return values_.front();
  if (step == 0 || step > values_.size()) {
    throw ScheduleError("schedule has " + std::to_string(values_.size()) + " values, step " +
                        std::to_string(step) + " requested");
  }
  return values_[step - 1];
}

// ---------------------------------------------------------------------------

namespace {

void check_direction(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) {
    throw InvalidWord("direction " + std::to_string(i) + " is outside 1.." + std::to_string(n));
  }
}

void check_positive(const EuclidPoint& x) {
  for (const auto& c : x.coords) {
    if (c <= 0) throw DivisionByZero("classical coordinates must be positive");
  }
}

}  // namespace

EuclidPoint euclid_mutate(const EuclidPoint& x, std::size_t i, const Rational& k) {
  check_direction(x.size(), i);
  EuclidPoint out = x;
  out.coords[i - 1] = x.sum_except(i) + k;
  return out;
}

EuclidChain euclid_chain(const EuclidPoint& x0, const Word& word, const DeformationSchedule& sched) {
  word.validate(x0.size());
  EuclidChain chain;
  chain.points.reserve(word.size() + 1);
  chain.points.push_back(x0);
  for (std::size_t t = 0; t < word.size(); ++t) {
    chain.points.push_back(euclid_mutate(chain.points.back(), word[t], sched.at(t + 1)));
    chain.newly_changed.push_back(chain.points.back().at(word[t]));
  }
  return chain;
}

ComparisonTuple comparison_tuple(const EuclidPoint& y, const EuclidPoint& x) {
  if (y.size() != x.size()) {
    throw DimensionError("comparison needs points of equal length, got " + std::to_string(y.size()) +
                         " and " + std::to_string(x.size()));
  }
  ComparisonTuple l;
  l.values.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x.coords[j] == 0) {
      throw DivisionByZero("classical coordinate " + std::to_string(j + 1) + " is zero");
    }
    l.values.push_back(y.coords[j] / x.coords[j]);
  }
  return l;
}

ComparisonTuple comparison_mutate(const ComparisonTuple& l, const EuclidPoint& x_before,
                                  std::size_t i, const Rational& k) {
  if (l.size() != x_before.size()) throw DimensionError("tuple and point lengths differ");
  check_direction(l.size(), i);
  const Rational s = x_before.sum_except(i);
  if (s == 0) throw DivisionByZero("S_" + std::to_string(i) + " is zero");
  Rational weighted = k;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (j + 1 != i) weighted += x_before.coords[j] * l.values[j];
  }
  ComparisonTuple out = l;
  out.values[i - 1] = weighted / s;
  return out;
}

TotalInterval total_interval(const ComparisonTuple& l) {
  if (l.values.empty()) return {};
  auto [lo, hi] = std::minmax_element(l.values.begin(), l.values.end());
  return {*lo, *hi};
}

TotalInterval total_interval_excluding(const ComparisonTuple& l, std::size_t direction) {
  check_direction(l.size(), direction);
  ComparisonTuple rest;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (j + 1 != direction) rest.values.push_back(l.values[j]);
  }
  return total_interval(rest);
}

ComparisonTuple auxiliary_tuple(const ComparisonTuple& l, const EuclidPoint& x, const Rational& k) {
  if (l.size() != x.size()) throw DimensionError("tuple and point lengths differ");
  if (l.size() < 3) throw DimensionError("the auxiliary tuple needs n >= 3");
  check_positive(x);
  const Rational n_minus_2(static_cast<long>(l.size() - 2));
  ComparisonTuple u = l;
  for (std::size_t j = 0; j < l.size(); ++j) u.values[j] += k / (n_minus_2 * x.coords[j]);
  return u;
}

Envelope envelope_tuples(const ComparisonTuple& l, const EuclidPoint& x, const Rational& k_a,
                         const Rational& k_c) {
  if (k_a < 0 || k_c < k_a) throw ScheduleError("bounds must satisfy 0 <= k_a <= k_c");
  return {l, l, auxiliary_tuple(l, x, k_a), auxiliary_tuple(l, x, k_c)};
}

ComparisonChain comparison_chain(const EuclidPoint& y0, const EuclidPoint& x0, const Word& word,
                                 const DeformationSchedule& sched) {
  word.validate(x0.size());
  ComparisonChain chain;
  chain.classical.push_back(x0);
  chain.tuples.push_back(comparison_tuple(y0, x0));
  for (std::size_t t = 0; t < word.size(); ++t) {
    const Rational& k = sched.at(t + 1);
    const EuclidPoint& x = chain.classical.back();
    chain.tuples.push_back(comparison_mutate(chain.tuples.back(), x, word[t], k));
    chain.classical.push_back(euclid_mutate(x, word[t], 0));
    chain.k.push_back(k);
  }
  return chain;
}

FrozenReduction reduce_frozen_direction(const EuclidPoint& point, std::size_t frozen,
                                        const Word& tail, const Rational& k) {
  check_direction(point.size(), frozen);
  if (point.size() < 3) throw DimensionError("reduction needs at least three coordinates");
  std::vector<std::size_t> labels;
  labels.reserve(tail.size());
  for (std::size_t label : tail) {
    if (label == frozen) {
      throw InvalidWord("direction " + std::to_string(frozen) + " still occurs in the tail");
    }
    labels.push_back(label > frozen ? label - 1 : label);
  }
  FrozenReduction out;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (j + 1 != frozen) out.point.coords.push_back(point.coords[j]);
  }
  out.word = Word(std::move(labels));
  out.word.validate(out.point.size());
  out.k = k + point.at(frozen);
  return out;
}

std::string comparison_trace_csv(const ComparisonChain& chain, const Word& word, int digits) {
  std::ostringstream out;
  const std::size_t n = chain.classical.empty() ? 0 : chain.classical.front().size();
  out << "step,direction,k";
  for (std::size_t j = 1; j <= n; ++j) out << ",l_" << j;
  out << ",interval,interval_decimal\n";
  for (std::size_t t = 0; t < chain.tuples.size(); ++t) {
    out << t << ',';
    if (t > 0) out << word[t - 1] << ',' << to_fraction(chain.k[t - 1]);
    else out << ',';
    for (const auto& v : chain.tuples[t].values) out << ',' << to_fraction(v);
    const Rational len = total_interval(chain.tuples[t]).length();
    out << ',' << to_fraction(len) << ',' << format_double(to_double(len), digits) << '\n';
  }
  return out.str();
}

}  // namespace mh
