#include "mh/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mh/errors.hpp"

namespace mh {

namespace {

BigInt product_except(const Point& x, std::size_t direction) {
  BigInt p = 1;
  for (std::size_t j = 1; j <= x.size(); ++j) {
    if (j != direction) p *= x.at(j);
  }
  return p;
}

BigInt product(const Point& x) {
  BigInt p = 1;
  for (const auto& c : x.coords()) p *= c;
  return p;
}

void check_depth(const Word& word, std::size_t depth) {
  if (depth > word.size()) {
    throw InvalidWord("depth " + std::to_string(depth) + " exceeds the word length " +
                      std::to_string(word.size()));
  }
}

double log_of(const Rational& k) { return std::log(to_double(k)); }

double relative_gap(double a, double b) {
  const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) / scale;
}

}  // namespace

Rational ratio_number(const Equation& eq, const Point& x_before, std::size_t i,
                      const Limits& limits) {
  const Point next = mutate(eq, x_before, i, limits);
  Rational k(next.at(i), product_except(x_before, i));
  k.canonicalize();
  return k;
}

Rational ratio_closed_form(const Equation& eq, const Point& x_before, std::size_t j) {
  check_point(eq, x_before);
  if (j < 1 || j > eq.n()) throw InvalidWord("direction " + std::to_string(j) + " is out of range");
  BigInt numerator = x_before.at(j) * x_before.at(j);
  for (std::size_t i = 1; i <= eq.n(); ++i) {
    if (i != j && eq.lambda(i) != 0) numerator += eq.lambda(i) * product_except(x_before, i);
  }
  Rational correction(numerator, product(x_before));
  correction.canonicalize();
  return Rational(eq.k_lambda()) - correction;
}

RatioSequence ratio_sequence(const Equation& eq, const Word& word, const Point& start,
                             const Limits& limits) {
  check_point(eq, start);
  word.validate(eq.n());
  if (!is_solution(eq, start)) throw NotASolution(start.to_string() + " does not solve " + eq.describe());

  RatioSequence seq;
  seq.k_lambda = eq.k_lambda();
  seq.from_root = start.is_all_ones();
  seq.values.reserve(word.size());
  Point x = start;
  for (std::size_t t = 0; t < word.size(); ++t) {
    const std::size_t i = word[t];
    try {
      Point next = mutate_unchecked(eq, x, i, limits);
      const BigInt others = product_except(x, i);
      Rational k(next.at(i), others);
      k.canonicalize();
      if (k * others != next.at(i)) throw ConsistencyError("product form fails");
      seq.values.push_back(std::move(k));
      x = std::move(next);
    } catch (Error& e) {
      e.set_step(t + 1);
      throw;
    }
  }
  return seq;
}

RatioSequence ratio_sequence(const Equation& eq, const Word& word, const Limits& limits) {
  return ratio_sequence(eq, word, Point::ones(eq.n()), limits);
}

double big_log(const BigInt& v) {
  if (v < 1) throw DimensionError("logarithm needs a positive integer, got " + to_decimal(v));
  const std::size_t bits = bit_length(v);
  if (bits <= 64) return std::log(static_cast<double>(v.get_ui()));

  // top 64 bits as an integer m in [2^63, 2^64), so v = m * 2^(bits-64) up
  // to the discarded low bits (relative error below 2^-63)
  BigInt top = v >> static_cast<mp_bitcnt_t>(bits - 64);
  const unsigned long m = top.get_ui();
  const long double mantissa = std::ldexp(static_cast<long double>(m), -63);  // in [1, 2)
  const long double ln2 = std::numbers::ln2_v<long double>;
  return static_cast<double>(static_cast<long double>(bits - 1) * ln2 + std::log(mantissa));
}

LogChain log_chain(const Equation& eq, const Word& word, const Limits& limits) {
  word.validate(eq.n());
  LogChain out;
  Point x = Point::ones(eq.n());
  out.points.push_back({std::vector<double>(eq.n(), 0.0)});
  for (std::size_t t = 0; t < word.size(); ++t) {
    const std::size_t i = word[t];
    try {
      Point next = mutate_unchecked(eq, x, i, limits);
      Rational k(next.at(i), product_except(x, i));
      k.canonicalize();
      const double log_k = log_of(k);

      LogPoint p = out.points.back();
      p.values[i - 1] = big_log(next.at(i));
      double predicted = log_k;
      for (std::size_t j = 0; j < eq.n(); ++j) {
        if (j + 1 != i) predicted += p.values[j];
      }
      const double gap = relative_gap(p.values[i - 1], predicted);
      out.max_relative_residual = std::max(out.max_relative_residual, gap);
      if (gap > kLogIdentityTolerance) {
        throw ConsistencyError("log identity off by " + format_double(gap, 3) + " (relative)");
      }
      out.log_k.push_back(log_k);
      out.points.push_back(std::move(p));
      x = std::move(next);
    } catch (Error& e) {
      e.set_step(t + 1);
      throw;
    }
  }
  return out;
}

namespace {

QEstimate make_estimate(const std::vector<double>& logs, const std::vector<BigInt>& euclid,
                        std::size_t depth, bool generic) {
  QEstimate q;
  q.depth = depth;
  q.generic = generic;
  q.per_coordinate.reserve(logs.size());
  for (std::size_t j = 0; j < logs.size(); ++j) {
    q.per_coordinate.push_back(logs[j] / euclid[j].get_d());
  }
  auto [lo, hi] = std::minmax_element(q.per_coordinate.begin(), q.per_coordinate.end());
  q.spread = *hi - *lo;
  q.q_mid = *lo + q.spread / 2;
  return q;
}

// Walks the Markov-Hurwitz chain and the classical Euclid chain side by
// side and hands each depth to `visit` together with the exact ratio number.
template <typename Visit>
void walk_chains(const Equation& eq, const Word& word, std::size_t depth, const Limits& limits,
                 Visit&& visit) {
  word.validate(eq.n());
  check_depth(word, depth);
  const std::size_t n = eq.n();
  const std::size_t window = default_generic_window(n);
  Point x = Point::ones(n);
  std::vector<BigInt> euclid(n, 1);
  BigInt euclid_sum(static_cast<unsigned long>(n));
  std::vector<double> logs(n, 0.0);
  for (std::size_t t = 0; t < depth; ++t) {
    const std::size_t i = word[t];
    try {
      Point next = mutate_unchecked(eq, x, i, limits);
      Rational k(next.at(i), product_except(x, i));
      k.canonicalize();
      logs[i - 1] = big_log(next.at(i));
      BigInt e = euclid_sum - euclid[i - 1];
      euclid_sum += e - euclid[i - 1];
      euclid[i - 1] = std::move(e);
      x = std::move(next);
      const bool generic = is_generic_prefix(word.prefix(t + 1), n, window);
      visit(t + 1, i, k, make_estimate(logs, euclid, t + 1, generic));
    } catch (Error& err) {
      err.set_step(t + 1);
      throw;
    }
  }
}

}  // namespace

std::vector<QEstimate> q_estimates(const Equation& eq, const Word& word, std::size_t depth,
                                   const Limits& limits) {
  std::vector<QEstimate> out;
  out.reserve(depth);
  walk_chains(eq, word, depth, limits,
              [&](std::size_t, std::size_t, const Rational&, QEstimate q) { out.push_back(std::move(q)); });
  return out;
}

QEstimate q_estimate(const Equation& eq, const Word& word, std::size_t depth, const Limits& limits) {
  if (depth == 0) {
    word.validate(eq.n());
    return make_estimate(std::vector<double>(eq.n(), 0.0), std::vector<BigInt>(eq.n(), 1), 0, true);
  }
  return q_estimates(eq, word, depth, limits).back();
}

std::vector<ReportRow> convergence_report(const Equation& eq, const Word& word, std::size_t depth,
                                          const Limits& limits) {
  std::vector<ReportRow> rows;
  rows.reserve(depth);
  const Rational k_lambda(eq.k_lambda());
  walk_chains(eq, word, depth, limits,
              [&](std::size_t t, std::size_t i, const Rational& k, const QEstimate& q) {
                // the log-comparison tuple is the tuple of q quotients, so
                // its total interval is their spread
                rows.push_back({t, i, k, k_lambda - k, q.spread, q.spread});
              });
  return rows;
}

}  // namespace mh
