// Independent reference implementations used as test oracles. Nothing here
// calls into the library: mutation goes through the sum of the two roots
// instead of their product, logarithms go through MPFR, and enumeration is
// an exhaustive box scan.
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstddef>
#include <set>
#include <vector>

namespace oracle {

using Tuple = std::vector<mpz_class>;

struct Params {
  std::vector<long> lambda;
  long a = 0;
  long b = 0;

  std::size_t n() const { return lambda.size(); }
  long k_lambda() const {
    long k = a;
    for (long l : lambda) k += l;
    return k;
  }
};

inline Params default_params(std::vector<long> lambda) {
  Params p{std::move(lambda), 0, 0};
  p.a = static_cast<long>(p.n());
  return p;
}

inline mpz_class prod_skip(const Tuple& x, std::size_t s1, std::size_t s2 = static_cast<std::size_t>(-1)) {
  mpz_class p = 1;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j != s1 && j != s2) p *= x[j];
  }
  return p;
}

inline mpz_class residual(const Params& p, const Tuple& x) {
  mpz_class lhs = 0;
  for (std::size_t i = 0; i < x.size(); ++i) lhs += x[i] * x[i] + p.lambda[i] * prod_skip(x, i);
  mpz_class all = 1;
  for (const auto& v : x) all *= v;
  return lhs - p.k_lambda() * all - p.b;
}

// Linear coefficient route: the two roots in X_i add up to
// k prod_{j != i} x_j - sum_{j != i} lambda_j prod_{m != i, j} x_m.
inline mpz_class root_sum(const Params& p, const Tuple& x, std::size_t i) {
  mpz_class s = p.k_lambda() * prod_skip(x, i);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j != i) s -= p.lambda[j] * prod_skip(x, i, j);
  }
  return s;
}

inline Tuple mutate(const Params& p, const Tuple& x, std::size_t direction) {
  Tuple y = x;
  y[direction - 1] = root_sum(p, x, direction - 1) - x[direction - 1];
  return y;
}

inline std::set<Tuple> box_solutions(const Params& p, long bound) {
  std::set<Tuple> out;
  Tuple x(p.n(), 1);
  while (true) {
    if (residual(p, x) == 0) out.insert(x);
    std::size_t pos = p.n();
    while (pos > 0 && x[pos - 1] == bound) x[--pos] = 1;
    if (pos == 0) break;
    x[pos - 1] += 1;
  }
  return out;
}

/// Natural log at 256 bits of precision, rounded to the nearest double.
inline double mpfr_ln(const mpz_class& v) {
  mpfr_t t;
  mpfr_init2(t, 256);
  mpfr_set_z(t, v.get_mpz_t(), MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  const double out = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return out;
}

/// Chain of tuples from (1,...,1) along `word` (1-based labels).
inline std::vector<Tuple> chain(const Params& p, const std::vector<std::size_t>& word) {
  std::vector<Tuple> out{Tuple(p.n(), 1)};
  for (std::size_t label : word) out.push_back(mutate(p, out.back(), label));
  return out;
}

/// Deformed Euclid chain with a fixed parameter k.
inline std::vector<std::vector<mpq_class>> euclid(std::vector<mpq_class> x0,
                                                  const std::vector<std::size_t>& word,
                                                  const mpq_class& k) {
  std::vector<std::vector<mpq_class>> out{x0};
  for (std::size_t label : word) {
    auto x = out.back();
    mpq_class s = k;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j + 1 != label) s += x[j];
    }
    x[label - 1] = s;
    out.push_back(x);
  }
  return out;
}

}  // namespace oracle
