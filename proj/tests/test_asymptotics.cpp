#include <gtest/gtest.h>

#include <cmath>

#include "mh/asymptotics.hpp"
#include "mh/errors.hpp"
#include "oracle/reference.hpp"

using namespace mh;

namespace {

Equation eq0123() { return Equation::from_ints({0, 1, 2, 3}); }

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(RatioNumber, Examples) {
  EXPECT_EQ(ratio_number(eq0123(), Point::ones(4), 2), 4);
  EXPECT_EQ(ratio_number(eq0123(), Point::ones(4), 1), 3);
  EXPECT_EQ(ratio_number(Equation::markov_hurwitz(3), Point::from_ints({1, 1, 2}), 2), q(5, 2));
  EXPECT_THROW(ratio_number(eq0123(), Point::from_ints({1, 2, 1, 1}), 1), NotASolution);
}

TEST(RatioSequence, Examples) {
  const RatioSequence s = ratio_sequence(eq0123(), Word({1, 2}));
  EXPECT_EQ(s.values, (std::vector<Rational>{3, q(14, 3)}));
  EXPECT_EQ(s.k_lambda, 10);
  EXPECT_TRUE(s.from_root);
  for (std::size_t i = 1; i <= 4; ++i) {
    EXPECT_EQ(ratio_sequence(eq0123(), Word({i})).values.front(), Rational(3 + eq0123().lambda(i)));
  }
  const RatioSequence c = ratio_sequence(Equation::markov_hurwitz(3), cyclic_word(3, 12));
  for (std::size_t t = 1; t < c.values.size(); ++t) EXPECT_GT(c.values[t], c.values[t - 1]);
  EXPECT_LT(to_double(Rational(3 - c.values.back())), 1e-6);
  EXPECT_FALSE(ratio_sequence(eq0123(), Word({1}), Point::from_ints({3, 1, 1, 1})).from_root);
}

TEST(RatioClosedForm, AgreesWithRatioNumber) {
  const std::vector<Equation> eqs{eq0123(), Equation::from_ints({1, 1, 1}), Equation(3, {0, 1, 2}, 2, 3)};
  const std::vector<Point> starts{Point::ones(4), Point::ones(3), Point::from_ints({1, 3, 1})};
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    Point x = starts[e];
    const Word w = random_word(eqs[e].n(), 10, 3 + e);
    for (std::size_t label : w) {
      EXPECT_EQ(ratio_closed_form(eqs[e], x, label), ratio_number(eqs[e], x, label));
      x = mutate(eqs[e], x, label);
    }
  }
}

TEST(BigLog, SmallValues) {
  EXPECT_EQ(big_log(BigInt(1)), 0.0);
  EXPECT_NEAR(big_log(BigInt(3)), 1.0986122886681098, 1e-15);
  EXPECT_NEAR(big_log(BigInt(14)), 2.6390573296152584, 1e-15);
  EXPECT_THROW(big_log(BigInt(0)), DimensionError);
}

TEST(BigLog, AgainstMpfr) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240601);
  std::vector<BigInt> values;
  for (std::size_t bits : {2u, 63u, 64u, 65u, 100u, 1000u, 65536u, 1000000u}) {
    values.push_back((BigInt(1) << static_cast<mp_bitcnt_t>(bits)) - 1);
    values.push_back(BigInt(1) << static_cast<mp_bitcnt_t>(bits));
    values.push_back((BigInt(1) << static_cast<mp_bitcnt_t>(bits - 1)) + rng.get_z_bits(bits - 1));
  }
  for (const auto& v : values) {
    const double expected = oracle::mpfr_ln(v);
    EXPECT_LE(std::fabs(big_log(v) - expected), 1e-12 * expected) << bit_length(v) << " bits";
  }
}

TEST(LogChain, Examples) {
  const LogChain c = log_chain(eq0123(), Word({3}));
  ASSERT_EQ(c.points.size(), 2u);
  EXPECT_NEAR(c.points[1].values[2], std::log(5.0), 1e-14);
  EXPECT_EQ(c.points[1].values[0], 0.0);
  const LogChain d = log_chain(eq0123(), Word({2, 1}));
  EXPECT_NEAR(d.points[2].values[0], std::log(18.0), 1e-14);
  EXPECT_NEAR(d.points[2].values[1], std::log(4.0), 1e-14);
  const LogChain e = log_chain(eq0123(), Word{});
  EXPECT_EQ(e.points.size(), 1u);
  EXPECT_EQ(e.points[0].values, std::vector<double>(4, 0.0));
}

TEST(LogChain, FollowsDeformedEuclidEvolution) {
  const Equation eq = Equation::from_ints({0, 1, 2});
  const Word w = cyclic_word(3, 18);
  const LogChain c = log_chain(eq, w);
  EXPECT_LE(c.max_relative_residual, kLogIdentityTolerance);
  std::vector<double> x(3, 0.0);
  for (std::size_t t = 0; t < w.size(); ++t) {
    double s = c.log_k[t];
    for (std::size_t j = 0; j < 3; ++j) {
      if (j + 1 != w[t]) s += x[j];
    }
    x[w[t] - 1] = s;
    for (std::size_t j = 0; j < 3; ++j) {
      const double ref = c.points[t + 1].values[j];
      EXPECT_LE(std::fabs(x[j] - ref), static_cast<double>(t + 1) * 1e-9 * std::max(1.0, ref));
    }
  }
}

TEST(QEstimate, Examples) {
  const QEstimate one = q_estimate(eq0123(), Word({1}), 1);
  EXPECT_NEAR(one.per_coordinate[0], std::log(3.0) / 3, 1e-15);
  EXPECT_EQ(one.per_coordinate[1], 0.0);
  const QEstimate two = q_estimate(eq0123(), Word({2, 1}), 2);
  EXPECT_NEAR(two.per_coordinate[0], std::log(18.0) / 5, 1e-15);
  EXPECT_NEAR(two.per_coordinate[1], std::log(4.0) / 3, 1e-15);
  EXPECT_NEAR(two.spread, std::log(18.0) / 5, 1e-15);
  EXPECT_GE(two.q_mid, 0.0);
  EXPECT_LE(two.q_mid, two.spread);
  const QEstimate zero = q_estimate(eq0123(), Word({2, 1}), 0);
  EXPECT_EQ(zero.spread, 0.0);
  EXPECT_EQ(zero.per_coordinate, std::vector<double>(4, 0.0));
  EXPECT_THROW(q_estimate(eq0123(), Word({2, 1}), 3), InvalidWord);
}

TEST(QEstimate, AllDepthsMatchSingleDepth) {
  const Equation eq = Equation::from_ints({1, 1, 1});
  const Word w = cyclic_word(3, 15);
  const auto all = q_estimates(eq, w, 15);
  ASSERT_EQ(all.size(), 15u);
  for (std::size_t d : {1u, 7u, 15u}) {
    EXPECT_EQ(all[d - 1].per_coordinate, q_estimate(eq, w, d).per_coordinate);
  }
  EXPECT_LT(all.back().spread, all[5].spread);
}

TEST(ConvergenceReport, Examples) {
  EXPECT_TRUE(convergence_report(eq0123(), Word({1, 2}), 0).empty());
  const auto rows = convergence_report(eq0123(), cyclic_word(4, 8), 8);
  ASSERT_EQ(rows.size(), 8u);
  for (std::size_t t = 1; t < rows.size(); ++t) EXPECT_GT(rows[t].k, rows[t - 1].k);
  const auto mh3 = convergence_report(Equation::markov_hurwitz(3), cyclic_word(3, 20), 20);
  for (std::size_t t = 1; t < mh3.size(); ++t) EXPECT_LT(mh3[t].gap, mh3[t - 1].gap);
  EXPECT_LT(to_double(mh3.back().gap), 1e-6);
  EXPECT_EQ(mh3.back().t, 20u);
  EXPECT_EQ(mh3.back().direction, 2u);
}
