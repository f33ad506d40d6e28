#include <gtest/gtest.h>

#include "mh/conjecture.hpp"
#include "mh/errors.hpp"
#include "mh/tree.hpp"
#include "oracle/reference.hpp"

using namespace mh;

namespace {

std::set<Point> points(std::initializer_list<std::initializer_list<long>> tuples) {
  std::set<Point> out;
  for (auto t : tuples) out.insert(Point::from_ints(t));
  return out;
}

}  // namespace

TEST(Uniqueness, ClassicalMarkov) {
  const Equation mh3 = Equation::markov_hurwitz(3);
  const UniquenessReport r = check_uniqueness(mh3, 1000);
  EXPECT_TRUE(r.holds());
  // sorted Markov triples with max <= 1000: (1,1,1),(2,1,1),(5,2,1),(13,5,1),(29,5,2),
  // (34,13,1),(89,34,1),(169,29,2),(194,13,5),(233,89,1),(433,29,5),(610,233,1),(985,169,2)
  EXPECT_EQ(r.groups_checked, 13u);
  const UniquenessReport brute =
      uniqueness_from_solutions(mh3, 60, 1, brute_force_solutions(mh3, 60));
  EXPECT_EQ(brute.groups_checked, check_uniqueness(mh3, 60).groups_checked);
}

TEST(Uniqueness, TrivialBound) {
  const UniquenessReport r = check_uniqueness(Equation::from_ints({0, 1, 2, 3}), 1);
  EXPECT_EQ(r.groups_checked, 1u);
  EXPECT_TRUE(r.holds());
}

TEST(Uniqueness, Positional) {
  const Equation mh3 = Equation::markov_hurwitz(3);
  const UniquenessReport p1 = positional_uniqueness(mh3, 1000, 1);
  const UniquenessReport c = check_uniqueness(mh3, 1000);
  EXPECT_EQ(p1.groups_checked, c.groups_checked);
  const UniquenessReport p2 = positional_uniqueness(mh3, 1000, 2);
  EXPECT_TRUE(p2.holds());
  EXPECT_EQ(p2.groups_checked, c.groups_checked);
  EXPECT_THROW(positional_uniqueness(mh3, 10, 4), UsageError);
  const UniquenessReport asym = positional_uniqueness(Equation::from_ints({0, 1, 2, 3}), 1000, 3);
  EXPECT_GE(asym.groups_checked, 1u);
}

TEST(Uniqueness, ReportsCounterexamplesFromExplicitSets) {
  // two sorted tuples sharing the leading coordinate must be reported
  const Equation eq = Equation::markov_hurwitz(3);
  const UniquenessReport r = uniqueness_from_solutions(eq, 10, 1, points({{5, 2, 1}, {5, 3, 1}, {2, 1, 1}}));
  ASSERT_EQ(r.counterexamples.size(), 1u);
  EXPECT_EQ(r.counterexamples[0].max_coordinate, 5);
  EXPECT_EQ(r.counterexamples[0].tail_1, Point::from_ints({2, 1}).coords());
  EXPECT_EQ(r.counterexamples[0].tail_2, Point::from_ints({3, 1}).coords());
  // unsorted tuples are ignored
  EXPECT_EQ(uniqueness_from_solutions(eq, 10, 1, points({{1, 2, 5}, {2, 5, 1}})).groups_checked, 0u);
}

TEST(Uniqueness, RejectsExtendedFamily) {
  EXPECT_THROW(check_uniqueness(Equation(3, {0, 0, 0}, 1, 0), 10), UnsupportedEquation);
}

TEST(Fundamentals, DefaultFamilyHasOnlyTheRoot) {
  for (auto lambda : std::vector<std::vector<long>>{{0, 0, 0}, {1, 1, 1}, {0, 1, 2}, {0, 0, 0, 0}, {0, 1, 2, 3}}) {
    std::vector<BigInt> big(lambda.begin(), lambda.end());
    const Equation eq(lambda.size(), big);
    const FundamentalSet f = find_fundamentals(eq, 3);
    EXPECT_EQ(f.solutions, std::set<Point>{Point::ones(eq.n())});
    EXPECT_TRUE(f.exhaustive_within_box);
  }
  const FundamentalSet f = find_fundamentals(Equation(3, {0, 0, 0}, 3, 0), 5);
  EXPECT_EQ(f.solutions, std::set<Point>{Point::ones(3)});
}

TEST(Fundamentals, ExtendedFamilyFrozenOracle) {
  // expected sets from tests/oracle/fundamentals.py
  EXPECT_EQ(find_fundamentals(Equation(3, {0, 0, 0}, 1, 0), 10).solutions, points({{3, 3, 3}}));
  EXPECT_TRUE(find_fundamentals(Equation(3, {0, 0, 0}, 3, 1), 12).solutions.empty());
  EXPECT_EQ(find_fundamentals(Equation(3, {0, 1, 2}, 2, 3), 12).solutions, points({{1, 3, 1}}));
  EXPECT_EQ(find_fundamentals(Equation(3, {1, 1, 1}, 1, 2), 12).solutions, points({{1, 1, 1}}));
  EXPECT_EQ(find_fundamentals(Equation(4, {0, 0, 0, 0}, 1, 0), 8).solutions, points({{2, 2, 2, 2}}));
  EXPECT_EQ(find_fundamentals(Equation(3, {0, 1, 2}, 0, 0), 12).solutions, points({{1, 3, 4}, {2, 2, 2}}));
  EXPECT_EQ(find_fundamentals(Equation(3, {0, 0, 0}, 3, 5), 12, 3).solutions,
            points({{1, 2, 6}, {1, 6, 2}, {2, 1, 6}, {2, 6, 1}, {6, 1, 2}, {6, 2, 1}}));
}

TEST(Fundamentals, MembersAreVerifiedTerminals) {
  const Equation eq(3, {0, 1, 2}, 0, 0);
  const FundamentalSet f = find_fundamentals(eq, 12, 2);
  for (const auto& x : f.solutions) {
    EXPECT_TRUE(is_solution(eq, x));
    EXPECT_TRUE(is_fundamental(eq, x, FundamentalRule::ArgMax));
  }
  for (const auto& x : f.any_rule) EXPECT_TRUE(is_fundamental(eq, x, FundamentalRule::Any));
  const auto in_box = oracle::box_solutions({{0, 1, 2}, 0, 0}, 12);
  EXPECT_EQ(f.solutions_in_box, in_box.size());
  EXPECT_EQ(find_fundamentals(eq, 12, 1).solutions, find_fundamentals(eq, 12, 4).solutions);
}
