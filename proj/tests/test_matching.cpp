// Copyright 2026 The qsnake Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <set>

#include "qsnake/matching.hpp"
#include "support.hpp"

namespace qsnake {
namespace {

using testing::P;

void expect_perfect(const SnakeGraph& g, const Matching& m) {
  std::multiset<Point> covered;
  for (const Edge& e : m.edges) {
    ASSERT_TRUE(g.find_edge(e).has_value());
    covered.insert(e.a);
    covered.insert(e.b);
  }
  EXPECT_EQ(covered.size(), g.vertices().size());
  for (const Point p : g.vertices()) EXPECT_EQ(covered.count(p), 1u);
  EXPECT_TRUE(std::is_sorted(m.edges.begin(), m.edges.end()));
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_matchings(make_snake(ContinuedFraction{2})).size(), 2u);
  EXPECT_EQ(enumerate_matchings(make_snake(5, 2)).size(), 5u);
  EXPECT_EQ(enumerate_matchings(make_snake(13, 3)).size(), 13u);
  EXPECT_EQ(enumerate_matchings(make_snake(1, 1)).size(), 1u);
  EXPECT_EQ(enumerate_matchings(SnakeGraph()).size(), 1u);
}

TEST(Enumerate, PerfectAndDistinct) {
  for (const auto& [r, s] : testing::pairs_up_to(25)) {
    const SnakeGraph g = make_snake(r, s);
    const auto all = enumerate_matchings(g);
    EXPECT_EQ(all.size(), static_cast<std::size_t>(r));
    std::set<std::vector<Edge>> seen;
    for (const Matching& m : all) {
      expect_perfect(g, m);
      EXPECT_TRUE(seen.insert(m.edges).second) << "duplicate matching";
      int w = 0;
      for (const Edge& e : m.edges) w += g.edge(e).weight_exp;
      EXPECT_EQ(m.weight_exp, w);
    }
  }
}

TEST(Enumerate, DeterministicOrder) {
  const SnakeGraph g = make_snake(29, 12);
  EXPECT_EQ(enumerate_matchings(g), enumerate_matchings(g));
}

TEST(Statistic, SmallSnakes) {
  EXPECT_EQ(matching_stat(make_snake(ContinuedFraction{2, 2})), P("q^-1 + 2 + q + q^2"));
  EXPECT_EQ(matching_stat(make_snake(ContinuedFraction{1, 1, 2, 1})), P("q^-1 + 1 + 2q + 2q^2 + q^3"));
  EXPECT_EQ(matching_stat(make_snake(ContinuedFraction{2})), P("1 + q"));
}

TEST(Statistic, TwentyNineTwelfths) {
  // 29 matchings; agrees with q^-3 R(q) for R the numerator of [29/12]_q.
  const LaurentPoly expected = P("q^-3 + 3q^-2 + 5q^-1 + 6 + 6q + 5q^2 + 2q^3 + q^4");
  const SnakeGraph g = make_snake(ContinuedFraction{2, 2, 2, 2});
  EXPECT_EQ(matching_stat(g), expected);
  EXPECT_EQ(testing::permanent_stat(g), expected);
  EXPECT_EQ(eval_at_one(expected), 29);
}

TEST(Statistic, ThirteenThirds) {
  EXPECT_EQ(matching_stat(make_snake(13, 3)), P("q^-2 + 2q^-1 + 3 + 3q + 2q^2 + q^3 + q^4"));
}

TEST(Statistic, AgreesWithPermanentOracle) {
  for (const auto& [r, s] : testing::pairs_up_to(60)) {
    const SnakeGraph g = make_snake(r, s);
    if (g.box_count() > 16) continue;
    const LaurentPoly oracle = testing::permanent_stat(g);
    EXPECT_EQ(matching_stat(g), oracle) << r << "/" << s;
    EXPECT_EQ(matching_stat_dp(g), oracle) << r << "/" << s;
  }
}

TEST(StatisticDp, LongSnakes) {
  // F_21 / F_20 gives a 19-box vertical snake.
  const SnakeGraph g = make_snake(fibonacci_number(21), fibonacci_number(20));
  const LaurentPoly dp = matching_stat_dp(g);
  EXPECT_EQ(eval_at_one(dp), 10946);
  EXPECT_EQ(dp, testing::permanent_stat(g));
  EXPECT_EQ(dp, matching_stat(g));
  // Longer integer snakes: the count is still r.
  for (std::int64_t r = 2; r <= 60; ++r) EXPECT_EQ(eval_at_one(matching_stat_dp(make_snake(r, 1))), r);
}

TEST(StatisticDp, DegenerateGraphs) {
  EXPECT_EQ(matching_stat_dp(SnakeGraph()), P("1"));
  EXPECT_EQ(matching_stat_dp(make_snake(1, 1)), P("1"));
}

TEST(ScalarExponent, Values) {
  EXPECT_EQ(scalar_exponent({2, 2}), 1);
  EXPECT_EQ(scalar_exponent({2, 2, 2, 2}), 3);
  EXPECT_EQ(scalar_exponent({4, 3}), 2);
  EXPECT_EQ(scalar_exponent({1, 1, 3}), 1);
  EXPECT_EQ(scalar_exponent({5}), 0);
  EXPECT_EQ(scalar_exponent({1}), 0);
}

TEST(Numerator, Examples) {
  EXPECT_EQ(numerator_via_matchings(5, 2), P("1 + 2q + q^2 + q^3"));
  EXPECT_EQ(numerator_via_matchings(29, 12), P("1 + 3q + 5q^2 + 6q^3 + 6q^4 + 5q^5 + 2q^6 + q^7"));
  EXPECT_EQ(numerator_via_matchings(2, 1), P("1 + q"));
}

TEST(Numerator, SweepMatchesQRational) {
  for (const auto& [r, s] : testing::pairs_up_to(60)) {
    EXPECT_EQ(numerator_via_matchings(r, s), q_rational(r, s).num) << r << "/" << s;
  }
}

TEST(Denominator, Examples) {
  EXPECT_EQ(denominator_via_matchings(5, 2), P("1 + q"));
  EXPECT_EQ(eval_at_one(denominator_via_matchings(13, 3)), 3);
  EXPECT_EQ(denominator_via_matchings(7, 1), P("1"));
}

TEST(Denominator, SweepRelation) {
  int equal = 0, mirrored = 0;
  for (const auto& [r, s] : testing::pairs_up_to(60)) {
    const DenominatorReport rep = denominator_report(r, s);
    EXPECT_TRUE(rep.count_ok) << r << "/" << s;
    EXPECT_EQ(eval_at_one(rep.candidate), s);
    // The candidate is always the coefficient reversal of S(q).
    EXPECT_EQ(reversed(rep.candidate), rep.expected) << r << "/" << s;
    EXPECT_NE(rep.relation, DenominatorRelation::kUnrelated);
    EXPECT_NE(rep.relation, DenominatorRelation::kShift);
    (rep.relation == DenominatorRelation::kEqual ? equal : mirrored)++;
  }
  EXPECT_GT(mirrored, 0);
  EXPECT_GT(equal, 0);
}

TEST(Denominator, NotAlwaysEqual) {
  const DenominatorReport rep = denominator_report(12, 5);
  EXPECT_EQ(rep.relation, DenominatorRelation::kMirror);
  EXPECT_NE(rep.candidate, rep.expected);
}

TEST(CaseRecurrence, FiveHalves) {
  const CaseRecurrence c = case_recurrences_check({2, 2});
  ASSERT_TRUE(c.applicable);
  EXPECT_EQ(c.case_number, 1);
  EXPECT_EQ(c.shorter, (ContinuedFraction{2, 1}));
  EXPECT_EQ(c.tilde, (ContinuedFraction{2}));
  EXPECT_EQ(c.exponent, -1);
  EXPECT_TRUE(c.holds);
}

TEST(CaseRecurrence, OddLength) {
  const CaseRecurrence c = case_recurrences_check({1, 1, 3});
  ASSERT_TRUE(c.applicable);
  EXPECT_EQ(c.case_number, 2);
  EXPECT_EQ(c.exponent, 2);
  EXPECT_TRUE(c.holds);
}

TEST(CaseRecurrence, IntegerUsesEmptyTilde) {
  const CaseRecurrence c = case_recurrences_check({4});
  ASSERT_TRUE(c.applicable);
  EXPECT_EQ(c.case_number, 2);
  EXPECT_TRUE(c.tilde.empty());
  EXPECT_TRUE(c.holds);
}

TEST(CaseRecurrence, NotApplicableToSingleBox) {
  EXPECT_FALSE(case_recurrences_check({2}).applicable);
  EXPECT_FALSE(case_recurrences_check({1, 1}).applicable);
}

TEST(CaseRecurrence, HoldsOnSweep) {
  for (const auto& [r, s] : testing::pairs_up_to(60)) {
    const CaseRecurrence c = case_recurrences_check(cf_expand(r, s));
    if (c.applicable) EXPECT_TRUE(c.holds) << r << "/" << s;
    // Independent recomputation of both sides with the permanent oracle.
    if (c.applicable && cf_expand(r, s).sum() <= 12) {
      const LaurentPoly lhs = testing::permanent_stat(assign_weights(build_snake(cf_expand(r, s))));
      const LaurentPoly rhs = testing::permanent_stat(assign_weights(build_snake(c.shorter))) +
                              testing::permanent_stat(assign_weights(build_snake(c.tilde)))
                                  .shifted(static_cast<int>(c.exponent));
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(CaseRecurrence, UnshiftedReadingFails) {
  // M([2,2]) = q^-1 + 2 + q + q^2, but M([2,1]) + q^-2 M([1]) = 1 + q + q^2 + q^-2.
  const CaseRecurrence c = case_recurrences_literal({2, 2});
  ASSERT_TRUE(c.applicable);
  EXPECT_EQ(c.rhs, P("q^-2 + 1 + q + q^2"));
  EXPECT_FALSE(c.holds);
}

}  // namespace
}  // namespace qsnake
