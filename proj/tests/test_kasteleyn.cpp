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

#include <random>

#include "qsnake/kasteleyn.hpp"
#include "support.hpp"

namespace qsnake {
namespace {

using testing::eval;
using testing::P;
using testing::Rat;

PolyMatrix parse_matrix(std::initializer_list<std::initializer_list<const char*>> rows) {
  PolyMatrix m;
  for (const auto& row : rows) {
    std::vector<LaurentPoly> out;
    for (const char* e : row) out.push_back(P(e));
    m.push_back(std::move(out));
  }
  return m;
}

const PolyMatrix kThirteenThirds = parse_matrix({
    {"q", "-1", "0", "0", "0", "0", "0"},
    {"-1", "-1", "q", "-1", "0", "0", "0"},
    {"0", "q", "0", "-1", "0", "0", "0"},
    {"0", "0", "-1", "-1", "-1", "0", "0"},
    {"0", "0", "0", "q", "-1", "q^-1", "0"},
    {"0", "0", "0", "0", "q^-1", "0", "-1"},
    {"0", "0", "0", "0", "-1", "-1", "-1"},
});

const PolyMatrix kThirteenThirdsTridiagonal = parse_matrix({
    {"q", "-1", "0", "0", "0", "0", "0"},
    {"-1", "-1 - q", "q", "0", "0", "0", "0"},
    {"0", "q", "0", "-1", "0", "0", "0"},
    {"0", "0", "-1", "-1", "-1", "0", "0"},
    {"0", "0", "0", "q", "-q^-1 - 1", "q^-1", "0"},
    {"0", "0", "0", "0", "q^-1", "0", "-1"},
    {"0", "0", "0", "0", "0", "-1", "-1"},
});

const LaurentPoly kThirteenThirdsDet = P("q^-2 + 2q^-1 + 3 + 3q + 2q^2 + q^3 + q^4");

PolyMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, 9), deg(-2, 2), coef(-3, 3), len(1, 3);
  PolyMatrix m(n, std::vector<LaurentPoly>(n));
  for (auto& row : m) {
    for (auto& e : row) {
      if (pick(rng) < 4) continue;  // sparse on purpose, to exercise pivoting
      std::vector<Integer> c(static_cast<std::size_t>(len(rng)));
      for (auto& x : c) x = coef(rng);
      e = LaurentPoly(deg(rng), std::move(c));
    }
  }
  return m;
}

TEST(Numbering, ThirteenThirdsSizes) {
  const VertexNumbering v = number_vertices(make_snake(13, 3));
  EXPECT_EQ(v.black.size(), 7u);
  EXPECT_EQ(v.white.size(), 7u);
  EXPECT_EQ(v.black.front(), (Point{0, 0}));
  const VertexNumbering one = number_vertices(make_snake(ContinuedFraction{2}));
  EXPECT_EQ(one.black.size(), 2u);
  EXPECT_EQ(one.white.size(), 2u);
}

TEST(KasteleynMatrix, ThirteenThirdsEntryForEntry) {
  const KasteleynMatrix m = kasteleyn_matrix(make_snake(13, 3));
  ASSERT_EQ(m.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(m.at(i, j), kThirteenThirds[i][j]) << i << "," << j;
  }
  EXPECT_EQ(det_exact(m), kThirteenThirdsDet);
}

TEST(KasteleynMatrix, TridiagonalVariantHasSameDeterminant) {
  EXPECT_EQ(det_exact(kThirteenThirdsTridiagonal), kThirteenThirdsDet);
  for (const Rat& t : {Rat(2), Rat(-1, 3)}) {
    EXPECT_EQ(testing::det_at(kThirteenThirdsTridiagonal, t), eval(kThirteenThirdsDet, t));
  }
}

TEST(KasteleynMatrix, SingleBox) {
  const KasteleynMatrix m = kasteleyn_matrix(make_snake(ContinuedFraction{2}));
  ASSERT_EQ(m.size(), 2u);
  int q_entries = 0, unit_entries = 0;
  for (const auto& row : m.entries) {
    for (const auto& e : row) {
      if (e == P("q") || e == P("-q")) ++q_entries;
      if (e == P("1") || e == P("-1")) ++unit_entries;
    }
  }
  EXPECT_EQ(q_entries, 1);
  EXPECT_EQ(unit_entries, 3);
  const LaurentPoly d = det_exact(m);
  EXPECT_EQ(d * normalized_sign(d), P("1 + q"));
}

TEST(KasteleynMatrix, FibonacciSnakeMatchesBandPattern) {
  // 3/2 = F_4/F_3: the two-box vertical snake.
  const KasteleynMatrix m = kasteleyn_matrix(make_snake(3, 2));
  const PolyMatrix band = parse_matrix({{"1", "1", "0"}, {"-q", "1", "-q^-1"}, {"0", "1", "1"}});
  EXPECT_EQ(fibonacci_band_matrix(3), band);
  const LaurentPoly d = det_exact(m);
  EXPECT_EQ(d * normalized_sign(d), det_exact(band));
}

TEST(Determinant, Trivial) {
  EXPECT_EQ(det_exact(PolyMatrix{{P("q")}}), P("q"));
  EXPECT_EQ(det_exact(PolyMatrix{}), P("1"));
  EXPECT_EQ(det_exact(parse_matrix({{"1", "q"}, {"q^-1", "1"}})), LaurentPoly());
  EXPECT_EQ(det_exact(parse_matrix({{"0", "0"}, {"1", "q"}})), LaurentPoly());
  EXPECT_EQ(det_exact(parse_matrix({{"0", "1"}, {"1", "0"}})), P("-1"));
}

TEST(Determinant, BareissAgreesWithOracles) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
    const PolyMatrix m = random_matrix(rng, n);
    const LaurentPoly d = det_bareiss(m);
    EXPECT_EQ(d, det_permutation(m));
    for (const Rat& t : {Rat(2), Rat(-3, 2)}) EXPECT_EQ(eval(d, t), testing::det_at(m, t));
  }
}

TEST(Determinant, LargerRandomAgainstPointEvaluation) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const PolyMatrix m = random_matrix(rng, 12);
    const LaurentPoly d = det_bareiss(m);
    for (const Rat& t : {Rat(2), Rat(1, 3), Rat(-2)}) EXPECT_EQ(eval(d, t), testing::det_at(m, t));
  }
}

TEST(VerifyKasteleyn, Examples) {
  const KasteleynReport a = verify_kasteleyn(13, 3);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(a.n, 2);
  EXPECT_EQ(a.abs_det.shifted(2), P("1 + 2q + 3q^2 + 3q^3 + 2q^4 + q^5 + q^6"));
  const KasteleynReport b = verify_kasteleyn(5, 2);
  EXPECT_TRUE(b.pass());
  EXPECT_EQ(b.n, 1);
  for (std::int64_t r = 1; r <= 10; ++r) EXPECT_TRUE(verify_kasteleyn(r, 1).pass()) << r;
}

TEST(VerifyKasteleyn, SweepWithStructure) {
  for (const auto& [r, s] : testing::pairs_up_to(40)) {
    const KasteleynReport rep = verify_kasteleyn(r, s);
    EXPECT_TRUE(rep.pass()) << r << "/" << s;
    const std::size_t d = make_snake(r, s).box_count();
    EXPECT_EQ(rep.matrix.size(), d + 1);
    EXPECT_EQ(rep.matrix.nonzero_count(), 3 * d + 1);
    EXPECT_LE(rep.matrix.bandwidth(), 2u);
    EXPECT_EQ(eval(rep.det, Rat(2)), testing::det_at(rep.matrix.entries, Rat(2)));
    EXPECT_EQ(rep.abs_det, testing::permanent_stat(make_snake(r, s)));
  }
}

TEST(VerifyKasteleyn, TermSignsAreCoherent) {
  for (const auto& [r, s] : testing::pairs_up_to(40)) {
    const SnakeGraph g = make_snake(r, s);
    if (g.box_count() > 10) continue;
    const PermutationExpansion p = permutation_expansion(kasteleyn_matrix(g).entries);
    EXPECT_TRUE(p.coherent()) << r << "/" << s;
    EXPECT_EQ(p.terms, static_cast<std::size_t>(r));
  }
}

TEST(Fibonacci, BandDeterminantCounts) {
  for (std::int64_t n = 2; n <= 20; ++n) {
    const LaurentPoly f = fibonacci_kasteleyn(n);
    EXPECT_EQ(eval_at_one(f), fibonacci_number(n + 1)) << n;
    EXPECT_EQ(f, det_bareiss(fibonacci_band_matrix(n)));
    const SnakeGraph g = make_snake(fibonacci_number(n + 1), fibonacci_number(n));
    EXPECT_EQ(f, testing::permanent_stat(g)) << n;
  }
  EXPECT_EQ(eval_at_one(fibonacci_kasteleyn(2)), 2);
}

TEST(Fibonacci, RescaledBand) {
  EXPECT_EQ(fibonacci_kasteleyn_rescaled(5), P("1 + 2q + 2q^2 + 2q^3 + q^4"));
  EXPECT_EQ(fibonacci_kasteleyn_rescaled(7), P("1 + 3q + 4q^2 + 5q^3 + 4q^4 + 3q^5 + q^6"));
  for (std::int64_t n = 2; n <= 20; ++n) {
    const LaurentPoly tilde = q_rational(fibonacci_number(n + 1), fibonacci_number(n)).num;
    EXPECT_EQ(fibonacci_numerator_via_kasteleyn(n), tilde) << n;
    // Even sizes carry one extra factor q.
    EXPECT_EQ(fibonacci_kasteleyn_rescaled(n), n % 2 == 1 ? tilde : tilde.shifted(1)) << n;
  }
}

TEST(Fibonacci, EvenSizeEndsWithShortRow) {
  const PolyMatrix m = fibonacci_band_matrix(4);
  EXPECT_EQ(m[3][2], P("-q"));
  EXPECT_EQ(m[3][3], P("1"));
  EXPECT_THROW(fibonacci_kasteleyn(1), std::invalid_argument);
}

}  // namespace
}  // namespace qsnake
