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

// Independent oracles shared by the test binaries. Nothing here calls the
// library routine it is used to check.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsnake/laurent.hpp"
#include "qsnake/snake.hpp"

namespace qsnake::testing {

using Rat = boost::multiprecision::cpp_rational;

inline LaurentPoly P(const std::string& text) { return parse_laurent(text); }

/// Value of p at a nonzero rational point.
inline Rat eval(const LaurentPoly& p, const Rat& q) {
  Rat acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + Rat(*it);
  Rat scale = 1;
  const Rat base = p.min_deg() >= 0 ? q : Rat(1) / q;
  for (int i = 0; i < std::abs(p.min_deg()); ++i) scale *= base;
  return acc * scale;
}

inline Rat pow(const Rat& q, std::int64_t e) {
  Rat out = 1;
  const Rat base = e >= 0 ? q : Rat(1) / q;
  for (std::int64_t i = 0; i < (e >= 0 ? e : -e); ++i) out *= base;
  return out;
}

/// [n]_q at a point, as a plain geometric sum.
inline Rat q_int_at(std::int64_t n, const Rat& q) {
  Rat s = 0;
  for (std::int64_t i = 0; i < n; ++i) s += pow(q, i);
  return s;
}

/// The nested q-continued fraction evaluated numerically at q:
/// [a1]_q + q^a1 / ([a2]_{q^-1} + q^-a2 / ([a3]_q + ...)).
inline Rat q_cf_at(const std::vector<std::int64_t>& a, const Rat& q) {
  auto level = [&](std::size_t i) { return i % 2 == 0 ? q_int_at(a[i], q) : q_int_at(a[i], Rat(1) / q); };
  Rat v = level(a.size() - 1);
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    v = level(i) + pow(q, i % 2 == 0 ? a[i] : -a[i]) / v;
  }
  return v;
}

/// Determinant at a point by Gaussian elimination over Q.
inline Rat det_at(const std::vector<std::vector<LaurentPoly>>& m, const Rat& q) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = eval(m[i][j], q);
  }
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

/// Weighted perfect matchings as the permanent of the black/white weighted
/// biadjacency matrix, expanded along rows. Independent of vertex numbering
/// and of the backtracking enumerator.
inline LaurentPoly permanent_stat(const SnakeGraph& g) {
  std::vector<Point> black, white;
  for (const Point p : g.vertices()) (color_of(p) == Color::kBlack ? black : white).push_back(p);
  if (black.size() != white.size()) return {};
  const std::size_t n = black.size();
  std::map<Point, std::size_t> wi;
  for (std::size_t j = 0; j < n; ++j) wi[white[j]] = j;
  std::map<Point, std::size_t> bi;
  for (std::size_t i = 0; i < n; ++i) bi[black[i]] = i;
  std::vector<std::vector<std::pair<std::size_t, int>>> rows(n);
  for (const SnakeEdge& e : g.edges()) {
    const bool a_black = color_of(e.edge.a) == Color::kBlack;
    const Point b = a_black ? e.edge.a : e.edge.b;
    const Point w = a_black ? e.edge.b : e.edge.a;
    rows[bi[b]].emplace_back(wi[w], e.weight_exp);
  }
  std::map<std::pair<std::size_t, std::uint64_t>, LaurentPoly> memo;
  std::function<LaurentPoly(std::size_t, std::uint64_t)> perm = [&](std::size_t i, std::uint64_t used) {
    if (i == n) return LaurentPoly::one();
    auto key = std::pair{i, used};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    LaurentPoly total;
    for (const auto& [j, e] : rows[i]) {
      if (used & (std::uint64_t{1} << j)) continue;
      total += perm(i + 1, used | (std::uint64_t{1} << j)).shifted(e);
    }
    memo[key] = total;
    return total;
  };
  if (n > 63) throw std::invalid_argument("permanent oracle limited to 63 rows");
  return perm(0, 0);
}

/// Coprime pairs with 1 <= s < r <= max_r, written out independently.
inline std::vector<std::pair<int, int>> pairs_up_to(int max_r) {
  std::vector<std::pair<int, int>> out;
  for (int r = 2; r <= max_r; ++r) {
    for (int s = 1; s < r; ++s) {
      int a = r, b = s;
      while (b != 0) {
        const int t = a % b;
        a = b;
        b = t;
      }
      if (a == 1) out.emplace_back(r, s);
    }
  }
  return out;
}

}  // namespace qsnake::testing
