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

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsnake/laurent.hpp"
#include "qsnake/matching.hpp"
#include "qsnake/qrational.hpp"
#include "qsnake/snake.hpp"

namespace qsnake {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

struct VertexNumbering {
  std::vector<Point> black;
  std::vector<Point> white;
};

/// Numbers each color class along antidiagonals: by x + y, then by x.
/// Consecutive boxes then couple only nearby indices, so |i - j| <= 2.
inline VertexNumbering number_vertices(const SnakeGraph& g) {
  VertexNumbering out;
  for (const Point p : g.vertices()) {
    (color_of(p) == Color::kBlack ? out.black : out.white).push_back(p);
  }
  auto key = [](Point p) { return std::pair{p.x + p.y, p.x}; };
  auto by_key = [&](Point l, Point r) { return key(l) < key(r); };
  std::sort(out.black.begin(), out.black.end(), by_key);
  std::sort(out.white.begin(), out.white.end(), by_key);
  return out;
}

/// Signed weighted biadjacency matrix; rows are black vertices, columns white.
struct KasteleynMatrix {
  PolyMatrix entries;
  VertexNumbering numbering;

  std::size_t size() const { return entries.size(); }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries[i][j]; }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& row : entries) {
      for (const auto& e : row) n += e.is_zero() ? 0 : 1;
    }
    return n;
  }

  /// Largest |i - j| over nonzero entries.
  std::size_t bandwidth() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      for (std::size_t j = 0; j < entries[i].size(); ++j) {
        if (!entries[i][j].is_zero()) w = std::max(w, i > j ? i - j : j - i);
      }
    }
    return w;
  }
};

/// Entry (i, j) is +wt(e) when e = b_i w_j points black -> white, -wt(e)
/// when it points white -> black, and 0 when b_i and w_j are not adjacent.
inline KasteleynMatrix kasteleyn_matrix(const SnakeGraph& g) {
  if (!g.oriented()) throw std::logic_error("kasteleyn_matrix needs an oriented snake");
  KasteleynMatrix m;
  m.numbering = number_vertices(g);
  const std::size_t nb = m.numbering.black.size();
  const std::size_t nw = m.numbering.white.size();
  if (nb != nw) throw std::logic_error("snake graph is not balanced");
  m.entries.assign(nb, std::vector<LaurentPoly>(nw));
  auto position = [](const std::vector<Point>& order, Point p) {
    return static_cast<std::size_t>(std::find(order.begin(), order.end(), p) - order.begin());
  };
  for (const SnakeEdge& e : g.edges()) {
    const bool a_black = color_of(e.edge.a) == Color::kBlack;
    const std::size_t i = position(m.numbering.black, a_black ? e.edge.a : e.edge.b);
    const std::size_t j = position(m.numbering.white, a_black ? e.edge.b : e.edge.a);
    m.entries[i][j] = e.black_to_white() ? e.weight() : -e.weight();
  }
  return m;
}

/// Fraction-free elimination over Z[q]. Each row is first shifted into a
/// polynomial and its monomial factor kept aside. Rows whose pivot-column
/// entry is zero are left alone and caught up only when first needed, since
/// skipping step t just multiplies the row by p_t / p_(t-1).
inline LaurentPoly det_bareiss(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::one();
  int shift = 0;
  for (auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    int lo = 0;
    bool any = false;
    for (const auto& e : row) {
      if (e.is_zero()) continue;
      lo = any ? std::min(lo, e.min_deg()) : e.min_deg();
      any = true;
    }
    if (!any) return {};
    for (auto& e : row) e = e.shifted(-lo);
    shift += lo;
  }

  // pivots[t + 1] is the pivot used at step t; pivots[0] = 1.
  std::vector<LaurentPoly> pivots{LaurentPoly::one()};
  std::vector<std::size_t> current(n, 0);  // row i reflects steps < current[i]
  bool negate = false;

  auto catch_up = [&](std::size_t i, std::size_t k) {
    if (current[i] == k) return;
    for (std::size_t j = k; j < n; ++j) {
      if (!m[i][j].is_zero()) m[i][j] = div_exact(m[i][j] * pivots[k], pivots[current[i]]);
    }
    current[i] = k;
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return {};
    if (p != k) {
      std::swap(m[p], m[k]);
      std::swap(current[p], current[k]);
      negate = !negate;
    }
    catch_up(k, k);
    const LaurentPoly& pivot = m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      catch_up(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = m[i][j] * pivot - m[i][k] * m[k][j];
        m[i][j] = div_exact(v, pivots[k]);
      }
      m[i][k] = LaurentPoly();
      current[i] = k + 1;
    }
    pivots.push_back(pivot);
  }
  LaurentPoly det = m[n - 1][n - 1].shifted(shift);
  return negate ? -det : det;
}

/// Full permutation expansion with zero pruning.
struct PermutationExpansion {
  LaurentPoly det;
  std::size_t terms = 0;
  int positive_terms = 0;
  int negative_terms = 0;

  /// All nonzero terms have the same sign.
  bool coherent() const { return positive_terms == 0 || negative_terms == 0; }
};

inline PermutationExpansion permutation_expansion(const PolyMatrix& m) {
  PermutationExpansion out;
  const std::size_t n = m.size();
  std::vector<bool> used(n, false);
  std::vector<std::size_t> perm(n);
  auto sign_of = [&]() {
    bool odd = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) odd ^= perm[i] > perm[j];
    }
    return odd;
  };
  std::function<void(std::size_t, const LaurentPoly&)> go = [&](std::size_t row,
                                                                const LaurentPoly& acc) {
    if (row == n) {
      const LaurentPoly term = sign_of() ? -acc : acc;
      ++out.terms;
      const bool all_pos = std::all_of(term.coeffs().begin(), term.coeffs().end(),
                                       [](const Integer& c) { return c > 0; });
      const bool all_neg = std::all_of(term.coeffs().begin(), term.coeffs().end(),
                                       [](const Integer& c) { return c < 0; });
      out.positive_terms += all_pos ? 1 : 0;
      out.negative_terms += all_neg ? 1 : 0;
      if (!all_pos && !all_neg) {  // mixed-sign entry: counts against coherence
        ++out.positive_terms;
        ++out.negative_terms;
      }
      out.det += term;
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || m[row][j].is_zero()) continue;
      used[j] = true;
      perm[row] = j;
      go(row + 1, acc * m[row][j]);
      used[j] = false;
    }
  };
  go(0, LaurentPoly::one());
  return out;
}

inline LaurentPoly det_permutation(const PolyMatrix& m) { return permutation_expansion(m).det; }

/// Exact determinant; small matrices are cross-checked by full expansion.
inline LaurentPoly det_exact(const PolyMatrix& m) {
  LaurentPoly d = det_bareiss(m);
  if (m.size() <= 8 && !(d == det_permutation(m))) {
    throw std::logic_error("Bareiss determinant disagrees with permutation expansion");
  }
  return d;
}

inline LaurentPoly det_exact(const KasteleynMatrix& m) { return det_exact(m.entries); }

/// Sign with d = sign * |d|, where |d| has a positive lowest coefficient.
inline int normalized_sign(const LaurentPoly& d) {
  return d.is_zero() || d.lowest_coeff() > 0 ? 1 : -1;
}

struct KasteleynReport {
  std::int64_t r = 0;
  std::int64_t s = 0;
  ContinuedFraction cf;
  KasteleynMatrix matrix;
  LaurentPoly det;        // raw determinant
  LaurentPoly abs_det;    // sign * det
  LaurentPoly statistic;  // M_q(G)
  LaurentPoly numerator;  // R(q)
  int sign = 1;
  std::int64_t n = 0;
  bool det_matches = false;        // |det| == M_q(G)
  bool numerator_matches = false;  // q^n M_q(G) == R(q)
  bool faces_ok = false;

  bool pass() const { return det_matches && numerator_matches && faces_ok; }
};

inline KasteleynReport verify_kasteleyn(std::int64_t r, std::int64_t s) {
  KasteleynReport out;
  out.r = r;
  out.s = s;
  out.cf = cf_expand(r, s);
  const SnakeGraph g = make_snake(out.cf);
  out.matrix = kasteleyn_matrix(g);
  out.det = det_exact(out.matrix);
  out.sign = normalized_sign(out.det);
  out.abs_det = out.sign < 0 ? -out.det : out.det;
  out.statistic = matching_stat_dp(g);
  out.numerator = q_rational(r, s).num;
  out.n = scalar_exponent(out.cf);
  out.det_matches = out.abs_det == out.statistic;
  out.numerator_matches = out.statistic.shifted(static_cast<int>(out.n)) == out.numerator;
  out.faces_ok = kasteleyn_faces_ok(g);
  return out;
}

/// Band matrix of the vertical Fibonacci snake with n - 1 boxes. Odd rows
/// (1-based) read (1, 1, 1) and even rows (-q, 1, -q^-1), truncated at the
/// borders. The rescaled form uses (-q^2, q, -1) for even rows.
inline PolyMatrix fibonacci_band_matrix(std::int64_t n, bool rescaled = false) {
  if (n < 1) throw std::invalid_argument("fibonacci band matrix needs n >= 1");
  const std::size_t size = static_cast<std::size_t>(n);
  PolyMatrix m(size, std::vector<LaurentPoly>(size));
  for (std::size_t i = 0; i < size; ++i) {
    const bool odd_row = i % 2 == 0;
    if (odd_row) {
      m[i][i] = LaurentPoly::one();
      if (i > 0) m[i][i - 1] = LaurentPoly::one();
      if (i + 1 < size) m[i][i + 1] = LaurentPoly::one();
    } else {
      m[i][i] = rescaled ? LaurentPoly::q() : LaurentPoly::one();
      m[i][i - 1] = -LaurentPoly::q(rescaled ? 2 : 1);
      if (i + 1 < size) m[i][i + 1] = rescaled ? -LaurentPoly::one() : -LaurentPoly::q(-1);
    }
  }
  return m;
}

/// Determinant of a tridiagonal matrix by D_i = m_ii D_(i-1) - m_i,i-1 m_i-1,i D_(i-2).
inline LaurentPoly tridiagonal_det(const PolyMatrix& m) {
  LaurentPoly prev2;
  LaurentPoly prev1 = LaurentPoly::one();
  for (std::size_t i = 0; i < m.size(); ++i) {
    LaurentPoly cur = m[i][i] * prev1;
    if (i > 0) cur -= m[i][i - 1] * m[i - 1][i] * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

/// M_q of the vertical Fibonacci snake with n - 1 boxes.
inline LaurentPoly fibonacci_kasteleyn(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("fibonacci_kasteleyn needs n >= 2");
  return tridiagonal_det(fibonacci_band_matrix(n));
}

/// Determinant of the rescaled band matrix: F~_(n+1) for odd n and
/// q F~_(n+1) for even n.
inline LaurentPoly fibonacci_kasteleyn_rescaled(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("fibonacci_kasteleyn needs n >= 2");
  return tridiagonal_det(fibonacci_band_matrix(n, true));
}

/// F~_(n+1), the numerator of [F_(n+1) / F_n]_q, from the band determinant.
inline LaurentPoly fibonacci_numerator_via_kasteleyn(std::int64_t n) {
  const ContinuedFraction cf = cf_expand(fibonacci_number(n + 1), fibonacci_number(n));
  return fibonacci_kasteleyn(n).shifted(static_cast<int>(scalar_exponent(cf)));
}

}  // namespace qsnake
