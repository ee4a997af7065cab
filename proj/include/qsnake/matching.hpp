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

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsnake/laurent.hpp"
#include "qsnake/qrational.hpp"
#include "qsnake/snake.hpp"

namespace qsnake {

/// A perfect matching as a sorted list of edges.
struct Matching {
  std::vector<Edge> edges;
  int weight_exp = 0;  // the weight is the monomial q^weight_exp

  LaurentPoly weight() const { return LaurentPoly::q(weight_exp); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Every perfect matching of g, by backtracking that always covers the
/// lexicographically lowest uncovered vertex first.
inline std::vector<Matching> enumerate_matchings(const SnakeGraph& g) {
  std::vector<Matching> out;
  const auto& verts = g.vertices();
  if (verts.size() % 2 != 0) return out;

  std::map<Point, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
  // adjacency[v] = (neighbor index, edge index), neighbors ascending
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(verts.size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edges()[e].edge;
    const std::size_t a = index[ed.a], b = index[ed.b];
    adjacency[a].emplace_back(b, e);
    adjacency[b].emplace_back(a, e);
  }
  for (auto& nb : adjacency) std::sort(nb.begin(), nb.end());

  std::vector<bool> covered(verts.size(), false);
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> recurse = [&](std::size_t from) {
    while (from < verts.size() && covered[from]) ++from;
    if (from == verts.size()) {
      Matching m;
      for (std::size_t e : chosen) {
        m.edges.push_back(g.edges()[e].edge);
        m.weight_exp += g.edges()[e].weight_exp;
      }
      std::sort(m.edges.begin(), m.edges.end());
      out.push_back(std::move(m));
      return;
    }
    covered[from] = true;
    for (const auto& [nb, e] : adjacency[from]) {
      if (covered[nb]) continue;
      covered[nb] = true;
      chosen.push_back(e);
      recurse(from + 1);
      chosen.pop_back();
      covered[nb] = false;
    }
    covered[from] = false;
  };
  recurse(0);
  return out;
}

inline LaurentPoly matching_weight(const Matching& m) { return m.weight(); }

/// Weighted matching count by exhaustive enumeration (the oracle).
inline LaurentPoly matching_stat(const SnakeGraph& g) {
  LaurentPoly total;
  for (const Matching& m : enumerate_matchings(g)) total += m.weight();
  return total;
}

/// Weighted matching count by a transfer pass along the box path.
///
/// Keeps A, the statistic of the snake built so far, and B, the statistic of
/// that snake with both ends of the edge shared with the next box removed.
/// A new box with entry edge (x, y) adds the edges f1 at x, f2 at y and g
/// opposite the entry, so A' = A w(g) + B w(f1) w(f2).
inline LaurentPoly matching_stat_dp(const SnakeGraph& g) {
  const auto& cells = g.path().cells;
  if (cells.empty()) {
    return g.edges().empty() ? LaurentPoly::one() : g.edges().front().weight();
  }
  auto w = [&](Point p, Point r) { return g.weight(Edge::between(p, r)); };

  const Point c0 = cells.front();
  LaurentPoly a = w(c0, {c0.x + 1, c0.y});
  LaurentPoly b = LaurentPoly::one();
  bool from_south = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Point c = cells[i];
    const Point sw = c, se{c.x + 1, c.y}, nw{c.x, c.y + 1}, ne{c.x + 1, c.y + 1};
    const LaurentPoly f1 = from_south ? w(sw, nw) : w(sw, se);
    const LaurentPoly f2 = from_south ? w(se, ne) : w(nw, ne);
    const LaurentPoly opp = from_south ? w(nw, ne) : w(se, ne);
    LaurentPoly next_a = a * opp + b * f1 * f2;
    if (i + 1 < cells.size()) {
      const bool up = g.path().goes_up_into(i + 1);
      // Leaving through the side opposite the entry shares g, otherwise f2.
      const bool shares_opposite = from_south == up;
      b = shares_opposite ? a : b * f1;
      from_south = up;
    }
    a = std::move(next_a);
  }
  return a;
}

/// The exponent n with R(q) = q^n M_q(G): on the even form [a1, ..., a_2m]
/// it is a2 + a4 + ... + a_2m - 1.
inline std::int64_t scalar_exponent(const ContinuedFraction& cf) {
  const ContinuedFraction even = cf_even_form(cf);
  std::int64_t n = -1;
  for (std::size_t i = 1; i < even.size(); i += 2) n += even[i];
  return n;
}

inline LaurentPoly numerator_via_matchings(std::int64_t r, std::int64_t s) {
  const ContinuedFraction cf = cf_expand(r, s);
  return matching_stat_dp(make_snake(cf)).shifted(static_cast<int>(scalar_exponent(cf)));
}

/// How the matching candidate for the denominator relates to S(q).
enum class DenominatorRelation { kEqual, kShift, kMirror, kUnrelated };

inline std::string to_string(DenominatorRelation r) {
  switch (r) {
    case DenominatorRelation::kEqual: return "equal";
    case DenominatorRelation::kShift: return "shift";
    case DenominatorRelation::kMirror: return "mirror";
    case DenominatorRelation::kUnrelated: return "unrelated";
  }
  return "unrelated";
}

struct DenominatorReport {
  LaurentPoly candidate;  // q^n' M_q(G_[a2..ak]); 1 for integers
  LaurentPoly expected;   // S(q) from the matrix route
  bool integer = false;
  bool count_ok = false;  // candidate(1) == s
  DenominatorRelation relation = DenominatorRelation::kUnrelated;
};

inline DenominatorRelation classify_denominator(const LaurentPoly& cand, const LaurentPoly& s) {
  if (cand == s) return DenominatorRelation::kEqual;
  if (cand.is_zero() || s.is_zero()) return DenominatorRelation::kUnrelated;
  if (cand.shifted(s.min_deg() - cand.min_deg()) == s) return DenominatorRelation::kShift;
  if (mirror(cand, s.min_deg() + cand.max_deg()) == s) return DenominatorRelation::kMirror;
  return DenominatorRelation::kUnrelated;
}

inline DenominatorReport denominator_report(std::int64_t r, std::int64_t s) {
  const ContinuedFraction cf = cf_expand(r, s);
  DenominatorReport out;
  out.expected = q_rational(r, s).den;
  if (cf.size() < 2) {
    out.integer = true;
    out.candidate = LaurentPoly::one();
  } else {
    const ContinuedFraction rest = cf.tail();
    out.candidate = matching_stat_dp(make_snake(rest)).shifted(static_cast<int>(scalar_exponent(rest)));
  }
  out.count_ok = eval_at_one(out.candidate) == Integer(s);
  out.relation = classify_denominator(out.candidate, out.expected);
  return out;
}

/// q^n' M_q(G_[a2..ak]); 1 when r/s is an integer.
inline LaurentPoly denominator_via_matchings(std::int64_t r, std::int64_t s) {
  return denominator_report(r, s).candidate;
}

/// Statistic of the snake of an arbitrary term list; zero terms are allowed
/// and the empty list gives the empty graph.
inline LaurentPoly snake_stat(const ContinuedFraction& cf) {
  return matching_stat_dp(assign_weights(build_snake(cf)));
}

/// One side of a case recurrence M(G) = M(G') + q^e M(G~).
struct CaseRecurrence {
  bool applicable = false;
  int case_number = 0;  // 1 for an even number of terms, 2 for odd
  ContinuedFraction shorter;  // G'
  ContinuedFraction tilde;    // G~
  std::int64_t exponent = 0;
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool holds = false;
};

namespace detail {

inline CaseRecurrence finish_case(const ContinuedFraction& cf, ContinuedFraction shorter,
                                  ContinuedFraction tilde, std::int64_t exponent) {
  CaseRecurrence out;
  out.applicable = true;
  out.case_number = cf.size() % 2 == 0 ? 1 : 2;
  out.lhs = snake_stat(cf);
  out.rhs = snake_stat(shorter) + snake_stat(tilde).shifted(static_cast<int>(exponent));
  out.shorter = std::move(shorter);
  out.tilde = std::move(tilde);
  out.exponent = exponent;
  out.holds = out.lhs == out.rhs;
  return out;
}

inline ContinuedFraction last_decremented(const ContinuedFraction& cf) {
  std::vector<std::int64_t> t = cf.terms();
  t.back() -= 1;
  return ContinuedFraction(std::move(t));
}

}  // namespace detail

/// Removing the last box of G_[a1..ak] leaves G' = G_[a1..ak - 1]. The
/// matchings using the exposed edge of that box leave G~ = G_[a1..a_(k-1)],
/// with q^(1 - ak) when k is even and q^(ak - 1) when k is odd.
inline CaseRecurrence case_recurrences_check(const ContinuedFraction& cf) {
  if (cf.sum() < 3) return {};
  const std::int64_t ak = cf[cf.size() - 1];
  const std::int64_t e = cf.size() % 2 == 0 ? 1 - ak : ak - 1;
  return detail::finish_case(cf, detail::last_decremented(cf), cf.drop_last(), e);
}

/// The same recurrence with G~ = G_[a1..a_(k-2), a_(k-1) - 1] and the factor
/// q^(-ak) (k even) or q^(ak) (k odd). Kept to document that this reading
/// does not hold.
inline CaseRecurrence case_recurrences_literal(const ContinuedFraction& cf) {
  if (cf.sum() < 3) return {};
  const std::int64_t ak = cf[cf.size() - 1];
  std::vector<std::int64_t> t;
  if (cf.size() >= 2) t = detail::last_decremented(cf.drop_last()).terms();
  // [..., x, 0] has the value of [...] with x dropped.
  while (!t.empty() && t.back() == 0) t.resize(t.size() >= 2 ? t.size() - 2 : 0);
  ContinuedFraction tilde(std::move(t));
  const std::int64_t e = cf.size() % 2 == 0 ? -ak : ak;
  return detail::finish_case(cf, detail::last_decremented(cf), std::move(tilde), e);
}

}  // namespace qsnake
