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

// JSON forms of the library values; docs/formats.md describes the schemas.

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsnake/kasteleyn.hpp"
#include "qsnake/laurent.hpp"
#include "qsnake/matching.hpp"
#include "qsnake/qrational.hpp"
#include "qsnake/render.hpp"
#include "qsnake/snake.hpp"

namespace qsnake {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();  // out of int64 range: decimal string
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

}  // namespace detail

inline void to_json(Json& j, const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(detail::integer_to_json(c));
  j = Json{{"min_deg", p.min_deg()}, {"coeffs", std::move(coeffs)}};
}

inline void from_json(const Json& j, LaurentPoly& p) {
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(detail::integer_from_json(c));
  p = LaurentPoly(j.at("min_deg").get<int>(), std::move(coeffs));
}

inline void to_json(Json& j, const ContinuedFraction& cf) { j = cf.terms(); }

inline void from_json(const Json& j, ContinuedFraction& cf) {
  cf = ContinuedFraction(j.get<std::vector<std::int64_t>>());
}

inline Json point_json(Point p) { return Json::array({p.x, p.y}); }

inline Json qrational_json(std::int64_t r, std::int64_t s, const ContinuedFraction& cf,
                           const QRational& x) {
  return Json{{"r", r}, {"s", s}, {"cf", cf}, {"num", x.num}, {"den", x.den}};
}

inline Json qrational_json(std::int64_t r, std::int64_t s) {
  return qrational_json(r, s, cf_expand(r, s), q_rational(r, s));
}

/// Reads the {"num", "den"} part back.
inline QRational qrational_from_json(const Json& j) {
  return {j.at("num").get<LaurentPoly>(), j.at("den").get<LaurentPoly>()};
}

inline Json snake_json(const ContinuedFraction& cf, const SnakeGraph& g) {
  Json boxes = Json::array();
  for (const Point c : g.path().cells) boxes.push_back(point_json(c));
  Json vertices = Json::array();
  for (const Point p : g.vertices()) {
    vertices.push_back(
        {{"at", point_json(p)}, {"color", color_of(p) == Color::kBlack ? "black" : "white"}});
  }
  Json edges = Json::array();
  for (const SnakeEdge& e : g.edges()) {
    edges.push_back({{"from", point_json(e.from)},
                     {"to", point_json(e.to)},
                     {"weight", e.weight_exp},
                     {"color", weight_color(e.weight_exp)}});
  }
  return Json{{"cf", cf}, {"boxes", std::move(boxes)}, {"vertices", std::move(vertices)},
              {"edges", std::move(edges)}};
}

inline Json edge_json(const Edge& e) { return Json::array({point_json(e.a), point_json(e.b)}); }

inline Json matchings_json(std::int64_t r, std::int64_t s) {
  const ContinuedFraction cf = cf_expand(r, s);
  const SnakeGraph g = make_snake(cf);
  Json list = Json::array();
  for (const Matching& m : enumerate_matchings(g)) {
    Json edges = Json::array();
    for (const Edge& e : m.edges) edges.push_back(edge_json(e));
    list.push_back({{"edges", std::move(edges)}, {"weight", m.weight_exp}});
  }
  const std::int64_t n = scalar_exponent(cf);
  const LaurentPoly stat = matching_stat_dp(g);
  return Json{{"r", r},
              {"s", s},
              {"cf", cf},
              {"count", list.size()},
              {"matchings", std::move(list)},
              {"statistic", stat},
              {"n", n},
              {"numerator", stat.shifted(static_cast<int>(n))}};
}

inline Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json out = Json::array();
    for (const auto& e : row) out.push_back(e);
    rows.push_back(std::move(out));
  }
  return rows;
}

inline PolyMatrix matrix_from_json(const Json& j) {
  PolyMatrix m;
  for (const auto& row : j) {
    std::vector<LaurentPoly> out;
    for (const auto& e : row) out.push_back(e.get<LaurentPoly>());
    m.push_back(std::move(out));
  }
  return m;
}

inline Json kasteleyn_json(const KasteleynReport& rep) {
  Json black = Json::array(), white = Json::array();
  for (const Point p : rep.matrix.numbering.black) black.push_back(point_json(p));
  for (const Point p : rep.matrix.numbering.white) white.push_back(point_json(p));
  return Json{{"r", rep.r},
              {"s", rep.s},
              {"cf", rep.cf},
              {"black", std::move(black)},
              {"white", std::move(white)},
              {"matrix", matrix_json(rep.matrix.entries)},
              {"det", rep.det},
              {"sign", rep.sign},
              {"n", rep.n},
              {"statistic", rep.statistic},
              {"numerator", rep.numerator},
              {"pass", rep.pass()}};
}

}  // namespace qsnake
