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
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsnake/laurent.hpp"
#include "qsnake/qrational.hpp"

namespace qsnake {

struct Point {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Unit lattice edge; endpoints stored in lexicographic order.
struct Edge {
  Point a;
  Point b;

  static Edge between(Point p, Point r) { return p < r ? Edge{p, r} : Edge{r, p}; }
  bool is_vertical() const { return a.x == b.x; }
  bool touches(Point p) const { return a == p || b == p; }
  Point other(Point p) const { return a == p ? b : a; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Sign : std::int8_t { kMinus = -1, kPlus = 1 };
using SignSequence = std::vector<Sign>;

enum class Color : std::uint8_t { kBlack, kWhite };

/// Down-left vertex (0,0) is black; colors alternate along every edge.
inline Color color_of(Point p) { return ((p.x + p.y) % 2 == 0) ? Color::kBlack : Color::kWhite; }

/// Runs of constant sign with lengths a1, a2, ..., starting with minus.
/// A zero term contributes an empty run.
inline SignSequence sign_sequence(const ContinuedFraction& cf) {
  SignSequence out;
  Sign s = Sign::kMinus;
  for (auto a : cf) {
    out.insert(out.end(), static_cast<std::size_t>(a), s);
    s = s == Sign::kMinus ? Sign::kPlus : Sign::kMinus;
  }
  return out;
}

/// Cells of a snake, in attachment order. Each cell is named by its
/// south-west corner.
struct BoxPath {
  std::vector<Point> cells;

  std::size_t size() const { return cells.size(); }
  bool empty() const { return cells.empty(); }
  /// True when cell i sits directly above cell i-1.
  bool goes_up_into(std::size_t i) const { return i > 0 && cells[i].y == cells[i - 1].y + 1; }
  bool goes_right_into(std::size_t i) const { return i > 0 && cells[i].x == cells[i - 1].x + 1; }
  friend bool operator==(const BoxPath&, const BoxPath&) = default;
};

/// Box path realizing a sign sequence.
///
/// The first box carries the first sign on its south edge. Every later sign
/// sits on the edge where the next box is glued: equal consecutive signs
/// turn the snake (right <-> up), a sign change keeps its direction. The
/// final sign only labels the north or east edge of the last box.
inline BoxPath box_path(const SignSequence& signs) {
  BoxPath path;
  if (signs.size() < 2) return path;
  Point cur{0, 0};
  path.cells.push_back(cur);
  bool entered_from_south = true;
  for (std::size_t i = 1; i + 1 < signs.size(); ++i) {
    const bool same = signs[i] == signs[i - 1];
    // Entered from the south: same sign goes right. From the west: same sign goes up.
    const bool go_right = entered_from_south ? same : !same;
    if (go_right) {
      ++cur.x;
    } else {
      ++cur.y;
    }
    entered_from_south = !go_right;
    path.cells.push_back(cur);
  }
  return path;
}

/// Edge of a snake graph with its weight q^weight_exp and orientation.
struct SnakeEdge {
  Edge edge;
  int weight_exp = 0;
  bool colored = false;
  // Arrow from -> to; meaningful once the graph is oriented.
  Point from;
  Point to;

  LaurentPoly weight() const { return LaurentPoly::q(weight_exp); }
  bool black_to_white() const { return color_of(from) == Color::kBlack; }
};

/// Planar bipartite graph glued from unit boxes along a box path.
///
/// Vertices and edges are kept in lexicographic order. A path with no boxes
/// is either the empty graph (empty sign sequence) or the single south edge
/// of a virtual first box (one sign, i.e. the rational 1).
class SnakeGraph {
 public:
  SnakeGraph() = default;

  SnakeGraph(BoxPath path, bool single_edge) : path_(std::move(path)) {
    if (path_.empty()) {
      if (single_edge) add_edge(Edge{{0, 0}, {1, 0}});
    } else {
      for (const Point c : path_.cells) {
        for (const Edge& e : box_edges(c)) add_edge(e);
      }
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    std::sort(edges_.begin(), edges_.end(),
              [](const SnakeEdge& l, const SnakeEdge& r) { return l.edge < r.edge; });
    edges_.erase(std::unique(edges_.begin(), edges_.end(),
                             [](const SnakeEdge& l, const SnakeEdge& r) { return l.edge == r.edge; }),
                 edges_.end());
    for (auto& e : edges_) {
      e.from = e.edge.a;
      e.to = e.edge.b;
    }
  }

  /// South, west, east, north edges of the cell with south-west corner c.
  static std::array<Edge, 4> box_edges(Point c) {
    return {Edge{c, {c.x + 1, c.y}}, Edge{c, {c.x, c.y + 1}},
            Edge{{c.x + 1, c.y}, {c.x + 1, c.y + 1}}, Edge{{c.x, c.y + 1}, {c.x + 1, c.y + 1}}};
  }

  const BoxPath& path() const { return path_; }
  std::size_t box_count() const { return path_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<SnakeEdge>& edges() const { return edges_; }
  bool weighted() const { return weighted_; }
  bool oriented() const { return oriented_; }

  std::optional<std::size_t> find_edge(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const SnakeEdge& l, const Edge& r) { return l.edge < r; });
    if (it == edges_.end() || !(it->edge == e)) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  const SnakeEdge& edge(const Edge& e) const {
    auto idx = find_edge(e);
    if (!idx) throw std::out_of_range("edge not in snake graph");
    return edges_[*idx];
  }

  LaurentPoly weight(const Edge& e) const { return edge(e).weight(); }

  std::size_t count(Color c) const {
    return static_cast<std::size_t>(std::count_if(
        vertices_.begin(), vertices_.end(), [c](Point p) { return color_of(p) == c; }));
  }

  // Mutators used by assign_weights / orient_kasteleyn.
  SnakeEdge& mutable_edge(const Edge& e) {
    auto idx = find_edge(e);
    if (!idx) throw std::out_of_range("edge not in snake graph");
    return edges_[*idx];
  }
  std::vector<SnakeEdge>& mutable_edges() { return edges_; }
  void mark_weighted() { weighted_ = true; }
  void mark_oriented() { oriented_ = true; }

 private:
  void add_edge(const Edge& e) {
    edges_.push_back(SnakeEdge{e, 0, false, e.a, e.b});
    vertices_.push_back(e.a);
    vertices_.push_back(e.b);
  }

  BoxPath path_;
  std::vector<Point> vertices_;
  std::vector<SnakeEdge> edges_;
  bool weighted_ = false;
  bool oriented_ = false;
};

/// Unweighted skeleton of the snake graph of a continued fraction.
inline SnakeGraph build_snake(const ContinuedFraction& cf) {
  const SignSequence signs = sign_sequence(cf);
  return SnakeGraph(box_path(signs), signs.size() == 1);
}

/// Weight of an exposed west edge starting at (x, y).
inline int west_weight_exp(Point p) { return (p.x + p.y) % 2 == 0 ? 1 : -1; }

/// Weight of an exposed south edge starting at (x, y); the first column is uncolored.
inline int south_weight_exp(Point p) {
  if (p.x == 0) return 0;
  return (p.x + p.y) % 2 != 0 ? 1 : -1;
}

/// Colors the western and southern border from the two-colored grid:
/// blue (weight q) and red (weight q^-1). Every other edge has weight 1.
inline SnakeGraph assign_weights(SnakeGraph g) {
  for (auto& e : g.mutable_edges()) {
    e.weight_exp = 0;
    e.colored = false;
  }
  const auto& cells = g.path().cells;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Point c = cells[i];
    if (i == 0 || g.path().goes_up_into(i)) {
      SnakeEdge& west = g.mutable_edge(Edge{c, {c.x, c.y + 1}});
      west.weight_exp = west_weight_exp(c);
      west.colored = west.weight_exp != 0;
    }
    if (i == 0 || g.path().goes_right_into(i)) {
      SnakeEdge& south = g.mutable_edge(Edge{c, {c.x + 1, c.y}});
      south.weight_exp = south_weight_exp(c);
      south.colored = south.weight_exp != 0;
    }
  }
  g.mark_weighted();
  return g;
}

/// Colored edges point black -> white, uncolored ones white -> black.
inline SnakeGraph orient_kasteleyn(SnakeGraph g) {
  if (!g.weighted()) throw std::logic_error("orient_kasteleyn needs a weighted snake");
  for (auto& e : g.mutable_edges()) {
    const bool a_black = color_of(e.edge.a) == Color::kBlack;
    const Point black = a_black ? e.edge.a : e.edge.b;
    const Point white = a_black ? e.edge.b : e.edge.a;
    e.from = e.colored ? black : white;
    e.to = e.colored ? white : black;
  }
  g.mark_oriented();
  return g;
}

/// Weighted, oriented snake graph of a continued fraction.
inline SnakeGraph make_snake(const ContinuedFraction& cf) {
  return orient_kasteleyn(assign_weights(build_snake(cf)));
}

inline SnakeGraph make_snake(std::int64_t r, std::int64_t s) { return make_snake(cf_expand(r, s)); }

/// Snake of [a2, ..., ak]; the denominator of a non-integer rational.
inline SnakeGraph denominator_snake(const ContinuedFraction& cf) {
  if (cf.size() < 2) throw std::invalid_argument("denominator snake of an integer is empty");
  return make_snake(cf.tail());
}

/// Number of edges of box c with weight other than 1.
inline int colored_edges_in_box(const SnakeGraph& g, Point c) {
  int n = 0;
  for (const Edge& e : SnakeGraph::box_edges(c)) n += g.edge(e).weight_exp != 0 ? 1 : 0;
  return n;
}

/// Number of black -> white arrows around box c.
inline int black_to_white_in_box(const SnakeGraph& g, Point c) {
  int n = 0;
  for (const Edge& e : SnakeGraph::box_edges(c)) n += g.edge(e).black_to_white() ? 1 : 0;
  return n;
}

/// Every face has an odd number of black -> white arrows.
inline bool kasteleyn_faces_ok(const SnakeGraph& g) {
  if (!g.oriented()) return false;
  return std::all_of(g.path().cells.begin(), g.path().cells.end(),
                     [&](Point c) { return black_to_white_in_box(g, c) % 2 == 1; });
}

}  // namespace qsnake
