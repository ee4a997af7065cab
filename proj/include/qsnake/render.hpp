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
#include <sstream>
#include <string>
#include <vector>

#include "qsnake/snake.hpp"

namespace qsnake {

/// "q" for weight q, "q^-1" for weight q^-1, empty for 1.
inline std::string weight_label(int exp) {
  if (exp == 0) return "";
  if (exp == 1) return "q";
  return "q^" + std::to_string(exp);
}

/// "blue" for q, "red" for q^-1, "none" otherwise.
inline std::string weight_color(int exp) {
  if (exp > 0) return "blue";
  if (exp < 0) return "red";
  return "none";
}

namespace detail {

struct Extent {
  int max_x = 0;
  int max_y = 0;
};

inline Extent extent(const SnakeGraph& g) {
  Extent e;
  for (const Point p : g.vertices()) {
    e.max_x = std::max(e.max_x, p.x);
    e.max_y = std::max(e.max_y, p.y);
  }
  return e;
}

}  // namespace detail

/// Text drawing. Vertices are '+', a unit step is six columns wide and two
/// rows tall, and weighted edges carry their label ("q" or "q^-1").
inline std::string render_ascii(const SnakeGraph& g) {
  if (g.edges().empty()) return "(empty snake)\n";
  constexpr int kCell = 6;
  constexpr int kMargin = 5;  // room for labels left of x = 0
  const detail::Extent ext = detail::extent(g);
  const int width = kMargin + ext.max_x * kCell + 1;
  const int height = ext.max_y * 2 + 1;
  std::vector<std::string> canvas(static_cast<std::size_t>(height), std::string(width, ' '));
  auto col = [&](int x) { return kMargin + x * kCell; };
  auto row = [&](int y) { return (ext.max_y - y) * 2; };

  for (const SnakeEdge& e : g.edges()) {
    const std::string label = weight_label(e.weight_exp);
    if (e.edge.is_vertical()) {
      auto& line = canvas[static_cast<std::size_t>(row(e.edge.a.y) - 1)];
      const int c = col(e.edge.a.x);
      line[static_cast<std::size_t>(c)] = '|';
      for (std::size_t i = 0; i < label.size(); ++i) {
        line[static_cast<std::size_t>(c) - label.size() + i] = label[i];
      }
    } else {
      std::string seg(kCell - 1, '-');
      if (!label.empty()) {
        const std::size_t at = (seg.size() - label.size() + 1) / 2;
        seg.replace(at, label.size(), label);
      }
      canvas[static_cast<std::size_t>(row(e.edge.a.y))].replace(
          static_cast<std::size_t>(col(e.edge.a.x) + 1), seg.size(), seg);
    }
  }
  for (const Point p : g.vertices()) {
    canvas[static_cast<std::size_t>(row(p.y))][static_cast<std::size_t>(col(p.x))] = '+';
  }
  std::string out;
  for (auto& line : canvas) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  return out;
}

/// Standalone SVG: weighted edges thick blue (q) or red (q^-1), vertices
/// filled by their bipartite color.
inline std::string render_svg(const SnakeGraph& g) {
  constexpr int kUnit = 60;
  constexpr int kPad = 40;
  const detail::Extent ext = detail::extent(g);
  const int w = ext.max_x * kUnit + 2 * kPad;
  const int h = ext.max_y * kUnit + 2 * kPad;
  auto px = [&](int x) { return kPad + x * kUnit; };
  auto py = [&](int y) { return kPad + (ext.max_y - y) * kUnit; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const SnakeEdge& e : g.edges()) {
    const bool weighted = e.weight_exp != 0;
    os << "  <line x1=\"" << px(e.edge.a.x) << "\" y1=\"" << py(e.edge.a.y) << "\" x2=\""
       << px(e.edge.b.x) << "\" y2=\"" << py(e.edge.b.y) << "\" stroke=\""
       << (weighted ? weight_color(e.weight_exp) : "black") << "\" stroke-width=\""
       << (weighted ? 5 : 1.5) << "\"/>\n";
    if (!weighted) continue;
    const std::string label = e.weight_exp == 1 ? "q" : "q\u207B\u00B9";
    const double mx = (px(e.edge.a.x) + px(e.edge.b.x)) / 2.0;
    const double my = (py(e.edge.a.y) + py(e.edge.b.y)) / 2.0;
    if (e.edge.is_vertical()) {
      os << "  <text x=\"" << mx - 8 << "\" y=\"" << my + 5
         << "\" font-family=\"serif\" font-size=\"16\" text-anchor=\"end\">" << label << "</text>\n";
    } else {
      os << "  <text x=\"" << mx << "\" y=\"" << my + 22
         << "\" font-family=\"serif\" font-size=\"16\" text-anchor=\"middle\">" << label
         << "</text>\n";
    }
  }
  for (const Point p : g.vertices()) {
    os << "  <circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"5\" fill=\""
       << (color_of(p) == Color::kBlack ? "black" : "white") << "\" stroke=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

/// TikZ picture in the style of the weighted snake figures: thick colored
/// edges with their weight as a node label, thin black edges otherwise.
inline std::string render_tikz(const SnakeGraph& g) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=0.8]\n";
  for (const SnakeEdge& e : g.edges()) {
    const Point a = e.edge.a, b = e.edge.b;
    if (e.weight_exp == 0) {
      os << "  \\draw[line width=0.7pt] (" << a.x << ',' << a.y << ")-- (" << b.x << ',' << b.y
         << ");\n";
      continue;
    }
    const std::string label = e.weight_exp == 1 ? "q" : "q^{-1}";
    os << "  \\draw[line width=2pt," << weight_color(e.weight_exp) << "] (" << a.x << ',' << a.y
       << ")-- node[" << (e.edge.is_vertical() ? "left" : "below") << "]{$" << label << "$}("
       << b.x << ',' << b.y << ");\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace qsnake
