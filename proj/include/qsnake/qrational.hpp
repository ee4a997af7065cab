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
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsnake/laurent.hpp"

namespace qsnake {

/// Finite continued fraction [a1, a2, ..., ak].
///
/// Any non-negative terms are accepted; a zero term merges its neighbours
/// (useful for intermediate expansions). The canonical expansion of r/s >= 1
/// has a1 >= 1, a_i >= 1 and a_k >= 2 when k >= 2.
class ContinuedFraction {
 public:
  ContinuedFraction() = default;
  ContinuedFraction(std::initializer_list<std::int64_t> terms) : terms_(terms) { validate(); }
  explicit ContinuedFraction(std::vector<std::int64_t> terms) : terms_(std::move(terms)) {
    validate();
  }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::int64_t operator[](std::size_t i) const { return terms_[i]; }
  const std::vector<std::int64_t>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  std::int64_t sum() const { return std::accumulate(terms_.begin(), terms_.end(), std::int64_t{0}); }

  bool is_canonical() const {
    if (terms_.empty()) return false;
    for (auto a : terms_) {
      if (a < 1) return false;
    }
    return terms_.size() == 1 || terms_.back() >= 2;
  }

  /// [a2, ..., ak].
  ContinuedFraction tail() const {
    if (terms_.empty()) return {};
    return ContinuedFraction(std::vector<std::int64_t>(terms_.begin() + 1, terms_.end()));
  }

  /// [a1, ..., a_{k-1}].
  ContinuedFraction drop_last() const {
    if (terms_.empty()) return {};
    return ContinuedFraction(std::vector<std::int64_t>(terms_.begin(), terms_.end() - 1));
  }

  /// Classical value as a reduced pair (numerator, denominator), computed
  /// with the ordinary continuant recurrence.
  std::pair<std::int64_t, std::int64_t> value() const {
    std::int64_t p0 = 1, p1 = 0;  // p_{-1}, p_{-2}
    std::int64_t q0 = 0, q1 = 1;
    for (auto a : terms_) {
      const std::int64_t p = a * p0 + p1;
      const std::int64_t q = a * q0 + q1;
      p1 = p0;
      p0 = p;
      q1 = q0;
      q0 = q;
    }
    return {p0, q0};
  }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  void validate() const {
    for (auto a : terms_) {
      if (a < 0) throw std::invalid_argument("continued fraction terms must be non-negative");
    }
  }

  std::vector<std::int64_t> terms_;
};

inline std::string to_string(const ContinuedFraction& cf) {
  std::string s = "[";
  for (std::size_t i = 0; i < cf.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cf[i]);
  }
  return s + "]";
}

inline std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf) {
  return os << to_string(cf);
}

/// Euclidean algorithm on (r, s); requires gcd(r, s) = 1 and r >= s >= 1.
inline ContinuedFraction cf_expand(std::int64_t r, std::int64_t s) {
  if (s < 1 || r < s) throw std::invalid_argument("cf_expand requires r >= s >= 1");
  if (std::gcd(r, s) != 1) throw std::invalid_argument("cf_expand requires coprime r and s");
  std::vector<std::int64_t> terms;
  while (s != 0) {
    terms.push_back(r / s);
    r %= s;
    std::swap(r, s);
  }
  return ContinuedFraction(std::move(terms));
}

namespace detail {

inline ContinuedFraction toggle_parity(const ContinuedFraction& cf) {
  std::vector<std::int64_t> t = cf.terms();
  if (t.size() >= 2 && t.back() == 1) {
    t.pop_back();
    t.back() += 1;
  } else {
    t.back() -= 1;
    t.push_back(1);
  }
  return ContinuedFraction(std::move(t));
}

}  // namespace detail

/// Equivalent expansion with an even number of terms, using
/// [..., a_k] = [..., a_k - 1, 1]. For an integer [n] this gives [n-1, 1].
inline ContinuedFraction cf_even_form(const ContinuedFraction& cf) {
  if (cf.empty()) throw std::invalid_argument("empty continued fraction");
  return cf.size() % 2 == 0 ? cf : detail::toggle_parity(cf);
}

inline ContinuedFraction cf_odd_form(const ContinuedFraction& cf) {
  if (cf.empty()) throw std::invalid_argument("empty continued fraction");
  return cf.size() % 2 == 1 ? cf : detail::toggle_parity(cf);
}

/// [n]_q = 1 + q + ... + q^(n-1), or the same in q^-1 when inverted.
inline LaurentPoly q_int(std::int64_t n, bool inverted = false) {
  if (n < 0) throw std::invalid_argument("q_int requires n >= 0");
  if (n == 0) return {};
  std::vector<Integer> ones(static_cast<std::size_t>(n), Integer(1));
  return LaurentPoly(inverted ? static_cast<int>(1 - n) : 0, std::move(ones));
}

/// [r/s]_q = R(q) / S(q).
struct QRational {
  LaurentPoly num;
  LaurentPoly den;

  friend bool operator==(const QRational&, const QRational&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const QRational& x) {
  return os << "(" << to_string(x.num) << ")/(" << to_string(x.den) << ")";
}

inline QRational to_qrational(const LaurentFraction& f) { return {f.num(), f.den()}; }

/// 2x2 matrix over Z[q, q^-1].
struct QMatrix {
  LaurentPoly a, b, c, d;

  static QMatrix identity() { return {LaurentPoly::one(), {}, {}, LaurentPoly::one()}; }
  /// R_q = [[q, 1], [0, 1]].
  static QMatrix right() { return {LaurentPoly::q(), LaurentPoly::one(), {}, LaurentPoly::one()}; }
  /// L_q = [[q, 0], [q, 1]].
  static QMatrix left() { return {LaurentPoly::q(), {}, LaurentPoly::q(), LaurentPoly::one()}; }

  LaurentPoly det() const { return a * d - b * c; }

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const QMatrix&, const QMatrix&) = default;
};

inline QMatrix power(QMatrix m, std::int64_t e) {
  QMatrix acc = QMatrix::identity();
  while (e > 0) {
    if (e & 1) acc = acc * m;
    m = m * m;
    e >>= 1;
  }
  return acc;
}

/// R_q^{a1} L_q^{a2} R_q^{a3} ... over all terms.
inline QMatrix cf_matrix(const ContinuedFraction& cf) {
  QMatrix m = QMatrix::identity();
  for (std::size_t i = 0; i < cf.size(); ++i) {
    m = m * power(i % 2 == 0 ? QMatrix::right() : QMatrix::left(), cf[i]);
  }
  return m;
}

/// Nested q-continued fraction evaluated bottom-up in the fraction field.
/// Odd positions use [a]_q with numerator q^a, even positions use
/// [a]_{q^-1} with numerator q^-a.
inline QRational q_cf_eval(const ContinuedFraction& cf) {
  if (cf.empty()) throw std::invalid_argument("empty continued fraction");
  const std::size_t k = cf.size();
  auto level = [&](std::size_t i) { return LaurentFraction(q_int(cf[i], i % 2 == 1)); };
  LaurentFraction value = level(k - 1);
  for (std::size_t i = k - 1; i-- > 0;) {
    const int e = static_cast<int>(cf[i]);
    const LaurentFraction numerator(LaurentPoly::q(i % 2 == 0 ? e : -e));
    value = level(i) + numerator / value;
  }
  return to_qrational(value);
}

/// Matrix route: for even k the first column of the product is (qR, qS);
/// for odd k the second column is (R, S).
inline QRational q_matrix_eval(const ContinuedFraction& cf) {
  if (cf.empty()) throw std::invalid_argument("empty continued fraction");
  const QMatrix m = cf_matrix(cf);
  if (cf.size() % 2 == 0) {
    const LaurentPoly q = LaurentPoly::q();
    return {div_exact(m.a, q), div_exact(m.c, q)};
  }
  return {m.b, m.d};
}

/// Determinant of the tridiagonal q-continuant: diagonal [a1]_q,
/// [a2]_{q^-1}, [a3]_q, ...; superdiagonal -1; subdiagonal q^{a1}, q^{-a2},
/// q^{a3}, .... This Laurent polynomial equals q^-n R(q) for the scalar n of
/// the snake statistic.
inline LaurentPoly q_continuant_raw(const ContinuedFraction& cf) {
  LaurentPoly prev2;                       // K_{-2} = 0
  LaurentPoly prev1 = LaurentPoly::one();  // K_{-1} = 1, the empty prefix
  for (std::size_t i = 0; i < cf.size(); ++i) {
    const LaurentPoly diag = q_int(cf[i], i % 2 == 1);
    LaurentPoly cur;
    if (i == 0) {
      cur = diag * prev1;
    } else {
      const int e = static_cast<int>(cf[i - 1]);
      const LaurentPoly sub = LaurentPoly::q((i - 1) % 2 == 0 ? e : -e);
      cur = diag * prev1 + sub * prev2;
    }
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

/// Numerator R(q) from the continuant, normalized to min_deg 0.
inline LaurentPoly q_continuant(const ContinuedFraction& cf) {
  LaurentPoly k = q_continuant_raw(cf);
  return k.shifted(-k.min_deg());
}

/// Canonical [r/s]_q for coprime r >= s >= 1, by the matrix route.
inline QRational q_rational(std::int64_t r, std::int64_t s) {
  const ContinuedFraction cf = cf_expand(r, s);
  QRational out = q_matrix_eval(cf);
#ifndef NDEBUG
  if (!(q_cf_eval(cf) == out) || !(q_continuant(cf) == out.num)) {
    throw std::logic_error("q-rational routes disagree for " + to_string(cf));
  }
#endif
  return out;
}

/// A rational number p/d with d >= 0; d == 0 denotes infinity.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t n, std::int64_t d) {
    if (n == 0 && d == 0) throw std::invalid_argument("0/0 is not a rational");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n, d);
    if (d == 0) return {1, 0};
    return {n / g, d / g};
  }
};

namespace detail {

// Projective pair (top, bottom) representing top/bottom.
struct Projective {
  LaurentPoly top;
  LaurentPoly bottom;
};

// x -> x + n, via [x + n]_q = q^n [x]_q + [n]_q (and its inverse for n < 0).
inline Projective translate(const Projective& v, std::int64_t n) {
  if (n >= 0) {
    return {v.top.shifted(static_cast<int>(n)) + q_int(n) * v.bottom, v.bottom};
  }
  const std::int64_t m = -n;
  return {v.top - q_int(m) * v.bottom, v.bottom.shifted(static_cast<int>(m))};
}

// x -> -1/x, via [-1/x]_q = -1 / (q [x]_q).
inline Projective invert(const Projective& v) { return {-v.bottom, v.top.shifted(1)}; }

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Projective map_general(std::int64_t p, std::int64_t d) {
  if (d == 0) return {LaurentPoly::one(), {}};
  const std::int64_t n = floor_div(p, d);
  const std::int64_t frac = p - n * d;
  Projective v{{}, LaurentPoly::one()};  // [0]_q
  if (frac != 0) {
    // frac/d in (0,1); -1/(frac/d) = -d/frac has a strictly smaller denominator.
    v = invert(map_general(-d, frac));
  }
  return translate(v, n);
}

}  // namespace detail

/// [x]_q for any x in Q or infinity, from [x+1]_q = q[x]_q + 1 and
/// [-1/x]_q = -1/(q[x]_q) with [0]_q = 0.
inline LaurentFraction q_map_general(Rational x) {
  x = Rational::make(x.num, x.den);
  detail::Projective v = detail::map_general(x.num, x.den);
  return LaurentFraction(std::move(v.top), std::move(v.bottom));
}

/// All four routes for a coprime pair r >= s >= 1.
struct RouteComparison {
  ContinuedFraction cf;
  QRational matrix;
  QRational cf_eval;
  LaurentPoly continuant;
  QRational general;
  bool agree = false;
};

inline RouteComparison q_rational_all_routes(std::int64_t r, std::int64_t s) {
  RouteComparison out;
  out.cf = cf_expand(r, s);
  out.matrix = q_matrix_eval(out.cf);
  out.cf_eval = q_cf_eval(out.cf);
  out.continuant = q_continuant(out.cf);
  out.general = to_qrational(q_map_general({r, s}));
  out.agree = out.matrix == out.cf_eval && out.matrix.num == out.continuant &&
              out.matrix == out.general;
  return out;
}

/// q-deformed Fibonacci pair for index n: numerator polynomial F~_n and
/// denominator polynomial F_n, so that [F_{n+1}/F_n]_q = F~_{n+1} / F_n.
struct FibonacciPair {
  LaurentPoly numerator;    // F~_n
  LaurentPoly denominator;  // F_n
};

/// Both sequences for indices 0..n from F_{k+2} = [3]_q F_k - q^2 F_{k-2}.
/// Index 1 is reported as (1, 1), the pair of [F_1/F_0]_q = [infinity]_q
/// and [F_2/F_1]_q; the numerator recurrence is seeded with q^-1 there.
inline std::vector<FibonacciPair> fibonacci_table(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("fibonacci index must be >= 0");
  const std::size_t size = static_cast<std::size_t>(std::max<std::int64_t>(n, 3)) + 1;
  std::vector<LaurentPoly> den(size), num(size);
  den[0] = {};
  den[1] = LaurentPoly::one();
  den[2] = LaurentPoly::one();
  den[3] = q_int(2);
  num[0] = {};
  num[1] = LaurentPoly::q(-1);
  num[2] = LaurentPoly::one();
  num[3] = q_int(2);
  const LaurentPoly three = q_int(3);
  const LaurentPoly q2 = LaurentPoly::q(2);
  for (std::size_t k = 4; k < size; ++k) {
    den[k] = three * den[k - 2] - q2 * den[k - 4];
    num[k] = three * num[k - 2] - q2 * num[k - 4];
  }
  std::vector<FibonacciPair> out;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
    out.push_back({k == 1 ? LaurentPoly::one() : num[k], den[k]});
  }
  return out;
}

inline FibonacciPair fibonacci_polys(std::int64_t n) { return fibonacci_table(n).back(); }

/// Classical Fibonacci numbers with F_0 = 0, F_1 = F_2 = 1.
inline std::int64_t fibonacci_number(std::int64_t n) {
  std::int64_t a = 0, b = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t t = a + b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace qsnake
