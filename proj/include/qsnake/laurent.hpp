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
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsnake {

using Integer = boost::multiprecision::cpp_int;

/// Raised by div_exact when the divisor does not divide the dividend.
class NotDivisibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element of Z[q, q^-1] with arbitrary-precision coefficients.
///
/// Stored densely: coeffs()[i] is the coefficient of q^(min_deg() + i).
/// The representation is always trimmed, so the first and last stored
/// coefficients are nonzero. Zero is the empty sequence with min_deg() == 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  explicit LaurentPoly(Integer constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }

  LaurentPoly(int min_deg, std::vector<Integer> coeffs)
      : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
    trim();
  }

  /// Builds c_0 q^min_deg + c_1 q^(min_deg+1) + ... from small coefficients.
  static LaurentPoly of(int min_deg, std::initializer_list<long long> coeffs) {
    std::vector<Integer> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.emplace_back(v);
    return LaurentPoly(min_deg, std::move(c));
  }

  static LaurentPoly monomial(Integer c, int exponent) {
    std::vector<Integer> v;
    v.push_back(std::move(c));
    return LaurentPoly(exponent, std::move(v));
  }

  static LaurentPoly one() { return LaurentPoly(Integer(1)); }
  static LaurentPoly q(int exponent = 1) { return monomial(Integer(1), exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  int min_deg() const { return min_deg_; }
  /// Highest exponent with a nonzero coefficient; min_deg() - 1 for zero.
  int max_deg() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_span() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Integer coeff(int exponent) const {
    if (is_zero() || exponent < min_deg_ || exponent > max_deg()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - min_deg_)];
  }

  const Integer& lowest_coeff() const { return coeffs_.front(); }
  const Integer& leading_coeff() const { return coeffs_.back(); }

  bool is_monomial() const {
    return !is_zero() &&
           std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Integer& c) { return c == 0; });
  }

  /// q^k * this.
  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.min_deg_ += k;
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    add_scaled(other, 1);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    add_scaled(other, -1);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] != 0) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return LaurentPoly(a.min_deg_ + b.min_deg_, std::move(out));
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const Integer& c) {
    if (c == 0 || a.is_zero()) return {};
    LaurentPoly r = a;
    for (auto& v : r.coeffs_) v *= c;
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_deg_ == b.min_deg_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void add_scaled(const LaurentPoly& other, int sign) {
    if (other.is_zero()) return;
    if (is_zero()) {
      *this = sign > 0 ? other : -other;
      return;
    }
    const int lo = std::min(min_deg_, other.min_deg_);
    const int hi = std::max(max_deg(), other.max_deg());
    std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      out[static_cast<std::size_t>(min_deg_ - lo) + i] = std::move(coeffs_[i]);
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
      auto& slot = out[static_cast<std::size_t>(other.min_deg_ - lo) + i];
      if (sign > 0) {
        slot += other.coeffs_[i];
      } else {
        slot -= other.coeffs_[i];
      }
    }
    min_deg_ = lo;
    coeffs_ = std::move(out);
    trim();
  }

  void trim() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                              [](const Integer& c) { return c != 0; });
    if (first == coeffs_.end()) {
      coeffs_.clear();
      min_deg_ = 0;
      return;
    }
    min_deg_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    while (coeffs_.back() == 0) coeffs_.pop_back();
  }

  int min_deg_ = 0;
  std::vector<Integer> coeffs_;
};

/// q^d * a(q^-1).
inline LaurentPoly mirror(const LaurentPoly& a, int d) {
  if (a.is_zero()) return {};
  std::vector<Integer> rev(a.coeffs().rbegin(), a.coeffs().rend());
  return LaurentPoly(d - a.max_deg(), std::move(rev));
}

/// Coefficient reversal keeping the support: q^(min+max) * a(q^-1).
inline LaurentPoly reversed(const LaurentPoly& a) {
  return mirror(a, a.min_deg() + a.max_deg());
}

inline Integer eval_at_one(const LaurentPoly& a) {
  Integer s = 0;
  for (const auto& c : a.coeffs()) s += c;
  return s;
}

namespace detail {

// Dense polynomial in q (index = exponent), always trimmed of trailing zeros.
using Dense = std::vector<Integer>;

inline void trim_dense(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Integer content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    if (c != 0) g = boost::multiprecision::gcd(g, c);
  }
  return g;
}

inline void make_primitive(Dense& p) {
  const Integer g = content(p);
  if (g > 1) {
    for (auto& c : p) c /= g;
  }
}

// Pseudo-remainder of a by b (b nonzero).
inline Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_dense(a);
  }
  return a;
}

// Exact quotient a / b in Z[q]; throws if b does not divide a.
inline Dense divide_dense(Dense a, const Dense& b) {
  if (b.empty()) throw NotDivisibleError("division by zero polynomial");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw NotDivisibleError("divisor degree exceeds dividend degree");
  Dense quot(a.size() - b.size() + 1);
  const Integer& lb = b.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer& top = a[k + b.size() - 1];
    if (top == 0) continue;
    Integer rem;
    Integer qk;
    boost::multiprecision::divide_qr(top, lb, qk, rem);
    if (rem != 0) throw NotDivisibleError("non-integral quotient coefficient");
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= qk * b[i];
    quot[k] = std::move(qk);
  }
  trim_dense(a);
  if (!a.empty()) throw NotDivisibleError("nonzero remainder");
  trim_dense(quot);
  return quot;
}

}  // namespace detail

/// Exact quotient a / b in Z[q, q^-1].
inline LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw NotDivisibleError("division by zero");
  if (a.is_zero()) return {};
  detail::Dense quot = detail::divide_dense(a.coeffs(), b.coeffs());
  return LaurentPoly(a.min_deg() - b.min_deg(), std::move(quot));
}

/// Greatest common divisor of the polynomial parts of a and b, as a polynomial
/// with min_deg 0 and positive leading coefficient. Monomial factors are units
/// in the Laurent ring and are ignored. gcd(0, 0) is 0.
inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    const LaurentPoly& p = a.is_zero() ? b : a;
    LaurentPoly r = p.shifted(-p.min_deg());
    return r.leading_coeff() < 0 ? -r : r;
  }
  detail::Dense x = a.coeffs();
  detail::Dense y = b.coeffs();
  const Integer cont = boost::multiprecision::gcd(detail::content(x), detail::content(y));
  detail::make_primitive(x);
  detail::make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    detail::Dense r = detail::pseudo_remainder(x, y);
    detail::make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.back() < 0) {
    for (auto& c : x) c = -c;
  }
  for (auto& c : x) c *= cont;
  return LaurentPoly(0, std::move(x));
}

/// Formats terms in ascending exponent order, e.g. "q^-1 + 2 + q + 3q^2".
inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Integer& c = p.coeffs()[i];
    if (c == 0) continue;
    const int e = p.min_deg() + static_cast<int>(i);
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Integer mag = negative ? Integer(-c) : c;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << to_string(p);
}

/// Parses the text form produced by to_string. Also accepts "*" between a
/// coefficient and q, and "q^{-1}"-style braces.
inline LaurentPoly parse_laurent(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*' && ch != '{' && ch != '}') {
      s.push_back(ch);
    }
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  LaurentPoly acc;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    Integer coef = 1;
    const bool has_digits = pos > start;
    if (has_digits) coef = Integer(s.substr(start, pos - start));
    int exponent = 0;
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t estart = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == estart || (pos == estart + 1 && !std::isdigit(static_cast<unsigned char>(s[estart])))) {
          throw std::invalid_argument("malformed exponent in: " + std::string(text));
        }
        exponent = std::stoi(s.substr(estart, pos - estart));
      }
    } else if (!has_digits) {
      throw std::invalid_argument("malformed term in: " + std::string(text));
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      throw std::invalid_argument("unexpected character in: " + std::string(text));
    }
    acc += LaurentPoly::monomial(sign * coef, exponent);
  }
  return acc;
}

/// Element of the fraction field Z(q), kept in canonical form:
///   - num and den share no common factor of positive degree and no common
///     integer content;
///   - den has min_deg 0 and a positive lowest-order coefficient;
///   - zero is 0/1 and the point at infinity is 1/0.
class LaurentFraction {
 public:
  LaurentFraction() : den_(LaurentPoly::one()) {}

  explicit LaurentFraction(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::one()) {
    normalize();
  }

  LaurentFraction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static LaurentFraction infinity() { return LaurentFraction(LaurentPoly::one(), LaurentPoly()); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_infinite() const { return den_.is_zero(); }
  bool is_zero() const { return num_.is_zero(); }

  friend LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero fraction");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const LaurentFraction& a, const LaurentFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize() {
    if (den_.is_zero()) {
      if (num_.is_zero()) throw std::domain_error("0/0 is not a fraction");
      num_ = LaurentPoly::one();
      return;
    }
    if (num_.is_zero()) {
      den_ = LaurentPoly::one();
      return;
    }
    const int shift = -den_.min_deg();
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
    const LaurentPoly g = poly_gcd(num_, den_);
    if (!(g == LaurentPoly::one())) {
      num_ = div_exact(num_, g);
      den_ = div_exact(den_, g);
    }
    if (den_.lowest_coeff() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentFraction& f) {
  return os << "(" << to_string(f.num()) << ")/(" << to_string(f.den()) << ")";
}

}  // namespace qsnake
