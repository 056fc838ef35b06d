/* Copyright (C) 2026 The gl2cert Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef GL2_ALGEBRA_UPOLY_HPP
#define GL2_ALGEBRA_UPOLY_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gl2/algebra/apoly.hpp"
#include "gl2/algebra/ratfunc.hpp"

namespace gl2 {

/**
 * @brief Dense univariate polynomial in x over a commutative ring T.
 *
 * T needs +, -, *, ==, is_zero() and str().  The ring zero is carried along
 * because ring elements know their base field.
 */
template <class T>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(T zero) : zero_(std::move(zero)) {}
  UPoly(T zero, std::vector<T> c) : zero_(std::move(zero)), c_(std::move(c)) { trim(); }

  static UPoly monomial(const T& zero, const T& c, int k) {
    std::vector<T> v(k + 1, zero);
    v[k] = c;
    return UPoly(zero, std::move(v));
  }

  const T& zero() const { return zero_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const T& coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : zero_; }
  const T& lead() const { return c_.empty() ? zero_ : c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }

  UPoly scale(const T& a) const {
    UPoly r(zero_, c_);
    for (auto& x : r.c_) x = x * a;
    r.trim();
    return r;
  }

  UPoly shift(int k) const {
    if (is_zero()) return *this;
    std::vector<T> v(k, zero_);
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(zero_, std::move(v));
  }

  T eval(const T& x) const {
    T r = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  template <class F>
  auto map(F&& fn) const {
    using U = decltype(fn(zero_));
    std::vector<U> v;
    v.reserve(c_.size());
    for (auto& x : c_) v.push_back(fn(x));
    return UPoly<U>(fn(zero_), std::move(v));
  }

  UPoly operator-() const {
    UPoly r(zero_, c_);
    for (auto& x : r.c_) x = zero_ - x;
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<T> v(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UPoly(a.zero_, std::move(v));
  }

  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<T> v(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return UPoly(a.zero_, std::move(v));
  }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.zero_);
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(a.zero_, std::move(v));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a.c_ == b.c_); }

  /// "x^2 + (a)*x + (b)" with every coefficient after the leading one shown
  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const T& c = c_[k];
      if (k != degree() && c.is_zero()) continue;
      std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      std::string term;
      if (k == degree() && k > 0 && c.is_one())
        term = mono;
      else
        term = "(" + c.str() + ")" + (mono.empty() ? "" : "*" + mono);
      out += out.empty() ? term : " + " + term;
    }
    return out;
  }

  bool is_zero_poly() const { return c_.empty(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  T zero_;
  std::vector<T> c_;
};

using AXPoly = UPoly<APoly>;
using FXPoly = UPoly<RatFunc>;

inline RatFunc field_inverse(const RatFunc& a) { return a.inv(); }
inline RatFunc exact_div(const RatFunc& a, const RatFunc& b) { return a / b; }

/// remainder and quotient over a field of coefficients
template <class T>
std::pair<UPoly<T>, UPoly<T>> field_divmod(const UPoly<T>& a, const UPoly<T>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly<T>(a.zero()), a};
  std::vector<T> q(a.degree() - db + 1, a.zero());
  T li = field_inverse(b.lead());
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    T c = r[k] * li;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] = r[k - db + i] - c * b.coeff(i);
  }
  r.resize(db, a.zero());
  return {UPoly<T>(a.zero(), std::move(q)), UPoly<T>(a.zero(), std::move(r))};
}

/// monic gcd over a field of coefficients
template <class T>
UPoly<T> field_gcd(UPoly<T> a, UPoly<T> b) {
  while (!b.is_zero()) {
    auto r = field_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scale(field_inverse(a.lead()));
}

/// exact quotient a / b in R[x] when lead(b) divides exactly at every step
template <class T>
UPoly<T> exact_div(const UPoly<T>& a, const UPoly<T>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  if (a.is_zero()) return a;
  if (a.degree() < db) throw std::domain_error("inexact polynomial division");
  std::vector<T> q(a.degree() - db + 1, a.zero());
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    T c = exact_div(r[k], b.lead());
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] = r[k - db + i] - c * b.coeff(i);
  }
  for (int i = 0; i < db; ++i)
    if (!r[i].is_zero()) throw std::domain_error("inexact polynomial division");
  return UPoly<T>(a.zero(), std::move(q));
}

/// fraction-free (Bareiss) determinant over an integral domain
template <class T>
T bareiss_det(std::vector<std::vector<T>> m, const T& zero, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  T prev = one;
  bool neg = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < n && m[s][k].is_zero()) ++s;
      if (s == n) return zero;
      std::swap(m[k], m[s]);
      neg = !neg;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = zero;
    }
    prev = m[k][k];
  }
  T d = m[n - 1][n - 1];
  return neg ? zero - d : d;
}

/// Sylvester matrix of f (rows first) and g
template <class T>
std::vector<std::vector<T>> sylvester(const UPoly<T>& f, const UPoly<T>& g) {
  const int m = f.degree(), n = g.degree();
  const std::size_t s = static_cast<std::size_t>(m + n);
  std::vector<std::vector<T>> M(s, std::vector<T>(s, f.zero()));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[r][r + i] = f.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[n + r][r + i] = g.coeff(n - i);
  return M;
}

/// Res(f, g) as the Sylvester determinant
template <class T>
T resultant(const UPoly<T>& f, const UPoly<T>& g, const T& one) {
  if (f.is_zero() || g.is_zero()) return f.zero();
  return bareiss_det(sylvester(f, g), f.zero(), one);
}

/// resultant of two polynomials in x over A
APoly resultant_x(const AXPoly& P, const AXPoly& Q);

/// P(x) viewed over F = F_q(t)
FXPoly to_fx(const AXPoly& P);

}  // namespace gl2

#endif
