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
#ifndef GL2_ALGEBRA_APOLY_HPP
#define GL2_ALGEBRA_APOLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gl2/algebra/fq.hpp"

namespace gl2 {

/**
 * @brief Element of A = F_q[t].
 *
 * Coefficients are stored from low to high degree with no trailing zeros;
 * the zero polynomial has degree -1.  Every polynomial carries the field it
 * lives over; mixing fields throws std::domain_error.
 */
class APoly {
 public:
  APoly() = default;
  explicit APoly(FqPtr f) : f_(std::move(f)) {}
  APoly(FqPtr f, std::vector<Fe> c);

  static APoly constant(FqPtr f, Fe c);
  static APoly monomial(FqPtr f, Fe c, int k);
  static APoly t(FqPtr f) { return monomial(std::move(f), 1, 1); }
  /// polynomial whose base-q digits (low degree first) are those of idx
  static APoly from_index(FqPtr f, std::uint64_t idx);

  const FqPtr& field() const { return f_; }
  const Fq& fq() const { return *f_; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Fe coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  Fe lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Fe>& coeffs() const { return c_; }
  /// base-q value of the coefficient vector; increasing in canonical order
  std::uint64_t index() const;

  APoly monic() const;
  APoly scale(Fe a) const;
  APoly shift(int k) const;
  APoly derivative() const;
  Fe eval(Fe x) const;
  APoly pow(std::uint64_t n) const;
  APoly compose(const APoly& g) const;
  /// f(t^k)
  APoly inflate(std::uint64_t k) const;

  APoly operator-() const;
  APoly& operator+=(const APoly& b);
  APoly& operator-=(const APoly& b);
  APoly& operator*=(const APoly& b);
  friend APoly operator+(APoly a, const APoly& b) { return a += b; }
  friend APoly operator-(APoly a, const APoly& b) { return a -= b; }
  friend APoly operator*(const APoly& a, const APoly& b);
  friend APoly operator/(const APoly& a, const APoly& b);
  friend APoly operator%(const APoly& a, const APoly& b);
  friend bool operator==(const APoly& a, const APoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const APoly& a, const APoly& b) { return a.c_ != b.c_; }
  /// canonical order: by degree, then coefficients from the top down
  friend bool operator<(const APoly& a, const APoly& b);

  /// text form in the polynomial grammar
  std::string str() const;

  /// throws std::domain_error when b lives over a different F_q
  void check_same(const APoly& b) const;

 private:
  void trim();

  FqPtr f_;
  std::vector<Fe> c_;
};

std::pair<APoly, APoly> divmod(const APoly& a, const APoly& b);
/// quotient when b | a, std::domain_error otherwise
APoly exact_div(const APoly& a, const APoly& b);
/// monic gcd (zero when both inputs are zero)
APoly gcd(const APoly& a, const APoly& b);
/// returns g = gcd(a,b) monic with s*a + t*b = g
APoly xgcd(const APoly& a, const APoly& b, APoly& s, APoly& t);
APoly mulmod(const APoly& a, const APoly& b, const APoly& m);
APoly powmod(const APoly& a, std::uint64_t n, const APoly& m);
/// inverse of a modulo m; std::domain_error when not a unit
APoly invmod(const APoly& a, const APoly& m);

}  // namespace gl2

#endif
