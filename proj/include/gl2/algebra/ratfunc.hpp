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
#ifndef GL2_ALGEBRA_RATFUNC_HPP
#define GL2_ALGEBRA_RATFUNC_HPP

#include <string>

#include "gl2/algebra/apoly.hpp"

namespace gl2 {

/**
 * @brief Element of F = F_q(t), kept as num/den with gcd 1 and den monic.
 */
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const FqPtr& f) : num_(f), den_(APoly::constant(f, 1)) {}
  RatFunc(const APoly& num);  // NOLINT(google-explicit-constructor)
  RatFunc(const APoly& num, const APoly& den);

  const APoly& num() const { return num_; }
  const APoly& den() const { return den_; }
  const FqPtr& field() const { return num_.field() ? num_.field() : den_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }

  RatFunc inv() const;
  RatFunc pow(long long n) const;
  /// t -> t^k in numerator and denominator
  RatFunc inflate(std::uint64_t k) const;

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str() const;

 private:
  RatFunc(APoly num, APoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  APoly num_;
  APoly den_;
};

}  // namespace gl2

#endif
