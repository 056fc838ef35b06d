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
#include "gl2/algebra/ratfunc.hpp"

#include <stdexcept>

namespace gl2 {

RatFunc::RatFunc(const APoly& num) : num_(num), den_(APoly::constant(num.field(), 1)) {}

RatFunc::RatFunc(const APoly& num, const APoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = APoly::constant(den_.field(), 1);
    return;
  }
  if (!den_.is_constant()) {
    APoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Fe l = den_.lead();
  if (l != 1) {
    Fe li = den_.fq().inv(l);
    num_ = num_.scale(li);
    den_ = den_.scale(li);
  }
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long long n) const {
  if (n < 0) return inv().pow(-n);
  return RatFunc(num_.pow(static_cast<std::uint64_t>(n)), den_.pow(static_cast<std::uint64_t>(n)), true);
}

RatFunc RatFunc::inflate(std::uint64_t k) const { return RatFunc(num_.inflate(k), den_.inflate(k), true); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_poly() && b.is_poly()) return RatFunc(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_poly() && b.is_poly()) return RatFunc(a.num_ * b.num_);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

std::string RatFunc::str() const {
  if (is_poly()) return num_.str();
  std::string n = num_.str();
  std::string d = den_.str();
  auto wrap = [](const std::string& s, const APoly& p) {
    bool single = p.degree() <= 0 || s.find('+') == std::string::npos;
    return single ? s : "(" + s + ")";
  };
  return wrap(n, num_) + "/" + wrap(d, den_);
}

}  // namespace gl2
