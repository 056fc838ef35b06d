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
#include "gl2/algebra/quot_ring.hpp"

#include <stdexcept>

namespace gl2 {

namespace {
constexpr std::uint32_t kTableLimit = 1024;
}

QuotRing::QuotRing(const AIdeal& a) : a_(a) {
  if (a.degree() < 1) throw std::domain_error("quotient by the unit ideal");
  q_ = a.field()->q();
  deg_ = a.degree();
  std::uint64_t n = 1;
  for (int i = 0; i < deg_; ++i) {
    n *= q_;
    if (n > kMaxSize) throw std::domain_error("quotient ring too large: " + a.str());
  }
  n_ = static_cast<std::uint32_t>(n);
  if (n_ <= kTableLimit) {
    mul_.resize(static_cast<std::size_t>(n_) * n_);
    for (R x = 0; x < n_; ++x)
      for (R y = x; y < n_; ++y) {
        R z = from_apoly(to_apoly(x) * to_apoly(y));
        mul_[x * n_ + y] = mul_[y * n_ + x] = static_cast<std::uint16_t>(z);
      }
  }
  inv_.assign(n_, kNone);
  for (R x = 1; x < n_; ++x) {
    if (inv_[x] != kNone) continue;
    APoly p = to_apoly(x);
    if (gcd(p, a_.gen()).degree() > 0) continue;
    R y = from_apoly(invmod(p, a_.gen()));
    inv_[x] = y;
    inv_[y] = x;
  }
}

QuotRing::R QuotRing::add(R x, R y) const {
  const Fq& F = *a_.field();
  R r = 0, scale = 1;
  for (int i = 0; i < deg_; ++i) {
    r += scale * F.add(x % q_, y % q_);
    x /= q_;
    y /= q_;
    scale *= q_;
  }
  return r;
}

QuotRing::R QuotRing::neg(R x) const {
  const Fq& F = *a_.field();
  R r = 0, scale = 1;
  for (int i = 0; i < deg_; ++i) {
    r += scale * F.neg(x % q_);
    x /= q_;
    scale *= q_;
  }
  return r;
}

QuotRing::R QuotRing::sub(R x, R y) const { return add(x, neg(y)); }

QuotRing::R QuotRing::mul(R x, R y) const {
  if (!mul_.empty()) return mul_[x * n_ + y];
  return from_apoly(to_apoly(x) * to_apoly(y));
}

QuotRing::R QuotRing::inv(R x) const {
  if (inv_[x] == kNone) throw std::domain_error("not a unit in " + a_.str() + ": " + str(x));
  return inv_[x];
}

QuotRing::R QuotRing::pow(R x, std::uint64_t n) const {
  R r = 1;
  while (n) {
    if (n & 1) r = mul(r, x);
    n >>= 1;
    if (n) x = mul(x, x);
  }
  return r;
}

QuotRing::R QuotRing::from_apoly(const APoly& p) const {
  return static_cast<R>((p % a_.gen()).index());
}

APoly QuotRing::to_apoly(R x) const { return APoly::from_index(a_.field(), x); }

std::vector<QuotRing::R> QuotRing::units() const {
  std::vector<R> u;
  for (R x = 1; x < n_; ++x)
    if (is_unit(x)) u.push_back(x);
  return u;
}

}  // namespace gl2
