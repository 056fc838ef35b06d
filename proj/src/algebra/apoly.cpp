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
#include "gl2/algebra/apoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "gl2/algebra/text.hpp"

namespace gl2 {

APoly::APoly(FqPtr f, std::vector<Fe> c) : f_(std::move(f)), c_(std::move(c)) {
  for (Fe x : c_)
    if (x >= f_->q()) throw std::domain_error("coefficient outside F_q");
  trim();
}

APoly APoly::constant(FqPtr f, Fe c) { return APoly(std::move(f), std::vector<Fe>{c}); }

APoly APoly::monomial(FqPtr f, Fe c, int k) {
  if (k < 0) throw std::domain_error("negative exponent");
  std::vector<Fe> v(k + 1, 0);
  v[k] = c;
  return APoly(std::move(f), std::move(v));
}

APoly APoly::from_index(FqPtr f, std::uint64_t idx) {
  std::vector<Fe> v;
  const std::uint64_t q = f->q();
  while (idx) {
    v.push_back(static_cast<Fe>(idx % q));
    idx /= q;
  }
  return APoly(std::move(f), std::move(v));
}

std::uint64_t APoly::index() const {
  std::uint64_t v = 0;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * f_->q() + c_[i];
  return v;
}

void APoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void APoly::check_same(const APoly& b) const {
  if (f_ && b.f_ && !f_->same_as(*b.f_)) throw std::domain_error("polynomials over different fields");
}

APoly APoly::monic() const {
  if (is_zero()) return *this;
  return scale(f_->inv(lead()));
}

APoly APoly::scale(Fe a) const {
  if (a == 0) return APoly(f_);
  APoly r = *this;
  for (auto& x : r.c_) x = f_->mul(x, a);
  return r;
}

APoly APoly::shift(int k) const {
  if (is_zero()) return *this;
  APoly r(f_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

APoly APoly::derivative() const {
  APoly r(f_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = f_->mul(f_->from_int(static_cast<long long>(i)), c_[i]);
  r.trim();
  return r;
}

Fe APoly::eval(Fe x) const {
  Fe r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
  return r;
}

APoly APoly::pow(std::uint64_t n) const {
  APoly r = constant(f_, 1);
  APoly b = *this;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

APoly APoly::compose(const APoly& g) const {
  APoly r(f_);
  for (std::size_t i = c_.size(); i-- > 0;) {
    r *= g;
    r += constant(f_, c_[i]);
  }
  return r;
}

APoly APoly::inflate(std::uint64_t k) const {
  if (is_zero() || k == 1) return *this;
  APoly r(f_);
  r.c_.assign((c_.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
  return r;
}

APoly APoly::operator-() const {
  APoly r = *this;
  for (auto& x : r.c_) x = f_->neg(x);
  return r;
}

APoly& APoly::operator+=(const APoly& b) {
  check_same(b);
  if (!f_) f_ = b.f_;
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), 0);
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = f_->add(c_[i], b.c_[i]);
  trim();
  return *this;
}

APoly& APoly::operator-=(const APoly& b) {
  check_same(b);
  if (!f_) f_ = b.f_;
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), 0);
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = f_->sub(c_[i], b.c_[i]);
  trim();
  return *this;
}

APoly operator*(const APoly& a, const APoly& b) {
  a.check_same(b);
  APoly r(a.f_ ? a.f_ : b.f_);
  if (a.is_zero() || b.is_zero()) return r;
  const Fq& F = *r.f_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    Fe x = a.c_[i];
    if (x == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = F.add(r.c_[i + j], F.mul(x, b.c_[j]));
  }
  r.trim();
  return r;
}

APoly& APoly::operator*=(const APoly& b) { return *this = *this * b; }

bool operator<(const APoly& a, const APoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::pair<APoly, APoly> divmod(const APoly& a, const APoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  a.check_same(b);
  const FqPtr& fp = b.field();
  const Fq& F = *fp;
  std::vector<Fe> r = a.coeffs();
  const int db = b.degree();
  if (static_cast<int>(r.size()) - 1 < db) return {APoly(fp), a};
  std::vector<Fe> q(r.size() - db, 0);
  const Fe li = F.inv(b.lead());
  const auto& bc = b.coeffs();
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    Fe c = F.mul(r[k], li);
    if (c == 0) continue;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] = F.sub(r[k - db + i], F.mul(c, bc[i]));
  }
  r.resize(db);
  return {APoly(fp, std::move(q)), APoly(fp, std::move(r))};
}

APoly operator/(const APoly& a, const APoly& b) { return divmod(a, b).first; }

APoly operator%(const APoly& a, const APoly& b) {
  if (a.degree() < b.degree() && !b.is_zero()) return a;
  return divmod(a, b).second;
}

APoly exact_div(const APoly& a, const APoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

APoly gcd(const APoly& a, const APoly& b) {
  APoly x = a, y = b;
  while (!y.is_zero()) {
    APoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

APoly xgcd(const APoly& a, const APoly& b, APoly& s, APoly& t) {
  const FqPtr& f = a.field() ? a.field() : b.field();
  APoly r0 = a, r1 = b;
  APoly s0 = APoly::constant(f, 1), s1(f);
  APoly t0(f), t1 = APoly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    APoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    APoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  Fe li = f->inv(r0.lead());
  s = s0.scale(li);
  t = t0.scale(li);
  return r0.scale(li);
}

APoly mulmod(const APoly& a, const APoly& b, const APoly& m) { return (a * b) % m; }

APoly powmod(const APoly& a, std::uint64_t n, const APoly& m) {
  APoly r = APoly::constant(m.field(), 1) % m;
  APoly b = a % m;
  while (n) {
    if (n & 1) r = mulmod(r, b, m);
    n >>= 1;
    if (n) b = mulmod(b, b, m);
  }
  return r;
}

APoly invmod(const APoly& a, const APoly& m) {
  APoly s, t;
  APoly g = xgcd(a % m, m, s, t);
  if (!g.is_one()) throw std::domain_error("element is not a unit modulo m");
  return s % m;
}

std::string APoly::str() const { return format_apoly(*this); }

}  // namespace gl2
