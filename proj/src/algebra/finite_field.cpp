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
#include "gl2/algebra/finite_field.hpp"

#include <stdexcept>

#include "gl2/algebra/text.hpp"

namespace gl2 {

using Elem = FiniteField::Elem;

FFPtr FiniteField::prime(const FqPtr& f) {
  auto K = std::shared_ptr<FiniteField>(new FiniteField());
  K->f_ = f;
  return K;
}

FFPtr FiniteField::residue(const AIdeal& p) {
  if (p.degree() < 1) throw std::domain_error("residue field of the unit ideal");
  std::vector<Elem> mod;
  for (int i = 0; i <= p.degree(); ++i) mod.push_back(Elem{p.gen().coeff(i)});
  auto K = std::const_pointer_cast<FiniteField>(extension(prime(p.field()), std::move(mod)));
  K->apoly_mod_ = p.gen();
  return K;
}

FFPtr FiniteField::extension(const FFPtr& base, std::vector<Elem> modulus) {
  const int m = static_cast<int>(modulus.size()) - 1;
  if (m < 1) throw std::domain_error("extension modulus must have positive degree");
  if (modulus.back() != base->one()) throw std::domain_error("extension modulus must be monic");
  auto K = std::shared_ptr<FiniteField>(new FiniteField());
  K->f_ = base->f_;
  K->base_ = base;
  K->mod_ = std::move(modulus);
  K->deg_ = m;
  K->dim_ = m * base->dim_;
  return K;
}

Elem FiniteField::one() const {
  Elem e(dim_, 0);
  e[0] = 1;
  return e;
}

Elem FiniteField::from_fq(Fe c) const {
  Elem e(dim_, 0);
  e[0] = c;
  return e;
}

Elem FiniteField::gen() const {
  if (!base_) throw std::domain_error("the prime level has no generator");
  Elem e(dim_, 0);
  if (deg_ == 1) return sub(zero(), embed(mod_[0]));
  e[base_->dim_] = 1;
  return e;
}

Elem FiniteField::embed(const Elem& b) const {
  Elem e(dim_, 0);
  std::copy(b.begin(), b.end(), e.begin());
  return e;
}

Elem FiniteField::add(const Elem& a, const Elem& b) const {
  Elem r(dim_);
  for (int i = 0; i < dim_; ++i) r[i] = f_->add(a[i], b[i]);
  return r;
}

Elem FiniteField::sub(const Elem& a, const Elem& b) const {
  Elem r(dim_);
  for (int i = 0; i < dim_; ++i) r[i] = f_->sub(a[i], b[i]);
  return r;
}

Elem FiniteField::neg(const Elem& a) const {
  Elem r(dim_);
  for (int i = 0; i < dim_; ++i) r[i] = f_->neg(a[i]);
  return r;
}

Elem FiniteField::scal(Fe c, const Elem& a) const {
  Elem r(dim_);
  for (int i = 0; i < dim_; ++i) r[i] = f_->mul(c, a[i]);
  return r;
}

void FiniteField::mul_raw(const Fe* a, const Fe* b, Fe* out) const {
  const Fq& F = *f_;
  if (!base_) {
    out[0] = F.mul(a[0], b[0]);
    return;
  }
  const int m = deg_;
  const int s = base_->dim_;
  if (s == 1) {
    std::vector<Fe> prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i) {
      if (!a[i]) continue;
      for (int j = 0; j < m; ++j)
        if (b[j]) prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
    }
    for (int k = 2 * m - 2; k >= m; --k) {
      Fe c = prod[k];
      if (!c) continue;
      for (int i = 0; i < m; ++i)
        if (mod_[i][0]) prod[k - m + i] = F.sub(prod[k - m + i], F.mul(c, mod_[i][0]));
    }
    std::copy(prod.begin(), prod.begin() + m, out);
    return;
  }
  std::vector<Fe> prod(static_cast<std::size_t>(2 * m - 1) * s, 0);
  std::vector<Fe> tmp(s);
  auto nonzero = [s](const Fe* x) {
    for (int i = 0; i < s; ++i)
      if (x[i]) return true;
    return false;
  };
  for (int i = 0; i < m; ++i) {
    if (!nonzero(a + i * s)) continue;
    for (int j = 0; j < m; ++j) {
      if (!nonzero(b + j * s)) continue;
      base_->mul_raw(a + i * s, b + j * s, tmp.data());
      Fe* dst = prod.data() + (i + j) * s;
      for (int u = 0; u < s; ++u) dst[u] = F.add(dst[u], tmp[u]);
    }
  }
  for (int k = 2 * m - 2; k >= m; --k) {
    const Fe* c = prod.data() + k * s;
    if (!nonzero(c)) continue;
    std::vector<Fe> cc(c, c + s);
    for (int i = 0; i < m; ++i) {
      base_->mul_raw(cc.data(), mod_[i].data(), tmp.data());
      Fe* dst = prod.data() + (k - m + i) * s;
      for (int u = 0; u < s; ++u) dst[u] = F.sub(dst[u], tmp[u]);
    }
  }
  std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(m) * s, out);
}

Elem FiniteField::mul(const Elem& a, const Elem& b) const {
  Elem r(dim_);
  mul_raw(a.data(), b.data(), r.data());
  return r;
}

Elem FiniteField::pow(const Elem& a, std::uint64_t n) const {
  Elem r = one(), b = a;
  while (n) {
    if (n & 1) r = mul(r, b);
    n >>= 1;
    if (n) b = mul(b, b);
  }
  return r;
}

Elem FiniteField::frob(const Elem& a) const { return pow(a, f_->q()); }

bool FiniteField::is_zero(const Elem& a) {
  for (Fe x : a)
    if (x) return false;
  return true;
}

Elem FiniteField::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in a finite field");
  auto x = solve(*f_, mul_matrix(a), one());
  if (!x) throw std::logic_error("nonzero element without inverse: modulus not irreducible");
  return *x;
}

bool FiniteField::less(const Elem& a, const Elem& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::uint64_t FiniteField::index(const Elem& a) const {
  std::uint64_t r = 0;
  const std::uint64_t q = f_->q();
  for (int i = dim_; i-- > 0;) {
    if (r > ((std::uint64_t{1} << 62) - a[i]) / q) throw std::overflow_error("field element index too large");
    r = r * q + a[i];
  }
  return r;
}

Elem FiniteField::from_index(std::uint64_t idx) const {
  Elem e(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    e[i] = static_cast<Fe>(idx % f_->q());
    idx /= f_->q();
  }
  return e;
}

FqMatrix FiniteField::mul_matrix(const Elem& a) const {
  FqMatrix M(dim_, dim_);
  Elem e(dim_, 0);
  for (int j = 0; j < dim_; ++j) {
    e[j] = 1;
    M.set_column(j, mul(a, e));
    e[j] = 0;
  }
  return M;
}

const FqMatrix& FiniteField::frob_matrix() const {
  if (!frob_) {
    auto M = std::make_shared<FqMatrix>(dim_, dim_);
    Elem e(dim_, 0);
    for (int j = 0; j < dim_; ++j) {
      e[j] = 1;
      M->set_column(j, frob(e));
      e[j] = 0;
    }
    frob_ = M;
  }
  return *frob_;
}

Elem FiniteField::from_apoly(const APoly& a) const {
  if (apoly_mod_.is_zero()) throw std::domain_error("not a residue field");
  APoly r = a % apoly_mod_;
  Elem e(dim_, 0);
  for (int i = 0; i <= r.degree(); ++i) e[i] = r.coeff(i);
  return e;
}

APoly FiniteField::to_apoly(const Elem& a) const {
  if (apoly_mod_.is_zero()) throw std::domain_error("not a residue field");
  return APoly(f_, a);
}

std::string FiniteField::str(const Elem& a) const {
  if (!apoly_mod_.is_zero()) return to_apoly(a).str();
  if (!base_) return format_fq(*f_, a[0]);
  std::string out = "[";
  const int s = base_->dim_;
  for (int j = 0; j < deg_; ++j) {
    if (j) out += ", ";
    out += base_->str(Elem(a.begin() + j * s, a.begin() + (j + 1) * s));
  }
  return out + "]";
}

void ff_trim(FFPoly& a) {
  while (!a.empty() && FiniteField::is_zero(a.back())) a.pop_back();
}

FFPoly ff_mul(const FiniteField& K, const FFPoly& a, const FFPoly& b) {
  if (a.empty() || b.empty()) return {};
  FFPoly r(a.size() + b.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (FiniteField::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  }
  ff_trim(r);
  return r;
}

FFPoly ff_sub(const FiniteField& K, const FFPoly& a, const FFPoly& b) {
  FFPoly r(std::max(a.size(), b.size()), K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
  ff_trim(r);
  return r;
}

FFPoly ff_mod(const FiniteField& K, FFPoly a, const FFPoly& m) {
  if (m.empty()) throw std::domain_error("reduction modulo the zero polynomial");
  ff_trim(a);
  const std::size_t dm = m.size() - 1;
  Elem li = K.inv(m.back());
  while (a.size() > dm) {
    Elem c = K.mul(a.back(), li);
    const std::size_t off = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[off + i] = K.sub(a[off + i], K.mul(c, m[i]));
    ff_trim(a);
  }
  return a;
}

FFPoly ff_gcd(const FiniteField& K, FFPoly a, FFPoly b) {
  ff_trim(a);
  ff_trim(b);
  while (!b.empty()) {
    FFPoly r = ff_mod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Elem li = K.inv(a.back());
  for (auto& c : a) c = K.mul(c, li);
  return a;
}

namespace {

FFPoly ff_powmod(const FiniteField& K, FFPoly a, std::uint64_t n, const FFPoly& m) {
  FFPoly r{K.one()};
  a = ff_mod(K, std::move(a), m);
  while (n) {
    if (n & 1) r = ff_mod(K, ff_mul(K, r, a), m);
    n >>= 1;
    if (n) a = ff_mod(K, ff_mul(K, a, a), m);
  }
  return r;
}

}  // namespace

bool ff_is_irreducible(const FiniteField& K, const FFPoly& m) {
  const int n = static_cast<int>(m.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  const FFPoly y{K.zero(), K.one()};
  FFPoly h = y;
  // Ben-Or: no factor of degree i <= n/2 divides m
  for (int i = 1; i <= n / 2; ++i) {
    for (int k = 0; k < K.dim(); ++k) h = ff_powmod(K, h, K.fq().q(), m);
    FFPoly g = ff_gcd(K, m, ff_sub(K, h, y));
    if (g.size() > 1) return false;
  }
  return true;
}

FFPtr FiniteField::first_extension(const FFPtr& base, int m) {
  if (m < 1) throw std::domain_error("extension degree must be positive");
  const FiniteField& K = *base;
  std::vector<std::uint64_t> digit(m, 0);
  std::uint64_t size = 1;
  for (int i = 0; i < K.dim(); ++i) size *= K.fq().q();
  for (;;) {
    FFPoly M;
    for (int i = 0; i < m; ++i) M.push_back(K.from_index(digit[i]));
    M.push_back(K.one());
    if (ff_is_irreducible(K, M)) return extension(base, std::move(M));
    int i = 0;
    while (i < m && ++digit[i] == size) digit[i++] = 0;
    if (i == m) throw std::logic_error("no irreducible polynomial found");
  }
}

}  // namespace gl2
