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
#include "gl2/algebra/fq.hpp"

#include <stdexcept>

namespace gl2 {

namespace {

using PVec = std::vector<std::uint32_t>;

void trim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo a monic b over F_p
PVec prem(PVec a, const PVec& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t c = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    trim(a);
  }
  return a;
}

bool irreducible_over_prime(const PVec& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size()) - 1;
  if (n == 0) return false;
  // trial division by every monic polynomial of degree <= n/2
  for (std::uint32_t k = 1; 2 * k <= n; ++k) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      PVec g(k + 1);
      std::uint64_t r = idx;
      for (std::uint32_t i = 0; i < k; ++i) {
        g[i] = r % p;
        r /= p;
      }
      g[k] = 1;
      if (prem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t FieldSpec::q() const {
  std::uint32_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= p;
  return r;
}

FieldSpec FieldSpec::standard(std::uint32_t q) {
  if (q < 2) throw std::domain_error("field size must be at least 2");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint32_t e = 0;
  std::uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw std::domain_error("q is not a prime power");
  FieldSpec s;
  s.p = p;
  s.e = e;
  if (e == 1) {
    s.modulus = {0, 1};
    return s;
  }
  switch (q) {
    case 4: s.modulus = {1, 1, 1}; return s;
    case 8: s.modulus = {1, 1, 0, 1}; return s;
    case 9: s.modulus = {2, 2, 1}; return s;
    case 16: s.modulus = {1, 1, 0, 0, 1}; return s;
    case 25: s.modulus = {2, 4, 1}; return s;
    case 27: s.modulus = {1, 2, 0, 1}; return s;
    default: break;
  }
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PVec f(e + 1);
    std::uint64_t t = idx;
    for (std::uint32_t i = 0; i < e; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[e] = 1;
    if (irreducible_over_prime(f, p)) {
      s.modulus = f;
      return s;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldSpec FieldSpec::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime_u32(p)) throw std::domain_error("characteristic must be prime");
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1)
    throw std::domain_error("modulus must be monic of positive degree");
  for (auto c : modulus)
    if (c >= p) throw std::domain_error("modulus coefficient out of range");
  if (!irreducible_over_prime(modulus, p))
    throw std::domain_error("modulus is not irreducible");
  FieldSpec s;
  s.p = p;
  s.e = static_cast<std::uint32_t>(modulus.size()) - 1;
  s.modulus = modulus;
  if (s.e == 1) s.modulus = {0, 1};
  return s;
}

Fq::Fq(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime_u32(spec_.p)) throw std::domain_error("characteristic must be prime");
  if (spec_.e == 0) throw std::domain_error("degree must be positive");
  q_ = spec_.q();
  if (q_ > 256) throw std::domain_error("fields larger than 256 elements are not supported");
  if (spec_.e > 1) {
    if (spec_.modulus.size() != spec_.e + 1 || spec_.modulus.back() != 1)
      throw std::domain_error("modulus degree does not match e");
    if (!irreducible_over_prime(spec_.modulus, spec_.p))
      throw std::domain_error("modulus is not irreducible");
  }
  const std::uint32_t p = spec_.p, e = spec_.e, q = q_;
  std::vector<PVec> digits(q, PVec(e));
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint32_t r = a;
    for (std::uint32_t i = 0; i < e; ++i) {
      digits[a][i] = r % p;
      r /= p;
    }
  }
  auto encode = [&](const PVec& d) {
    std::uint32_t v = 0;
    for (std::uint32_t i = e; i-- > 0;) v = v * p + (i < d.size() ? d[i] : 0);
    return v;
  };
  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    PVec n(e);
    for (std::uint32_t i = 0; i < e; ++i) n[i] = (p - digits[a][i]) % p;
    neg_[a] = static_cast<std::uint16_t>(encode(n));
    for (std::uint32_t b = 0; b < q; ++b) {
      PVec s(e);
      for (std::uint32_t i = 0; i < e; ++i) s[i] = (digits[a][i] + digits[b][i]) % p;
      add_[a * q + b] = static_cast<std::uint16_t>(encode(s));
      PVec prod(2 * e - 1, 0);
      for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j)
          prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
      PVec red = e == 1 ? prod : prem(prod, spec_.modulus, p);
      mul_[a * q + b] = static_cast<std::uint16_t>(encode(red));
    }
  }
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
}

std::shared_ptr<const Fq> Fq::make(std::uint32_t q) {
  return std::make_shared<const Fq>(FieldSpec::standard(q));
}

Fe Fq::inv(Fe a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  return inv_[a];
}

Fe Fq::pow(Fe a, std::uint64_t n) const {
  Fe r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

Fe Fq::from_int(long long n) const {
  long long p = spec_.p;
  long long r = n % p;
  if (r < 0) r += p;
  return static_cast<Fe>(r);
}

std::uint32_t Fq::digit(Fe a, std::uint32_t i) const {
  for (std::uint32_t k = 0; k < i; ++k) a /= spec_.p;
  return a % spec_.p;
}

Fe Fq::from_digits(const std::vector<std::uint32_t>& d) const {
  Fe v = 0;
  for (std::uint32_t i = spec_.e; i-- > 0;) v = v * spec_.p + (i < d.size() ? d[i] % spec_.p : 0);
  return v;
}

std::uint32_t Fq::order(Fe a) const {
  if (a == 0) throw std::domain_error("order of zero");
  std::uint32_t k = 1;
  Fe x = a;
  while (x != 1) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

Fe Fq::pth_root(Fe a) const { return pow(a, q_ / spec_.p); }

bool Fq::same_as(const Fq& other) const {
  return this == &other ||
         (spec_.p == other.spec_.p && spec_.e == other.spec_.e && spec_.modulus == other.spec_.modulus);
}

}  // namespace gl2
