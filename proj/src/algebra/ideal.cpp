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
#include "gl2/algebra/ideal.hpp"

#include <stdexcept>

#include "gl2/algebra/text.hpp"

namespace gl2 {

AIdeal::AIdeal(const APoly& g) {
  if (g.is_zero()) throw std::domain_error("the zero ideal is not allowed");
  g_ = g.monic();
}

std::uint64_t AIdeal::norm() const {
  std::uint64_t n = 1;
  const std::uint64_t q = g_.fq().q();
  for (int i = 0; i < degree(); ++i) {
    if (n > (std::uint64_t{1} << 62) / q) throw std::overflow_error("ideal norm too large");
    n *= q;
  }
  return n;
}

bool AIdeal::is_prime() const { return is_irreducible(g_); }

AIdeal AIdeal::pow(int k) const {
  if (k < 0) throw std::domain_error("negative ideal power");
  return AIdeal(g_.pow(static_cast<std::uint64_t>(k)));
}

std::string AIdeal::str() const { return "(" + g_.str() + ")"; }

AIdeal parse_ideal(const FqPtr& f, const std::string& text) {
  auto [base, k] = parse_level(f, text);
  if (base.is_zero()) throw std::invalid_argument("the zero ideal is not allowed");
  return AIdeal(base).pow(k);
}

Place::Place(const AIdeal& p) : p_(p) {}

int valuation(const APoly& a, const AIdeal& p) {
  if (a.is_zero()) return kInfVal;
  if (p.degree() < 1) throw std::domain_error("valuation at the unit ideal");
  int v = 0;
  APoly x = a;
  for (;;) {
    auto [q, r] = divmod(x, p.gen());
    if (!r.is_zero()) break;
    x = std::move(q);
    ++v;
  }
  return v;
}

int valuation_inf(const APoly& a) { return a.is_zero() ? kInfVal : -a.degree(); }

int valuation(const RatFunc& x, const Place& place) {
  if (x.is_zero()) return kInfVal;
  if (place.is_infinity()) return x.den().degree() - x.num().degree();
  return valuation(x.num(), place.prime()) - valuation(x.den(), place.prime());
}

std::vector<AIdeal> prime_divisors(const APoly& f) {
  std::vector<AIdeal> out;
  for (auto& [g, m] : factor_poly(f)) out.emplace_back(g);
  return out;
}

std::vector<AIdeal> primes_of_degree(const FqPtr& f, int d) {
  if (d < 1) throw std::domain_error("prime degree must be positive");
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) {
    if (count > 100000000ULL / f->q()) throw std::overflow_error("too many candidates for prime enumeration");
    count *= f->q();
  }
  std::vector<AIdeal> out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    APoly g = APoly::from_index(f, count + idx);  // leading digit 1
    if (is_irreducible(g)) out.emplace_back(g);
  }
  return out;
}

std::optional<AIdeal> PrimeWalker::next(int max_degree) {
  while (pos_ >= cur_.size()) {
    if (deg_ >= max_degree) return std::nullopt;
    ++deg_;
    cur_ = primes_of_degree(f_, deg_);
    pos_ = 0;
  }
  return cur_[pos_++];
}

}  // namespace gl2
