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
#ifndef GL2_ALGEBRA_IDEAL_HPP
#define GL2_ALGEBRA_IDEAL_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gl2/algebra/apoly.hpp"
#include "gl2/algebra/ratfunc.hpp"

namespace gl2 {

/// Nonzero ideal of A, stored through its monic generator.
class AIdeal {
 public:
  AIdeal() = default;
  explicit AIdeal(const APoly& g);

  const APoly& gen() const { return g_; }
  const FqPtr& field() const { return g_.field(); }
  int degree() const { return g_.degree(); }
  /// q^degree; std::overflow_error above 2^62
  std::uint64_t norm() const;
  bool is_prime() const;
  bool is_unit() const { return g_.is_one(); }
  bool divides(const APoly& a) const { return (a % g_).is_zero(); }
  bool divides(const AIdeal& b) const { return divides(b.gen()); }

  AIdeal pow(int k) const;
  friend AIdeal operator*(const AIdeal& a, const AIdeal& b) { return AIdeal(a.g_ * b.g_); }
  friend bool operator==(const AIdeal& a, const AIdeal& b) { return a.g_ == b.g_; }
  friend bool operator!=(const AIdeal& a, const AIdeal& b) { return a.g_ != b.g_; }
  friend bool operator<(const AIdeal& a, const AIdeal& b) { return a.g_ < b.g_; }

  /// "(g)"
  std::string str() const;

 private:
  APoly g_;
};

AIdeal parse_ideal(const FqPtr& f, const std::string& text);

/// A place of F: a nonzero prime of A or the infinite place.
class Place {
 public:
  static Place infinity() { return Place(); }
  Place(const AIdeal& p);  // NOLINT(google-explicit-constructor)

  bool is_infinity() const { return !p_.has_value(); }
  const AIdeal& prime() const { return *p_; }
  std::string str() const { return p_ ? p_->str() : "inf"; }

 private:
  Place() = default;
  std::optional<AIdeal> p_;
};

/// valuation of zero
inline constexpr int kInfVal = std::numeric_limits<int>::max();

int valuation(const APoly& a, const AIdeal& p);
int valuation(const RatFunc& x, const Place& place);
/// -deg a, or kInfVal for a = 0
int valuation_inf(const APoly& a);

inline constexpr std::uint64_t kFactorSeed = 0x5eed5eedULL;

/// monic irreducible factors with multiplicity, sorted canonically
std::vector<std::pair<APoly, int>> factor_poly(const APoly& f, std::uint64_t seed = kFactorSeed);
bool is_irreducible(const APoly& f);
/// distinct monic prime divisors of a nonzero polynomial, canonical order
std::vector<AIdeal> prime_divisors(const APoly& f);

std::vector<AIdeal> primes_of_degree(const FqPtr& f, int d);

/// Walks the nonzero primes of A in canonical order (degree, then lex).
class PrimeWalker {
 public:
  explicit PrimeWalker(FqPtr f) : f_(std::move(f)) {}
  /// next prime, or nothing once max_degree is exceeded
  std::optional<AIdeal> next(int max_degree);

 private:
  FqPtr f_;
  int deg_ = 0;
  std::size_t pos_ = 0;
  std::vector<AIdeal> cur_;
};

}  // namespace gl2

#endif
