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
#ifndef GL2_DRINFELD_MODULE_HPP
#define GL2_DRINFELD_MODULE_HPP

#include <string>
#include <vector>

#include "gl2/algebra/ideal.hpp"
#include "gl2/drinfeld/skew.hpp"

namespace gl2 {

/**
 * @brief Drinfeld module over F = F_q(t) of generic characteristic.
 *
 * phi_t = t + a_1 tau + ... + a_r tau^r with a_r != 0.
 */
class DrinfeldModule {
 public:
  /// coefficients a_1..a_r
  DrinfeldModule(FqPtr f, std::vector<RatFunc> a);
  static DrinfeldModule rank2(const RatFunc& a1, const RatFunc& a2);
  /// "a0,a1,...,ar" in the polynomial grammar; a0 must be t
  static DrinfeldModule parse(const FqPtr& f, const std::string& text);

  const FqPtr& field() const { return f_; }
  const Fq& fq() const { return *f_; }
  int rank() const { return static_cast<int>(a_.size()); }
  /// a_i for 1 <= i <= r
  const RatFunc& a(int i) const { return a_.at(i - 1); }
  FracCoeffs coeffs() const { return FracCoeffs(f_); }

  GlobalSkew phi_t() const;
  GlobalSkew phi_of(const APoly& a) const;
  /// a_1^(q+1)/a_2, rank 2 only
  RatFunc j_invariant() const;
  /// (b^(q-1) a_1, ..., b^(q^r-1) a_r)
  DrinfeldModule twist(const RatFunc& b) const;

  /// "t,a1,a2"
  std::string str() const;

 private:
  FqPtr f_;
  std::vector<RatFunc> a_;
};

/// phi_t over a finite field K with ideal p0 the characteristic.
class ReducedModule {
 public:
  ReducedModule(FFPtr K, AIdeal p0, std::vector<FiniteField::Elem> a);

  const FFPtr& field() const { return K_; }
  const AIdeal& characteristic() const { return p0_; }
  int rank() const { return static_cast<int>(a_.size()) - 1; }
  /// a_0 is the image of t
  const FiniteField::Elem& a(int i) const { return a_.at(i); }
  FFCoeffs coeffs() const { return FFCoeffs(K_); }

  /// the image of a in K
  FiniteField::Elem iota(const APoly& a) const;
  FFSkew phi_t() const;
  FFSkew phi_of(const APoly& a) const;
  /// the same module over an extension E of K
  ReducedModule base_change(const FFPtr& E) const;

 private:
  FFPtr K_;
  AIdeal p0_;
  std::vector<FiniteField::Elem> a_;
};

/// exact rational number n/d with d > 0
struct Rational {
  long long num = 0;
  long long den = 1;
  Rational() = default;
  Rational(long long n, long long d);
  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
  std::string str() const;
};

enum class ReductionKind { Good, StableRank1, PotentiallyGoodNotGood, NotStableOverBase };
std::string to_string(ReductionKind k);

struct ReductionReport {
  AIdeal prime;
  ReductionKind kind = ReductionKind::Good;
  /// largest i with v(a_i)/(q^i-1) = m
  int potential_rank = 2;
  Rational m;
  int v1 = kInfVal;
  int v2 = 0;
  /// v(j); kInfVal when j = 0
  int vj = kInfVal;
};

/// rank 2 only; std::domain_error if p is not prime
ReductionReport reduction_type(const DrinfeldModule& dm, const AIdeal& p);

/// primes where dm does not have good reduction, in canonical order
std::vector<AIdeal> bad_primes(const DrinfeldModule& dm);
bool has_good_reduction(const DrinfeldModule& dm, const AIdeal& p);

/// reduction of a twist with good reduction at p, over F_p = A/p
ReducedModule reduce(const DrinfeldModule& dm, const AIdeal& p);

/// phi_g for the monic generator g of a
GlobalSkew torsion_polynomial(const DrinfeldModule& dm, const AIdeal& a);
/// std::domain_error when a is divisible by the characteristic
FFSkew torsion_polynomial(const ReducedModule& dm, const AIdeal& a);

}  // namespace gl2

#endif
