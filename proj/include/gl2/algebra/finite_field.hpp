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
#ifndef GL2_ALGEBRA_FINITE_FIELD_HPP
#define GL2_ALGEBRA_FINITE_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "gl2/algebra/apoly.hpp"
#include "gl2/algebra/ideal.hpp"
#include "gl2/algebra/linalg.hpp"

namespace gl2 {

class FiniteField;
using FFPtr = std::shared_ptr<const FiniteField>;

/**
 * @brief Finite extension of F_q built as a tower.
 *
 * The bottom level is F_q itself.  Each further level is base[y]/(M) for a
 * monic irreducible M over the base.  An element is its coordinate vector
 * over F_q, block j holding the coefficient of y^j.
 */
class FiniteField : public std::enable_shared_from_this<FiniteField> {
 public:
  using Elem = std::vector<Fe>;

  static FFPtr prime(const FqPtr& f);
  /// F_q[t]/(p) for a prime p
  static FFPtr residue(const AIdeal& p);
  /// base[y]/(modulus); modulus is monic irreducible, low to high
  static FFPtr extension(const FFPtr& base, std::vector<Elem> modulus);
  /// extension by the first monic irreducible of degree m in canonical order
  static FFPtr first_extension(const FFPtr& base, int m);

  const Fq& fq() const { return *f_; }
  const FqPtr& fq_ptr() const { return f_; }
  int dim() const { return dim_; }
  /// degree over the base level (1 at the bottom)
  int degree() const { return deg_; }
  const FFPtr& base() const { return base_; }
  const std::vector<Elem>& modulus() const { return mod_; }
  bool is_prime_level() const { return !base_; }

  Elem zero() const { return Elem(dim_, 0); }
  Elem one() const;
  Elem from_fq(Fe c) const;
  /// the generator y of this level over its base
  Elem gen() const;
  Elem embed(const Elem& base_elem) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scal(Fe c, const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, std::uint64_t n) const;
  /// a^q
  Elem frob(const Elem& a) const;
  Elem inv(const Elem& a) const;
  static bool is_zero(const Elem& a);

  /// lexicographic from the top coordinate down
  static bool less(const Elem& a, const Elem& b);
  /// base-q integer with coordinate 0 least significant
  std::uint64_t index(const Elem& a) const;
  Elem from_index(std::uint64_t idx) const;

  /// multiplication by a as an F_q-matrix
  FqMatrix mul_matrix(const Elem& a) const;
  /// x -> x^q as an F_q-matrix
  const FqMatrix& frob_matrix() const;

  /// residue level only
  Elem from_apoly(const APoly& a) const;
  APoly to_apoly(const Elem& a) const;

  std::string str(const Elem& a) const;

 private:
  FiniteField() = default;
  void mul_raw(const Fe* a, const Fe* b, Fe* out) const;

  FqPtr f_;
  FFPtr base_;
  std::vector<Elem> mod_;
  APoly apoly_mod_;  // set at a residue level
  int dim_ = 1;
  int deg_ = 1;
  mutable std::shared_ptr<FqMatrix> frob_;
};

/// polynomial over a FiniteField, coefficients low to high, trimmed
using FFPoly = std::vector<FiniteField::Elem>;

void ff_trim(FFPoly& a);
FFPoly ff_mul(const FiniteField& K, const FFPoly& a, const FFPoly& b);
FFPoly ff_sub(const FiniteField& K, const FFPoly& a, const FFPoly& b);
FFPoly ff_mod(const FiniteField& K, FFPoly a, const FFPoly& m);
FFPoly ff_gcd(const FiniteField& K, FFPoly a, FFPoly b);
bool ff_is_irreducible(const FiniteField& K, const FFPoly& m);

}  // namespace gl2

#endif
