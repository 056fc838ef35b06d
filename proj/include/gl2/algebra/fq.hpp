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
#ifndef GL2_ALGEBRA_FQ_HPP
#define GL2_ALGEBRA_FQ_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gl2 {

/**
 * @brief Element of F_q, stored as its index.
 *
 * An element sum_i d_i g^i (0 <= d_i < p) has index sum_i d_i p^i, so the
 * prime subfield occupies indices 0..p-1 and 0, 1 are the zero and one.
 */
using Fe = std::uint32_t;

/// Description of F_q = F_p[g]/(modulus).
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  /// monic, degree e, coefficients over F_p from low to high (size e+1)
  std::vector<std::uint32_t> modulus;
  char symbol = 'g';

  std::uint32_t q() const;

  /// Built-in table for q in {4,8,9,16,25,27}; prime q needs no modulus.
  /// Other prime powers fall back to the lexicographically first
  /// irreducible of degree e.
  static FieldSpec standard(std::uint32_t q);
  static FieldSpec with_modulus(std::uint32_t p,
                                std::vector<std::uint32_t> modulus);
};

bool is_prime_u32(std::uint32_t n);

/**
 * @brief Table-driven arithmetic in F_q (q <= 256).
 *
 * Immutable after construction; share through FqPtr.
 */
class Fq {
 public:
  explicit Fq(FieldSpec spec);

  static std::shared_ptr<const Fq> make(std::uint32_t q);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t e() const { return spec_.e; }
  bool is_prime_field() const { return spec_.e == 1; }

  Fe zero() const { return 0; }
  Fe one() const { return 1; }
  /// the class of g (or 1 for a prime field)
  Fe gen() const { return spec_.e == 1 ? 1 : spec_.p; }

  Fe add(Fe a, Fe b) const { return add_[a * q_ + b]; }
  Fe sub(Fe a, Fe b) const { return add_[a * q_ + neg_[b]]; }
  Fe neg(Fe a) const { return neg_[a]; }
  Fe mul(Fe a, Fe b) const { return mul_[a * q_ + b]; }
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, std::uint64_t n) const;

  /// image of an integer in the prime subfield
  Fe from_int(long long n) const;
  /// coefficient of g^i in a
  std::uint32_t digit(Fe a, std::uint32_t i) const;
  Fe from_digits(const std::vector<std::uint32_t>& d) const;

  /// multiplicative order of a nonzero element
  std::uint32_t order(Fe a) const;
  /// a^(q/p); the inverse of the absolute Frobenius
  Fe pth_root(Fe a) const;

  bool same_as(const Fq& other) const;

 private:
  FieldSpec spec_;
  std::uint32_t q_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

using FqPtr = std::shared_ptr<const Fq>;

}  // namespace gl2

#endif
