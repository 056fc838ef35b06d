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
#ifndef GL2_DENSITY_DENSITY_HPP
#define GL2_DENSITY_DENSITY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "gl2/algebra/ideal.hpp"

namespace gl2 {

enum class SetKind { R, S, T, C, ModLFullCertified, DetIndexEquals };

/// A subset of A^2 with a decidable membership test.
struct SetDescriptor {
  SetKind kind = SetKind::R;
  int m = 2;                     // S_m, T_m
  std::optional<AIdeal> lambda;  // ModLFullCertified
  int k = 1;                     // DetIndexEquals

  /// "R", "S_12", "T_12", "C", "ModLFullCertified(t)", "DetIndexEquals(2)"
  std::string name() const;
  /// inverse of name(); lambda needs the field
  static SetDescriptor parse(const FqPtr& f, const std::string& text);
  bool contains(const APoly& a1, const APoly& a2) const;
};

struct DensityMode {
  bool exact = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  static DensityMode Exact() { return {}; }
  static DensityMode Sampled(std::uint64_t n, std::uint64_t seed, unsigned threads = 1) {
    return {false, n, seed, threads};
  }
};

struct DensityEstimate {
  std::string set;
  std::uint32_t q = 0;
  int d = 0;
  DensityMode mode;
  std::uint64_t count = 0;
  /// q^(2(d+1)) in exact mode, the number of samples otherwise
  std::uint64_t total = 0;
  double ratio = 0;

  /// sqrt(p(1-p)/n) for sampled estimates, 0 for exact ones
  double std_error() const;
  std::string csv_row() const;
};

/// "set,q,d,mode,count,total,ratio"
std::string csv_header();

/// largest q^(2(d+1)) accepted in exact mode
constexpr std::uint64_t kExactCap = 100000000;

/// q^(2(d+1)); std::length_error past 2^63
std::uint64_t pair_space_size(std::uint32_t q, int d);

/// the pair with index idx in [0, q^(2(d+1))): a1 from the low digits, a2 from the high ones
std::pair<APoly, APoly> pair_from_index(const FqPtr& f, int d, std::uint64_t idx);

/// the i-th sampled pair; depends only on (seed, i)
std::pair<APoly, APoly> sample_pair(const FqPtr& f, int d, std::uint64_t seed, std::uint64_t i, bool nonzero_a2 = false);

/// std::length_error when exact mode exceeds kExactCap
DensityEstimate count_set(const FqPtr& f, const SetDescriptor& desc, int d, const DensityMode& mode);

/// sampled rate of certified mod-lambda fullness over pairs with a_2 != 0
DensityEstimate surjectivity_scan(const FqPtr& f, const AIdeal& lambda, int d, std::uint64_t n, std::uint64_t seed,
                                  unsigned threads = 1);

/// (q-1)^2 q (q^(2d)-1)/(q^2-1), the size of C in A^2(d)
std::uint64_t c_count_formula(std::uint32_t q, int d);

}  // namespace gl2

#endif
