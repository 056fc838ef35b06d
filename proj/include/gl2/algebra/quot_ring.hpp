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
#ifndef GL2_ALGEBRA_QUOT_RING_HPP
#define GL2_ALGEBRA_QUOT_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gl2/algebra/ideal.hpp"

namespace gl2 {

/**
 * @brief The finite ring A/a with elements numbered 0..N-1.
 *
 * Element i is the residue polynomial whose base-q digits are those of i,
 * so 0 and 1 are the ring zero and one.
 */
class QuotRing {
 public:
  using R = std::uint32_t;
  static constexpr std::uint32_t kMaxSize = 1u << 16;

  explicit QuotRing(const AIdeal& a);

  const AIdeal& ideal() const { return a_; }
  const FqPtr& field() const { return a_.field(); }
  std::uint32_t size() const { return n_; }

  R add(R x, R y) const;
  R sub(R x, R y) const;
  R neg(R x) const;
  R mul(R x, R y) const;
  bool is_unit(R x) const { return inv_[x] != kNone; }
  R inv(R x) const;
  R pow(R x, std::uint64_t n) const;

  R from_apoly(const APoly& p) const;
  APoly to_apoly(R x) const;
  R from_fq(Fe c) const { return c; }

  std::vector<R> units() const;
  std::string str(R x) const { return to_apoly(x).str(); }

 private:
  static constexpr R kNone = 0xffffffffu;

  AIdeal a_;
  std::uint32_t n_ = 0;
  std::uint32_t q_ = 0;
  int deg_ = 0;
  std::vector<std::uint16_t> mul_;  // full table when small
  std::vector<R> inv_;
};

using QuotRingPtr = std::shared_ptr<const QuotRing>;

}  // namespace gl2

#endif
