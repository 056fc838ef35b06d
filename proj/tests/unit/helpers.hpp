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
#ifndef GL2_TESTS_HELPERS_HPP
#define GL2_TESTS_HELPERS_HPP

#include <random>

#include "gl2/algebra/apoly.hpp"
#include "gl2/algebra/text.hpp"

namespace gl2::testing {

inline APoly P(const FqPtr& f, const char* s) { return parse_apoly(f, s); }

inline APoly random_poly(const FqPtr& f, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<std::uint32_t> c(0, f->q() - 1);
  std::vector<Fe> v(deg(rng) + 1);
  for (auto& x : v) x = c(rng);
  return APoly(f, std::move(v));
}

inline APoly random_nonzero(const FqPtr& f, int max_deg, std::mt19937_64& rng) {
  for (;;) {
    APoly a = random_poly(f, max_deg, rng);
    if (!a.is_zero()) return a;
  }
}

// trial division by every monic polynomial of degree 1..deg/2
inline bool brute_irreducible(const APoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  const std::uint64_t q = f.fq().q();
  std::uint64_t base = 1;
  for (int k = 1; 2 * k <= n; ++k) {
    base *= q;
    for (std::uint64_t i = 0; i < base; ++i) {
      APoly g = APoly::from_index(f.field(), base + i);
      if ((f % g).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace gl2::testing

#endif
