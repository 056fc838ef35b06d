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
#ifndef GL2_WILD2_WILD2_HPP
#define GL2_WILD2_WILD2_HPP

#include <optional>

#include "gl2/algebra/upoly.hpp"
#include "gl2/drinfeld/module.hpp"

namespace gl2 {

/// x^2 - 3c x + (b^3 + 9c^2) for the cubic x^3 + b x + c; std::domain_error if the cubic is inseparable
FXPoly resolvent_quadratic(const RatFunc& b, const RatFunc& c);

/// u with R_2(c y) / c^2 = y^2 - y + u in characteristic 2, c != 0
RatFunc resolvent_as_constant(const RatFunc& b, const RatFunc& c);

inline constexpr int kASMaxDegree = 8;

/// u + w^2 + w with polynomial w of degree <= max_deg chosen to clear even poles at infinity
RatFunc as_reduce(const RatFunc& u, int max_deg = kASMaxDegree);

/// The Artin-Schreier extension x^2 - x + u of F = F_2(t) at infinity.
struct ASClass {
  RatFunc u;  // as given
  RatFunc reduced;
  int v_inf = 0;  // of u
  int v_reduced = 0;
  /// v_inf of the reduced representative is negative and odd; false means inconclusive
  bool ramified = false;
};

ASClass as_class(const RatFunc& u);

/// class of x^2 - x + j/(t+i)^2 + 1; q must be 2
ASClass infinity_class(const DrinfeldModule& dm, Fe i);

/// true: u1, u2 define different classes; false: they differ by w^2+w with deg w <= 8; nullopt otherwise
std::optional<bool> as_distinct(const RatFunc& u1, const RatFunc& u2);

/// v_inf(j) odd and <= -5; q must be 2
bool vinf_criterion(const DrinfeldModule& dm);

struct Wild2Report {
  int v_inf_j = 0;
  ASClass cls[2];
  ASClass combined;
  std::optional<bool> distinct;
  bool vinf_criterion = false;
};

Wild2Report wild2_report(const DrinfeldModule& dm);

}  // namespace gl2

#endif
