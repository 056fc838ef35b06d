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
#include "gl2/algebra/upoly.hpp"

namespace gl2 {

APoly resultant_x(const AXPoly& P, const AXPoly& Q) {
  if (P.is_zero() || Q.is_zero()) throw std::domain_error("resultant of a zero polynomial");
  const FqPtr& f = P.zero().field() ? P.zero().field() : P.lead().field();
  return resultant(P, Q, APoly::constant(f, 1));
}

FXPoly to_fx(const AXPoly& P) {
  return P.map([](const APoly& a) { return RatFunc(a); });
}

}  // namespace gl2
