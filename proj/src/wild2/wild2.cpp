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
#include "gl2/wild2/wild2.hpp"

#include <stdexcept>

namespace gl2 {

namespace {

RatFunc int_const(const FqPtr& f, int n) {
  Fe x = 0;
  for (int i = 0; i < n; ++i) x = f->add(x, 1);
  return RatFunc(APoly::constant(f, x));
}

void require_char2(const FqPtr& f) {
  if (f->p() != 2) throw std::domain_error("Artin-Schreier classes need characteristic 2");
}

void require_q2(const DrinfeldModule& dm) {
  if (dm.fq().q() != 2) throw std::domain_error("the wild ramification test is for q = 2");
  if (dm.rank() != 2) throw std::domain_error("the wild ramification test is for rank 2");
}

int v_inf(const RatFunc& u) { return valuation(u, Place::infinity()); }

}  // namespace

FXPoly resolvent_quadratic(const RatFunc& b, const RatFunc& c) {
  const FqPtr& f = b.field() ? b.field() : c.field();
  const RatFunc zero(f), one = int_const(f, 1);
  FXPoly cubic(zero, {c, b, zero, one});
  FXPoly deriv(zero, {b, zero, int_const(f, 3)});
  if (field_gcd(cubic, deriv).degree() > 0) throw std::domain_error("x^3 + b x + c is inseparable");
  return FXPoly(zero, {b.pow(3) + int_const(f, 9) * c * c, -(int_const(f, 3) * c), one});
}

RatFunc resolvent_as_constant(const RatFunc& b, const RatFunc& c) {
  const FqPtr& f = c.field();
  require_char2(f);
  if (c.is_zero()) throw std::domain_error("substitution needs c != 0");
  return b.pow(3) / (c * c) + int_const(f, 9);
}

RatFunc as_reduce(const RatFunc& u, int max_deg) {
  const FqPtr& f = u.field();
  require_char2(f);
  RatFunc r = u;
  for (;;) {
    if (r.is_zero()) return r;
    int v = v_inf(r);
    if (v >= 0 || v % 2 != 0) return r;
    int k = -v / 2;
    if (k > max_deg) return r;
    // leading coefficient at infinity and its square root (x -> x^(q/2) inverts squaring)
    Fe c = f->div(r.num().lead(), r.den().lead());
    Fe d = f->pow(c, f->q() / 2);
    APoly w = APoly::monomial(f, d, k);
    r = r + RatFunc(w * w + w);
  }
}

ASClass as_class(const RatFunc& u) {
  ASClass a;
  a.u = u;
  a.v_inf = v_inf(u);
  a.reduced = as_reduce(u);
  a.v_reduced = v_inf(a.reduced);
  a.ramified = a.v_reduced != kInfVal && a.v_reduced < 0 && a.v_reduced % 2 != 0;
  return a;
}

ASClass infinity_class(const DrinfeldModule& dm, Fe i) {
  require_q2(dm);
  const FqPtr& f = dm.field();
  RatFunc ti(APoly::t(f) + APoly::constant(f, i));
  return as_class(dm.j_invariant() / (ti * ti) + int_const(f, 1));
}

std::optional<bool> as_distinct(const RatFunc& u1, const RatFunc& u2) {
  const FqPtr& f = u1.field();
  require_char2(f);
  RatFunc s = u1 - u2;
  if (as_class(s).ramified) return true;
  if (s.is_poly()) {
    std::uint64_t count = 1;
    for (int i = 0; i <= kASMaxDegree; ++i) count *= f->q();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      APoly w = APoly::from_index(f, idx);
      if (w * w + w == s.num()) return false;
    }
  }
  return std::nullopt;
}

bool vinf_criterion(const DrinfeldModule& dm) {
  require_q2(dm);
  RatFunc j = dm.j_invariant();
  if (j.is_zero()) return false;
  int v = v_inf(j);
  return v % 2 != 0 && v <= -5;
}

Wild2Report wild2_report(const DrinfeldModule& dm) {
  require_q2(dm);
  Wild2Report r;
  RatFunc j = dm.j_invariant();
  r.v_inf_j = j.is_zero() ? kInfVal : v_inf(j);
  r.cls[0] = infinity_class(dm, 0);
  r.cls[1] = infinity_class(dm, 1);
  r.combined = as_class(r.cls[0].u + r.cls[1].u);
  r.distinct = as_distinct(r.cls[0].u, r.cls[1].u);
  r.vinf_criterion = vinf_criterion(dm);
  return r;
}

}  // namespace gl2
