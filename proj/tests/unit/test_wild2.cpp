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
#include "doctest.h"
#include "gl2/wild2/wild2.hpp"
#include "helpers.hpp"

using namespace gl2;
using gl2::testing::P;

namespace {

RatFunc R(const FqPtr& f, const char* num, const char* den = "1") { return RatFunc(P(f, num), P(f, den)); }

RatFunc random_rf(const FqPtr& f, std::mt19937_64& rng) {
  return RatFunc(gl2::testing::random_poly(f, 3, rng), gl2::testing::random_nonzero(f, 2, rng));
}

FXPoly derivative(const FXPoly& g) {
  std::vector<RatFunc> c;
  for (int i = 1; i <= g.degree(); ++i) {
    RatFunc k(g.zero());
    for (int j = 0; j < i; ++j) k += g.coeff(i);
    c.push_back(k);
  }
  return FXPoly(g.zero(), c);
}

// (-1)^(n(n-1)/2) Res(g, g') for monic g; the sign is -1 for n = 2 and n = 3
RatFunc disc(const FXPoly& g) {
  RatFunc one(APoly::constant(g.zero().field(), 1));
  return -resultant(g, derivative(g), one);
}

DrinfeldModule example_q2() { return DrinfeldModule::parse(Fq::make(2), "t,t^3,t^2+t+1"); }

}  // namespace

TEST_CASE("resolvent quadratic") {
  auto F5 = Fq::make(5);
  FXPoly r = resolvent_quadratic(RatFunc(F5), R(F5, "1"));
  CHECK(r == FXPoly(RatFunc(F5), {R(F5, "4"), R(F5, "2"), R(F5, "1")}));  // x^2 - 3x + 9 mod 5

  auto F7 = Fq::make(7);
  CHECK(resolvent_quadratic(RatFunc(F7), R(F7, "1")) == FXPoly(RatFunc(F7), {R(F7, "2"), R(F7, "4"), R(F7, "1")}));

  auto F3 = Fq::make(3);
  CHECK_THROWS_AS(resolvent_quadratic(RatFunc(F3), R(F3, "t")), std::domain_error);
  auto F2 = Fq::make(2);
  // x^3 + t^2 x = x (x + t)^2
  CHECK_THROWS_AS(resolvent_quadratic(R(F2, "t^2"), RatFunc(F2)), std::domain_error);
}

TEST_CASE("resolvent discriminant equals cubic discriminant") {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    auto F = Fq::make(q);
    std::mt19937_64 rng(500 + q);
    RatFunc zero(F), one(APoly::constant(F, 1));
    int done = 0;
    while (done < 50) {
      RatFunc b = random_rf(F, rng), c = random_rf(F, rng);
      FXPoly cubic(zero, {c, b, zero, one});
      if (field_gcd(cubic, derivative(cubic)).degree() > 0) {
        CHECK_THROWS_AS(resolvent_quadratic(b, c), std::domain_error);
        continue;
      }
      FXPoly r2 = resolvent_quadratic(b, c);
      CHECK(disc(r2) == disc(cubic));
      ++done;
    }
  }
}

TEST_CASE("char 2 substitution gives the Artin-Schreier form") {
  DrinfeldModule dm = example_q2();
  auto F = dm.field();
  for (Fe i : {0u, 1u}) {
    RatFunc ti(APoly::t(F) + APoly::constant(F, i));
    RatFunc b = dm.a(1) / dm.a(2), c = ti / dm.a(2);
    RatFunc u = resolvent_as_constant(b, c);
    CHECK(u == dm.j_invariant() / (ti * ti) + R(F, "1"));
    // R_2(c y) / c^2 = y^2 + y + u
    FXPoly r2 = resolvent_quadratic(b, c);
    CHECK(r2.coeff(1) / c == R(F, "1"));
    CHECK(r2.coeff(0) / (c * c) == u);
    CHECK(infinity_class(dm, i).u == u);
  }
  CHECK_THROWS_AS(resolvent_as_constant(R(F, "t"), RatFunc(F)), std::domain_error);
}

TEST_CASE("Artin-Schreier reduction") {
  auto F = Fq::make(2);
  CHECK(as_reduce(R(F, "t^4+t")).is_zero());
  CHECK(as_reduce(R(F, "t^5+t^4")) == R(F, "t^5+t^4"));
  CHECK(as_reduce(R(F, "t^2")) == R(F, "t"));
  CHECK(as_reduce(R(F, "1", "t")) == R(F, "1", "t"));
  ASClass even = as_class(R(F, "t^6+t^5"));
  CHECK(even.v_inf == -6);
  CHECK(even.v_reduced == -5);
  CHECK(even.ramified);
  CHECK_FALSE(as_class(R(F, "t^6+t^3")).ramified);
  CHECK(as_class(R(F, "t^6+t^3")).reduced.is_zero());

  auto F4 = Fq::make(4);
  RatFunc a(APoly::monomial(F4, 2, 4));
  CHECK(as_reduce(a + R(F4, "t^3")) == as_class(a + R(F4, "t^3")).reduced);
  CHECK(as_class(a + R(F4, "t^3")).v_reduced == -3);
  CHECK_THROWS_AS(as_reduce(R(Fq::make(3), "t")), std::domain_error);
}

TEST_CASE("infinity classes of the q=2 example") {
  DrinfeldModule dm = example_q2();
  auto F = dm.field();
  CHECK(dm.j_invariant() == R(F, "t^9", "t^2+t+1"));
  ASClass c0 = infinity_class(dm, 0), c1 = infinity_class(dm, 1);
  CHECK(c0.u == R(F, "t^9", "t^4+t^3+t^2") + R(F, "1"));
  CHECK(c0.v_inf == -5);
  CHECK(c1.v_inf == -5);
  CHECK(c0.ramified);
  CHECK(c1.ramified);

  Wild2Report w = wild2_report(dm);
  CHECK(w.v_inf_j == -7);
  CHECK(w.combined.u == dm.j_invariant() / R(F, "t^4+t^2"));
  CHECK(w.combined.v_inf == -3);
  CHECK(w.combined.ramified);
  REQUIRE(w.distinct.has_value());
  CHECK(*w.distinct);
  CHECK(as_distinct(c0.u, w.combined.u) == std::optional<bool>(true));
  CHECK(as_distinct(c1.u, w.combined.u) == std::optional<bool>(true));
  CHECK(w.vinf_criterion);
}

TEST_CASE("Artin-Schreier equivalence") {
  auto F = Fq::make(2);
  std::mt19937_64 rng(31);
  for (int n = 0; n < 20; ++n) {
    RatFunc u = random_rf(F, rng);
    APoly w = gl2::testing::random_poly(F, 6, rng);
    CHECK(as_distinct(u, u + RatFunc(w * w + w)) == std::optional<bool>(false));
  }
  CHECK_FALSE(as_distinct(R(F, "1", "t"), RatFunc(F)).has_value());
}

TEST_CASE("wild ramification criterion") {
  auto F = Fq::make(2);
  CHECK(vinf_criterion(example_q2()));
  std::mt19937_64 rng(8);
  for (int d2 = 4; d2 <= 7; ++d2) {
    for (int n = 0; n < 5; ++n) {
      APoly a1 = gl2::testing::random_poly(F, d2 - 2, rng) + APoly::monomial(F, 1, d2 - 1);
      APoly a2 = gl2::testing::random_poly(F, d2 - 1, rng) + APoly::monomial(F, 1, d2);
      DrinfeldModule dm = DrinfeldModule::rank2(a1, a2);
      CHECK(wild2_report(dm).v_inf_j == -2 * d2 + 3);
      CHECK(vinf_criterion(dm));
    }
  }
  DrinfeldModule v3 = DrinfeldModule::rank2(R(F, "t^2"), R(F, "t^3"));
  CHECK(wild2_report(v3).v_inf_j == -3);
  CHECK_FALSE(vinf_criterion(v3));

  for (int n = 0; n < 10; ++n) {
    DrinfeldModule dm = DrinfeldModule::rank2(random_rf(F, rng) + R(F, "t^4"), gl2::testing::random_nonzero(F, 4, rng));
    RatFunc b = random_rf(F, rng);
    if (b.is_zero()) continue;
    CHECK(vinf_criterion(dm) == vinf_criterion(dm.twist(b)));
  }

  auto F3 = Fq::make(3);
  DrinfeldModule odd = DrinfeldModule::rank2(R(F3, "1"), R(F3, "t"));
  CHECK_THROWS_AS(vinf_criterion(odd), std::domain_error);
  CHECK_THROWS_AS(infinity_class(odd, 0), std::domain_error);
  CHECK_THROWS_AS(wild2_report(odd), std::domain_error);
}
