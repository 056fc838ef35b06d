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
#include "gl2/drinfeld/module.hpp"
#include "helpers.hpp"

using namespace gl2;
using gl2::testing::P;

namespace {

DrinfeldModule example_q2() { return DrinfeldModule::parse(Fq::make(2), "t,t^3,t^2+t+1"); }

DrinfeldModule example_odd(std::uint32_t q) {
  auto F = Fq::make(q);
  return DrinfeldModule::rank2(RatFunc(APoly::constant(F, 1)), RatFunc(-APoly::monomial(F, 1, q - 1)));
}

// twist search straight from the definitions of good and stable reduction
ReductionKind oracle_kind(int v1, bool a1_zero, int v2, long long q) {
  for (long long k = -200; k <= 200; ++k) {
    long long w1 = a1_zero ? 1 : v1 + k * (q - 1), w2 = v2 + k * (q * q - 1);
    if (w2 == 0 && w1 >= 0) return ReductionKind::Good;
  }
  for (long long k = -200; k <= 200; ++k) {
    if (a1_zero) break;
    long long w1 = v1 + k * (q - 1), w2 = v2 + k * (q * q - 1);
    if (w1 == 0 && w2 > 0) return ReductionKind::StableRank1;
  }
  if (a1_zero || (q + 1) * v1 - v2 >= 0) return ReductionKind::PotentiallyGoodNotGood;
  return ReductionKind::NotStableOverBase;
}

}  // namespace

TEST_CASE("skew multiplication") {
  auto F2 = Fq::make(2);
  FracCoeffs R(F2);
  GlobalSkew tau = GlobalSkew::tau_power(R, 1);
  GlobalSkew t = GlobalSkew::constant(R, RatFunc(P(F2, "t")));
  CHECK((tau * t).str() == "(t^2)*tau");
  GlobalSkew s = t + tau;
  CHECK((s * s).str() == "t^2 + (t^2+t)*tau + tau^2");
  CHECK(s * GlobalSkew::constant(R, R.one()) == s);
  auto F3 = Fq::make(3);
  CHECK_THROWS_AS(s * GlobalSkew::tau_power(FracCoeffs(F3), 1), std::domain_error);
}

TEST_CASE("phi_of") {
  auto F2 = Fq::make(2);
  DrinfeldModule carlitz(F2, {RatFunc(APoly::constant(F2, 1))});
  CHECK(carlitz.phi_of(P(F2, "t")) == carlitz.phi_t());
  CHECK(carlitz.phi_of(P(F2, "t^2")).str() == "t^2 + (t^2+t)*tau + tau^2");
  DrinfeldModule dm = example_q2();
  APoly a = P(F2, "t^2+1"), b = P(F2, "t+1");
  CHECK(dm.phi_of(a + b) == dm.phi_of(a) + dm.phi_of(b));
  CHECK(dm.phi_of(a * b) == dm.phi_of(a) * dm.phi_of(b));
  CHECK(dm.phi_of(a).degree() == 4);
  CHECK(dm.phi_of(a).d0() == RatFunc(a));
  CHECK(dm.phi_of(APoly(F2)).is_zero());
}

TEST_CASE("ring homomorphism over residue fields") {
  std::mt19937_64 rng(42);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto F = Fq::make(q);
    for (int it = 0; it < 10; ++it) {
      APoly g = gl2::testing::random_nonzero(F, 3, rng);
      if (g.degree() < 1) continue;
      auto fac = factor_poly(g);
      AIdeal p(fac[0].first);
      FFPtr K = FiniteField::residue(p);
      std::vector<FiniteField::Elem> c{K->from_apoly(APoly::t(F))};
      c.push_back(K->from_apoly(gl2::testing::random_poly(F, 3, rng)));
      FiniteField::Elem top;
      do top = K->from_apoly(gl2::testing::random_poly(F, 3, rng));
      while (FiniteField::is_zero(top));
      c.push_back(top);
      ReducedModule red(K, p, c);
      for (int j = 0; j < 3; ++j) {
        APoly a = gl2::testing::random_poly(F, 4, rng), b = gl2::testing::random_poly(F, 4, rng);
        CHECK(red.phi_of(a * b) == red.phi_of(a) * red.phi_of(b));
        CHECK(red.phi_of(a + b) == red.phi_of(a) + red.phi_of(b));
        CHECK(red.phi_of(a).d0() == red.iota(a));
        if (!a.is_zero()) CHECK(red.phi_of(a).degree() == 2 * a.degree());
        // additive evaluation is F_q-linear
        FFSkew f = red.phi_of(a);
        auto x = K->from_apoly(gl2::testing::random_poly(F, 3, rng));
        auto y = K->from_apoly(gl2::testing::random_poly(F, 3, rng));
        Fe s = static_cast<Fe>(rng() % q);
        CHECK(f.eval(K->add(x, y)) == K->add(f.eval(x), f.eval(y)));
        CHECK(f.eval(K->scal(s, x)) == K->scal(s, f.eval(x)));
      }
    }
  }
}

TEST_CASE("j-invariant") {
  CHECK(example_q2().j_invariant().str() == "t^9/(t^2+t+1)");
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    auto F = Fq::make(q);
    RatFunc expect(APoly::constant(F, F->neg(1)), APoly::monomial(F, 1, q - 1));
    CHECK(example_odd(q).j_invariant() == expect);
  }
  auto F3 = Fq::make(3);
  CHECK(DrinfeldModule::parse(F3, "t,0,t").j_invariant().is_zero());
}

TEST_CASE("reduction types of the examples") {
  auto F2 = Fq::make(2);
  DrinfeldModule dm = example_q2();
  ReductionReport r = reduction_type(dm, AIdeal(P(F2, "t^2+t+1")));
  CHECK(r.kind == ReductionKind::StableRank1);
  CHECK(r.vj == -1);
  CHECK(r.potential_rank == 1);
  CHECK(reduction_type(dm, AIdeal(P(F2, "t"))).kind == ReductionKind::Good);
  auto bad = bad_primes(dm);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].str() == "(t^2+t+1)");
  for (std::uint32_t q : {3u, 4u, 5u}) {
    auto F = Fq::make(q);
    ReductionReport s = reduction_type(example_odd(q), AIdeal(P(F, "t")));
    CHECK(s.kind == ReductionKind::StableRank1);
    CHECK(s.vj == -static_cast<int>(q - 1));
    CHECK(bad_primes(example_odd(q)).size() == 1);
  }
  CHECK_THROWS_AS(reduction_type(dm, AIdeal(P(F2, "t^2+t"))), std::domain_error);
}

TEST_CASE("reduction type against a twist search") {
  std::mt19937_64 rng(8);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto F = Fq::make(q);
    std::vector<AIdeal> primes = primes_of_degree(F, 1);
    for (int it = 0; it < 60; ++it) {
      const AIdeal& p = primes[it % primes.size()];
      int e1 = static_cast<int>(rng() % 9) - 3, e2 = static_cast<int>(rng() % 13) - 4;
      bool a1_zero = it % 7 == 0;
      RatFunc pi(p.gen());
      RatFunc a1 = a1_zero ? RatFunc(F) : pi.pow(e1) * RatFunc(p.gen() * p.gen() + APoly::constant(F, 1));
      RatFunc a2 = pi.pow(e2) * RatFunc(APoly::constant(F, 1) + p.gen());
      DrinfeldModule dm = DrinfeldModule::rank2(a1, a2);
      ReductionReport rep = reduction_type(dm, p);
      CHECK(rep.kind == oracle_kind(rep.v1, a1_zero, rep.v2, q));
      // invariance under twisting by random b
      RatFunc b(gl2::testing::random_nonzero(F, 3, rng), gl2::testing::random_nonzero(F, 3, rng));
      ReductionReport tw = reduction_type(dm.twist(b), p);
      CHECK(tw.kind == rep.kind);
      CHECK(tw.potential_rank == rep.potential_rank);
      CHECK(tw.vj == rep.vj);
      CHECK(dm.twist(b).j_invariant() == dm.j_invariant());
    }
  }
}

TEST_CASE("torsion polynomials") {
  auto F2 = Fq::make(2);
  DrinfeldModule dm = example_q2();
  ReducedModule red = reduce(dm, AIdeal(P(F2, "t")));
  CHECK(torsion_polynomial(red, AIdeal(P(F2, "t+1"))).additive_str() == "x^4+x");
  // reduction at (t) itself: t maps to 0
  CHECK(red.phi_t().additive_str() == "x^4");
  CHECK_THROWS_AS(torsion_polynomial(red, AIdeal(P(F2, "t"))), std::domain_error);
  DrinfeldModule carlitz(F2, {RatFunc(APoly::constant(F2, 1))});
  CHECK(torsion_polynomial(carlitz, AIdeal(P(F2, "t"))).additive_str() == "x^2+(t)*x");
  CHECK_THROWS_AS(reduce(dm, AIdeal(P(F2, "t^2+t+1"))), std::domain_error);
}

TEST_CASE("parse errors") {
  auto F3 = Fq::make(3);
  CHECK_THROWS_AS(DrinfeldModule::parse(F3, "t+1,1,t"), std::invalid_argument);
  CHECK_THROWS_AS(DrinfeldModule::parse(F3, "t,1,0"), std::domain_error);
  CHECK(DrinfeldModule::parse(F3, "t,1,2*t^2").str() == "t,1,2*t^2");
}
