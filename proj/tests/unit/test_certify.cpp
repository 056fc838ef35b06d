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
#include <functional>
#include <set>

#include "doctest.h"
#include "gl2/certify/certify.hpp"
#include "helpers.hpp"

using namespace gl2;
using gl2::testing::P;

namespace {

DrinfeldModule example_q2() { return DrinfeldModule::parse(Fq::make(2), "t,t^3,t^2+t+1"); }

DrinfeldModule example_odd(std::uint32_t q) {
  auto F = Fq::make(q);
  return DrinfeldModule::rank2(RatFunc(APoly::constant(F, 1)), RatFunc(-APoly::monomial(F, 1, q - 1)));
}

DrinfeldModule mod(std::uint32_t q, const char* text) { return DrinfeldModule::parse(Fq::make(q), text); }

// Every leaf must be a fact; collect them by label.
void leaves(const Certificate& c, std::vector<const Certificate*>& out) {
  if (c.premises.empty()) out.push_back(&c);
  for (const auto& p : c.premises) leaves(p, out);
}

const Certificate* find_claim(const Certificate& c, const std::string& claim) {
  if (c.claim() == claim) return &c;
  for (const auto& p : c.premises)
    if (auto r = find_claim(p, claim)) return r;
  return nullptr;
}

std::string field_of(const std::string& detail, const std::string& key) {
  auto pos = detail.find(key + "=");
  REQUIRE(pos != std::string::npos);
  pos += key.size() + 1;
  auto end = detail.find(' ', pos);
  return detail.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
}

// x^2 - a x + b has no root among residues mod lambda, by APoly arithmetic
bool brute_irreducible_mod(const APoly& a, const APoly& b, const AIdeal& lambda) {
  const FqPtr& f = lambda.field();
  for (std::uint64_t i = 0; i < lambda.norm(); ++i) {
    APoly r = APoly::from_index(f, i);
    if (((r * r - a * r + b) % lambda.gen()).is_zero()) return false;
  }
  return true;
}

// subgroup of (A/a)^x generated by det(Frob_p) = b_p over good primes p of degree <= maxdeg
std::size_t chebotarev_det_order(const DrinfeldModule& dm, const AIdeal& a, int maxdeg) {
  QuotRing R(a);
  std::set<QuotRing::R> H{1};
  PrimeWalker walk(dm.field());
  while (auto p = walk.next(maxdeg)) {
    if (p->divides(a) || !has_good_reduction(dm, *p)) continue;
    QuotRing::R g = R.from_apoly(frob_charpoly_skew(dm, *p).b % a.gen());
    if (H.count(g)) continue;
    std::vector<QuotRing::R> cur(H.begin(), H.end());
    for (QuotRing::R x = g; !H.count(x) || x != 1; x = R.mul(x, g))
      for (auto h : cur) H.insert(R.mul(h, x));
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<QuotRing::R> v(H.begin(), H.end());
      for (auto x : v)
        for (auto y : v)
          if (H.insert(R.mul(x, y)).second) grew = true;
    }
  }
  return H.size();
}

}  // namespace

TEST_CASE("determinant index") {
  auto F2 = Fq::make(2);
  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    APoly a2 = gl2::testing::random_nonzero(F2, 8, rng);
    CHECK(det_index(DrinfeldModule::rank2(gl2::testing::random_poly(F2, 6, rng), a2)) == 1);
  }
  CHECK(det_index(mod(3, "t,0,t")) == 2);
  CHECK(det_index(mod(3, "t,1,t")) == 2);
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 9u}) CHECK(det_index(example_odd(q)) == 1);

  for (std::uint32_t q : {3u, 5u, 7u}) {
    auto F = Fq::make(q);
    for (int n = 0; n < 100 / 3 + 1; ++n) {
      APoly a1 = gl2::testing::random_poly(F, 4, rng), a2 = gl2::testing::random_nonzero(F, 5, rng);
      APoly b = gl2::testing::random_nonzero(F, 2, rng);
      DrinfeldModule dm = DrinfeldModule::rank2(a1, a2);
      DrinfeldModule tw = dm.twist(RatFunc(b));
      REQUIRE(tw.a(2).is_poly());
      CHECK(det_index(dm) == det_index(tw));
    }
  }
  CHECK_THROWS_AS(det_index(DrinfeldModule::parse(F2, "t,1,1/t")), std::domain_error);
}

TEST_CASE("rank 1 index and det mod a") {
  auto F2 = Fq::make(2), F3 = Fq::make(3);
  CHECK(rank1_index(P(F2, "t"), AIdeal(P(F2, "t"))) == 1);
  CHECK(rank1_index(P(F3, "t^2"), AIdeal(P(F3, "t+1"))) == 1);
  // d = 1 and zeta = -1 has order 2, so (q-1)/e = 1
  CHECK(rank1_index(P(F3, "t"), AIdeal(P(F3, "t"))) == 1);
  CHECK(rank1_index(P(F3, "2*t"), AIdeal(P(F3, "t"))) == 2);
  CHECK(rank1_index(P(F3, "2*t"), AIdeal(P(F3, "t+1"))) == 1);

  DetMod m1 = det_surjective_mod(example_odd(3), AIdeal(P(F3, "t^3+2*t")));
  CHECK(m1.g == 1);
  CHECK(m1.surjective);
  DetMod m2 = det_surjective_mod(mod(3, "t,0,t"), AIdeal(P(F3, "t+1")));
  CHECK(m2.g == 1);
  CHECK(m2.index == 1);
  DetMod m3 = det_surjective_mod(mod(3, "t,0,t"), AIdeal(P(F3, "t")));
  CHECK(m3.g == 2);
  CHECK(m3.index == 2);
  CHECK(det_surjective_mod(example_q2(), AIdeal(P(F2, "t^2+t+1"))).g == 1);
}

TEST_CASE("determinant image against Frobenius determinants") {
  struct Case {
    DrinfeldModule dm;
    int maxdeg;
  };
  std::vector<Case> cases{{example_q2(), 6}, {example_odd(3), 4}, {mod(3, "t,1,t"), 4}, {mod(3, "t,1,2*t"), 4},
                          {mod(3, "t,t,t^2+1"), 4}};
  for (auto& c : cases) {
    const FqPtr& F = c.dm.field();
    for (const char* lv : {"t", "t+1", "t^2+t+1"}) {
      AIdeal a(P(F, lv));
      QuotRing R(a);
      const std::size_t units = R.units().size();
      const int idx = rank1_index(-c.dm.a(2).num(), a);
      std::size_t h = chebotarev_det_order(c.dm, a, c.maxdeg);
      CAPTURE(c.dm.str());
      CAPTURE(lv);
      CHECK((units / idx) % h == 0);
      CHECK(h * idx == units);
    }
  }
}

TEST_CASE("inertia witnesses") {
  InertiaConstraints deg2;
  deg2.need_deg_gt1 = true;
  auto w = find_inertia_witness(example_q2(), deg2);
  REQUIRE(w);
  CHECK(w->prime.str() == "(t^2+t+1)");
  CHECK(w->v == -1);
  CHECK(w->deg_gt1);
  for (std::uint32_t q : {3u, 4u, 5u}) {
    auto wo = find_inertia_witness(example_odd(q));
    REQUIRE(wo);
    CHECK(wo->prime.str() == "(t)");
    CHECK(wo->v == -static_cast<int>(q - 1));
    CHECK(wo->gcd_q_one);
    CHECK(wo->v == valuation(example_odd(q).j_invariant(), Place(wo->prime)));
  }
  CHECK_FALSE(find_inertia_witness(mod(3, "t,0,1")).has_value());
  InertiaConstraints ex;
  ex.exclude.push_back(w->prime);
  CHECK_FALSE(find_inertia_witness(example_q2(), ex).has_value());
}

TEST_CASE("mod lambda certificates") {
  auto F2 = Fq::make(2), F3 = Fq::make(3);
  Certificate c2 = modl_full_certificate(example_q2(), AIdeal(P(F2, "t")));
  CHECK(c2.proven());
  CHECK(c2.claim() == "ModLFull(t)");
  CHECK(field_of(c2.premises[1].detail, "p") == "(t^2+t+1)");
  CHECK(field_of(c2.premises[2].detail, "q") == "(t+1)");

  Certificate c3 = modl_full_certificate(example_odd(3), AIdeal(P(F3, "t")));
  CHECK(c3.proven());
  CHECK(field_of(c3.premises[2].detail, "q") == "(t+2)");

  CHECK_FALSE(modl_full_certificate(mod(3, "t,0,1"), AIdeal(P(F3, "t"))).proven());
  CHECK_FALSE(modl_full_certificate(mod(2, "t,0,1"), AIdeal(P(F2, "t+1"))).proven());
  CHECK_THROWS_AS(modl_full_certificate(example_q2(), AIdeal(P(F2, "t^2"))), std::domain_error);
}

TEST_CASE("certificate leaves re-verify") {
  std::vector<DrinfeldModule> mods{example_q2(), example_odd(3), mod(2, "t,t,t^3+t+1"), mod(3, "t,t,t^2+1")};
  int checked = 0;
  for (const auto& dm : mods) {
    const FqPtr& F = dm.field();
    for (int d = 1; d <= 2; ++d)
      for (const AIdeal& l : primes_of_degree(F, d)) {
        if (l.norm() > 4) continue;
        Certificate c = modl_full_certificate(dm, l);
        if (!c.proven()) continue;
        ++checked;
        AIdeal qq = parse_ideal(F, field_of(c.premises[2].detail, "q"));
        CHECK(qq != l);
        CHECK(has_good_reduction(dm, qq));
        FrobPoly fp = frob_charpoly_exact(dm, qq);
        CHECK(brute_irreducible_mod(fp.a, fp.b, l));
        AIdeal p = parse_ideal(F, field_of(c.premises[1].detail, "p"));
        ReductionReport rep = reduction_type(dm, p);
        CHECK(rep.kind == ReductionKind::StableRank1);
        int v = valuation(dm.j_invariant(), Place(p));
        CHECK(v < 0);
        CHECK(std::gcd(-v, static_cast<int>(F->q())) == 1);
        CHECK(det_surjective_mod(dm, l).index == 1);
      }
  }
  CHECK(checked >= 8);
}

TEST_CASE("lambda-adic certificates") {
  auto F2 = Fq::make(2), F3 = Fq::make(3);
  CHECK(lambda_adic_full_certificate(example_q2(), AIdeal(P(F2, "t"))).proven());
  CHECK(lambda_adic_full_certificate(example_q2(), AIdeal(P(F2, "t^2+t+1"))).proven());
  CHECK(lambda_adic_full_certificate(example_odd(3), AIdeal(P(F3, "t^2+1"))).proven());
  CertifyOptions no_vinf;
  no_vinf.use_vinf_criterion = false;
  Certificate c = lambda_adic_full_certificate(example_q2(), AIdeal(P(F2, "t")), no_vinf);
  CHECK_FALSE(c.proven());
  const Certificate* d = find_claim(c, "full_mod_lambda2");
  REQUIRE(d);
  CHECK_FALSE(d->proven());
  CHECK(find_claim(c, "ModLFull(t)")->proven());
  // larger residue fields do not use the v_inf criterion
  CHECK(lambda_adic_full_certificate(example_q2(), AIdeal(P(F2, "t^2+t+1")), no_vinf).proven());
}

TEST_CASE("all lambda certificates") {
  Certificate c2 = all_lambda_certificate(example_q2());
  CHECK(c2.proven());
  int explicit2 = 0;
  for (const auto& p : c2.premises) explicit2 += p.kind == ClaimKind::LambdaAdicFull;
  CHECK(explicit2 == 3);
  CHECK(field_of(c2.premises[0].detail, "B") == "2");

  Certificate c3 = all_lambda_certificate(example_odd(3));
  CHECK(c3.proven());
  int explicit3 = 0;
  for (const auto& p : c3.premises) explicit3 += p.kind == ClaimKind::LambdaAdicFull;
  CHECK(explicit3 == 6);

  CHECK_FALSE(all_lambda_certificate(mod(3, "t,0,1")).proven());
  CHECK_FALSE(all_lambda_certificate(mod(2, "t,1,1")).proven());
}

TEST_CASE("adelic certificates") {
  AdelicResult r2 = adelic_certificate(example_q2());
  CHECK(r2.cert.claim() == "AdelicFull");
  CHECK(r2.cert.proven());
  AdelicResult r3 = adelic_certificate(example_odd(3));
  CHECK(r3.cert.claim() == "AdelicFull");
  CHECK(r3.cert.proven());
  CHECK(adelic_certificate(example_odd(5)).cert.proven());

  AdelicResult neg = adelic_certificate(mod(3, "t,1,t"));
  CHECK_FALSE((neg.cert.claim() == "AdelicFull" && neg.cert.proven()));
  CHECK(neg.det_index == 2);
  CHECK(neg.index_lower == 2);
  CHECK((neg.index_upper == 0 || neg.index_upper == 2));

  CertifyOptions no_vinf;
  no_vinf.use_vinf_criterion = false;
  // degree-1 lambda need the v_inf criterion as well, so nothing above the det bound survives
  AdelicResult r4 = adelic_certificate(example_q2(), no_vinf);
  CHECK(r4.cert.claim() == "AdelicFull");
  CHECK_FALSE(r4.cert.proven());
  CHECK(r4.index_lower == 1);
  CHECK(r4.index_upper == 0);

  nlohmann::json j = r2.cert.to_json();
  CHECK(j["claim"] == "AdelicFull");
  CHECK(j["status"] == "Proven");
  CHECK(j["premises"].is_array());
  std::vector<const Certificate*> lv;
  leaves(r2.cert, lv);
  for (auto* l : lv) {
    CHECK(l->kind == ClaimKind::Fact);
    CHECK_FALSE(l->rule.empty());
  }
}

TEST_CASE("more search budget never loses a proof") {
  std::mt19937_64 rng(404);
  for (std::uint32_t q : {2u, 3u}) {
    auto F = Fq::make(q);
    for (int n = 0; n < 12; ++n) {
      APoly a1 = gl2::testing::random_poly(F, 3, rng), a2 = gl2::testing::random_nonzero(F, 3, rng);
      DrinfeldModule dm = DrinfeldModule::rank2(a1, a2);
      AIdeal l(P(F, "t+1"));
      bool prev = false;
      for (int cap = 1; cap <= 5; ++cap) {
        CertifyOptions o;
        o.irreducibility_max_degree = cap;
        bool now = modl_full_certificate(dm, l, o).proven();
        CHECK((!prev || now));
        prev = now;
      }
    }
  }
}

TEST_CASE("sieve membership") {
  auto F2 = Fq::make(2), F3 = Fq::make(3);
  SieveFlags f = sieve_membership(P(F2, "1"), P(F2, "t^2+t+1") * P(F2, "t^3+t+1"), 2);
  CHECK(f.in_r);
  CHECK(f.in_s);
  CHECK_FALSE(sieve_membership(P(F2, "1"), P(F2, "t^2+t+1"), 2).in_r);
  CHECK_FALSE(sieve_membership(P(F2, "t^2+t+1"), P(F2, "t^2+t+1") * P(F2, "t^3+t+1"), 2).in_r);
  for (int m = 2; m <= 20; ++m) CHECK(sieve_membership(P(F2, "1"), P(F2, "t^7+t"), m).in_s);
  CHECK_FALSE(sieve_membership(P(F2, "t^3+t+1"), P(F2, "t^3+t+1"), 2).in_s);
  CHECK(sieve_membership(P(F2, "t^3+t+1"), P(F2, "t^3+t+1"), 3).in_s);
  SieveFlags z = sieve_membership(P(F2, "1"), APoly(F2), 4);
  CHECK_FALSE(z.in_r);
  CHECK_FALSE(z.in_s);
  CHECK_FALSE(z.in_t);
  CHECK_FALSE(z.note.empty());
  CHECK_THROWS_AS(sieve_membership(P(F2, "1"), P(F2, "t"), 1), std::domain_error);

  // brute force over the definition of T_m
  auto brute_t = [](const APoly& a2, int m) {
    const long long q = a2.fq().q();
    const long long cap = m / (2 * (q - 1) * (q - 1) * (q + 1));
    for (int d = 1; d <= cap; ++d) {
      int ok = 0;
      std::uint64_t base = 1;
      for (int i = 0; i < d; ++i) base *= q;
      for (std::uint64_t i = 0; i < base; ++i) {
        APoly g = APoly::from_index(a2.field(), base + i);
        if (gl2::testing::brute_irreducible(g) && !(a2 % g).is_zero()) ++ok;
      }
      if (ok >= 2) return true;
    }
    return false;
  };
  CHECK_FALSE(sieve_membership(P(F2, "1"), P(F2, "t^3"), 12).in_t);
  CHECK(sieve_membership(P(F2, "1"), P(F2, "t^3+t+1"), 12).in_t);
  std::mt19937_64 rng(5);
  for (int n = 0; n < 60; ++n) {
    const FqPtr& F = n % 2 ? F2 : F3;
    APoly a2 = gl2::testing::random_nonzero(F, 6, rng);
    int m = 6 + static_cast<int>(rng() % 60);
    CHECK(sieve_membership(P(F, "1"), a2, m).in_t == brute_t(a2, m));
  }
}
