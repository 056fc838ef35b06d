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
#include <algorithm>
#include <random>

#include "doctest.h"
#include "gl2/groups/groups.hpp"
#include "helpers.hpp"

using namespace gl2;
using gl2::testing::P;

namespace {

constexpr std::size_t kBig = 1 << 20;

RingPtr ring(std::uint32_t q, const char* g) { return std::make_shared<const QuotRing>(AIdeal(P(Fq::make(q), g))); }

// every matrix over R, filtered
template <class Pred>
std::vector<std::uint64_t> enumerate(const QuotRing& R, Pred keep) {
  std::vector<std::uint64_t> out;
  const std::uint32_t n = R.size();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t d = 0; d < n; ++d) {
          QuotMat m = make_mat(R, a, b, c, d);
          if (keep(m)) out.push_back(m.key());
        }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("closure") {
  auto F3 = ring(3, "t");
  CHECK(closure(F3, {mat_identity(*F3)}).order() == 1);
  CHECK(closure(F3, {}).order() == 1);
  CHECK(closure(F3, {make_mat(*F3, 1, 1, 0, 1), make_mat(*F3, 1, 0, 1, 1)}).order() == 24);
  auto F2 = ring(2, "t");
  MatGroup g2 = closure(F2, {make_mat(*F2, 1, 1, 0, 1), make_mat(*F2, 0, 1, 1, 0)});
  CHECK(g2.order() == 6);
  CHECK(g2.keys() == enumerate(*F2, [](const QuotMat& m) { return m.det != 0; }));
  CHECK_THROWS_AS(closure(F3, {make_mat(*F3, 1, 1, 1, 1)}), std::domain_error);
  auto R = ring(5, "t^2");
  CHECK_THROWS_AS(general_linear(R), ResourceError);
}

TEST_CASE("group orders against enumeration") {
  for (auto [q, g] : std::vector<std::pair<std::uint32_t, const char*>>{
           {2, "t"}, {2, "t^2"}, {2, "t^2+t"}, {3, "t"}, {3, "t^2"}, {2, "t^2+t+1"}, {4, "t"}, {5, "t"}}) {
    auto R = ring(q, g);
    auto gl = enumerate(*R, [&](const QuotMat& m) { return R->is_unit(m.det); });
    auto sl = enumerate(*R, [](const QuotMat& m) { return m.det == 1; });
    CHECK(gl.size() == gl2_order(R->ideal()));
    CHECK(sl.size() == sl2_order(R->ideal()));
    CHECK(general_linear(R, kBig).keys() == gl);
    CHECK(special_linear(R, kBig).keys() == sl);
  }
}

TEST_CASE("commutator subgroups") {
  auto F2 = ring(2, "t"), F3 = ring(3, "t");
  MatGroup torus = closure(F3, {make_mat(*F3, 2, 0, 0, 1), make_mat(*F3, 1, 0, 0, 2)});
  CHECK(commutator_subgroup(torus).order() == 1);
  MatGroup c2 = commutator_subgroup(general_linear(F2));
  CHECK(c2.order() == 3);
  CHECK(special_linear(F2).order() / c2.order() == 2);
  CHECK(commutator_subgroup(general_linear(F3)).keys() == special_linear(F3).keys());
}

TEST_CASE("finite level commutator structure") {
  // N(lambda) = 2: the commutator is the preimage of [GL_2(F_2), GL_2(F_2)] in SL_2
  for (const char* g : {"t", "t+1"}) {
    auto F = Fq::make(2);
    AIdeal lam(P(F, g));
    auto R2 = std::make_shared<const QuotRing>(lam.pow(2));
    MatGroup H = commutator_subgroup(general_linear(R2, kBig), kBig);
    auto expect = enumerate(*R2, [&](const QuotMat& m) { return m.det == 1 && in_residual_commutator(*R2, m, lam); });
    CHECK(H.keys() == expect);
    CHECK(special_linear(R2, kBig).order() == 2 * H.order());
  }
  // N(lambda) in {3, 4}: the commutator is SL_2
  for (auto [q, g] : std::vector<std::pair<std::uint32_t, const char*>>{{3, "t"}, {3, "t+1"}, {4, "t"}, {2, "t^2+t+1"}}) {
    AIdeal lam(P(Fq::make(q), g));
    auto R2 = std::make_shared<const QuotRing>(lam.pow(2));
    CHECK(commutator_subgroup(general_linear(R2, kBig), kBig).keys() == special_linear(R2, kBig).keys());
  }
}

TEST_CASE("SL2 mod lambda^2 is perfect for N(lambda) in {4,5}") {
  for (auto [q, g] : std::vector<std::pair<std::uint32_t, const char*>>{{4, "t"}, {2, "t^2+t+1"}, {5, "t"}, {5, "t+3"}}) {
    AIdeal lam(P(Fq::make(q), g));
    auto R2 = std::make_shared<const QuotRing>(lam.pow(2));
    MatGroup S = special_linear(R2, kBig);
    CHECK(commutator_subgroup(S, kBig).order() == S.order());
  }
  // fails for N = 3 and N = 2
  AIdeal l3(P(Fq::make(3), "t"));
  auto R3 = std::make_shared<const QuotRing>(l3.pow(2));
  MatGroup S3 = special_linear(R3, kBig);
  CHECK(commutator_subgroup(S3, kBig).order() < S3.order());
}

TEST_CASE("beta kernel equals the commutator at (t)(t+1)") {
  auto F = Fq::make(2);
  auto R = ring(2, "t^2+t");
  AIdeal l0(P(F, "t")), l1(P(F, "t+1"));
  MatGroup H = commutator_subgroup(general_linear(R));
  auto ker = enumerate(*R, [&](const QuotMat& m) {
    return m.det == 1 && in_residual_commutator(*R, m, l0) && in_residual_commutator(*R, m, l1);
  });
  CHECK(H.keys() == ker);
  CHECK(H.order() == 9);
  CHECK(gl2_order(R->ideal()) / H.order() == 4);
}

TEST_CASE("containing SL2 mod lambda") {
  auto F3 = ring(3, "t");
  CHECK(contains_sl2_modl(general_linear(F3)));
  MatGroup torus = closure(F3, {make_mat(*F3, 2, 0, 0, 1), make_mat(*F3, 1, 0, 0, 2)});
  CHECK(!contains_sl2_modl(torus));
  auto F4 = ring(4, "t");
  std::vector<QuotMat> borel;
  for (QuotRing::R x : {1u, 2u}) borel.push_back(make_mat(*F4, 1, x, 0, 1));
  borel.push_back(make_mat(*F4, 2, 0, 0, 1));
  borel.push_back(make_mat(*F4, 1, 0, 0, 2));
  MatGroup B = closure(F4, borel);
  CHECK(B.order() % 4 == 0);
  CHECK(!is_irreducible(B));
  CHECK(!contains_sl2_modl(B));
  CHECK_THROWS_AS(is_irreducible(general_linear(ring(2, "t^2"))), std::domain_error);
}

TEST_CASE("criterion agrees with exhaustive containment") {
  // every subgroup of GL_2(F_2) is generated by at most two elements
  auto F2 = ring(2, "t");
  MatGroup all = general_linear(F2);
  for (std::size_t i = 0; i < all.order(); ++i)
    for (std::size_t j = i; j < all.order(); ++j) {
      MatGroup G = closure(F2, {all.element(i), all.element(j)});
      bool crit = contains_sl2_modl(G), full = contains_sl2(G);
      if (crit) CHECK(full);
      if (full && is_irreducible(G)) CHECK(crit);
    }
  auto F3 = ring(3, "t");
  MatGroup all3 = general_linear(F3);
  std::mt19937_64 rng(5);
  int agree = 0;
  for (int it = 0; it < 200; ++it) {
    std::vector<QuotMat> gens;
    for (std::uint64_t k = 1 + rng() % 3; k > 0; --k) gens.push_back(all3.element(rng() % all3.order()));
    MatGroup G = closure(F3, gens);
    bool crit = contains_sl2_modl(G), full = contains_sl2(G);
    if (crit) CHECK(full);
    if (full && is_irreducible(G)) CHECK(crit);
    agree += crit == (full && is_irreducible(G));
  }
  CHECK(agree == 200);
}

TEST_CASE("filtration") {
  for (auto [q, g] : std::vector<std::pair<std::uint32_t, const char*>>{{2, "t"}, {3, "t"}}) {
    AIdeal lam(P(Fq::make(q), g));
    auto R2 = std::make_shared<const QuotRing>(lam.pow(2));
    Filtration fg = filtration(general_linear(R2, kBig), lam, 2, kBig);
    CHECK(fg.g_full(1));
    CHECK(fg.h_trace_zero(1));
    CHECK(fg.gbar.order() == gl2_order(lam));
    Filtration fs = filtration(special_linear(R2, kBig), lam, 2, kBig);
    CHECK(fs.g_trace_zero(1));
    CHECK(!fs.g_full(1));
  }
  AIdeal lam(P(Fq::make(2), "t"));
  auto R3 = std::make_shared<const QuotRing>(lam.pow(3));
  Filtration f3 = filtration(general_linear(R3, kBig), lam, 3, kBig);
  CHECK(f3.g_full(1));
  CHECK(f3.g_full(2));
  CHECK(f3.h_trace_zero(2));
  CHECK_THROWS_AS(filtration(general_linear(R3, kBig), lam, 2), std::domain_error);
}

TEST_CASE("full GL2 criterion, exhaustive mode") {
  auto F3 = Fq::make(3);
  AIdeal l3(P(F3, "t"));
  auto R = std::make_shared<const QuotRing>(l3.pow(2));
  FullGL2Report full = full_gl2_conditions(general_linear(R), l3);
  CHECK(full.cond[0] == Tri::True);
  CHECK(full.cond[1] == Tri::True);
  CHECK(full.cond[2] == Tri::True);
  CHECK(!full.applicable[3]);
  CHECK(full.verdict == Tri::True);
  CHECK(full.cross_checked);
  CHECK(full_gl2_conditions(special_linear(R), l3).cond[0] == Tri::False);
  CHECK(full_gl2_conditions(special_linear(R), l3).verdict == Tri::False);
  std::vector<QuotMat> borel{make_mat(*R, 1, 1, 0, 1), make_mat(*R, 2, 0, 0, 1), make_mat(*R, 1, 0, 0, 2),
                             make_mat(*R, 4, 0, 0, 1), make_mat(*R, 1, 3, 0, 1), make_mat(*R, 1, 0, 3, 1)};
  FullGL2Report b = full_gl2_conditions(closure(R, borel), l3);
  CHECK(b.cond[1] == Tri::False);
  CHECK(b.verdict == Tri::False);

  AIdeal l2(P(Fq::make(2), "t"));
  auto R2 = std::make_shared<const QuotRing>(l2.pow(2));
  FullGL2Report f2 = full_gl2_conditions(general_linear(R2), l2);
  CHECK(f2.applicable[3]);
  CHECK(f2.cond[3] == Tri::True);
  CHECK(f2.cond[4] == Tri::True);
  CHECK(f2.verdict == Tri::True);
  // the commutator has full image mod lambda^2 nowhere: (a) and (b) fail
  CHECK(full_gl2_conditions(commutator_subgroup(general_linear(R2)), l2).verdict == Tri::False);
}

TEST_CASE("full GL2 criterion, certificate mode") {
  FullGL2Evidence ev;
  ev.residue_size = 3;
  ev.det_full = Tri::True;
  ev.modl_full = Tri::True;
  CHECK(full_gl2_conditions(ev).verdict == Tri::Unknown);
  ev.nonscalar_level1 = Tri::True;
  CHECK(full_gl2_conditions(ev).verdict == Tri::True);
  ev.det_full = Tri::False;
  CHECK(full_gl2_conditions(ev).verdict == Tri::False);
  FullGL2Evidence e2;
  e2.residue_size = 2;
  e2.det_full = e2.modl_full = e2.full_mod_lambda2 = Tri::True;
  CHECK(full_gl2_conditions(e2).verdict == Tri::Unknown);
  e2.order2_in_sl2 = Tri::True;
  CHECK(full_gl2_conditions(e2).verdict == Tri::True);
}

TEST_CASE("adelic commutator criterion") {
  CommutatorEvidence ev;
  ev.q = 2;
  ev.cond = {Tri::True, Tri::True, Tri::Unknown, Tri::True};
  CommutatorReport r = commutator_conditions(ev);
  CHECK(!r.verdict);
  CHECK(r.applicable[2]);
  ev.cond[2] = Tri::True;
  CHECK(commutator_conditions(ev).verdict);
  CommutatorEvidence e3;
  e3.q = 3;
  e3.cond = {Tri::True, Tri::True, Tri::Unknown, Tri::False};
  CommutatorReport r3 = commutator_conditions(e3);
  CHECK(!r3.applicable[2]);
  CHECK(!r3.verdict);
  e3.q = 5;
  CHECK(commutator_conditions(e3).verdict);
}

TEST_CASE("matrix text") {
  auto R = ring(3, "t^2");
  QuotMat m = parse_mat(*R, "[[t+1, 2],[0, 2*t+1]]");
  CHECK(mat_str(*R, m) == "[[t+1,2],[0,2*t+1]]");
  CHECK(parse_mat(*R, mat_str(*R, m)) == m);
  CHECK(mat_mul(*R, m, mat_inv(*R, m)) == mat_identity(*R));
  CHECK(parse_mat(*R, "[[t^2,1],[1,0]]") == make_mat(*R, 0, 1, 1, 0));
  CHECK_THROWS_AS(parse_mat(*R, "[[1,2],[3]]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_mat(*R, "[1,2,3,4]"), std::invalid_argument);
  CHECK_THROWS_AS(mat_inv(*R, parse_mat(*R, "[[t,0],[0,1]]")), std::domain_error);
}
