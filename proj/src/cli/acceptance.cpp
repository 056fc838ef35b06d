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
#include "gl2/cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "gl2/algebra/text.hpp"
#include "gl2/certify/certify.hpp"
#include "gl2/density/density.hpp"
#include "gl2/frobenius/frobenius.hpp"
#include "gl2/groups/groups.hpp"

namespace gl2 {

namespace {

using Clock = std::chrono::steady_clock;

APoly P(const FqPtr& f, const char* s) { return parse_apoly(f, s); }

DrinfeldModule example_q2() { return DrinfeldModule::parse(Fq::make(2), "t,t^3,t^2+t+1"); }

DrinfeldModule example_odd(std::uint32_t q) {
  auto F = Fq::make(q);
  return DrinfeldModule::rank2(RatFunc(APoly::constant(F, 1)), RatFunc(-APoly::monomial(F, 1, q - 1)));
}

APoly random_poly(const FqPtr& f, int maxdeg, std::mt19937_64& rng) {
  std::vector<Fe> c(maxdeg + 1);
  for (auto& x : c) x = Fe(rng() % f->q());
  return APoly(f, c);
}

APoly random_nonzero(const FqPtr& f, int maxdeg, std::mt19937_64& rng) {
  for (;;) {
    APoly a = random_poly(f, maxdeg, rng);
    if (!a.is_zero()) return a;
  }
}

// collects failures; the criterion passes when none were recorded
class Checker {
 public:
  void check(bool ok, const std::string& what) {
    ++n_;
    if (!ok) fails_.push_back(what);
  }
  bool ok() const { return fails_.empty(); }
  std::string summary() const {
    if (fails_.empty()) return std::to_string(n_) + " checks";
    std::string s = std::to_string(fails_.size()) + "/" + std::to_string(n_) + " failed: ";
    for (std::size_t i = 0; i < fails_.size() && i < 4; ++i) s += (i ? "; " : "") + fails_[i];
    if (fails_.size() > 4) s += "; ...";
    return s;
  }

 private:
  int n_ = 0;
  std::vector<std::string> fails_;
};

AXPoly xpoly(const FqPtr& f, const char* c0, const char* c1) {
  return AXPoly(APoly(f), {P(f, c0), P(f, c1), APoly::constant(f, 1)});
}

void frob_literal(Checker& ck, const DrinfeldModule& dm, const char* prime, const AXPoly& expect) {
  FrobPoly fp = frob_charpoly_exact(dm, AIdeal(P(dm.field(), prime)));
  ck.check(fp.poly() == expect, std::string("(") + prime + "): got " + fp.str() + ", expected " + expect.str());
}

CriterionResult c1() {
  Checker ck;
  auto F3 = Fq::make(3), F2 = Fq::make(2), F5 = Fq::make(5);
  auto t0 = Clock::now();
  DrinfeldModule d3 = example_odd(3);
  frob_literal(ck, d3, "t-1", xpoly(F3, "t-1", "-1"));
  frob_literal(ck, d3, "t-2", xpoly(F3, "t-2", "-1"));
  frob_literal(ck, d3, "t^2+t+2", xpoly(F3, "t^2+t+2", "2"));
  frob_literal(ck, example_q2(), "t", xpoly(F2, "t", "0"));
  frob_literal(ck, example_q2(), "t+1", xpoly(F2, "t+1", "1"));
  DrinfeldModule d5 = example_odd(5);
  for (const char* p : {"t-1", "t-2", "t-3", "t-4"}) frob_literal(ck, d5, p, xpoly(F5, p, "-1"));
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  ck.check(secs < 10, "runtime " + std::to_string(secs) + " s");
  return {1, "Frobenius polynomials", ck.ok(), ck.summary()};
}

CriterionResult c2() {
  auto F2 = Fq::make(2);
  APoly r = resultant_x(xpoly(F2, "t", "0"), xpoly(F2, "t+1", "1"));
  Checker ck;
  ck.check(r == P(F2, "t+1"), "Res = " + r.str());
  return {2, "resultant", ck.ok(), ck.summary() + ", Res = " + r.str()};
}

CriterionResult c3() {
  Checker ck;
  auto F2 = Fq::make(2), F3 = Fq::make(3);
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    DrinfeldModule dm = DrinfeldModule::rank2(RatFunc(random_poly(F2, 6, rng)), RatFunc(random_nonzero(F2, 8, rng)));
    ck.check(det_index(dm) == 1, "q=2 " + dm.str());
  }
  ck.check(det_index(DrinfeldModule::rank2(RatFunc(APoly(F3)), RatFunc(P(F3, "t")))) == 2, "q=3 a2=t");
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u})
    ck.check(det_index(example_odd(q)) == 1, "example family q=" + std::to_string(q));
  const std::uint32_t qs[] = {2, 3, 4, 5, 7};
  for (int n = 0; n < 100; ++n) {
    auto F = Fq::make(qs[n % 5]);
    DrinfeldModule dm = DrinfeldModule::rank2(RatFunc(random_poly(F, 4, rng)), RatFunc(random_nonzero(F, 5, rng)));
    DrinfeldModule tw = dm.twist(RatFunc(random_nonzero(F, 2, rng)));
    ck.check(det_index(dm) == det_index(tw), "twist of " + dm.str());
  }
  return {3, "determinant index", ck.ok(), ck.summary()};
}

CriterionResult c4() {
  Checker ck;
  auto F2 = Fq::make(2);
  SetDescriptor C;
  C.kind = SetKind::C;
  double ratio8 = 0;
  for (int d = 1; d <= 8; ++d) {
    DensityEstimate e = count_set(F2, C, d, DensityMode::Exact());
    ck.check(e.count == c_count_formula(2, d), "d=" + std::to_string(d) + " count " + std::to_string(e.count));
    ck.check(e.total == pair_space_size(2, d), "total at d=" + std::to_string(d));
    ratio8 = e.ratio;
  }
  ck.check(std::abs(ratio8 - 1.0 / 6) < 1e-3, "ratio " + std::to_string(ratio8));
  char buf[64];
  std::snprintf(buf, sizeof buf, ", ratio(8) = %.6f", ratio8);
  return {4, "density counts of C", ck.ok(), ck.summary() + buf};
}

CriterionResult c5() {
  Checker ck;
  constexpr std::size_t big = 1 << 20;
  auto t0 = Clock::now();
  auto F2 = Fq::make(2);
  auto R1 = std::make_shared<const QuotRing>(AIdeal(P(F2, "t")));
  ck.check(commutator_subgroup(general_linear(R1)).order() == 3, "[GL2(F2),GL2(F2)]");
  for (const char* g : {"t", "t+1"}) {
    AIdeal lam(P(F2, g));
    auto R2 = std::make_shared<const QuotRing>(lam.pow(2));
    MatGroup H = commutator_subgroup(general_linear(R2, big), big);
    MatGroup S = special_linear(R2, big);
    bool inside = true;
    std::size_t predicted = 0;
    for (std::size_t i = 0; i < S.order(); ++i) {
      QuotMat m = S.element(i);
      bool want = in_residual_commutator(*R2, m, lam);
      predicted += want;
      if (want != H.contains(m)) inside = false;
    }
    ck.check(inside && predicted == H.order() && 2 * H.order() == S.order(), std::string("commutator mod (") + g + ")^2");
  }
  for (auto [q, g] : std::vector<std::pair<std::uint32_t, const char*>>{{4, "t"}, {2, "t^2+t+1"}, {5, "t"}}) {
    AIdeal lam(P(Fq::make(q), g));
    auto R2 = std::make_shared<const QuotRing>(lam.pow(2));
    MatGroup S = special_linear(R2, big);
    ck.check(commutator_subgroup(S, big).order() == S.order(), "SL2 perfect, N=" + std::to_string(lam.norm()));
  }
  auto R = std::make_shared<const QuotRing>(AIdeal(P(F2, "t^2+t")));
  AIdeal l0(P(F2, "t")), l1(P(F2, "t+1"));
  MatGroup G = general_linear(R), H = commutator_subgroup(G);
  std::size_t ker = 0;
  bool same = true;
  for (std::size_t i = 0; i < G.order(); ++i) {
    QuotMat m = G.element(i);
    bool in_ker = m.det == 1 && in_residual_commutator(*R, m, l0) && in_residual_commutator(*R, m, l1);
    ker += in_ker;
    if (in_ker != H.contains(m)) same = false;
  }
  ck.check(same && ker == 9 && H.order() == 9 && G.order() / H.order() == 4, "beta kernel at (t^2+t)");
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  ck.check(secs < 60, "runtime " + std::to_string(secs) + " s");
  return {5, "group structure", ck.ok(), ck.summary()};
}

CriterionResult c6() {
  Checker ck;
  int pairs_total = 0;
  for (std::uint32_t q : {2u, 3u}) {
    auto F = Fq::make(q);
    std::mt19937_64 rng(600 + q);
    int pairs = 0;
    while (pairs < 20) {
      DrinfeldModule dm = DrinfeldModule::rank2(RatFunc(random_poly(F, 3, rng)), RatFunc(random_nonzero(F, 3, rng)));
      int dp = 1 + int(rng() % 4), dl = 1 + int(rng() % 2);
      auto ps = primes_of_degree(F, dp), ls = primes_of_degree(F, dl);
      const AIdeal& p = ps[rng() % ps.size()];
      const AIdeal& lam = ls[rng() % ls.size()];
      if (p == lam || !has_good_reduction(dm, p) || !has_good_reduction(dm, lam)) continue;
      ++pairs;
      FrobPoly fp = frob_charpoly_exact(dm, p);
      FrobSample s = frob_matrix(dm, p, lam);
      const APoly& l = lam.gen();
      ck.check(s.ring->to_apoly(s.trace) == fp.a % l && s.ring->to_apoly(s.det) == fp.b % l,
               dm.str() + " at " + p.str() + " mod " + lam.str());
    }
    pairs_total += pairs;
  }
  return {6, "Frobenius oracle agreement", ck.ok(), ck.summary() + " over " + std::to_string(pairs_total) + " pairs"};
}

void explicit_lambda_nodes(const Certificate& c, std::vector<const Certificate*>& out) {
  if ((c.kind == ClaimKind::ModLFull || c.kind == ClaimKind::LambdaAdicFull) && c.lambda && c.lambda->degree() <= 2)
    out.push_back(&c);
  for (auto& p : c.premises) explicit_lambda_nodes(p, out);
}

CriterionResult c7() {
  Checker ck;
  auto t0 = Clock::now();
  std::size_t nodes = 0;
  for (const DrinfeldModule& dm : {example_q2(), example_odd(3)}) {
    AdelicResult r = adelic_certificate(dm);
    ck.check(r.cert.kind == ClaimKind::AdelicFull && r.cert.proven(), "adelic for " + dm.str());
    std::vector<const Certificate*> sub;
    explicit_lambda_nodes(r.cert, sub);
    ck.check(!sub.empty(), "no explicit lambda nodes for " + dm.str());
    for (auto* s : sub) ck.check(s->proven(), s->claim() + " for " + dm.str());
    nodes += sub.size();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  ck.check(secs < 300, "runtime " + std::to_string(secs) + " s");
  return {7, "adelic certification of the examples", ck.ok(),
          ck.summary() + ", " + std::to_string(nodes) + " explicit lambda nodes"};
}

CriterionResult c8() {
  Checker ck;
  auto F3 = Fq::make(3);
  AdelicResult r = adelic_certificate(DrinfeldModule::rank2(RatFunc(P(F3, "1")), RatFunc(P(F3, "t"))));
  ck.check(!(r.cert.kind == ClaimKind::AdelicFull && r.cert.proven()), "certified AdelicFull");
  ck.check(r.index_lower == 2, "index bound " + std::to_string(r.index_lower));
  return {8, "negative control", ck.ok(),
          ck.summary() + ", status " + to_string(r.cert.status) + ", index >= " + std::to_string(r.index_lower)};
}

CriterionResult c9() {
  Checker ck;
  auto F2 = Fq::make(2);
  AIdeal t(P(F2, "t"));
  const std::uint64_t seed = 2024;
  double rate[3];
  for (int i = 0; i < 3; ++i) rate[i] = surjectivity_scan(F2, t, 2 + 2 * i, 200, seed, 4).ratio;
  ck.check(rate[2] >= 0.5, "rate(6) = " + std::to_string(rate[2]));
  ck.check(rate[2] >= rate[0] - 0.05, "monotonicity");
  SetDescriptor R;
  R.kind = SetKind::R;
  DensityEstimate r8 = count_set(F2, R, 8, DensityMode::Sampled(4000, seed, 4));
  ck.check(r8.ratio >= 0.5, "in_R rate " + std::to_string(r8.ratio));
  char buf[128];
  std::snprintf(buf, sizeof buf, ", modl rates d=2,4,6: %.3f %.3f %.3f, in_R(8) = %.3f", rate[0], rate[1], rate[2],
                r8.ratio);
  return {9, "property suite", ck.ok(), ck.summary() + buf};
}

CriterionResult c10() {
  Checker ck;
  auto F2 = std::make_shared<const QuotRing>(AIdeal(P(Fq::make(2), "t")));
  MatGroup all = general_linear(F2);
  int n = 0;
  for (std::size_t i = 0; i < all.order(); ++i)
    for (std::size_t j = i; j < all.order(); ++j) {
      MatGroup G = closure(F2, {all.element(i), all.element(j)});
      ck.check(contains_sl2_modl(G) == (contains_sl2(G) && is_irreducible(G)), "GL2(F2) subgroup");
      ++n;
    }
  auto F3 = std::make_shared<const QuotRing>(AIdeal(P(Fq::make(3), "t")));
  MatGroup all3 = general_linear(F3);
  std::mt19937_64 rng(10);
  for (int it = 0; it < 200; ++it) {
    std::vector<QuotMat> gens;
    for (std::uint64_t k = 1 + rng() % 3; k > 0; --k) gens.push_back(all3.element(rng() % all3.order()));
    MatGroup G = closure(F3, gens);
    ck.check(contains_sl2_modl(G) == (contains_sl2(G) && is_irreducible(G)), "GL2(F3) sample " + std::to_string(it));
  }
  return {10, "SL2 criterion vs exhaustive containment", ck.ok(),
          ck.summary() + " (" + std::to_string(n) + " + 200 groups)"};
}

}  // namespace

std::vector<int> acceptance_ids() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}; }

CriterionResult run_criterion(int id) {
  static const std::vector<CriterionResult (*)()> table{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  if (id < 1 || id > int(table.size())) throw std::out_of_range("no criterion " + std::to_string(id));
  auto t0 = Clock::now();
  CriterionResult r;
  try {
    r = table[id - 1]();
  } catch (const std::exception& e) {
    r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::string format_result(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s [%2d] ", r.pass ? "PASS" : "FAIL", r.id);
  char secs[32];
  std::snprintf(secs, sizeof secs, " (%.2f s): ", r.seconds);
  return head + r.title + secs + r.detail;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids,
                                            const std::function<void(const CriterionResult&)>& report) {
  std::vector<CriterionResult> out;
  for (int id : ids) {
    out.push_back(run_criterion(id));
    if (report) report(out.back());
  }
  return out;
}

}  // namespace gl2
