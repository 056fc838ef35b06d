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
#include "gl2/groups/groups.hpp"

#include <algorithm>
#include <unordered_set>

#include "gl2/algebra/text.hpp"

namespace gl2 {

using R_t = QuotRing::R;

std::uint64_t QuotMat::key() const {
  return static_cast<std::uint64_t>(e[0]) | static_cast<std::uint64_t>(e[1]) << 16 |
         static_cast<std::uint64_t>(e[2]) << 32 | static_cast<std::uint64_t>(e[3]) << 48;
}

QuotMat QuotMat::from_key(const QuotRing& R, std::uint64_t k) {
  return make_mat(R, k & 0xffff, (k >> 16) & 0xffff, (k >> 32) & 0xffff, k >> 48);
}

QuotMat make_mat(const QuotRing& R, R_t a, R_t b, R_t c, R_t d) {
  QuotMat m;
  m.e = {a, b, c, d};
  m.det = R.sub(R.mul(a, d), R.mul(b, c));
  return m;
}

QuotMat mat_identity(const QuotRing& R) { return make_mat(R, 1, 0, 0, 1); }

QuotMat mat_mul(const QuotRing& R, const QuotMat& x, const QuotMat& y) {
  const auto& a = x.e;
  const auto& b = y.e;
  QuotMat m;
  m.e = {R.add(R.mul(a[0], b[0]), R.mul(a[1], b[2])), R.add(R.mul(a[0], b[1]), R.mul(a[1], b[3])),
         R.add(R.mul(a[2], b[0]), R.mul(a[3], b[2])), R.add(R.mul(a[2], b[1]), R.mul(a[3], b[3]))};
  m.det = R.mul(x.det, y.det);
  return m;
}

QuotMat mat_inv(const QuotRing& R, const QuotMat& x) {
  if (!R.is_unit(x.det)) throw std::domain_error("matrix is not invertible");
  R_t u = R.inv(x.det);
  QuotMat m;
  m.e = {R.mul(u, x.e[3]), R.mul(u, R.neg(x.e[1])), R.mul(u, R.neg(x.e[2])), R.mul(u, x.e[0])};
  m.det = u;
  return m;
}

QuotMat mat_commutator(const QuotRing& R, const QuotMat& x, const QuotMat& y) {
  return mat_mul(R, mat_mul(R, x, y), mat_mul(R, mat_inv(R, x), mat_inv(R, y)));
}

QuotMat mat_reduce(const QuotRing& from, const QuotRing& to, const QuotMat& x) {
  if (!to.ideal().divides(from.ideal())) throw std::domain_error(to.ideal().str() + " does not divide " + from.ideal().str());
  std::array<R_t, 4> r{};
  for (int i = 0; i < 4; ++i) r[i] = to.from_apoly(from.to_apoly(x.e[i]));
  return make_mat(to, r[0], r[1], r[2], r[3]);
}

QuotMat parse_mat(const QuotRing& R, const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  auto bad = [&] { return std::invalid_argument("cannot parse matrix '" + text + "', expected [[a,b],[c,d]]"); };
  if (s.size() < 9 || s.compare(0, 2, "[[") != 0 || s.compare(s.size() - 2, 2, "]]") != 0) throw bad();
  std::string inner = s.substr(2, s.size() - 4);
  auto cut = inner.find("],[");
  if (cut == std::string::npos || inner.find("],[", cut + 1) != std::string::npos) throw bad();
  std::vector<R_t> v;
  for (const std::string& row : {inner.substr(0, cut), inner.substr(cut + 3)}) {
    auto parts = split_top(row, ',');
    if (parts.size() != 2) throw bad();
    for (auto& p : parts) v.push_back(R.from_apoly(parse_apoly(R.field(), p)));
  }
  return make_mat(R, v[0], v[1], v[2], v[3]);
}

std::string mat_str(const QuotRing& R, const QuotMat& x) {
  return "[[" + R.str(x.e[0]) + "," + R.str(x.e[1]) + "],[" + R.str(x.e[2]) + "," + R.str(x.e[3]) + "]]";
}

bool MatGroup::contains(const QuotMat& x) const { return std::binary_search(keys_.begin(), keys_.end(), x.key()); }

std::vector<R_t> MatGroup::det_image() const {
  std::vector<R_t> d;
  for (auto k : keys_) d.push_back(QuotMat::from_key(*ring_, k).det);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

MatGroup closure(const RingPtr& R, const std::vector<QuotMat>& gens, std::size_t cap) {
  for (auto& g : gens)
    if (!R->is_unit(g.det)) throw std::domain_error("generator " + mat_str(*R, g) + " is not invertible");
  MatGroup G;
  G.ring_ = R;
  G.gens_ = gens;
  std::unordered_set<std::uint64_t> seen;
  std::vector<QuotMat> list{mat_identity(*R)};
  seen.insert(list[0].key());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto& g : gens) {
      QuotMat y = mat_mul(*R, list[i], g);
      if (seen.insert(y.key()).second) {
        if (list.size() >= cap) throw ResourceError("group closure exceeds " + std::to_string(cap) + " elements");
        list.push_back(y);
      }
    }
  G.keys_.reserve(list.size());
  for (auto& x : list) G.keys_.push_back(x.key());
  std::sort(G.keys_.begin(), G.keys_.end());
  return G;
}

MatGroup commutator_subgroup(const MatGroup& G, std::size_t cap) {
  const QuotRing& R = *G.ring();
  const auto& gens = G.gens();
  std::vector<QuotMat> S;
  const std::uint64_t id = mat_identity(R).key();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      QuotMat c = mat_commutator(R, gens[i], gens[j]);
      if (c.key() != id && std::find(S.begin(), S.end(), c) == S.end()) S.push_back(c);
    }
  MatGroup H = closure(G.ring(), S, cap);
  // normal closure under conjugation by the generators of G
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& g : gens) {
      QuotMat gi = mat_inv(R, g);
      for (std::size_t k = 0; k < S.size(); ++k) {
        QuotMat c = mat_mul(R, mat_mul(R, g, S[k]), gi);
        if (!H.contains(c)) {
          S.push_back(c);
          H = closure(G.ring(), S, cap);
          changed = true;
        }
      }
    }
  }
  return H;
}

MatGroup reduce_group(const MatGroup& G, const RingPtr& target, std::size_t cap) {
  std::vector<QuotMat> gens;
  for (auto& g : G.gens()) gens.push_back(mat_reduce(*G.ring(), *target, g));
  return closure(target, gens, cap);
}

std::vector<QuotMat> sl2_generators(const QuotRing& R) {
  // elementary matrices over an additive basis c * t^i, c running over an F_p-basis of F_q
  const Fq& F = *R.field();
  std::vector<Fe> basis;
  std::unordered_set<Fe> span{0};
  for (Fe c = 1; c < F.q(); ++c) {
    if (span.count(c)) continue;
    basis.push_back(c);
    std::vector<Fe> cur(span.begin(), span.end());
    for (Fe s : cur)
      for (Fe x = c, k = 1; k < F.p(); ++k, x = F.add(x, c)) span.insert(F.add(s, x));
  }
  std::vector<QuotMat> out;
  const int n = R.ideal().degree();
  for (int i = 0; i < n; ++i)
    for (Fe c : basis) {
      R_t x = R.from_apoly(APoly::monomial(R.field(), c, i));
      out.push_back(make_mat(R, 1, x, 0, 1));
      out.push_back(make_mat(R, 1, 0, x, 1));
    }
  return out;
}

std::vector<QuotMat> gl2_generators(const QuotRing& R) {
  std::vector<QuotMat> out = sl2_generators(R);
  // diag(u,1) for a generating set of the unit group
  std::vector<R_t> ug;
  std::unordered_set<R_t> reached{1};
  for (R_t u : R.units()) {
    if (reached.count(u)) continue;
    ug.push_back(u);
    out.push_back(make_mat(R, u, 0, 0, 1));
    std::vector<R_t> list{1};
    reached = {1};
    for (std::size_t i = 0; i < list.size(); ++i)
      for (R_t g : ug) {
        R_t y = R.mul(list[i], g);
        if (reached.insert(y).second) list.push_back(y);
      }
  }
  return out;
}

MatGroup general_linear(const RingPtr& R, std::size_t cap) { return closure(R, gl2_generators(*R), cap); }

MatGroup special_linear(const RingPtr& R, std::size_t cap) { return closure(R, sl2_generators(*R), cap); }

namespace {

void order_factors(const AIdeal& a, std::uint64_t& gl, std::uint64_t& units) {
  gl = units = 1;
  if (a.is_unit()) return;
  const std::uint64_t q = a.field()->q();
  for (auto& [g, e] : factor_poly(a.gen())) {
    std::uint64_t N = 1;
    for (int i = 0; i < g.degree(); ++i) N *= q;
    std::uint64_t lift = 1;
    for (int i = 1; i < e; ++i) lift *= N;
    gl *= (N * N - 1) * (N * N - N) * lift * lift * lift * lift;
    units *= (N - 1) * lift;
  }
}

std::vector<std::uint64_t> level_image(const MatGroup& G, const AIdeal& lambda, int i, const QuotRing& res) {
  const QuotRing& R = *G.ring();
  const APoly li = lambda.pow(i).gen();
  std::vector<std::uint64_t> out;
  const R_t one = 1;
  for (auto k : G.keys()) {
    QuotMat m = QuotMat::from_key(R, k);
    std::array<R_t, 4> d{R.sub(m.e[0], one), m.e[1], m.e[2], R.sub(m.e[3], one)};
    std::array<R_t, 4> b{};
    bool in = true;
    for (int j = 0; j < 4 && in; ++j) {
      APoly p = R.to_apoly(d[j]);
      auto [quo, rem] = divmod(p, li);
      if (!rem.is_zero()) in = false;
      else b[j] = res.from_apoly(quo);
    }
    if (in) {
      QuotMat B;
      B.e = b;
      out.push_back(B.key());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t pow_u(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool all_trace_zero(const QuotRing& res, const std::vector<std::uint64_t>& keys) {
  for (auto k : keys) {
    QuotMat B = QuotMat::from_key(res, k);
    if (res.add(B.e[0], B.e[3]) != 0) return false;
  }
  return true;
}

}  // namespace

std::uint64_t gl2_order(const AIdeal& a) {
  std::uint64_t gl, u;
  order_factors(a, gl, u);
  return gl;
}

std::uint64_t sl2_order(const AIdeal& a) {
  std::uint64_t gl, u;
  order_factors(a, gl, u);
  return gl / u;
}

bool is_irreducible(const MatGroup& G) {
  const QuotRing& F = *G.ring();
  if (!F.ideal().is_prime()) throw std::domain_error("irreducibility test needs a prime modulus");
  auto stable = [&](R_t v0, R_t v1) {
    for (auto& g : G.gens()) {
      R_t w0 = F.add(F.mul(g.e[0], v0), F.mul(g.e[1], v1));
      R_t w1 = F.add(F.mul(g.e[2], v0), F.mul(g.e[3], v1));
      if (F.sub(F.mul(v0, w1), F.mul(v1, w0)) != 0) return false;
    }
    return true;
  };
  if (stable(0, 1)) return false;
  for (R_t x = 0; x < F.size(); ++x)
    if (stable(1, x)) return false;
  return true;
}

bool contains_sl2_modl(const MatGroup& G) {
  return is_irreducible(G) && G.order() % G.ring()->size() == 0;
}

bool contains_sl2(const MatGroup& G) {
  for (auto& g : sl2_generators(*G.ring()))
    if (!G.contains(g)) return false;
  return true;
}

bool Filtration::g_full(int i) const { return g[i].size() == pow_u(residue->size(), 4); }
bool Filtration::h_full(int i) const { return h[i].size() == pow_u(residue->size(), 4); }
bool Filtration::g_trace_zero(int i) const {
  return g[i].size() == pow_u(residue->size(), 3) && all_trace_zero(*residue, g[i]);
}
bool Filtration::h_trace_zero(int i) const {
  return h[i].size() == pow_u(residue->size(), 3) && all_trace_zero(*residue, h[i]);
}
bool Filtration::g_nonscalar(int i) const {
  for (auto k : g[i]) {
    QuotMat B = QuotMat::from_key(*residue, k);
    if (B.e[1] != 0 || B.e[2] != 0 || B.e[0] != B.e[3]) return true;
  }
  return false;
}

Filtration filtration(const MatGroup& G, const AIdeal& lambda, int k, std::size_t cap) {
  if (k < 2) throw std::domain_error("filtration needs level k >= 2");
  if (!lambda.is_prime()) throw std::domain_error("filtration needs a prime lambda");
  if (G.ring()->ideal() != lambda.pow(k)) throw std::domain_error("group is not defined modulo " + lambda.str() + "^" + std::to_string(k));
  Filtration f;
  f.lambda = lambda;
  f.level = k;
  f.residue = std::make_shared<const QuotRing>(lambda);
  f.gbar = reduce_group(G, f.residue, cap);
  MatGroup H = commutator_subgroup(G, cap);
  f.hbar = reduce_group(H, f.residue, cap);
  f.g.resize(k);
  f.h.resize(k);
  for (int i = 1; i < k; ++i) {
    f.g[i] = level_image(G, lambda, i, *f.residue);
    f.h[i] = level_image(H, lambda, i, *f.residue);
  }
  return f;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

namespace {

Tri of(bool b) { return b ? Tri::True : Tri::False; }

void set_applicable(FullGL2Report& r, std::uint64_t N) {
  r.applicable = {true, true, N > 2, N == 2, N == 2};
}

Tri combine(const std::array<Tri, 5>& c, const std::array<bool, 5>& app) {
  bool unknown = false;
  for (int i = 0; i < 5; ++i) {
    if (!app[i]) continue;
    if (c[i] == Tri::False) return Tri::False;
    if (c[i] == Tri::Unknown) unknown = true;
  }
  return unknown ? Tri::Unknown : Tri::True;
}

}  // namespace

FullGL2Report full_gl2_conditions(const MatGroup& G, const AIdeal& lambda, std::size_t cap) {
  if (!lambda.is_prime()) throw std::domain_error("criterion needs a prime lambda");
  const AIdeal l2 = lambda.pow(2);
  if (G.ring()->ideal() != l2) throw std::domain_error("group is not defined modulo " + l2.str());
  const QuotRing& R = *G.ring();
  const std::uint64_t N = lambda.norm();
  auto res = std::make_shared<const QuotRing>(lambda);
  FullGL2Report r;
  set_applicable(r, N);
  r.cond[0] = of(G.det_image().size() == R.units().size());
  r.cond[1] = of(reduce_group(G, res, cap).order() == gl2_order(lambda));
  if (N > 2) {
    auto g1 = level_image(G, lambda, 1, *res);
    bool ns = false;
    for (auto k : g1) {
      QuotMat B = QuotMat::from_key(*res, k);
      if (B.e[1] != 0 || B.e[2] != 0 || B.e[0] != B.e[3]) ns = true;
    }
    r.cond[2] = of(ns);
  } else {
    r.cond[3] = of(G.order() == gl2_order(l2));
    bool found = false;
    const QuotMat I = mat_identity(*res);
    for (std::size_t i = 0; i < G.order() && !found; ++i) {
      QuotMat g = G.element(i);
      if (g.det != 1) continue;
      QuotMat x = mat_reduce(R, *res, g);
      found = !(x == I) && mat_mul(*res, x, x) == I;
    }
    r.cond[4] = of(found);
  }
  r.verdict = combine(r.cond, r.applicable);
  if (r.verdict == Tri::True && G.order() != gl2_order(l2))
    throw std::logic_error("full-GL_2 criterion holds but the group is not all of GL_2 mod " + l2.str());
  r.cross_checked = true;
  return r;
}

FullGL2Report full_gl2_conditions(const FullGL2Evidence& ev) {
  if (ev.residue_size < 2) throw std::domain_error("evidence needs the residue field size");
  FullGL2Report r;
  set_applicable(r, ev.residue_size);
  r.cond = {ev.det_full, ev.modl_full, ev.nonscalar_level1, ev.full_mod_lambda2, ev.order2_in_sl2};
  r.verdict = combine(r.cond, r.applicable);
  return r;
}

CommutatorReport commutator_conditions(const CommutatorEvidence& ev) {
  CommutatorReport r;
  r.cond = ev.cond;
  r.witness = ev.witness;
  r.applicable = {true, true, ev.q == 2, ev.q == 2 || ev.q == 3};
  r.verdict = true;
  for (int i = 0; i < 4; ++i)
    if (r.applicable[i] && r.cond[i] != Tri::True) r.verdict = false;
  return r;
}

bool in_residual_commutator(const QuotRing& R, const QuotMat& x, const AIdeal& lambda) {
  auto res = std::make_shared<const QuotRing>(lambda);
  QuotMat y = mat_reduce(R, *res, x);
  if (lambda.norm() > 2) return y.det == 1;
  return commutator_subgroup(general_linear(res)).contains(y);
}

}  // namespace gl2
