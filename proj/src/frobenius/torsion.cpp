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
#include <numeric>
#include <stdexcept>

#include "gl2/frobenius/frobenius.hpp"

namespace gl2 {

namespace {

constexpr int kSplitCap = 1 << 20;
constexpr std::uint32_t kCompositeCap = 81;

std::uint64_t key_of(const std::vector<Fe>& v, std::uint32_t q) {
  std::uint64_t k = 0;
  for (std::size_t i = v.size(); i-- > 0;) k = k * q + v[i];
  return k;
}

std::vector<Fe> add_vec(const Fq& F, std::vector<Fe> a, const std::vector<Fe>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = F.add(a[i], b[i]);
  return a;
}

// solves B x = y for the kernel basis B given as columns
std::vector<Fe> kernel_coords_of(const Fq& F, const FqMatrix& B, const FiniteField::Elem& y) {
  auto x = solve(F, B, y);
  if (!x) throw std::logic_error("image of a torsion point left the kernel");
  return *x;
}

}  // namespace

std::size_t TorsionBasis::find(const std::vector<Fe>& v) const {
  std::uint64_t k = key_of(v, field->fq().q());
  if (k >= by_key.size()) throw std::logic_error("vector is not a kernel point");
  return by_key[k];
}

int splitting_degree(const ReducedModule& dm, const AIdeal& a) {
  const FFSkew g = torsion_polynomial(dm, a);
  const int d = dm.field()->dim();
  const FFSkew one = FFSkew::constant(dm.coeffs(), dm.field()->one());
  FFSkew r = one;
  for (int k = 1; k <= kSplitCap; ++k) {
    r = r.tau_left(d).right_mod(g);
    if (r == one) return k;
  }
  throw std::runtime_error("splitting degree exceeds the search cap");
}

TorsionBasis torsion_basis(const ReducedModule& dm, const AIdeal& a) {
  if (dm.characteristic().divides(a)) throw std::domain_error("torsion level " + a.str() + " meets the characteristic");
  auto ring = std::make_shared<const QuotRing>(a);
  if (!a.is_prime() && ring->size() > kCompositeCap)
    throw std::domain_error("composite torsion level " + a.str() + " exceeds |A/a| <= 81");
  const Fq& F = dm.field()->fq();
  const std::uint32_t q = F.q();

  TorsionBasis tb;
  tb.level = a;
  tb.ring = ring;
  tb.split_degree = splitting_degree(dm, a);
  FFPtr E = tb.split_degree > 1 ? FiniteField::first_extension(dm.field(), tb.split_degree) : dm.field();
  tb.field = E;
  const ReducedModule dmE = dm.base_change(E);
  const FFSkew g = torsion_polynomial(dmE, a);
  const int D = E->dim();

  FqMatrix G(D, D);
  FiniteField::Elem e(D, 0);
  for (int j = 0; j < D; ++j) {
    e[j] = 1;
    G.set_column(j, g.eval(e));
    e[j] = 0;
  }
  auto ker = nullspace(F, G);
  const int k = static_cast<int>(ker.size());
  if (k != 2 * a.degree()) throw std::logic_error("torsion kernel has the wrong size for " + a.str());
  FqMatrix B(D, k);
  for (int j = 0; j < k; ++j) B.set_column(j, ker[j]);

  // t and Frobenius acting on kernel coordinates
  const FFSkew pt = dmE.phi_t();
  FqMatrix T(k, k), Fr(k, k);
  const int d = dm.field()->dim();
  for (int j = 0; j < k; ++j) {
    T.set_column(j, kernel_coords_of(F, B, pt.eval(ker[j])));
    FiniteField::Elem x = ker[j];
    for (int i = 0; i < d; ++i) x = E->frob(x);
    Fr.set_column(j, kernel_coords_of(F, B, x));
  }
  tb.frob_action = Fr;

  // enumerate the kernel
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= q;
  std::vector<std::pair<FiniteField::Elem, std::vector<Fe>>> pts;
  pts.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Fe> v(k);
    std::uint64_t r = idx;
    for (int i = 0; i < k; ++i) v[i] = static_cast<Fe>(r % q), r /= q;
    pts.emplace_back(mat_vec(F, B, v), v);
  }
  std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) { return FiniteField::less(x.first, y.first); });
  std::vector<std::size_t>& by_key = tb.by_key;
  by_key.resize(total);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    tb.points.push_back(pts[i].first);
    tb.kernel_coords.push_back(pts[i].second);
    by_key[key_of(pts[i].second, q)] = i;
  }

  // phi_alpha(v) for all alpha in A/a
  const std::uint32_t N = ring->size();
  auto orbit = [&](const std::vector<Fe>& v) {
    std::vector<std::vector<Fe>> pw{v};
    for (int i = 1; i < a.degree(); ++i) pw.push_back(mat_vec(F, T, pw.back()));
    std::vector<std::vector<Fe>> out(N);
    for (QuotRing::R al = 0; al < N; ++al) {
      std::vector<Fe> s(k, 0);
      APoly ap = ring->to_apoly(al);
      for (int i = 0; i <= ap.degree(); ++i)
        for (int u = 0; u < k; ++u) s[u] = F.add(s[u], F.mul(ap.coeff(i), pw[i][u]));
      out[al] = std::move(s);
    }
    return out;
  };

  bool found = false;
  std::vector<std::vector<Fe>> o1;
  for (std::size_t i = 0; i < pts.size() && !found; ++i) {
    auto o = orbit(tb.kernel_coords[i]);
    std::vector<std::uint64_t> keys;
    for (auto& w : o) keys.push_back(key_of(w, q));
    std::sort(keys.begin(), keys.end());
    if (std::unique(keys.begin(), keys.end()) - keys.begin() == static_cast<std::ptrdiff_t>(N)) {
      tb.p1 = i;
      o1 = std::move(o);
      found = true;
    }
  }
  if (!found) throw std::logic_error("no point with free orbit in the torsion");

  std::vector<char> seen(total);
  found = false;
  for (std::size_t i = 0; i < pts.size() && !found; ++i) {
    auto o2 = orbit(tb.kernel_coords[i]);
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<std::array<QuotRing::R, 2>> c(total);
    std::uint64_t distinct = 0;
    for (QuotRing::R al = 0; al < N; ++al)
      for (QuotRing::R be = 0; be < N; ++be) {
        std::uint64_t key = key_of(add_vec(F, o1[al], o2[be]), q);
        if (!seen[key]) {
          seen[key] = 1;
          ++distinct;
          c[by_key[key]] = {al, be};
        }
      }
    if (distinct == total) {
      tb.p2 = i;
      tb.coords = std::move(c);
      found = true;
    }
  }
  if (!found) throw std::logic_error("torsion is not free of rank 2");
  return tb;
}

AXPoly FrobSample::charpoly() const {
  const FqPtr& f = ring->field();
  return AXPoly(APoly(f), {ring->to_apoly(det), ring->to_apoly(ring->neg(trace)), APoly::constant(f, 1)});
}

FrobSample frob_matrix(const ReducedModule& dm, const AIdeal& a) {
  TorsionBasis tb = torsion_basis(dm, a);
  const Fq& F = dm.field()->fq();
  FrobSample s;
  s.prime = dm.characteristic();
  s.level = a;
  s.ring = tb.ring;
  for (int j = 0; j < 2; ++j) {
    std::size_t src = j == 0 ? tb.p1 : tb.p2;
    std::size_t img = tb.find(mat_vec(F, tb.frob_action, tb.kernel_coords[src]));
    s.m[0][j] = tb.coords[img][0];
    s.m[1][j] = tb.coords[img][1];
  }
  const QuotRing& R = *s.ring;
  s.trace = R.add(s.m[0][0], s.m[1][1]);
  s.det = R.sub(R.mul(s.m[0][0], s.m[1][1]), R.mul(s.m[0][1], s.m[1][0]));
  return s;
}

FrobSample frob_matrix(const DrinfeldModule& dm, const AIdeal& p, const AIdeal& a) {
  if (p == a) throw std::domain_error("torsion level equals the prime");
  return frob_matrix(reduce(dm, p), a);
}

}  // namespace gl2
