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
#include <stdexcept>

#include "gl2/frobenius/frobenius.hpp"

namespace gl2 {

AXPoly FrobPoly::poly() const {
  const FqPtr& f = prime.field();
  return AXPoly(APoly(f), {b, -a, APoly::constant(f, 1)});
}

std::string FrobPoly::str() const { return poly().str(); }

namespace {

void check_skew_relation(const ReducedModule& red, const APoly& a, const APoly& b) {
  const int d = red.characteristic().degree();
  const FFCoeffs R = red.coeffs();
  FFSkew pi = FFSkew::tau_power(R, d);
  FFSkew lhs = pi * pi - red.phi_of(a) * pi + red.phi_of(b);
  if (!lhs.is_zero())
    throw std::logic_error("Frobenius relation fails at " + red.characteristic().str() + " for trace " + a.str());
}

}  // namespace

FrobPoly frob_charpoly_exact(const DrinfeldModule& dm, const AIdeal& p) {
  if (dm.rank() != 2) throw std::domain_error("Frobenius polynomials are implemented for rank 2");
  const ReducedModule red = reduce(dm, p);
  const FqPtr& f = dm.field();
  const int d = p.degree();
  const std::vector<AIdeal> bad = bad_primes(dm);

  FrobPoly fp;
  fp.prime = p;
  fp.degree = d;
  APoly a(f), M = APoly::constant(f, 1);
  std::optional<APoly> b;
  std::vector<std::pair<AIdeal, APoly>> dets;
  PrimeWalker walk(f);
  int covered = 0;
  while (covered < d / 2 + 1) {
    auto lam = walk.next(64);
    if (!lam) throw std::runtime_error("ran out of CRT primes");
    if (*lam == p || std::find(bad.begin(), bad.end(), *lam) != bad.end()) continue;
    FrobSample s = frob_matrix(red, *lam);
    const APoly& l = lam->gen();
    APoly r = s.ring->to_apoly(s.trace);
    // x = a (mod M), x = r (mod l)
    APoly k = mulmod((r - a) % l, invmod(M % l, l), l);
    a = (a + M * k);
    M = M * l;
    a = a % M;
    APoly det = s.ring->to_apoly(s.det);
    if (!b) {
      APoly u = mulmod(det, invmod(p.gen() % l, l), l);
      if (u.degree() != 0) throw std::logic_error("Frobenius determinant is not a unit multiple of " + p.str());
      b = p.gen() * u;
    }
    dets.emplace_back(*lam, det);
    fp.levels.push_back(*lam);
    covered += lam->degree();
  }
  for (auto& [lam, det] : dets)
    if (!((*b - det) % lam.gen()).is_zero())
      throw std::logic_error("Frobenius determinants disagree at " + lam.str());
  fp.a = a;
  fp.b = *b;
  if (2 * std::max(0, fp.a.degree()) > d || fp.b.degree() != d)
    throw std::logic_error("Weil bound violated by the Frobenius polynomial at " + p.str());
  check_skew_relation(red, fp.a, fp.b);
  return fp;
}

FrobPoly frob_charpoly_skew(const DrinfeldModule& dm, const AIdeal& p) {
  if (dm.rank() != 2) throw std::domain_error("Frobenius polynomials are implemented for rank 2");
  const ReducedModule red = reduce(dm, p);
  const FqPtr& f = dm.field();
  const FiniteField& K = *red.field();
  const int d = p.degree();
  const FFCoeffs R = red.coeffs();
  const FFSkew pi2 = FFSkew::tau_power(R, 2 * d);
  // pi^2 + phi_b = phi_a * tau^d, and phi_a * tau^d only shifts coefficients
  for (Fe u = 1; u < f->q(); ++u) {
    APoly b = p.gen() * APoly::constant(f, u);
    FFSkew s = pi2 + red.phi_of(b);
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) ok = FiniteField::is_zero(s.coeff(i));
    if (!ok) continue;
    std::vector<FiniteField::Elem> c;
    for (int i = d; i <= s.degree(); ++i) c.push_back(s.coeff(i));
    FFSkew phi_a(R, std::move(c));
    APoly a = K.to_apoly(phi_a.d0());
    if (2 * std::max(0, a.degree()) > d || red.phi_of(a) != phi_a) continue;
    FrobPoly fp;
    fp.prime = p;
    fp.degree = d;
    fp.a = a;
    fp.b = b;
    return fp;
  }
  throw std::logic_error("no Frobenius relation found at " + p.str());
}

AXPoly power_poly(const AXPoly& P, int n) {
  if (n < 1) throw std::domain_error("power_poly needs n >= 1");
  if (P.is_zero() || !P.lead().is_one()) throw std::domain_error("power_poly needs a monic polynomial");
  if (n == 1) return P;
  const int k = P.degree();
  const FqPtr& f = P.lead().field();
  const APoly zero(f), one = APoly::constant(f, 1);
  using Mat = std::vector<std::vector<APoly>>;
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat z(k, std::vector<APoly>(k, zero));
    for (int i = 0; i < k; ++i)
      for (int l = 0; l < k; ++l) {
        if (x[i][l].is_zero()) continue;
        for (int j = 0; j < k; ++j) z[i][j] += x[i][l] * y[l][j];
      }
    return z;
  };
  // companion matrix: the characteristic polynomial of C is P
  Mat C(k, std::vector<APoly>(k, zero));
  for (int i = 1; i < k; ++i) C[i][i - 1] = one;
  for (int i = 0; i < k; ++i) C[i][k - 1] = -P.coeff(i);
  Mat R(k, std::vector<APoly>(k, zero));
  for (int i = 0; i < k; ++i) R[i][i] = one;
  for (int e = n; e; e >>= 1) {
    if (e & 1) R = mul(R, C);
    if (e > 1) C = mul(C, C);
  }
  // det(x I - C^n) over A[x]
  const AXPoly xz(zero), xone(zero, {one}), x(zero, {zero, one});
  std::vector<std::vector<AXPoly>> XM(k, std::vector<AXPoly>(k, xz));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) XM[i][j] = (i == j ? x : xz) - AXPoly(zero, {R[i][j]});
  return bareiss_det(XM, xz, xone);
}

int auto_power(const DrinfeldModule& dm, bool* is_one) {
  const long long q = dm.fq().q();
  const int general = static_cast<int>((q - 1) * (q - 1) * (q + 1));
  if (is_one) *is_one = false;
  auto bad = bad_primes(dm);
  if (bad.size() != 1 || reduction_type(dm, bad[0]).kind != ReductionKind::StableRank1) return general;
  const RatFunc& a2 = dm.a(2);
  for (const APoly* part : {&a2.num(), &a2.den()}) {
    if (part->degree() < 1) continue;
    for (auto& [g, mult] : factor_poly(*part))
      if (valuation(a2, Place(AIdeal(g))) % (q - 1) != 0) return general;
  }
  if (is_one) *is_one = true;
  return 1;
}

std::optional<IrreducibilityBound> irreducibility_bound(const DrinfeldModule& dm, int n, int max_degree) {
  IrreducibilityBound ib;
  bool found = false;
  for (int d = 1; d <= max_degree && !found; ++d) {
    std::vector<AIdeal> good;
    for (auto& p : primes_of_degree(dm.field(), d)) {
      if (has_good_reduction(dm, p)) good.push_back(p);
      if (good.size() == 2) break;
    }
    if (good.size() == 2) {
      ib.d = d;
      ib.p1 = good[0];
      ib.p2 = good[1];
      found = true;
    }
  }
  if (!found) return std::nullopt;
  ib.n = n > 0 ? n : auto_power(dm, &ib.n_auto_one);
  if (n > 0) ib.n_auto_one = false;
  ib.bound = 2 * ib.n * ib.d;
  ib.P1 = frob_charpoly_exact(dm, ib.p1);
  ib.P2 = frob_charpoly_exact(dm, ib.p2);
  ib.resultant = resultant_x(power_poly(ib.P1.poly(), ib.n), power_poly(ib.P2.poly(), ib.n));
  return ib;
}

}  // namespace gl2
