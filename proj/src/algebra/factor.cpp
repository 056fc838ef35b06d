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
// Squarefree split, distinct-degree and equal-degree factorization over F_q.

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gl2/algebra/ideal.hpp"

namespace gl2 {

namespace {

using Factors = std::vector<std::pair<APoly, int>>;

APoly x_of(const FqPtr& f) { return APoly::t(f); }

// a^q mod m
APoly frob(const APoly& a, const APoly& m) { return powmod(a, a.fq().q(), m); }

// f(t) = g(t)^p; returns g
APoly pth_root(const APoly& f) {
  const Fq& F = f.fq();
  const int p = static_cast<int>(F.p());
  std::vector<Fe> c(f.degree() / p + 1, 0);
  for (int i = 0; i <= f.degree(); i += p) c[i / p] = F.pth_root(f.coeff(i));
  return APoly(f.field(), std::move(c));
}

void squarefree(const APoly& f, int mult, Factors& out) {
  if (f.degree() < 1) return;
  APoly d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root(f), mult * static_cast<int>(f.fq().p()), out);
    return;
  }
  APoly c = gcd(f, d);
  APoly w = exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    APoly y = gcd(w, c);
    APoly fac = exact_div(w, y);
    if (fac.degree() > 0) out.emplace_back(fac, i * mult);
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c), mult * static_cast<int>(f.fq().p()), out);
}

// splits a squarefree f into products of irreducibles of equal degree
std::vector<std::pair<APoly, int>> distinct_degree(APoly f) {
  std::vector<std::pair<APoly, int>> out;
  const FqPtr& F = f.field();
  APoly h = x_of(F) % f;
  int k = 0;
  while (f.degree() >= 2 * (k + 1)) {
    ++k;
    h = frob(h, f);
    APoly g = gcd(f, h - x_of(F));
    if (g.degree() > 0) {
      out.emplace_back(g, k);
      f = exact_div(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

APoly random_below(const FqPtr& F, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, F->q() - 1);
  std::vector<Fe> c(deg);
  for (auto& x : c) x = dist(rng);
  return APoly(F, std::move(c));
}

// a splitting element for an equal-degree product: its zero set on the
// factors is a random subset
APoly split_map(const APoly& a, const APoly& f, int k) {
  const Fq& F = f.fq();
  if (F.p() == 2) {
    // absolute trace to F_2 of the residue field of degree k
    const int steps = static_cast<int>(F.e()) * k;
    APoly s = a % f, cur = a % f;
    for (int i = 1; i < steps; ++i) {
      cur = mulmod(cur, cur, f);
      s += cur;
    }
    return s;
  }
  // norm to F_q followed by the quadratic character
  APoly norm = a % f, cur = a % f;
  for (int i = 1; i < k; ++i) {
    cur = frob(cur, f);
    norm = mulmod(norm, cur, f);
  }
  APoly r = powmod(norm, (F.q() - 1) / 2, f);
  return r - APoly::constant(f.field(), 1);
}

void equal_degree(const APoly& f, int k, std::mt19937_64& rng, std::vector<APoly>& out) {
  if (f.degree() == k) {
    out.push_back(f);
    return;
  }
  for (;;) {
    APoly a = random_below(f.field(), f.degree(), rng);
    if (a.degree() < 1) continue;
    APoly g = gcd(f, a);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, k, rng, out);
      equal_degree(exact_div(f, g), k, rng, out);
      return;
    }
    g = gcd(f, split_map(a, f, k));
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, k, rng, out);
      equal_degree(exact_div(f, g), k, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<APoly, int>> factor_poly(const APoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  std::mt19937_64 rng(seed);
  Factors sqf;
  squarefree(f.monic(), 1, sqf);
  Factors out;
  for (auto& [g, m] : sqf) {
    for (auto& [h, k] : distinct_degree(g)) {
      std::vector<APoly> pieces;
      equal_degree(h, k, rng, pieces);
      for (auto& p : pieces) out.emplace_back(p, m);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // parts of the squarefree split are coprime, but merge defensively
  Factors merged;
  for (auto& fm : out) {
    if (!merged.empty() && merged.back().first == fm.first)
      merged.back().second += fm.second;
    else
      merged.push_back(fm);
  }
  return merged;
}

bool is_irreducible(const APoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const FqPtr& F = f.field();
  APoly g = f.monic();
  const APoly x = x_of(F);
  // Rabin: x^(q^n) = x mod g, and gcd(g, x^(q^(n/r)) - x) = 1 for primes r | n
  std::vector<int> divs;
  int m = n;
  for (int r = 2; r <= m; ++r) {
    if (m % r) continue;
    divs.push_back(n / r);
    while (m % r == 0) m /= r;
  }
  APoly h = x % g;
  for (int k = 1; k <= n; ++k) {
    h = frob(h, g);
    if (k < n && std::find(divs.begin(), divs.end(), k) != divs.end()) {
      if (gcd(g, h - x).degree() > 0) return false;
    }
  }
  return h == x % g;
}

}  // namespace gl2
