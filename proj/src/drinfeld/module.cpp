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
#include "gl2/drinfeld/module.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gl2/algebra/text.hpp"

namespace gl2 {

RatFunc FracCoeffs::frob(const RatFunc& a, int k) const {
  std::uint64_t e = 1;
  for (int i = 0; i < k; ++i) e *= f_->q();
  return a.inflate(e);
}

DrinfeldModule::DrinfeldModule(FqPtr f, std::vector<RatFunc> a) : f_(std::move(f)), a_(std::move(a)) {
  if (a_.empty()) throw std::domain_error("a Drinfeld module needs rank at least 1");
  if (a_.back().is_zero()) throw std::domain_error("leading coefficient of phi_t must be nonzero");
}

DrinfeldModule DrinfeldModule::rank2(const RatFunc& a1, const RatFunc& a2) {
  return DrinfeldModule(a2.field(), {a1, a2});
}

namespace {

RatFunc parse_coeff(const FqPtr& f, const std::string& s) {
  auto parts = split_top(s, '/');
  if (parts.size() == 1) return RatFunc(parse_apoly(f, parts[0]));
  if (parts.size() == 2) return RatFunc(parse_apoly(f, parts[0]), parse_apoly(f, parts[1]));
  throw std::invalid_argument("cannot parse coefficient '" + s + "'");
}

}  // namespace

DrinfeldModule DrinfeldModule::parse(const FqPtr& f, const std::string& text) {
  auto parts = split_top(text, ',');
  if (parts.size() < 2) throw std::invalid_argument("--phi needs at least \"t,a1\"");
  if (parse_coeff(f, parts[0]) != RatFunc(APoly::t(f)))
    throw std::invalid_argument("the constant term of phi_t must be t");
  std::vector<RatFunc> a;
  for (std::size_t i = 1; i < parts.size(); ++i) a.push_back(parse_coeff(f, parts[i]));
  return DrinfeldModule(f, std::move(a));
}

GlobalSkew DrinfeldModule::phi_t() const {
  std::vector<RatFunc> c{RatFunc(APoly::t(f_))};
  c.insert(c.end(), a_.begin(), a_.end());
  return GlobalSkew(coeffs(), std::move(c));
}

template <class C>
static SkewPoly<C> horner(const C& ring, const SkewPoly<C>& pt, const APoly& a) {
  SkewPoly<C> h(ring);
  for (int i = a.degree(); i >= 0; --i) {
    h = h * pt;
    if (a.coeff(i)) h = h + SkewPoly<C>::constant(ring, ring.from_fq(a.coeff(i)));
  }
  return h;
}

GlobalSkew DrinfeldModule::phi_of(const APoly& a) const { return horner(coeffs(), phi_t(), a); }

RatFunc DrinfeldModule::j_invariant() const {
  if (rank() != 2) throw std::domain_error("j-invariant needs rank 2");
  return a_[0].pow(f_->q() + 1) / a_[1];
}

DrinfeldModule DrinfeldModule::twist(const RatFunc& b) const {
  if (b.is_zero()) throw std::domain_error("twist by zero");
  std::vector<RatFunc> a;
  long long e = 1;
  for (const auto& ai : a_) {
    e *= f_->q();
    a.push_back(ai * b.pow(e - 1));
  }
  return DrinfeldModule(f_, std::move(a));
}

std::string DrinfeldModule::str() const {
  std::string out = "t";
  for (const auto& ai : a_) out += "," + ai.str();
  return out;
}

ReducedModule::ReducedModule(FFPtr K, AIdeal p0, std::vector<FiniteField::Elem> a)
    : K_(std::move(K)), p0_(std::move(p0)), a_(std::move(a)) {
  if (a_.size() < 2) throw std::domain_error("a reduced module needs rank at least 1");
  if (FiniteField::is_zero(a_.back())) throw std::domain_error("leading coefficient of phi_t must be nonzero");
}

FiniteField::Elem ReducedModule::iota(const APoly& a) const {
  // a lies in the residue level at the bottom of the tower above F_q
  std::vector<const FiniteField*> chain;
  for (const FiniteField* L = K_.get(); L && !L->is_prime_level(); L = L->base().get()) chain.push_back(L);
  if (chain.empty()) throw std::logic_error("reduced module over the prime level");
  FiniteField::Elem x = chain.back()->from_apoly(a);
  for (std::size_t i = chain.size() - 1; i-- > 0;) x = chain[i]->embed(x);
  return x;
}

FFSkew ReducedModule::phi_t() const { return FFSkew(coeffs(), a_); }

FFSkew ReducedModule::phi_of(const APoly& a) const { return horner(coeffs(), phi_t(), a); }

ReducedModule ReducedModule::base_change(const FFPtr& E) const {
  std::vector<const FiniteField*> chain;
  for (const FiniteField* L = E.get(); L != K_.get(); L = L->base().get()) {
    if (!L) throw std::domain_error("field is not an extension of the module's field");
    chain.push_back(L);
  }
  std::vector<FiniteField::Elem> b;
  for (auto x : a_) {
    for (std::size_t i = chain.size(); i-- > 0;) x = chain[i]->embed(x);
    b.push_back(std::move(x));
  }
  return ReducedModule(E, p0_, std::move(b));
}

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) n = -n, d = -d;
  long long g = std::gcd(n < 0 ? -n : n, d);
  num = n / g;
  den = d / g;
}

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::Good: return "Good";
    case ReductionKind::StableRank1: return "StableRank1";
    case ReductionKind::PotentiallyGoodNotGood: return "PotentiallyGoodNotGood";
    case ReductionKind::NotStableOverBase: return "NotStableOverBase";
  }
  return "?";
}

ReductionReport reduction_type(const DrinfeldModule& dm, const AIdeal& p) {
  if (dm.rank() != 2) throw std::domain_error("reduction type is implemented for rank 2");
  if (!p.is_prime()) throw std::domain_error("reduction type needs a prime ideal, got " + p.str());
  const long long q = dm.fq().q();
  const long long Q1 = q - 1, Q2 = q * q - 1;
  ReductionReport r;
  r.prime = p;
  r.v2 = valuation(dm.a(2), Place(p));
  const bool a1_zero = dm.a(1).is_zero();
  if (!a1_zero) r.v1 = valuation(dm.a(1), Place(p));
  if (a1_zero || static_cast<long long>(r.v2) * Q1 <= static_cast<long long>(r.v1) * Q2) {
    r.m = Rational(r.v2, Q2);
    r.potential_rank = 2;
  } else {
    r.m = Rational(r.v1, Q1);
    r.potential_rank = 1;
  }
  r.vj = a1_zero ? kInfVal : static_cast<int>((q + 1) * r.v1 - r.v2);
  const bool good = r.v2 % Q2 == 0 && (a1_zero || (q + 1) * r.v1 >= r.v2);
  if (good)
    r.kind = ReductionKind::Good;
  else if (!a1_zero && r.v1 % Q1 == 0 && r.vj < 0)
    r.kind = ReductionKind::StableRank1;
  else if (r.vj >= 0)
    r.kind = ReductionKind::PotentiallyGoodNotGood;
  else
    r.kind = ReductionKind::NotStableOverBase;
  return r;
}

bool has_good_reduction(const DrinfeldModule& dm, const AIdeal& p) {
  return reduction_type(dm, p).kind == ReductionKind::Good;
}

std::vector<AIdeal> bad_primes(const DrinfeldModule& dm) {
  std::vector<AIdeal> cand;
  for (int i = 1; i <= dm.rank(); ++i) {
    const RatFunc& x = dm.a(i);
    if (x.is_zero()) continue;
    for (const APoly* part : {&x.num(), &x.den()})
      if (part->degree() > 0)
        for (auto& p : prime_divisors(*part)) cand.push_back(p);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<AIdeal> out;
  for (auto& p : cand)
    if (!has_good_reduction(dm, p)) out.push_back(p);
  return out;
}

ReducedModule reduce(const DrinfeldModule& dm, const AIdeal& p) {
  ReductionReport rep = reduction_type(dm, p);
  if (rep.kind != ReductionKind::Good) throw std::domain_error("no good reduction at " + p.str());
  const long long q = dm.fq().q();
  const long long k = -rep.v2 / (q * q - 1);
  RatFunc pi(p.gen());
  FFPtr K = FiniteField::residue(p);
  std::vector<FiniteField::Elem> a{K->from_apoly(APoly::t(dm.field()))};
  long long e = 1;
  for (int i = 1; i <= dm.rank(); ++i) {
    e *= q;
    RatFunc x = dm.a(i) * pi.pow(k * (e - 1));
    if (x.is_zero()) {
      a.push_back(K->zero());
      continue;
    }
    FiniteField::Elem den = K->from_apoly(x.den());
    if (FiniteField::is_zero(den)) throw std::logic_error("twisted coefficient is not integral at " + p.str());
    a.push_back(K->mul(K->from_apoly(x.num()), K->inv(den)));
  }
  return ReducedModule(K, p, std::move(a));
}

GlobalSkew torsion_polynomial(const DrinfeldModule& dm, const AIdeal& a) { return dm.phi_of(a.gen()); }

FFSkew torsion_polynomial(const ReducedModule& dm, const AIdeal& a) {
  if (dm.characteristic().divides(a)) throw std::domain_error("torsion level divisible by the characteristic");
  return dm.phi_of(a.gen());
}

}  // namespace gl2
