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
#include "gl2/certify/certify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gl2/algebra/quot_ring.hpp"
#include "gl2/groups/groups.hpp"
#include "gl2/wild2/wild2.hpp"

namespace gl2 {

namespace {

void require_poly_rank2(const DrinfeldModule& dm) {
  if (dm.rank() != 2) throw std::domain_error("certification needs rank 2");
  if (!dm.a(1).is_poly() || !dm.a(2).is_poly()) throw std::domain_error("certification needs a_1, a_2 in A");
  if (dm.a(2).is_zero()) throw std::domain_error("a_2 must be nonzero");
}

APoly delta_of(const DrinfeldModule& dm) { return -dm.a(2).num(); }

int order_in_units(const Fq& f, Fe z) {
  int e = 1;
  for (Fe x = z; x != 1; x = f.mul(x, z)) ++e;
  return e;
}

// gcd(d-1, (q-1)/e) for Delta
int det_gcd_base(const APoly& delta) {
  const Fq& f = delta.fq();
  const int d = delta.degree();
  Fe zeta = delta.lead();
  if (d % 2 != 0) zeta = f.neg(zeta);
  const int e = order_in_units(f, zeta);
  return std::gcd(d - 1, static_cast<int>(f.q() - 1) / e);
}

Certificate fact(const std::string& label, bool ok, std::string rule, std::string detail) {
  Certificate c;
  c.kind = ClaimKind::Fact;
  c.fact = label;
  c.status = ok ? CertStatus::Proven : CertStatus::Inconclusive;
  c.rule = std::move(rule);
  c.detail = std::move(detail);
  return c;
}

bool all_proven(const std::vector<Certificate>& v) {
  return std::all_of(v.begin(), v.end(), [](const Certificate& c) { return c.proven(); });
}

std::string witness_str(const InertiaWitness& w) {
  return "p=" + w.prime.str() + " v_p(j)=" + std::to_string(w.v);
}

/// Shared state for one certification run: Frobenius polynomials are cached.
class Context {
 public:
  Context(const DrinfeldModule& dm, const CertifyOptions& opt) : dm_(dm), opt_(opt) { require_poly_rank2(dm); }

  const DrinfeldModule& dm() const { return dm_; }
  const CertifyOptions& opt() const { return opt_; }
  std::uint32_t q() const { return dm_.fq().q(); }

  const FrobPoly& frob(const AIdeal& p) {
    auto it = frob_.find(p.gen());
    if (it == frob_.end()) it = frob_.emplace(p.gen(), frob_charpoly_skew(dm_, p)).first;
    return it->second;
  }

  Certificate det_fact(const AIdeal& lambda) const {
    DetMod dmod = det_surjective_mod(dm_, lambda);
    return fact("det_full_adic", dmod.surjective, "rank-1 determinant index at the primes of the level",
                "lambda=" + lambda.str() + " index=" + std::to_string(dmod.index) + " g=" + std::to_string(dmod.g));
  }

  Certificate unipotent_fact(const AIdeal& lambda, bool exclude_lambda, const std::string& label,
                             const std::string& rule) const {
    InertiaConstraints c;
    if (exclude_lambda) c.exclude.push_back(lambda);
    auto w = find_inertia_witness(dm_, c);
    return fact(label, w.has_value(), rule, w ? witness_str(*w) : "no stable rank 1 prime with gcd(v,q)=1");
  }

  Certificate irreducibility_fact(const AIdeal& lambda) {
    PrimeWalker walk(dm_.field());
    while (auto qq = walk.next(opt_.irreducibility_max_degree)) {
      if (*qq == lambda || !has_good_reduction(dm_, *qq)) continue;
      const FrobPoly& fp = frob(*qq);
      if (irreducible_mod(fp.a, fp.b, lambda))
        return fact("irreducible_mod_lambda", true, "Frobenius polynomial irreducible mod lambda",
                    "q=" + qq->str() + " P=" + fp.str());
    }
    return fact("irreducible_mod_lambda", false, "Frobenius polynomial irreducible mod lambda",
                "no witness of degree <= " + std::to_string(opt_.irreducibility_max_degree));
  }

  Certificate modl(const AIdeal& lambda) {
    if (!lambda.is_prime()) throw std::domain_error("lambda must be prime");
    Certificate c;
    c.kind = ClaimKind::ModLFull;
    c.lambda = lambda;
    c.rule = "irreducible with a subgroup of order N(lambda) contains SL_2; full determinant";
    c.premises.push_back(det_fact(lambda));
    c.premises.push_back(unipotent_fact(lambda, false, "unipotent_order_N",
                                        "Tate uniformization: gcd(v,q)=1 and e<=1 give a full unipotent subgroup"));
    c.premises.push_back(irreducibility_fact(lambda));
    c.status = all_proven(c.premises) ? CertStatus::Proven : CertStatus::Inconclusive;
    return c;
  }

  Certificate lambda_adic(const AIdeal& lambda) {
    Certificate c;
    c.kind = ClaimKind::LambdaAdicFull;
    c.lambda = lambda;
    c.rule = "full GL_2(R) criterion";
    c.premises.push_back(det_fact(lambda));  // (a)
    Certificate m = modl(lambda);            // (b)
    const bool modl_ok = m.proven();
    c.premises.push_back(std::move(m));
    if (lambda.norm() > 2) {
      c.premises.push_back(unipotent_fact(lambda, false, "level1_nonscalar",
                                          "Tate uniformization mod lambda^2: I + pi B in the Borel with B nonscalar"));
    } else {
      Certificate d;
      d.kind = ClaimKind::Fact;
      d.fact = "full_mod_lambda2";
      d.rule = "q=2 counting argument mod lambda^2";
      if (opt_.use_vinf_criterion) {
        bool w = vinf_criterion(dm_);
        d.premises.push_back(fact("abelianization_surjective", w, "v_inf(j) odd and <= -5",
                                  "v_inf(j)=" + std::to_string(wild2_report(dm_).v_inf_j)));
      } else {
        d.premises.push_back(fact("abelianization_surjective", false, "v_inf(j) odd and <= -5", "withheld"));
      }
      d.premises.push_back(fact("mod_lambda_full", modl_ok, "see ModLFull premise", lambda.str()));
      d.premises.push_back(unipotent_fact(lambda, true, "unipotent_away_from_lambda",
                                          "Tate uniformization: unipotent inertia at every lambda^i needs p != lambda"));
      d.status = all_proven(d.premises) ? CertStatus::Proven : CertStatus::Inconclusive;
      c.premises.push_back(std::move(d));
      c.premises.push_back(unipotent_fact(lambda, true, "order2_in_sl2",
                                          "unipotent inertia element of determinant 1, order 2 mod lambda"));
    }
    c.status = all_proven(c.premises) ? CertStatus::Proven : CertStatus::Inconclusive;
    return c;
  }

  Certificate all_lambda() {
    Certificate c;
    c.kind = ClaimKind::AllLambdaFull;
    c.rule = "explicit lambda below the irreducibility bound, uniform rules above";
    auto ib = irreducibility_bound(dm_, 0, opt_.bound_max_degree);
    if (!ib) {
      c.premises.push_back(fact("irreducibility_bound", false, "resultant of n-th power Frobenius polynomials",
                                "no pair of good primes of equal degree"));
      return c;
    }
    const int B = ib->bound;
    c.premises.push_back(fact("irreducibility_bound", true, "resultant of n-th power Frobenius polynomials",
                              "B=" + std::to_string(B) + " n=" + std::to_string(ib->n) + " d=" + std::to_string(ib->d) +
                                  " p1=" + ib->p1.str() + " p2=" + ib->p2.str() + " r=" + ib->resultant.str()));
    if (B > opt_.explicit_max_degree) {
      c.premises.push_back(fact("explicit_range", false, "explicit lambda up to the bound",
                                "B=" + std::to_string(B) + " exceeds " + std::to_string(opt_.explicit_max_degree)));
      return c;
    }
    for (int deg = 1; deg <= B; ++deg)
      for (const AIdeal& l : primes_of_degree(dm_.field(), deg)) c.premises.push_back(lambda_adic(l));
    c.premises.push_back(uniform(B));
    c.status = all_proven(c.premises) ? CertStatus::Proven : CertStatus::Inconclusive;
    return c;
  }

  Certificate uniform(int B) {
    Certificate u;
    u.kind = ClaimKind::Fact;
    u.fact = "uniform_above_bound";
    u.rule = "irreducible by the bound; unipotent inertia; det full; full GL_2(R) criterion with N(lambda) > 2";
    std::string unstable;
    for (const AIdeal& p : bad_primes(dm_)) {
      ReductionKind k = reduction_type(dm_, p).kind;
      if (k != ReductionKind::StableRank1 && p.degree() > B) unstable += p.str() + " ";
    }
    u.premises.push_back(fact("stable_above_bound", unstable.empty(), "stable reduction at every lambda of degree > B",
                              unstable.empty() ? "ok" : "unstable: " + unstable));
    u.premises.push_back(unipotent_fact(AIdeal(APoly::constant(dm_.field(), 1)), false, "unipotent_inertia",
                                        "Tate uniformization: unipotent inertia with gcd(v,q)=1"));
    const APoly delta = delta_of(dm_);
    bool det_ok = rank1_index(delta, AIdeal(APoly::constant(dm_.field(), 1))) == 1;
    std::string det_detail = "index away from Delta=" + std::to_string(rank1_index(delta, AIdeal(APoly::constant(dm_.field(), 1))));
    for (const AIdeal& p : prime_divisors(delta)) {
      if (p.degree() <= B) continue;
      int idx = rank1_index(delta, p);
      det_ok = det_ok && idx == 1;
      det_detail += " " + p.str() + ":" + std::to_string(idx);
    }
    u.premises.push_back(fact("det_full_above_bound", det_ok, "rank-1 determinant index", det_detail));
    u.status = all_proven(u.premises) ? CertStatus::Proven : CertStatus::Inconclusive;
    return u;
  }

 private:
  DrinfeldModule dm_;
  CertifyOptions opt_;
  std::map<APoly, FrobPoly> frob_;
};

}  // namespace

std::optional<InertiaWitness> find_inertia_witness(const DrinfeldModule& dm, const InertiaConstraints& c) {
  const long long q = dm.fq().q();
  for (const AIdeal& p : bad_primes(dm)) {
    if (std::find(c.exclude.begin(), c.exclude.end(), p) != c.exclude.end()) continue;
    ReductionReport rep = reduction_type(dm, p);
    if (rep.kind != ReductionKind::StableRank1 || rep.vj == kInfVal || rep.vj >= 0) continue;
    InertiaWitness w{p, rep.vj, std::gcd(static_cast<long long>(-rep.vj), q) == 1, p.degree() > 1, rep};
    if (c.need_gcd_q && !w.gcd_q_one) continue;
    if (c.need_deg_gt1 && !w.deg_gt1) continue;
    return w;
  }
  return std::nullopt;
}

int rank1_index(const APoly& delta, const AIdeal& a) {
  if (delta.is_zero()) throw std::domain_error("Delta must be nonzero");
  int g = det_gcd_base(delta);
  for (const auto& [p, e] : factor_poly(delta))
    if (!AIdeal(p).divides(a)) g = std::gcd(g, e);
  return g;
}

int det_index(const DrinfeldModule& dm) {
  require_poly_rank2(dm);
  return det_gcd_base(delta_of(dm));
}

DetMod det_surjective_mod(const DrinfeldModule& dm, const AIdeal& a) {
  require_poly_rank2(dm);
  const APoly& a2 = dm.a(2).num();
  DetMod r;
  r.g = std::gcd(a2.degree() - 1, static_cast<int>(dm.fq().q()) - 1);
  for (const auto& [p, e] : factor_poly(a2))
    if (!AIdeal(p).divides(a)) r.g = std::gcd(r.g, e);
  r.index = rank1_index(-a2, a);
  r.surjective = r.index == 1;
  return r;
}

std::string to_string(CertStatus s) { return s == CertStatus::Proven ? "Proven" : "Inconclusive"; }

std::string Certificate::claim() const {
  const std::string l = lambda ? "(" + lambda->gen().str() + ")" : "";
  switch (kind) {
    case ClaimKind::ModLFull: return "ModLFull" + l;
    case ClaimKind::LambdaAdicFull: return "LambdaAdicFull" + l;
    case ClaimKind::AllLambdaFull: return "AllLambdaFull";
    case ClaimKind::CommutatorFull: return "CommutatorFull";
    case ClaimKind::AdelicFull: return "AdelicFull";
    case ClaimKind::IndexDivides: return "IndexDivides(" + std::to_string(k) + ")";
    case ClaimKind::Fact: return fact;
  }
  return fact;
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["claim"] = claim();
  j["status"] = to_string(status);
  j["rule"] = rule;
  if (!detail.empty()) j["detail"] = detail;
  j["premises"] = nlohmann::json::array();
  for (const auto& p : premises) j["premises"].push_back(p.to_json());
  return j;
}

Certificate modl_full_certificate(const DrinfeldModule& dm, const AIdeal& lambda, const CertifyOptions& opt) {
  Context ctx(dm, opt);
  return ctx.modl(lambda);
}

Certificate lambda_adic_full_certificate(const DrinfeldModule& dm, const AIdeal& lambda, const CertifyOptions& opt) {
  if (!lambda.is_prime()) throw std::domain_error("lambda must be prime");
  Context ctx(dm, opt);
  return ctx.lambda_adic(lambda);
}

Certificate all_lambda_certificate(const DrinfeldModule& dm, const CertifyOptions& opt) {
  Context ctx(dm, opt);
  return ctx.all_lambda();
}

AdelicResult adelic_certificate(const DrinfeldModule& dm, const CertifyOptions& opt) {
  Context ctx(dm, opt);
  const std::uint32_t q = ctx.q();
  const FqPtr& F = dm.field();
  AdelicResult res;
  res.det_index = det_index(dm);
  res.index_lower = res.det_index;

  Certificate comm;
  comm.kind = ClaimKind::CommutatorFull;
  comm.rule = "adelic commutator criterion";
  Certificate all = ctx.all_lambda();

  CommutatorEvidence ev;
  ev.q = q;
  ev.cond[0] = all.proven() ? Tri::True : Tri::Unknown;
  ev.witness[0] = "AllLambdaFull";
  auto wb = find_inertia_witness(dm, {});
  ev.cond[1] = wb ? Tri::True : Tri::Unknown;
  ev.witness[1] = wb ? witness_str(*wb) : "none";
  InertiaConstraints cc;
  cc.need_deg_gt1 = true;
  auto wc = find_inertia_witness(dm, cc);
  ev.cond[2] = wc ? Tri::True : Tri::Unknown;
  ev.witness[2] = wc ? witness_str(*wc) : "none";
  APoly prod = APoly::constant(F, 1);
  for (const AIdeal& l : primes_of_degree(F, 1)) prod = prod * l.gen();
  const int idx1 = rank1_index(delta_of(dm), AIdeal(prod));
  ev.cond[3] = idx1 == 1 ? Tri::True : Tri::Unknown;
  ev.witness[3] = "index at degree-1 primes=" + std::to_string(idx1);
  CommutatorReport rep = commutator_conditions(ev);

  comm.premises.push_back(std::move(all));
  static const char* names[4] = {"(a) SL_2 in every G_lambda", "(b) unipotent pairs N>3",
                                 "(c) unipotent pairs N=2 in SL_2", "(d) det full at degree-1 primes"};
  static const char* rules[4] = {"AllLambdaFull", "Tate uniformization: unipotent inertia with e<=1 at lambda1*lambda2",
                                 "Tate uniformization: unipotent inertia at every level, deg p > 1", "rank-1 determinant index"};
  for (int i = 1; i < 4; ++i)
    if (rep.applicable[i]) comm.premises.push_back(fact(names[i], rep.cond[i] == Tri::True, rules[i], rep.witness[i]));
  comm.status = rep.verdict ? CertStatus::Proven : CertStatus::Inconclusive;

  Certificate top;
  top.kind = ClaimKind::AdelicFull;
  if (q != 2) {
    top.rule = "commutator is SL_2(A^) and det index 1";
    top.premises.push_back(fact("det_index_one", res.det_index == 1, "gcd(d-1,(q-1)/e)",
                                "index=" + std::to_string(res.det_index)));
  } else {
    top.rule = "commutator of GL_2(A^) and surjective abelianization";
    bool w = opt.use_vinf_criterion && vinf_criterion(dm);
    top.premises.push_back(fact("abelianization_surjective", w, "v_inf(j) odd and <= -5",
                                opt.use_vinf_criterion ? "v_inf(j)=" + std::to_string(wild2_report(dm).v_inf_j) : "withheld"));
  }
  const bool comm_ok = comm.proven();
  const bool top_ok = comm_ok && top.premises.back().proven();
  top.premises.insert(top.premises.begin(), comm);
  top.status = top_ok ? CertStatus::Proven : CertStatus::Inconclusive;

  if (top_ok) {
    res.index_upper = 1;
    res.cert = std::move(top);
  } else if (comm_ok) {
    Certificate idx;
    idx.kind = ClaimKind::IndexDivides;
    idx.k = q == 2 ? 4 : res.det_index;
    idx.rule = q == 2 ? "kernel of beta has index 4 given full det" : "G contains SL_2(A^); index equals det index";
    idx.status = CertStatus::Proven;
    idx.premises.push_back(std::move(comm));
    res.index_upper = idx.k;
    res.cert = std::move(idx);
  } else {
    res.cert = std::move(top);
  }
  return res;
}

SieveFlags sieve_membership(const APoly& a1, const APoly& a2, int m) {
  if (m < 2) throw std::domain_error("m must be >= 2");
  SieveFlags f;
  if (a2.is_zero()) {
    f.note = "a2 = 0";
    return f;
  }
  const FqPtr& F = a2.field();
  const long long q = F->q();

  int good = 0;
  for (const auto& [p, e] : factor_poly(a2))
    if (e == 1 && p.degree() > 1 && !(a1 % p).is_zero()) ++good;
  f.in_r = good >= 2;

  APoly g = gcd(a1, a2);
  f.in_s = true;
  if (g.degree() > m)
    for (const auto& [p, e] : factor_poly(g))
      if (p.degree() > m) f.in_s = false;

  const long long cap = m / (2 * (q - 1) * (q - 1) * (q + 1));
  for (int d = 1; d <= cap && !f.in_t; ++d) {
    int ok = 0;
    for (const AIdeal& p : primes_of_degree(F, d))
      if (!p.divides(a2) && ++ok >= 2) break;
    f.in_t = ok >= 2;
  }
  return f;
}

bool irreducible_mod(const APoly& a, const APoly& b, const AIdeal& lambda) {
  QuotRing R(lambda);
  const QuotRing::R ar = R.from_apoly(a % lambda.gen()), br = R.from_apoly(b % lambda.gen());
  for (QuotRing::R x = 0; x < R.size(); ++x)
    if (R.add(R.sub(R.mul(x, x), R.mul(ar, x)), br) == 0) return false;
  return true;
}

}  // namespace gl2
