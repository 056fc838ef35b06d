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
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "gl2/algebra/text.hpp"
#include "gl2/certify/certify.hpp"
#include "gl2/cli/acceptance.hpp"
#include "gl2/density/density.hpp"
#include "gl2/frobenius/frobenius.hpp"
#include "gl2/groups/groups.hpp"
#include "gl2/wild2/wild2.hpp"

using namespace gl2;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kUsage = 1, kInconclusive = 2;

struct Globals {
  std::uint32_t q = 2;
  std::string modulus;
  bool json = false;
  std::uint64_t seed = 1;
};

// a usage problem found after parsing
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FqPtr make_field(const Globals& g) {
  if (g.modulus.empty()) return Fq::make(g.q);
  std::uint32_t p = 2;
  while (g.q % p) ++p;
  std::string m = g.modulus;
  for (char& c : m)
    if (c == 'g') c = 't';
  APoly mod = parse_apoly(Fq::make(p), m);
  std::vector<std::uint32_t> c;
  for (int i = 0; i <= mod.degree(); ++i) c.push_back(mod.coeff(i));
  auto f = std::make_shared<const Fq>(FieldSpec::with_modulus(p, c));
  if (f->q() != g.q) throw UsageError("modulus " + g.modulus + " does not define F_" + std::to_string(g.q));
  return f;
}

DrinfeldModule integral_module(const FqPtr& f, const std::string& phi) {
  if (phi.empty()) throw UsageError("--phi is required");
  return DrinfeldModule::parse(f, phi);
}

AIdeal prime_ideal(const FqPtr& f, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  AIdeal p = parse_ideal(f, text);
  if (!p.is_prime()) throw UsageError(std::string(flag) + " must be a prime ideal");
  return p;
}

void print_tree(std::ostream& os, const Certificate& c, int depth) {
  os << std::string(2 * depth, ' ') << c.claim() << ": " << to_string(c.status) << " [" << c.rule << "]";
  if (!c.detail.empty()) os << " " << c.detail;
  os << "\n";
  for (auto& p : c.premises) print_tree(os, p, depth + 1);
}

std::string tri(Tri t) { return to_string(t); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois images of rank 2 Drinfeld modules over F_q[t]"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--q", g.q, "size of the constant field")->check(CLI::Range(2u, 256u));
  app.add_option("--modulus", g.modulus, "defining polynomial of F_q over F_p in g, e.g. g^2+g+1");
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for sampled computations");

  std::function<int()> action;

  // frobpoly
  std::string phi, prime, method = "exact";
  auto* frob = app.add_subcommand("frobpoly", "characteristic polynomial of Frobenius at a good prime");
  frob->add_option("--phi", phi, "phi_t as \"t,a1,a2\"");
  frob->add_option("--prime", prime, "prime ideal \"(g)\"");
  frob->add_option("--method", method, "exact (CRT over torsion) or skew (Frobenius relation)")
      ->check(CLI::IsMember({"exact", "skew"}));
  frob->callback([&] {
    action = [&] {
      FqPtr f = make_field(g);
      DrinfeldModule dm = integral_module(f, phi);
      AIdeal p = prime_ideal(f, prime, "--prime");
      FrobPoly fp = method == "skew" ? frob_charpoly_skew(dm, p) : frob_charpoly_exact(dm, p);
      if (g.json)
        std::cout << json{{"prime", p.str()}, {"degree", fp.degree}, {"trace", fp.a.str()}, {"constant", fp.b.str()}}.dump(2)
                  << "\n";
      else
        std::cout << fp.str() << "\n";
      return kOk;
    };
  });

  // certify
  std::string claim = "adelic", lambda;
  int explicit_max = CertifyOptions{}.explicit_max_degree;
  bool no_vinf = false;
  auto* cert = app.add_subcommand("certify", "build a certificate for a claim about the Galois image");
  cert->add_option("--phi", phi, "phi_t as \"t,a1,a2\"");
  cert->add_option("--claim", claim, "modl, lambda-adic, all-lambda or adelic")
      ->check(CLI::IsMember({"modl", "lambda-adic", "all-lambda", "adelic"}));
  cert->add_option("--lambda", lambda, "prime ideal \"(g)\" for modl and lambda-adic");
  cert->add_option("--explicit-max-degree", explicit_max, "largest lambda degree handled one by one");
  cert->add_flag("--no-v-inf-rule", no_vinf, "q = 2: do not use the valuation of j at infinity");
  cert->callback([&] {
    action = [&] {
      FqPtr f = make_field(g);
      DrinfeldModule dm = integral_module(f, phi);
      CertifyOptions opt;
      opt.explicit_max_degree = explicit_max;
      opt.use_vinf_criterion = !no_vinf;
      Certificate c;
      json extra = json::object();
      if (claim == "modl" || claim == "lambda-adic") {
        AIdeal l = prime_ideal(f, lambda, "--lambda");
        c = claim == "modl" ? modl_full_certificate(dm, l, opt) : lambda_adic_full_certificate(dm, l, opt);
      } else if (claim == "all-lambda") {
        c = all_lambda_certificate(dm, opt);
      } else {
        AdelicResult r = adelic_certificate(dm, opt);
        c = r.cert;
        extra = {{"det_index", r.det_index}, {"index_lower", r.index_lower}, {"index_upper", r.index_upper}};
      }
      if (g.json) {
        json j = c.to_json();
        for (auto& [k, v] : extra.items()) j[k] = v;
        std::cout << j.dump(2) << "\n";
      } else {
        print_tree(std::cout, c, 0);
        for (auto& [k, v] : extra.items()) std::cout << k << " = " << v << "\n";
      }
      return c.proven() ? kOk : kInconclusive;
    };
  });

  // det-index
  auto* det = app.add_subcommand("det-index", "index of the adelic determinant image");
  det->add_option("--phi", phi, "phi_t as \"t,a1,a2\"");
  det->callback([&] {
    action = [&] {
      FqPtr f = make_field(g);
      int k = det_index(integral_module(f, phi));
      if (g.json)
        std::cout << json{{"det_index", k}}.dump(2) << "\n";
      else
        std::cout << k << "\n";
      return kOk;
    };
  });

  // reduction-type
  auto* red = app.add_subcommand("reduction-type", "reduction type at a prime, or at every bad prime");
  red->add_option("--phi", phi, "phi_t as \"t,a1,a2\"");
  red->add_option("--prime", prime, "prime ideal \"(g)\"; all bad primes when omitted");
  red->callback([&] {
    action = [&] {
      FqPtr f = make_field(g);
      DrinfeldModule dm = integral_module(f, phi);
      std::vector<AIdeal> ps = prime.empty() ? bad_primes(dm) : std::vector<AIdeal>{prime_ideal(f, prime, "--prime")};
      json out = json::array();
      for (auto& p : ps) {
        ReductionReport r = reduction_type(dm, p);
        auto val = [](int v) { return v == kInfVal ? json("inf") : json(v); };
        json j{{"prime", p.str()},
               {"kind", to_string(r.kind)},
               {"potential_rank", r.potential_rank},
               {"m", r.m.str()},
               {"v_a1", val(r.v1)},
               {"v_a2", val(r.v2)},
               {"v_j", val(r.vj)}};
        out.push_back(j);
        if (!g.json)
          std::cout << p.str() << " " << to_string(r.kind) << " potential_rank=" << r.potential_rank
                    << " m=" << r.m.str() << " v(a1)=" << j["v_a1"].dump() << " v(a2)=" << r.v2
                    << " v(j)=" << j["v_j"].dump() << "\n";
      }
      if (g.json) std::cout << out.dump(2) << "\n";
      if (!g.json && ps.empty()) std::cout << "good reduction everywhere\n";
      return kOk;
    };
  });

  // group-check
  std::string level, gens;
  auto* grp = app.add_subcommand("group-check", "structure of a subgroup of GL_2(A/a) given by generators");
  grp->add_option("--level", level, "level \"(g)\" or \"(g)^k\"");
  grp->add_option("--gens", gens, "generators \"[[a,b],[c,d]];...\"");
  grp->callback([&] {
    action = [&] {
      FqPtr f = make_field(g);
      if (level.empty()) throw UsageError("--level is required");
      auto [base, k] = parse_level(f, level);
      AIdeal b(base), a = b.pow(k);
      auto R = std::make_shared<const QuotRing>(a);
      std::vector<QuotMat> ms;
      std::stringstream ss(gens);
      for (std::string item; std::getline(ss, item, ';');)
        if (item.find_first_not_of(" ") != std::string::npos) ms.push_back(parse_mat(*R, item));
      MatGroup G = closure(R, ms), H = commutator_subgroup(G);
      json j{{"level", a.str()},
             {"order", G.order()},
             {"gl2_order", gl2_order(a)},
             {"det_image_order", G.det_image().size()},
             {"commutator_order", H.order()},
             {"contains_sl2", contains_sl2(G)}};
      if (k == 1 && b.is_prime()) {
        j["irreducible"] = is_irreducible(G);
        j["contains_sl2_mod_lambda"] = contains_sl2_modl(G);
      }
      if (k == 2 && b.is_prime()) {
        FullGL2Report r = full_gl2_conditions(G, b);
        json conds = json::array();
        for (int i = 0; i < 5; ++i) conds.push_back(r.applicable[i] ? tri(r.cond[i]) : "n/a");
        j["full_gl2_conditions"] = conds;
        j["full_gl2_verdict"] = tri(r.verdict);
      }
      if (g.json) {
        std::cout << j.dump(2) << "\n";
      } else {
        for (auto& [key, v] : j.items()) std::cout << key << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
      return kOk;
    };
  });

  // wild2
  auto* wild = app.add_subcommand("wild2", "ramification at infinity of the 2-torsion tower, q = 2");
  wild->add_option("--phi", phi, "phi_t as \"t,a1,a2\"");
  wild->callback([&] {
    action = [&] {
      FqPtr f = make_field(g);
      Wild2Report r = wild2_report(integral_module(f, phi));
      auto cls = [](const ASClass& c) {
        return json{{"u", c.u.str()},
                    {"reduced", c.reduced.str()},
                    {"v_inf", c.v_inf == kInfVal ? json("inf") : json(c.v_inf)},
                    {"v_reduced", c.v_reduced == kInfVal ? json("inf") : json(c.v_reduced)},
                    {"ramified", c.ramified}};
      };
      json j{{"v_inf_j", r.v_inf_j == kInfVal ? json("inf") : json(r.v_inf_j)},
             {"classes", json::array({cls(r.cls[0]), cls(r.cls[1])})},
             {"combined", cls(r.combined)},
             {"distinct", r.distinct ? json(*r.distinct) : json("unknown")},
             {"verdict", r.vinf_criterion}};
      if (g.json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "v_inf(j) = " << j["v_inf_j"].dump() << "\n";
        for (int i = 0; i < 2; ++i)
          std::cout << "i=" << i << ": u = " << r.cls[i].u.str() << ", reduced = " << r.cls[i].reduced.str()
                    << ", v_inf = " << j["classes"][i]["v_inf"].dump() << (r.cls[i].ramified ? ", ramified" : "") << "\n";
        std::cout << "classes distinct: " << j["distinct"].dump() << "\n";
        std::cout << "verdict: " << (r.vinf_criterion ? "full image criterion holds" : "inconclusive") << "\n";
      }
      return r.vinf_criterion ? kOk : kInconclusive;
    };
  });

  // density
  std::string set, csv;
  int d = 0, m = 0;
  bool exact = false;
  std::uint64_t samples = 0;
  unsigned threads = 1;
  auto* den = app.add_subcommand("density", "count or sample a set of pairs (a1, a2) of degree <= d");
  den->add_option("--set", set, "R, S, T, C, ModLFullCertified or DetIndexEquals(k)")->required();
  den->add_option("--d", d, "degree bound")->required()->check(CLI::NonNegativeNumber);
  den->add_option("--m", m, "parameter of S_m and T_m");
  den->add_option("--lambda", lambda, "level for ModLFullCertified");
  auto* ex = den->add_flag("--exact", exact, "enumerate every pair");
  auto* sm = den->add_option("--samples", samples, "number of samples");
  ex->excludes(sm);
  den->add_option("--csv", csv, "append the result to this CSV file");
  den->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  den->callback([&] {
    action = [&] {
      FqPtr f = make_field(g);
      if (!exact && samples == 0) throw UsageError("give --exact or --samples N");
      std::string name = set;
      if ((set == "S" || set == "T")) {
        if (m < 2) throw UsageError("--m >= 2 is required for S and T");
        name += "_" + std::to_string(m);
      } else if (set == "ModLFullCertified") {
        name += prime_ideal(f, lambda, "--lambda").str();
      }
      SetDescriptor desc = SetDescriptor::parse(f, name);
      DensityEstimate e =
          count_set(f, desc, d, exact ? DensityMode{true, 0, 0, threads} : DensityMode::Sampled(samples, g.seed, threads));
      if (!csv.empty()) {
        std::ifstream probe(csv);
        bool fresh = !probe.good() || probe.peek() == std::ifstream::traits_type::eof();
        probe.close();
        std::ofstream out(csv, std::ios::app);
        if (!out) throw std::runtime_error("cannot write " + csv);
        if (fresh) out << csv_header() << "\n";
        out << e.csv_row() << "\n";
      }
      if (g.json)
        std::cout << json{{"set", e.set}, {"q", e.q},         {"d", e.d},        {"mode", exact ? "exact" : "sampled"},
                          {"count", e.count}, {"total", e.total}, {"ratio", e.ratio}, {"seed", exact ? json(nullptr) : json(g.seed)}}
                         .dump(2)
                  << "\n";
      else
        std::cout << csv_header() << "\n" << e.csv_row() << "\n";
      return kOk;
    };
  });

  // reproduce
  std::vector<int> only;
  auto* rep = app.add_subcommand("reproduce", "run the acceptance criteria and print a pass/fail table");
  rep->add_option("--only", only, "criterion ids")->check(CLI::Range(1, 10));
  rep->callback([&] {
    action = [&] {
      std::vector<int> ids = only.empty() ? acceptance_ids() : only;
      json rows = json::array();
      int failed = 0;
      run_acceptance(ids, [&](const CriterionResult& r) {
        failed += !r.pass;
        if (g.json)
          rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
        else
          std::cout << format_result(r) << std::endl;
      });
      if (g.json)
        std::cout << rows.dump(2) << "\n";
      else
        std::cout << (ids.size() - failed) << "/" << ids.size() << " criteria passed\n";
      return failed ? kInconclusive : kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kInconclusive;
  }
}
