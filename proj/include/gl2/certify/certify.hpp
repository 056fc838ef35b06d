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
#ifndef GL2_CERTIFY_CERTIFY_HPP
#define GL2_CERTIFY_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gl2/drinfeld/module.hpp"
#include "gl2/frobenius/frobenius.hpp"

namespace gl2 {

/// A prime of stable rank 1 reduction, usable for the Tate-curve inertia rules.
struct InertiaWitness {
  AIdeal prime;
  int v = 0;  // v_p(j) < 0
  bool gcd_q_one = false;
  bool deg_gt1 = false;
  ReductionReport report;
};

struct InertiaConstraints {
  std::vector<AIdeal> exclude;
  bool need_deg_gt1 = false;
  bool need_gcd_q = true;
};

/// first StableRank1 bad prime in canonical order meeting the constraints
std::optional<InertiaWitness> find_inertia_witness(const DrinfeldModule& dm, const InertiaConstraints& c = {});

/// index of the mod-a image of the rank 1 module t + Delta tau in (A/a)^x
int rank1_index(const APoly& delta, const AIdeal& a);

/// adelic determinant index gcd(d-1, (q-1)/e); rank 2 with a_2 a nonzero polynomial
int det_index(const DrinfeldModule& dm);

struct DetMod {
  /// gcd of d-1, q-1 and v_p(a_2) for p not dividing a
  int g = 0;
  /// exact index of det mod a; depends only on the primes dividing a
  int index = 0;
  bool surjective = false;  // index == 1, so also mod every a^i
};

DetMod det_surjective_mod(const DrinfeldModule& dm, const AIdeal& a);

enum class ClaimKind { ModLFull, LambdaAdicFull, AllLambdaFull, CommutatorFull, AdelicFull, IndexDivides, Fact };
enum class CertStatus { Proven, Inconclusive };
std::string to_string(CertStatus s);

/// Node of a certificate tree: a claim, the rule used and its premises.
struct Certificate {
  ClaimKind kind = ClaimKind::Fact;
  std::optional<AIdeal> lambda;
  int k = 0;  // IndexDivides
  std::string fact;  // ClaimKind::Fact label
  CertStatus status = CertStatus::Inconclusive;
  std::string rule;
  std::string detail;
  std::vector<Certificate> premises;

  bool proven() const { return status == CertStatus::Proven; }
  std::string claim() const;
  nlohmann::json to_json() const;
};

struct CertifyOptions {
  /// degree cap for the irreducibility witness search
  int irreducibility_max_degree = 6;
  /// largest explicit lambda degree handled by all_lambda_certificate
  int explicit_max_degree = 4;
  /// degree cap for the prime pair of irreducibility_bound
  int bound_max_degree = 8;
  /// allow the v_inf(j) criterion for q = 2
  bool use_vinf_criterion = true;
};

Certificate modl_full_certificate(const DrinfeldModule& dm, const AIdeal& lambda, const CertifyOptions& opt = {});
Certificate lambda_adic_full_certificate(const DrinfeldModule& dm, const AIdeal& lambda, const CertifyOptions& opt = {});
Certificate all_lambda_certificate(const DrinfeldModule& dm, const CertifyOptions& opt = {});

struct AdelicResult {
  /// AdelicFull, CommutatorFull with IndexDivides, or an Inconclusive AdelicFull node
  Certificate cert;
  int det_index = 0;
  /// [GL_2(A^) : G] >= lower; divides upper when upper > 0
  int index_lower = 1;
  int index_upper = 0;
};

AdelicResult adelic_certificate(const DrinfeldModule& dm, const CertifyOptions& opt = {});

struct SieveFlags {
  bool in_r = false;
  bool in_s = false;
  bool in_t = false;
  std::string note;
};

/// membership of (a1, a2) in R, S_m and T_m; m >= 2
SieveFlags sieve_membership(const APoly& a1, const APoly& a2, int m);

/// x^2 - a x + b has no root in A/lambda; lambda prime with N(lambda) <= 65536
bool irreducible_mod(const APoly& a, const APoly& b, const AIdeal& lambda);

}  // namespace gl2

#endif
