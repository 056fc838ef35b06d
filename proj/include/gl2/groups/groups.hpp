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
#ifndef GL2_GROUPS_GROUPS_HPP
#define GL2_GROUPS_GROUPS_HPP

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gl2/algebra/quot_ring.hpp"

namespace gl2 {

using RingPtr = std::shared_ptr<const QuotRing>;

/// Thrown when a closure would exceed its element cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 2x2 matrix over A/a, entries row-major (a b; c d).
struct QuotMat {
  std::array<QuotRing::R, 4> e{};
  QuotRing::R det = 0;

  std::uint64_t key() const;
  static QuotMat from_key(const QuotRing& R, std::uint64_t k);
  friend bool operator==(const QuotMat& x, const QuotMat& y) { return x.e == y.e; }
};

QuotMat make_mat(const QuotRing& R, QuotRing::R a, QuotRing::R b, QuotRing::R c, QuotRing::R d);
QuotMat mat_identity(const QuotRing& R);
QuotMat mat_mul(const QuotRing& R, const QuotMat& x, const QuotMat& y);
/// std::domain_error if det is not a unit
QuotMat mat_inv(const QuotRing& R, const QuotMat& x);
QuotMat mat_commutator(const QuotRing& R, const QuotMat& x, const QuotMat& y);
/// entries reduced from A/a to A/b; b must divide a
QuotMat mat_reduce(const QuotRing& from, const QuotRing& to, const QuotMat& x);
/// "[[a,b],[c,d]]" in the polynomial grammar
QuotMat parse_mat(const QuotRing& R, const std::string& text);
std::string mat_str(const QuotRing& R, const QuotMat& x);

inline constexpr std::size_t kDefaultGroupCap = 4096;

/// Finite subgroup of GL_2(A/a) with its materialized element set.
class MatGroup {
 public:
  MatGroup() = default;

  const RingPtr& ring() const { return ring_; }
  const std::vector<QuotMat>& gens() const { return gens_; }
  /// element keys in increasing order
  const std::vector<std::uint64_t>& keys() const { return keys_; }
  std::size_t order() const { return keys_.size(); }
  bool contains(const QuotMat& x) const;
  QuotMat element(std::size_t i) const { return QuotMat::from_key(*ring_, keys_[i]); }
  /// sorted list of determinants
  std::vector<QuotRing::R> det_image() const;

  friend MatGroup closure(const RingPtr& R, const std::vector<QuotMat>& gens, std::size_t cap);

 private:
  RingPtr ring_;
  std::vector<QuotMat> gens_;
  std::vector<std::uint64_t> keys_;
};

/// smallest subgroup containing gens; ResourceError above cap elements
MatGroup closure(const RingPtr& R, const std::vector<QuotMat>& gens, std::size_t cap = kDefaultGroupCap);
MatGroup commutator_subgroup(const MatGroup& G, std::size_t cap = kDefaultGroupCap);
/// image under reduction to A/b
MatGroup reduce_group(const MatGroup& G, const RingPtr& target, std::size_t cap = kDefaultGroupCap);

std::vector<QuotMat> sl2_generators(const QuotRing& R);
std::vector<QuotMat> gl2_generators(const QuotRing& R);
MatGroup general_linear(const RingPtr& R, std::size_t cap = kDefaultGroupCap);
MatGroup special_linear(const RingPtr& R, std::size_t cap = kDefaultGroupCap);
std::uint64_t gl2_order(const AIdeal& a);
std::uint64_t sl2_order(const AIdeal& a);

/// no line of F_lambda^2 is stable under G; the modulus must be prime
bool is_irreducible(const MatGroup& G);
/// irreducible and |F_lambda| divides |G|
bool contains_sl2_modl(const MatGroup& G);
/// SL_2(A/a) is contained in G, by membership of its generators
bool contains_sl2(const MatGroup& G);

/// the images G^[i] of the lambda-adic filtration of G mod lambda^k
struct Filtration {
  AIdeal lambda;
  int level = 0;
  RingPtr residue;  // A/lambda
  MatGroup gbar;
  MatGroup hbar;
  /// g[i], h[i] for 1 <= i < level as sorted matrix keys over A/lambda; index 0 unused
  std::vector<std::vector<std::uint64_t>> g, h;

  bool g_full(int i) const;
  bool g_trace_zero(int i) const;
  bool h_full(int i) const;
  bool h_trace_zero(int i) const;
  /// contains a nonscalar matrix
  bool g_nonscalar(int i) const;
};

Filtration filtration(const MatGroup& G, const AIdeal& lambda, int k, std::size_t cap = kDefaultGroupCap);

enum class Tri { False, True, Unknown };
std::string to_string(Tri t);

/// Inputs to the full-GL_2 criterion when no explicit group is available.
struct FullGL2Evidence {
  std::uint64_t residue_size = 0;  // N(lambda)
  Tri det_full = Tri::Unknown;
  Tri modl_full = Tri::Unknown;
  Tri nonscalar_level1 = Tri::Unknown;
  Tri full_mod_lambda2 = Tri::Unknown;
  Tri order2_in_sl2 = Tri::Unknown;
};

struct FullGL2Report {
  /// conditions (a)..(e)
  std::array<Tri, 5> cond{Tri::Unknown, Tri::Unknown, Tri::Unknown, Tri::Unknown, Tri::Unknown};
  std::array<bool, 5> applicable{};
  Tri verdict = Tri::Unknown;
  /// exhaustive mode only: verdict checked against |G| = |GL_2(A/lambda^2)|
  bool cross_checked = false;
};

/// exhaustive mode: G is a subgroup of GL_2(A/lambda^2)
FullGL2Report full_gl2_conditions(const MatGroup& G, const AIdeal& lambda, std::size_t cap = kDefaultGroupCap);
FullGL2Report full_gl2_conditions(const FullGL2Evidence& ev);

/// Evidence for the adelic commutator criterion; witnesses are free text.
struct CommutatorEvidence {
  std::uint32_t q = 0;
  std::array<Tri, 4> cond{Tri::Unknown, Tri::Unknown, Tri::Unknown, Tri::Unknown};
  std::array<std::string, 4> witness;
};

struct CommutatorReport {
  std::array<Tri, 4> cond{Tri::Unknown, Tri::Unknown, Tri::Unknown, Tri::Unknown};
  std::array<bool, 4> applicable{};
  std::array<std::string, 4> witness;
  /// all applicable conditions proven
  bool verdict = false;
};

CommutatorReport commutator_conditions(const CommutatorEvidence& ev);

/// B mod lambda lies in [GL_2(F_lambda), GL_2(F_lambda)]
bool in_residual_commutator(const QuotRing& R, const QuotMat& x, const AIdeal& lambda);

}  // namespace gl2

#endif
