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
#ifndef GL2_FROBENIUS_FROBENIUS_HPP
#define GL2_FROBENIUS_FROBENIUS_HPP

#include <array>
#include <optional>
#include <vector>

#include "gl2/algebra/quot_ring.hpp"
#include "gl2/algebra/upoly.hpp"
#include "gl2/drinfeld/module.hpp"

namespace gl2 {

/**
 * @brief The a-torsion of a reduced module as an explicit A/a-module.
 *
 * The kernel of phi_a lives in the extension E of F_p generated by all its
 * roots.  Points are kept both as elements of E and as coordinate vectors
 * over F_q in a fixed F_q-basis of the kernel.
 */
struct TorsionBasis {
  AIdeal level;
  FFPtr field;  // E
  int split_degree = 1;  // [E : F_p]
  std::shared_ptr<const QuotRing> ring;  // A/a
  /// all kernel points in canonical order of E
  std::vector<FiniteField::Elem> points;
  /// coordinates of points[i] in the basis (P1, P2)
  std::vector<std::array<QuotRing::R, 2>> coords;
  std::size_t p1 = 0, p2 = 0;  // indices of the basis points
  /// x -> x^(q^deg p) on the kernel, as an F_q-matrix in kernel coordinates
  FqMatrix frob_action;
  /// kernel coordinates of points[i]
  std::vector<std::vector<Fe>> kernel_coords;
  /// point index by base-q key of its kernel coordinates
  std::vector<std::size_t> by_key;

  /// index of the point with the given kernel coordinates
  std::size_t find(const std::vector<Fe>& v) const;
};

/// smallest m with the a-torsion rational over the degree-m extension of F_p
int splitting_degree(const ReducedModule& dm, const AIdeal& a);

/// std::domain_error when a is not coprime to the characteristic or |A/a| > 81 for composite a
TorsionBasis torsion_basis(const ReducedModule& dm, const AIdeal& a);

/// Frobenius at p acting on a-torsion.
struct FrobSample {
  AIdeal prime;
  AIdeal level;
  std::shared_ptr<const QuotRing> ring;
  /// matrix in the chosen basis: column j holds the image of the j-th basis point
  std::array<std::array<QuotRing::R, 2>, 2> m{};
  QuotRing::R trace = 0;
  QuotRing::R det = 0;

  /// x^2 - trace x + det with entries reduced mod a
  AXPoly charpoly() const;
};

FrobSample frob_matrix(const ReducedModule& dm, const AIdeal& a);
FrobSample frob_matrix(const DrinfeldModule& dm, const AIdeal& p, const AIdeal& a);

/// x^2 - a x + b, the characteristic polynomial of Frobenius at p
struct FrobPoly {
  AIdeal prime;
  int degree = 0;
  APoly a;  // trace
  APoly b;  // constant term
  /// CRT levels used to recover the trace
  std::vector<AIdeal> levels;

  AXPoly poly() const;
  /// "x^2 + (c1)*x + (c0)"
  std::string str() const;
};

/**
 * Exact Frobenius polynomial at a good prime p.  The trace is recovered by
 * CRT over small primes avoiding p and the bad locus; the result is checked
 * against the identity pi^2 - phi_a pi + phi_b = 0 in F_p{tau}, pi = tau^deg p.
 * std::logic_error if a check fails.
 */
FrobPoly frob_charpoly_exact(const DrinfeldModule& dm, const AIdeal& p);

/// The same polynomial read off directly from pi^2 + phi_b = phi_a pi in F_p{tau}; no torsion is computed.
FrobPoly frob_charpoly_skew(const DrinfeldModule& dm, const AIdeal& p);

/// monic polynomial whose roots are the n-th powers of the roots of P
AXPoly power_poly(const AXPoly& P, int n);

struct IrreducibilityBound {
  int bound = 0;  // B = 2nd
  int n = 0;
  int d = 0;
  bool n_auto_one = false;
  AIdeal p1, p2;
  FrobPoly P1, P2;
  /// Res(P1^(n), P2^(n)); every reducible level outside {p1, p2} divides it
  APoly resultant;
};

/// n = 0 selects n automatically; std::nullopt when no pair of good primes of equal degree <= max_degree exists
std::optional<IrreducibilityBound> irreducibility_bound(const DrinfeldModule& dm, int n = 0, int max_degree = 8);

/// the automatic n: 1 under the single-bad-prime premises, else (q-1)^2(q+1)
int auto_power(const DrinfeldModule& dm, bool* is_one = nullptr);

}  // namespace gl2

#endif
