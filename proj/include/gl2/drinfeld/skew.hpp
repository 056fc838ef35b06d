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
#ifndef GL2_DRINFELD_SKEW_HPP
#define GL2_DRINFELD_SKEW_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gl2/algebra/finite_field.hpp"
#include "gl2/algebra/ratfunc.hpp"

namespace gl2 {

/// Coefficients in F = F_q(t).
class FracCoeffs {
 public:
  using Elem = RatFunc;
  explicit FracCoeffs(FqPtr f) : f_(std::move(f)) {}

  const FqPtr& fq_ptr() const { return f_; }
  Elem zero() const { return RatFunc(f_); }
  Elem one() const { return RatFunc(APoly::constant(f_, 1)); }
  Elem from_fq(Fe c) const { return RatFunc(APoly::constant(f_, c)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return a.inv(); }
  /// a^(q^k); exact because the constants lie in F_q
  Elem frob(const Elem& a, int k) const;
  static bool is_zero(const Elem& a) { return a.is_zero(); }
  bool same(const FracCoeffs& o) const { return f_ == o.f_ || f_->same_as(*o.f_); }
  std::string str(const Elem& a) const { return a.str(); }

 private:
  FqPtr f_;
};

/// Coefficients in a finite field F_q-algebra given as a tower.
class FFCoeffs {
 public:
  using Elem = FiniteField::Elem;
  explicit FFCoeffs(FFPtr K) : K_(std::move(K)) {}

  const FFPtr& field() const { return K_; }
  const FqPtr& fq_ptr() const { return K_->fq_ptr(); }
  Elem zero() const { return K_->zero(); }
  Elem one() const { return K_->one(); }
  Elem from_fq(Fe c) const { return K_->from_fq(c); }
  Elem add(const Elem& a, const Elem& b) const { return K_->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return K_->sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return K_->mul(a, b); }
  Elem inv(const Elem& a) const { return K_->inv(a); }
  Elem frob(const Elem& a, int k) const {
    Elem r = a;
    for (int i = 0; i < k % K_->dim(); ++i) r = K_->frob(r);
    return r;
  }
  static bool is_zero(const Elem& a) { return FiniteField::is_zero(a); }
  bool same(const FFCoeffs& o) const { return K_ == o.K_; }
  std::string str(const Elem& a) const { return K_->str(a); }

 private:
  FFPtr K_;
};

/**
 * @brief Element of K{tau}, the skew polynomials with tau*c = c^q*tau.
 *
 * Also read as the additive polynomial sum c_i x^(q^i).
 */
template <class C>
class SkewPoly {
 public:
  using Elem = typename C::Elem;

  explicit SkewPoly(C ring) : ring_(std::move(ring)) {}
  SkewPoly(C ring, std::vector<Elem> c) : ring_(std::move(ring)), c_(std::move(c)) { trim(); }

  static SkewPoly constant(C ring, Elem c) { return SkewPoly(ring, {std::move(c)}); }
  static SkewPoly tau_power(C ring, int k) {
    std::vector<Elem> v(k + 1, ring.zero());
    v[k] = ring.one();
    return SkewPoly(ring, std::move(v));
  }

  const C& ring() const { return ring_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : ring_.zero(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// the constant term, a ring homomorphism K{tau} -> K
  Elem d0() const { return coeff(0); }

  /// tau^k * this
  SkewPoly tau_left(int k) const {
    std::vector<Elem> v(k, ring_.zero());
    for (auto& x : c_) v.push_back(ring_.frob(x, k));
    return SkewPoly(ring_, std::move(v));
  }

  SkewPoly scale_left(const Elem& a) const {
    std::vector<Elem> v;
    for (auto& x : c_) v.push_back(ring_.mul(a, x));
    return SkewPoly(ring_, std::move(v));
  }

  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    a.check(b);
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), a.ring_.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.ring_.add(a.coeff(int(i)), b.coeff(int(i)));
    return SkewPoly(a.ring_, std::move(v));
  }

  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
    a.check(b);
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), a.ring_.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.ring_.sub(a.coeff(int(i)), b.coeff(int(i)));
    return SkewPoly(a.ring_, std::move(v));
  }

  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return SkewPoly(a.ring_);
    const C& R = a.ring_;
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, R.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (C::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (C::is_zero(b.c_[j])) continue;
        v[i + j] = R.add(v[i + j], R.mul(a.c_[i], R.frob(b.c_[j], int(i))));
      }
    }
    return SkewPoly(R, std::move(v));
  }

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a.c_ == b.c_); }

  /// (h, r) with this = h*g + r and deg r < deg g
  std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& g) const {
    check(g);
    if (g.is_zero()) throw std::domain_error("right division by zero skew polynomial");
    const C& R = ring_;
    const int dg = g.degree();
    std::vector<Elem> r = c_;
    std::vector<Elem> h(std::max(0, degree() - dg + 1), R.zero());
    for (int n = degree(); n >= dg; --n) {
      if (C::is_zero(r[n])) continue;
      // (c tau^(n-dg)) * g has leading coefficient c * lead(g)^(q^(n-dg))
      Elem c = R.mul(r[n], R.inv(R.frob(g.c_.back(), n - dg)));
      h[n - dg] = c;
      for (int i = 0; i <= dg; ++i) r[n - dg + i] = R.sub(r[n - dg + i], R.mul(c, R.frob(g.c_[i], n - dg)));
    }
    if (static_cast<int>(r.size()) > dg) r.resize(dg, R.zero());
    return {SkewPoly(R, std::move(h)), SkewPoly(R, std::move(r))};
  }

  SkewPoly right_mod(const SkewPoly& g) const { return right_divmod(g).second; }

  /// sum c_i x^(q^i)
  Elem eval(const Elem& x) const {
    Elem r = ring_.zero(), xp = x;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) xp = ring_.frob(xp, 1);
      if (!C::is_zero(c_[i])) r = ring_.add(r, ring_.mul(c_[i], xp));
    }
    return r;
  }

  /// "t^2 + (t^2+t)*tau + tau^2"
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
      if (C::is_zero(c_[i])) continue;
      std::string mono = i == 0 ? "" : (i == 1 ? "tau" : "tau^" + std::to_string(i));
      std::string cs = ring_.str(c_[i]);
      std::string term;
      if (i > 0 && cs == "1")
        term = mono;
      else if (i == 0)
        term = cs;
      else
        term = "(" + cs + ")*" + mono;
      out += out.empty() ? term : " + " + term;
    }
    return out;
  }

  /// "x^4+(t)*x"
  std::string additive_str() const {
    if (is_zero()) return "0";
    const std::uint64_t q = ring_.fq_ptr()->q();
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (C::is_zero(c_[i])) continue;
      std::uint64_t e = 1;
      for (int k = 0; k < i; ++k) e *= q;
      std::string mono = e == 1 ? "x" : "x^" + std::to_string(e);
      std::string cs = ring_.str(c_[i]);
      std::string term = cs == "1" ? mono : "(" + cs + ")*" + mono;
      out += out.empty() ? term : "+" + term;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && C::is_zero(c_.back())) c_.pop_back();
  }
  void check(const SkewPoly& b) const {
    if (!ring_.same(b.ring_)) throw std::domain_error("skew polynomials over different coefficient fields");
  }

  C ring_;
  std::vector<Elem> c_;
};

using GlobalSkew = SkewPoly<FracCoeffs>;
using FFSkew = SkewPoly<FFCoeffs>;
/// additive polynomials share the representation
template <class C>
using AdditivePoly = SkewPoly<C>;

}  // namespace gl2

#endif
