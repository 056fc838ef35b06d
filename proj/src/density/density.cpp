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
#include "gl2/density/density.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <random>
#include <stdexcept>
#include <vector>

#include "gl2/certify/certify.hpp"

namespace gl2 {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (std::uint64_t(1) << 63) / b) throw std::length_error("pair space too large");
    r *= b;
  }
  return r;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t i) {
  std::seed_seq ss{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(i), std::uint32_t(i >> 32)};
  return std::mt19937_64(ss);
}

std::string mode_str(const DensityMode& m) {
  if (m.exact) return "exact";
  return "sampled(n=" + std::to_string(m.samples) + ";seed=" + std::to_string(m.seed) + ")";
}

int int_after(const std::string& s, std::size_t pos) {
  std::size_t used = 0;
  int v = std::stoi(s.substr(pos), &used);
  if (pos + used != s.size()) throw std::invalid_argument("bad set name: " + s);
  return v;
}

// counts i in [0, n) with pred(i), split into contiguous shards
template <class Pred>
std::uint64_t parallel_count(std::uint64_t n, unsigned threads, Pred pred) {
  if (threads <= 1 || n < 2) {
    std::uint64_t c = 0;
    for (std::uint64_t i = 0; i < n; ++i) c += pred(i) ? 1 : 0;
    return c;
  }
  std::vector<std::future<std::uint64_t>> parts;
  for (unsigned s = 0; s < threads; ++s) {
    std::uint64_t lo = n * s / threads, hi = n * (s + 1) / threads;
    parts.push_back(std::async(std::launch::async, [lo, hi, &pred] {
      std::uint64_t c = 0;
      for (std::uint64_t i = lo; i < hi; ++i) c += pred(i) ? 1 : 0;
      return c;
    }));
  }
  std::uint64_t c = 0;
  for (auto& p : parts) c += p.get();
  return c;
}

}  // namespace

std::string SetDescriptor::name() const {
  switch (kind) {
    case SetKind::R:
      return "R";
    case SetKind::S:
      return "S_" + std::to_string(m);
    case SetKind::T:
      return "T_" + std::to_string(m);
    case SetKind::C:
      return "C";
    case SetKind::ModLFullCertified:
      return "ModLFullCertified" + (lambda ? lambda->str() : std::string("()"));
    case SetKind::DetIndexEquals:
      return "DetIndexEquals(" + std::to_string(k) + ")";
  }
  return "";
}

SetDescriptor SetDescriptor::parse(const FqPtr& f, const std::string& text) {
  SetDescriptor d;
  if (text == "R") {
    d.kind = SetKind::R;
  } else if (text == "C") {
    d.kind = SetKind::C;
  } else if (text.rfind("S_", 0) == 0 || text.rfind("T_", 0) == 0) {
    d.kind = text[0] == 'S' ? SetKind::S : SetKind::T;
    d.m = int_after(text, 2);
  } else if (text.rfind("ModLFullCertified(", 0) == 0 && text.back() == ')') {
    d.kind = SetKind::ModLFullCertified;
    d.lambda = parse_ideal(f, text.substr(17));
  } else if (text.rfind("DetIndexEquals(", 0) == 0 && text.back() == ')') {
    d.kind = SetKind::DetIndexEquals;
    d.k = int_after(text.substr(0, text.size() - 1), 15);
  } else {
    throw std::invalid_argument("unknown set: " + text);
  }
  if ((d.kind == SetKind::S || d.kind == SetKind::T) && d.m < 2) throw std::domain_error("S_m and T_m need m >= 2");
  if (d.kind == SetKind::DetIndexEquals && d.k < 1) throw std::domain_error("index must be positive");
  return d;
}

bool SetDescriptor::contains(const APoly& a1, const APoly& a2) const {
  switch (kind) {
    case SetKind::R:
      return sieve_membership(a1, a2, 2).in_r;
    case SetKind::S:
      return sieve_membership(a1, a2, m).in_s;
    case SetKind::T:
      return sieve_membership(a1, a2, m).in_t;
    case SetKind::C:
      return !a1.is_zero() && a1.degree() == a2.degree() - 1;
    case SetKind::ModLFullCertified:
      if (!lambda) throw std::domain_error("ModLFullCertified needs a level");
      return !a2.is_zero() &&
             modl_full_certificate(DrinfeldModule::rank2(RatFunc(a1), RatFunc(a2)), *lambda).proven();
    case SetKind::DetIndexEquals:
      return !a2.is_zero() && det_index(DrinfeldModule::rank2(RatFunc(a1), RatFunc(a2))) == k;
  }
  return false;
}

double DensityEstimate::std_error() const {
  if (mode.exact || total == 0) return 0;
  return std::sqrt(ratio * (1 - ratio) / double(total));
}

std::string csv_header() { return "set,q,d,mode,count,total,ratio"; }

std::string DensityEstimate::csv_row() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", ratio);
  return set + "," + std::to_string(q) + "," + std::to_string(d) + "," + mode_str(mode) + "," +
         std::to_string(count) + "," + std::to_string(total) + "," + buf;
}

std::uint64_t pair_space_size(std::uint32_t q, int d) {
  if (d < 0) throw std::domain_error("degree bound must be nonnegative");
  return ipow(q, 2 * (d + 1));
}

std::pair<APoly, APoly> pair_from_index(const FqPtr& f, int d, std::uint64_t idx) {
  const std::uint64_t half = ipow(f->q(), d + 1);
  return {APoly::from_index(f, idx % half), APoly::from_index(f, idx / half)};
}

std::pair<APoly, APoly> sample_pair(const FqPtr& f, int d, std::uint64_t seed, std::uint64_t i, bool nonzero_a2) {
  const std::uint64_t half = ipow(f->q(), d + 1);
  auto rng = sample_rng(seed, i);
  std::uniform_int_distribution<std::uint64_t> dist(0, half - 1);
  std::uint64_t i1 = dist(rng), i2 = dist(rng);
  while (nonzero_a2 && i2 == 0) i2 = dist(rng);
  return {APoly::from_index(f, i1), APoly::from_index(f, i2)};
}

DensityEstimate count_set(const FqPtr& f, const SetDescriptor& desc, int d, const DensityMode& mode) {
  DensityEstimate e;
  e.set = desc.name();
  e.q = f->q();
  e.d = d;
  e.mode = mode;
  if (mode.exact) {
    e.total = pair_space_size(f->q(), d);
    if (e.total > kExactCap) throw std::length_error("exact enumeration over " + std::to_string(e.total) + " pairs");
    e.count = parallel_count(e.total, mode.threads, [&](std::uint64_t i) {
      auto [a1, a2] = pair_from_index(f, d, i);
      return desc.contains(a1, a2);
    });
  } else {
    if (mode.samples == 0) throw std::domain_error("sampled mode needs a positive sample count");
    pair_space_size(f->q(), d);
    e.total = mode.samples;
    e.count = parallel_count(e.total, mode.threads, [&](std::uint64_t i) {
      auto [a1, a2] = sample_pair(f, d, mode.seed, i);
      return desc.contains(a1, a2);
    });
  }
  e.ratio = double(e.count) / double(e.total);
  return e;
}

DensityEstimate surjectivity_scan(const FqPtr& f, const AIdeal& lambda, int d, std::uint64_t n, std::uint64_t seed,
                                  unsigned threads) {
  if (n == 0) throw std::domain_error("scan needs a positive sample count");
  if (!lambda.is_prime()) throw std::domain_error("scan level must be prime");
  SetDescriptor desc;
  desc.kind = SetKind::ModLFullCertified;
  desc.lambda = lambda;
  DensityEstimate e;
  e.set = desc.name();
  e.q = f->q();
  e.d = d;
  e.mode = DensityMode::Sampled(n, seed, threads);
  e.total = n;
  e.count = parallel_count(n, threads, [&](std::uint64_t i) {
    auto [a1, a2] = sample_pair(f, d, seed, i, true);
    return desc.contains(a1, a2);
  });
  e.ratio = double(e.count) / double(n);
  return e;
}

std::uint64_t c_count_formula(std::uint32_t q, int d) {
  if (d < 1) return 0;
  return std::uint64_t(q - 1) * (q - 1) * q * ((ipow(q, 2 * d) - 1) / (std::uint64_t(q) * q - 1));
}

}  // namespace gl2
