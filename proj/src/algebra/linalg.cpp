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
#include "gl2/algebra/linalg.hpp"

#include <stdexcept>

namespace gl2 {

std::vector<Fe> mat_vec(const Fq& F, const FqMatrix& m, const std::vector<Fe>& v) {
  if (static_cast<int>(v.size()) != m.cols) throw std::domain_error("dimension mismatch");
  std::vector<Fe> out(m.rows, 0);
  for (int j = 0; j < m.cols; ++j) {
    Fe x = v[j];
    if (x == 0) continue;
    for (int i = 0; i < m.rows; ++i) {
      Fe c = m.at(i, j);
      if (c) out[i] = F.add(out[i], F.mul(c, x));
    }
  }
  return out;
}

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(const Fq& F, FqMatrix& m) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int s = r;
    while (s < m.rows && m.at(s, c) == 0) ++s;
    if (s == m.rows) continue;
    if (s != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(s, j), m.at(r, j));
    Fe inv = F.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      Fe f = m.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < m.cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

int rank(const Fq& F, FqMatrix m) { return static_cast<int>(rref(F, m).size()); }

std::vector<std::vector<Fe>> nullspace(const Fq& F, FqMatrix m) {
  std::vector<int> piv = rref(F, m);
  std::vector<char> is_piv(m.cols, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<std::vector<Fe>> out;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Fe> v(m.cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(m.at(static_cast<int>(r), f));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Fe>> solve(const Fq& F, FqMatrix m, const std::vector<Fe>& b) {
  FqMatrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> piv = rref(F, aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  std::vector<Fe> x(m.cols, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(static_cast<int>(r), m.cols);
  return x;
}

}  // namespace gl2
