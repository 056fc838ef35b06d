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
#ifndef GL2_ALGEBRA_LINALG_HPP
#define GL2_ALGEBRA_LINALG_HPP

#include <optional>
#include <vector>

#include "gl2/algebra/fq.hpp"

namespace gl2 {

/// Dense row-major matrix over F_q.
struct FqMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Fe> a;

  FqMatrix() = default;
  FqMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  Fe& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Fe at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  void set_column(int j, const std::vector<Fe>& v) {
    for (int i = 0; i < rows; ++i) at(i, j) = v[i];
  }
};

std::vector<Fe> mat_vec(const Fq& F, const FqMatrix& m, const std::vector<Fe>& v);
int rank(const Fq& F, FqMatrix m);
/// basis of {v : m v = 0}
std::vector<std::vector<Fe>> nullspace(const Fq& F, FqMatrix m);
/// some x with m x = b
std::optional<std::vector<Fe>> solve(const Fq& F, FqMatrix m, const std::vector<Fe>& b);

}  // namespace gl2

#endif
