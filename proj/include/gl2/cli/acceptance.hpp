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
#ifndef GL2_CLI_ACCEPTANCE_HPP
#define GL2_CLI_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace gl2 {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// ids 1..10
std::vector<int> acceptance_ids();

/// runs one criterion; exceptions become a failed result
CriterionResult run_criterion(int id);

/// "PASS  [3] determinant index (0.12 s) ..." ; one line
std::string format_result(const CriterionResult& r);

/// runs the given ids in order, reporting each result as it completes
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids,
                                            const std::function<void(const CriterionResult&)>& report = {});

}  // namespace gl2

#endif
