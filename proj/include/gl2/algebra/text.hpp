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
#ifndef GL2_ALGEBRA_TEXT_HPP
#define GL2_ALGEBRA_TEXT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gl2/algebra/fq.hpp"

namespace gl2 {

class APoly;

/*
 * Polynomial grammar.
 *
 * Output: terms c*t^k joined by '+', in descending k.  A coefficient 1 is
 * dropped, t^1 prints as t and t^0 as the bare coefficient.  Elements of a
 * nonprime F_q are written in the generator symbol with the same rules
 * (g^2+g); a coefficient with several terms is parenthesised.
 *
 * Input: any sum/difference of products of integers, t, g and
 * parenthesised subexpressions, with optional '^n' and optional '*'.
 */

std::string format_fq(const Fq& f, Fe a);
std::string format_apoly(const APoly& a);

/// std::invalid_argument on malformed input
APoly parse_apoly(const FqPtr& f, std::string_view text);
Fe parse_fq(const FqPtr& f, std::string_view text);

/// "(g)" or "(g)^k"; the base is returned unnormalised together with k
std::pair<APoly, int> parse_level(const FqPtr& f, std::string_view text);

/// "a,b,c" split at top-level commas
std::vector<std::string> split_top(std::string_view text, char sep);

}  // namespace gl2

#endif
