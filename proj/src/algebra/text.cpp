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
#include "gl2/algebra/text.hpp"

#include <cctype>
#include <stdexcept>

#include "gl2/algebra/apoly.hpp"

namespace gl2 {

std::string format_fq(const Fq& f, Fe a) {
  if (f.is_prime_field()) return std::to_string(a);
  if (a == 0) return "0";
  std::string out;
  for (std::uint32_t i = f.e(); i-- > 0;) {
    std::uint32_t d = f.digit(a, i);
    if (d == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d);
      continue;
    }
    if (d != 1) out += std::to_string(d) + "*";
    out += f.spec().symbol;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string format_apoly(const APoly& a) {
  if (a.is_zero()) return "0";
  const Fq& f = a.fq();
  std::string out;
  for (int k = a.degree(); k >= 0; --k) {
    Fe c = a.coeff(k);
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    std::string cs = format_fq(f, c);
    if (k == 0) {
      out += cs;
      continue;
    }
    std::string mono = k == 1 ? "t" : "t^" + std::to_string(k);
    if (c == 1)
      out += mono;
    else if (cs.find('+') == std::string::npos)
      out += cs + "*" + mono;
    else
      out += "(" + cs + ")*" + mono;
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const FqPtr& f, std::string_view s) : f_(f), s_(s) {}

  APoly run() {
    APoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(s_) + "': " + what + " at position " +
                                std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == '(' || c == f_->spec().symbol;
  }

  APoly expr() {
    APoly acc(f_);
    bool neg = false;
    char c = peek();
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++pos_;
    }
    APoly first = term();
    acc = neg ? -first : first;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      APoly t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  APoly term() {
    APoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (starts_factor(c)) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  unsigned long long integer() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    unsigned long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned long long>(s_[pos_] - '0');
      if (v > (1ull << 40)) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  APoly factor() {
    APoly base = primary();
    if (peek() == '^') {
      ++pos_;
      base = base.pow(integer());
    }
    return base;
  }

  APoly primary() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long long v = integer();
      return APoly::constant(f_, f_->from_int(static_cast<long long>(v % f_->p())));
    }
    if (c == 't') {
      ++pos_;
      return APoly::t(f_);
    }
    if (c == f_->spec().symbol) {
      if (f_->is_prime_field()) fail("generator symbol used over a prime field");
      ++pos_;
      return APoly::constant(f_, f_->gen());
    }
    if (c == '(') {
      ++pos_;
      APoly v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    fail("expected a term");
  }

  const FqPtr& f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

APoly parse_apoly(const FqPtr& f, std::string_view text) {
  if (strip(text).empty()) throw std::invalid_argument("empty polynomial");
  return Parser(f, text).run();
}

Fe parse_fq(const FqPtr& f, std::string_view text) {
  APoly a = parse_apoly(f, text);
  if (a.degree() > 0) throw std::invalid_argument("expected a constant, got '" + std::string(text) + "'");
  return a.coeff(0);
}

std::pair<APoly, int> parse_level(const FqPtr& f, std::string_view text) {
  text = strip(text);
  int k = 1;
  // a trailing ^k applies to the whole ideal only when the base is parenthesised
  if (!text.empty() && text.front() == '(') {
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string_view::npos) throw std::invalid_argument("unbalanced parentheses in ideal");
    std::string_view rest = strip(text.substr(close + 1));
    if (!rest.empty()) {
      if (rest.front() != '^') throw std::invalid_argument("malformed ideal '" + std::string(text) + "'");
      std::string digits(strip(rest.substr(1)));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed ideal exponent");
      k = std::stoi(digits);
      if (k < 1) throw std::invalid_argument("ideal exponent must be positive");
    }
    text = text.substr(1, close - 1);
  }
  return {parse_apoly(f, text), k};
}

std::vector<std::string> split_top(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back(strip(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.emplace_back(strip(cur));
  return out;
}

}  // namespace gl2
