// Copyright 2026 The jetcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jetcalc/format.hpp"

#include <cctype>

#include "jetcalc/error.hpp"

namespace jetcalc {

std::string to_string(const Monomial& m) {
  std::string out;
  for (const Factor& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += f.var.to_string();
    if (f.exponent > 1) out += '^' + std::to_string(f.exponent);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    first = false;
    const Rational magnitude = negative ? -t.coeff : t.coeff;
    if (t.monomial.is_one()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += to_string(t.monomial);
    } else {
      out += magnitude.to_string() + '*' + to_string(t.monomial);
    }
  }
  return out;
}

std::string Polynomial::to_string() const { return jetcalc::to_string(*this); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(parse_term());
      if (sign < 0) terms.back().coeff = -terms.back().coeff;
      skip_ws();
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Term parse_term() {
    Rational coeff(1);
    std::vector<Factor> factors;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (peek() == '/') {
        ++pos_;
        num += '/' + digits();
      }
      coeff = Rational::parse(num);
      skip_ws();
      if (peek() != '*') return {Monomial(), coeff};
      ++pos_;
      skip_ws();
    }
    factors.push_back(parse_factor());
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      skip_ws();
      factors.push_back(parse_factor());
      skip_ws();
    }
    return {Monomial(std::move(factors)), coeff};
  }

  Factor parse_factor() {
    VarId var = parse_var();
    unsigned exponent = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      exponent = static_cast<unsigned>(small_positive("exponent"));
    }
    return {var, exponent};
  }

  VarId parse_var() {
    const char c = peek();
    if (c != 'x' && c != 'a') fail("expected variable 'x[j,s]' or 'a[i]'");
    ++pos_;
    expect('[');
    const int first = small_positive("index");
    if (c == 'a') {
      expect(']');
      return VarId::param(first);
    }
    expect(',');
    const int second = small_positive("order");
    expect(']');
    return VarId::jet(first, second);
  }

  int small_positive(const char* what) {
    skip_ws();
    const std::string d = digits();
    if (d.size() > 4 || std::stoi(d) < 1) fail(std::string(what) + " must be in 1..9999");
    return std::stoi(d);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
    skip_ws();
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::parse, "cannot parse polynomial '" + std::string(text_) +
                                      "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : p.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (const Factor& f : t.monomial.factors()) {
      if (f.var.is_jet())
        exps.push_back({"x", f.var.component(), f.var.order(), f.exponent});
      else
        exps.push_back({"a", f.var.index(), f.exponent});
    }
    terms.push_back({{"coeff", t.coeff.to_string()}, {"exps", std::move(exps)}});
  }
  return {{"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  try {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      std::vector<Factor> factors;
      for (const auto& e : t.at("exps")) {
        const std::string kind = e.at(0).get<std::string>();
        if (kind == "x" && e.size() == 4) {
          factors.push_back({VarId::jet(e.at(1).get<int>(), e.at(2).get<int>()),
                             e.at(3).get<unsigned>()});
        } else if (kind == "a" && e.size() == 3) {
          factors.push_back({VarId::param(e.at(1).get<int>()), e.at(2).get<unsigned>()});
        } else {
          throw Error(ErrorKind::parse, "malformed exponent entry " + e.dump());
        }
        if (factors.back().exponent == 0)
          throw Error(ErrorKind::parse, "zero exponent in " + e.dump());
      }
      terms.push_back({Monomial(std::move(factors)),
                       Rational::parse(t.at("coeff").get<std::string>())});
    }
    return Polynomial::from_terms(std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace jetcalc
