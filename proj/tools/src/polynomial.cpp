#include "toric/cli/polynomial.hpp"

#include <cctype>
#include <limits>

#include "toric/error.hpp"

namespace toric::cli {

namespace {

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (const auto& [var, exp] : m.factors()) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(var);
    if (exp > 1) out += '^' + std::to_string(exp);
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GradedClass parse() {
    GradedClass out;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = take() == '-';
      skip_space();
    }
    while (true) {
      auto [m, c] = term();
      out.add(m, negative ? Rational(-c) : c);
      skip_space();
      if (at_end()) break;
      const char op = take();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      skip_space();
    }
    return out;
  }

 private:
  std::pair<Monomial, Rational> term() {
    Rational coefficient = 1;
    bool have_coefficient = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(digits());
      Integer den = 1;
      if (!at_end() && peek() == '/') {
        take();
        den = Integer(digits());
        if (den == 0) fail("zero denominator");
      }
      coefficient = Rational(num, den);
      coefficient.canonicalize();
      have_coefficient = true;
      skip_space();
      if (at_end() || peek() != '*') return {Monomial{}, coefficient};
      take();
      skip_space();
    }
    std::vector<Monomial::Factor> factors;
    while (true) {
      if (at_end() || peek() != 'x') fail(have_coefficient ? "expected a variable after '*'" : "expected a term");
      take();
      const auto var = small_number(std::numeric_limits<RayIndex>::max());
      std::uint32_t exp = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        take();
        skip_space();
        exp = small_number(std::numeric_limits<std::uint32_t>::max());
        if (exp == 0) fail("zero exponent");
        skip_space();
      }
      factors.emplace_back(var, exp);
      if (at_end() || peek() != '*') break;
      take();
      skip_space();
    }
    return {Monomial::from_factors(std::move(factors)), coefficient};
  }

  std::string digits() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += take();
    if (s.empty()) fail("expected digits");
    return s;
  }

  std::uint32_t small_number(std::uint32_t limit) {
    const Integer v(digits());
    if (v > limit) fail("number too large");
    return static_cast<std::uint32_t>(v.get_ui());
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at position " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render_polynomial(const GradedClass& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [m, coefficient] : c.terms()) {
    const bool negative = coefficient < 0;
    const Rational magnitude = abs(coefficient);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (m.degree() == 0) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += render_monomial(m);
    } else {
      out += magnitude.get_str() + '*' + render_monomial(m);
    }
  }
  return out;
}

GradedClass parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace toric::cli
