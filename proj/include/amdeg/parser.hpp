#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "polynomial.hpp"

namespace amdeg {

/// Recursive-descent reader for
///   poly   := [sign] term (('+'|'-') term)*
///   term   := [integer] ['*'] factor ('*'? factor)*  |  integer
///   factor := varname ['^' integer]
/// Whitespace is ignored. Integers of any size are reduced modulo p.
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, Ring ring) : s_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty input");
    std::vector<Term> terms;
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negate));
    skip_ws();
    while (pos_ < s_.size()) {
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
      ++pos_;
      terms.push_back(term(c == '-'));
      skip_ws();
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term term(bool negate) {
    const PrimeField& f = ring_->field();
    skip_ws();
    Coeff coef = 1;
    bool have_content = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = integer_mod_p();
      have_content = true;
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (pos_ == s_.size() || !is_ident_start(peek())) fail("expected variable after '*'");
      }
    }
    Monomial mon;
    while (true) {
      skip_ws();
      if (pos_ == s_.size() || !is_ident_start(peek())) break;
      std::size_t var = variable();
      int e = 1;
      skip_ws();
      if (pos_ < s_.size() && peek() == '^') {
        ++pos_;
        skip_ws();
        e = small_integer();
      }
      mon.set(var, mon[var] + e);
      have_content = true;
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (pos_ == s_.size() || !is_ident_start(peek())) fail("expected variable after '*'");
      }
    }
    if (!have_content) fail("expected a term");
    if (negate) coef = f.neg(coef);
    return {coef, mon};
  }

  std::size_t variable() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    const auto& names = ring_->var_names();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw ParseError("unknown variable '" + name + "'");
  }

  Coeff integer_mod_p() {
    const PrimeField& f = ring_->field();
    Coeff v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek())))
      v = f.add(f.mul(v, 10), static_cast<Coeff>(s_[pos_++] - '0'));
    return v;
  }

  int small_integer() {
    if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 255) fail("exponent too large");
    }
    return static_cast<int>(v);
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Ring ring_;
};

inline Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  return PolynomialParser(text, ring).parse();
}

inline std::string to_string(const Monomial& m, const RingContext& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    out += ring.var_names()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

/// Canonical form: decreasing terms, coefficients as least non-negative residues.
inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += '+';
    std::string mon = to_string(t.mon, *f.ring());
    if (mon.empty())
      out += std::to_string(t.coef);
    else if (t.coef == 1)
      out += mon;
    else
      out += std::to_string(t.coef) + '*' + mon;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

}  // namespace amdeg
