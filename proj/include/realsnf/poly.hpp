#pragma once

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "realsnf/bigint.hpp"
#include "realsnf/error.hpp"

namespace realsnf {

/// Dense univariate polynomial over Q, constant term first. The zero
/// polynomial has no coefficients; trailing zeros are never stored.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  static RatPoly constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }
  static RatPoly x() { return RatPoly{0, 1}; }
  /// c * x^k
  static RatPoly monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return RatPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }

  Rational eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  RatPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<long>(k);
    return RatPoly(std::move(v));
  }

  RatPoly monic() const {
    if (c_.empty()) return {};
    return *this * RatPoly::constant(1 / leading());
  }

  RatPoly operator-() const {
    RatPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return RatPoly(std::move(v));
  }

  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(v));
  }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  /// Polynomial long division; the remainder has degree < deg(b).
  static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPoly{}, a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
    const Rational lead = b.leading();
    for (long k = static_cast<long>(quo.size()) - 1; k >= 0; --k) {
      Rational c = rem[k + b.c_.size() - 1] / lead;
      quo[k] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= c * b.c_[j];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
  }

  /// Textual form like "3/2*x^2 - x + 1"; "0" for the zero polynomial.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
      const Rational& c = c_[k];
      if (c == 0) continue;
      Rational mag = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      bool unit_coeff = mag == 1 && k > 0;
      if (!unit_coeff) out += realsnf::to_string(mag);
      if (k > 0) {
        if (!unit_coeff) out += "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  /// Inverse of to_string. A coefficient may precede x directly or via '*'.
  static RatPoly parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error(Errc::ParseError, "empty polynomial");
    RatPoly acc;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
      int sgn = 1;
      if (s[i] == '+' || s[i] == '-') {
        sgn = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        throw Error(Errc::ParseError, "expected '+' or '-' in '" + s + "'");
      }
      first = false;
      std::size_t j = i;
      while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
      std::string term = s.substr(i, j - i);
      i = j;
      if (term.empty()) throw Error(Errc::ParseError, "empty term in '" + s + "'");
      Rational coeff = 1;
      std::size_t k = 0;
      auto xpos = term.find('x');
      if (xpos == std::string::npos) {
        coeff = parse_rational(term);
      } else {
        std::string head = term.substr(0, xpos);
        if (!head.empty() && head.back() == '*') head.pop_back();
        if (!head.empty()) coeff = parse_rational(head);
        std::string tail = term.substr(xpos + 1);
        if (tail.empty()) {
          k = 1;
        } else if (tail[0] == '^') {
          Integer e = parse_integer(tail.substr(1));
          if (e < 0 || e > 100000) throw Error(Errc::ParseError, "bad exponent in '" + term + "'");
          k = e.get_ui();
        } else {
          throw Error(Errc::ParseError, "bad term '" + term + "'");
        }
      }
      acc = acc + monomial(coeff * sgn, k);
    }
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.to_string(); }

}  // namespace realsnf
