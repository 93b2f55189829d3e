#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "realsnf/error.hpp"

namespace realsnf {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& a) { return sgn(a); }
inline int sign(const Rational& a) { return sgn(a); }

inline std::string to_string(const Integer& a) { return a.get_str(); }

inline std::string to_string(const Rational& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw Error(Errc::ParseError, "empty integer");
  s = s.substr(b, e - b + 1);
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(Errc::ParseError, "bad integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw Error(Errc::ParseError, "bad integer '" + s + "'");
  if (s[0] == '+') s = s.substr(1);
  return Integer(s, 10);
}

/// Accepts "p", "-p" and "p/q".
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  return make_rational(num, den);
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

/// Nearest integer; exact halves go toward zero.
inline Integer round_half_toward_zero(const Rational& q) {
  Integer fl = floor(q);
  Integer twice_rem = 2 * (q.get_num() - fl * q.get_den());
  if (twice_rem < q.get_den()) return fl;
  if (twice_rem > q.get_den()) return fl + 1;
  return fl >= 0 ? fl : Integer(fl + 1);
}

inline bool is_perfect_square(const Integer& a) {
  return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& a) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline Integer pow(const Integer& a, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

/// Trial-division factorization of |n|, primes ascending. Desk-scale inputs only.
inline std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  std::vector<std::pair<Integer, int>> out;
  if (n < 0) n = -n;
  if (n < 2) return out;
  for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_squarefree(const Integer& n) {
  for (const auto& [p, e] : factor_integer(n))
    if (e > 1) return false;
  return n != 0;
}

/// All positive divisors of |n| (n != 0), ascending.
inline std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace realsnf
