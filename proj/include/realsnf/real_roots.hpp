#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "realsnf/bigint.hpp"
#include "realsnf/error.hpp"
#include "realsnf/poly.hpp"

namespace realsnf {

/// p, p', then negated Euclidean remainders until the next remainder is zero.
struct SturmChain {
  std::vector<RatPoly> chain;
};

struct SquarefreeFactor {
  RatPoly factor;  // monic, square-free
  int multiplicity;
};

/// p = content * prod factor_i ^ multiplicity_i, factors pairwise coprime.
struct SquarefreeDecomposition {
  Rational content;
  std::vector<SquarefreeFactor> factors;
};

inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = RatPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline RatPoly exact_poly_quotient(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = RatPoly::divmod(a, b);
  if (!r.is_zero()) throw Error(Errc::InternalError, "inexact polynomial division");
  return q;
}

inline SturmChain sturm_chain(const RatPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "sturm_chain of zero");
  SturmChain s;
  s.chain.push_back(p);
  RatPoly d = p.derivative();
  if (d.is_zero()) return s;
  s.chain.push_back(d);
  for (;;) {
    const RatPoly& a = s.chain[s.chain.size() - 2];
    const RatPoly& b = s.chain.back();
    RatPoly r = RatPoly::divmod(a, b).second;
    if (r.is_zero()) break;
    s.chain.push_back(-r);
  }
  return s;
}

namespace detail {

inline int sign_variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Sign of p(t) as t -> +inf (at_plus) or -inf.
inline int sign_at_infinity(const RatPoly& p, bool at_plus) {
  int s = sign(p.leading());
  if (!at_plus && p.degree() % 2 == 1) s = -s;
  return s;
}

}  // namespace detail

inline bool is_squarefree(const RatPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "is_squarefree of zero");
  return poly_gcd(p, p.derivative()).is_constant();
}

/// Number of distinct real roots of a square-free polynomial.
inline int count_real_roots(const RatPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "count_real_roots of zero");
  if (!is_squarefree(p)) throw Error(Errc::NotSquareFree, p.to_string() + " is not square-free");
  SturmChain s = sturm_chain(p);
  std::vector<int> plus, minus;
  for (const auto& q : s.chain) {
    plus.push_back(detail::sign_at_infinity(q, true));
    minus.push_back(detail::sign_at_infinity(q, false));
  }
  return detail::sign_variations(minus) - detail::sign_variations(plus);
}

/// Yun's algorithm.
inline SquarefreeDecomposition squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree_decomposition of zero");
  SquarefreeDecomposition out{p.leading(), {}};
  if (p.degree() < 1) return out;
  RatPoly f = p.monic();
  RatPoly fp = f.derivative();
  RatPoly a = poly_gcd(f, fp);
  RatPoly b = exact_poly_quotient(f, a);
  RatPoly c = exact_poly_quotient(fp, a);
  RatPoly d = c - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    RatPoly g = poly_gcd(b, d);
    b = exact_poly_quotient(b, g);
    c = exact_poly_quotient(d, g);
    d = c - b.derivative();
    if (!g.is_constant()) out.factors.push_back({g, i});
  }
  return out;
}

/// Product of the factors of odd multiplicity; the sign of p changes exactly at its real roots.
inline RatPoly odd_part(const SquarefreeDecomposition& dec) {
  RatPoly acc = RatPoly::constant(1);
  for (const auto& f : dec.factors)
    if (f.multiplicity % 2 == 1) acc = acc * f.factor;
  return acc;
}

/// p(t) >= 0 for every real t.
inline bool is_nonneg_on_reals(const RatPoly& p) {
  if (p.is_zero()) return true;
  if (p.leading() < 0 || p.degree() % 2 == 1) return false;
  if (p.degree() == 0) return true;
  RatPoly odd = odd_part(squarefree_decomposition(p));
  return odd.is_constant() || count_real_roots(odd) == 0;
}

inline std::optional<RatPoly> positive_associate(const RatPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "positive_associate of zero");
  if (is_nonneg_on_reals(p)) return p;
  RatPoly neg = -p;
  if (is_nonneg_on_reals(neg)) return neg;
  return std::nullopt;
}

/// A rational t with p(t) < 0, if one exists.
inline std::optional<Rational> find_negative_point(const RatPoly& p) {
  if (is_nonneg_on_reals(p)) return std::nullopt;
  // Past the Cauchy bound the sign is the sign at infinity.
  Rational bound = 0;
  for (const auto& c : p.coeffs()) bound = std::max(bound, Rational(abs(c / p.leading())));
  Integer b = floor(bound) + 2;
  for (const Rational& t : {Rational(b), Rational(-b)})
    if (p.eval(t) < 0) return t;
  // The negative set is a nonempty open subset of (-b, b); refine a dyadic grid until it is hit.
  for (Integer denom = 1;; denom *= 2) {
    for (Integer k = -b * denom; k <= b * denom; ++k) {
      if (denom > 1 && k % 2 == 0) continue;
      Rational t = make_rational(k, denom);
      if (p.eval(t) < 0) return t;
    }
  }
}

enum class Irreducibility { Irreducible, Reducible, Unknown };

namespace detail {

// Scales p to a primitive integer polynomial (same roots).
inline std::vector<Integer> integer_coefficients(const RatPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  std::vector<Integer> v;
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * den;
    v.push_back(scaled.get_num());
    content = gcd(content, scaled.get_num());
  }
  for (auto& c : v) c /= content;
  return v;
}

inline bool has_rational_root(const RatPoly& p) {
  auto a = integer_coefficients(p);
  if (a.front() == 0) return true;
  for (const auto& num : divisors(a.front()))
    for (const auto& den : divisors(a.back()))
      for (int s : {1, -1})
        if (p.eval(make_rational(num * s, den)) == 0) return true;
  return false;
}

inline bool eisenstein(const RatPoly& p) {
  auto a = integer_coefficients(p);
  for (const auto& [q, e] : factor_integer(a.front())) {
    if (a.back() % q == 0) continue;
    if (a.front() % (q * q) == 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < a.size() && ok; ++i) ok = a[i] % q == 0;
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

/// Rational-root test up to degree 3, Eisenstein above; Unknown otherwise.
inline Irreducibility certify_irreducible(const RatPoly& p) {
  if (p.degree() < 1) return Irreducibility::Reducible;
  if (p.degree() == 1) return Irreducibility::Irreducible;
  if (p.degree() <= 3)
    return detail::has_rational_root(p) ? Irreducibility::Reducible : Irreducibility::Irreducible;
  if (detail::has_rational_root(p)) return Irreducibility::Reducible;
  return detail::eisenstein(p) ? Irreducibility::Irreducible : Irreducibility::Unknown;
}

/// For an irreducible p: the prime (p) is real iff p has a real root.
/// With `certify`, a polynomial that cannot be certified irreducible is rejected.
inline bool is_real_irreducible(const RatPoly& p, bool certify = false) {
  if (p.degree() < 1) throw Error(Errc::PreconditionFailed, "is_real_irreducible needs degree >= 1");
  if (certify && certify_irreducible(p) != Irreducibility::Irreducible)
    throw Error(Errc::NotCertifiedIrreducible, p.to_string());
  return count_real_roots(p) > 0;
}

}  // namespace realsnf
