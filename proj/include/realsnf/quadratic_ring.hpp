#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "realsnf/euclid.hpp"
#include "realsnf/quadratic.hpp"

namespace realsnf {

struct FundamentalUnit {
  QuadElem unit;
  Integer norm;
};

struct QuadFactorization {
  QuadElem unit;
  std::vector<std::pair<QuadElem, int>> factors;
};

/**
 * Ring of integers of Q(sqrt d) for an allowlisted, norm-Euclidean d.
 *
 * Every nonzero prime of this ring is non-real and the real spectrum is the
 * two embeddings, so positivity reduces to the sign pattern. Units are
 * +-u^k for the fundamental unit u > 1; their sign patterns are (s, s*N(u)^k).
 */
class QuadRing {
 public:
  using Element = QuadElem;

  explicit QuadRing(const RingSpec& spec) : field_{spec.d, spec.form} {
    if (spec.family != Family::QuadraticIntegers)
      throw Error(Errc::UnsupportedRing, spec.to_string() + " is not a quadratic ring");
    spec.validate();
    fundamental_ = find_fundamental_unit();
    Integer n = fundamental_.norm;
    totally_positive_unit_ = n > 0 ? fundamental_.unit : fundamental_.unit * fundamental_.unit;
  }

  RingSpec spec() const { return RingSpec{Family::QuadraticIntegers, field_.d, field_.form}; }
  const QuadField& field() const { return field_; }

  QuadElem element(const Integer& x, const Integer& y) const { return {x, y, field_}; }
  QuadElem zero() const { return element(0, 0); }
  QuadElem one() const { return element(1, 0); }
  bool is_zero(const QuadElem& a) const { return a.is_zero(); }

  /// Rounds a/b coordinatewise (exact halves toward zero). When the rounded
  /// quotient misses the norm bound, the best point of a small window around
  /// it is used; the window is large enough for every allowlisted d.
  DivResult<QuadElem> divmod(const QuadElem& a, const QuadElem& b) const {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "quadratic division by zero");
    const Integer nb = b.norm();
    const Integer abs_nb = abs(nb);
    const QuadElem num = a * b.conjugate();
    const Integer qx = round_half_toward_zero(make_rational(num.x(), nb));
    const Integer qy = round_half_toward_zero(make_rational(num.y(), nb));
    QuadElem q = element(qx, qy);
    QuadElem r = a - b * q;
    if (Integer(abs(r.norm())) < abs_nb) return {q, r};

    std::optional<DivResult<QuadElem>> best;
    Integer best_norm;
    for (int radius = 1; radius <= 8; ++radius) {
      for (int i = -radius; i <= radius; ++i) {
        for (int j = -2; j <= 2; ++j) {
          if (std::abs(i) + std::abs(j) != radius) continue;
          QuadElem cand = element(qx + i, qy + j);
          QuadElem rem = a - b * cand;
          Integer n = abs(rem.norm());
          if (n < abs_nb && (!best || n < best_norm)) {
            best = DivResult<QuadElem>{cand, rem};
            best_norm = n;
          }
        }
      }
    }
    if (!best) throw Error(Errc::InternalError, "no Euclidean quotient found in " + spec().to_string());
    return *best;
  }

  Integer euclid_size(const QuadElem& a) const { return abs(a.norm()); }
  bool is_unit(const QuadElem& a) const { return abs(a.norm()) == 1; }

  QuadElem unit_inverse(const QuadElem& u) const {
    Integer n = u.norm();
    if (abs(n) != 1) throw Error(Errc::PreconditionFailed, u.to_string() + " is not a unit");
    return element(n, 0) * u.conjugate();
  }

  /// Canonical associate: positive under the plus embedding, then the
  /// smallest balance height along the unit orbit.
  Normalized<QuadElem> normalize(const QuadElem& a) const {
    if (a.is_zero()) return {a, one()};
    QuadElem unit = element(a.sign_pattern().at_plus, 0);
    QuadElem e = a * unit;
    walk_to_min_height(e, unit, fundamental_.unit);
    return {e, unit};
  }

  std::string format(const QuadElem& a) const { return a.to_string(); }
  QuadElem parse(std::string_view text) const { return QuadElem::parse(text, field_); }

  const FundamentalUnit& fundamental_unit() const { return fundamental_; }

  bool pnri_holds() const { return fundamental_.norm == -1; }

  /// Sign patterns realized by units. Unit patterns repeat with period 2 in the exponent.
  std::set<SignPattern> achievable_sign_patterns() const {
    std::set<SignPattern> out;
    for (const QuadElem& u : {one(), fundamental_.unit}) {
      out.insert(u.sign_pattern());
      out.insert((-u).sign_pattern());
    }
    return out;
  }

  bool is_nonneg(const QuadElem& a) const {
    SignPattern s = a.sign_pattern();
    return s.at_plus >= 0 && s.at_minus >= 0;
  }

  /// An associate with pattern (+,+), reduced to minimal height among those.
  std::optional<QuadElem> positive_associate(const QuadElem& a) const {
    if (a.is_zero()) throw Error(Errc::ZeroElement, "positive_associate of zero");
    SignPattern s = a.sign_pattern();
    QuadElem unit = one();
    if (s.at_plus != s.at_minus) {
      if (!pnri_holds()) return std::nullopt;
      unit = fundamental_.unit;  // pattern (+,-)
    }
    QuadElem e = a * unit;
    QuadElem sgn_fix = element((e.sign_pattern()).at_plus, 0);
    e = e * sgn_fix;
    unit = unit * sgn_fix;
    walk_to_min_height(e, unit, totally_positive_unit_);
    return e;
  }

  std::string sign_info(const QuadElem& a) const { return to_string(a.sign_pattern()); }

  /// Every nonzero prime of a ring of integers has a finite, hence non-real, residue field.
  bool is_real_prime(const QuadElem& p) const {
    if (p.is_zero()) throw Error(Errc::ZeroElement, "is_real_prime of zero");
    return false;
  }

  /// |N(p)| prime, or |N(p)| = q^2 with q prime and q inert.
  bool certify_irreducible(const QuadElem& p) const {
    Integer n = abs(p.norm());
    if (is_prime(n)) return true;
    if (!is_perfect_square(n)) return false;
    Integer q = isqrt(n);
    return is_prime(q) && min_poly_roots_mod(q).empty();
  }

  /// Canonical face for irreducible factors: (+,+) when reachable, else plus-positive.
  QuadElem canonical_factor(const QuadElem& p) const {
    if (auto pos = positive_associate(p)) return *pos;
    return normalize(p).value;
  }

  QuadFactorization factor(const QuadElem& a) const {
    if (a.is_zero()) throw Error(Errc::ZeroElement, "factor of zero");
    if (is_unit(a)) throw Error(Errc::UnitInput, "factor of a unit");
    QuadElem rest = a;
    QuadFactorization out{one(), {}};
    auto take = [&](const QuadElem& prime) {
      long v = valuation(*this, prime, rest);
      if (v == 0) return;
      rest = exact_quotient(*this, rest, power(*this, prime, static_cast<unsigned long>(v)));
      out.factors.emplace_back(canonical_factor(prime), static_cast<int>(v));
    };
    for (const auto& [q, e] : factor_integer(a.norm())) {
      auto roots = min_poly_roots_mod(q);
      if (roots.empty()) {
        take(element(q, 0));
        continue;
      }
      QuadElem pi = gcd(*this, element(q, 0), element(roots.front(), -1));
      if (abs(pi.norm()) != q)
        throw Error(Errc::InternalError, "prime above " + q.get_str() + " has norm " + pi.norm().get_str());
      take(pi);
      QuadElem pi_bar = pi.conjugate();
      if (!are_associated(*this, pi, pi_bar)) take(pi_bar);
    }
    QuadElem product = one();
    for (const auto& [p, m] : out.factors) product = product * power(*this, p, static_cast<unsigned long>(m));
    out.unit = exact_quotient(*this, a, product);
    if (!is_unit(out.unit)) throw Error(Errc::InternalError, "factorization cofactor is not a unit");
    return out;
  }

  /// Roots in [0, q) of the minimal polynomial of w modulo the rational prime q.
  std::vector<Integer> min_poly_roots_mod(const Integer& q) const {
    std::vector<Integer> roots;
    for (Integer t = 0; t < q; ++t) {
      Integer v = field_.form == QuadForm::Sqrt ? Integer(t * t - field_.d) : Integer(t * t - t - field_.half_k());
      Integer r = v % q;
      if (r == 0) roots.push_back(t);
    }
    return roots;
  }

  /// max(|2x'|, |y| sqrt d)^2 in surd coordinates; proportional to (|s+| + |s-|)^2,
  /// hence strictly convex along any orbit a * u^k.
  Integer balance_height(const QuadElem& a) const {
    auto [u, v] = a.surd_coords();
    Integer uu = u * u;
    Integer dvv = v * v * field_.d;
    return uu > dvv ? uu : dvv;
  }

 private:
  static bool lex_less(const QuadElem& a, const QuadElem& b) {
    if (a.x() != b.x()) return a.x() < b.x();
    return a.y() < b.y();
  }

  // step must be positive under the plus embedding.
  void walk_to_min_height(QuadElem& e, QuadElem& unit, const QuadElem& step) const {
    const QuadElem step_inv = unit_inverse(step);
    for (;;) {
      QuadElem up = e * step;
      if (balance_height(up) < balance_height(e)) {
        e = up;
        unit = unit * step;
        continue;
      }
      QuadElem down = e * step_inv;
      if (balance_height(down) < balance_height(e)) {
        e = down;
        unit = unit * step_inv;
        continue;
      }
      break;
    }
    // Convexity allows at most one neighbour with equal height.
    Integer h = balance_height(e);
    for (const QuadElem& s : {step, step_inv}) {
      QuadElem n = e * s;
      if (balance_height(n) == h && lex_less(n, e)) {
        e = n;
        unit = unit * s;
        return;
      }
    }
  }

  // Least unit > 1 by ascending search on the coefficient of sqrt d.
  FundamentalUnit find_fundamental_unit() const {
    const long d = field_.d;
    for (long y = 1; y < 10'000'000; ++y) {
      Integer dyy = Integer(d) * y * y;
      if (field_.form == QuadForm::Sqrt) {
        for (int n : {-1, 1}) {
          Integer xx = dyy + n;
          if (is_perfect_square(xx)) return {element(isqrt(xx), y), Integer(n)};
        }
      } else {
        // (X + Y sqrt d)/2 with X^2 - d Y^2 = 4n, X = Y mod 2; norm -1 first gives the smaller X.
        for (int n : {-1, 1}) {
          Integer xx = dyy + 4 * n;
          if (!is_perfect_square(xx)) continue;
          Integer big_x = isqrt(xx);
          if ((big_x - y) % 2 != 0) continue;
          return {element((big_x - y) / 2, y), Integer(n)};
        }
      }
    }
    throw Error(Errc::InternalError, "fundamental unit search exhausted");
  }

  QuadField field_;
  FundamentalUnit fundamental_;
  QuadElem totally_positive_unit_;
};

}  // namespace realsnf
