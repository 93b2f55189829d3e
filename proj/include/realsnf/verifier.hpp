#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realsnf/integers.hpp"
#include "realsnf/poly_ring.hpp"
#include "realsnf/quadratic_ring.hpp"
#include "realsnf/smith.hpp"
#include "realsnf/spectrum.hpp"

namespace realsnf {

enum class Conclusion {
  TheoremHolds,
  TheoremFailsPnriFails,
  NotApplicableNotPsd,
  // psd, (PNRI) holds, and still some diagonal has no positive associate.
  InvariantBreach,
};

inline const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::TheoremHolds: return "TheoremHolds";
    case Conclusion::TheoremFailsPnriFails: return "TheoremFailsPnriFails";
    case Conclusion::NotApplicableNotPsd: return "NotApplicableNotPsd";
    case Conclusion::InvariantBreach: return "InvariantBreach";
  }
  return "?";
}

template <class E>
struct TheoremReport {
  bool input_psd = false;
  PsdReport psd;
  SnfResult<E> snf;
  std::vector<E> snf_diagonals;
  std::vector<std::string> sign_data;
  std::vector<std::optional<E>> positive_associates;
  std::vector<bool> positivizable;
  bool pnri = false;
  Conclusion conclusion = Conclusion::NotApplicableNotPsd;

  bool consistent() const { return conclusion != Conclusion::InvariantBreach; }
};

/// Runs the pipeline: PSD on the spectrum, SNF, positive associates of the diagonals, (PNRI).
template <EuclideanRing R>
TheoremReport<ElementOf<R>> verify_main_theorem(const R& ring, const Matrix<ElementOf<R>>& m) {
  if (!m.is_symmetric()) throw Error(Errc::NotSymmetric, "verify_main_theorem needs a symmetric matrix");
  TheoremReport<ElementOf<R>> rep;
  rep.psd = is_psd_on_spectrum(ring, m);
  rep.input_psd = rep.psd.is_psd;
  rep.snf = smith_normal_form(ring, m);
  rep.snf_diagonals = rep.snf.diagonals;
  rep.pnri = ring.pnri_holds();
  bool all_positive = true;
  for (const auto& d : rep.snf_diagonals) {
    rep.sign_data.push_back(ring.sign_info(d));
    auto pos = ring.positive_associate(d);
    rep.positivizable.push_back(pos.has_value());
    all_positive = all_positive && pos.has_value();
    rep.positive_associates.push_back(std::move(pos));
  }
  if (!rep.input_psd)
    rep.conclusion = Conclusion::NotApplicableNotPsd;
  else if (all_positive)
    rep.conclusion = Conclusion::TheoremHolds;
  else if (!rep.pnri)
    rep.conclusion = Conclusion::TheoremFailsPnriFails;
  else
    rep.conclusion = Conclusion::InvariantBreach;
  return rep;
}

/// Data of the 2x2 template M = diag(d1, d1 e1) * [[a, b e1], [b, c]] with a c - b^2 e1 = epsilon a unit.
template <class E>
struct CounterexampleSpec {
  E a, b, c, d1, e1, epsilon;
};

/// Checks the template's conditions and returns [[a d1, b d1 e1], [b d1 e1, c d1 e1]].
template <EuclideanRing R>
Matrix<ElementOf<R>> build_counterexample(const R& ring, const CounterexampleSpec<ElementOf<R>>& s) {
  using E = ElementOf<R>;
  std::vector<std::string> problems;
  E lhs = s.a * s.c - s.b * s.b * s.e1;
  if (!(lhs == s.epsilon)) problems.push_back("a*c - b^2*e1 = " + ring.format(lhs) + " != epsilon");
  if (!ring.is_unit(s.epsilon)) problems.push_back("epsilon = " + ring.format(s.epsilon) + " is not a unit");
  E ad1 = s.a * s.d1;
  E cd1e1 = s.c * s.d1 * s.e1;
  E d1d1e1 = s.d1 * s.d1 * s.e1;
  if (!ring.is_nonneg(ad1)) problems.push_back("a*d1 >= 0 fails");
  if (!ring.is_nonneg(cd1e1)) problems.push_back("c*d1*e1 >= 0 fails");
  if (!ring.is_nonneg(d1d1e1)) problems.push_back("d1^2*e1 >= 0 fails");
  if (!problems.empty()) {
    std::string msg;
    for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
    throw Error(Errc::SpecInvariantViolated, msg);
  }
  E off = s.b * s.d1 * s.e1;
  return Matrix<E>::from_rows({{ad1, off}, {off, cd1e1}});
}

/// The template over Z[sqrt 3] with q = 1 + sqrt 3: a = c = d1 = q, b = 1,
/// e1 = epsilon = 2 + sqrt 3, so that q^2 - e1 = epsilon is a genuine unit.
inline CounterexampleSpec<QuadElem> sqrt3_counterexample_spec(const QuadRing& ring) {
  if (ring.spec() != RingSpec::sqrt(3)) throw Error(Errc::UnsupportedRing, "built-in spec lives in Zsqrt:3");
  QuadElem q = ring.element(1, 1);
  QuadElem u = ring.element(2, 1);
  return {q, ring.one(), q, q, u, u};
}

/// Same template with field-valued data; fails unless every entry is integral.
inline CounterexampleSpec<QuadElem> integral_spec(const QuadRing& ring, const CounterexampleSpec<FieldElem>& s) {
  std::vector<std::string> bad;
  auto lift = [&](const FieldElem& e, const char* name) {
    auto v = to_integral(e, ring.field());
    if (!v) {
      bad.push_back(std::string(name) + " = " + e.to_string() + " is not in " + ring.spec().to_string());
      return ring.zero();
    }
    return *v;
  };
  CounterexampleSpec<QuadElem> out{lift(s.a, "a"),   lift(s.b, "b"),   lift(s.c, "c"),
                                   lift(s.d1, "d1"), lift(s.e1, "e1"), lift(s.epsilon, "epsilon")};
  if (!bad.empty()) {
    std::string msg;
    for (const auto& p : bad) msg += (msg.empty() ? "" : "; ") + p;
    throw Error(Errc::SpecInvariantViolated, msg);
  }
  return out;
}

/// The rational variant: epsilon = 1/2, e1 = (r + sqrt3/r)^2 + 7/2 - (r^4 + 3)/r^2.
inline CounterexampleSpec<FieldElem> rational_sqrt3_spec(const Rational& r) {
  if (r == 0) throw Error(Errc::ZeroRational, "r must be nonzero");
  FieldElem q{1, 1, 3};
  FieldElem t{r, 1 / r, 3};
  Rational r2 = r * r;
  FieldElem e1 = t * t + FieldElem{Rational(7, 2) - (r2 * r2 + 3) / r2, 0, 3};
  return {q, FieldElem{1, 0, 3}, q, q, e1, FieldElem{Rational(1, 2), 0, 3}};
}

struct FieldIdentityResult {
  bool identity_holds = false;
  Rational residual;  // 7/2 - (r^4 + 3)/r^2
  bool residual_positive = false;
};

/// (1 + sqrt3)^2 == 1/2 + (r + sqrt3/r)^2 + 7/2 - (r^4 + 3)/r^2 in Q(sqrt 3).
inline FieldIdentityResult verify_field_identity(const Rational& r) {
  if (r == 0) throw Error(Errc::ZeroRational, "r must be nonzero");
  FieldElem q{1, 1, 3};
  FieldElem t{r, 1 / r, 3};
  Rational r2 = r * r;
  Rational residual = Rational(7, 2) - (r2 * r2 + 3) / r2;
  FieldElem rhs = FieldElem{Rational(1, 2), 0, 3} + t * t + FieldElem{residual, 0, 3};
  return {q * q == rhs, residual, residual > 0};
}

/// nu_p(a) <= 2 nu_p(b) whenever a - b^2 >= 0 on R and p is a real irreducible.
inline bool check_valuation_lemma(const RatPoly& a, const RatPoly& b, const RatPoly& p) {
  const PolyRing ring;
  if (!is_nonneg_on_reals(a - b * b))
    throw Error(Errc::PreconditionFailed, "a - b^2 is not nonnegative on R");
  if (p.degree() < 1) throw Error(Errc::PreconditionFailed, "p is constant");
  if (certify_irreducible(p) == Irreducibility::Reducible)
    throw Error(Errc::PreconditionFailed, "p = " + p.to_string() + " is reducible");
  if (!is_real_irreducible(p)) throw Error(Errc::PreconditionFailed, "p = " + p.to_string() + " is not real");
  if (a.is_zero() || b.is_zero()) return true;  // nu_p(0) is infinite
  return valuation(ring, p, a) <= 2 * valuation(ring, p, b);
}

}  // namespace realsnf
