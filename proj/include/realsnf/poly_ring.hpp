#pragma once

#include <optional>
#include <string>

#include "realsnf/euclid.hpp"
#include "realsnf/poly.hpp"
#include "realsnf/real_roots.hpp"

namespace realsnf {

/// Q[x]. Euclidean size is the degree; units are the nonzero constants;
/// canonical associates are monic.
struct PolyRing {
  using Element = RatPoly;

  RingSpec spec() const { return RingSpec::rational_polynomials(); }
  RatPoly zero() const { return {}; }
  RatPoly one() const { return RatPoly::constant(1); }
  bool is_zero(const RatPoly& a) const { return a.is_zero(); }

  DivResult<RatPoly> divmod(const RatPoly& a, const RatPoly& b) const {
    auto [q, r] = RatPoly::divmod(a, b);
    return {std::move(q), std::move(r)};
  }

  Integer euclid_size(const RatPoly& a) const { return Integer(a.degree()); }
  bool is_unit(const RatPoly& a) const { return a.degree() == 0; }

  RatPoly unit_inverse(const RatPoly& u) const {
    if (!is_unit(u)) throw Error(Errc::PreconditionFailed, u.to_string() + " is not a unit");
    return RatPoly::constant(1 / u.leading());
  }

  Normalized<RatPoly> normalize(const RatPoly& a) const {
    if (a.is_zero()) return {a, one()};
    RatPoly unit = RatPoly::constant(1 / a.leading());
    return {a * unit, unit};
  }

  std::string format(const RatPoly& a) const { return a.to_string(); }
  RatPoly parse(std::string_view text) const { return RatPoly::parse(text); }

  // Non-real irreducibles (no real root) are positive up to sign, so (PNRI) always holds.
  bool pnri_holds() const { return true; }
  bool is_nonneg(const RatPoly& a) const { return is_nonneg_on_reals(a); }
  std::optional<RatPoly> positive_associate(const RatPoly& a) const { return realsnf::positive_associate(a); }

  std::string sign_info(const RatPoly& a) const {
    if (a.is_zero()) return "zero";
    if (is_nonneg_on_reals(a)) return "nonnegative";
    if (is_nonneg_on_reals(-a)) return "nonpositive";
    return "changes sign";
  }

  bool is_real_prime(const RatPoly& p) const { return is_real_irreducible(p); }
};

}  // namespace realsnf
