#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "realsnf/bigint.hpp"
#include "realsnf/euclid.hpp"

namespace realsnf {

/// The rational integers. Units are +-1, every nonzero prime is non-real.
struct IntegerRing {
  using Element = Integer;

  RingSpec spec() const { return RingSpec::integers(); }
  Integer zero() const { return 0; }
  Integer one() const { return 1; }
  bool is_zero(const Integer& a) const { return a == 0; }

  // Remainder in [0, |b|).
  DivResult<Integer> divmod(const Integer& a, const Integer& b) const {
    if (b == 0) throw Error(Errc::DivisionByZero, "integer division by zero");
    Integer q, r;
    if (b > 0) {
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    } else {
      mpz_cdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    return {q, r};
  }

  Integer euclid_size(const Integer& a) const { return abs(a); }
  bool is_unit(const Integer& a) const { return a == 1 || a == -1; }
  Integer unit_inverse(const Integer& u) const { return u; }

  Normalized<Integer> normalize(const Integer& a) const {
    if (a < 0) return {Integer(-a), Integer(-1)};
    return {a, Integer(1)};
  }

  std::string format(const Integer& a) const { return a.get_str(); }
  Integer parse(std::string_view text) const { return parse_integer(text); }

  bool pnri_holds() const { return true; }
  bool is_nonneg(const Integer& a) const { return a >= 0; }

  std::optional<Integer> positive_associate(const Integer& a) const {
    if (a == 0) throw Error(Errc::ZeroElement, "positive_associate of zero");
    return abs(a);
  }

  std::string sign_info(const Integer& a) const {
    return a > 0 ? "positive" : (a < 0 ? "negative" : "zero");
  }

  bool is_real_prime(const Integer&) const { return false; }

  /// Prime factorization of a nonzero non-unit, primes positive and ascending.
  std::vector<std::pair<Integer, int>> factor(const Integer& a) const {
    if (a == 0) throw Error(Errc::ZeroElement, "factor of zero");
    if (is_unit(a)) throw Error(Errc::UnitInput, "factor of a unit");
    return factor_integer(a);
  }
};

}  // namespace realsnf
