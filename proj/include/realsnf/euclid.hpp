#pragma once

#include <concepts>
#include <string>
#include <utility>

#include "realsnf/bigint.hpp"
#include "realsnf/error.hpp"
#include "realsnf/ring_spec.hpp"

namespace realsnf {

/// a = b * quotient + remainder, with remainder = 0 or of smaller Euclidean size than b.
template <class E>
struct DivResult {
  E quotient;
  E remainder;
};

/// value = unit * input; value is the ring's canonical associate.
template <class E>
struct Normalized {
  E value;
  E unit;
};

/**
 * A ring struct models EuclideanRing when it exposes its element type and the
 * Euclidean structure needed by gcd, SNF and the spectrum checks.
 *
 * Elements themselves carry +, -, * and ==. The ring object supplies the
 * pieces that need context (the zero of Q(sqrt d), the fundamental unit, ...).
 */
template <class R>
concept EuclideanRing = requires(const R& r, const typename R::Element& a) {
  typename R::Element;
  { r.spec() } -> std::convertible_to<RingSpec>;
  { r.zero() } -> std::convertible_to<typename R::Element>;
  { r.one() } -> std::convertible_to<typename R::Element>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.divmod(a, a) } -> std::convertible_to<DivResult<typename R::Element>>;
  { r.euclid_size(a) } -> std::convertible_to<Integer>;
  { r.is_unit(a) } -> std::convertible_to<bool>;
  { r.unit_inverse(a) } -> std::convertible_to<typename R::Element>;
  { r.normalize(a) } -> std::convertible_to<Normalized<typename R::Element>>;
  { r.format(a) } -> std::convertible_to<std::string>;
  { a + a } -> std::convertible_to<typename R::Element>;
  { a - a } -> std::convertible_to<typename R::Element>;
  { a * a } -> std::convertible_to<typename R::Element>;
  { a == a } -> std::convertible_to<bool>;
};

template <EuclideanRing R>
using ElementOf = typename R::Element;

template <EuclideanRing R>
DivResult<ElementOf<R>> euclidean_div(const R& ring, const ElementOf<R>& a, const ElementOf<R>& b) {
  if (ring.is_zero(b)) throw Error(Errc::DivisionByZero, "euclidean_div by zero");
  return ring.divmod(a, b);
}

/// True iff d | a. Zero divides only zero.
template <EuclideanRing R>
bool divides(const R& ring, const ElementOf<R>& d, const ElementOf<R>& a) {
  if (ring.is_zero(d)) return ring.is_zero(a);
  return ring.is_zero(ring.divmod(a, d).remainder);
}

/// a / b, which must be exact.
template <EuclideanRing R>
ElementOf<R> exact_quotient(const R& ring, const ElementOf<R>& a, const ElementOf<R>& b) {
  auto qr = euclidean_div(ring, a, b);
  if (!ring.is_zero(qr.remainder))
    throw Error(Errc::InternalError, "inexact division " + ring.format(a) + " / " + ring.format(b));
  return qr.quotient;
}

template <EuclideanRing R>
ElementOf<R> gcd(const R& ring, ElementOf<R> a, ElementOf<R> b) {
  if (ring.is_zero(a) && ring.is_zero(b)) throw Error(Errc::BothZero, "gcd(0, 0)");
  while (!ring.is_zero(b)) {
    ElementOf<R> r = ring.divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return ring.normalize(a).value;
}

/// gcd that treats gcd(0, 0) as 0; convenient for folding over minors.
template <EuclideanRing R>
ElementOf<R> gcd_or_zero(const R& ring, const ElementOf<R>& a, const ElementOf<R>& b) {
  if (ring.is_zero(a) && ring.is_zero(b)) return ring.zero();
  return gcd(ring, a, b);
}

template <class E>
struct Bezout {
  E g, s, t;  // s*a + t*b = g
};

/// Extended Euclid. g is a gcd but not normalized; a | b gives (a, 1, 0).
template <EuclideanRing R>
Bezout<ElementOf<R>> xgcd(const R& ring, const ElementOf<R>& a, const ElementOf<R>& b) {
  using E = ElementOf<R>;
  if (!ring.is_zero(a) && divides(ring, a, b)) return {a, ring.one(), ring.zero()};
  E r0 = a, r1 = b, s0 = ring.one(), s1 = ring.zero(), t0 = ring.zero(), t1 = ring.one();
  while (!ring.is_zero(r1)) {
    E q = ring.divmod(r0, r1).quotient;
    E r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return {r0, s0, t0};
}

template <EuclideanRing R>
bool are_associated(const R& ring, const ElementOf<R>& a, const ElementOf<R>& b) {
  bool za = ring.is_zero(a), zb = ring.is_zero(b);
  if (za || zb) return za && zb;
  return divides(ring, a, b) && divides(ring, b, a);
}

/// Largest k with p^k | a. p is trusted to be irreducible.
template <EuclideanRing R>
long valuation(const R& ring, const ElementOf<R>& p, ElementOf<R> a) {
  if (ring.is_zero(a)) throw Error(Errc::ZeroElement, "valuation of zero");
  if (ring.is_zero(p) || ring.is_unit(p))
    throw Error(Errc::PreconditionFailed, "valuation base " + ring.format(p) + " is zero or a unit");
  long k = 0;
  for (;;) {
    auto qr = ring.divmod(a, p);
    if (!ring.is_zero(qr.remainder)) return k;
    a = std::move(qr.quotient);
    ++k;
  }
}

template <EuclideanRing R>
ElementOf<R> power(const R& ring, ElementOf<R> base, unsigned long e) {
  ElementOf<R> acc = ring.one();
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace realsnf
