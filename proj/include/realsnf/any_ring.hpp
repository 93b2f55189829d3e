#pragma once

#include <variant>

#include "realsnf/integers.hpp"
#include "realsnf/poly_ring.hpp"
#include "realsnf/quadratic_ring.hpp"

namespace realsnf {

/// Runtime choice of ring; algorithms are reached through std::visit.
using AnyRing = std::variant<IntegerRing, PolyRing, QuadRing>;

inline AnyRing make_ring(const RingSpec& spec) {
  switch (spec.family) {
    case Family::Integers: return IntegerRing{};
    case Family::RationalPolynomials: return PolyRing{};
    case Family::QuadraticIntegers: return QuadRing(spec);
  }
  throw Error(Errc::UnsupportedRing, spec.to_string());
}

inline AnyRing make_ring(std::string_view text) { return make_ring(RingSpec::parse(text)); }

}  // namespace realsnf
