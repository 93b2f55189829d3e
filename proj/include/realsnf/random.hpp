#pragma once

#include <cstdint>
#include <vector>

#include "realsnf/integers.hpp"
#include "realsnf/matrix.hpp"
#include "realsnf/poly_ring.hpp"
#include "realsnf/quadratic_ring.hpp"

namespace realsnf {

/**
 * SplitMix64 (Steele, Lea, Flood). Fixed so that seeded runs reproduce
 * bit-for-bit in any language:
 *
 *   state += 0x9E3779B97F4A7C15
 *   z = state
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   return z ^ (z >> 31)
 *
 * below(n) is next() % n; in_range(lo, hi) is lo + below(hi - lo + 1).
 */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  long in_range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

/// Seed of trial i: the (i+1)-th output of SplitMix64(master).
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 g(master + 0x9E3779B97F4A7C15ULL * index);
  return g.next();
}

struct TrialConfig {
  RingSpec ring;
  int matrix_size = 3;  // maximum; each trial draws n in [1, matrix_size]
  long entry_height_bound = 3;
  int trial_count = 100;
  std::uint64_t seed = 1;
  int poly_degree_bound = 2;
};

inline Integer random_element(const IntegerRing&, SplitMix64& rng, const TrialConfig& cfg) {
  return Integer(rng.in_range(-cfg.entry_height_bound, cfg.entry_height_bound));
}

// Coefficients h/den with |h| <= height, den in {1, 2}.
inline RatPoly random_element(const PolyRing&, SplitMix64& rng, const TrialConfig& cfg) {
  std::vector<Rational> c;
  long deg = rng.in_range(0, cfg.poly_degree_bound);
  for (long k = 0; k <= deg; ++k) {
    long num = rng.in_range(-cfg.entry_height_bound, cfg.entry_height_bound);
    long den = rng.in_range(1, 2);
    c.push_back(make_rational(num, den));
  }
  return RatPoly(std::move(c));
}

inline QuadElem random_element(const QuadRing& ring, SplitMix64& rng, const TrialConfig& cfg) {
  long x = rng.in_range(-cfg.entry_height_bound, cfg.entry_height_bound);
  long y = rng.in_range(-cfg.entry_height_bound, cfg.entry_height_bound);
  return ring.element(x, y);
}

inline Integer random_unit(const IntegerRing&, SplitMix64& rng) { return rng.below(2) ? 1 : -1; }

inline RatPoly random_unit(const PolyRing&, SplitMix64& rng) {
  long num = rng.in_range(1, 3) * (rng.below(2) ? 1 : -1);
  return RatPoly::constant(make_rational(num, rng.in_range(1, 3)));
}

inline QuadElem random_unit(const QuadRing& ring, SplitMix64& rng) {
  QuadElem u = ring.fundamental_unit().unit;
  switch (rng.below(3)) {
    case 0: u = ring.one(); break;
    case 1: break;
    default: u = ring.unit_inverse(u); break;
  }
  return rng.below(2) ? u : -u;
}

template <class R>
Matrix<typename R::Element> random_matrix(const R& ring, SplitMix64& rng, const TrialConfig& cfg, std::size_t rows,
                                          std::size_t cols) {
  Matrix<typename R::Element> m(rows, cols, ring.zero());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_element(ring, rng, cfg);
  return m;
}

/// Gram matrix N * N^T for a seeded random square N; sometimes rank-deficient.
template <class R>
Matrix<typename R::Element> random_psd_matrix(const R& ring, const TrialConfig& cfg) {
  if (cfg.matrix_size < 1 || cfg.matrix_size > 5)
    throw Error(Errc::PreconditionFailed, "matrix_size must be in [1, 5]");
  if (ring.spec() != cfg.ring) throw Error(Errc::UnsupportedRing, "config ring does not match");
  SplitMix64 rng(cfg.seed);
  auto n = static_cast<std::size_t>(rng.in_range(1, cfg.matrix_size));
  auto N = random_matrix(ring, rng, cfg, n, n);
  if (n >= 2 && rng.below(4) == 0)
    for (std::size_t j = 0; j < n; ++j) N(n - 1, j) = N(0, j);
  return N * N.transpose();
}

/// Product of random elementary operations: row additions, swaps and unit scalings.
template <class R>
Matrix<typename R::Element> random_unimodular(const R& ring, SplitMix64& rng, const TrialConfig& cfg, std::size_t n,
                                              int steps = 6) {
  auto U = Matrix<typename R::Element>::identity(n, ring.zero(), ring.one());
  for (int s = 0; s < steps; ++s) {
    auto i = static_cast<std::size_t>(rng.below(n));
    auto j = static_cast<std::size_t>(rng.below(n));
    switch (rng.below(3)) {
      case 0:
        if (i != j) U.add_row_multiple(i, j, random_element(ring, rng, cfg));
        break;
      case 1: U.swap_rows(i, j); break;
      default: U.scale_row(i, random_unit(ring, rng)); break;
    }
  }
  return U;
}

}  // namespace realsnf
