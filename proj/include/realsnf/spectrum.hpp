#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realsnf/integers.hpp"
#include "realsnf/matrix.hpp"
#include "realsnf/poly_ring.hpp"
#include "realsnf/quadratic_ring.hpp"
#include "realsnf/smith.hpp"

namespace realsnf {

inline constexpr std::size_t kPsdSizeLimit = 8;

/// Where a principal minor goes negative.
struct PsdWitness {
  std::vector<std::size_t> minor_rows;  // 0-based
  std::optional<std::string> embedding;  // "plus" | "minus" for quadratic rings
  std::optional<Rational> point;         // for Q[x]
};

struct PsdReport {
  bool is_psd = true;
  std::optional<PsdWitness> witness;
};

// Per-ring evidence that a single element is negative somewhere on the real spectrum.
struct Negativity {
  std::optional<std::string> embedding;
  std::optional<Rational> point;
};

inline std::optional<Negativity> negativity(const IntegerRing&, const Integer& a) {
  if (a < 0) return Negativity{};
  return std::nullopt;
}

inline std::optional<Negativity> negativity(const PolyRing&, const RatPoly& a) {
  if (auto t = find_negative_point(a)) return Negativity{std::nullopt, *t};
  return std::nullopt;
}

inline std::optional<Negativity> negativity(const QuadRing&, const QuadElem& a) {
  SignPattern s = a.sign_pattern();
  if (s.at_plus < 0) return Negativity{"plus", std::nullopt};
  if (s.at_minus < 0) return Negativity{"minus", std::nullopt};
  return std::nullopt;
}

template <EuclideanRing R>
bool element_is_nonneg(const R& ring, const ElementOf<R>& a) {
  return ring.is_nonneg(a);
}

namespace detail {

inline Rational rational_determinant(Matrix<Rational> a) {
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      a.swap_rows(piv, k);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = a(i, k) / a(k, k);
      if (f != 0) a.add_row_multiple(i, k, -f);
    }
  }
  return det;
}

}  // namespace detail

/// PSD over an ordered field with exact signs: every principal minor is >= 0.
inline bool psd_exact_ordered(const Matrix<Rational>& m) {
  if (!m.is_symmetric()) throw Error(Errc::NotSymmetric, "psd_exact_ordered needs a symmetric matrix");
  if (m.rows() > kPsdSizeLimit) throw Error(Errc::SizeLimit, "principal-minor PSD test is capped at n = 8");
  for (const auto& idx : all_index_subsets_lex(m.rows()))
    if (detail::rational_determinant(m.submatrix(idx, idx)) < 0) return false;
  return true;
}

/// PSD at every point of the real spectrum, via principal minors computed in the ring.
template <EuclideanRing R>
PsdReport is_psd_on_spectrum(const R& ring, const Matrix<ElementOf<R>>& m) {
  if (!m.is_symmetric()) throw Error(Errc::NotSymmetric, "is_psd_on_spectrum needs a symmetric matrix");
  if (m.rows() > kPsdSizeLimit) throw Error(Errc::SizeLimit, "principal-minor PSD test is capped at n = 8");
  for (const auto& idx : all_index_subsets_lex(m.rows())) {
    ElementOf<R> minor = determinant(ring, m.submatrix(idx, idx));
    if (auto neg = negativity(ring, minor))
      return PsdReport{false, PsdWitness{idx, neg->embedding, neg->point}};
  }
  return PsdReport{true, std::nullopt};
}

}  // namespace realsnf
