#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "realsnf/euclid.hpp"
#include "realsnf/matrix.hpp"

namespace realsnf {

/// M = P * D * Q with P, Q invertible and D = diag(d_1, ..., d_r, 0, ..., 0), d_k | d_{k+1}.
template <class E>
struct SnfResult {
  Matrix<E> P;
  Matrix<E> D;
  Matrix<E> Q;
  std::vector<E> diagonals;  // nonzero part, canonical associates
};

/// Entry k-1 generates the ideal of k x k minors (zero when they all vanish).
template <class E>
struct MinorGcdProfile {
  std::vector<E> per_order;
};

struct SnfCheck {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

inline constexpr std::size_t kMinorEnumerationLimit = 6;

/// Fraction-free (Bareiss) elimination with row pivoting; needs only exact division.
template <EuclideanRing R>
ElementOf<R> determinant(const R& ring, const Matrix<ElementOf<R>>& m) {
  using E = ElementOf<R>;
  if (!m.is_square()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<E> a = m;
  bool negate = false;
  E prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && ring.is_zero(a(piv, k))) ++piv;
    if (piv == n) return ring.zero();
    if (piv != k) {
      a.swap_rows(piv, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        E num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = exact_quotient(ring, num, prev);
      }
      a(i, k) = ring.zero();
    }
    prev = a(k, k);
  }
  E det = a(n - 1, n - 1);
  if (negate) det = ring.zero() - det;
  return det;
}

namespace detail {

/// Working state with M = P * A * Q maintained by every operation.
template <class E>
struct SnfState {
  Matrix<E> P, A, Q;

  SnfState transposed() const { return {Q.transpose(), A.transpose(), P.transpose()}; }
};

/// Rows i, j of A replaced by [[p, q], [r, s]] * (row i, row j); the 2x2 block must have determinant 1.
template <EuclideanRing R>
void rows_2x2(const R& ring, SnfState<ElementOf<R>>& st, std::size_t i, std::size_t j, const ElementOf<R>& p,
              const ElementOf<R>& q, const ElementOf<R>& r, const ElementOf<R>& s) {
  using E = ElementOf<R>;
  for (std::size_t k = 0; k < st.A.cols(); ++k) {
    E ai = st.A(i, k), aj = st.A(j, k);
    st.A(i, k) = p * ai + q * aj;
    st.A(j, k) = r * ai + s * aj;
  }
  // P <- P * [[s, -q], [-r, p]] on columns i, j.
  for (std::size_t k = 0; k < st.P.rows(); ++k) {
    E pi = st.P(k, i), pj = st.P(k, j);
    st.P(k, i) = s * pi - r * pj;
    st.P(k, j) = p * pj - q * pi;
  }
  (void)ring;
}

template <EuclideanRing R>
void row_add(const R& ring, SnfState<ElementOf<R>>& st, std::size_t dst, std::size_t src, const ElementOf<R>& c) {
  st.A.add_row_multiple(dst, src, c);
  st.P.add_col_multiple(src, dst, ring.zero() - c);
}

template <EuclideanRing R>
void row_swap(SnfState<ElementOf<R>>& st, std::size_t i, std::size_t j) {
  st.A.swap_rows(i, j);
  st.P.swap_cols(i, j);
}

template <EuclideanRing R>
void scale_row_to_canonical(const R& ring, SnfState<ElementOf<R>>& st, std::size_t i, std::size_t col) {
  Normalized<ElementOf<R>> nz = ring.normalize(st.A(i, col));
  if (nz.unit == ring.one()) return;
  st.A.scale_row(i, nz.unit);
  st.P.scale_col(i, ring.unit_inverse(nz.unit));
}

/**
 * Row echelon form by Bezout steps. Entries above each pivot are reduced
 * modulo it, which keeps degrees (and heights) from compounding.
 * Returns true if any row operation changed A.
 */
template <EuclideanRing R>
bool row_echelon(const R& ring, SnfState<ElementOf<R>>& st) {
  using E = ElementOf<R>;
  const std::size_t rows = st.A.rows(), cols = st.A.cols();
  bool changed = false;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::optional<std::size_t> best;
    for (std::size_t i = r; i < rows; ++i)
      if (!ring.is_zero(st.A(i, c)) && (!best || ring.euclid_size(st.A(i, c)) < ring.euclid_size(st.A(*best, c))))
        best = i;
    if (!best) continue;
    if (*best != r) {
      row_swap<R>(st, r, *best);
      changed = true;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (ring.is_zero(st.A(i, c))) continue;
      E a = st.A(r, c), b = st.A(i, c);
      Bezout<E> bz = xgcd(ring, a, b);
      rows_2x2(ring, st, r, i, bz.s, bz.t, ring.zero() - exact_quotient(ring, b, bz.g), exact_quotient(ring, a, bz.g));
      changed = true;
    }
    scale_row_to_canonical(ring, st, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (ring.is_zero(st.A(i, c))) continue;
      E q = ring.divmod(st.A(i, c), st.A(r, c)).quotient;
      if (ring.is_zero(q)) continue;
      row_add(ring, st, i, r, ring.zero() - q);
      changed = true;
    }
    ++r;
  }
  return changed;
}

template <EuclideanRing R>
bool is_diagonal(const R& ring, const Matrix<ElementOf<R>>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && !ring.is_zero(a(i, j))) return false;
  return true;
}

}  // namespace detail

/**
 * Smith normal form with transforms, M = P * D * Q.
 *
 * Row and column echelon passes alternate until A is diagonal. Each pass
 * either shrinks the leading pivot or leaves its row and column cleared, so
 * this terminates. Divisibility is then forced pairwise with the unimodular
 * step diag(a, b) -> diag(gcd, lcm).
 */
template <EuclideanRing R>
SnfResult<ElementOf<R>> smith_normal_form(const R& ring, const Matrix<ElementOf<R>>& m) {
  using E = ElementOf<R>;
  const std::size_t rows = m.rows(), cols = m.cols();
  detail::SnfState<E> st{Matrix<E>::identity(rows, ring.zero(), ring.one()), m,
                         Matrix<E>::identity(cols, ring.zero(), ring.one())};

  detail::row_echelon(ring, st);
  for (;;) {
    if (detail::is_diagonal(ring, st.A)) break;
    auto t = st.transposed();
    detail::row_echelon(ring, t);
    st = t.transposed();
    if (detail::is_diagonal(ring, st.A)) break;
    detail::row_echelon(ring, st);
  }

  // A row pass leaves zero rows last and a column pass zero columns last, so
  // the nonzero diagonal entries form a prefix.
  std::size_t rank = 0;
  while (rank < std::min(rows, cols) && !ring.is_zero(st.A(rank, rank))) ++rank;

  // diag(a, b) -> diag(g, ab/g): [[s, t], [-b/g, a/g]] * diag(a, b) * [[1, -t b/g], [1, s a/g]].
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) {
      E a = st.A(i, i), b = st.A(j, j);
      if (divides(ring, a, b)) continue;
      Bezout<E> bz = xgcd(ring, a, b);
      E ag = exact_quotient(ring, a, bz.g), bg = exact_quotient(ring, b, bz.g);
      detail::rows_2x2(ring, st, i, j, bz.s, bz.t, ring.zero() - bg, ag);
      // Columns: A <- A * V with V = [[1, -t b/g], [1, s a/g]], Q <- V^{-1} Q, V^{-1} = [[s a/g, t b/g], [-1, 1]].
      E v01 = ring.zero() - bz.t * bg, v11 = bz.s * ag;
      for (std::size_t k = 0; k < rows; ++k) {
        E ci = st.A(k, i), cj = st.A(k, j);
        st.A(k, i) = ci + cj;
        st.A(k, j) = v01 * ci + v11 * cj;
      }
      E w00 = bz.s * ag, w01 = bz.t * bg;
      for (std::size_t k = 0; k < cols; ++k) {
        E qi = st.Q(i, k), qj = st.Q(j, k);
        st.Q(i, k) = w00 * qi + w01 * qj;
        st.Q(j, k) = qj - qi;
      }
    }

  std::vector<E> diagonals;
  for (std::size_t k = 0; k < rank; ++k) {
    Normalized<E> nz = ring.normalize(st.A(k, k));
    st.A(k, k) = nz.value;
    st.P.scale_col(k, ring.unit_inverse(nz.unit));
    diagonals.push_back(nz.value);
  }
  return {std::move(st.P), std::move(st.A), std::move(st.Q), std::move(diagonals)};
}

/// gcd of all k x k minors for every k, by explicit enumeration (an oracle, not a fast path).
template <EuclideanRing R>
MinorGcdProfile<ElementOf<R>> minor_gcd_profile(const R& ring, const Matrix<ElementOf<R>>& m) {
  using E = ElementOf<R>;
  if (std::max(m.rows(), m.cols()) > kMinorEnumerationLimit)
    throw Error(Errc::SizeLimit, "minor enumeration is limited to " + std::to_string(kMinorEnumerationLimit) + " rows/cols");
  MinorGcdProfile<E> out;
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    E g = ring.zero();
    for (const auto& rs : index_subsets(m.rows(), k))
      for (const auto& cs : index_subsets(m.cols(), k)) g = gcd_or_zero(ring, g, determinant(ring, m.submatrix(rs, cs)));
    out.per_order.push_back(g);
  }
  return out;
}

/// Structural check of a claimed SNF, including the minor-ideal identity d_1...d_k ~ gcd of k-minors.
template <EuclideanRing R>
SnfCheck verify_snf(const R& ring, const Matrix<ElementOf<R>>& m, const SnfResult<ElementOf<R>>& s) {
  using E = ElementOf<R>;
  if (s.P.rows() != m.rows() || !s.P.is_square() || s.Q.cols() != m.cols() || !s.Q.is_square() ||
      s.D.rows() != m.rows() || s.D.cols() != m.cols())
    throw Error(Errc::ShapeMismatch, "SNF factors do not match the matrix shape");
  SnfCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.diagnostics.push_back(std::move(msg));
  };

  if (!(s.P * s.D * s.Q == m)) fail("M != P*D*Q");
  if (!ring.is_unit(determinant(ring, s.P))) fail("det(P) is not a unit");
  if (!ring.is_unit(determinant(ring, s.Q))) fail("det(Q) is not a unit");

  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !ring.is_zero(s.D(i, j))) fail("D is not diagonal");
  const std::size_t r = s.diagonals.size();
  if (r > kmax) fail("more diagonals than the diagonal length");
  for (std::size_t k = 0; k < kmax; ++k) {
    bool expect_zero = k >= r;
    if (expect_zero && !ring.is_zero(s.D(k, k))) fail("nonzero diagonal after the listed diagonals");
    if (!expect_zero) {
      if (!(s.D(k, k) == s.diagonals[k])) fail("D(" + std::to_string(k) + ") differs from diagonals list");
      if (ring.is_zero(s.diagonals[k])) fail("zero among the listed diagonals");
    }
  }
  for (std::size_t k = 0; k + 1 < r; ++k)
    if (!divides(ring, s.diagonals[k], s.diagonals[k + 1]))
      fail("d_" + std::to_string(k + 1) + " does not divide d_" + std::to_string(k + 2));

  auto profile = minor_gcd_profile(ring, m);
  E prefix = ring.one();
  for (std::size_t k = 0; k < kmax; ++k) {
    E expected = k < r ? E(prefix * s.diagonals[k]) : ring.zero();
    if (k < r) prefix = expected;
    if (!are_associated(ring, expected, profile.per_order[k]))
      fail("order-" + std::to_string(k + 1) + " minor gcd " + ring.format(profile.per_order[k]) +
           " is not associated to " + ring.format(expected));
  }
  return check;
}

}  // namespace realsnf
