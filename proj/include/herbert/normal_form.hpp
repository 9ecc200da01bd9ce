#pragma once

// Hermite and Smith normal forms, integer kernels, integer system solving and
// invariant-factor presentations of finitely generated abelian groups.
//
// Pivoting is deterministic: the nonzero entry of smallest magnitude wins,
// ties go to the lowest index (row-major for Smith).  Every routine first runs
// in overflow-checked int64 and reruns in arbitrary precision on overflow.

#include "herbert/integer.hpp"
#include "herbert/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace herbert {

struct HermiteDecomposition {
  IntMatrix H;  // U * A, row echelon with positive pivots, entries above a pivot reduced into [0, pivot)
  IntMatrix U;  // unimodular
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

struct SmithDecomposition {
  IntMatrix D;      // P * A * Q
  IntMatrix P;      // unimodular, rows x rows
  IntMatrix Q;      // unimodular, cols x cols
  IntMatrix P_inv;  // inverse of P
  std::size_t rank = 0;

  /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank.
  std::vector<Integer> diagonal() const {
    std::vector<Integer> d(rank);
    for (std::size_t i = 0; i < rank; ++i) d[i] = D(i, i);
    return d;
  }
};

namespace detail {

template <class T>
struct HermiteWork {
  BasicMatrix<T> H, U;
  std::vector<std::size_t> pivots;
};

template <class T>
HermiteWork<T> hermite_impl(BasicMatrix<T> H, bool track) {
  const std::size_t m = H.rows(), n = H.cols();
  BasicMatrix<T> U = track ? BasicMatrix<T>::identity(m) : BasicMatrix<T>();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    bool found = false;
    for (;;) {
      std::size_t p = m;
      for (std::size_t i = r; i < m; ++i)
        if (!is_zero(H(i, c)) && (p == m || abs(H(i, c)) < abs(H(p, c)))) p = i;
      if (p == m) break;
      found = true;
      H.swap_rows(r, p);
      if (track) U.swap_rows(r, p);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (is_zero(H(i, c))) continue;
        T q = floor_div(H(i, c), H(r, c));
        H.add_row(i, r, -q);
        if (track) U.add_row(i, r, -q);
        if (!is_zero(H(i, c))) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (sign_of(H(r, c)) < 0) {
      H.negate_row(r);
      if (track) U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (is_zero(H(i, c))) continue;
      T q = floor_div(H(i, c), H(r, c));
      H.add_row(i, r, -q);
      if (track) U.add_row(i, r, -q);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(H), std::move(U), std::move(pivots)};
}

template <class T>
struct SmithWork {
  BasicMatrix<T> D, P, Q, Pinv;
  std::size_t rank = 0;
};

template <class T>
SmithWork<T> smith_impl(BasicMatrix<T> D) {
  const std::size_t m = D.rows(), n = D.cols();
  auto P = BasicMatrix<T>::identity(m);
  auto Pinv = BasicMatrix<T>::identity(m);
  auto Q = BasicMatrix<T>::identity(n);
  // row_i += f row_t on P  <=>  col_t -= f col_i on P^{-1}
  auto row_op = [&](std::size_t dst, std::size_t src, const T& f) {
    D.add_row(dst, src, f);
    P.add_row(dst, src, f);
    Pinv.add_col(src, dst, -f);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    P.swap_rows(a, b);
    Pinv.swap_cols(a, b);
  };
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool any = false;
    for (;;) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!is_zero(D(i, j)) && (pi == m || abs(D(i, j)) < abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;
      any = true;
      row_swap(t, pi);
      D.swap_cols(t, pj);
      Q.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (is_zero(D(i, t))) continue;
        T q = floor_div(D(i, t), D(t, t));
        row_op(i, t, -q);
        if (!is_zero(D(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (is_zero(D(t, j))) continue;
        T q = floor_div(D(t, j), D(t, t));
        D.add_col(j, t, -q);
        Q.add_col(j, t, -q);
        if (!is_zero(D(t, j))) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!is_zero(D(i, j) % D(t, t))) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_op(t, bad, T(1));
    }
    if (!any) break;
    if (sign_of(D(t, t)) < 0) {
      D.negate_row(t);
      P.negate_row(t);
      Pinv.negate_col(t);
    }
  }
  return {std::move(D), std::move(P), std::move(Q), std::move(Pinv), t};
}

}  // namespace detail

/// U * A = H with H the unique Hermite normal form of A.
inline HermiteDecomposition hermite_normal_form(const IntMatrix& A) {
  try {
    auto w = detail::hermite_impl(A.cast<Checked64>(), true);
    return {w.H.cast<Integer>(), w.U.cast<Integer>(), std::move(w.pivots)};
  } catch (const overflow_error&) {
    auto w = detail::hermite_impl(A, true);
    return {std::move(w.H), std::move(w.U), std::move(w.pivots)};
  }
}

/// Hermite form only; skips the transform.
inline IntMatrix hermite_form(const IntMatrix& A) {
  try {
    return detail::hermite_impl(A.cast<Checked64>(), false).H.cast<Integer>();
  } catch (const overflow_error&) {
    return detail::hermite_impl(A, false).H;
  }
}

/// P * A * Q = D, D diagonal with each nonzero entry dividing the next.
inline SmithDecomposition smith_normal_form(const IntMatrix& A) {
  try {
    auto w = detail::smith_impl(A.cast<Checked64>());
    return {w.D.cast<Integer>(), w.P.cast<Integer>(), w.Q.cast<Integer>(), w.Pinv.cast<Integer>(), w.rank};
  } catch (const overflow_error&) {
    auto w = detail::smith_impl(A);
    return {std::move(w.D), std::move(w.P), std::move(w.Q), std::move(w.Pinv), w.rank};
  }
}

/// Rank of an integer matrix.
inline std::size_t rank_of(const IntMatrix& A) {
  const IntMatrix H = hermite_form(A);
  std::size_t r = 0;
  for (std::size_t i = 0; i < H.rows(); ++i)
    if (!std::all_of(H.row(i).begin(), H.row(i).end(), [](const Integer& x) { return x.is_zero(); })) ++r;
  return r;
}

/// Nonzero rows of the Hermite form: a canonical basis (as rows) of the row lattice.
inline IntMatrix row_lattice_basis(const IntMatrix& rows) {
  IntMatrix H = hermite_form(rows);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < H.rows(); ++i)
    if (!std::all_of(H.row(i).begin(), H.row(i).end(), [](const Integer& x) { return x.is_zero(); }))
      keep.push_back(i);
  IntMatrix out = H.select_rows(keep);
  if (keep.empty()) out = IntMatrix(0, rows.cols());
  return out;
}

/// Columns form the Hermite-canonical Z-basis of {x : A x = 0}.
inline IntMatrix kernel_basis(const IntMatrix& A) {
  const auto hd = hermite_normal_form(A.transpose());
  const std::size_t n = A.cols();
  std::vector<std::size_t> kernel_rows;
  for (std::size_t i = hd.rank(); i < n; ++i) kernel_rows.push_back(i);
  if (kernel_rows.empty()) return IntMatrix(n, 0);
  return row_lattice_basis(hd.U.select_rows(kernel_rows)).transpose();
}

/// Precomputed solver for A x = b over the integers.
class LinearSolver {
 public:
  LinearSolver() = default;
  explicit LinearSolver(const IntMatrix& A) : rows_(A.rows()), cols_(A.cols()), hd_(hermite_normal_form(A.transpose())) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return hd_.rank(); }

  /// Some x with A x = b, or nullopt when no integer solution exists.  The
  /// representative has zero components along the kernel part of the transform.
  std::optional<IntVector> solve(const IntVector& b) const {
    if (b.size() != rows_) throw std::invalid_argument("LinearSolver: right-hand side has wrong length");
    const IntMatrix& H = hd_.H;  // cols_ x rows_, H = U A^T
    const std::size_t r = hd_.rank();
    IntVector y(r);
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t p = hd_.pivot_cols[k];
      Integer s = b[p];
      for (std::size_t k2 = 0; k2 < k; ++k2)
        if (!H(k2, p).is_zero()) s -= H(k2, p) * y[k2];
      Integer q, rem;
      boost::multiprecision::divide_qr(s, H(k, p), q, rem);
      if (!rem.is_zero()) return std::nullopt;
      y[k] = std::move(q);
    }
    for (std::size_t c = 0; c < rows_; ++c) {
      Integer s = 0;
      for (std::size_t k = 0; k < r; ++k)
        if (!H(k, c).is_zero()) s += H(k, c) * y[k];
      if (s != b[c]) return std::nullopt;
    }
    IntVector x(cols_);
    for (std::size_t k = 0; k < r; ++k) {
      if (y[k].is_zero()) continue;
      auto urow = hd_.U.row(k);
      for (std::size_t j = 0; j < cols_; ++j)
        if (!urow[j].is_zero()) x[j] += y[k] * urow[j];
    }
    return x;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  HermiteDecomposition hd_;
};

inline std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b) {
  return LinearSolver(A).solve(b);
}

/// Z^{free_rank} + sum Z/d_i, with the map from ambient coordinates onto the
/// canonical coordinates.
struct AbelianPresentation {
  std::vector<Integer> invariant_factors;  // each >= 2, each dividing the next
  std::size_t free_rank = 0;
  IntMatrix projection;  // (#factors + free_rank) x ambient
  IntMatrix section;     // ambient x (#factors + free_rank): canonical generators

  std::size_t num_generators() const { return invariant_factors.size() + free_rank; }
  bool is_trivial() const { return num_generators() == 0; }
  bool is_finite() const { return free_rank == 0; }
  /// Group order; zero stands for infinite.
  Integer order() const {
    if (free_rank) return 0;
    Integer o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
  }
  /// Factor of canonical generator i; zero for free generators.
  Integer modulus(std::size_t i) const { return i < invariant_factors.size() ? invariant_factors[i] : Integer(0); }
  /// Reduces canonical coordinates into [0, d_i).
  IntVector normalize(IntVector c) const {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_floor(c[i], modulus(i));
    return c;
  }
  IntVector project(const IntVector& ambient) const { return normalize(projection * ambient); }

  /// "0", "Z", "Z/4", "Z/2 + Z/2 + Z^3".
  std::string to_string() const {
    std::string s;
    for (const auto& d : invariant_factors) s += (s.empty() ? "" : " + ") + std::string("Z/") + d.str();
    if (free_rank == 1) s += (s.empty() ? "" : " + ") + std::string("Z");
    if (free_rank > 1) s += (s.empty() ? "" : " + ") + std::string("Z^") + std::to_string(free_rank);
    return s.empty() ? "0" : s;
  }
  /// Invariant factors followed by a 0 per free summand.
  std::vector<Integer> invariant_list() const {
    auto v = invariant_factors;
    v.insert(v.end(), free_rank, Integer(0));
    return v;
  }
};

/// Z^{ambient_rank} / column-span(relations).
inline AbelianPresentation cokernel_presentation(std::size_t ambient_rank, const IntMatrix& relations) {
  if (relations.rows() != ambient_rank && !(relations.cols() == 0))
    throw std::invalid_argument("cokernel_presentation: relations must have ambient_rank rows");
  IntMatrix R = relations.cols() == 0 ? IntMatrix(ambient_rank, 0) : relations;
  const auto s = smith_normal_form(R);
  AbelianPresentation a;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    if (i < s.rank) {
      if (s.D(i, i) == 1) continue;
      a.invariant_factors.push_back(s.D(i, i));
    } else {
      ++a.free_rank;
    }
    keep.push_back(i);
  }
  a.projection = keep.empty() ? IntMatrix(0, ambient_rank) : s.P.select_rows(keep);
  a.section = keep.empty() ? IntMatrix(ambient_rank, 0) : s.P_inv.select_cols(keep);
  return a;
}

}  // namespace herbert
