// Copyright 2026 The Chambers Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHAMBERS_LINALG_HPP
#define CHAMBERS_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chambers/error.hpp"
#include "chambers/rational.hpp"

namespace chambers {

/// Dense symmetric matrix over the rationals, stored row-major.
class SymMatrix {
 public:
  SymMatrix() = default;

  explicit SymMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  /// Throws DimensionMismatch for ragged rows and std::invalid_argument when
  /// the rows are not symmetric.
  SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
      : SymMatrix(std::vector<RationalVector>(rows.begin(), rows.end())) {}

  explicit SymMatrix(const std::vector<RationalVector>& rows) : SymMatrix(rows.size()) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (rows[i].size() != dim_) throw DimensionMismatch("matrix row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j < dim_; ++j) entries_[i * dim_ + j] = rows[i][j];
    }
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if ((*this)(i, j) != (*this)(j, i))
          throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }

  std::size_t dim() const noexcept { return dim_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  /// Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const Rational& value) {
    entries_[i * dim_ + j] = value;
    entries_[j * dim_ + i] = value;
  }

  std::vector<RationalVector> rows() const {
    std::vector<RationalVector> out(dim_, RationalVector(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  SymMatrix principal_submatrix(std::span<const std::size_t> indices) const {
    SymMatrix out(indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a)
      for (std::size_t b = a; b < indices.size(); ++b) out.set(a, b, (*this)(indices[a], indices[b]));
    return out;
  }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  RationalVector entries_;
};

struct Inertia {
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
  std::size_t n_zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

namespace detail {

using Dense = std::vector<RationalVector>;

inline void symmetric_swap(Dense& a, std::size_t p, std::size_t q) {
  if (p == q) return;
  std::swap(a[p], a[q]);
  for (auto& row : a) std::swap(row[p], row[q]);
}

inline Integer lcm_of_denominators(const SymMatrix& m) {
  Integer l = 1;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  return l;
}

inline std::vector<std::vector<Integer>> cleared(const SymMatrix& m) {
  const Integer l = lcm_of_denominators(m);
  std::vector<std::vector<Integer>> a(m.dim(), std::vector<Integer>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  return a;
}

}  // namespace detail

/// Counts of positive, negative and zero eigenvalues, found by symmetric
/// congruence elimination. A zero diagonal pivot is first replaced by the
/// lowest-index nonzero diagonal entry; when the whole remaining diagonal is
/// zero but the row is not, a 2x2 block [[0,b],[b,0]] is eliminated instead.
inline Inertia inertia(const SymMatrix& m) {
  auto a = m.rows();
  const std::size_t n = m.dim();
  Inertia result;
  std::size_t k = 0;
  while (k < n) {
    if (a[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < n && a[j][j] == 0) ++j;
      if (j < n) {
        detail::symmetric_swap(a, k, j);
      } else {
        std::size_t partner = k + 1;
        while (partner < n && a[k][partner] == 0) ++partner;
        if (partner == n) {
          ++result.n_zero;
          ++k;
          continue;
        }
        detail::symmetric_swap(a, k + 1, partner);
        const Rational b = a[k][k + 1];
        for (std::size_t i = k + 2; i < n; ++i)
          for (std::size_t c = k + 2; c < n; ++c)
            a[i][c] -= (a[i][k] * a[k + 1][c] + a[i][k + 1] * a[k][c]) / b;
        ++result.n_pos;
        ++result.n_neg;
        k += 2;
        continue;
      }
    }
    const Rational d = a[k][k];
    (sgn(d) > 0 ? result.n_pos : result.n_neg) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / d;
      for (std::size_t c = k + 1; c < n; ++c) a[i][c] -= f * a[k][c];
    }
    ++k;
  }
  return result;
}

/// Sylvester's criterion on leading principal minors, each computed
/// fraction-free (Bareiss) on the matrix scaled to integer entries. The
/// scaling multiplies the k-th minor by a positive factor so signs survive.
inline bool is_negative_definite_sylvester(const SymMatrix& m) {
  auto a = detail::cleared(m);
  const std::size_t n = m.dim();
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // a[k][k] is now the (k+1)-th leading principal minor.
    const int s = sgn(a[k][k]);
    if (s == 0 || (k % 2 == 0 ? s > 0 : s < 0)) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return true;
}

inline bool is_negative_definite_by_inertia(const SymMatrix& m) {
  return inertia(m) == Inertia{0, m.dim(), 0};
}

inline bool is_negative_definite(const SymMatrix& m) { return is_negative_definite_sylvester(m); }

/// Fraction-free determinant with row pivoting.
inline Rational determinant(const SymMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  const Integer l = detail::lcm_of_denominators(m);
  auto a = detail::cleared(m);
  Integer prev = 1;
  int parity = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      parity = -parity;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), l.get_mpz_t(), n);
  Rational det(a[n - 1][n - 1] * parity, scale);
  det.canonicalize();
  return det;
}

/// Exact solve of m * x = b by Gaussian elimination (first nonzero pivot).
inline RationalVector solve(const SymMatrix& m, std::span<const Rational> b) {
  const std::size_t n = m.dim();
  if (b.size() != n) throw DimensionMismatch("right-hand side has length " + std::to_string(b.size()) +
                                             ", matrix has dimension " + std::to_string(n));
  auto a = m.rows();
  RationalVector x(b.begin(), b.end());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw SingularMatrix();
    std::swap(a[k], a[p]);
    std::swap(x[k], x[p]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      x[i] -= f * x[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = k + 1; j < n; ++j) x[k] -= a[k][j] * x[j];
    x[k] /= a[k][k];
  }
  return x;
}

inline SymMatrix inverse(const SymMatrix& m) {
  const std::size_t n = m.dim();
  SymMatrix out(n);
  RationalVector e(n);
  for (std::size_t j = 0; j < n; ++j) {
    e.assign(n, 0);
    e[j] = 1;
    const auto col = solve(m, e);
    for (std::size_t i = 0; i <= j; ++i) out.set(i, j, col[i]);
  }
  return out;
}

inline bool inverse_is_nonpositive(const SymMatrix& m) {
  const auto inv = inverse(m);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (sgn(inv(i, j)) > 0) return false;
  return true;
}

/// LDL^T factor of a negative definite matrix that grows and shrinks one
/// row at a time. Extending by a row costs one forward substitution, which
/// is what the depth-first chamber enumeration needs.
class IncrementalLdl {
 public:
  /// Pivot the new diagonal entry would get if the matrix were extended by
  /// a row with off-diagonal part `column` and diagonal `diagonal`.
  Rational extension_pivot(std::span<const Rational> column, const Rational& diagonal,
                           RationalVector* multipliers = nullptr) const {
    const std::size_t k = pivots_.size();
    RationalVector w(column.begin(), column.end());
    Rational d = diagonal;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (rows_[i][j] != 0 && w[j] != 0) w[i] -= rows_[i][j] * w[j];
      if (w[i] != 0) d -= w[i] * w[i] / pivots_[i];
    }
    if (multipliers) {
      multipliers->resize(k);
      for (std::size_t i = 0; i < k; ++i) (*multipliers)[i] = w[i] / pivots_[i];
    }
    return d;
  }

  /// Extends the factor when the result stays negative definite.
  bool try_push(std::span<const Rational> column, const Rational& diagonal) {
    RationalVector l;
    Rational d = extension_pivot(column, diagonal, &l);
    if (sgn(d) >= 0) return false;
    rows_.push_back(std::move(l));
    pivots_.push_back(std::move(d));
    return true;
  }

  void pop() {
    rows_.pop_back();
    pivots_.pop_back();
  }

  std::size_t size() const noexcept { return pivots_.size(); }

 private:
  std::vector<RationalVector> rows_;
  RationalVector pivots_;
};

}  // namespace chambers

#endif  // CHAMBERS_LINALG_HPP
