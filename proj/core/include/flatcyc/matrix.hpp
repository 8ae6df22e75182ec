#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "flatcyc/bigint.hpp"
#include "flatcyc/error.hpp"

namespace flatcyc {

/// Dense row-major matrix. Arithmetic lives in free functions that take the
/// coefficient ring explicitly, so the same container serves Z, Q and Z[x]/(g, p^j).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    require(data_.size() == rows_ * cols_, Errc::SizeMismatch, "matrix data length");
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<T>& data() const noexcept { return data_; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

/// The integers as a coefficient ring for the generic algorithms below.
struct IntegerRing {
  using Element = BigInt;
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(const BigInt& v) const { return v; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
};

/// The rationals; a field, so elimination can divide.
struct RationalField {
  using Element = Rational;
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(const BigInt& v) const { return Rational(v); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_unit(const Element& a) const { return a != 0; }
  Element invert(const Element& a) const {
    require(a != 0, Errc::NotAUnit, "division by zero in Q");
    return 1 / a;
  }
};

template <class Ring>
Matrix<typename Ring::Element> identity(const Ring& R, std::size_t d) {
  Matrix<typename Ring::Element> out(d, d, R.zero());
  for (std::size_t i = 0; i < d; ++i) out(i, i) = R.one();
  return out;
}

template <class Ring>
Matrix<typename Ring::Element> multiply(const Ring& R, const Matrix<typename Ring::Element>& A,
                                        const Matrix<typename Ring::Element>& B) {
  require(A.cols() == B.rows(), Errc::SizeMismatch, "matrix product dimensions");
  Matrix<typename Ring::Element> out(A.rows(), B.cols(), R.zero());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t k = 0; k < A.cols(); ++k) {
      if (R.is_zero(A(i, k))) continue;
      for (std::size_t j = 0; j < B.cols(); ++j) {
        out(i, j) = R.add(out(i, j), R.mul(A(i, k), B(k, j)));
      }
    }
  }
  return out;
}

template <class Ring>
Matrix<typename Ring::Element> add(const Ring& R, const Matrix<typename Ring::Element>& A,
                                   const Matrix<typename Ring::Element>& B) {
  require(A.rows() == B.rows() && A.cols() == B.cols(), Errc::SizeMismatch, "matrix sum dimensions");
  Matrix<typename Ring::Element> out(A.rows(), A.cols(), R.zero());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out(i, j) = R.add(A(i, j), B(i, j));
  return out;
}

template <class Ring>
Matrix<typename Ring::Element> subtract(const Ring& R, const Matrix<typename Ring::Element>& A,
                                        const Matrix<typename Ring::Element>& B) {
  require(A.rows() == B.rows() && A.cols() == B.cols(), Errc::SizeMismatch, "matrix difference dimensions");
  Matrix<typename Ring::Element> out(A.rows(), A.cols(), R.zero());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out(i, j) = R.sub(A(i, j), B(i, j));
  return out;
}

template <class Ring>
Matrix<typename Ring::Element> scale(const Ring& R, const typename Ring::Element& s,
                                     const Matrix<typename Ring::Element>& A) {
  Matrix<typename Ring::Element> out(A.rows(), A.cols(), R.zero());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out(i, j) = R.mul(s, A(i, j));
  return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& A) {
  Matrix<T> out(A.cols(), A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out(j, i) = A(i, j);
  return out;
}

template <class Ring>
bool equal(const Ring& R, const Matrix<typename Ring::Element>& A, const Matrix<typename Ring::Element>& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!R.equal(A(i, j), B(i, j))) return false;
  return true;
}

template <class Ring>
bool is_diagonal(const Ring& R, const Matrix<typename Ring::Element>& A) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (i != j && !R.is_zero(A(i, j))) return false;
  return true;
}

template <class Ring>
std::vector<typename Ring::Element> apply(const Ring& R, const Matrix<typename Ring::Element>& A,
                                          const std::vector<typename Ring::Element>& v) {
  require(A.cols() == v.size(), Errc::SizeMismatch, "matrix-vector dimensions");
  std::vector<typename Ring::Element> out(A.rows(), R.zero());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out[i] = R.add(out[i], R.mul(A(i, j), v[j]));
  return out;
}

/// Characteristic polynomial det(xI - A), constant term first, by Berkowitz's
/// division-free recursion; valid over any commutative ring.
template <class Ring>
std::vector<typename Ring::Element> berkowitz(const Ring& R, const Matrix<typename Ring::Element>& A) {
  using E = typename Ring::Element;
  require(A.is_square(), Errc::NotSquare, "characteristic polynomial of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return {R.one()};
  // Coefficients highest degree first while iterating.
  std::vector<E> poly{R.one(), R.neg(A(n - 1, n - 1))};
  for (std::size_t ii = n - 1; ii-- > 0;) {
    const std::size_t m = n - 1 - ii;  // size of trailing block
    // w_k = r M^k c where r = A[ii, ii+1:], c = A[ii+1:, ii], M = A[ii+1:, ii+1:]
    std::vector<E> c(m);
    for (std::size_t t = 0; t < m; ++t) c[t] = A(ii + 1 + t, ii);
    std::vector<E> column{R.one(), R.neg(A(ii, ii))};
    for (std::size_t k = 0; k < m; ++k) {
      E w = R.zero();
      for (std::size_t t = 0; t < m; ++t) w = R.add(w, R.mul(A(ii, ii + 1 + t), c[t]));
      column.push_back(R.neg(w));
      if (k + 1 < m) {
        std::vector<E> next(m, R.zero());
        for (std::size_t s = 0; s < m; ++s)
          for (std::size_t t = 0; t < m; ++t) next[s] = R.add(next[s], R.mul(A(ii + 1 + s, ii + 1 + t), c[t]));
        c = std::move(next);
      }
    }
    std::vector<E> next(m + 2, R.zero());
    for (std::size_t k = 0; k < m + 2; ++k)
      for (std::size_t l = 0; l <= std::min(k, m); ++l) next[k] = R.add(next[k], R.mul(column[k - l], poly[l]));
    poly = std::move(next);
  }
  return {poly.rbegin(), poly.rend()};
}

template <class Ring>
typename Ring::Element determinant(const Ring& R, const Matrix<typename Ring::Element>& A) {
  auto cp = berkowitz(R, A);
  return (A.rows() % 2 == 0) ? cp.front() : R.neg(cp.front());
}

/// Rank over a field by Gaussian elimination.
template <class Field>
std::size_t rank(const Field& F, Matrix<typename Field::Element> A) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < A.cols() && r < A.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < A.rows() && F.is_zero(A(pivot, col))) ++pivot;
    if (pivot == A.rows()) continue;
    for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(r, j), A(pivot, j));
    auto inv = F.invert(A(r, col));
    for (std::size_t i = r + 1; i < A.rows(); ++i) {
      if (F.is_zero(A(i, col))) continue;
      auto factor = F.mul(A(i, col), inv);
      for (std::size_t j = col; j < A.cols(); ++j) A(i, j) = F.sub(A(i, j), F.mul(factor, A(r, j)));
    }
    ++r;
  }
  return r;
}

/// Basis of the right kernel {v : A v = 0} over a field.
template <class Field>
std::vector<std::vector<typename Field::Element>> kernel_basis(const Field& F, Matrix<typename Field::Element> A) {
  using E = typename Field::Element;
  const std::size_t rows = A.rows(), cols = A.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && F.is_zero(A(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(A(r, j), A(pivot, j));
    auto inv = F.invert(A(r, col));
    for (std::size_t j = 0; j < cols; ++j) A(r, j) = F.mul(A(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || F.is_zero(A(i, col))) continue;
      auto factor = A(i, col);
      for (std::size_t j = 0; j < cols; ++j) A(i, j) = F.sub(A(i, j), F.mul(factor, A(r, j)));
    }
    pivot_cols.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<E>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<E> v(cols, F.zero());
    v[free] = F.one();
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = F.neg(A(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse over a local ring (or field): Gauss-Jordan with unit pivots. Throws
/// NotAUnit when some column has no unit pivot, i.e. the matrix is singular
/// modulo the maximal ideal.
template <class Ring>
Matrix<typename Ring::Element> inverse_local(const Ring& R, Matrix<typename Ring::Element> A) {
  require(A.is_square(), Errc::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = A.rows();
  auto inv = identity(R, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !R.is_unit(A(pivot, col))) ++pivot;
    require(pivot < n, Errc::NotAUnit, "matrix is not invertible over the local ring");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(A(col, j), A(pivot, j));
      std::swap(inv(col, j), inv(pivot, j));
    }
    auto s = R.invert(A(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      A(col, j) = R.mul(A(col, j), s);
      inv(col, j) = R.mul(inv(col, j), s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || R.is_zero(A(i, col))) continue;
      auto factor = A(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        A(i, j) = R.sub(A(i, j), R.mul(factor, A(col, j)));
        inv(i, j) = R.sub(inv(i, j), R.mul(factor, inv(col, j)));
      }
    }
  }
  return inv;
}

/// Build an integer matrix from nested initializer data.
IntMatrix make_int_matrix(const std::vector<std::vector<long>>& rows);

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

/// Conjugate by a coordinate permutation: out(i, j) = A(perm[i], perm[j]).
IntMatrix permute(const IntMatrix& A, const std::vector<std::size_t>& perm);

}  // namespace flatcyc
