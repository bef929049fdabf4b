#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "invol/errors.hpp"

namespace invol {

// Dense matrix over any exact coefficient type providing +, -, *, unary -,
// ==, and is_zero(). Used with Scalar and RingElement.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
void require_same_shape(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw MathError("matrix shape mismatch: " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  require_same_shape(a, b);
  Matrix<T> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  require_same_shape(a, b);
  Matrix<T> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a) {
  Matrix<T> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = -a(i, j);
  return r;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw MathError("matrix product shape mismatch: " +
                    std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()));
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0)
    throw MathError("matrix product with an empty factor");
  Matrix<T> r(a.rows(), b.cols(), a(0, 0) - a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r(i, j) = r(i, j) + aik * b(k, j);
    }
  return r;
}

template <class T>
Matrix<T> scale(const T& c, const Matrix<T>& a) {
  Matrix<T> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> r(a.cols(), a.rows(), T{});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

// Kronecker product: block (i,j) of the result is a(i,j) * b.
template <class T>
Matrix<T> kronecker_product(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols(), T{});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

// Laplace-expansion determinant; fine for the small ring matrices this is
// used on. Field matrices go through elimination instead.
template <class T>
T laplace_det(const Matrix<T>& a) {
  if (!a.square()) throw MathError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) throw MathError("determinant of an empty matrix");
  if (n == 1) return a(0, 0);
  Matrix<T> minor(n - 1, n - 1, T{});
  T det = a(0, 0) - a(0, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = a(i, k);
    T term = a(0, j) * laplace_det(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

// Adjugate: adj(a) * a = det(a) * I. The multiplicative identity is passed in
// because T is not default-constructible into a useful value.
template <class T>
Matrix<T> adjugate(const Matrix<T>& a, const T& one) {
  if (!a.square()) throw MathError("adjugate of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) throw MathError("adjugate of an empty matrix");
  if (n == 1) return Matrix<T>(1, 1, one);
  Matrix<T> minor(n - 1, n - 1, T{});
  Matrix<T> adj(n, n, T{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != j) minor(rr, cc++) = a(r, c);
        ++rr;
      }
      T cof = laplace_det(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

// Compact printable form, e.g. [[1, 0], [x0, 1]]; needs T::str().
template <class T>
std::string matrix_str(const Matrix<T>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace invol
