#include "invol/linalg.hpp"

namespace invol {

Matrix<RingElement> ring_zero_matrix(const RingPtr& ring, std::size_t rows,
                                     std::size_t cols) {
  return Matrix<RingElement>(rows, cols, ring->zero());
}

Matrix<RingElement> ring_identity(const RingPtr& ring, std::size_t n) {
  return Matrix<RingElement>::identity(n, ring->zero(), ring->one());
}

Matrix<RingElement> constant_matrix(const RingPtr& ring,
                                    const Matrix<Scalar>& m) {
  Matrix<RingElement> r(m.rows(), m.cols(), ring->zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = ring->from_scalar(m(i, j));
  return r;
}

Matrix<Scalar> eval_at_point(const Matrix<RingElement>& m,
                             const RationalPoint& z) {
  if (m.rows() == 0 || m.cols() == 0)
    throw MathError("evaluating an empty matrix");
  Matrix<Scalar> r(m.rows(), m.cols(), Scalar::zero(z.ring()->field()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).evaluate(z);
  return r;
}

Matrix<RingElement> apply_entrywise(const RingInvolution& inv,
                                    const Matrix<RingElement>& m) {
  Matrix<RingElement> r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = inv.apply(m(i, j));
  return r;
}

bool check_idempotent(const Matrix<RingElement>& e) {
  if (!e.square()) return false;
  return e * e == e;
}

RingElement ring_det(const Matrix<RingElement>& m) { return laplace_det(m); }

bool is_unit_matrix(const Matrix<RingElement>& m) {
  if (!m.square() || m.rows() == 0) return false;
  RingElement d = ring_det(m);
  return d.is_constant() && !d.is_zero();
}

Matrix<RingElement> ring_inverse(const Matrix<RingElement>& m) {
  if (!m.square() || m.rows() == 0)
    throw MathError("inverse of a non-square matrix");
  RingElement d = ring_det(m);
  if (d.is_zero()) throw MathError("matrix is singular over the ring");
  if (!d.is_constant())
    throw MathError("matrix determinant " + d.str() +
                    " is not a constant unit; the matrix is not invertible "
                    "over the whole ring");
  const RingPtr& ring = m(0, 0).ring();
  Matrix<RingElement> adj = adjugate(m, ring->one());
  RingElement dinv = d.inverse();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) adj(i, j) *= dinv;
  return adj;
}

bool IdempotentModule::contains(const Matrix<RingElement>& column) const {
  if (column.cols() != 1 || column.rows() != idem.rows())
    throw MathError("membership test expects an ambient column vector");
  return (idem * column).is_zero();
}

Matrix<RingElement> IdempotentModule::project(
    const Matrix<RingElement>& column) const {
  if (column.cols() != 1 || column.rows() != idem.rows())
    throw MathError("projection expects an ambient column vector");
  return complement * column;
}

IdempotentModule module_from_idempotent(
    const Matrix<RingElement>& e, std::span<const RationalPoint> points) {
  if (!e.square() || e.rows() == 0)
    throw MathError("idempotent must be a nonempty square matrix");
  if (!check_idempotent(e))
    throw MathError("matrix is not idempotent: E*E differs from E");
  IdempotentModule mod;
  mod.ring = e(0, 0).ring();
  mod.idem = e;
  mod.complement = ring_identity(mod.ring, e.rows()) - e;
  for (const auto& z : points) {
    std::size_t r = matrix_rank(eval_at_point(mod.complement, z));
    mod.point_ranks.emplace_back(z.str(), r);
    if (!mod.rank)
      mod.rank = r;
    else if (*mod.rank != r)
      throw MathError("module rank is not constant across the supplied "
                      "points: " +
                      std::to_string(*mod.rank) + " vs " + std::to_string(r) +
                      " at " + z.str());
  }
  return mod;
}

Matrix<RingElement> dual_canonicalize(const Matrix<RingElement>& row,
                                      const Matrix<RingElement>& e) {
  if (row.rows() != 1)
    throw MathError("dual representative must be a row vector");
  if (!e.square() || e.rows() != row.cols())
    throw MathError("functional and idempotent shapes do not match");
  const RingPtr& ring = e(0, 0).ring();
  return row * (ring_identity(ring, e.rows()) - e);
}

}  // namespace invol
