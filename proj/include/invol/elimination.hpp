#pragma once

#include <vector>

#include "invol/field.hpp"
#include "invol/gfp_rows.hpp"
#include "invol/matrix.hpp"

namespace invol {

struct EchelonResult {
  Matrix<Scalar> rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

// Exact Gaussian elimination. Prime-field matrices with a small enough
// modulus take a packed residue fast path driven by the gfp row kernels;
// everything else runs the generic Scalar loop.
std::size_t matrix_rank(const Matrix<Scalar>& m);
EchelonResult reduced_row_echelon(const Matrix<Scalar>& m);
// Columns spanning the right kernel {v : m v = 0}.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix<Scalar>& m);
Scalar det(const Matrix<Scalar>& m);
// MathError when singular.
Matrix<Scalar> inverse(const Matrix<Scalar>& m);
// Solves a x = b for one column vector; MathError when inconsistent,
// undetermined coordinates are set to zero.
std::vector<Scalar> solve(const Matrix<Scalar>& a, const std::vector<Scalar>& b);

namespace detail {
// Test hook: run the packed prime-field elimination with an explicit kernel
// lane. Requires a prime-kind field.
std::size_t gfp_rank_with(const Matrix<Scalar>& m, const gfp::RowOps& ops);
}  // namespace detail

}  // namespace invol
