#include "invol/elimination.hpp"

namespace invol {

namespace {

Field field_of(const Matrix<Scalar>& m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw MathError("elimination on an empty matrix");
  return m(0, 0).field();
}

bool use_gfp_path(const Matrix<Scalar>& m) {
  const Field f = field_of(m);
  return f.kind() == FieldKind::prime && f.modulus() <= gfp::kSimdModulusLimit;
}

struct PackedGfp {
  std::size_t rows, cols;
  std::uint32_t p;
  std::vector<std::uint32_t> a;  // row-major residues

  std::uint32_t* row(std::size_t i) { return a.data() + i * cols; }
};

PackedGfp pack(const Matrix<Scalar>& m) {
  PackedGfp g;
  g.rows = m.rows();
  g.cols = m.cols();
  g.p = field_of(m).modulus();
  g.a.resize(g.rows * g.cols);
  for (std::size_t i = 0; i < g.rows; ++i)
    for (std::size_t j = 0; j < g.cols; ++j)
      g.a[i * g.cols + j] = static_cast<std::uint32_t>(m(i, j).residue());
  return g;
}

// In-place elimination; returns pivot columns. full=false leaves row echelon
// (enough for rank/det), full=true produces the reduced form.
std::vector<std::size_t> gfp_eliminate(PackedGfp& g, bool full,
                                       const gfp::RowOps& ops,
                                       std::uint64_t* det_acc = nullptr,
                                       bool* det_negate = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < g.cols && r < g.rows; ++col) {
    std::size_t piv = r;
    while (piv < g.rows && g.row(piv)[col] == 0) ++piv;
    if (piv == g.rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < g.cols; ++j)
        std::swap(g.row(piv)[j], g.row(r)[j]);
      if (det_negate) *det_negate = !*det_negate;
    }
    const std::uint32_t pv = g.row(r)[col];
    if (det_acc) *det_acc = *det_acc * pv % g.p;
    if (pv != 1) {
      const std::uint32_t inv =
          static_cast<std::uint32_t>(mod_inverse(pv, g.p));
      ops.scale(g.row(r) + col, inv, g.cols - col, g.p);
    }
    const std::size_t lo = full ? 0 : r + 1;
    for (std::size_t i = lo; i < g.rows; ++i) {
      if (i == r) continue;
      const std::uint32_t c = g.row(i)[col];
      if (c == 0) continue;
      ops.axpy(g.row(i) + col, g.row(r) + col, g.p - c, g.cols - col, g.p);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

// ---- generic Scalar elimination ----

std::vector<std::size_t> generic_eliminate(Matrix<Scalar>& m, bool full,
                                           Scalar* det_acc = nullptr,
                                           bool* det_negate = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(piv, j), m(r, j));
      if (det_negate) *det_negate = !*det_negate;
    }
    Scalar pv = m(r, col);
    if (det_acc) *det_acc = *det_acc * pv;
    if (!pv.is_one()) {
      Scalar inv = pv.inverse();
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    }
    const std::size_t lo = full ? 0 : r + 1;
    for (std::size_t i = lo; i < m.rows(); ++i) {
      if (i == r) continue;
      Scalar c = m(i, col);
      if (c.is_zero()) continue;
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = m(i, j) - c * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t matrix_rank(const Matrix<Scalar>& m) {
  if (use_gfp_path(m)) {
    PackedGfp g = pack(m);
    return gfp_eliminate(g, false, gfp::active_ops()).size();
  }
  Matrix<Scalar> work = m;
  return generic_eliminate(work, false).size();
}

EchelonResult reduced_row_echelon(const Matrix<Scalar>& m) {
  EchelonResult res;
  if (use_gfp_path(m)) {
    PackedGfp g = pack(m);
    res.pivot_cols = gfp_eliminate(g, true, gfp::active_ops());
    const Field f = field_of(m);
    res.rref = Matrix<Scalar>(m.rows(), m.cols(), Scalar::zero(f));
    for (std::size_t i = 0; i < g.rows; ++i)
      for (std::size_t j = 0; j < g.cols; ++j)
        res.rref(i, j) =
            Scalar::of_int(f, static_cast<std::int64_t>(g.row(i)[j]));
  } else {
    res.rref = m;
    res.pivot_cols = generic_eliminate(res.rref, true);
  }
  res.rank = res.pivot_cols.size();
  return res;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix<Scalar>& m) {
  EchelonResult e = reduced_row_echelon(m);
  const Field f = field_of(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(f));
    v[free_col] = Scalar::one(f);
    for (std::size_t r = 0; r < e.rank; ++r)
      v[e.pivot_cols[r]] = -e.rref(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar det(const Matrix<Scalar>& m) {
  if (!m.square()) throw MathError("determinant of a non-square matrix");
  const Field f = field_of(m);
  if (use_gfp_path(m)) {
    PackedGfp g = pack(m);
    std::uint64_t acc = 1;
    bool neg = false;
    auto pivots = gfp_eliminate(g, false, gfp::active_ops(), &acc, &neg);
    if (pivots.size() < m.rows()) return Scalar::zero(f);
    Scalar d = Scalar::of_int(f, static_cast<std::int64_t>(acc));
    return neg ? -d : d;
  }
  Matrix<Scalar> work = m;
  Scalar acc = Scalar::one(f);
  bool neg = false;
  auto pivots = generic_eliminate(work, false, &acc, &neg);
  if (pivots.size() < m.rows()) return Scalar::zero(f);
  return neg ? -acc : acc;
}

Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
  if (!m.square()) throw MathError("inverse of a non-square matrix");
  const Field f = field_of(m);
  const std::size_t n = m.rows();
  // Eliminate [m | I].
  Matrix<Scalar> aug(n, 2 * n, Scalar::zero(f));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(f);
  }
  EchelonResult e = reduced_row_echelon(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= e.pivot_cols.size() || e.pivot_cols[i] != i)
      throw MathError("matrix is singular");
  Matrix<Scalar> inv(n, n, Scalar::zero(f));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

std::vector<Scalar> solve(const Matrix<Scalar>& a,
                          const std::vector<Scalar>& b) {
  if (b.size() != a.rows())
    throw MathError("solve: right-hand side has wrong length");
  const Field f = field_of(a);
  Matrix<Scalar> aug(a.rows(), a.cols() + 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  EchelonResult e = reduced_row_echelon(aug);
  for (std::size_t c : e.pivot_cols)
    if (c == a.cols()) throw MathError("solve: inconsistent linear system");
  std::vector<Scalar> x(a.cols(), Scalar::zero(f));
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
    x[e.pivot_cols[r]] = e.rref(r, a.cols());
  return x;
}

namespace detail {
std::size_t gfp_rank_with(const Matrix<Scalar>& m, const gfp::RowOps& ops) {
  if (field_of(m).kind() != FieldKind::prime)
    throw MathError("packed elimination needs a prime field");
  PackedGfp g = pack(m);
  return gfp_eliminate(g, false, ops).size();
}
}  // namespace detail

}  // namespace invol
