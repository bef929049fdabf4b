#include <doctest.h>

#include "invol/elimination.hpp"
#include "invol/gfp_rows.hpp"
#include "invol/random.hpp"
#include "oracles.hpp"

using namespace invol;

TEST_CASE("rank agrees with the reference elimination") {
  std::vector<Field> fields{Field::gf(5), Field::gf(7), Field::rationals(),
                            Field::gf2(5)};
  Rng rng(101);
  for (const Field& f : fields) {
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t n = 1 + rng.below(6), m = 1 + rng.below(6);
      Matrix<Scalar> a = random_scalar_matrix(f, n, m, rng);
      CHECK(matrix_rank(a) == oracles::naive_rank(a));
    }
  }
}

TEST_CASE("reduced echelon form invariants") {
  Field f = Field::gf(7);
  Rng rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<Scalar> a = random_scalar_matrix(f, 4, 6, rng);
    EchelonResult e = reduced_row_echelon(a);
    CHECK(e.pivot_cols.size() == e.rank);
    // pivot entries are 1 and alone in their column
    for (std::size_t i = 0; i < e.rank; ++i) {
      std::size_t c = e.pivot_cols[i];
      CHECK(e.rref(i, c).is_one());
      for (std::size_t r = 0; r < e.rref.rows(); ++r)
        if (r != i) CHECK(e.rref(r, c).is_zero());
    }
    EchelonResult again = reduced_row_echelon(e.rref);
    CHECK(again.rref == e.rref);
  }
}

TEST_CASE("kernel basis spans the right kernel") {
  Field f = Field::gf(5);
  Rng rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = 2 + rng.below(4), cols = 2 + rng.below(4);
    Matrix<Scalar> a = random_scalar_matrix(f, rows, cols, rng);
    auto kb = kernel_basis(a);
    CHECK(kb.size() == cols - matrix_rank(a));
    for (const auto& v : kb) {
      for (std::size_t r = 0; r < rows; ++r) {
        Scalar acc = Scalar::zero(f);
        for (std::size_t c = 0; c < cols; ++c) acc += a(r, c) * v[c];
        CHECK(acc.is_zero());
      }
    }
    // independence
    Matrix<Scalar> stacked(kb.size(), cols, Scalar::zero(f));
    for (std::size_t i = 0; i < kb.size(); ++i)
      for (std::size_t c = 0; c < cols; ++c) stacked(i, c) = kb[i][c];
    if (!kb.empty()) CHECK(matrix_rank(stacked) == kb.size());
  }
}

TEST_CASE("determinant and inverse") {
  Field f = Field::rationals();
  Rng rng(109);
  Matrix<Scalar> tri(3, 3, Scalar::zero(f));
  tri(0, 0) = Scalar::of_int(f, 2);
  tri(1, 1) = Scalar::of_int(f, -3);
  tri(2, 2) = Scalar::of_int(f, 5);
  tri(0, 2) = Scalar::of_int(f, 7);
  CHECK(det(tri) == Scalar::of_int(f, -30));

  for (int trial = 0; trial < 15; ++trial) {
    Matrix<Scalar> a = random_scalar_matrix(f, 3, 3, rng);
    Matrix<Scalar> b = random_scalar_matrix(f, 3, 3, rng);
    CHECK(det(a * b) == det(a) * det(b));
    CHECK(det(transpose(a)) == det(a));
    CHECK(det(a) == laplace_det(a));
  }

  Field g = Field::gf(7);
  for (int trial = 0; trial < 15; ++trial) {
    Matrix<Scalar> a = random_invertible_matrix(g, 4, rng);
    Matrix<Scalar> id =
        Matrix<Scalar>::identity(4, Scalar::zero(g), Scalar::one(g));
    CHECK(a * inverse(a) == id);
    CHECK(inverse(a) * a == id);
  }

  Matrix<Scalar> sing(2, 2, Scalar::one(g));
  CHECK(det(sing).is_zero());
  CHECK_THROWS_AS(inverse(sing), MathError);
}

TEST_CASE("linear solve") {
  Field f = Field::gf(5);
  Rng rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<Scalar> a = random_scalar_matrix(f, 4, 3, rng);
    std::vector<Scalar> x{random_scalar(f, rng), random_scalar(f, rng),
                          random_scalar(f, rng)};
    std::vector<Scalar> b(4, Scalar::zero(f));
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 3; ++c) b[r] += a(r, c) * x[c];
    std::vector<Scalar> sol = solve(a, b);
    for (std::size_t r = 0; r < 4; ++r) {
      Scalar acc = Scalar::zero(f);
      for (std::size_t c = 0; c < 3; ++c) acc += a(r, c) * sol[c];
      CHECK(acc == b[r]);
    }
  }

  Matrix<Scalar> a(2, 1, Scalar::one(f));
  std::vector<Scalar> b{Scalar::one(f), Scalar::of_int(f, 2)};
  CHECK_THROWS_AS(solve(a, b), MathError);
}

TEST_CASE("row kernel lanes agree") {
  const gfp::RowOps& scalar = gfp::scalar_ops();
  const gfp::RowOps* simd = gfp::simd_ops();
  CHECK(std::string(gfp::active_ops().name).size() > 0);

  Rng rng(127);
  std::vector<std::uint32_t> moduli{5, 7, 101, 65521, 67108859};
  CHECK(67108859 <= gfp::kSimdModulusLimit);
  for (std::uint32_t p : moduli) {
    REQUIRE(is_prime(p));
    Field f = Field::gf(p);
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t n = 1 + rng.below(8);
      Matrix<Scalar> m = random_scalar_matrix(f, n, n + rng.below(4), rng);
      std::size_t want = oracles::naive_rank(m);
      CHECK(detail::gfp_rank_with(m, scalar) == want);
      if (simd) CHECK(detail::gfp_rank_with(m, *simd) == want);
      CHECK(matrix_rank(m) == want);
    }
  }
}

TEST_CASE("raw row kernels compute identical vectors") {
  const gfp::RowOps& scalar = gfp::scalar_ops();
  const gfp::RowOps* simd = gfp::simd_ops();
  if (!simd) return;
  Rng rng(131);
  for (std::uint32_t p : {5u, 65521u, 67108859u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t n = 1 + rng.below(70);
      std::vector<std::uint32_t> x(n), y1(n), y2(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = static_cast<std::uint32_t>(rng.below(p));
        y1[i] = static_cast<std::uint32_t>(rng.below(p));
      }
      y2 = y1;
      std::uint32_t c = static_cast<std::uint32_t>(rng.below(p));
      scalar.axpy(y1.data(), x.data(), c, n, p);
      simd->axpy(y2.data(), x.data(), c, n, p);
      CHECK(y1 == y2);
      scalar.scale(y1.data(), c, n, p);
      simd->scale(y2.data(), c, n, p);
      CHECK(y1 == y2);
    }
  }
}
