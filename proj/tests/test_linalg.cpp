#include <doctest.h>

#include "invol/linalg.hpp"
#include "invol/random.hpp"

using namespace invol;

TEST_CASE("matrix template basics") {
  Field f = Field::gf(7);
  Rng rng(201);
  Matrix<Scalar> id =
      Matrix<Scalar>::identity(3, Scalar::zero(f), Scalar::one(f));
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<Scalar> a = random_scalar_matrix(f, 3, 3, rng);
    Matrix<Scalar> b = random_scalar_matrix(f, 3, 3, rng);
    CHECK(id * a == a);
    CHECK(a + b == b + a);
    CHECK(transpose(a * b) == transpose(b) * transpose(a));
    CHECK(a - a == Matrix<Scalar>(3, 3, Scalar::zero(f)));
    CHECK(scale(Scalar::of_int(f, 2), a) == a + a);
  }
  Matrix<Scalar> bad(2, 3, Scalar::zero(f));
  CHECK_THROWS_AS(bad * bad, MathError);
  CHECK_THROWS_AS(bad + transpose(bad), MathError);
}

TEST_CASE("kronecker product laws") {
  Field f = Field::gf(7);
  Rng rng(203);
  Matrix<Scalar> i2 =
      Matrix<Scalar>::identity(2, Scalar::zero(f), Scalar::one(f));
  Matrix<Scalar> i4 =
      Matrix<Scalar>::identity(4, Scalar::zero(f), Scalar::one(f));
  CHECK(kronecker_product(i2, i2) == i4);

  Matrix<Scalar> e11(2, 2, Scalar::zero(f));
  e11(0, 0) = Scalar::one(f);
  Matrix<Scalar> e11_4(4, 4, Scalar::zero(f));
  e11_4(0, 0) = Scalar::one(f);
  CHECK(kronecker_product(e11, e11) == e11_4);

  for (int trial = 0; trial < 20; ++trial) {
    Matrix<Scalar> a = random_scalar_matrix(f, 2, 2, rng);
    Matrix<Scalar> b = random_scalar_matrix(f, 2, 2, rng);
    Matrix<Scalar> c = random_scalar_matrix(f, 2, 2, rng);
    Matrix<Scalar> d = random_scalar_matrix(f, 2, 2, rng);
    CHECK(kronecker_product(a, b) * kronecker_product(c, d) ==
          kronecker_product(a * c, b * d));
  }
}

TEST_CASE("ring matrices over the sphere") {
  RingPtr r = unit_sphere_ring(Field::gf(5), 2);
  Matrix<RingElement> u(2, 2, r->zero());
  u(0, 0) = r->one();
  u(0, 1) = r->var(0);
  u(1, 1) = r->one();
  CHECK(ring_det(u).is_one());
  CHECK(is_unit_matrix(u));
  Matrix<RingElement> uinv = ring_inverse(u);
  CHECK(u * uinv == ring_identity(r, 2));

  Matrix<RingElement> w(2, 2, r->zero());
  w(0, 1) = -r->one();
  w(1, 0) = r->one();
  CHECK(ring_det(w).is_one());
  CHECK(ring_inverse(w) == -w);

  Matrix<RingElement> nonunit(2, 2, r->zero());
  nonunit(0, 0) = r->one();
  nonunit(1, 1) = r->var(0);
  CHECK(ring_det(nonunit) == r->var(0));
  CHECK_FALSE(is_unit_matrix(nonunit));
  CHECK_THROWS_AS(ring_inverse(nonunit), MathError);

  CHECK(check_idempotent(ring_identity(r, 2)));
  CHECK_FALSE(check_idempotent(w));
}

TEST_CASE("evaluation and entrywise involution") {
  RingPtr r = unit_sphere_ring(Field::gf(5), 2);
  Field f = r->field();
  RingInvolution lam = axis_reflection(r);
  RationalPoint p = RationalPoint::make(
      r, {Scalar::one(f), Scalar::zero(f), Scalar::zero(f)}, "p");

  Matrix<RingElement> m(2, 2, r->zero());
  m(0, 0) = r->var(0);
  m(0, 1) = r->var(1) + r->one();
  m(1, 0) = r->var(2);
  m(1, 1) = r->from_int(3);
  Matrix<Scalar> mp = eval_at_point(m, p);
  CHECK(mp(0, 0) == Scalar::one(f));
  CHECK(mp(0, 1) == Scalar::one(f));
  CHECK(mp(1, 0).is_zero());
  CHECK(mp(1, 1) == Scalar::of_int(f, 3));

  Matrix<RingElement> lm = apply_entrywise(lam, m);
  CHECK(lm(0, 0) == r->var(0));
  CHECK(lm(0, 1) == -r->var(1) + r->one());
  CHECK(lm(1, 0) == -r->var(2));

  Matrix<Scalar> back(2, 2, Scalar::of_int(f, 4));
  CHECK(eval_at_point(constant_matrix(r, back), p) == back);
}

TEST_CASE("idempotent module bookkeeping") {
  RingPtr r = unit_sphere_ring(Field::gf(5), 2);
  Field f = r->field();
  std::vector<RationalPoint> pts{
      RationalPoint::make(r, {Scalar::one(f), Scalar::zero(f), Scalar::zero(f)},
                          "p"),
      RationalPoint::make(
          r, {Scalar::of_int(f, -1), Scalar::zero(f), Scalar::zero(f)}, "q")};

  Matrix<RingElement> e(2, 2, r->zero());
  e(0, 0) = r->one();
  IdempotentModule mod = module_from_idempotent(e, pts);
  REQUIRE(mod.rank.has_value());
  CHECK(*mod.rank == 1);
  CHECK(mod.point_ranks.size() == 2);

  Rng rng(211);
  for (int trial = 0; trial < 15; ++trial) {
    Matrix<RingElement> v = random_ring_matrix(r, 2, 1, rng);
    Matrix<RingElement> proj = mod.project(v);
    CHECK(mod.contains(proj));
    CHECK((e * proj).is_zero());
    Matrix<RingElement> row = random_ring_matrix(r, 1, 2, rng);
    Matrix<RingElement> canon = dual_canonicalize(row, e);
    CHECK((canon * e).is_zero());
    CHECK(dual_canonicalize(canon, e) == canon);
  }

  Matrix<RingElement> not_idem(2, 2, r->zero());
  not_idem(0, 1) = r->one();
  CHECK_THROWS_AS(module_from_idempotent(not_idem, pts), MathError);
}
