#include <doctest.h>

#include "invol/sphere.hpp"
#include "invol/random.hpp"
#include "oracles.hpp"

using namespace invol;

TEST_CASE("setup construction and the idempotent facts") {
  SphereSetup s = build_sphere_setup(Field::gf(5));
  CHECK((s.i_value * s.i_value) == -Scalar::one(s.field));
  CHECK(check_idempotent(s.idem));
  CHECK(ring_det(s.idem).is_zero());
  CHECK(s.idem(0, 0) + s.idem(1, 1) == s.ring->one());

  Matrix<Scalar> ep = eval_at_point(s.idem, s.p);
  Matrix<Scalar> eq = eval_at_point(s.idem, s.q);
  CHECK(ep(0, 0).is_zero());
  CHECK(ep(1, 1).is_one());
  CHECK(ep(0, 1).is_zero());
  CHECK(ep(1, 0).is_zero());
  CHECK(eq(0, 0).is_one());
  CHECK(eq(1, 1).is_zero());
  CHECK(matrix_rank(ep) == 1);
  CHECK(matrix_rank(eq) == 1);
  REQUIRE(s.module.rank.has_value());
  CHECK(*s.module.rank == 1);

  CHECK_THROWS_AS(build_sphere_setup(Field::gf(7)), MathError);
  CHECK_THROWS_AS(build_sphere_setup(Field::gf(11)), MathError);
}

TEST_CASE("rational requests upgrade to a field with i") {
  SphereSetup s = build_sphere_setup(Field::rationals());
  CHECK(s.field.has_extension());
  CHECK((s.i_value * s.i_value) == -Scalar::one(s.field));
  CHECK(check_idempotent(s.idem));
}

TEST_CASE("block elements validate their constraints") {
  SphereSetup s = build_sphere_setup(Field::gf(5));
  Rng rng(301);
  BlockElement x = random_block_element(s, rng);
  CHECK((s.idem * x.m()).is_zero());
  CHECK((x.mu() * s.idem).is_zero());

  Matrix<RingElement> raw_m = random_ring_matrix(s.ring, 2, 1, rng);
  if (!(s.idem * raw_m).is_zero())
    CHECK_THROWS_AS(BlockElement::make(s.ring->zero(),
                                       ring_zero_matrix(s.ring, 1, 2), raw_m,
                                       s.ring->zero(), s),
                    MathError);
  CHECK_THROWS_AS(BlockElement::make(s.ring->zero(),
                                     ring_zero_matrix(s.ring, 2, 1),
                                     ring_zero_matrix(s.ring, 2, 1),
                                     s.ring->zero(), s),
                  MathError);
}

TEST_CASE("block algebra laws") {
  SphereSetup s = build_sphere_setup(Field::gf(5));
  Rng rng(303);
  BlockElement one = BlockElement::one(s);
  for (int trial = 0; trial < 25; ++trial) {
    BlockElement x = random_block_element(s, rng);
    BlockElement y = random_block_element(s, rng);
    BlockElement z = random_block_element(s, rng);
    CHECK(block_mul(one, x) == x);
    CHECK(block_mul(x, one) == x);
    CHECK(block_mul(block_mul(x, y), z) == block_mul(x, block_mul(y, z)));
    CHECK(x + y == y + x);
    CHECK(block_mul(x + y, z) == block_mul(x, z) + block_mul(y, z));
  }

  // mu-against-m products land in the corners
  Matrix<RingElement> v = random_ring_matrix(s.ring, 2, 1, rng);
  Matrix<RingElement> row = random_ring_matrix(s.ring, 1, 2, rng);
  BlockElement mu_only = BlockElement::from_ambient(
      s.ring->zero(), row, ring_zero_matrix(s.ring, 2, 1), s.ring->zero(), s);
  BlockElement m_only = BlockElement::from_ambient(
      s.ring->zero(), ring_zero_matrix(s.ring, 1, 2), v, s.ring->zero(), s);
  BlockElement prod = block_mul(mu_only, m_only);
  CHECK(prod.r1() == (mu_only.mu() * m_only.m())(0, 0));
  CHECK(prod.mu().is_zero());
  CHECK(prod.m().is_zero());
  CHECK(prod.r2().is_zero());
  BlockElement flipped = block_mul(m_only, mu_only);
  CHECK(flipped.r1().is_zero());
  CHECK(flipped.r2() == (mu_only.mu() * m_only.m())(0, 0));
}

TEST_CASE("sigma is an involution of the block algebra") {
  SphereSetup s = build_sphere_setup(Field::gf(5));
  Rng rng(305);
  BlockElement one = BlockElement::one(s);
  CHECK(block_sigma(s, one) == one);

  for (int trial = 0; trial < 25; ++trial) {
    BlockElement x = random_block_element(s, rng);
    BlockElement y = random_block_element(s, rng);
    CHECK(block_sigma(s, x + y) ==
          block_sigma(s, x) + block_sigma(s, y));
    CHECK(block_sigma(s, block_mul(x, y)) ==
          block_mul(block_sigma(s, y), block_sigma(s, x)));
    CHECK(block_sigma(s, block_sigma(s, x)) == x);
  }

  // diagonal elements swap with lambda applied
  RingElement r1 = random_ring_element(s.ring, rng);
  RingElement r2 = random_ring_element(s.ring, rng);
  BlockElement diag = BlockElement::from_ambient(
      r1, ring_zero_matrix(s.ring, 1, 2), ring_zero_matrix(s.ring, 2, 1), r2,
      s);
  BlockElement sd = block_sigma(s, diag);
  CHECK(sd.r1() == s.lambda.apply(r2));
  CHECK(sd.r2() == s.lambda.apply(r1));
  CHECK(sd.mu().is_zero());
  CHECK(sd.m().is_zero());
}

TEST_CASE("epsilon is a semilinear involution of the module") {
  SphereSetup s = build_sphere_setup(Field::gf(5));
  Rng rng(307);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix<RingElement> m =
        s.module.complement * random_ring_matrix(s.ring, 2, 1, rng);
    Matrix<RingElement> em = epsilon_map(s, m);
    CHECK((s.idem * em).is_zero());
    CHECK(epsilon_map(s, em) == m);
    RingElement r = random_ring_element(s.ring, rng);
    CHECK(epsilon_map(s, scale(r, m)) == scale(s.lambda.apply(r), em));
  }
}

TEST_CASE("specialization dimensions at the poles") {
  SphereSetup s = build_sphere_setup(Field::gf(5));
  StructureConstantAlgebra at_p = specialize_block(s, s.p);
  StructureConstantAlgebra at_q = specialize_block(s, s.q);
  CHECK(at_p.dim() == 4);
  CHECK(at_q.dim() == 4);
  for (const auto& ch : at_p.validate_structure()) CHECK(ch.pass);
  for (const auto& ch : at_q.validate_structure()) CHECK(ch.pass);
  for (const auto& ch : check_involution_axioms(at_p, 40, 51)) CHECK(ch.pass);
  for (const auto& ch : check_involution_axioms(at_q, 40, 53)) CHECK(ch.pass);

  CHECK(fixed_subspace_dimension(at_p) == 3);
  CHECK(fixed_subspace_dimension(at_q) == 1);
  CHECK(classify_type(at_p) == InvolutionType::orthogonal);
  CHECK(classify_type(at_q) == InvolutionType::symplectic);

  std::size_t brute_p = oracles::fixed_dim_brute(
      s.field, 4, [&](const std::vector<Scalar>& v) { return at_p.involve(v); });
  std::size_t brute_q = oracles::fixed_dim_brute(
      s.field, 4, [&](const std::vector<Scalar>& v) { return at_q.involve(v); });
  CHECK(brute_p == 3);
  CHECK(brute_q == 1);

  // specialization only exists at fixed points
  Field f = s.field;
  RationalPoint e1 = RationalPoint::make(
      s.ring, {Scalar::zero(f), Scalar::one(f), Scalar::zero(f)});
  CHECK_THROWS_AS(specialize_block(s, e1), MathError);
}

TEST_CASE("specialization is basis independent") {
  SphereSetup s = build_sphere_setup(Field::gf(5));
  for (std::uint64_t seed : {1u, 2u, 77u}) {
    StructureConstantAlgebra at_p = specialize_block(s, s.p, seed);
    StructureConstantAlgebra at_q = specialize_block(s, s.q, seed);
    for (const auto& ch : at_p.validate_structure()) CHECK(ch.pass);
    CHECK(fixed_subspace_dimension(at_p) == 3);
    CHECK(fixed_subspace_dimension(at_q) == 1);
    CHECK(classify_type(at_p) == InvolutionType::orthogonal);
    CHECK(classify_type(at_q) == InvolutionType::symplectic);
  }
}

TEST_CASE("coarse type of the block involution") {
  for (const Field& f : {Field::gf(5), Field::gf(13), Field::gf2(7)}) {
    SphereSetup s = build_sphere_setup(f);
    CoarseType ct = block_coarse_type(s);
    REQUIRE(ct.values.size() == 2);
    CHECK(ct.values[0].first == "p");
    CHECK(ct.values[0].second == 1);
    CHECK(ct.values[1].first == "q");
    CHECK(ct.values[1].second == -1);
  }
}

TEST_CASE("full report passes on gf(5)") {
  SphereSetup s = build_sphere_setup(Field::gf(5));
  Report rep = sphere_report(s, 9, 60);
  for (const auto& ch : rep.checks) {
    INFO(ch.name << ": " << ch.detail);
    CHECK(ch.pass);
  }
  CHECK(rep.overall());
  CHECK(rep.field == "gf:5");
}
