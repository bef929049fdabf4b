#include <doctest.h>

#include "invol/quotient_ring.hpp"
#include "invol/random.hpp"

using namespace invol;

namespace {
RingPtr sphere5() { return unit_sphere_ring(Field::gf(5), 2); }
}  // namespace

TEST_CASE("quotient construction constraints") {
  Field f = Field::gf(5);
  CHECK_THROWS_AS(
      QuotientRing::make(f, 2, Polynomial::parse(f, 2, "x0*x1 - 1")),
      MathError);  // leading monomial not a pure power
  CHECK_THROWS_AS(QuotientRing::make(f, 2, Polynomial::parse(f, 2, "3")),
                  MathError);
  CHECK_THROWS_AS(unit_sphere_ring(Field::gf(2), 2), MathError);
  CHECK(unit_sphere_ring(f, 2)->nvars() == 3);
  CHECK(unit_sphere_ring(f, 2)->head_variable() == 0);
  CHECK(unit_sphere_ring(f, 2)->head_exponent() == 2);
}

TEST_CASE("normal forms are canonical and idempotent") {
  RingPtr r = sphere5();
  CHECK(r->parse("x0^3").str() == "-x0*x1^2 - x0*x2^2 + x0");
  CHECK(r->parse("x0^2 + x1^2 + x2^2").str() == "1");
  CHECK(r->parse("x0^2").poly() ==
        Polynomial::parse(r->field(), 3, "1 - x1^2 - x2^2"));
  CHECK(r->equal_mod_relation(Polynomial::parse(r->field(), 3, "x0^2"),
                              Polynomial::parse(r->field(), 3, "1-x1^2-x2^2")));

  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    RingElement a = random_ring_element(r, rng, 4, 5);
    Polynomial nf = r->normal_form(a.poly());
    CHECK(nf == a.poly());  // already normal
    CHECK(r->normal_form(nf) == nf);
  }
}

TEST_CASE("normal form preserves evaluation at sphere points") {
  RingPtr r = sphere5();
  Field f = r->field();
  std::vector<RationalPoint> pts;
  for (std::int64_t sgn : {1, -1}) {
    pts.push_back(RationalPoint::make(
        r, {Scalar::of_int(f, sgn), Scalar::zero(f), Scalar::zero(f)}));
    pts.push_back(RationalPoint::make(
        r, {Scalar::zero(f), Scalar::of_int(f, sgn), Scalar::zero(f)}));
  }
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial raw(f, 3);
    for (int t = 0; t < 5; ++t)
      raw.add_term({static_cast<std::uint32_t>(rng.below(4)),
                    static_cast<std::uint32_t>(rng.below(3)),
                    static_cast<std::uint32_t>(rng.below(3))},
                   Scalar::of_int(f, rng.int_in(0, 4)));
    RingElement e = r->element(raw);
    for (const auto& z : pts)
      CHECK(e.evaluate(z) == raw.evaluate(z.coords()));
  }
}

TEST_CASE("rational points validate against the relation") {
  RingPtr r = sphere5();
  Field f = r->field();
  CHECK_THROWS_AS(
      RationalPoint::make(
          r, {Scalar::of_int(f, 2), Scalar::zero(f), Scalar::zero(f)}),
      MathError);
  CHECK_THROWS_AS(
      RationalPoint::make(r, {Scalar::one(f), Scalar::zero(f)}), MathError);
  RationalPoint p = RationalPoint::make(
      r, {Scalar::one(f), Scalar::zero(f), Scalar::zero(f)}, "p");
  CHECK(p.str() == "p=(1,0,0)");
}

TEST_CASE("ring element arithmetic and inverses") {
  RingPtr r = sphere5();
  RingElement x0 = r->var(0), x1 = r->var(1), x2 = r->var(2);
  CHECK((x0 * x0 + x1 * x1 + x2 * x2).is_one());
  CHECK(r->from_int(3).inverse() * r->from_int(3) == r->one());
  CHECK_THROWS_AS(x0.inverse(), MathError);
  CHECK_THROWS_AS(r->zero().inverse(), MathError);
  CHECK((x0 + x1) * (x0 - x1) == x0 * x0 - x1 * x1);

  RingPtr other = unit_sphere_ring(Field::gf(7), 2);
  CHECK_FALSE(r->same_structure(*other));
  CHECK_THROWS_AS(x0 + other->var(0), MathError);
}

TEST_CASE("axis reflection is a ring involution") {
  RingPtr r = sphere5();
  RingInvolution lam = axis_reflection(r);
  CHECK(lam.apply(r->var(0)) == r->var(0));
  CHECK(lam.apply(r->var(1)) == -r->var(1));
  CHECK(lam.apply(r->var(2)) == -r->var(2));

  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    RingElement a = random_ring_element(r, rng);
    RingElement b = random_ring_element(r, rng);
    CHECK(lam.apply(a + b) == lam.apply(a) + lam.apply(b));
    CHECK(lam.apply(a * b) == lam.apply(a) * lam.apply(b));
    CHECK(lam.apply(lam.apply(a)) == a);
  }

  Field f = r->field();
  RationalPoint p = RationalPoint::make(
      r, {Scalar::one(f), Scalar::zero(f), Scalar::zero(f)});
  RationalPoint e1 = RationalPoint::make(
      r, {Scalar::zero(f), Scalar::one(f), Scalar::zero(f)});
  CHECK(lam.fixes_point(p));
  CHECK_FALSE(lam.fixes_point(e1));
  CHECK(is_fixed_point(p, lam));
}

TEST_CASE("involutions that fail validation are rejected") {
  RingPtr r = sphere5();
  // x0 -> x0 + 1 does not square to the identity
  std::vector<RingElement> bad{r->var(0) + r->one(), r->var(1), r->var(2)};
  auto results = RingInvolution::validate(r, bad, false);
  bool found_failure = false;
  for (const auto& res : results)
    if (!res.pass) found_failure = true;
  CHECK(found_failure);
  CHECK_THROWS_AS(RingInvolution::make(r, bad, false), MathError);

  // wrong arity
  CHECK_THROWS_AS(RingInvolution::make(r, {r->var(0)}, false), MathError);

  // conjugation needs an extension field
  std::vector<RingElement> id_imgs{r->var(0), r->var(1), r->var(2)};
  CHECK_THROWS_AS(RingInvolution::make(r, id_imgs, true), MathError);
  RingPtr rext = unit_sphere_ring(Field::gf2(5), 2);
  std::vector<RingElement> ext_imgs{rext->var(0), rext->var(1), rext->var(2)};
  RingInvolution frob = RingInvolution::make(rext, ext_imgs, true);
  Scalar t = Scalar::ext_generator(rext->field());
  CHECK(frob.apply(rext->from_scalar(t)) == rext->from_scalar(-t));
  CHECK(frob.apply_scalar(t) == -t);
}

TEST_CASE("relation-breaking images are rejected") {
  RingPtr r = sphere5();
  // x0 -> x1, x1 -> x0 with x2 scaled: breaks the relation when scaled by 2
  std::vector<RingElement> imgs{r->var(0), r->var(1).scaled(
      Scalar::of_int(r->field(), 2)), r->var(2)};
  auto results = RingInvolution::validate(r, imgs, false);
  bool relation_ok = true;
  for (const auto& res : results)
    if (res.name == "preserves the defining relation") relation_ok = res.pass;
  CHECK_FALSE(relation_ok);
}
