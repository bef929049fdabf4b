#include "invol/sphere.hpp"

#include "invol/elimination.hpp"
#include "invol/random.hpp"

namespace invol {

namespace {

Matrix<RingElement> diag_plus_minus(const RingPtr& ring) {
  Matrix<RingElement> d = ring_identity(ring, 2);
  d(1, 1) = -ring->one();
  return d;
}

Matrix<RingElement> apply_lambda(const RingInvolution& lambda,
                                 const Matrix<RingElement>& m) {
  return apply_entrywise(lambda, m);
}

}  // namespace

SphereSetup build_sphere_setup(const Field& requested) {
  Field f = requested;
  if (f.kind() == FieldKind::rationals) f = Field::rationals_ext(-1);
  auto i = Scalar::sqrt_minus_one(f);
  if (!i)
    throw MathError("field " + f.name() +
                    " contains no square root of -1, which the rank-one "
                    "idempotent needs");
  RingPtr ring = unit_sphere_ring(f, 2);
  RingInvolution lambda = axis_reflection(ring);

  Scalar half = Scalar::of_int(f, 2).inverse();
  RingElement one = ring->one();
  RingElement x0 = ring->var(0), x1 = ring->var(1), x2 = ring->var(2);
  RingElement ix2 = x2.scaled(*i);
  Matrix<RingElement> e(2, 2, ring->zero());
  e(0, 0) = (one - x0).scaled(half);
  e(0, 1) = (x1 + ix2).scaled(half);
  e(1, 0) = (x1 - ix2).scaled(half);
  e(1, 1) = (one + x0).scaled(half);

  auto pole = [&](std::int64_t x0v, std::string label) {
    std::vector<Scalar> coords{Scalar::of_int(f, x0v), Scalar::zero(f),
                               Scalar::zero(f)};
    return RationalPoint::make(ring, std::move(coords), std::move(label));
  };
  RationalPoint p = pole(1, "p"), q = pole(-1, "q");
  std::vector<RationalPoint> pts{p, q};
  IdempotentModule module = module_from_idempotent(e, pts);

  return SphereSetup{std::move(f), std::move(ring),   std::move(lambda),
                     std::move(*i), std::move(e),      std::move(module),
                     std::move(p), std::move(q)};
}

BlockElement BlockElement::make(RingElement r1, Matrix<RingElement> mu,
                                Matrix<RingElement> m, RingElement r2,
                                const SphereSetup& s) {
  if (mu.rows() != 1 || mu.cols() != 2)
    throw MathError("mu must be a 1x2 row vector");
  if (m.rows() != 2 || m.cols() != 1)
    throw MathError("m must be a 2x1 column vector");
  if (!(mu * s.idem).is_zero())
    throw MathError("mu does not vanish on the image of the idempotent");
  if (!(s.idem * m).is_zero())
    throw MathError("m does not lie in the kernel of the idempotent");
  BlockElement x;
  x.r1_ = std::move(r1);
  x.mu_ = std::move(mu);
  x.m_ = std::move(m);
  x.r2_ = std::move(r2);
  return x;
}

BlockElement BlockElement::from_ambient(const RingElement& r1,
                                        const Matrix<RingElement>& mu_raw,
                                        const Matrix<RingElement>& m_raw,
                                        const RingElement& r2,
                                        const SphereSetup& s) {
  return make(r1, mu_raw * s.module.complement, s.module.complement * m_raw,
              r2, s);
}

BlockElement BlockElement::zero(const SphereSetup& s) {
  return make(s.ring->zero(), ring_zero_matrix(s.ring, 1, 2),
              ring_zero_matrix(s.ring, 2, 1), s.ring->zero(), s);
}

BlockElement BlockElement::one(const SphereSetup& s) {
  return make(s.ring->one(), ring_zero_matrix(s.ring, 1, 2),
              ring_zero_matrix(s.ring, 2, 1), s.ring->one(), s);
}

bool BlockElement::operator==(const BlockElement& o) const {
  return r1_ == o.r1_ && mu_ == o.mu_ && m_ == o.m_ && r2_ == o.r2_;
}

BlockElement BlockElement::operator+(const BlockElement& o) const {
  BlockElement x;
  x.r1_ = r1_ + o.r1_;
  x.mu_ = mu_ + o.mu_;
  x.m_ = m_ + o.m_;
  x.r2_ = r2_ + o.r2_;
  return x;
}

BlockElement BlockElement::operator-(const BlockElement& o) const {
  BlockElement x;
  x.r1_ = r1_ - o.r1_;
  x.mu_ = mu_ - o.mu_;
  x.m_ = m_ - o.m_;
  x.r2_ = r2_ - o.r2_;
  return x;
}

BlockElement BlockElement::scaled(const RingElement& r) const {
  BlockElement x;
  x.r1_ = r1_ * r;
  x.mu_ = scale(r, mu_);
  x.m_ = scale(r, m_);
  x.r2_ = r2_ * r;
  return x;
}

std::string BlockElement::str() const {
  return "[r1=" + r1_.str() + ", mu=" + matrix_str(mu_) +
         ", m=" + matrix_str(m_) + ", r2=" + r2_.str() + "]";
}

BlockElement block_mul(const BlockElement& x, const BlockElement& y) {
  BlockElement z;
  z.r1_ = x.r1_ * y.r1_ + (x.mu_ * y.m_)(0, 0);
  z.mu_ = scale(x.r1_, y.mu_) + scale(y.r2_, x.mu_);
  z.m_ = scale(y.r1_, x.m_) + scale(x.r2_, y.m_);
  z.r2_ = (y.mu_ * x.m_)(0, 0) + x.r2_ * y.r2_;
  return z;
}

BlockElement block_sigma(const SphereSetup& s, const BlockElement& x) {
  Matrix<RingElement> d = diag_plus_minus(s.ring);
  BlockElement z;
  z.r1_ = s.lambda.apply(x.r2_);
  z.mu_ = apply_lambda(s.lambda, x.mu_) * d;
  z.m_ = d * apply_lambda(s.lambda, x.m_);
  z.r2_ = s.lambda.apply(x.r1_);
  if (!(s.idem * z.m_).is_zero() || !(z.mu_ * s.idem).is_zero())
    throw MathError("eps left the kernel module");
  return z;
}

BlockElement random_block_element(const SphereSetup& s, Rng& rng) {
  return BlockElement::from_ambient(
      random_ring_element(s.ring, rng), random_ring_matrix(s.ring, 1, 2, rng),
      random_ring_matrix(s.ring, 2, 1, rng), random_ring_element(s.ring, rng),
      s);
}

Matrix<RingElement> epsilon_map(const SphereSetup& s,
                                const Matrix<RingElement>& m_col) {
  return diag_plus_minus(s.ring) * apply_lambda(s.lambda, m_col);
}

// ---- specialization at a fixed point ----
//
// A block element specializes to six field coordinates
// (r1, mu_1, mu_2, m_1, m_2, r2).  The admissible ones form a
// four-dimensional subspace: r1 and r2 are free, mu ranges over the row
// space of P(z) and m over its column space, where P = I - E.  Products
// and the involution act coordinatewise on the ambient six-space, so the
// structure constants fall out of any basis of the subspace.

namespace {

using Vec6 = std::vector<Scalar>;

Vec6 ambient_product(const Vec6& u, const Vec6& v) {
  Vec6 w(6, u[0] - u[0]);
  w[0] = u[0] * v[0] + u[1] * v[3] + u[2] * v[4];
  w[1] = u[0] * v[1] + v[5] * u[1];
  w[2] = u[0] * v[2] + v[5] * u[2];
  w[3] = v[0] * u[3] + u[5] * v[3];
  w[4] = v[0] * u[4] + u[5] * v[4];
  w[5] = v[1] * u[3] + v[2] * u[4] + u[5] * v[5];
  return w;
}

Vec6 ambient_sigma(const Vec6& u) {
  return Vec6{u[5], u[1], -u[2], u[3], -u[4], u[0]};
}

Vec6 matrix_row(const Matrix<Scalar>& m, std::size_t r) {
  Vec6 v(m.cols(), m(r, 0) - m(r, 0));
  for (std::size_t c = 0; c < m.cols(); ++c) v[c] = m(r, c);
  return v;
}

}  // namespace

StructureConstantAlgebra specialize_block(const SphereSetup& s,
                                          const RationalPoint& z,
                                          std::uint64_t basis_seed) {
  if (!s.lambda.fixes_point(z))
    throw MathError("point " + z.str() +
                    " is not fixed by the reflection involution");
  const Field& f = s.field;
  const Scalar zero = Scalar::zero(f);
  const Scalar one = Scalar::one(f);
  Matrix<Scalar> pz = eval_at_point(s.module.complement, z);

  Matrix<Scalar> gens(6, 6, zero);
  gens(0, 0) = one;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t c = 0; c < 2; ++c) gens(1 + i, 1 + c) = pz(i, c);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t r = 0; r < 2; ++r) gens(3 + j, 3 + r) = pz(r, j);
  gens(5, 5) = one;

  EchelonResult ech = reduced_row_echelon(gens);
  if (ech.rank != 4)
    throw MathError("block specialization at " + z.str() + " has dimension " +
                    std::to_string(ech.rank) + ", expected 4");
  Matrix<Scalar> basis(4, 6, zero);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 6; ++c) basis(r, c) = ech.rref(r, c);
  if (basis_seed != 0) {
    Rng rng(basis_seed);
    basis = random_invertible_matrix(f, 4, rng) * basis;
  }

  Matrix<Scalar> basis_t = transpose(basis);
  auto coords_of = [&](const Vec6& v) { return solve(basis_t, v); };

  StructureConstantAlgebra::MultTable mult(16);
  for (std::size_t a = 0; a < 4; ++a) {
    Vec6 ua = matrix_row(basis, a);
    for (std::size_t b = 0; b < 4; ++b) {
      Vec6 ub = matrix_row(basis, b);
      std::vector<Scalar> prod = coords_of(ambient_product(ua, ub));
      auto& cell = mult[a * 4 + b];
      for (std::size_t k = 0; k < 4; ++k)
        if (!prod[k].is_zero()) cell.emplace_back(k, prod[k]);
    }
  }

  Vec6 unit_ambient(6, zero);
  unit_ambient[0] = one;
  unit_ambient[5] = one;
  std::vector<Scalar> unit = coords_of(unit_ambient);

  Matrix<Scalar> sigma(4, 4, zero);
  for (std::size_t a = 0; a < 4; ++a) {
    std::vector<Scalar> img = coords_of(ambient_sigma(matrix_row(basis, a)));
    for (std::size_t r = 0; r < 4; ++r) sigma(r, a) = img[r];
  }

  return StructureConstantAlgebra(f, 2, std::move(mult), std::move(unit),
                                  std::move(sigma), false);
}

CoarseType block_coarse_type(const SphereSetup& s) {
  CoarseType ct;
  for (const RationalPoint* z : {&s.p, &s.q}) {
    StructureConstantAlgebra alg = specialize_block(s, *z);
    InvolutionType ty = classify_type(alg);
    int v = 0;
    switch (ty) {
      case InvolutionType::orthogonal:
        v = 1;
        break;
      case InvolutionType::symplectic:
        v = -1;
        break;
      case InvolutionType::unitary:
        throw MathError("specialization at " + z->str() +
                        " is of the second kind");
    }
    ct.values.emplace_back(z->label(), v);
  }
  return ct;
}

Report sphere_report(const SphereSetup& s, std::uint64_t seed,
                     std::size_t samples) {
  Report rep;
  rep.field = s.field.name();
  rep.seed = seed;
  Rng rng(seed);
  const RingPtr& ring = s.ring;

  rep.add("field admits sqrt(-1)",
          (s.i_value * s.i_value + Scalar::one(s.field)).is_zero(),
          "i = " + s.i_value.str() + " in " + s.field.name());

  bool idem_ok = check_idempotent(s.idem);
  RingElement dete = ring_det(s.idem);
  RingElement tre = s.idem(0, 0) + s.idem(1, 1);
  rep.add("idempotent: E^2 = E, det E = 0, tr E = 1",
          idem_ok && dete.is_zero() && tre == ring->one(),
          "det = " + dete.str() + ", tr = " + tre.str());

  bool poles_ok = true;
  std::string pole_detail;
  for (const RationalPoint* z : {&s.p, &s.q}) {
    bool on = is_fixed_point(*z, s.lambda);
    poles_ok = poles_ok && on;
    pole_detail += z->str() + (on ? " fixed" : " NOT fixed") + "; ";
  }
  rep.add("both poles lie on the sphere and are reflection-fixed", poles_ok,
          pole_detail);

  Matrix<Scalar> ep = eval_at_point(s.idem, s.p);
  Matrix<Scalar> eq = eval_at_point(s.idem, s.q);
  auto diag_check = [&](const Matrix<Scalar>& m, int d00, int d11) {
    return m(0, 0) == Scalar::of_int(s.field, d00) &&
           m(1, 1) == Scalar::of_int(s.field, d11) && m(0, 1).is_zero() &&
           m(1, 0).is_zero();
  };
  rep.add("E specializes to diag(0,1) at p and diag(1,0) at q",
          diag_check(ep, 0, 1) && diag_check(eq, 1, 0),
          "rank E(p) = " + std::to_string(matrix_rank(ep)) +
              ", rank E(q) = " + std::to_string(matrix_rank(eq)));

  // epsilon: semilinear automorphism of ker E squaring to the identity
  bool eps_ok = true;
  std::string eps_detail = "checked " + std::to_string(samples) + " samples";
  for (std::size_t trial = 0; trial < samples && eps_ok; ++trial) {
    Matrix<RingElement> m =
        s.module.complement * random_ring_matrix(ring, 2, 1, rng);
    Matrix<RingElement> em = epsilon_map(s, m);
    if (!(s.idem * em).is_zero()) {
      eps_ok = false;
      eps_detail = "eps left the kernel module";
      break;
    }
    if (epsilon_map(s, em) != m) {
      eps_ok = false;
      eps_detail = "eps^2 != id";
      break;
    }
    RingElement r = random_ring_element(ring, rng);
    if (epsilon_map(s, scale(r, m)) != scale(s.lambda.apply(r), em)) {
      eps_ok = false;
      eps_detail = "eps is not lambda-semilinear";
      break;
    }
  }
  rep.add("eps is a lambda-semilinear involution of ker E", eps_ok,
          eps_detail);

  // sigma on random block elements
  bool add_ok = true, anti_ok = true, sq_ok = true, cen_ok = true;
  for (std::size_t trial = 0; trial < samples; ++trial) {
    BlockElement x = random_block_element(s, rng);
    BlockElement y = random_block_element(s, rng);
    if (block_sigma(s, x + y) != block_sigma(s, x) + block_sigma(s, y))
      add_ok = false;
    if (block_sigma(s, block_mul(x, y)) !=
        block_mul(block_sigma(s, y), block_sigma(s, x)))
      anti_ok = false;
    if (block_sigma(s, block_sigma(s, x)) != x) sq_ok = false;
    if (trial < 8) {
      RingElement r = random_ring_element(ring, rng);
      BlockElement central = BlockElement::one(s).scaled(r);
      if (block_sigma(s, central) !=
          BlockElement::one(s).scaled(s.lambda.apply(r)))
        cen_ok = false;
    }
  }
  std::string nsamp = std::to_string(samples) + " samples";
  rep.add("sigma is additive", add_ok, nsamp);
  rep.add("sigma is anti-multiplicative", anti_ok, nsamp);
  rep.add("sigma squares to the identity", sq_ok, nsamp);
  rep.add("sigma restricts to the reflection on the center", cen_ok,
          "8 samples");

  // specializations
  bool spec_ok = true;
  std::string spec_detail;
  std::vector<InvolutionType> types;
  for (const RationalPoint* z : {&s.p, &s.q}) {
    StructureConstantAlgebra alg = specialize_block(s, *z);
    auto checks = check_involution_axioms(alg, 32, rng.raw());
    bool ok = all_pass(checks);
    InvolutionType ty = classify_type(alg);
    types.push_back(ty);
    spec_ok = spec_ok && ok;
    spec_detail +=
        z->label() + ": " + (ok ? "axioms pass" : "AXIOMS FAIL") + ", " +
        to_string(ty) + " (fixed dim " +
        std::to_string(fixed_subspace_dimension(alg)) + "); ";
  }
  rep.add("specialized algebras satisfy the involution axioms", spec_ok,
          spec_detail);

  bool split_ok = types.size() == 2 && types[0] == InvolutionType::orthogonal &&
                  types[1] == InvolutionType::symplectic;
  rep.add("orthogonal at p, symplectic at q", split_ok,
          split_ok ? "coarse type {p: +1, q: -1}, nonconstant" : spec_detail);

  // A twisted transpose with a unit scalar twist has the same coarse value
  // at every fixed point (f(z) is lambda-fixed of norm one, hence +-1, and
  // constant when f is).  Differing values at p and q rule that shape out.
  bool rules_out = split_ok;
  rep.add("coarse type is non-constant, so no unit-scalar twist realizes it",
          rules_out, split_ok ? "p=+1, q=-1" : "classification failed");

  return rep;
}

}  // namespace invol
