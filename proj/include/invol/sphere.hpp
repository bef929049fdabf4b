#pragma once

#include "invol/algebra.hpp"

namespace invol {

// Everything needed for the rank-one idempotent construction over the
// coordinate ring of the 2-sphere: the ring with its reflection involution,
// a square root of -1, the idempotent E with its kernel module, and the two
// reflection-fixed points.
struct SphereSetup {
  Field field;  // actual coefficient field (a requested "q" gains i = t)
  RingPtr ring;
  RingInvolution lambda;
  Scalar i_value;
  Matrix<RingElement> idem;  // E, rank one everywhere
  IdempotentModule module;   // ker E
  RationalPoint p, q;        // (+1,0,0) and (-1,0,0)
};

// MathError when the field cannot host the construction (no sqrt(-1), or
// characteristic 2). A rational request is upgraded to Q[t]/(t^2+1).
SphereSetup build_sphere_setup(const Field& requested);

// Element of End(ring^1 (+) ker E) in block form. mu is a 1x2 row with
// mu E = 0 (a functional on the module, extended by zero on im E); m is a
// 2x1 column with E m = 0.
class BlockElement {
 public:
  // Validates the canonicality constraints.
  static BlockElement make(RingElement r1, Matrix<RingElement> mu,
                           Matrix<RingElement> m, RingElement r2,
                           const SphereSetup& s);
  // Projects arbitrary ambient data onto the constraints.
  static BlockElement from_ambient(const RingElement& r1,
                                   const Matrix<RingElement>& mu_raw,
                                   const Matrix<RingElement>& m_raw,
                                   const RingElement& r2,
                                   const SphereSetup& s);
  static BlockElement zero(const SphereSetup& s);
  static BlockElement one(const SphereSetup& s);

  const RingElement& r1() const { return r1_; }
  const Matrix<RingElement>& mu() const { return mu_; }
  const Matrix<RingElement>& m() const { return m_; }
  const RingElement& r2() const { return r2_; }

  bool operator==(const BlockElement& o) const;
  bool operator!=(const BlockElement& o) const { return !(*this == o); }
  BlockElement operator+(const BlockElement& o) const;
  BlockElement operator-(const BlockElement& o) const;
  BlockElement scaled(const RingElement& r) const;
  std::string str() const;

 private:
  BlockElement() = default;
  friend BlockElement block_mul(const BlockElement&, const BlockElement&);
  friend BlockElement block_sigma(const SphereSetup&, const BlockElement&);
  RingElement r1_, r2_;
  Matrix<RingElement> mu_, m_;
};

BlockElement block_mul(const BlockElement& x, const BlockElement& y);
// The involution (r1, mu, m, r2) -> (lambda(r2), eps*(mu), eps(m), lambda(r1))
// with eps = diag(lambda, -lambda).
BlockElement block_sigma(const SphereSetup& s, const BlockElement& x);
BlockElement random_block_element(const SphereSetup& s, Rng& rng);

// Semilinear kernel-module map eps(m) = diag(1,-1) lambda(m).
Matrix<RingElement> epsilon_map(const SphereSetup& s,
                                const Matrix<RingElement>& m_col);

// The algebra specialized at a reflection-fixed point, built from the
// idempotent alone: the four-dimensional coordinate space is carved out of
// the six ambient block coordinates as the row space of the specialized
// projectors, never via a choice of module basis. A nonzero basis_seed
// re-expresses the same subspace in a random basis (the resulting algebra
// must classify identically).
StructureConstantAlgebra specialize_block(const SphereSetup& s,
                                          const RationalPoint& z,
                                          std::uint64_t basis_seed = 0);

CoarseType block_coarse_type(const SphereSetup& s);

// Full verification pipeline: field facts, idempotent facts, epsilon and
// sigma properties on seeded samples, specialization axioms, classification
// at both fixed points, and the unit-extension contradiction.
Report sphere_report(const SphereSetup& s, std::uint64_t seed,
                     std::size_t samples = 200);

}  // namespace invol
