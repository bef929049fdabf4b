#pragma once

#include <optional>
#include <span>

#include "invol/elimination.hpp"
#include "invol/matrix.hpp"
#include "invol/quotient_ring.hpp"

namespace invol {

Matrix<RingElement> ring_zero_matrix(const RingPtr& ring, std::size_t rows,
                                     std::size_t cols);
Matrix<RingElement> ring_identity(const RingPtr& ring, std::size_t n);
Matrix<RingElement> constant_matrix(const RingPtr& ring,
                                    const Matrix<Scalar>& m);
Matrix<Scalar> eval_at_point(const Matrix<RingElement>& m,
                             const RationalPoint& z);
// Entrywise application of the ring involution (no transpose).
Matrix<RingElement> apply_entrywise(const RingInvolution& inv,
                                    const Matrix<RingElement>& m);

bool check_idempotent(const Matrix<RingElement>& e);
RingElement ring_det(const Matrix<RingElement>& m);
// Inverse over the ring via adjugate/determinant. The determinant must be a
// nonzero constant; for the rings used here those are exactly the units.
Matrix<RingElement> ring_inverse(const Matrix<RingElement>& m);
bool is_unit_matrix(const Matrix<RingElement>& m);

// The projective module ker E = im(I - E) attached to an idempotent E,
// handled through the idempotent itself rather than any choice of basis.
struct IdempotentModule {
  RingPtr ring;
  Matrix<RingElement> idem;        // E
  Matrix<RingElement> complement;  // I - E, a projector onto the module
  // Rank of the module at each supplied point; constancy is enforced.
  std::optional<std::size_t> rank;
  std::vector<std::pair<std::string, std::size_t>> point_ranks;

  // Membership: column vector v lies in the module iff E v = 0.
  bool contains(const Matrix<RingElement>& column) const;
  // Projection of an ambient column into the module.
  Matrix<RingElement> project(const Matrix<RingElement>& column) const;
};

IdempotentModule module_from_idempotent(const Matrix<RingElement>& e,
                                        std::span<const RationalPoint> points);

// Canonical ambient representative of a functional on ker E: extend by zero
// on im E, i.e. replace the row vector v by v (I - E).
Matrix<RingElement> dual_canonicalize(const Matrix<RingElement>& row,
                                      const Matrix<RingElement>& e);

}  // namespace invol
