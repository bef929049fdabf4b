#pragma once

#include <functional>
#include <span>

#include "invol/linalg.hpp"
#include "invol/report.hpp"
#include "invol/rng.hpp"

namespace invol {

enum class InvolutionType { orthogonal, symplectic, unitary };
const char* to_string(InvolutionType t);

// Involution n |-> m^{-1} lambda(n^T) m of the full matrix algebra over a
// quotient ring, presented by its twist m. Construction requires
// lambda(m^T) = f m for a unit scalar f with lambda(f) f = 1 and det(m) != 0.
// Whether m is invertible over the whole ring (constant-unit determinant) is
// tracked separately: without it the involution only exists after
// specialization at points where det m does not vanish, and apply_tau
// refuses to act.
class TwistedTransposeInvolution {
 public:
  const RingPtr& ring() const { return ring_; }
  std::size_t degree() const { return twist_.rows(); }
  const Matrix<RingElement>& twist() const { return twist_; }
  const RingInvolution& ring_involution() const { return lambda_; }
  const RingElement& unit_scalar() const { return f_; }
  const RingElement& twist_det() const { return det_; }
  bool globally_invertible() const { return det_.is_constant(); }
  // Second kind: the ring involution conjugates the coefficient field.
  bool second_kind() const { return lambda_.conjugates_coefficients(); }

 private:
  friend TwistedTransposeInvolution make_transpose_involution(
      Matrix<RingElement> m, RingInvolution lambda);
  explicit TwistedTransposeInvolution(RingInvolution lambda)
      : lambda_(std::move(lambda)) {}

  RingPtr ring_;
  Matrix<RingElement> twist_;
  Matrix<RingElement> twist_inv_;  // only when globally invertible
  RingInvolution lambda_;
  RingElement f_;
  RingElement det_;

  friend Matrix<RingElement> apply_tau(const TwistedTransposeInvolution&,
                                       const Matrix<RingElement>&);
};

TwistedTransposeInvolution make_transpose_involution(Matrix<RingElement> m,
                                                     RingInvolution lambda);
// MathError when the twist is not invertible over the whole ring.
Matrix<RingElement> apply_tau(const TwistedTransposeInvolution& tau,
                              const Matrix<RingElement>& n);

// Finite-dimensional algebra over a field given by structure constants, with
// a (possibly coefficient-conjugating) involution acting as a matrix on
// coordinates. This is what specialization at a point produces.
class StructureConstantAlgebra {
 public:
  using MultTable = std::vector<std::vector<std::pair<std::size_t, Scalar>>>;

  StructureConstantAlgebra(Field f, std::size_t degree, MultTable mult,
                           std::vector<Scalar> unit,
                           Matrix<Scalar> involution_matrix,
                           bool conjugate_coordinates);

  // The full matrix algebra Mat_n with an involution given as a callback on
  // matrices; basis e_{ij} at index i*n + j.
  static StructureConstantAlgebra matrix_algebra(
      const Field& f, std::size_t n,
      const std::function<Matrix<Scalar>(const Matrix<Scalar>&)>& sigma,
      bool conjugate_coordinates);

  const Field& field() const { return f_; }
  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Scalar>& unit() const { return unit_; }
  const Matrix<Scalar>& involution_matrix() const { return sigma_; }
  bool second_kind() const { return conj_; }

  std::vector<Scalar> multiply(const std::vector<Scalar>& x,
                               const std::vector<Scalar>& y) const;
  std::vector<Scalar> involve(const std::vector<Scalar>& x) const;
  std::vector<Scalar> basis_vector(std::size_t i) const;

  // Associativity and unit laws on all basis triples/elements.
  std::vector<Check> validate_structure() const;

 private:
  Field f_;
  std::size_t dim_;
  std::size_t degree_;
  MultTable mult_;
  std::vector<Scalar> unit_;
  Matrix<Scalar> sigma_;
  bool conj_;
};

// Nondegenerate bilinear (or hermitian, when conjugate is set) form given by
// its gram matrix.
struct BilinearForm {
  Matrix<Scalar> gram;
  bool conjugate = false;

  static BilinearForm make(Matrix<Scalar> gram, bool conjugate = false);
};

// The adjoint involution M |-> G^{-1} conj(M)^T G of Mat_n attached to a
// form. First kind requires G^T = +-G; hermitian forms give the second kind.
StructureConstantAlgebra adjoint_involution(const BilinearForm& form);

// sigma(x) = x has solution space of dimension n(n+1)/2 or n(n-1)/2 for the
// first kind; MathError for the second kind (fixed points only form a
// subspace over the fixed subfield).
std::size_t fixed_subspace_dimension(const StructureConstantAlgebra& a);
InvolutionType classify_type(const StructureConstantAlgebra& a);
// Shared classifier: involution matrix of size d^2 acting on Mat_d
// coordinates.
InvolutionType classify_involution_matrix(const Matrix<Scalar>& sigma,
                                          std::size_t degree, bool second_kind);

// Axiom battery: additivity, sigma(ab) = sigma(b)sigma(a), sigma^2 = id, and
// the center condition sigma(r*1) = lambda(r)*1, on seeded random samples
// (plus exhaustively on basis elements for structure-constant algebras).
std::vector<Check> check_involution_axioms(const TwistedTransposeInvolution& a,
                                           std::size_t samples,
                                           std::uint64_t seed);
std::vector<Check> check_involution_axioms(const StructureConstantAlgebra& a,
                                           std::size_t samples,
                                           std::uint64_t seed);

// MathError when z is not fixed by the ring involution or det m(z) = 0.
StructureConstantAlgebra specialize_at_point(
    const TwistedTransposeInvolution& tau, const RationalPoint& z);

struct CoarseType {
  // Point label (or coordinate string) with value +1 or -1.
  std::vector<std::pair<std::string, int>> values;

  bool constant() const;
  int at(const std::string& label) const;
  std::string str() const;
};

CoarseType coarse_type(const TwistedTransposeInvolution& tau,
                       std::span<const RationalPoint> points);

// Tensor product at the twist level: twists Kronecker-multiply and the unit
// scalars multiply. Both factors must share the ring and ring involution.
TwistedTransposeInvolution tensor_involution(
    const TwistedTransposeInvolution& a, const TwistedTransposeInvolution& b);

// Type of the k-fold Kronecker power of a specialized involution, classified
// without building product structure-constant tables.
InvolutionType tensor_power_type(const StructureConstantAlgebra& a,
                                 std::size_t power);

}  // namespace invol
