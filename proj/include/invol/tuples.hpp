#pragma once

#include <optional>
#include <span>

#include "invol/algebra.hpp"

namespace invol {

// A point of the tuple space: two r-tuples of 2x2 matrices and (on the total
// space) an extra matrix coordinate. Base-space tuples leave m empty.
struct TupleConfig {
  std::vector<Matrix<Scalar>> a, b;
  std::optional<Matrix<Scalar>> m;

  std::size_t r() const { return a.size(); }
};

bool tuples_equal(const TupleConfig& x, const TupleConfig& y);

// True iff words in the tuple of length 0 (the identity) through 5 span the
// full 2x2 matrix space. Frontiers are reduced to span bases level by level,
// which leaves each level's span intact since right multiplication by a
// generator is linear.
bool check_generates_mat2(std::span<const Matrix<Scalar>> tuple);

// Right action (a_i; b_i; m) . h = (h^-1 a_i h; h^T b_i h^-T; h^-1 m h).
// MathError when h is singular.
TupleConfig pgl2_act(const TupleConfig& t, const Matrix<Scalar>& h);

// The swap-transpose: (a; b; m) -> (b; a; m^T). An involution, and it
// commutes with forgetting m.
TupleConfig tilde_sigma(const TupleConfig& t);

// w = [[0, -1], [1, 0]], with w^2 = -I.
Matrix<Scalar> standard_symplectic_matrix(const Field& f);

enum class FiberKind { o, s };

// Classifies the involution induced on the fiber over the distinguished
// fixed points. For kind o the tuple is (a; a; m) and the swap-transpose
// fixes the base while sending m to m^T. For kind s the tuple is
// (a; -waw; m); after the swap-transpose, acting by h = w restores the base
// coordinates and sends m to -w m^T w. The recovered map on the fiber is
// classified honestly from its 4x4 coordinate matrix.
// MathError when the generators fail the generation test or the orbit
// recovery does not come out exactly.
InvolutionType fiber_involution_check(FiberKind kind,
                                      std::span<const Matrix<Scalar>> gens,
                                      const Matrix<Scalar>& m);

// The same computation broken into named checks for reporting.
Report fiber_report(FiberKind kind, std::span<const Matrix<Scalar>> gens,
                    const Matrix<Scalar>& m, std::uint64_t seed);

// Verifies the unit-scalar chain for a twisted transpose: lambda(f) * f = 1,
// and at each supplied fixed point m(z)^T = f(z) m(z) with f(z) equal to the
// coarse type value there.
Report ordinary_extension_report(const TwistedTransposeInvolution& tau,
                                 std::span<const RationalPoint> points,
                                 std::uint64_t seed);

}  // namespace invol
