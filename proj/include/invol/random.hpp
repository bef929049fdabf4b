#pragma once

#include "invol/matrix.hpp"
#include "invol/quotient_ring.hpp"
#include "invol/rng.hpp"

namespace invol {

Scalar random_scalar(const Field& f, Rng& rng);
Scalar random_nonzero_scalar(const Field& f, Rng& rng);
Matrix<Scalar> random_scalar_matrix(const Field& f, std::size_t rows,
                                    std::size_t cols, Rng& rng);
Matrix<Scalar> random_invertible_matrix(const Field& f, std::size_t n,
                                        Rng& rng);
// Sparse element of bounded degree; coefficients drawn like random_scalar.
RingElement random_ring_element(const RingPtr& ring, Rng& rng,
                                std::uint32_t max_degree = 2,
                                std::size_t terms = 3);
Matrix<RingElement> random_ring_matrix(const RingPtr& ring, std::size_t rows,
                                       std::size_t cols, Rng& rng);

}  // namespace invol
