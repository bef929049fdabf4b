#include "invol/random.hpp"

#include "invol/elimination.hpp"

namespace invol {

namespace {
Rational small_rational(Rng& rng) {
  std::int64_t num = rng.int_in(-9, 9);
  std::int64_t den = rng.int_in(1, 4);
  return Rational(num, den);
}
}  // namespace

Scalar random_scalar(const Field& f, Rng& rng) {
  if (f.positive_characteristic()) {
    Scalar s = Scalar::of_int(
        f, static_cast<std::int64_t>(rng.below(f.modulus())));
    if (f.has_extension())
      s = s + Scalar::of_int(f, static_cast<std::int64_t>(
                                    rng.below(f.modulus()))) *
                  Scalar::ext_generator(f);
    return s;
  }
  Scalar s = Scalar::of_rational(f, small_rational(rng));
  if (f.has_extension())
    s = s + Scalar::of_rational(f, small_rational(rng)) *
                Scalar::ext_generator(f);
  return s;
}

Scalar random_nonzero_scalar(const Field& f, Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

Matrix<Scalar> random_scalar_matrix(const Field& f, std::size_t rows,
                                    std::size_t cols, Rng& rng) {
  Matrix<Scalar> m(rows, cols, Scalar::zero(f));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

Matrix<Scalar> random_invertible_matrix(const Field& f, std::size_t n,
                                        Rng& rng) {
  for (;;) {
    Matrix<Scalar> m = random_scalar_matrix(f, n, n, rng);
    if (!det(m).is_zero()) return m;
  }
}

RingElement random_ring_element(const RingPtr& ring, Rng& rng,
                                std::uint32_t max_degree, std::size_t terms) {
  Polynomial p(ring->field(), ring->nvars());
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(ring->nvars(), 0);
    auto degree = static_cast<std::uint32_t>(rng.below(max_degree + 1));
    for (std::uint32_t d = 0; d < degree; ++d)
      m[rng.below(ring->nvars())] += 1;
    p.add_term(m, random_scalar(ring->field(), rng));
  }
  return ring->element(p);
}

Matrix<RingElement> random_ring_matrix(const RingPtr& ring, std::size_t rows,
                                       std::size_t cols, Rng& rng) {
  Matrix<RingElement> m(rows, cols, ring->zero());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = random_ring_element(ring, rng);
  return m;
}

}  // namespace invol
