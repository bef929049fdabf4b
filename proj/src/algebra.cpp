#include "invol/algebra.hpp"

#include "invol/random.hpp"

namespace invol {

const char* to_string(InvolutionType t) {
  switch (t) {
    case InvolutionType::orthogonal: return "orthogonal";
    case InvolutionType::symplectic: return "symplectic";
    case InvolutionType::unitary: return "unitary";
  }
  return "?";
}

// ---- twisted transpose involutions ----

TwistedTransposeInvolution make_transpose_involution(Matrix<RingElement> m,
                                                     RingInvolution lambda) {
  if (!m.square() || m.rows() == 0)
    throw MathError("twist must be a nonempty square matrix");
  const RingPtr ring = lambda.ring();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).ring() != ring && !m(i, j).ring()->same_structure(*ring))
        throw MathError("twist entries do not live in the involution's ring");

  RingElement d = ring_det(m);
  if (d.is_zero())
    throw MathError("twist matrix is singular (determinant is zero)");

  Matrix<RingElement> lt = apply_entrywise(lambda, transpose(m));

  // lambda(m^T) = f m forces f to be the leading-coefficient ratio at any
  // nonzero entry. The rings in scope have only constant units, so a
  // constant candidate is the only possibility; verify it entrywise.
  RingElement f = ring->zero();
  for (std::size_t i = 0; i < m.rows() && f.is_zero(); ++i)
    for (std::size_t j = 0; j < m.cols() && f.is_zero(); ++j) {
      if (m(i, j).is_zero() || lt(i, j).is_zero()) continue;
      Scalar ratio = lt(i, j).poly().leading_coefficient() *
                     m(i, j).poly().leading_coefficient().inverse();
      f = ring->from_scalar(ratio);
    }
  if (f.is_zero() || scale(f, m) != lt)
    throw MathError(
        "no unit scalar f with lambda(m^T) = f*m; the twist is not "
        "compatible with the ring involution (twist " +
        matrix_str(m) + ")");
  RingElement certificate = lambda.apply(f) * f;
  if (certificate != ring->one())
    throw MathError("scalar f = " + f.str() +
                    " is not unit-certified: lambda(f)*f = " +
                    certificate.str() + " instead of 1");

  TwistedTransposeInvolution tau(std::move(lambda));
  tau.ring_ = ring;
  tau.twist_ = std::move(m);
  tau.f_ = std::move(f);
  tau.det_ = std::move(d);
  if (tau.det_.is_constant()) tau.twist_inv_ = ring_inverse(tau.twist_);
  return tau;
}

Matrix<RingElement> apply_tau(const TwistedTransposeInvolution& tau,
                              const Matrix<RingElement>& n) {
  if (!tau.globally_invertible())
    throw MathError(
        "twist determinant " + tau.twist_det().str() +
        " is not a constant unit, so the involution acts only after "
        "specialization at points where the determinant does not vanish");
  if (n.rows() != tau.degree() || n.cols() != tau.degree())
    throw MathError("matrix has degree different from the algebra");
  return tau.twist_inv_ *
         apply_entrywise(tau.ring_involution(), transpose(n)) * tau.twist();
}

// ---- structure-constant algebras ----

StructureConstantAlgebra::StructureConstantAlgebra(
    Field f, std::size_t degree, MultTable mult, std::vector<Scalar> unit,
    Matrix<Scalar> involution_matrix, bool conjugate_coordinates)
    : f_(f),
      dim_(unit.size()),
      degree_(degree),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      sigma_(std::move(involution_matrix)),
      conj_(conjugate_coordinates) {
  if (degree_ * degree_ != dim_)
    throw MathError("algebra dimension " + std::to_string(dim_) +
                    " is not the square of the degree " +
                    std::to_string(degree_));
  if (mult_.size() != dim_ * dim_)
    throw MathError("multiplication table has wrong size");
  if (sigma_.rows() != dim_ || sigma_.cols() != dim_)
    throw MathError("involution matrix has wrong shape");
  if (conj_ && !f_.has_extension())
    throw MathError("coordinate conjugation needs a quadratic extension");
}

StructureConstantAlgebra StructureConstantAlgebra::matrix_algebra(
    const Field& f, std::size_t n,
    const std::function<Matrix<Scalar>(const Matrix<Scalar>&)>& sigma,
    bool conjugate_coordinates) {
  const std::size_t dim = n * n;
  MultTable mult(dim * dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (j == k)
            mult[(i * n + j) * dim + (k * n + l)] = {
                {i * n + l, Scalar::one(f)}};
  std::vector<Scalar> unit(dim, Scalar::zero(f));
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = Scalar::one(f);

  Matrix<Scalar> sig(dim, dim, Scalar::zero(f));
  for (std::size_t a = 0; a < dim; ++a) {
    Matrix<Scalar> basis(n, n, Scalar::zero(f));
    basis(a / n, a % n) = Scalar::one(f);
    Matrix<Scalar> image = sigma(basis);
    if (image.rows() != n || image.cols() != n)
      throw MathError("involution callback changed the matrix shape");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sig(r * n + c, a) = image(r, c);
  }
  return StructureConstantAlgebra(f, n, std::move(mult), std::move(unit),
                                  std::move(sig), conjugate_coordinates);
}

std::vector<Scalar> StructureConstantAlgebra::multiply(
    const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw MathError("coordinate vector has wrong dimension");
  std::vector<Scalar> out(dim_, Scalar::zero(f_));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, v] : mult_[i * dim_ + j]) out[k] += c * v;
    }
  }
  return out;
}

std::vector<Scalar> StructureConstantAlgebra::involve(
    const std::vector<Scalar>& x) const {
  if (x.size() != dim_)
    throw MathError("coordinate vector has wrong dimension");
  std::vector<Scalar> out(dim_, Scalar::zero(f_));
  for (std::size_t j = 0; j < dim_; ++j) {
    Scalar xj = conj_ ? x[j].conj() : x[j];
    if (xj.is_zero()) continue;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sigma_(i, j).is_zero()) continue;
      out[i] += sigma_(i, j) * xj;
    }
  }
  return out;
}

std::vector<Scalar> StructureConstantAlgebra::basis_vector(
    std::size_t i) const {
  std::vector<Scalar> v(dim_, Scalar::zero(f_));
  v.at(i) = Scalar::one(f_);
  return v;
}

namespace {
std::string coords_str(const std::vector<Scalar>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}
}  // namespace

std::vector<Check> StructureConstantAlgebra::validate_structure() const {
  std::vector<Check> out;
  bool unital = true;
  std::string witness;
  for (std::size_t a = 0; a < dim_ && unital; ++a) {
    auto e = basis_vector(a);
    if (multiply(e, unit_) != e || multiply(unit_, e) != e) {
      unital = false;
      witness = "basis element " + std::to_string(a);
    }
  }
  out.push_back({"unit acts as identity", unital, witness});

  bool assoc = true;
  witness.clear();
  for (std::size_t a = 0; a < dim_ && assoc; ++a)
    for (std::size_t b = 0; b < dim_ && assoc; ++b)
      for (std::size_t c = 0; c < dim_ && assoc; ++c) {
        auto ea = basis_vector(a), eb = basis_vector(b), ec = basis_vector(c);
        if (multiply(multiply(ea, eb), ec) != multiply(ea, multiply(eb, ec))) {
          assoc = false;
          witness = "basis triple (" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) + ")";
        }
      }
  out.push_back({"multiplication is associative on basis triples", assoc,
                 witness});
  return out;
}

// ---- forms and classification ----

BilinearForm BilinearForm::make(Matrix<Scalar> gram, bool conjugate) {
  if (!gram.square() || gram.rows() == 0)
    throw MathError("gram matrix must be square and nonempty");
  if (conjugate && !gram(0, 0).field().has_extension())
    throw MathError("hermitian form needs a quadratic field extension");
  if (det(gram).is_zero())
    throw MathError("gram matrix is degenerate (determinant zero)");
  return BilinearForm{std::move(gram), conjugate};
}

namespace {
Matrix<Scalar> conj_entries(const Matrix<Scalar>& m) {
  Matrix<Scalar> r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conj();
  return r;
}
}  // namespace

StructureConstantAlgebra adjoint_involution(const BilinearForm& form) {
  const Matrix<Scalar>& g = form.gram;
  const Field f = g(0, 0).field();
  Matrix<Scalar> gstar = form.conjugate ? conj_entries(transpose(g))
                                        : transpose(g);
  if (gstar != g && gstar != -g)
    throw MathError(
        form.conjugate
            ? "gram matrix must be hermitian or skew-hermitian"
            : "gram matrix must be symmetric or skew-symmetric for the "
              "adjoint to be an involution");
  Matrix<Scalar> ginv = inverse(g);
  auto sigma = [g, ginv, conj = form.conjugate](const Matrix<Scalar>& m) {
    Matrix<Scalar> mt = transpose(m);
    if (conj) mt = conj_entries(mt);
    return ginv * mt * g;
  };
  return StructureConstantAlgebra::matrix_algebra(f, g.rows(), sigma,
                                                  form.conjugate);
}

std::size_t fixed_subspace_dimension(const StructureConstantAlgebra& a) {
  if (a.second_kind())
    throw MathError(
        "involution conjugates the center; fixed elements only form a "
        "subspace over the fixed subfield (classify as unitary instead)");
  const std::size_t n = a.dim();
  Matrix<Scalar> diff =
      a.involution_matrix() -
      Matrix<Scalar>::identity(n, Scalar::zero(a.field()),
                               Scalar::one(a.field()));
  return n - matrix_rank(diff);
}

InvolutionType classify_involution_matrix(const Matrix<Scalar>& sigma,
                                          std::size_t degree,
                                          bool second_kind) {
  if (second_kind) return InvolutionType::unitary;
  const std::size_t dim = degree * degree;
  if (sigma.rows() != dim || sigma.cols() != dim)
    throw MathError("involution matrix shape does not match the degree");
  const Field f = sigma(0, 0).field();
  Matrix<Scalar> diff =
      sigma - Matrix<Scalar>::identity(dim, Scalar::zero(f), Scalar::one(f));
  const std::size_t fixed = dim - matrix_rank(diff);
  if (fixed == degree * (degree + 1) / 2) return InvolutionType::orthogonal;
  if (fixed == degree * (degree - 1) / 2) return InvolutionType::symplectic;
  throw MathError("fixed subspace dimension " + std::to_string(fixed) +
                  " matches neither the symmetric dimension " +
                  std::to_string(degree * (degree + 1) / 2) +
                  " nor the alternating dimension " +
                  std::to_string(degree * (degree - 1) / 2) +
                  "; the map is not a standard involution of Mat_" +
                  std::to_string(degree));
}

InvolutionType classify_type(const StructureConstantAlgebra& a) {
  if (a.second_kind()) return InvolutionType::unitary;
  return classify_involution_matrix(a.involution_matrix(), a.degree(), false);
}

// ---- axiom batteries ----

namespace {
void run_axiom_battery(
    std::vector<Check>& out, std::size_t samples,
    const std::function<bool(std::size_t, std::string&)>& additive,
    const std::function<bool(std::size_t, std::string&)>& antimult,
    const std::function<bool(std::size_t, std::string&)>& order2,
    const std::function<bool(std::size_t, std::string&)>& center) {
  struct Item {
    const char* name;
    const std::function<bool(std::size_t, std::string&)>& fn;
  };
  const Item items[] = {
      {"additive on random samples", additive},
      {"anti-multiplicative on random samples", antimult},
      {"squares to the identity on random samples", order2},
      {"restricts to the ring involution on the center", center},
  };
  for (const auto& item : items) {
    bool pass = true;
    std::string witness;
    for (std::size_t s = 0; s < samples && pass; ++s)
      pass = item.fn(s, witness);
    out.push_back({item.name, pass,
                   pass ? std::to_string(samples) + " samples" : witness});
  }
}
}  // namespace

std::vector<Check> check_involution_axioms(const TwistedTransposeInvolution& a,
                                           std::size_t samples,
                                           std::uint64_t seed) {
  if (!a.globally_invertible())
    throw MathError(
        "ring-level axiom checks need a twist that is invertible over the "
        "whole ring; check the specializations instead");
  Rng rng(seed);
  const RingPtr& ring = a.ring();
  const std::size_t n = a.degree();
  auto rand_mat = [&] { return random_ring_matrix(ring, n, n, rng); };

  std::vector<Check> out;
  run_axiom_battery(
      out, samples,
      [&](std::size_t, std::string& w) {
        auto x = rand_mat(), y = rand_mat();
        bool ok = apply_tau(a, x + y) == apply_tau(a, x) + apply_tau(a, y);
        if (!ok) w = "x=" + matrix_str(x) + " y=" + matrix_str(y);
        return ok;
      },
      [&](std::size_t, std::string& w) {
        auto x = rand_mat(), y = rand_mat();
        bool ok = apply_tau(a, x * y) == apply_tau(a, y) * apply_tau(a, x);
        if (!ok) w = "x=" + matrix_str(x) + " y=" + matrix_str(y);
        return ok;
      },
      [&](std::size_t, std::string& w) {
        auto x = rand_mat();
        bool ok = apply_tau(a, apply_tau(a, x)) == x;
        if (!ok) w = "x=" + matrix_str(x);
        return ok;
      },
      [&](std::size_t, std::string& w) {
        RingElement r = random_ring_element(ring, rng);
        Matrix<RingElement> ri = scale(r, ring_identity(ring, n));
        Matrix<RingElement> expect =
            scale(a.ring_involution().apply(r), ring_identity(ring, n));
        bool ok = apply_tau(a, ri) == expect;
        if (!ok) w = "r=" + r.str();
        return ok;
      });
  return out;
}

std::vector<Check> check_involution_axioms(const StructureConstantAlgebra& a,
                                           std::size_t samples,
                                           std::uint64_t seed) {
  Rng rng(seed);
  const Field f = a.field();
  auto rand_vec = [&] {
    std::vector<Scalar> v(a.dim(), Scalar::zero(f));
    for (auto& c : v) c = random_scalar(f, rng);
    return v;
  };
  auto add = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<Scalar> r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
  };

  std::vector<Check> out;

  // Exhaustive on basis pairs first: these two are the structural core.
  bool basis_anti = true;
  std::string witness;
  for (std::size_t i = 0; i < a.dim() && basis_anti; ++i)
    for (std::size_t j = 0; j < a.dim() && basis_anti; ++j) {
      auto ei = a.basis_vector(i), ej = a.basis_vector(j);
      if (a.involve(a.multiply(ei, ej)) !=
          a.multiply(a.involve(ej), a.involve(ei))) {
        basis_anti = false;
        witness = "basis pair (" + std::to_string(i) + "," +
                  std::to_string(j) + ")";
      }
    }
  out.push_back(
      {"anti-multiplicative on all basis pairs", basis_anti, witness});

  bool basis_order2 = true;
  witness.clear();
  for (std::size_t i = 0; i < a.dim() && basis_order2; ++i) {
    auto e = a.basis_vector(i);
    if (a.involve(a.involve(e)) != e) {
      basis_order2 = false;
      witness = "basis element " + std::to_string(i);
    }
  }
  out.push_back({"squares to the identity on the whole basis", basis_order2,
                 witness});

  run_axiom_battery(
      out, samples,
      [&](std::size_t, std::string& w) {
        auto x = rand_vec(), y = rand_vec();
        bool ok = a.involve(add(x, y)) == add(a.involve(x), a.involve(y));
        if (!ok) w = "x=" + coords_str(x) + " y=" + coords_str(y);
        return ok;
      },
      [&](std::size_t, std::string& w) {
        auto x = rand_vec(), y = rand_vec();
        bool ok = a.involve(a.multiply(x, y)) ==
                  a.multiply(a.involve(y), a.involve(x));
        if (!ok) w = "x=" + coords_str(x) + " y=" + coords_str(y);
        return ok;
      },
      [&](std::size_t, std::string& w) {
        auto x = rand_vec();
        bool ok = a.involve(a.involve(x)) == x;
        if (!ok) w = "x=" + coords_str(x);
        return ok;
      },
      [&](std::size_t, std::string& w) {
        Scalar c = random_scalar(f, rng);
        std::vector<Scalar> scaled_unit = a.unit();
        for (auto& u : scaled_unit) u *= c;
        std::vector<Scalar> expect = a.unit();
        Scalar cc = a.second_kind() ? c.conj() : c;
        for (auto& u : expect) u *= cc;
        bool ok = a.involve(scaled_unit) == expect;
        if (!ok) w = "c=" + c.str();
        return ok;
      });
  return out;
}

// ---- specialization, coarse type, tensor ----

StructureConstantAlgebra specialize_at_point(
    const TwistedTransposeInvolution& tau, const RationalPoint& z) {
  if (!tau.ring_involution().fixes_point(z))
    throw MathError("point " + z.str() +
                    " is not fixed by the ring involution; the involution "
                    "does not specialize there");
  Matrix<Scalar> mz = eval_at_point(tau.twist(), z);
  if (det(mz).is_zero())
    throw MathError("twist specializes to a singular matrix at " + z.str());
  Matrix<Scalar> mzinv = inverse(mz);
  const bool conj = tau.second_kind();
  auto sigma = [mz, mzinv, conj](const Matrix<Scalar>& x) {
    Matrix<Scalar> xt = transpose(x);
    if (conj) xt = conj_entries(xt);
    return mzinv * xt * mz;
  };
  return StructureConstantAlgebra::matrix_algebra(tau.ring()->field(),
                                                  tau.degree(), sigma, conj);
}

bool CoarseType::constant() const {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i].second != values[0].second) return false;
  return true;
}

int CoarseType::at(const std::string& label) const {
  for (const auto& [l, v] : values)
    if (l == label) return v;
  throw MathError("no coarse value recorded at '" + label + "'");
}

std::string CoarseType::str() const {
  std::string out;
  for (const auto& [l, v] : values) {
    if (!out.empty()) out += " ";
    out += l + "=" + (v > 0 ? "+1" : "-1");
  }
  return out;
}

CoarseType coarse_type(const TwistedTransposeInvolution& tau,
                       std::span<const RationalPoint> points) {
  if (tau.second_kind())
    throw MathError(
        "coarse type is defined for first-kind involutions; this one "
        "conjugates the coefficient field");
  CoarseType ct;
  for (const auto& z : points) {
    StructureConstantAlgebra a = specialize_at_point(tau, z);
    InvolutionType t = classify_type(a);
    std::string label = z.label().empty() ? z.str() : z.label();
    ct.values.emplace_back(label,
                           t == InvolutionType::orthogonal ? +1 : -1);
  }
  return ct;
}

TwistedTransposeInvolution tensor_involution(
    const TwistedTransposeInvolution& a, const TwistedTransposeInvolution& b) {
  if (a.ring() != b.ring() && !a.ring()->same_structure(*b.ring()))
    throw MathError("tensor factors live over different rings");
  const auto& la = a.ring_involution();
  const auto& lb = b.ring_involution();
  if (la.conjugates_coefficients() != lb.conjugates_coefficients() ||
      la.images() != lb.images())
    throw MathError("tensor factors carry different ring involutions");

  TwistedTransposeInvolution t = make_transpose_involution(
      kronecker_product(a.twist(), b.twist()), a.ring_involution());
  if (t.unit_scalar() != a.unit_scalar() * b.unit_scalar())
    throw MathError("tensor unit scalar is not multiplicative: got " +
                    t.unit_scalar().str());
  return t;
}

InvolutionType tensor_power_type(const StructureConstantAlgebra& a,
                                 std::size_t power) {
  if (power == 0) throw MathError("tensor power must be at least 1");
  Matrix<Scalar> sig = a.involution_matrix();
  std::size_t deg = a.degree();
  for (std::size_t k = 1; k < power; ++k) {
    sig = kronecker_product(sig, a.involution_matrix());
    deg *= a.degree();
  }
  return classify_involution_matrix(sig, deg, a.second_kind());
}

}  // namespace invol
