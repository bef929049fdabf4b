#include "invol/tuples.hpp"

#include <functional>

#include "invol/elimination.hpp"
#include "invol/linalg.hpp"

namespace invol {

namespace {

void require_2x2(const Matrix<Scalar>& m, const char* what) {
  if (m.rows() != 2 || m.cols() != 2)
    throw MathError(std::string(what) + " must be a 2x2 matrix");
}

std::vector<Scalar> vec4(const Matrix<Scalar>& m) {
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

Matrix<Scalar> unvec4(const Field& f, const std::vector<Scalar>& v) {
  Matrix<Scalar> m(2, 2, Scalar::zero(f));
  m(0, 0) = v[0];
  m(0, 1) = v[1];
  m(1, 0) = v[2];
  m(1, 1) = v[3];
  return m;
}

Matrix<Scalar> stack_rows(const Field& f,
                          const std::vector<std::vector<Scalar>>& rows) {
  Matrix<Scalar> m(rows.size(), 4, Scalar::zero(f));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = rows[r][c];
  return m;
}

std::vector<Matrix<Scalar>> span_basis(const Field& f,
                                       const std::vector<Matrix<Scalar>>& ws) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(ws.size());
  for (const auto& w : ws) rows.push_back(vec4(w));
  EchelonResult ech = reduced_row_echelon(stack_rows(f, rows));
  std::vector<Matrix<Scalar>> out;
  out.reserve(ech.rank);
  for (std::size_t r = 0; r < ech.rank; ++r) {
    std::vector<Scalar> v{ech.rref(r, 0), ech.rref(r, 1), ech.rref(r, 2),
                          ech.rref(r, 3)};
    out.push_back(unvec4(f, v));
  }
  return out;
}

// The 4x4 coordinate matrix of a linear map Mat_2 -> Mat_2.
Matrix<Scalar> map_matrix(
    const Field& f,
    const std::function<Matrix<Scalar>(const Matrix<Scalar>&)>& fn) {
  Matrix<Scalar> out(4, 4, Scalar::zero(f));
  for (std::size_t k = 0; k < 4; ++k) {
    Matrix<Scalar> e(2, 2, Scalar::zero(f));
    e(k / 2, k % 2) = Scalar::one(f);
    std::vector<Scalar> img = vec4(fn(e));
    for (std::size_t r = 0; r < 4; ++r) out(r, k) = img[r];
  }
  return out;
}

}  // namespace

bool tuples_equal(const TupleConfig& x, const TupleConfig& y) {
  if (x.a != y.a || x.b != y.b) return false;
  if (x.m.has_value() != y.m.has_value()) return false;
  return !x.m || *x.m == *y.m;
}

bool check_generates_mat2(std::span<const Matrix<Scalar>> tuple) {
  if (tuple.empty()) throw MathError("generation test needs a nonempty tuple");
  for (const auto& g : tuple) require_2x2(g, "tuple entry");
  const Field& f = tuple[0](0, 0).field();
  Matrix<Scalar> id =
      Matrix<Scalar>::identity(2, Scalar::zero(f), Scalar::one(f));

  std::vector<std::vector<Scalar>> cumulative{vec4(id)};
  std::vector<Matrix<Scalar>> frontier{id};
  for (int len = 1; len <= 5; ++len) {
    if (frontier.empty()) break;  // every product vanished; the span is final
    std::vector<Matrix<Scalar>> next;
    next.reserve(frontier.size() * tuple.size());
    for (const auto& w : frontier)
      for (const auto& g : tuple) next.push_back(w * g);
    frontier = span_basis(f, next);
    for (const auto& w : frontier) cumulative.push_back(vec4(w));
    if (matrix_rank(stack_rows(f, cumulative)) == 4) return true;
  }
  return false;
}

TupleConfig pgl2_act(const TupleConfig& t, const Matrix<Scalar>& h) {
  require_2x2(h, "group element");
  Matrix<Scalar> hinv = inverse(h);
  Matrix<Scalar> ht = transpose(h);
  Matrix<Scalar> hinv_t = transpose(hinv);
  TupleConfig out;
  out.a.reserve(t.a.size());
  out.b.reserve(t.b.size());
  for (const auto& ai : t.a) out.a.push_back(hinv * ai * h);
  for (const auto& bi : t.b) out.b.push_back(ht * bi * hinv_t);
  if (t.m) out.m = hinv * *t.m * h;
  return out;
}

TupleConfig tilde_sigma(const TupleConfig& t) {
  TupleConfig out;
  out.a = t.b;
  out.b = t.a;
  if (t.m) out.m = transpose(*t.m);
  return out;
}

Matrix<Scalar> standard_symplectic_matrix(const Field& f) {
  Matrix<Scalar> w(2, 2, Scalar::zero(f));
  w(0, 1) = -Scalar::one(f);
  w(1, 0) = Scalar::one(f);
  return w;
}

namespace {

struct FiberOutcome {
  std::vector<Check> checks;
  InvolutionType type = InvolutionType::orthogonal;
};

FiberOutcome run_fiber(FiberKind kind, std::span<const Matrix<Scalar>> gens,
                       const Matrix<Scalar>& m) {
  FiberOutcome out;
  if (gens.empty()) throw MathError("fiber check needs a nonempty tuple");
  for (const auto& g : gens) require_2x2(g, "generator");
  require_2x2(m, "fiber coordinate");
  const Field& f = gens[0](0, 0).field();
  Matrix<Scalar> w = standard_symplectic_matrix(f);

  TupleConfig t;
  t.a.assign(gens.begin(), gens.end());
  if (kind == FiberKind::o) {
    t.b = t.a;
  } else {
    for (const auto& ai : t.a) t.b.push_back(-(w * ai * w));
  }
  t.m = m;

  bool agen = check_generates_mat2(t.a);
  bool bgen = check_generates_mat2(t.b);
  out.checks.push_back({"both tuples generate the matrix algebra",
                        agen && bgen,
                        std::string("a: ") + (agen ? "yes" : "no") +
                            ", b: " + (bgen ? "yes" : "no")});

  std::function<Matrix<Scalar>(const Matrix<Scalar>&)> fiber_map;
  if (kind == FiberKind::o) {
    TupleConfig ts = tilde_sigma(t);
    bool base_fixed = ts.a == t.a && ts.b == t.b;
    bool m_transposed = ts.m && *ts.m == transpose(m);
    out.checks.push_back({"swap-transpose fixes the base tuple",
                          base_fixed, ""});
    out.checks.push_back(
        {"fiber coordinate transposes", m_transposed, ""});
    fiber_map = [](const Matrix<Scalar>& x) { return transpose(x); };
  } else {
    TupleConfig recovered = pgl2_act(tilde_sigma(t), w);
    bool base_fixed = recovered.a == t.a && recovered.b == t.b;
    Matrix<Scalar> expect = -(w * transpose(m) * w);
    bool m_matches = recovered.m && *recovered.m == expect;
    out.checks.push_back(
        {"orbit recovery via h = w restores the base tuple", base_fixed, ""});
    out.checks.push_back(
        {"recovered fiber map is m -> -w m^T w", m_matches, ""});
    fiber_map = [w](const Matrix<Scalar>& x) {
      return -(w * transpose(x) * w);
    };
  }

  Matrix<Scalar> sigma = map_matrix(f, fiber_map);
  out.type = classify_involution_matrix(sigma, 2, false);
  out.checks.push_back(
      {"fiber involution classified", true, to_string(out.type)});
  return out;
}

}  // namespace

InvolutionType fiber_involution_check(FiberKind kind,
                                      std::span<const Matrix<Scalar>> gens,
                                      const Matrix<Scalar>& m) {
  FiberOutcome out = run_fiber(kind, gens, m);
  for (const auto& c : out.checks)
    if (!c.pass) throw MathError("fiber check failed: " + c.name);
  return out.type;
}

Report fiber_report(FiberKind kind, std::span<const Matrix<Scalar>> gens,
                    const Matrix<Scalar>& m, std::uint64_t seed) {
  Report rep;
  rep.seed = seed;
  if (!gens.empty()) rep.field = gens[0](0, 0).field().name();
  FiberOutcome out = run_fiber(kind, gens, m);
  rep.checks = std::move(out.checks);
  InvolutionType expected =
      kind == FiberKind::o ? InvolutionType::orthogonal
                           : InvolutionType::symplectic;
  rep.add("classification matches the fixed-point kind", out.type == expected,
          to_string(out.type));
  return rep;
}

Report ordinary_extension_report(const TwistedTransposeInvolution& tau,
                                 std::span<const RationalPoint> points,
                                 std::uint64_t seed) {
  Report rep;
  rep.field = tau.ring()->field().name();
  rep.seed = seed;

  const RingElement& f = tau.unit_scalar();
  RingElement lf_f = tau.ring_involution().apply(f) * f;
  rep.add("lambda(f) * f = 1", lf_f == tau.ring()->one(),
          "f = " + f.str() + ", lambda(f)*f = " + lf_f.str());

  for (const RationalPoint& z : points) {
    bool fixed = is_fixed_point(z, tau.ring_involution());
    rep.add("point " + z.str() + " is fixed", fixed, "");
    if (!fixed) continue;

    Matrix<Scalar> mz = eval_at_point(tau.twist(), z);
    Scalar fz = f.evaluate(z);
    bool twisted_sym = transpose(mz) == scale(fz, mz);
    rep.add("m(z)^T = f(z) m(z) at " + z.label(), twisted_sym,
            "f(" + z.label() + ") = " + fz.str());

    StructureConstantAlgebra alg = specialize_at_point(tau, z);
    InvolutionType ty = classify_type(alg);
    Scalar expected = ty == InvolutionType::orthogonal
                          ? Scalar::one(tau.ring()->field())
                          : -Scalar::one(tau.ring()->field());
    rep.add("f(z) equals the coarse value at " + z.label(), fz == expected,
            to_string(ty));
  }
  return rep;
}

}  // namespace invol
