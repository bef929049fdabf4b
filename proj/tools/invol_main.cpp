#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "invol/elimination.hpp"
#include "invol/io.hpp"
#include "invol/sphere.hpp"
#include "invol/tuples.hpp"

namespace {

using namespace invol;

struct CommonOpts {
  std::string field_spec = "gf:5";
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--field", o.field_spec,
                  "coefficient field: q, gf:p, or gf:p^2")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "seed for randomized checks")
      ->capture_default_str();
  cmd->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out_path, "write the report here (default stdout)");
}

int emit(const Report& rep, const CommonOpts& o) {
  ReportFormat fmt =
      o.format == "json" ? ReportFormat::json : ReportFormat::text;
  if (o.out_path.empty()) {
    write_report(rep, fmt, std::cout);
  } else {
    std::ofstream out(o.out_path);
    if (!out) throw IoError("cannot write " + o.out_path);
    write_report(rep, fmt, out);
  }
  return rep.overall() ? 0 : 1;
}

// The sphere ring with its reflection, shared by the twist subcommands.
struct RingContext {
  RingPtr ring;
  RingInvolution lambda;
  std::vector<RationalPoint> points;
};

RingContext make_ring_context(const Field& f, std::size_t dim,
                              const std::vector<std::string>& point_specs) {
  RingPtr ring = unit_sphere_ring(f, dim);
  RingInvolution lambda = axis_reflection(ring);
  RingContext ctx{std::move(ring), std::move(lambda), {}};
  if (point_specs.empty()) {
    for (int sgn : {1, -1}) {
      std::vector<Scalar> coords(dim + 1, Scalar::zero(f));
      coords[0] = Scalar::of_int(f, sgn);
      ctx.points.push_back(RationalPoint::make(
          ctx.ring, std::move(coords), sgn == 1 ? "p" : "q"));
    }
  } else {
    for (const auto& text : point_specs)
      ctx.points.push_back(
          RationalPoint::make(ctx.ring, parse_point_coords(f, text), text));
  }
  return ctx;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact involution calculator for matrix algebras over rings"};
  app.require_subcommand(1);

  CommonOpts sphere_opts;
  std::size_t sphere_samples = 200;
  CLI::App* sphere_cmd = app.add_subcommand(
      "verify-sphere",
      "verify the rank-one idempotent construction end to end");
  add_common(sphere_cmd, sphere_opts);
  sphere_cmd->add_option("--samples", sphere_samples,
                         "random samples per property")
      ->capture_default_str();

  CommonOpts classify_opts;
  std::string gram_path;
  bool hermitian = false;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "classify the adjoint involution of a Gram matrix");
  add_common(classify_cmd, classify_opts);
  classify_cmd->add_option("--gram", gram_path, "JSON matrix file")
      ->required();
  classify_cmd->add_flag("--hermitian", hermitian,
                         "conjugate the second slot of the form");

  CommonOpts coarse_opts;
  std::string coarse_twist_path;
  std::size_t coarse_dim = 2;
  std::vector<std::string> coarse_points;
  CLI::App* coarse_cmd = app.add_subcommand(
      "coarse-type", "evaluate the twisted transpose at the fixed points");
  add_common(coarse_cmd, coarse_opts);
  coarse_cmd->add_option("--twist", coarse_twist_path,
                         "JSON matrix file over the sphere ring (default I2)");
  coarse_cmd->add_option("--dim", coarse_dim, "sphere dimension n of R_n")
      ->capture_default_str();
  coarse_cmd->add_option("--point", coarse_points,
                         "fixed point as comma-separated coordinates");

  CommonOpts fiber_opts;
  std::string fiber_kind = "o";
  std::string fiber_tuple_path;
  CLI::App* fiber_cmd = app.add_subcommand(
      "fiber", "classify the swap-transpose fiber involution");
  add_common(fiber_cmd, fiber_opts);
  fiber_cmd->add_option("--kind", fiber_kind, "o or s")
      ->check(CLI::IsMember({"o", "s"}))
      ->capture_default_str();
  fiber_cmd->add_option("--tuple", fiber_tuple_path,
                        "JSON tuple file (default e12, e21, e11)");

  CommonOpts gen_opts;
  std::string gen_tuple_path;
  CLI::App* gen_cmd = app.add_subcommand(
      "generate-test", "word-span generation test for a matrix tuple");
  add_common(gen_cmd, gen_opts);
  gen_cmd->add_option("--tuple", gen_tuple_path, "JSON tuple file")
      ->required();

  CommonOpts ord_opts;
  std::string ord_twist_path;
  std::size_t ord_dim = 2;
  std::vector<std::string> ord_points;
  CLI::App* ord_cmd = app.add_subcommand(
      "ordinary-check",
      "unit-scalar and fixed-point consistency for a twisted transpose");
  add_common(ord_cmd, ord_opts);
  ord_cmd->add_option("--twist", ord_twist_path,
                      "JSON matrix file over the sphere ring (default I2)");
  ord_cmd->add_option("--dim", ord_dim, "sphere dimension n of R_n")
      ->capture_default_str();
  ord_cmd->add_option("--point", ord_points,
                      "fixed point as comma-separated coordinates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sphere_cmd->parsed()) {
      Field f = Field::parse(sphere_opts.field_spec);
      SphereSetup setup = build_sphere_setup(f);
      return emit(sphere_report(setup, sphere_opts.seed, sphere_samples),
                  sphere_opts);
    }

    if (classify_cmd->parsed()) {
      Field f = Field::parse(classify_opts.field_spec);
      Matrix<Scalar> gram =
          scalar_matrix_from_json(f, load_json_file(gram_path));
      StructureConstantAlgebra alg =
          adjoint_involution(BilinearForm::make(std::move(gram), hermitian));
      InvolutionType ty = classify_type(alg);
      Report rep;
      rep.field = f.name();
      rep.seed = classify_opts.seed;
      rep.add("classification", true, to_string(ty));
      return emit(rep, classify_opts);
    }

    if (coarse_cmd->parsed() || ord_cmd->parsed()) {
      bool coarse = coarse_cmd->parsed();
      const CommonOpts& o = coarse ? coarse_opts : ord_opts;
      const std::string& twist_path =
          coarse ? coarse_twist_path : ord_twist_path;
      std::size_t dim = coarse ? coarse_dim : ord_dim;
      const auto& point_specs = coarse ? coarse_points : ord_points;

      Field f = Field::parse(o.field_spec);
      RingContext ctx = make_ring_context(f, dim, point_specs);
      Matrix<RingElement> twist =
          twist_path.empty()
              ? ring_identity(ctx.ring, 2)
              : ring_matrix_from_json(ctx.ring, load_json_file(twist_path));
      TwistedTransposeInvolution tau =
          make_transpose_involution(std::move(twist), ctx.lambda);

      if (coarse) {
        CoarseType ct = coarse_type(tau, ctx.points);
        Report rep;
        rep.field = f.name();
        rep.seed = o.seed;
        rep.add("coarse type", true, ct.str());
        return emit(rep, o);
      }
      return emit(ordinary_extension_report(tau, ctx.points, o.seed), o);
    }

    if (fiber_cmd->parsed()) {
      Field f = Field::parse(fiber_opts.field_spec);
      TupleConfig t;
      if (fiber_tuple_path.empty()) {
        Scalar z = Scalar::zero(f), one = Scalar::one(f);
        Matrix<Scalar> e12(2, 2, z), e21(2, 2, z), e11(2, 2, z);
        e12(0, 1) = one;
        e21(1, 0) = one;
        e11(0, 0) = one;
        t.a = {e12, e21, e11};
      } else {
        t = tuple_from_json(f, load_json_file(fiber_tuple_path));
      }
      Matrix<Scalar> m(2, 2, Scalar::zero(f));
      if (t.m) {
        m = *t.m;
      } else {
        m(0, 0) = Scalar::of_int(f, 1);
        m(0, 1) = Scalar::of_int(f, 2);
        m(1, 0) = Scalar::of_int(f, 3);
        m(1, 1) = Scalar::of_int(f, 4);
      }
      FiberKind kind = fiber_kind == "o" ? FiberKind::o : FiberKind::s;
      return emit(fiber_report(kind, t.a, m, fiber_opts.seed), fiber_opts);
    }

    if (gen_cmd->parsed()) {
      Field f = Field::parse(gen_opts.field_spec);
      TupleConfig t = tuple_from_json(f, load_json_file(gen_tuple_path));
      bool gen = check_generates_mat2(t.a);
      Report rep;
      rep.field = f.name();
      rep.seed = gen_opts.seed;
      rep.add("tuple generates the 2x2 matrix algebra", gen,
              "words of length 0 through 5");
      return emit(rep, gen_opts);
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
