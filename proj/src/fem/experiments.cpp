#include "stretchmat/fem/experiments.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace stretchmat::fem {

void StretchTestConfig::validate() const {
  if (resolution < 1) throw InvalidParameter("stretch test: resolution must be >= 1");
  if (!(d_min > 0.0 && d_min <= 1.0 && d_max >= 1.0 && std::isfinite(d_max))) {
    throw InvalidParameter("stretch test: need 0 < d_min <= 1 <= d_max");
  }
  if (steps < 1 || (steps == 1 && d_min != d_max)) {
    throw InvalidParameter("stretch test: steps must be >= 2 unless d_min == d_max");
  }
  if (max_iterations < 1) throw InvalidParameter("stretch test: max_iterations must be >= 1");
}

namespace {

int find_vertex(const TetMesh& mesh, const Vec3& p) {
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    if ((mesh.rest_positions()[v] - p).norm() < 1e-9) return v;
  }
  throw MeshFormatError("stretch test: grid corner vertex not found");
}

}  // namespace

std::vector<CurvePoint> run_stretch_test(const StretchEnergy& material,
                                         const StretchTestConfig& config,
                                         const WarningSink& warn) {
  config.validate();
  const TetMesh mesh = generate_mesh(MeshKind::cube, config.resolution);

  std::vector<int> low_face;
  std::vector<int> high_face;
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    const double x = mesh.rest_positions()[v].x();
    if (std::abs(x) < 1e-9) low_face.push_back(v);
    if (std::abs(x - 1.0) < 1e-9) high_face.push_back(v);
  }

  SolverConfig solver;
  solver.tolerance = config.tolerance;
  solver.max_iterations = config.max_iterations;
  solver.derivatives = config.derivatives;

  std::vector<CurvePoint> curve;
  Eigen::VectorXd last = mesh.rest_state();
  double last_distance = 1.0;
  for (int s = 0; s < config.steps; ++s) {
    const double d = config.steps == 1
                         ? config.d_min
                         : config.d_min + (config.d_max - config.d_min) * s / (config.steps - 1);

    BoundaryCondition bc;
    for (int v : low_face) {
      const Vec3& p = mesh.rest_positions()[v];
      if (config.slide) {
        bc.clamp_dof(3 * v, p.x());
      } else {
        bc.clamp_vertex(v, p);
      }
    }
    for (int v : high_face) {
      const Vec3& p = mesh.rest_positions()[v];
      if (config.slide) {
        bc.clamp_dof(3 * v, d);
      } else {
        bc.clamp_vertex(v, Vec3(d, p.y(), p.z()));
      }
    }
    if (config.slide) {
      // Remove the remaining rigid motions: y/z translation and x rotation.
      const int origin = find_vertex(mesh, Vec3(0, 0, 0));
      const int corner = find_vertex(mesh, Vec3(0, 1, 0));
      bc.clamp_dof(3 * origin + 1, 0.0);
      bc.clamp_dof(3 * origin + 2, 0.0);
      bc.clamp_dof(3 * corner + 2, 0.0);
    }

    Eigen::VectorXd guess = last;
    for (int v = 0; v < mesh.num_vertices(); ++v) guess[3 * v] *= d / last_distance;
    solver.initial_positions = guess;

    try {
      const QuasiStaticResult r = solve_quasistatic(mesh, material, bc, solver);
      curve.push_back({d, -r.reaction(high_face).x(), r.iterations});
      last = r.positions;
      last_distance = d;
    } catch (const NoConvergence& e) {
      if (warn) {
        std::ostringstream msg;
        msg << "distance " << d << " skipped: " << e.what();
        warn(msg.str());
      }
    }
  }
  return curve;
}

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& curve) {
  const auto old_precision = out.precision(17);
  out << "distance,force\n";
  for (const CurvePoint& p : curve) out << p.distance << ',' << p.force + 0.0 << '\n';  // + 0.0 drops -0
  out.precision(old_precision);
}

ModesComparison compare_modes(const TetMesh& mesh, const StretchEnergy& a,
                              const StretchEnergy& b, int k, DerivativeMode mode) {
  const BoundaryCondition bc = clamp_min_face(mesh, 0);
  ModesComparison out;
  out.frequencies_a = modal_frequencies(mesh, a, bc, k, mode);
  out.frequencies_b = modal_frequencies(mesh, b, bc, k, mode);
  out.stiffness_difference =
      relative_frobenius_difference(rest_stiffness(mesh, a, mode), rest_stiffness(mesh, b, mode));
  return out;
}

}  // namespace stretchmat::fem
