#include <gtest/gtest.h>

#include <sstream>

#include "stretchmat/fem/experiments.hpp"
#include "stretchmat/filter.hpp"
#include "stretchmat/lame.hpp"
#include "test_util.hpp"

using namespace stretchmat;
using namespace stretchmat::fem;
using namespace stretchmat::test_util;

namespace {

std::shared_ptr<const MaterialModel> snh_1000() {
  return model(Family::stable_neo_hookean,
               normalize(Family::stable_neo_hookean, moduli_to_lame({1000.0, 0.3})));
}

// Clamp x = 0 at rest and x = 1 at (d, y, z).
BoundaryCondition pull(const TetMesh& mesh, double d, std::vector<int>* high = nullptr) {
  BoundaryCondition bc;
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    const Vec3& p = mesh.rest_positions()[v];
    if (std::abs(p.x()) < 1e-9) bc.clamp_vertex(v, p);
    if (std::abs(p.x() - 1.0) < 1e-9) {
      bc.clamp_vertex(v, Vec3(d, p.y(), p.z()));
      if (high) high->push_back(v);
    }
  }
  return bc;
}

}  // namespace

TEST(Solver, RestIsEquilibrium) {
  const TetMesh mesh = generate_mesh(MeshKind::cube, 2);
  std::vector<int> high;
  const QuasiStaticResult r = solve_quasistatic(mesh, *snh_1000(), pull(mesh, 1.0, &high));
  EXPECT_EQ(r.iterations, 0);
  EXPECT_LE((r.positions - mesh.rest_state()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LE(r.reaction(high).norm(), 1e-9);
}

TEST(Solver, ConvergesUnderStretch) {
  const TetMesh mesh = generate_mesh(MeshKind::cube, 2);
  const auto m = snh_1000();
  const QuasiStaticResult r = solve_quasistatic(mesh, *m, pull(mesh, 1.3));
  EXPECT_GT(r.iterations, 0);
  EXPECT_LE(r.residual_history.back(), default_tolerance(mesh, *m));
  EXPECT_GT(min_volume_ratio(mesh, r.positions), 0.0);
  const BoundaryCondition bc = pull(mesh, 1.3);
  for (int dof : bc.free_dofs(mesh.num_dofs())) {
    ASSERT_LE(std::abs(r.internal_force[dof]), default_tolerance(mesh, *m));
  }
}

TEST(Solver, ReactionOrdersWithAlpha) {
  const TetMesh mesh = generate_mesh(MeshKind::cube, 2);
  const auto base = snh_1000();
  std::vector<double> force;
  for (double alpha : {0.5, 1.0, 2.0}) {
    std::vector<int> high;
    const BoundaryCondition bc = pull(mesh, 1.5, &high);
    const QuasiStaticResult r = solve_quasistatic(mesh, FilteredMaterial(base, alpha), bc);
    force.push_back(-r.reaction(high).x());
  }
  EXPECT_GT(force[0], 0.0);
  EXPECT_LT(force[0], force[1]);
  EXPECT_LT(force[1], force[2]);
}

TEST(Solver, FdDerivativesGiveSameAnswer) {
  const TetMesh mesh = generate_mesh(MeshKind::cube, 1);
  const auto m = snh_1000();
  const QuasiStaticResult a = solve_quasistatic(mesh, *m, pull(mesh, 1.2));
  const QuasiStaticResult b =
      solve_quasistatic(mesh, *m, pull(mesh, 1.2), {.derivatives = DerivativeMode::fd});
  EXPECT_LE((a.positions - b.positions).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Solver, Failures) {
  const TetMesh mesh = generate_mesh(MeshKind::cube, 2);
  const auto m = snh_1000();
  try {
    solve_quasistatic(mesh, *m, pull(mesh, 1.8), {.max_iterations = 1});
    ADD_FAILURE() << "expected NoConvergence";
  } catch (const NoConvergence& e) {
    EXPECT_FALSE(e.residual_history().empty());
  }
  EXPECT_THROW(solve_quasistatic(mesh, *m, BoundaryCondition{}), InvalidParameter);
}

TEST(StretchTest, CurveShape) {
  StretchTestConfig cfg;
  cfg.resolution = 2;
  cfg.d_min = 0.98;
  cfg.d_max = 1.5;
  cfg.steps = 27;
  const std::vector<CurvePoint> curve = run_stretch_test(*snh_1000(), cfg);
  ASSERT_EQ(curve.size(), 27u);
  EXPECT_NEAR(curve[1].distance, 1.0, 1e-15);
  EXPECT_LE(std::abs(curve[1].force), 1e-6);
  EXPECT_LT(curve[0].force, 0.0);
  for (std::size_t i = 2; i < curve.size(); ++i) EXPECT_GT(curve[i].force, curve[i - 1].force);

  std::ostringstream out;
  write_curve_csv(out, curve);
  EXPECT_EQ(out.str().substr(0, 15), "distance,force\n");
}

TEST(StretchTest, SlideModeIsSofter) {
  StretchTestConfig cfg;
  cfg.resolution = 2;
  cfg.d_min = 1.0;
  cfg.d_max = 1.2;
  cfg.steps = 2;
  const double clamped = run_stretch_test(*snh_1000(), cfg).at(1).force;
  cfg.slide = true;
  const double sliding = run_stretch_test(*snh_1000(), cfg).at(1).force;
  EXPECT_GT(sliding, 0.0);
  EXPECT_LT(sliding, clamped);
}

TEST(StretchTest, SkipsFailedDistances) {
  StretchTestConfig cfg;
  cfg.resolution = 2;
  cfg.d_min = 1.0;
  cfg.d_max = 1.6;
  cfg.steps = 3;
  cfg.max_iterations = 1;
  int warnings = 0;
  const auto curve =
      run_stretch_test(*snh_1000(), cfg, [&](const std::string&) { ++warnings; });
  EXPECT_EQ(static_cast<int>(curve.size()) + warnings, 3);
  EXPECT_GE(warnings, 1);
}

TEST(StretchTest, ConfigValidation) {
  StretchTestConfig cfg;
  cfg.d_min = 0.0;
  EXPECT_THROW(cfg.validate(), InvalidParameter);
  cfg = {};
  cfg.d_max = 0.5;
  EXPECT_THROW(cfg.validate(), InvalidParameter);
  cfg = {};
  cfg.steps = 0;
  EXPECT_THROW(cfg.validate(), InvalidParameter);
}
