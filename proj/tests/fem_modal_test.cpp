#include <gtest/gtest.h>

#include <cmath>

#include "stretchmat/fem/experiments.hpp"
#include "stretchmat/lame.hpp"
#include "test_util.hpp"

using namespace stretchmat;
using namespace stretchmat::fem;
using namespace stretchmat::test_util;

namespace {

const LameParams kTarget = moduli_to_lame({1e5, 0.2});

std::shared_ptr<const MaterialModel> normalized(Family f) { return model(f, normalize(f, kTarget)); }

}  // namespace

TEST(Modal, AscendingAndNonNegative) {
  const TetMesh mesh = generate_mesh(MeshKind::beam, 1, 0.25);
  const auto f = modal_frequencies(mesh, *normalized(Family::linear_corotational),
                                   clamp_min_face(mesh), 6);
  ASSERT_EQ(f.size(), 6u);
  EXPECT_GT(f[0], 0.0);
  for (int i = 1; i < 6; ++i) EXPECT_GE(f[i], f[i - 1]);
}

TEST(Modal, DensityScaling) {
  const TetMesh mesh = generate_mesh(MeshKind::beam, 1, 0.25);
  const auto m = normalized(Family::stable_neo_hookean);
  const auto a = modal_frequencies(mesh, *m, clamp_min_face(mesh), 4);
  const auto b = modal_frequencies(mesh.with_density(2 * mesh.density()), *m, clamp_min_face(mesh), 4);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(b[i] / a[i], 1.0 / std::sqrt(2.0), 1e-9);
}

TEST(Modal, NormalizedPairAgrees) {
  const TetMesh mesh = generate_mesh(MeshKind::beam, 1, 0.25);
  const ModesComparison c = compare_modes(mesh, *normalized(Family::stable_neo_hookean),
                                          *normalized(Family::linear_corotational), 6);
  EXPECT_LE(c.stiffness_difference, 1e-8);
  for (int i = 0; i < 6; ++i) {
    EXPECT_LE(std::abs(c.frequencies_a[i] - c.frequencies_b[i]) / c.frequencies_b[i], 1e-6);
  }
}

TEST(Modal, NaiveParametersDiffer) {
  // SNH fed the raw (mu, lambda) of the target: its lambda_lame is off by mu.
  const TetMesh mesh = generate_mesh(MeshKind::beam, 1, 0.25);
  MaterialParams naive;
  naive.mu = kTarget.mu_lame;
  naive.lambda = kTarget.lambda_lame;
  const ModesComparison c = compare_modes(mesh, *model(Family::stable_neo_hookean, naive),
                                          *normalized(Family::linear_corotational), 6);
  EXPECT_GE(c.stiffness_difference, 0.01);
  EXPECT_GE(std::abs(c.frequencies_a[0] - c.frequencies_b[0]) / c.frequencies_b[0], 0.01);
}

TEST(Modal, Arguments) {
  const TetMesh mesh = generate_mesh(MeshKind::cube, 1);
  const auto m = normalized(Family::hencky);
  EXPECT_THROW(modal_frequencies(mesh, *m, BoundaryCondition{}, 3), InvalidParameter);
  EXPECT_THROW(modal_frequencies(mesh, *m, clamp_min_face(mesh), 0), InvalidParameter);
  EXPECT_THROW(modal_frequencies(mesh, *m, clamp_min_face(mesh), 13), InvalidParameter);
  EXPECT_NO_THROW(modal_frequencies(mesh, *m, clamp_min_face(mesh), 12));
}
