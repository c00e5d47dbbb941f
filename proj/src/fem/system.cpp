#include "stretchmat/fem/system.hpp"

#include <limits>
#include <set>

#include <Eigen/Eigenvalues>

namespace stretchmat::fem {

void BoundaryCondition::clamp_vertex(int vertex, const Vec3& position) {
  for (int a = 0; a < 3; ++a) clamp_dof(3 * vertex + a, position[a]);
}

void BoundaryCondition::clamp_dof(int dof, double value) {
  if (dof < 0) throw InvalidParameter("boundary condition: negative dof index");
  dofs_[dof] = value;
}

std::vector<int> BoundaryCondition::constrained_vertices() const {
  std::set<int> v;
  for (const auto& [dof, value] : dofs_) v.insert(dof / 3);
  return {v.begin(), v.end()};
}

std::vector<int> BoundaryCondition::free_dofs(int num_dofs) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(num_dofs));
  for (int d = 0; d < num_dofs; ++d) {
    if (!is_constrained(d)) out.push_back(d);
  }
  return out;
}

void BoundaryCondition::apply(Eigen::VectorXd& x) const {
  for (const auto& [dof, value] : dofs_) {
    if (dof >= x.size()) throw InvalidParameter("boundary condition: dof out of range");
    x[dof] = value;
  }
}

namespace {

using Mat12 = Eigen::Matrix<double, 12, 12>;
using Mat9x12 = Eigen::Matrix<double, 9, 12>;
using Vec12 = Eigen::Matrix<double, 12, 1>;

Mat3 deformation_gradient(const TetMesh& mesh, int e, const Eigen::VectorXd& x) {
  const Tet& t = mesh.tets()[e];
  Mat3 Ds;
  const Vec3 x0 = x.segment<3>(3 * t[0]);
  for (int k = 0; k < 3; ++k) Ds.col(k) = x.segment<3>(3 * t[k + 1]) - x0;
  return Ds * mesh.rest_shape_inverses()[e];
}

// d vec(F) / d (x_t0, x_t1, x_t2, x_t3), vec column-major.
Mat9x12 shape_gradient(const Mat3& dm_inv) {
  Mat9x12 B = Mat9x12::Zero();
  for (int b = 0; b < 3; ++b) {
    const double w0 = -(dm_inv(0, b) + dm_inv(1, b) + dm_inv(2, b));
    for (int a = 0; a < 3; ++a) {
      const int row = a + 3 * b;
      B(row, a) = w0;
      for (int v = 1; v < 4; ++v) B(row, 3 * v + a) = dm_inv(v - 1, b);
    }
  }
  return B;
}

template <class Fn>
auto guarded(int element, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ElementFailure&) {
    throw;
  } catch (const DomainViolation& e) {
    throw ElementFailure(element, e.what());
  }
}

void project_psd(Mat12& K) {
  Eigen::SelfAdjointEigenSolver<Mat12> eig(K);
  if (eig.eigenvalues().minCoeff() >= 0.0) return;
  const Vec12 clamped = eig.eigenvalues().cwiseMax(0.0);
  K = eig.eigenvectors() * clamped.asDiagonal() * eig.eigenvectors().transpose();
}

}  // namespace

double total_energy(const TetMesh& mesh, const StretchEnergy& material,
                    const Eigen::VectorXd& x) {
  double e = 0.0;
  for (int el = 0; el < mesh.num_tets(); ++el) {
    const Mat3 F = deformation_gradient(mesh, el, x);
    e += mesh.rest_volumes()[el] * guarded(el, [&] {
           return material.energy(decompose(F).sigma);
         });
  }
  return e;
}

double min_volume_ratio(const TetMesh& mesh, const Eigen::VectorXd& x) {
  double m = std::numeric_limits<double>::infinity();
  for (int el = 0; el < mesh.num_tets(); ++el) {
    m = std::min(m, deformation_gradient(mesh, el, x).determinant());
  }
  return m;
}

Eigen::VectorXd lumped_mass(const TetMesh& mesh) {
  Eigen::VectorXd m = Eigen::VectorXd::Zero(mesh.num_dofs());
  for (int el = 0; el < mesh.num_tets(); ++el) {
    const double share = mesh.density() * mesh.rest_volumes()[el] / 4.0;
    for (int v : mesh.tets()[el]) m.segment<3>(3 * v).array() += share;
  }
  return m;
}

SystemMatrices assemble(const TetMesh& mesh, const StretchEnergy& material,
                        const Eigen::VectorXd& x, const AssemblyOptions& options) {
  if (x.size() != mesh.num_dofs() || !x.allFinite()) {
    throw InvalidParameter("assemble: positions must be finite with 3 entries per vertex");
  }
  SystemMatrices sys;
  sys.force = Eigen::VectorXd::Zero(mesh.num_dofs());
  sys.lumped_mass = lumped_mass(mesh);

  std::vector<Eigen::Triplet<double>> triplets;
  if (options.stiffness) triplets.reserve(static_cast<std::size_t>(144 * mesh.num_tets()));

  for (int el = 0; el < mesh.num_tets(); ++el) {
    const Tet& t = mesh.tets()[el];
    const double vol = mesh.rest_volumes()[el];
    const Mat3 F = deformation_gradient(mesh, el, x);
    const Mat9x12 B = shape_gradient(mesh.rest_shape_inverses()[el]);

    const RotationVariantSVD svd = decompose(F);
    const Evaluation ev = guarded(el, [&] { return material.evaluate(svd.sigma); });
    sys.energy += vol * ev.energy;
    const Mat3 P = assemble_pk1(svd, PrincipalStress{ev.gradient});
    const Vec12 fe = -vol * B.transpose() * Eigen::Map<const Eigen::Matrix<double, 9, 1>>(P.data());
    for (int v = 0; v < 4; ++v) sys.force.segment<3>(3 * t[v]) += fe.segment<3>(3 * v);

    if (!options.stiffness) continue;
    const Mat9 dPdF =
        guarded(el, [&] { return element_stress_jacobian(material, F, options.derivatives); });
    Mat12 Ke = vol * B.transpose() * dPdF * B;
    Ke = 0.5 * (Ke + Ke.transpose());
    if (options.project_to_psd) project_psd(Ke);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            triplets.emplace_back(3 * t[a] + i, 3 * t[b] + j, Ke(3 * a + i, 3 * b + j));
  }
  if (options.stiffness) {
    sys.stiffness.resize(mesh.num_dofs(), mesh.num_dofs());
    sys.stiffness.setFromTriplets(triplets.begin(), triplets.end());
  }
  return sys;
}

Vec3 resultant_force(const Eigen::VectorXd& force, const std::vector<int>& vertices) {
  Vec3 r = Vec3::Zero();
  for (int v : vertices) r += force.segment<3>(3 * v);
  return r;
}

}  // namespace stretchmat::fem
