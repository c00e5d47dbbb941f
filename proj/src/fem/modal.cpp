#include "stretchmat/fem/modal.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace stretchmat::fem {

Eigen::SparseMatrix<double> rest_stiffness(const TetMesh& mesh, const StretchEnergy& material,
                                           DerivativeMode mode) {
  AssemblyOptions opts;
  opts.derivatives = mode;
  return assemble(mesh, material, mesh.rest_state(), opts).stiffness;
}

double relative_frobenius_difference(const Eigen::SparseMatrix<double>& A,
                                     const Eigen::SparseMatrix<double>& B) {
  const Eigen::SparseMatrix<double> D = A - B;
  return D.norm() / B.norm();
}

std::vector<double> modal_frequencies(const TetMesh& mesh, const StretchEnergy& material,
                                      const BoundaryCondition& bc, int k, DerivativeMode mode) {
  if (bc.empty()) throw InvalidParameter("modal_frequencies: constrained set is empty");
  const std::vector<int> free = bc.free_dofs(mesh.num_dofs());
  const int nf = static_cast<int>(free.size());
  if (k < 1 || k > nf) throw InvalidParameter("modal_frequencies: k must lie in [1, free dofs]");

  const Eigen::MatrixXd K = Eigen::MatrixXd(rest_stiffness(mesh, material, mode));
  const Eigen::VectorXd m = lumped_mass(mesh);

  // Lumped M is diagonal: solve M^-1/2 K M^-1/2 y = omega^2 y.
  Eigen::MatrixXd A(nf, nf);
  Eigen::VectorXd inv_sqrt_m(nf);
  for (int i = 0; i < nf; ++i) inv_sqrt_m[i] = 1.0 / std::sqrt(m[free[i]]);
  for (int j = 0; j < nf; ++j)
    for (int i = 0; i < nf; ++i) A(i, j) = K(free[i], free[j]) * inv_sqrt_m[i] * inv_sqrt_m[j];
  A = 0.5 * (A + A.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(A, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw EigenSolverFailure("modal_frequencies: eigen solver did not converge");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const double w2 = std::max(eig.eigenvalues()[i], 0.0);
    out.push_back(std::sqrt(w2) / (2.0 * std::numbers::pi));
  }
  return out;
}

BoundaryCondition clamp_min_face(const TetMesh& mesh, int axis) {
  const double lo = mesh.bbox_min()[axis];
  const double tol = 1e-9 * (mesh.bbox_max()[axis] - lo);
  BoundaryCondition bc;
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    const Vec3& p = mesh.rest_positions()[v];
    if (std::abs(p[axis] - lo) <= tol) bc.clamp_vertex(v, p);
  }
  return bc;
}

}  // namespace stretchmat::fem
