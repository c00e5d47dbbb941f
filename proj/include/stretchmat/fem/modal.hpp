#pragma once

#include <vector>

#include "stretchmat/fem/system.hpp"

namespace stretchmat::fem {

/// Stiffness matrix at the rest shape, all 3n coordinates.
Eigen::SparseMatrix<double> rest_stiffness(const TetMesh& mesh, const StretchEnergy& material,
                                           DerivativeMode mode = DerivativeMode::analytic);

/// ||A - B||_F / ||B||_F.
double relative_frobenius_difference(const Eigen::SparseMatrix<double>& A,
                                     const Eigen::SparseMatrix<double>& B);

/// The k lowest natural frequencies (Hz) of K phi = omega^2 M phi at rest,
/// restricted to the free coordinates, with lumped M. Ascending.
std::vector<double> modal_frequencies(const TetMesh& mesh, const StretchEnergy& material,
                                      const BoundaryCondition& bc, int k,
                                      DerivativeMode mode = DerivativeMode::analytic);

/// Clamps every vertex whose coordinate `axis` equals the mesh minimum
/// (within 1e-9 of the extent) at its rest position.
BoundaryCondition clamp_min_face(const TetMesh& mesh, int axis = 0);

}  // namespace stretchmat::fem
