#pragma once

#include <Eigen/Core>

#include "stretchmat/stretch.hpp"
#include "stretchmat/stretch_core.hpp"

namespace stretchmat::fem {

/// dP/dF with both matrices flattened column-major: entry (a, b) is
/// d vec(P)_a / d vec(F)_b.
using Mat9 = Eigen::Matrix<double, 9, 9>;

enum class DerivativeMode { analytic, fd };

/// P(F) = U diag(dpsi/dlambda) V^T.
Mat3 element_pk1(const StretchEnergy& material, const DeformationGradient& F);

/// Analytic: the stretch Hessian acts on the diagonal of U^T dF V, and each
/// off-diagonal pair (i, j) gets the 2x2 block built from
/// (p_i - p_j)/(l_i - l_j) and (p_i + p_j)/(l_i + l_j). Coincident stretches
/// use the limit d_ii psi - d_ij psi, which at F = I yields
/// mu (dF + dF^T) + lambda tr(dF) I exactly.
/// fd: central differences of element_pk1 with step 1e-6 per entry.
Mat9 element_stress_jacobian(const StretchEnergy& material, const DeformationGradient& F,
                             DerivativeMode mode = DerivativeMode::analytic);

}  // namespace stretchmat::fem
