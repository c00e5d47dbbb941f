#pragma once

#include <functional>

#include "stretchmat/moduli.hpp"
#include "stretchmat/stretch.hpp"

namespace stretchmat {

/// Central finite differences over stretch space. The step along axis i is
/// step * max(1, |lambda_i|).
struct FDConfig {
  double step = 1e-5;

  /// Throws InvalidParameter unless step lies in (1e-9, 1e-2).
  void validate() const;
};

using ScalarField = std::function<double(const StretchTriple&)>;

Vec3 fd_gradient(const ScalarField& f, const StretchTriple& s, const FDConfig& cfg = {});

/// Diagonal entries use the 3-point stencil, off-diagonals the 4-point
/// cross stencil. The result is symmetric by construction.
Mat3 fd_hessian(const ScalarField& f, const StretchTriple& s, const FDConfig& cfg = {});

/// Step used when the rest Hessian is the only thing wanted. Second
/// differences balance truncation against round-off near eps^(1/4).
inline constexpr double kRestHessianStep = 1e-4;

/// Lamé parameters read off a rest Hessian:
/// lambda = d12 psi, mu = (d11 psi - d12 psi) / 2, averaged over the
/// equivalent index pairs.
LameParams lame_from_rest_hessian(const Mat3& H);

}  // namespace stretchmat
