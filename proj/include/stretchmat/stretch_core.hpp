#pragma once

#include "stretchmat/stretch.hpp"

namespace stretchmat {

using DeformationGradient = Mat3;

/// F = U * diag(sigma) * V^T with U, V proper rotations.
///
/// sigma is sorted descending and only sigma.l3() may be negative; a
/// reflection in F shows up as a negative last stretch.
struct RotationVariantSVD {
  Mat3 U = Mat3::Identity();
  Mat3 V = Mat3::Identity();
  StretchTriple sigma = StretchTriple::rest();

  Mat3 reconstruct() const;
};

/// Principal PK1 stresses p_i = d(psi)/d(lambda_i).
struct PrincipalStress {
  Vec3 values = Vec3::Zero();
};

/// Rotation-variant SVD. Deterministic: equal singular values are ordered by
/// descending lexicographic order of the matching V columns.
RotationVariantSVD decompose(const DeformationGradient& F);

/// P = U * diag(p) * V^T.
Mat3 assemble_pk1(const RotationVariantSVD& svd, const PrincipalStress& p);

}  // namespace stretchmat
