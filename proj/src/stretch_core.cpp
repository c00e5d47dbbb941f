#include "stretchmat/stretch_core.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace stretchmat {

Mat3 RotationVariantSVD::reconstruct() const {
  return U * sigma.as_vector().asDiagonal() * V.transpose();
}

namespace {

bool lex_greater(const Vec3& a, const Vec3& b) {
  for (int k = 0; k < 3; ++k) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

void swap_columns(RotationVariantSVD& r, int i, int j) {
  r.U.col(i).swap(r.U.col(j));
  r.V.col(i).swap(r.V.col(j));
  std::swap(r.sigma[i], r.sigma[j]);
}

}  // namespace

RotationVariantSVD decompose(const DeformationGradient& F) {
  Eigen::JacobiSVD<Mat3> svd(F, Eigen::ComputeFullU | Eigen::ComputeFullV);
  RotationVariantSVD r;
  r.U = svd.matrixU();
  r.V = svd.matrixV();
  r.sigma = StretchTriple(svd.singularValues());

  if (r.U.determinant() < 0.0) {
    r.U.col(2) *= -1.0;
    r.sigma[2] *= -1.0;
  }
  if (r.V.determinant() < 0.0) {
    r.V.col(2) *= -1.0;
    r.sigma[2] *= -1.0;
  }

  // Ties: bubble sort on (sigma desc, V column lex desc). Swapping a column
  // pair in U and V flips both determinants, repaired below.
  const double scale = std::max(1.0, std::abs(r.sigma[0]));
  const double tie_tol = 1e-12 * scale;
  bool swapped_odd = false;
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < 2; ++i) {
      const int j = i + 1;
      if (std::abs(r.sigma[i] - r.sigma[j]) <= tie_tol &&
          lex_greater(r.V.col(j), r.V.col(i))) {
        swap_columns(r, i, j);
        swapped_odd = !swapped_odd;
      }
    }
  }
  if (swapped_odd) {
    // The last swapped pair sits inside a tie block; negating a matched
    // (u, v) pair leaves U diag(sigma) V^T untouched.
    int k = 2;
    while (k > 0 && std::abs(r.sigma[k] - r.sigma[k - 1]) > tie_tol) --k;
    r.U.col(k) *= -1.0;
    r.V.col(k) *= -1.0;
  }
  // Values inside a tie block may now ascend by round-off; keep them
  // descending (moves each by at most tie_tol).
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < 2; ++i) {
      if (r.sigma[i] < r.sigma[i + 1]) {
        const double hi = r.sigma[i + 1];
        r.sigma[i + 1] = r.sigma[i];
        r.sigma[i] = hi;
      }
    }
  }
  return r;
}

Mat3 assemble_pk1(const RotationVariantSVD& svd, const PrincipalStress& p) {
  return svd.U * p.values.asDiagonal() * svd.V.transpose();
}

}  // namespace stretchmat
