#include "stretchmat/fem/element.hpp"

#include <algorithm>
#include <cmath>

namespace stretchmat::fem {

Mat3 element_pk1(const StretchEnergy& material, const DeformationGradient& F) {
  const RotationVariantSVD svd = decompose(F);
  return assemble_pk1(svd, PrincipalStress{material.gradient(svd.sigma)});
}

namespace {

Mat9 analytic_jacobian(const StretchEnergy& material, const DeformationGradient& F) {
  const RotationVariantSVD svd = decompose(F);
  const Evaluation ev = material.evaluate(svd.sigma);
  const Vec3 s = svd.sigma.as_vector();
  const Vec3& p = ev.gradient;
  const Mat3& H = ev.hessian;
  const double scale = std::max({1.0, std::abs(s[0]), std::abs(s[1]), std::abs(s[2])});

  // Twist/flip coefficients per off-diagonal pair.
  double block_a[3][3] = {};
  double block_b[3][3] = {};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double diff = s[i] - s[j];
      const double A = std::abs(diff) < 1e-6 * scale
                           ? 0.5 * (H(i, i) + H(j, j)) - H(i, j)
                           : (p[i] - p[j]) / diff;
      double sum = s[i] + s[j];
      if (std::abs(sum) < 1e-12 * scale) sum = std::copysign(1e-12 * scale, sum);
      const double B = (p[i] + p[j]) / sum;
      block_a[i][j] = 0.5 * (A + B);
      block_b[i][j] = 0.5 * (A - B);
    }
  }

  Mat9 J;
  for (int col = 0; col < 9; ++col) {
    const int r = col % 3;
    const int c = col / 3;
    const Mat3 dFh = svd.U.row(r).transpose() * svd.V.row(c);
    Mat3 dPh = Mat3::Zero();
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) dPh(i, i) += H(i, k) * dFh(k, k);
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        dPh(i, j) = block_a[i][j] * dFh(i, j) + block_b[i][j] * dFh(j, i);
        dPh(j, i) = block_b[i][j] * dFh(i, j) + block_a[i][j] * dFh(j, i);
      }
    }
    const Mat3 dP = svd.U * dPh * svd.V.transpose();
    J.col(col) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(dP.data());
  }
  return J;
}

Mat9 fd_jacobian(const StretchEnergy& material, const DeformationGradient& F) {
  const double h = 1e-6 * std::max(1.0, F.cwiseAbs().maxCoeff());
  Mat9 J;
  for (int col = 0; col < 9; ++col) {
    Mat3 Fp = F;
    Mat3 Fm = F;
    Fp.data()[col] += h;
    Fm.data()[col] -= h;
    const Mat3 dP = (element_pk1(material, Fp) - element_pk1(material, Fm)) / (2.0 * h);
    J.col(col) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(dP.data());
  }
  return J;
}

}  // namespace

Mat9 element_stress_jacobian(const StretchEnergy& material, const DeformationGradient& F,
                             DerivativeMode mode) {
  return mode == DerivativeMode::analytic ? analytic_jacobian(material, F)
                                          : fd_jacobian(material, F);
}

}  // namespace stretchmat::fem
