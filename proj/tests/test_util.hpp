#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "stretchmat/material.hpp"

namespace stretchmat::test_util {

inline double rel_err(double got, double want, double floor = 1.0) {
  return std::abs(got - want) / std::max(floor, std::abs(want));
}

template <class A, class B>
double rel_err(const Eigen::MatrixBase<A>& got, const Eigen::MatrixBase<B>& want,
               double floor = 1.0) {
  return (got - want).cwiseAbs().maxCoeff() / std::max(floor, want.cwiseAbs().maxCoeff());
}

inline StretchTriple random_triple(std::mt19937_64& rng, double lo = 0.5, double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  const double a = u(rng);
  const double b = u(rng);
  return {a, b, u(rng)};
}

inline Eigen::Matrix3d random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Quaterniond q(n(rng), n(rng), n(rng), n(rng));
  return q.normalized().toRotationMatrix();
}

inline std::shared_ptr<const MaterialModel> model(Family family) {
  return std::make_shared<MaterialModel>(make_material(family, default_params(family)));
}

inline std::shared_ptr<const MaterialModel> model(Family family, MaterialParams p) {
  return std::make_shared<MaterialModel>(make_material(family, std::move(p)));
}

inline MaterialParams mu_lambda(double mu, double lambda) {
  MaterialParams p;
  p.mu = mu;
  p.lambda = lambda;
  return p;
}

inline std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const FamilyDescriptor& d : list_catalog()) out.push_back(d.family);
  return out;
}

}  // namespace stretchmat::test_util
