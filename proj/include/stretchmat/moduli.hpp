#pragma once

namespace stretchmat {

/// Small-deformation Lamé parameters (Pa). lambda_lame may be negative.
struct LameParams {
  double lambda_lame = 0.0;
  double mu_lame = 0.0;

  friend bool operator==(const LameParams&, const LameParams&) = default;
};

/// Young's modulus E (Pa) and Poisson's ratio nu.
struct IsotropicModuli {
  double E = 0.0;
  double nu = 0.0;

  friend bool operator==(const IsotropicModuli&, const IsotropicModuli&) = default;
};

}  // namespace stretchmat
