#pragma once

#include <optional>

#include "stretchmat/material.hpp"
#include "stretchmat/moduli.hpp"

namespace stretchmat {

enum class LameMethod {
  analytic,  // closed-form table column, else analytic rest Hessian
  fd         // finite-difference rest Hessian of the energy
};

enum class RestCheck {
  enforce,  // refuse energies with a rest stress
  report    // extract from the Hessian regardless (pre-stressed formulas)
};

/// |grad psi(1,1,1)| must stay below this for an energy to count as rest-stable.
double rest_gradient_tolerance(const StretchEnergy& energy);

/// Infinity norm of the rest gradient, from the analytic or fd path.
double rest_gradient_norm(const StretchEnergy& energy, LameMethod method = LameMethod::analytic);

/// lambda_lame = d12 psi(1,1,1), mu_lame = (d11 - d12) psi(1,1,1) / 2.
/// Throws RestInstability under RestCheck::enforce when the rest gradient
/// exceeds rest_gradient_tolerance().
LameParams extract_lame(const StretchEnergy& energy, LameMethod method = LameMethod::analytic,
                        RestCheck check = RestCheck::enforce);

struct LameAgreement {
  LameParams analytic;
  LameParams fd;
  /// max |analytic - fd| / max(|lambda|, |mu|) of the analytic result.
  double relative_difference = 0.0;
};

LameAgreement compare_lame_methods(const StretchEnergy& energy,
                                   RestCheck check = RestCheck::enforce);

/// E = mu (3 lambda + 2 mu) / (lambda + mu), nu = lambda / (2 (lambda + mu)).
IsotropicModuli lame_to_moduli(const LameParams& lame);

/// lambda = E nu / ((1 + nu)(1 - 2 nu)), mu = E / (2 (1 + nu)).
LameParams moduli_to_lame(const IsotropicModuli& moduli);

enum class NormalizePolicy {
  /// Solve for two parameters; extra parameters (Seth-Hill alpha, STS mu4,
  /// Ogden exponents, Xu's g profile, ...) stay at the baseline, or at
  /// default_params() when no baseline is given.
  hold_at_default,
};

/// Parameters of `family` whose extracted Lamé parameters equal `target`.
/// Throws UnreachableTarget when the family cannot express the target (for
/// instance lambda_lame != 0 for the zero-lambda families).
MaterialParams normalize(Family family, const LameParams& target,
                         NormalizePolicy policy = NormalizePolicy::hold_at_default,
                         const std::optional<MaterialParams>& baseline = std::nullopt);

/// The Linear Corotational material sharing the energy's rest Hessian.
MaterialModel pk1_linearize(const StretchEnergy& energy, RestCheck check = RestCheck::enforce);

}  // namespace stretchmat
