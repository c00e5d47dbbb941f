#pragma once

#include "stretchmat/stretch.hpp"

namespace stretchmat {

/// Nonlinearity filter: psi_alpha(l) = psi(l1^a, l2^a, l3^a) / a^2.
///
/// The rest Hessian (and hence the Lamé parameters) of a rest-stable base
/// is unchanged; alpha > 1 stiffens and alpha < 1 softens the large
/// deformation response. Only strictly positive stretches are accepted,
/// whatever the base allows.
class FilteredMaterial final : public StretchEnergy {
 public:
  /// Throws InvalidParameter for alpha <= 0 or a null base.
  FilteredMaterial(EnergyPtr base, double alpha);

  const EnergyPtr& base() const { return base_; }
  double alpha() const { return alpha_; }

  StretchDomain domain() const override { return StretchDomain::all_positive; }
  std::string name() const override;
  double stress_scale() const override { return base_->stress_scale(); }

 protected:
  double do_energy(const StretchTriple& s) const override;
  /// Gradient (1/a) l_i^(a-1) d_i psi, Hessian
  /// ((a-1)/a) diag(l_i^(a-2) d_i psi) + l_i^(a-1) l_j^(a-1) d_ij psi.
  Evaluation do_evaluate(const StretchTriple& s) const override;

 private:
  StretchTriple powered(const StretchTriple& s) const;

  EnergyPtr base_;
  double alpha_;
};

FilteredMaterial filter(EnergyPtr base, double alpha);

/// Outside [0.2, 4] the filter still works but is rarely what one wants.
bool alpha_in_recommended_range(double alpha);

}  // namespace stretchmat
