#pragma once

#include <vector>

#include "stretchmat/material.hpp"
#include "stretchmat/moduli.hpp"
#include "stretchmat/stretch.hpp"

namespace stretchmat {

/// sum_k c_k psi_k over shared stretches.
class LinearCombination final : public StretchEnergy {
 public:
  struct Term {
    double coefficient;
    EnergyPtr energy;
  };

  explicit LinearCombination(std::vector<Term> terms, std::string name = "combination");

  const std::vector<Term>& terms() const { return terms_; }

  StretchDomain domain() const override;
  std::string name() const override { return name_; }
  double stress_scale() const override;

 protected:
  double do_energy(const StretchTriple& s) const override;
  Evaluation do_evaluate(const StretchTriple& s) const override;

 private:
  std::vector<Term> terms_;
  std::string name_;
};

enum class PartKind { lambda_part, mu_part };

/// Unit-coefficient energy: a lambda-part has Lamé parameters (1, 0), a
/// mu-part (0, 1).
struct EnergyPart {
  PartKind kind;
  EnergyPtr energy;
};

struct PartSplit {
  EnergyPart lambda_part;
  EnergyPart mu_part;
  /// Coefficients that rebuild the source energy:
  /// psi = native.lambda_lame * lambda_part + native.mu_lame * mu_part.
  LameParams native;
};

/// Splits a separable family (Seth-Hill family, Neo-Hookean variants, STS,
/// original and new Valanis-Landel) into unit lambda- and mu-parts. The raw
/// lambda and mu terms of the formula are rebalanced using their measured
/// rest Hessians, so a term like Stable Neo-Hookean's -mu (J - 1), which
/// shifts lambda_lame, ends up where it belongs.
/// Throws NonSeparableFamily for every other family.
PartSplit decompose_energy(Family family, const MaterialParams& params);

enum class VolumetricKind {
  j_minus_1_sq,  // (J - 1)^2 / 2
  log_j_sq       // log^2(J) / 2
};

EnergyPart volumetric_part(VolumetricKind kind);

/// Mu-part of an energy with lambda_lame = 0 (ARAP, Ogden, ...): the energy
/// divided by its mu_lame. Throws InvalidParameter otherwise.
EnergyPart mu_part_from(EnergyPtr base);

/// psi = (lambda_L / a_l^2) psi_lambda(l^a_l) + (mu_L / a_m^2) psi_mu(l^a_m).
class ComposedMaterial final : public StretchEnergy {
 public:
  ComposedMaterial(EnergyPart mu_part, EnergyPart lambda_part, LameParams lame,
                   double alpha_mu = 1.0, double alpha_lambda = 1.0);

  const EnergyPart& mu_part() const { return mu_part_; }
  const EnergyPart& lambda_part() const { return lambda_part_; }
  const LameParams& lame() const { return lame_; }
  double alpha_mu() const { return alpha_mu_; }
  double alpha_lambda() const { return alpha_lambda_; }

  StretchDomain domain() const override { return total_->domain(); }
  std::string name() const override { return "composed"; }
  double stress_scale() const override;

 protected:
  double do_energy(const StretchTriple& s) const override { return total_->energy(s); }
  Evaluation do_evaluate(const StretchTriple& s) const override { return total_->evaluate(s); }

 private:
  EnergyPart mu_part_;
  EnergyPart lambda_part_;
  LameParams lame_;
  double alpha_mu_;
  double alpha_lambda_;
  EnergyPtr total_;
};

/// Throws InvalidParameter for a target with mu_lame <= 0, non-positive
/// alphas, or parts of the wrong kind.
ComposedMaterial combine(const EnergyPart& mu_part, const EnergyPart& lambda_part,
                         const LameParams& target, double alpha_mu = 1.0,
                         double alpha_lambda = 1.0);

/// Adds a Neo-Hookean volumetric term to an energy without volume
/// preservation so it reaches `target`, including a nonzero lambda_lame.
ComposedMaterial augment_volumetric(EnergyPtr base_mu_only, const LameParams& target,
                                    VolumetricKind kind, double alpha_mu = 1.0,
                                    double alpha_lambda = 1.0);

}  // namespace stretchmat
