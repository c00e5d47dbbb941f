#include "stretchmat/compose.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>

#include "stretchmat/error.hpp"
#include "stretchmat/fd.hpp"
#include "stretchmat/filter.hpp"
#include "stretchmat/lame.hpp"

namespace stretchmat {

LinearCombination::LinearCombination(std::vector<Term> terms, std::string name)
    : terms_(std::move(terms)), name_(std::move(name)) {
  for (const Term& t : terms_) {
    if (!t.energy) throw InvalidParameter("combination: null energy term");
  }
}

StretchDomain LinearCombination::domain() const {
  for (const Term& t : terms_) {
    if (t.energy->domain() == StretchDomain::all_positive) return StretchDomain::all_positive;
  }
  return StretchDomain::unrestricted;
}

double LinearCombination::stress_scale() const {
  double s = 0.0;
  for (const Term& t : terms_) s = std::max(s, std::abs(t.coefficient) * t.energy->stress_scale());
  return std::max(s, 1e-300);
}

double LinearCombination::do_energy(const StretchTriple& s) const {
  double e = 0.0;
  for (const Term& t : terms_) {
    if (t.coefficient != 0.0) e += t.coefficient * t.energy->energy(s);
  }
  return e;
}

Evaluation LinearCombination::do_evaluate(const StretchTriple& s) const {
  Evaluation out;
  for (const Term& t : terms_) {
    if (t.coefficient == 0.0) continue;
    const Evaluation e = t.energy->evaluate(s);
    out.energy += t.coefficient * e.energy;
    out.gradient += t.coefficient * e.gradient;
    out.hessian += t.coefficient * e.hessian;
  }
  return out;
}

namespace {

LameParams measured_lame(const StretchEnergy& e) {
  return lame_from_rest_hessian(e.hessian(StretchTriple::rest()));
}

struct RawTerms {
  EnergyPtr lambda_term;
  EnergyPtr mu_term;
  double lambda_coefficient;
  double mu_coefficient;
};

RawTerms raw_terms(Family family, const MaterialParams& params) {
  // Validate the source material first.
  (void)make_material(family, params);

  MaterialParams lam = params;
  MaterialParams mu = params;
  RawTerms raw;
  if (family == Family::valanis_landel_new) {
    lam.f = params.f.scaled(0.0);
    mu.h = params.h.scaled(0.0);
    raw.lambda_coefficient = 1.0;
    raw.mu_coefficient = 1.0;
  } else {
    lam.mu = 0.0;
    lam.lambda = 1.0;
    lam.mu4 = 0.0;
    mu.mu = 1.0;
    mu.lambda = 0.0;
    mu.mu4 = params.mu4 / params.mu;  // STS quartic term rides with mu
    raw.lambda_coefficient = params.lambda;
    raw.mu_coefficient = params.mu;
  }
  raw.lambda_term = std::make_shared<MaterialModel>(MaterialModel::unchecked(family, lam));
  raw.mu_term = std::make_shared<MaterialModel>(MaterialModel::unchecked(family, mu));
  return raw;
}

std::string part_name(Family family, PartKind kind) {
  return family_id(family) + (kind == PartKind::lambda_part ? ".lambda_part" : ".mu_part");
}

}  // namespace

PartSplit decompose_energy(Family family, const MaterialParams& params) {
  if (!describe(family).separable) {
    throw NonSeparableFamily(
        family_id(family) +
        " does not split into lambda- and mu-parts; families with lambda_lame = 0 can be "
        "used as a mu-part through augment_volumetric");
  }
  const RawTerms raw = raw_terms(family, params);
  const LameParams a = measured_lame(*raw.lambda_term);
  const LameParams b = measured_lame(*raw.mu_term);

  // Columns are the raw terms' (lambda_lame, mu_lame).
  Eigen::Matrix2d L;
  L << a.lambda_lame, b.lambda_lame, a.mu_lame, b.mu_lame;
  const double det = L.determinant();
  if (std::abs(det) <= 1e-12 * L.cwiseAbs().maxCoeff() * L.cwiseAbs().maxCoeff()) {
    throw NonSeparableFamily(family_id(family) + ": raw terms have dependent rest Hessians");
  }
  const Eigen::Matrix2d inv = L.inverse();
  const Eigen::Vector2d native = L * Eigen::Vector2d(raw.lambda_coefficient, raw.mu_coefficient);

  const auto part = [&](int col, PartKind kind) {
    std::vector<LinearCombination::Term> terms{{inv(0, col), raw.lambda_term},
                                               {inv(1, col), raw.mu_term}};
    return EnergyPart{kind, std::make_shared<LinearCombination>(std::move(terms),
                                                                part_name(family, kind))};
  };
  return {part(0, PartKind::lambda_part), part(1, PartKind::mu_part), {native[0], native[1]}};
}

EnergyPart volumetric_part(VolumetricKind kind) {
  MaterialParams p;
  p.mu = 0.0;
  p.lambda = 1.0;
  const Family source =
      kind == VolumetricKind::j_minus_1_sq ? Family::stable_neo_hookean : Family::hencky;
  auto term = std::make_shared<MaterialModel>(MaterialModel::unchecked(source, p));
  const char* name = kind == VolumetricKind::j_minus_1_sq ? "j_minus_1_sq" : "log_j_sq";
  return {PartKind::lambda_part,
          std::make_shared<LinearCombination>(
              std::vector<LinearCombination::Term>{{1.0, std::move(term)}}, name)};
}

EnergyPart mu_part_from(EnergyPtr base) {
  if (!base) throw InvalidParameter("mu_part_from: null energy");
  const LameParams l = measured_lame(*base);
  if (!(l.mu_lame > 0.0)) {
    throw InvalidParameter(base->name() + ": mu_lame must be positive to form a mu-part");
  }
  if (std::abs(l.lambda_lame) > 1e-8 * l.mu_lame) {
    throw InvalidParameter(base->name() +
                           ": base has nonzero lambda_lame; decompose it into parts instead");
  }
  const std::string name = base->name() + ".mu_part";
  return {PartKind::mu_part,
          std::make_shared<LinearCombination>(
              std::vector<LinearCombination::Term>{{1.0 / l.mu_lame, std::move(base)}}, name)};
}

namespace {

EnergyPtr filtered(const EnergyPtr& e, double alpha) {
  if (alpha == 1.0) return e;
  return std::make_shared<FilteredMaterial>(e, alpha);
}

}  // namespace

ComposedMaterial::ComposedMaterial(EnergyPart mu_part, EnergyPart lambda_part, LameParams lame,
                                   double alpha_mu, double alpha_lambda)
    : mu_part_(std::move(mu_part)),
      lambda_part_(std::move(lambda_part)),
      lame_(lame),
      alpha_mu_(alpha_mu),
      alpha_lambda_(alpha_lambda) {
  if (mu_part_.kind != PartKind::mu_part || lambda_part_.kind != PartKind::lambda_part) {
    throw InvalidParameter("combine: parts passed in the wrong roles");
  }
  if (!mu_part_.energy || !lambda_part_.energy) throw InvalidParameter("combine: null part");
  if (!(lame_.mu_lame > 0.0) || !std::isfinite(lame_.lambda_lame)) {
    throw InvalidParameter("combine: target needs mu_lame > 0 and finite lambda_lame");
  }
  if (!(alpha_mu_ > 0.0) || !(alpha_lambda_ > 0.0)) {
    throw InvalidParameter("combine: alphas must be positive");
  }
  std::vector<LinearCombination::Term> terms{
      {lame_.mu_lame, filtered(mu_part_.energy, alpha_mu_)}};
  if (lame_.lambda_lame != 0.0) {
    terms.push_back({lame_.lambda_lame, filtered(lambda_part_.energy, alpha_lambda_)});
  }
  total_ = std::make_shared<LinearCombination>(std::move(terms), "composed");
}

double ComposedMaterial::stress_scale() const {
  return std::max(std::abs(lame_.lambda_lame), std::abs(lame_.mu_lame));
}

ComposedMaterial combine(const EnergyPart& mu_part, const EnergyPart& lambda_part,
                         const LameParams& target, double alpha_mu, double alpha_lambda) {
  return ComposedMaterial(mu_part, lambda_part, target, alpha_mu, alpha_lambda);
}

ComposedMaterial augment_volumetric(EnergyPtr base_mu_only, const LameParams& target,
                                    VolumetricKind kind, double alpha_mu, double alpha_lambda) {
  return combine(mu_part_from(std::move(base_mu_only)), volumetric_part(kind), target, alpha_mu,
                 alpha_lambda);
}

}  // namespace stretchmat
