#include "stretchmat/lame.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stretchmat/error.hpp"
#include "stretchmat/fd.hpp"

namespace stretchmat {

namespace {

double lame_scale(const LameParams& l) {
  return std::max(std::abs(l.lambda_lame), std::abs(l.mu_lame));
}

std::string describe_target(const LameParams& t) {
  std::ostringstream s;
  s << "(lambda_lame=" << t.lambda_lame << ", mu_lame=" << t.mu_lame << ")";
  return s.str();
}

[[noreturn]] void unreachable(Family family, const LameParams& target, const std::string& why) {
  throw UnreachableTarget(family_id(family) + " cannot reach " + describe_target(target) + ": " +
                          why);
}

void require_zero_lambda(Family family, const LameParams& target) {
  if (std::abs(target.lambda_lame) > 1e-12 * std::abs(target.mu_lame)) {
    unreachable(family, target,
                "its lambda_lame is identically 0 (nu = 0); add a volumetric lambda-part "
                "with the compose module (augment_volumetric / \"combine\")");
  }
}

}  // namespace

double rest_gradient_tolerance(const StretchEnergy& energy) {
  return 1e-8 * std::max(1.0, energy.stress_scale());
}

double rest_gradient_norm(const StretchEnergy& energy, LameMethod method) {
  const StretchTriple rest = StretchTriple::rest();
  const Vec3 g = method == LameMethod::analytic
                     ? energy.gradient(rest)
                     : fd_gradient([&](const StretchTriple& s) { return energy.energy(s); }, rest);
  return g.cwiseAbs().maxCoeff();
}

LameParams extract_lame(const StretchEnergy& energy, LameMethod method, RestCheck check) {
  if (check == RestCheck::enforce) {
    const double g = rest_gradient_norm(energy, method);
    if (!(g <= rest_gradient_tolerance(energy))) {
      std::ostringstream msg;
      msg << energy.name() << ": rest gradient " << g << " exceeds tolerance "
          << rest_gradient_tolerance(energy)
          << "; the formula carries a rest stress, Lamé extraction refused";
      throw RestInstability(msg.str());
    }
  }
  const StretchTriple rest = StretchTriple::rest();
  if (method == LameMethod::fd) {
    const FDConfig cfg{kRestHessianStep};
    return lame_from_rest_hessian(
        fd_hessian([&](const StretchTriple& s) { return energy.energy(s); }, rest, cfg));
  }
  if (const auto* model = dynamic_cast<const MaterialModel*>(&energy)) {
    return model->closed_form_lame();
  }
  return lame_from_rest_hessian(energy.hessian(rest));
}

LameAgreement compare_lame_methods(const StretchEnergy& energy, RestCheck check) {
  LameAgreement a;
  a.analytic = extract_lame(energy, LameMethod::analytic, check);
  a.fd = extract_lame(energy, LameMethod::fd, check);
  const double diff = std::max(std::abs(a.analytic.lambda_lame - a.fd.lambda_lame),
                               std::abs(a.analytic.mu_lame - a.fd.mu_lame));
  a.relative_difference = diff / std::max(lame_scale(a.analytic), 1e-300);
  return a;
}

IsotropicModuli lame_to_moduli(const LameParams& l) {
  if (!(l.mu_lame > 0.0) || !std::isfinite(l.lambda_lame)) {
    throw InvalidParameter("lame_to_moduli: mu_lame must be > 0 and lambda_lame finite");
  }
  const double sum = l.lambda_lame + l.mu_lame;
  if (std::abs(sum) <= 1e-14 * lame_scale(l)) {
    throw DegenerateDenominator("lame_to_moduli: lambda_lame + mu_lame = 0");
  }
  return {l.mu_lame * (3.0 * l.lambda_lame + 2.0 * l.mu_lame) / sum,
          l.lambda_lame / (2.0 * sum)};
}

LameParams moduli_to_lame(const IsotropicModuli& m) {
  if (!(m.E > 0.0) || !std::isfinite(m.E) || !(m.nu > -1.0)) {
    throw InvalidParameter("moduli_to_lame: need E > 0 and nu > -1");
  }
  if (m.nu >= 0.5 - 1e-9) {
    throw IncompressibleLimit("moduli_to_lame: nu must stay below 0.5 (incompressible limit)");
  }
  return {m.E * m.nu / ((1.0 + m.nu) * (1.0 - 2.0 * m.nu)), m.E / (2.0 * (1.0 + m.nu))};
}

MaterialParams normalize(Family family, const LameParams& target, NormalizePolicy,
                         const std::optional<MaterialParams>& baseline) {
  if (!std::isfinite(target.lambda_lame) || !std::isfinite(target.mu_lame) ||
      !(target.mu_lame > 0.0)) {
    throw InvalidParameter("normalize: target needs finite lambda_lame and mu_lame > 0");
  }
  MaterialParams p = baseline.value_or(default_params(family));
  const double lam = target.lambda_lame;
  const double mu = target.mu_lame;

  switch (family) {
    case Family::stable_neo_hookean:
      p.mu = mu;
      p.lambda = lam + mu;
      break;
    case Family::valanis_landel_new: {
      const double f2 = p.f.evaluate(1.0).d2;
      const double h2 = p.h.evaluate(1.0).d2;
      if (f2 == 0.0) unreachable(family, target, "baseline f''(1) = 0 cannot be rescaled");
      if (h2 == 0.0 && lam != 0.0) {
        unreachable(family, target, "baseline h''(1) = 0 cannot be rescaled");
      }
      p.f = p.f.scaled(2.0 * mu / f2);
      p.h = h2 == 0.0 ? p.h : p.h.scaled(lam / h2);
      break;
    }
    case Family::valanis_landel_xu: {
      const double f2 = p.f.evaluate(1.0).d2;
      const double g2 = p.g.evaluate(1.0).d2;
      const double h2 = p.h.evaluate(1.0).d2;
      if (f2 == 0.0 || h2 == 0.0) {
        unreachable(family, target, "baseline f''(1) or h''(1) is 0 and cannot be rescaled");
      }
      p.f = p.f.scaled((2.0 * mu - g2) / f2);
      p.h = p.h.scaled((lam - g2) / h2);
      break;
    }
    case Family::peng_landel:
      require_zero_lambda(family, target);
      p.youngs = 3.0 * mu;
      break;
    case Family::arap:
    case Family::symmetric_dirichlet: {
      require_zero_lambda(family, target);
      const double fixed_mu = family == Family::arap ? 1.0 : 2.0;
      if (std::abs(mu - fixed_mu) > 1e-12 * fixed_mu) {
        unreachable(family, target,
                    "the family has no parameters (mu_lame is fixed); rescale it through the "
                    "compose module instead");
      }
      break;
    }
    case Family::symmetric_arap:
      require_zero_lambda(family, target);
      p.mu = mu;
      break;
    case Family::ogden: {
      require_zero_lambda(family, target);
      if (p.terms.empty()) unreachable(family, target, "baseline has no terms");
      double base_mu = 0.0;
      for (const OgdenTerm& t : p.terms) base_mu += 0.5 * t.mu * (t.alpha - 1.0);
      if (base_mu == 0.0) {
        unreachable(family, target, "baseline terms give mu_lame = 0; exponents cannot be held");
      }
      for (OgdenTerm& t : p.terms) t.mu *= mu / base_mu;
      break;
    }
    case Family::mooney_rivlin:
      p.c1 = mu;
      p.c2 = -(3.0 * lam + 8.0 * mu) / 20.0;
      break;
    default:
      // Families parameterized directly by (mu, lambda).
      p.mu = mu;
      p.lambda = lam;
      break;
  }
  // Constructing validates the result (profile contracts, mu > 0, ...).
  (void)make_material(family, p);
  return p;
}

MaterialModel pk1_linearize(const StretchEnergy& energy, RestCheck check) {
  const LameParams l = extract_lame(energy, LameMethod::analytic, check);
  MaterialParams p = default_params(Family::linear_corotational);
  p.mu = l.mu_lame;
  p.lambda = l.lambda_lame;
  return make_material(Family::linear_corotational, p);
}

}  // namespace stretchmat
