#include "stretchmat/material.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detail/jet.hpp"
#include "stretchmat/error.hpp"

namespace stretchmat {

using detail::Jet;

namespace {

using D = StretchDomain;

const std::vector<FamilyDescriptor> kCatalog = {
    {Family::linear_corotational, "linear_corotational", "Linear Corotational",
     {"mu", "lambda"}, D::unrestricted, true, true},
    {Family::st_venant_kirchhoff, "st_venant_kirchhoff", "St. Venant-Kirchhoff",
     {"mu", "lambda"}, D::unrestricted, true, true},
    {Family::hencky, "hencky", "Hencky", {"mu", "lambda"}, D::all_positive, true, true},
    {Family::seth_hill, "seth_hill", "Seth-Hill family", {"mu", "lambda", "alpha"},
     D::all_positive, true, true},
    {Family::symmetric_seth_hill, "symmetric_seth_hill", "Symmetric Seth-Hill",
     {"mu", "lambda", "alpha"}, D::all_positive, true, true},
    {Family::hill, "hill", "Hill family", {"mu", "lambda", "f"}, D::all_positive, true, true},
    {Family::neo_hookean, "neo_hookean", "Neo-Hookean (standard version)", {"mu", "lambda"},
     D::all_positive, true, true},
    {Family::neo_hookean_ogden, "neo_hookean_ogden", "Neo-Hookean (Ogden)", {"mu", "lambda"},
     D::all_positive, true, true},
    {Family::stable_neo_hookean, "stable_neo_hookean", "Stable Neo-Hookean", {"mu", "lambda"},
     D::unrestricted, true, true},
    {Family::sts, "sts", "STS material", {"mu", "lambda", "mu4"}, D::all_positive, true, true},
    {Family::valanis_landel, "valanis_landel", "Valanis-Landel (original)", {"mu", "lambda"},
     D::all_positive, true, true},
    {Family::valanis_landel_new, "valanis_landel_new", "Valanis-Landel (new)", {"f", "h"},
     D::all_positive, true, true},
    {Family::valanis_landel_xu, "valanis_landel_xu", "Valanis-Landel (Xu's version)",
     {"f", "g", "h"}, D::all_positive, false, true},
    {Family::peng_landel, "peng_landel", "Peng-Landel", {"E"}, D::all_positive, false, true},
    {Family::arap, "arap", "ARAP (As-Rigid-As-Possible)", {}, D::unrestricted, false, true},
    {Family::symmetric_arap, "symmetric_arap", "Symmetric ARAP", {"mu"}, D::all_positive, false,
     true},
    {Family::symmetric_dirichlet, "symmetric_dirichlet", "Symmetric Dirichlet", {},
     D::all_positive, false, true},
    {Family::ogden, "ogden", "Ogden", {"terms"}, D::all_positive, false, false},
    {Family::mooney_rivlin, "mooney_rivlin", "Mooney-Rivlin", {"c1", "c2"}, D::all_positive,
     false, false},
};

// Strain-measure families: psi = mu * sum q(l_i)^2 + lambda/2 * (sum q(l_i))^2.
template <class Q>
Jet strain_measure_energy(const StretchTriple& s, double mu, double lambda, Q&& q) {
  Jet j;
  ScalarJet qi[3];
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    qi[i] = q(s[i]);
    sum += qi[i].value;
    j.value += mu * qi[i].value * qi[i].value;
  }
  j.value += 0.5 * lambda * sum * sum;
  for (int i = 0; i < 3; ++i) {
    j.grad[i] = 2.0 * mu * qi[i].value * qi[i].d1 + lambda * sum * qi[i].d1;
    for (int k = 0; k < 3; ++k) j.hess(i, k) = lambda * qi[i].d1 * qi[k].d1;
    j.hess(i, i) += 2.0 * mu * (qi[i].d1 * qi[i].d1 + qi[i].value * qi[i].d2) +
                    lambda * sum * qi[i].d2;
  }
  return j;
}

ScalarJet normalized_power(double x, double a) {
  const double lx = std::log(x);
  const double xa = std::exp(a * lx);
  return {std::expm1(a * lx) / a, xa / x, (a - 1.0) * xa / (x * x)};
}

// (x^a - x^-a) / (2a) = sinh(a log x) / a.
ScalarJet symmetric_power(double x, double a) {
  const double lx = std::log(x);
  const double sh = std::sinh(a * lx);
  const double ch = std::cosh(a * lx);
  return {sh / a, ch / x, (a * sh - ch) / (x * x)};
}

// (x^2 - 1)/2 - log x
ScalarJet neo_hookean_deviatoric(double x) {
  return {0.5 * (x - 1.0) * (x + 1.0) - std::log(x), x - 1.0 / x, 1.0 + 1.0 / (x * x)};
}

Jet volume_ratio(const StretchTriple& s) {
  Jet j = detail::volume_ratio_minus_one(s);
  j.value += 1.0;
  return j;
}

Jet evaluate_family(Family family, const MaterialParams& p, const StretchTriple& s) {
  using detail::chain;
  using detail::half_square;
  using detail::separable_sum;
  switch (family) {
    case Family::linear_corotational:
      return strain_measure_energy(s, p.mu, p.lambda,
                                   [](double x) { return ScalarJet{x - 1.0, 1.0, 0.0}; });
    case Family::st_venant_kirchhoff:
      return strain_measure_energy(s, p.mu, p.lambda, [](double x) {
        return ScalarJet{0.5 * (x - 1.0) * (x + 1.0), x, 1.0};
      });
    case Family::hencky:
      return strain_measure_energy(s, p.mu, p.lambda, [](double x) {
        return ScalarJet{std::log(x), 1.0 / x, -1.0 / (x * x)};
      });
    case Family::seth_hill:
      return strain_measure_energy(s, p.mu, p.lambda,
                                   [a = p.alpha](double x) { return normalized_power(x, a); });
    case Family::symmetric_seth_hill:
      return strain_measure_energy(s, p.mu, p.lambda,
                                   [a = p.alpha](double x) { return symmetric_power(x, a); });
    case Family::hill:
      return strain_measure_energy(s, p.mu, p.lambda,
                                   [&f = p.f](double x) { return f.evaluate(x); });
    case Family::neo_hookean: {
      const Jet logj = detail::log_volume_ratio(s);
      return p.mu * separable_sum(s, neo_hookean_deviatoric) +
             p.lambda * chain(logj, half_square(logj.value));
    }
    case Family::neo_hookean_ogden: {
      const Jet jm1 = detail::volume_ratio_minus_one(s);
      return p.mu * separable_sum(s, neo_hookean_deviatoric) +
             p.lambda * chain(jm1, half_square(jm1.value));
    }
    case Family::stable_neo_hookean: {
      const Jet jm1 = detail::volume_ratio_minus_one(s);
      const Jet stretch = separable_sum(s, [](double x) {
        return ScalarJet{0.5 * (x - 1.0) * (x + 1.0), x, 1.0};
      });
      return p.mu * (stretch + (-1.0) * jm1) + p.lambda * chain(jm1, half_square(jm1.value));
    }
    case Family::sts: {
      const Jet logj = detail::log_volume_ratio(s);
      const Jet quartic = separable_sum(s, [](double x) {
        const double e = (x - 1.0) * (x + 1.0);
        return ScalarJet{e * e * e * e / 8.0, e * e * e * x, 6.0 * x * x * e * e + e * e * e};
      });
      return p.mu * separable_sum(s, neo_hookean_deviatoric) +
             p.lambda * chain(logj, half_square(logj.value)) + p.mu4 * quartic;
    }
    case Family::valanis_landel: {
      // Shifted by +1 per stretch so the rest energy is zero.
      const Jet logj = detail::log_volume_ratio(s);
      const Jet dev = separable_sum(s, [](double x) {
        const double lx = std::log(x);
        return ScalarJet{x * lx - x + 1.0, lx, 1.0 / x};
      });
      return (2.0 * p.mu) * dev + p.lambda * chain(logj, half_square(logj.value));
    }
    case Family::valanis_landel_new: {
      const Jet j = volume_ratio(s);
      return separable_sum(s, [&f = p.f](double x) { return f.evaluate(x); }) +
             chain(j, p.h.evaluate(j.value));
    }
    case Family::valanis_landel_xu: {
      const Jet j = volume_ratio(s);
      return separable_sum(s, [&f = p.f](double x) { return f.evaluate(x); }) +
             detail::pair_sum(s, [&g = p.g](double y) { return g.evaluate(y); }) +
             chain(j, p.h.evaluate(j.value));
    }
    case Family::peng_landel:
      return p.youngs * separable_sum(s, [](double x) {
               const double d = x - 1.0;
               const double lx = std::log1p(d);
               const double l2 = lx * lx;
               const double a = -1.0 - lx / 3.0 + l2 / 6.0 - l2 * lx / 54.0;
               return ScalarJet{d - lx - l2 / 6.0 + l2 * lx / 18.0 - l2 * l2 / 216.0, 1.0 + a / x,
                                (2.0 / 3.0 + 2.0 * lx / 3.0 - 2.0 * l2 / 9.0 + l2 * lx / 54.0) /
                                    (x * x)};
             });
    case Family::arap:
      return separable_sum(s, [](double x) {
        const double d = x - 1.0;
        return ScalarJet{d * d, 2.0 * d, 2.0};
      });
    case Family::symmetric_arap:
      return (0.5 * p.mu) * separable_sum(s, [](double x) {
               const double d = x - 1.0;
               const double e = 1.0 - 1.0 / x;
               const double x3 = x * x * x;
               return ScalarJet{d * d + e * e, 2.0 * d + 2.0 * e / (x * x),
                                2.0 * (1.0 - 2.0 / x3 + 3.0 / (x3 * x))};
             });
    case Family::symmetric_dirichlet:
      return separable_sum(s, [](double x) {
        const double d = x - 1.0 / x;
        const double e = 1.0 + 1.0 / (x * x);
        return ScalarJet{0.5 * d * d, d * e, e * e - 2.0 * d / (x * x * x)};
      });
    case Family::ogden: {
      Jet j;
      for (const OgdenTerm& t : p.terms) {
        j += separable_sum(s, [&t](double x) {
          const ScalarJet q = normalized_power(x, t.alpha);
          return ScalarJet{t.mu * q.value, t.mu * q.d1, t.mu * q.d2};
        });
      }
      return j;
    }
    case Family::mooney_rivlin: {
      const Jet logj = detail::log_volume_ratio(s);
      const double e1 = std::exp(-2.0 / 3.0 * logj.value);
      const double e2 = std::exp(-4.0 / 3.0 * logj.value);
      const Jet j23 = chain(logj, {e1, -2.0 / 3.0 * e1, 4.0 / 9.0 * e1});
      const Jet j43 = chain(logj, {e2, -4.0 / 3.0 * e2, 16.0 / 9.0 * e2});
      const Jet i1 = separable_sum(s, [](double x) {
        return ScalarJet{(x - 1.0) * (x + 1.0), 2.0 * x, 2.0};
      });
      const Jet i2 = detail::pair_sum(s, [](double y) {
        return ScalarJet{(y - 1.0) * (y + 1.0), 2.0 * y, 2.0};
      });
      return p.c1 * detail::product(j23, i1) + p.c2 * detail::product(j43, i2);
    }
  }
  return {};
}

void require(bool ok, Family family, const std::string& what) {
  if (!ok) throw InvalidParameter(family_id(family) + ": " + what);
}

void validate(Family family, const MaterialParams& p) {
  const auto finite = [](double v) { return std::isfinite(v); };
  const auto& fields = describe(family).fields;
  const auto has = [&](const char* name) {
    return std::find(fields.begin(), fields.end(), name) != fields.end();
  };
  if (has("mu")) require(finite(p.mu) && p.mu > 0.0, family, "mu must be > 0");
  if (has("lambda")) require(finite(p.lambda), family, "lambda must be finite");
  if (has("alpha")) require(finite(p.alpha) && p.alpha != 0.0, family, "alpha must be nonzero");
  if (has("mu4")) require(finite(p.mu4), family, "mu4 must be finite");
  if (has("E")) require(finite(p.youngs) && p.youngs > 0.0, family, "E must be > 0");
  if (family == Family::hill) p.f.check_contract(ProfileRole::hill, "hill.f");
  if (family == Family::valanis_landel_new || family == Family::valanis_landel_xu) {
    p.f.check_contract(ProfileRole::flat, family_id(family) + ".f");
    p.h.check_contract(ProfileRole::flat, family_id(family) + ".h");
    if (family == Family::valanis_landel_xu) {
      p.g.check_contract(ProfileRole::flat, family_id(family) + ".g");
    }
  }
  if (family == Family::ogden) {
    require(!p.terms.empty(), family, "needs at least one (mu, alpha) term");
    for (const OgdenTerm& t : p.terms) {
      require(finite(t.mu) && finite(t.alpha) && t.alpha != 0.0, family,
              "term exponents must be nonzero and finite");
    }
  }
  if (family == Family::mooney_rivlin) {
    require(finite(p.c1) && finite(p.c2) && p.c1 > 0.0, family, "c1 must be > 0, c2 finite");
  }
}

}  // namespace

const std::vector<FamilyDescriptor>& list_catalog() { return kCatalog; }

const FamilyDescriptor& describe(Family family) {
  return kCatalog[static_cast<std::size_t>(family)];
}

std::string family_id(Family family) { return describe(family).id; }

Family family_from_id(std::string_view id) {
  if (id == "corotational") return Family::linear_corotational;
  if (id == "stvk") return Family::st_venant_kirchhoff;
  if (id == "snh") return Family::stable_neo_hookean;
  for (const auto& d : kCatalog) {
    if (d.id == id) return d.family;
  }
  throw SchemaError("unknown material family '" + std::string(id) + "'");
}

MaterialParams default_params(Family family) {
  MaterialParams p;
  p.mu = 1.0;
  p.lambda = 1.0;
  switch (family) {
    case Family::seth_hill:
      p.alpha = 0.5;
      break;
    case Family::hill:
      p.f = Profile::power(0.5);
      break;
    case Family::sts:
      p.mu4 = 1.0;
      break;
    case Family::valanis_landel_new:
      p.f = Profile::valanis_landel(2.0);
      p.h = Profile::log_squared(1.0);
      break;
    case Family::valanis_landel_xu:
      p.f = Profile::valanis_landel(1.5);
      p.g = Profile::log_squared(0.5);
      p.h = Profile::log_squared(0.5);
      break;
    case Family::peng_landel:
      p.youngs = 3.0;
      break;
    case Family::ogden:
      p.terms = {{2.0, 2.0}};
      break;
    case Family::mooney_rivlin:
      p.c1 = 1.0;
      p.c2 = -0.5;
      break;
    default:
      break;
  }
  return p;
}

MaterialModel::MaterialModel(Family family, MaterialParams params)
    : family_(family), params_(std::move(params)) {
  validate(family_, params_);
}

MaterialModel::MaterialModel(Family family, MaterialParams params, Unchecked)
    : family_(family), params_(std::move(params)) {}

MaterialModel MaterialModel::unchecked(Family family, MaterialParams params) {
  return MaterialModel(family, std::move(params), Unchecked{});
}

MaterialModel make_material(Family family, const MaterialParams& params) {
  return MaterialModel(family, params);
}

LameParams MaterialModel::closed_form_lame() const {
  const MaterialParams& p = params_;
  switch (family_) {
    case Family::stable_neo_hookean:
      return {p.lambda - p.mu, p.mu};
    case Family::valanis_landel_new:
      return {p.h.evaluate(1.0).d2, 0.5 * p.f.evaluate(1.0).d2};
    case Family::valanis_landel_xu: {
      const double g2 = p.g.evaluate(1.0).d2;
      return {g2 + p.h.evaluate(1.0).d2, 0.5 * (p.f.evaluate(1.0).d2 + g2)};
    }
    case Family::peng_landel:
      return {0.0, p.youngs / 3.0};
    case Family::arap:
      return {0.0, 1.0};
    case Family::symmetric_arap:
      return {0.0, p.mu};
    case Family::symmetric_dirichlet:
      return {0.0, 2.0};
    case Family::ogden: {
      double mu = 0.0;
      for (const OgdenTerm& t : p.terms) mu += t.mu * (t.alpha - 1.0);
      return {0.0, 0.5 * mu};
    }
    case Family::mooney_rivlin:
      return {-4.0 / 3.0 * (2.0 * p.c1 + 5.0 * p.c2), p.c1};
    default:
      return {p.lambda, p.mu};
  }
}

double MaterialModel::predicted_rest_stress() const {
  switch (family_) {
    case Family::ogden: {
      double s = 0.0;
      for (const OgdenTerm& t : params_.terms) s += t.mu;
      return s;
    }
    case Family::mooney_rivlin:
      return 2.0 * params_.c1 + 4.0 * params_.c2;
    default:
      return 0.0;
  }
}

StretchDomain MaterialModel::domain() const { return describe(family_).domain; }

std::string MaterialModel::name() const { return family_id(family_); }

double MaterialModel::stress_scale() const {
  const LameParams l = closed_form_lame();
  return std::max({std::abs(l.lambda_lame), std::abs(l.mu_lame), 1e-300});
}

double MaterialModel::do_energy(const StretchTriple& s) const {
  return evaluate_family(family_, params_, s).value;
}

Evaluation MaterialModel::do_evaluate(const StretchTriple& s) const {
  return evaluate_family(family_, params_, s).to_evaluation();
}

}  // namespace stretchmat
