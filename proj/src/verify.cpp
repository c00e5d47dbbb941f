#include "stretchmat/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "stretchmat/error.hpp"
#include "stretchmat/lame.hpp"

namespace stretchmat {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Uniform on [lo, hi] with a random sign.
double signed_uniform(std::mt19937_64& rng, double lo, double hi) {
  const double v = uniform(rng, lo, hi);
  return std::bernoulli_distribution(0.5)(rng) ? v : -v;
}

Profile random_flat_profile(std::mt19937_64& rng) {
  const double scale = uniform(rng, 0.2, 3.0);
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      return Profile::log_squared(scale);
    case 1:
      return Profile::power_squared(signed_uniform(rng, 0.25, 2.5), scale);
    default:
      return Profile::valanis_landel(scale);
  }
}

}  // namespace

MaterialParams random_params(Family family, std::mt19937_64& rng) {
  MaterialParams p = default_params(family);
  p.mu = uniform(rng, 0.2, 5.0);
  p.lambda = uniform(rng, -0.5, 10.0);
  switch (family) {
    case Family::seth_hill:
    case Family::symmetric_seth_hill:
      p.alpha = signed_uniform(rng, 0.2, 3.0);
      break;
    case Family::hill:
      p.f = std::bernoulli_distribution(0.3)(rng) ? Profile::log()
                                                  : Profile::power(signed_uniform(rng, 0.25, 3.0));
      break;
    case Family::sts:
      p.mu4 = uniform(rng, -1.0, 3.0);
      break;
    case Family::valanis_landel_new:
      p.f = random_flat_profile(rng);
      p.h = random_flat_profile(rng);
      break;
    case Family::valanis_landel_xu:
      p.f = random_flat_profile(rng);
      p.g = random_flat_profile(rng);
      p.h = random_flat_profile(rng);
      break;
    case Family::peng_landel:
      p.youngs = uniform(rng, 0.5, 10.0);
      break;
    case Family::ogden: {
      p.terms.clear();
      const int n = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int i = 0; i < n; ++i) {
        p.terms.push_back({uniform(rng, 0.2, 3.0), signed_uniform(rng, 0.3, 3.0)});
      }
      break;
    }
    case Family::mooney_rivlin:
      p.c1 = uniform(rng, 0.2, 3.0);
      p.c2 = uniform(rng, -2.0, 2.0);
      break;
    default:
      break;
  }
  return p;
}

int TableReport::num_passed() const {
  return static_cast<int>(
      std::count_if(families.begin(), families.end(), [](const FamilyCheck& c) {
        return c.passed();
      }));
}

TableReport verify_table(std::uint64_t seed, int draws, const ClosedFormLame& closed_form) {
  if (draws < 1) throw InvalidParameter("verify_table: draws must be >= 1");
  TableReport report;
  report.seed = seed;
  report.draws = draws;

  std::mt19937_64 rng(seed);
  for (const FamilyDescriptor& desc : list_catalog()) {
    FamilyCheck check{desc.family, desc.id};
    check.draws = draws;
    for (int d = 0; d < draws; ++d) {
      const MaterialModel model = make_material(desc.family, random_params(desc.family, rng));

      const LameParams expected = closed_form ? closed_form(model) : model.closed_form_lame();
      const LameParams measured = extract_lame(model, LameMethod::fd, RestCheck::report);
      const double scale = std::max(std::abs(expected.lambda_lame), std::abs(expected.mu_lame));
      const double lame_err = std::max(std::abs(measured.lambda_lame - expected.lambda_lame),
                                       std::abs(measured.mu_lame - expected.mu_lame)) /
                              scale;
      check.lame_error = std::max(check.lame_error, std::isfinite(lame_err) ? lame_err : 1e300);

      const Evaluation rest = model.evaluate(StretchTriple::rest());
      const double stress = model.predicted_rest_stress();
      double rest_err = std::abs(rest.energy);
      for (int i = 0; i < 3; ++i) rest_err = std::max(rest_err, std::abs(rest.gradient[i] - stress));
      check.rest_error =
          std::max(check.rest_error, rest_err / std::max(1.0, model.stress_scale()));

      for (int t = 0; t < 3; ++t) {
        std::array<double, 3> s{uniform(rng, 0.5, 2.0), uniform(rng, 0.5, 2.0),
                                uniform(rng, 0.5, 2.0)};
        const double base = model.energy(StretchTriple(s[0], s[1], s[2]));
        std::array<double, 3> perm = s;
        std::sort(perm.begin(), perm.end());
        do {
          const double e = model.energy(StretchTriple(perm[0], perm[1], perm[2]));
          check.symmetry_error =
              std::max(check.symmetry_error, std::abs(e - base) / std::max(1.0, std::abs(base)));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
    check.lame_ok = check.lame_error <= kTableLameTolerance;
    check.rest_ok = check.rest_error <= kTableRestTolerance;
    check.symmetry_ok = check.symmetry_error <= kTableSymmetryTolerance;
    report.families.push_back(std::move(check));
  }
  return report;
}

}  // namespace stretchmat
