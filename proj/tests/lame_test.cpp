#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "stretchmat/error.hpp"
#include "stretchmat/lame.hpp"
#include "test_util.hpp"

using namespace stretchmat;
using namespace stretchmat::test_util;

namespace {

void expect_lame(const LameParams& got, double lambda, double mu, double tol) {
  EXPECT_NEAR(got.lambda_lame, lambda, tol);
  EXPECT_NEAR(got.mu_lame, mu, tol);
}

LameParams reachable_target(Family f) {
  switch (f) {
    case Family::arap:
      return {0.0, 1.0};
    case Family::symmetric_dirichlet:
      return {0.0, 2.0};
    case Family::peng_landel:
    case Family::symmetric_arap:
    case Family::ogden:
      return {0.0, 0.7};
    default:
      return {1.5, 1.0};
  }
}

}  // namespace

TEST(ExtractLame, StableNeoHookean) {
  const auto m = model(Family::stable_neo_hookean, mu_lambda(1.0, 2.0));
  expect_lame(extract_lame(*m), 1.0, 1.0, 1e-14);
  expect_lame(extract_lame(*m, LameMethod::fd), 1.0, 1.0, 1e-6);
}

TEST(ExtractLame, Arap) {
  expect_lame(extract_lame(*model(Family::arap), LameMethod::fd), 0.0, 1.0, 1e-6);
}

TEST(ExtractLame, OgdenSingleTermNeedsReportMode) {
  MaterialParams p = default_params(Family::ogden);
  p.terms = {{2.0, 2.0}};
  const auto m = model(Family::ogden, p);
  EXPECT_THROW(extract_lame(*m), RestInstability);
  expect_lame(extract_lame(*m, LameMethod::fd, RestCheck::report), 0.0, 1.0, 1e-6);
  expect_lame(extract_lame(*m, LameMethod::analytic, RestCheck::report), 0.0, 1.0, 1e-14);
}

TEST(ExtractLame, MethodsAgreeForEveryFamily) {
  for (Family f : all_families()) {
    const LameAgreement a = compare_lame_methods(*model(f), RestCheck::report);
    EXPECT_LE(a.relative_difference, 1e-5) << family_id(f);
  }
}

TEST(Moduli, LameToModuli) {
  const IsotropicModuli zero_lambda = lame_to_moduli({0.0, 0.8});
  EXPECT_DOUBLE_EQ(zero_lambda.E, 1.6);
  EXPECT_DOUBLE_EQ(zero_lambda.nu, 0.0);
  const IsotropicModuli m = lame_to_moduli({1.5, 1.0});
  EXPECT_NEAR(m.E, 2.6, 1e-15);
  EXPECT_NEAR(m.nu, 0.3, 1e-15);
  EXPECT_THROW(lame_to_moduli({1.0, 0.0}), InvalidParameter);
  EXPECT_THROW(lame_to_moduli({-1.0, 1.0}), DegenerateDenominator);
}

TEST(Moduli, ModuliToLame) {
  expect_lame(moduli_to_lame({1.0, 0.0}), 0.0, 0.5, 0.0);
  expect_lame(moduli_to_lame({2.6, 0.3}), 1.5, 1.0, 1e-15);
  EXPECT_THROW(moduli_to_lame({1.0, 0.5}), IncompressibleLimit);
  EXPECT_THROW(moduli_to_lame({1.0, 0.5 - 1e-10}), IncompressibleLimit);
  EXPECT_THROW(moduli_to_lame({0.0, 0.3}), InvalidParameter);
  EXPECT_THROW(moduli_to_lame({1.0, -1.0}), InvalidParameter);
}

TEST(Moduli, RoundTrip) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> logE(2.0, 7.0);
  std::uniform_real_distribution<double> nu(-0.9, 0.49);
  for (int i = 0; i < 1000; ++i) {
    const IsotropicModuli m{std::pow(10.0, logE(rng)), nu(rng)};
    const IsotropicModuli back = lame_to_moduli(moduli_to_lame(m));
    ASSERT_LE(std::abs(back.E - m.E) / m.E, 1e-12);
    ASSERT_LE(std::abs(back.nu - m.nu), 1e-12);
  }
}

TEST(Normalize, StableNeoHookean) {
  const MaterialParams p = normalize(Family::stable_neo_hookean, {1.0, 1.0});
  EXPECT_DOUBLE_EQ(p.mu, 1.0);
  EXPECT_DOUBLE_EQ(p.lambda, 2.0);
  const MaterialParams q = normalize(Family::stable_neo_hookean, moduli_to_lame({2.6, 0.3}));
  EXPECT_NEAR(q.mu, 1.0, 1e-14);
  EXPECT_NEAR(q.lambda, 2.5, 1e-14);
}

TEST(Normalize, Corotational) {
  const MaterialParams p = normalize(Family::linear_corotational, moduli_to_lame({2.6, 0.3}));
  EXPECT_NEAR(p.mu, 1.0, 1e-14);
  EXPECT_NEAR(p.lambda, 1.5, 1e-14);
}

TEST(Normalize, MooneyRivlin) {
  const double lam = 1.5;
  const double mu = 1.0;
  const MaterialParams p = normalize(Family::mooney_rivlin, {lam, mu});
  EXPECT_DOUBLE_EQ(p.c1, mu);
  EXPECT_NEAR(p.c2, -(3 * lam + 8 * mu) / 20, 1e-15);
  // The rest stress 2 C1 + 4 C2 = (2 mu - 3 lambda) / 5 vanishes only on
  // lambda = 2 mu / 3.
  const MaterialModel m = make_material(Family::mooney_rivlin, p);
  EXPECT_NEAR(m.predicted_rest_stress(), (2 * mu - 3 * lam) / 5, 1e-14);
  const MaterialModel stable =
      make_material(Family::mooney_rivlin, normalize(Family::mooney_rivlin, {2.0 / 3.0, 1.0}));
  EXPECT_NEAR(stable.predicted_rest_stress(), 0.0, 1e-15);
  expect_lame(extract_lame(stable, LameMethod::fd), 2.0 / 3.0, 1.0, 1e-6);
}

TEST(Normalize, RoundTripEveryFamily) {
  for (Family f : all_families()) {
    const LameParams target = reachable_target(f);
    const MaterialParams p = normalize(f, target);
    const MaterialModel m = make_material(f, p);
    const LameParams cf = extract_lame(m, LameMethod::analytic, RestCheck::report);
    EXPECT_NEAR(cf.lambda_lame, target.lambda_lame, 1e-10) << family_id(f);
    EXPECT_NEAR(cf.mu_lame, target.mu_lame, 1e-10) << family_id(f);
    const LameParams fd = extract_lame(m, LameMethod::fd, RestCheck::report);
    EXPECT_NEAR(fd.lambda_lame, target.lambda_lame, 1e-6) << family_id(f);
    EXPECT_NEAR(fd.mu_lame, target.mu_lame, 1e-6) << family_id(f);
  }
}

TEST(Normalize, HoldsExtraParametersAtBaseline) {
  MaterialParams base = default_params(Family::sts);
  base.mu4 = 2.5;
  EXPECT_DOUBLE_EQ(normalize(Family::sts, {1.0, 2.0}, NormalizePolicy::hold_at_default, base).mu4,
                   2.5);
  EXPECT_DOUBLE_EQ(normalize(Family::sts, {1.0, 2.0}).mu4, default_params(Family::sts).mu4);

  MaterialParams og = default_params(Family::ogden);
  og.terms = {{1.0, 3.0}, {0.5, -2.0}};
  const MaterialParams p = normalize(Family::ogden, {0.0, 4.0}, NormalizePolicy::hold_at_default, og);
  ASSERT_EQ(p.terms.size(), 2u);
  EXPECT_DOUBLE_EQ(p.terms[0].alpha, 3.0);
  EXPECT_DOUBLE_EQ(p.terms[1].alpha, -2.0);
  EXPECT_NEAR(make_material(Family::ogden, p).closed_form_lame().mu_lame, 4.0, 1e-12);
}

TEST(Normalize, IsIdentityOnTwoParameterFamilies) {
  for (Family f : {Family::linear_corotational, Family::st_venant_kirchhoff, Family::hencky,
                   Family::neo_hookean, Family::neo_hookean_ogden, Family::stable_neo_hookean,
                   Family::valanis_landel}) {
    const MaterialParams p = mu_lambda(1.7, 0.4);
    const MaterialParams back = normalize(f, extract_lame(*model(f, p)));
    EXPECT_NEAR(back.mu, p.mu, 1e-14) << family_id(f);
    EXPECT_NEAR(back.lambda, p.lambda, 1e-14) << family_id(f);
  }
}

TEST(Normalize, UnreachableTargets) {
  for (Family f : {Family::ogden, Family::arap, Family::symmetric_dirichlet, Family::peng_landel,
                   Family::symmetric_arap}) {
    try {
      normalize(f, {1.0, 1.0});
      ADD_FAILURE() << family_id(f);
    } catch (const UnreachableTarget& e) {
      EXPECT_NE(std::string(e.what()).find("compose"), std::string::npos);
    }
  }
  EXPECT_THROW(normalize(Family::arap, {0.0, 3.0}), UnreachableTarget);
  EXPECT_THROW(normalize(Family::hencky, {1.0, -1.0}), InvalidParameter);
}

TEST(Pk1Linearize, KnownLinearizations) {
  const MaterialModel corot = pk1_linearize(*model(Family::linear_corotational, mu_lambda(1.3, 0.2)));
  EXPECT_EQ(corot.family(), Family::linear_corotational);
  EXPECT_DOUBLE_EQ(corot.params().mu, 1.3);
  EXPECT_DOUBLE_EQ(corot.params().lambda, 0.2);

  const MaterialModel stvk = pk1_linearize(*model(Family::st_venant_kirchhoff, mu_lambda(2, 3)));
  EXPECT_DOUBLE_EQ(stvk.params().mu, 2.0);
  EXPECT_DOUBLE_EQ(stvk.params().lambda, 3.0);

  const MaterialModel snh = pk1_linearize(*model(Family::stable_neo_hookean, mu_lambda(2, 5)));
  EXPECT_DOUBLE_EQ(snh.params().mu, 2.0);
  EXPECT_DOUBLE_EQ(snh.params().lambda, 3.0);

  const MaterialModel twice = pk1_linearize(snh);
  EXPECT_EQ(twice.params(), snh.params());
}

TEST(Pk1Linearize, ErrorIsThirdOrder) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> n;
  MaterialParams mr = default_params(Family::mooney_rivlin);
  mr.c1 = 1.0;
  mr.c2 = -0.5;
  const std::vector<std::shared_ptr<const MaterialModel>> models{
      model(Family::st_venant_kirchhoff, mu_lambda(1, 2)), model(Family::hencky, mu_lambda(1, 2)),
      model(Family::stable_neo_hookean, mu_lambda(1, 2)), model(Family::mooney_rivlin, mr)};
  for (const auto& m : models) {
    const MaterialModel lin = pk1_linearize(*m);
    for (int trial = 0; trial < 5; ++trial) {
      Vec3 dir(n(rng), n(rng), n(rng));
      dir.normalize();
      const double r1 = 1e-2;
      const double r2 = 1e-3;
      auto err = [&](double r) {
        const StretchTriple s(Vec3(Vec3::Ones() + r * dir));
        return std::abs(m->energy(s) - lin.energy(s));
      };
      const double slope = std::log(err(r1) / err(r2)) / std::log(r1 / r2);
      EXPECT_GE(slope, 2.7) << m->name();
    }
  }
}
