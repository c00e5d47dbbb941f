#include "stretchmat/profile.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "stretchmat/error.hpp"

namespace stretchmat {

namespace {

constexpr std::array<std::pair<ProfileKind, const char*>, 5> kNames{{
    {ProfileKind::log, "log"},
    {ProfileKind::power, "power"},
    {ProfileKind::log_squared, "log_squared"},
    {ProfileKind::power_squared, "power_squared"},
    {ProfileKind::valanis_landel, "valanis_landel"},
}};

// (x^beta - 1) / beta and its two derivatives, accurate near x = 1.
ScalarJet normalized_power(double x, double beta) {
  const double lx = std::log(x);
  const double xb = std::exp(beta * lx);
  return {std::expm1(beta * lx) / beta, xb / x, (beta - 1.0) * xb / (x * x)};
}

}  // namespace

Profile::Profile(ProfileKind kind, double beta, double scale)
    : kind_(kind), beta_(beta), scale_(scale) {
  if (!std::isfinite(beta) || !std::isfinite(scale)) {
    throw InvalidParameter("profile: non-finite beta or scale");
  }
  if (uses_beta() && beta == 0.0) {
    throw InvalidParameter("profile '" + kind_name() + "': beta must be nonzero");
  }
}

bool Profile::uses_beta() const {
  return kind_ == ProfileKind::power || kind_ == ProfileKind::power_squared;
}

ScalarJet Profile::evaluate(double x) const {
  ScalarJet j;
  switch (kind_) {
    case ProfileKind::log:
      j = {std::log(x), 1.0 / x, -1.0 / (x * x)};
      break;
    case ProfileKind::power:
      j = normalized_power(x, beta_);
      break;
    case ProfileKind::log_squared: {
      const double lx = std::log(x);
      j = {0.5 * lx * lx, lx / x, (1.0 - lx) / (x * x)};
      break;
    }
    case ProfileKind::power_squared: {
      const ScalarJet q = normalized_power(x, beta_);
      j = {0.5 * q.value * q.value, q.value * q.d1, q.d1 * q.d1 + q.value * q.d2};
      break;
    }
    case ProfileKind::valanis_landel: {
      const double lx = std::log(x);
      j = {x * lx - x + 1.0, lx, 1.0 / x};
      break;
    }
  }
  j.value *= scale_;
  j.d1 *= scale_;
  j.d2 *= scale_;
  return j;
}

void Profile::check_contract(ProfileRole role, std::string_view owner) const {
  const ScalarJet at_rest = evaluate(1.0);
  const double want_slope = role == ProfileRole::hill ? 1.0 : 0.0;
  const double tol = 1e-10 * std::max(1.0, std::abs(scale_));
  if (std::abs(at_rest.value) > tol || std::abs(at_rest.d1 - want_slope) > tol) {
    std::ostringstream msg;
    msg << owner << ": profile '" << kind_name() << "' (scale " << scale_
        << ") violates f(1)=0, f'(1)=" << want_slope << " (got f(1)=" << at_rest.value
        << ", f'(1)=" << at_rest.d1 << ")";
    throw InvalidParameter(msg.str());
  }
}

std::string Profile::kind_name() const {
  for (const auto& [k, n] : kNames) {
    if (k == kind_) return n;
  }
  return "?";
}

ProfileKind Profile::kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (name == n) return k;
  }
  throw SchemaError("unknown profile kind '" + std::string(name) + "'");
}

std::vector<std::string> Profile::kind_names() {
  std::vector<std::string> out;
  for (const auto& [k, n] : kNames) out.emplace_back(n);
  return out;
}

}  // namespace stretchmat
