#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stretchmat {

/// Value and first two derivatives of a scalar function at a point.
struct ScalarJet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Closed registry of scalar profile functions used by the Hill and
/// Valanis-Landel families. All are defined on x > 0.
enum class ProfileKind {
  log,            // log x
  power,          // (x^beta - 1) / beta
  log_squared,    // log^2(x) / 2
  power_squared,  // ((x^beta - 1) / beta)^2 / 2
  valanis_landel  // x log x - x + 1
};

/// What a family requires of its profile at x = 1.
enum class ProfileRole {
  hill,  // f(1) = 0, f'(1) = 1
  flat   // f(1) = 0, f'(1) = 0
};

class Profile {
 public:
  Profile() = default;
  Profile(ProfileKind kind, double beta = 1.0, double scale = 1.0);

  static Profile log() { return Profile(ProfileKind::log); }
  static Profile power(double beta) { return Profile(ProfileKind::power, beta); }
  static Profile log_squared(double scale = 1.0) {
    return Profile(ProfileKind::log_squared, 1.0, scale);
  }
  static Profile power_squared(double beta, double scale = 1.0) {
    return Profile(ProfileKind::power_squared, beta, scale);
  }
  static Profile valanis_landel(double scale = 1.0) {
    return Profile(ProfileKind::valanis_landel, 1.0, scale);
  }

  ProfileKind kind() const { return kind_; }
  double beta() const { return beta_; }
  double scale() const { return scale_; }
  bool uses_beta() const;

  Profile scaled(double factor) const { return Profile(kind_, beta_, scale_ * factor); }

  ScalarJet evaluate(double x) const;
  double operator()(double x) const { return evaluate(x).value; }

  /// Throws InvalidParameter if the profile breaks the contract of `role`
  /// at x = 1 (checked numerically within 1e-10).
  void check_contract(ProfileRole role, std::string_view owner) const;

  std::string kind_name() const;
  static ProfileKind kind_from_name(std::string_view name);
  static std::vector<std::string> kind_names();

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  ProfileKind kind_ = ProfileKind::log;
  double beta_ = 1.0;
  double scale_ = 1.0;
};

}  // namespace stretchmat
