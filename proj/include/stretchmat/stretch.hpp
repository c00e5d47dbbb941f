#pragma once

#include <array>
#include <memory>
#include <string>

#include <Eigen/Core>

namespace stretchmat {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// The three principal stretches (singular values of F). Rest is (1, 1, 1).
class StretchTriple {
 public:
  constexpr StretchTriple() = default;
  constexpr StretchTriple(double l1, double l2, double l3) : v_{l1, l2, l3} {}
  explicit StretchTriple(const Vec3& v) : v_{v[0], v[1], v[2]} {}

  static constexpr StretchTriple rest() { return {1.0, 1.0, 1.0}; }

  constexpr double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  constexpr double& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }

  double l1() const { return v_[0]; }
  double l2() const { return v_[1]; }
  double l3() const { return v_[2]; }

  /// J = l1 * l2 * l3.
  double volume_ratio() const { return v_[0] * v_[1] * v_[2]; }
  bool all_positive() const { return v_[0] > 0.0 && v_[1] > 0.0 && v_[2] > 0.0; }
  bool is_finite() const;

  Vec3 as_vector() const { return {v_[0], v_[1], v_[2]}; }

  friend bool operator==(const StretchTriple&, const StretchTriple&) = default;

 private:
  std::array<double, 3> v_{1.0, 1.0, 1.0};
};

/// Energy density with its stretch-space gradient (principal PK1 stresses)
/// and stretch-space Hessian.
struct Evaluation {
  double energy = 0.0;
  Vec3 gradient = Vec3::Zero();
  Mat3 hessian = Mat3::Zero();
};

enum class StretchDomain { all_positive, unrestricted };

/// An isotropic energy density written as a symmetric function of the
/// principal stretches. Catalog materials, filtered materials and composed
/// materials all implement this; FEM code only sees this interface.
///
/// Implementations are immutable, so instances can be shared across threads.
class StretchEnergy {
 public:
  virtual ~StretchEnergy() = default;

  /// Throws DomainViolation when `s` is outside domain().
  double energy(const StretchTriple& s) const;
  Evaluation evaluate(const StretchTriple& s) const;
  Vec3 gradient(const StretchTriple& s) const { return evaluate(s).gradient; }
  Mat3 hessian(const StretchTriple& s) const { return evaluate(s).hessian; }

  bool in_domain(const StretchTriple& s) const;

  virtual StretchDomain domain() const = 0;
  virtual std::string name() const = 0;

  /// Characteristic stress magnitude (Pa), used to scale tolerances.
  virtual double stress_scale() const = 0;

 protected:
  virtual double do_energy(const StretchTriple& s) const = 0;
  virtual Evaluation do_evaluate(const StretchTriple& s) const = 0;
};

using EnergyPtr = std::shared_ptr<const StretchEnergy>;

}  // namespace stretchmat
