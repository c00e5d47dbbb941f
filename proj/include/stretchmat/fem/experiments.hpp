#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stretchmat/fem/modal.hpp"
#include "stretchmat/fem/solver.hpp"

namespace stretchmat::fem {

struct StretchTestConfig {
  int resolution = 4;
  double d_min = 1.0;
  double d_max = 2.0;
  /// Number of distances, evenly spaced from d_min to d_max inclusive.
  int steps = 11;
  /// Face vertices keep only their x coordinate prescribed.
  bool slide = false;
  DerivativeMode derivatives = DerivativeMode::analytic;
  std::optional<double> tolerance;
  int max_iterations = 100;

  void validate() const;
};

struct CurvePoint {
  double distance = 0.0;
  /// Force the constraint exerts on the max-x face along +x (N). Positive
  /// in tension, negative in compression.
  double force = 0.0;
  int iterations = 0;
};

using WarningSink = std::function<void(const std::string&)>;

/// Unit cube clamped on its two x faces, pulled to each distance in turn.
/// Each solve starts from the previous equilibrium stretched affinely to
/// the new distance. A distance whose solve fails is skipped and reported
/// through `warn`; the next one restarts from the last good state.
std::vector<CurvePoint> run_stretch_test(const StretchEnergy& material,
                                         const StretchTestConfig& config,
                                         const WarningSink& warn = {});

/// `distance,force` header then one row per point, 17 significant digits.
void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& curve);

struct ModesComparison {
  /// k lowest frequencies (Hz) per material.
  std::vector<double> frequencies_a;
  std::vector<double> frequencies_b;
  /// ||K_a - K_b||_F / ||K_b||_F for the full rest stiffness.
  double stiffness_difference = 0.0;
};

/// Both materials on `mesh` with its min-x face clamped.
ModesComparison compare_modes(const TetMesh& mesh, const StretchEnergy& a,
                              const StretchEnergy& b, int k,
                              DerivativeMode mode = DerivativeMode::analytic);

}  // namespace stretchmat::fem
