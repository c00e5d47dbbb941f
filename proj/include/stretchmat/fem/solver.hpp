#pragma once

#include <optional>
#include <vector>

#include "stretchmat/fem/system.hpp"

namespace stretchmat::fem {

struct SolverConfig {
  /// Infinity-norm bound on the free-coordinate force residual (N). When
  /// unset: 1e-8 * E * L^2 with E from the material's Lamé parameters and
  /// L = (mesh volume)^(1/3).
  std::optional<double> tolerance;
  int max_iterations = 100;
  int max_line_search_halvings = 40;
  DerivativeMode derivatives = DerivativeMode::analytic;
  /// Starting positions (all 3n coordinates). Constrained coordinates are
  /// overwritten by the boundary condition. Defaults to the rest shape.
  std::optional<Eigen::VectorXd> initial_positions;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, std::vector<double> residual_history)
      : Error(ErrorKind::convergence, what), history_(std::move(residual_history)) {}
  const std::vector<double>& residual_history() const { return history_; }

 private:
  std::vector<double> history_;
};

struct QuasiStaticResult {
  Eigen::VectorXd positions;
  /// Internal force -dE/dx at the solution (all coordinates). On constrained
  /// coordinates it balances the reaction exerted by the constraint.
  Eigen::VectorXd internal_force;
  double energy = 0.0;
  int iterations = 0;
  std::vector<double> residual_history;

  /// Sum of the internal forces on a vertex set.
  Vec3 reaction(const std::vector<int>& vertices) const {
    return resultant_force(internal_force, vertices);
  }
};

double default_tolerance(const TetMesh& mesh, const StretchEnergy& material);

/// Newton's method on the total energy over free coordinates. Element
/// stiffnesses are projected to PSD, and a backtracking line search halves
/// the step on inversion, domain errors or energy increase.
QuasiStaticResult solve_quasistatic(const TetMesh& mesh, const StretchEnergy& material,
                                    const BoundaryCondition& bc, const SolverConfig& config = {});

}  // namespace stretchmat::fem
