#include "stretchmat/fem/solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/SparseCholesky>

#include "stretchmat/lame.hpp"

namespace stretchmat::fem {

double default_tolerance(const TetMesh& mesh, const StretchEnergy& material) {
  double stiffness = material.stress_scale();
  try {
    const LameParams l = extract_lame(material, LameMethod::analytic, RestCheck::report);
    stiffness = std::abs(lame_to_moduli(l).E);
  } catch (const Error&) {
    // keep the stress scale
  }
  const double length = std::cbrt(mesh.total_volume());
  return 1e-8 * stiffness * length * length;
}

namespace {

Eigen::SparseMatrix<double> restrict_to(const Eigen::SparseMatrix<double>& K,
                                        const std::vector<int>& full_to_free, int num_free) {
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(K.nonZeros()));
  for (int col = 0; col < K.outerSize(); ++col) {
    const int c = full_to_free[col];
    if (c < 0) continue;
    for (Eigen::SparseMatrix<double>::InnerIterator it(K, col); it; ++it) {
      const int r = full_to_free[it.row()];
      if (r >= 0) triplets.emplace_back(r, c, it.value());
    }
  }
  Eigen::SparseMatrix<double> out(num_free, num_free);
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

Eigen::VectorXd gather(const Eigen::VectorXd& v, const std::vector<int>& idx) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[idx[i]];
  return out;
}

// Solves K dx = rhs, shifting the diagonal until the factorization succeeds.
Eigen::VectorXd newton_direction(Eigen::SparseMatrix<double> K, const Eigen::VectorXd& rhs) {
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
  ldlt.compute(K);
  if (ldlt.info() == Eigen::Success) {
    Eigen::VectorXd dx = ldlt.solve(rhs);
    if (ldlt.info() == Eigen::Success && dx.allFinite()) return dx;
  }
  const double mean_diag = std::max(K.diagonal().cwiseAbs().mean(), 1e-300);
  for (double shift = 1e-10 * mean_diag; shift < 1e3 * mean_diag; shift *= 10.0) {
    Eigen::SparseMatrix<double> Ks = K;
    for (int i = 0; i < Ks.rows(); ++i) Ks.coeffRef(i, i) += shift;
    ldlt.compute(Ks);
    if (ldlt.info() != Eigen::Success) continue;
    Eigen::VectorXd dx = ldlt.solve(rhs);
    if (dx.allFinite()) return dx;
  }
  return rhs / mean_diag;
}

[[noreturn]] void give_up(const std::string& why, const std::vector<double>& history) {
  std::ostringstream msg;
  msg << "quasi-static solve failed: " << why << "; residual history:";
  for (double r : history) msg << ' ' << r;
  throw NoConvergence(msg.str(), history);
}

}  // namespace

QuasiStaticResult solve_quasistatic(const TetMesh& mesh, const StretchEnergy& material,
                                    const BoundaryCondition& bc, const SolverConfig& config) {
  if (bc.empty()) throw InvalidParameter("solve_quasistatic: boundary condition is empty");
  const double tol = config.tolerance.value_or(default_tolerance(mesh, material));

  Eigen::VectorXd x = config.initial_positions.value_or(mesh.rest_state());
  if (x.size() != mesh.num_dofs()) {
    throw InvalidParameter("solve_quasistatic: initial positions have the wrong size");
  }
  bc.apply(x);

  const std::vector<int> free = bc.free_dofs(mesh.num_dofs());
  std::vector<int> full_to_free(static_cast<std::size_t>(mesh.num_dofs()), -1);
  for (std::size_t i = 0; i < free.size(); ++i) full_to_free[free[i]] = static_cast<int>(i);
  const int nf = static_cast<int>(free.size());

  AssemblyOptions opts;
  opts.derivatives = config.derivatives;
  opts.project_to_psd = true;
  AssemblyOptions force_only = opts;
  force_only.stiffness = false;

  QuasiStaticResult result;
  SystemMatrices sys = assemble(mesh, material, x, opts);
  for (int iter = 0;; ++iter) {
    const Eigen::VectorXd f_free = gather(sys.force, free);
    const double residual = nf == 0 ? 0.0 : f_free.cwiseAbs().maxCoeff();
    result.residual_history.push_back(residual);
    if (residual <= tol) {
      result.positions = x;
      result.internal_force = sys.force;
      result.energy = sys.energy;
      result.iterations = iter;
      return result;
    }
    if (iter >= config.max_iterations) {
      give_up("no convergence after " + std::to_string(config.max_iterations) + " iterations",
              result.residual_history);
    }

    const Eigen::SparseMatrix<double> K = restrict_to(sys.stiffness, full_to_free, nf);
    Eigen::VectorXd dx = newton_direction(K, f_free);
    double slope = -f_free.dot(dx);  // directional derivative of E
    if (!(slope < 0.0)) {
      dx = f_free;
      slope = -f_free.squaredNorm();
    }

    bool accepted = false;
    double step = 1.0;
    for (int k = 0; k <= config.max_line_search_halvings; ++k, step *= 0.5) {
      Eigen::VectorXd x_try = x;
      for (int i = 0; i < nf; ++i) x_try[free[i]] += step * dx[i];
      if (!(min_volume_ratio(mesh, x_try) > 0.0)) continue;
      double e_try = 0.0;
      try {
        e_try = total_energy(mesh, material, x_try);
      } catch (const DomainViolation&) {
        continue;
      }
      const bool decrease = e_try <= sys.energy + 1e-4 * step * slope;
      // Near convergence energy differences drown in round-off; fall back on
      // the residual there.
      const double noise = 64.0 * std::numeric_limits<double>::epsilon() *
                           std::max(std::abs(sys.energy), std::abs(e_try));
      if (!decrease && e_try - sys.energy > noise) continue;
      SystemMatrices trial = assemble(mesh, material, x_try, decrease ? opts : force_only);
      if (!decrease) {
        const double r_try = gather(trial.force, free).cwiseAbs().maxCoeff();
        if (!(r_try < residual)) continue;
        trial = assemble(mesh, material, x_try, opts);
      }
      x = std::move(x_try);
      sys = std::move(trial);
      accepted = true;
      break;
    }
    if (!accepted) give_up("line search found no admissible step", result.residual_history);
  }
}

}  // namespace stretchmat::fem
