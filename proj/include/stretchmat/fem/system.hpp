#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "stretchmat/error.hpp"
#include "stretchmat/fem/element.hpp"
#include "stretchmat/fem/mesh.hpp"

namespace stretchmat::fem {

/// A material failure (domain violation, inversion) tagged with the element.
class ElementFailure : public DomainViolation {
 public:
  ElementFailure(int element, const std::string& what)
      : DomainViolation("element " + std::to_string(element) + ": " + what), element_(element) {}
  int element() const { return element_; }

 private:
  int element_;
};

/// Prescribed values for a subset of the 3n coordinates.
class BoundaryCondition {
 public:
  void clamp_vertex(int vertex, const Vec3& position);
  void clamp_dof(int dof, double value);

  bool empty() const { return dofs_.empty(); }
  const std::map<int, double>& constrained_dofs() const { return dofs_; }
  bool is_constrained(int dof) const { return dofs_.count(dof) != 0; }
  std::vector<int> constrained_vertices() const;
  std::vector<int> free_dofs(int num_dofs) const;

  /// Overwrites the constrained coordinates of `x`.
  void apply(Eigen::VectorXd& x) const;

 private:
  std::map<int, double> dofs_;
};

struct AssemblyOptions {
  DerivativeMode derivatives = DerivativeMode::analytic;
  bool stiffness = true;
  /// Clamp negative eigenvalues of each 12x12 element stiffness to zero.
  bool project_to_psd = false;
};

struct SystemMatrices {
  double energy = 0.0;
  /// -dE/dx over all 3n coordinates (N).
  Eigen::VectorXd force;
  /// d^2E/dx^2 (N/m), symmetric.
  Eigen::SparseMatrix<double> stiffness;
  /// rho * V / 4 per incident vertex, repeated for x, y, z (kg).
  Eigen::VectorXd lumped_mass;
};

/// sum_e V_e psi(F_e). Throws ElementFailure when an element leaves the
/// material's domain.
double total_energy(const TetMesh& mesh, const StretchEnergy& material, const Eigen::VectorXd& x);

/// Smallest det(F_e) over all elements; <= 0 means some element inverted.
double min_volume_ratio(const TetMesh& mesh, const Eigen::VectorXd& x);

Eigen::VectorXd lumped_mass(const TetMesh& mesh);

SystemMatrices assemble(const TetMesh& mesh, const StretchEnergy& material,
                        const Eigen::VectorXd& x, const AssemblyOptions& options = {});

/// Sum of the internal force vectors on `vertices`.
Vec3 resultant_force(const Eigen::VectorXd& force, const std::vector<int>& vertices);

}  // namespace stretchmat::fem
