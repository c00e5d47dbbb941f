#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "stretchmat/stretch.hpp"

namespace stretchmat::fem {

using Tet = std::array<int, 4>;

/// Linear tetrahedral mesh in its rest configuration.
class TetMesh {
 public:
  /// Validates indices, positive rest volumes and connectivity; throws
  /// MeshFormatError otherwise. Tets with negative orientation are rejected
  /// rather than silently flipped.
  TetMesh(std::vector<Vec3> rest_positions, std::vector<Tet> tets, double density = 1000.0);

  int num_vertices() const { return static_cast<int>(rest_.size()); }
  int num_tets() const { return static_cast<int>(tets_.size()); }
  int num_dofs() const { return 3 * num_vertices(); }

  const std::vector<Vec3>& rest_positions() const { return rest_; }
  const std::vector<Tet>& tets() const { return tets_; }
  const std::vector<double>& rest_volumes() const { return volumes_; }
  /// Inverse of [x1 - x0, x2 - x0, x3 - x0] at rest, per tet.
  const std::vector<Mat3>& rest_shape_inverses() const { return dm_inv_; }
  double density() const { return density_; }

  double total_volume() const;
  TetMesh with_density(double density) const;

  /// Rest positions flattened to [x0 y0 z0 x1 ...].
  Eigen::VectorXd rest_state() const;

  Vec3 bbox_min() const;
  Vec3 bbox_max() const;

 private:
  std::vector<Vec3> rest_;
  std::vector<Tet> tets_;
  std::vector<double> volumes_;
  std::vector<Mat3> dm_inv_;
  double density_;
};

enum class MeshKind { cube, beam };

/// Axis-aligned grid, six tetrahedra per cell (Kuhn split along the cell
/// diagonal). A cube has resolution^3 cells of edge size/resolution; a beam
/// has 4n x n x n cells spanning 4*size x size x size.
TetMesh generate_mesh(MeshKind kind, int resolution, double size = 1.0, double density = 1000.0);

/// ASCII format:
///   tetmesh v1
///   vertices N
///   x y z           (N lines)
///   tets M
///   i0 i1 i2 i3     (M lines, 0-based)
/// Lines starting with '#' are ignored.
void write_mesh(std::ostream& out, const TetMesh& mesh);
TetMesh read_mesh(std::istream& in, double density = 1000.0);

void save_mesh(const std::string& path, const TetMesh& mesh);
TetMesh load_mesh(const std::string& path, double density = 1000.0);

}  // namespace stretchmat::fem
