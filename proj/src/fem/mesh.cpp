#include "stretchmat/fem/mesh.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <Eigen/LU>

#include "stretchmat/error.hpp"

namespace stretchmat::fem {

namespace {

Mat3 edge_matrix(const std::vector<Vec3>& x, const Tet& t) {
  Mat3 D;
  D.col(0) = x[t[1]] - x[t[0]];
  D.col(1) = x[t[2]] - x[t[0]];
  D.col(2) = x[t[3]] - x[t[0]];
  return D;
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

TetMesh::TetMesh(std::vector<Vec3> rest_positions, std::vector<Tet> tets, double density)
    : rest_(std::move(rest_positions)), tets_(std::move(tets)), density_(density) {
  if (rest_.empty() || tets_.empty()) throw MeshFormatError("mesh needs vertices and tets");
  if (!(density_ > 0.0)) throw MeshFormatError("density must be positive");
  const int n = num_vertices();
  for (const Vec3& p : rest_) {
    if (!p.allFinite()) throw MeshFormatError("non-finite vertex position");
  }
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  volumes_.reserve(tets_.size());
  dm_inv_.reserve(tets_.size());
  for (std::size_t e = 0; e < tets_.size(); ++e) {
    const Tet& t = tets_[e];
    for (int v : t) {
      if (v < 0 || v >= n) {
        throw MeshFormatError("tet " + std::to_string(e) + " has out-of-range vertex index");
      }
      used[static_cast<std::size_t>(v)] = true;
    }
    const Mat3 D = edge_matrix(rest_, t);
    const double vol = D.determinant() / 6.0;
    if (!(vol > 0.0)) {
      throw MeshFormatError("tet " + std::to_string(e) + " has non-positive rest volume");
    }
    volumes_.push_back(vol);
    dm_inv_.push_back(D.inverse());
    for (int k = 1; k < 4; ++k) {
      parent[find_root(parent, t[0])] = find_root(parent, t[k]);
    }
  }
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if (!used[v]) throw MeshFormatError("vertex " + std::to_string(v) + " belongs to no tet");
    const int r = find_root(parent, v);
    if (root < 0) root = r;
    if (r != root) throw MeshFormatError("mesh is not connected");
  }
}

double TetMesh::total_volume() const {
  return std::accumulate(volumes_.begin(), volumes_.end(), 0.0);
}

TetMesh TetMesh::with_density(double density) const {
  TetMesh copy = *this;
  if (!(density > 0.0)) throw MeshFormatError("density must be positive");
  copy.density_ = density;
  return copy;
}

Eigen::VectorXd TetMesh::rest_state() const {
  Eigen::VectorXd x(num_dofs());
  for (int v = 0; v < num_vertices(); ++v) x.segment<3>(3 * v) = rest_[v];
  return x;
}

Vec3 TetMesh::bbox_min() const {
  Vec3 m = rest_.front();
  for (const Vec3& p : rest_) m = m.cwiseMin(p);
  return m;
}

Vec3 TetMesh::bbox_max() const {
  Vec3 m = rest_.front();
  for (const Vec3& p : rest_) m = m.cwiseMax(p);
  return m;
}

TetMesh generate_mesh(MeshKind kind, int resolution, double size, double density) {
  if (resolution < 1) throw InvalidParameter("generate_mesh: resolution must be >= 1");
  if (!(size > 0.0)) throw InvalidParameter("generate_mesh: size must be positive");
  const int nx = kind == MeshKind::beam ? 4 * resolution : resolution;
  const int ny = resolution;
  const int nz = resolution;
  const double h = size / resolution;

  const auto vid = [&](int i, int j, int k) { return i + (nx + 1) * (j + (ny + 1) * k); };
  std::vector<Vec3> x;
  x.reserve(static_cast<std::size_t>((nx + 1) * (ny + 1) * (nz + 1)));
  for (int k = 0; k <= nz; ++k)
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i) x.emplace_back(i * h, j * h, k * h);

  // Corners by bit pattern (x = bit 0, y = bit 1, z = bit 2); each tet walks
  // from corner 0 to corner 7 along a monotone path.
  constexpr int kPaths[6][4] = {{0, 1, 3, 7}, {0, 3, 2, 7}, {0, 2, 6, 7},
                                {0, 6, 4, 7}, {0, 4, 5, 7}, {0, 5, 1, 7}};
  std::vector<Tet> tets;
  tets.reserve(static_cast<std::size_t>(6 * nx * ny * nz));
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        int corner[8];
        for (int c = 0; c < 8; ++c) corner[c] = vid(i + (c & 1), j + ((c >> 1) & 1), k + (c >> 2));
        for (const auto& path : kPaths) {
          Tet t{corner[path[0]], corner[path[1]], corner[path[2]], corner[path[3]]};
          if (edge_matrix(x, t).determinant() < 0.0) std::swap(t[1], t[2]);
          tets.push_back(t);
        }
      }
  return TetMesh(std::move(x), std::move(tets), density);
}

void write_mesh(std::ostream& out, const TetMesh& mesh) {
  out << "tetmesh v1\n";
  out << "vertices " << mesh.num_vertices() << "\n";
  out << std::setprecision(17);
  for (const Vec3& p : mesh.rest_positions()) out << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
  out << "tets " << mesh.num_tets() << "\n";
  for (const Tet& t : mesh.tets()) out << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << '\n';
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::string next(const char* what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] == '#') continue;
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      return line;
    }
    fail(std::string("unexpected end of file, expected ") + what);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw MeshFormatError("mesh line " + std::to_string(line_no_) + ": " + msg);
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

long read_count(LineReader& r, const std::string& keyword) {
  std::istringstream s(r.next(keyword.c_str()));
  std::string word;
  long count = -1;
  std::string extra;
  if (!(s >> word >> count) || word != keyword || count < 0 || (s >> extra)) {
    r.fail("expected '" + keyword + " <count>'");
  }
  return count;
}

}  // namespace

TetMesh read_mesh(std::istream& in, double density) {
  LineReader r(in);
  if (r.next("header") != "tetmesh v1") r.fail("expected header 'tetmesh v1'");
  const long nv = read_count(r, "vertices");
  std::vector<Vec3> x;
  x.reserve(static_cast<std::size_t>(nv));
  for (long i = 0; i < nv; ++i) {
    std::istringstream s(r.next("vertex"));
    Vec3 p;
    std::string extra;
    if (!(s >> p[0] >> p[1] >> p[2]) || (s >> extra)) r.fail("expected 'x y z'");
    x.push_back(p);
  }
  const long nt = read_count(r, "tets");
  std::vector<Tet> tets;
  tets.reserve(static_cast<std::size_t>(nt));
  for (long i = 0; i < nt; ++i) {
    std::istringstream s(r.next("tet"));
    Tet t;
    std::string extra;
    if (!(s >> t[0] >> t[1] >> t[2] >> t[3]) || (s >> extra)) r.fail("expected 'i0 i1 i2 i3'");
    tets.push_back(t);
  }
  return TetMesh(std::move(x), std::move(tets), density);
}

void save_mesh(const std::string& path, const TetMesh& mesh) {
  std::ofstream out(path);
  if (!out) throw MeshFormatError("cannot open '" + path + "' for writing");
  write_mesh(out, mesh);
}

TetMesh load_mesh(const std::string& path, double density) {
  std::ifstream in(path);
  if (!in) throw MeshFormatError("cannot open '" + path + "'");
  return read_mesh(in, density);
}

}  // namespace stretchmat::fem
