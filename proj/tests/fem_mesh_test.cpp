#include <gtest/gtest.h>

#include <sstream>

#include "stretchmat/error.hpp"
#include "stretchmat/fem/mesh.hpp"

using namespace stretchmat;
using namespace stretchmat::fem;

TEST(GenerateMesh, CubeCounts) {
  const TetMesh one = generate_mesh(MeshKind::cube, 1);
  EXPECT_EQ(one.num_vertices(), 8);
  EXPECT_EQ(one.num_tets(), 6);
  const TetMesh two = generate_mesh(MeshKind::cube, 2);
  EXPECT_EQ(two.num_vertices(), 27);
  EXPECT_EQ(two.num_tets(), 48);
}

TEST(GenerateMesh, VolumesAndBounds) {
  for (int n : {1, 2, 3}) {
    const TetMesh cube = generate_mesh(MeshKind::cube, n, 0.5);
    EXPECT_NEAR(cube.total_volume(), 0.125, 1e-12);
    for (double v : cube.rest_volumes()) EXPECT_GT(v, 0.0);
  }
  const TetMesh beam = generate_mesh(MeshKind::beam, 2, 0.25);
  EXPECT_EQ(beam.num_tets(), 8 * 2 * 2 * 6);
  EXPECT_NEAR(beam.total_volume(), 4 * 0.25 * 0.25 * 0.25, 1e-12);
  EXPECT_LE((beam.bbox_max() - Vec3(1.0, 0.25, 0.25)).norm(), 1e-14);
  EXPECT_LE(beam.bbox_min().norm(), 1e-14);
}

TEST(GenerateMesh, RejectsBadArguments) {
  EXPECT_THROW(generate_mesh(MeshKind::cube, 0), InvalidParameter);
  EXPECT_THROW(generate_mesh(MeshKind::cube, 2, -1.0), InvalidParameter);
  EXPECT_THROW(generate_mesh(MeshKind::cube, 2, 1.0, 0.0), MeshFormatError);
}

TEST(MeshIo, RoundTrip) {
  const TetMesh mesh = generate_mesh(MeshKind::beam, 1, 0.3);
  std::stringstream buf;
  write_mesh(buf, mesh);
  const TetMesh back = read_mesh(buf, 500.0);
  EXPECT_EQ(back.tets(), mesh.tets());
  ASSERT_EQ(back.num_vertices(), mesh.num_vertices());
  for (int i = 0; i < mesh.num_vertices(); ++i) {
    EXPECT_EQ(back.rest_positions()[i], mesh.rest_positions()[i]);
  }
  EXPECT_EQ(back.density(), 500.0);
}

TEST(MeshIo, CommentsAreIgnored) {
  std::istringstream in(
      "# unit tet\ntetmesh v1\nvertices 4\n0 0 0\n1 0 0\n# mid\n0 1 0\n0 0 1\ntets 1\n0 1 2 3\n");
  const TetMesh m = read_mesh(in);
  EXPECT_EQ(m.num_tets(), 1);
  EXPECT_NEAR(m.total_volume(), 1.0 / 6.0, 1e-15);
}

TEST(MeshIo, MalformedInput) {
  const char* bad[] = {
      "",
      "tetmesh v2\nvertices 0\ntets 0\n",
      "tetmesh v1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\ntets 1\n0 1 2 3\n",
      "tetmesh v1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\ntets 1\n0 1 2 4\n",
      "tetmesh v1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\ntets 1\n0 1 2\n",
      "tetmesh v1\nvertices 4\n0 0 0\n1 0 x\n0 1 0\n0 0 1\ntets 1\n0 1 2 3\n",
  };
  for (const char* text : bad) {
    std::istringstream in(text);
    EXPECT_THROW(read_mesh(in), MeshFormatError) << text;
  }
}

TEST(TetMeshCtor, RejectsInvertedAndDegenerate) {
  const std::vector<Vec3> x{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_NO_THROW(TetMesh(x, {{0, 1, 2, 3}}));
  EXPECT_THROW(TetMesh(x, {{0, 2, 1, 3}}), MeshFormatError);
  EXPECT_THROW(TetMesh({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 0, 1}}, {{0, 1, 2, 3}}),
               MeshFormatError);
  EXPECT_THROW(TetMesh(x, {{0, 1, 2, -1}}), MeshFormatError);
}

TEST(MeshIo, MissingFile) {
  EXPECT_THROW(load_mesh("/nonexistent/mesh.txt"), MeshFormatError);
}
