#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace a2c;

TEST_CASE("angle sums") {
  CHECK(angle_sum(builders::torus(), "v") == Angle::two_pi());
  CHECK(angle_sum(builders::grid(1, 1), "v0_0") == Angle::of(1, 2));
  const Complex2 lonely({"v"}, {}, {});
  CHECK(angle_sum(lonely, "v") == Angle::zero());
  CHECK_THROWS_AS(angle_sum(lonely, "zz"), Error);
}

TEST_CASE("kappa examples") {
  CHECK(kappa(builders::torus(), "v") == Angle::zero());
  CHECK(kappa(builders::grid(1, 1), "v0_0") == Angle::of(1, 2));
  // Interior vertex of the 2x2 grid: angle sum 2*pi, link a 4-cycle.
  CHECK(kappa(builders::grid(2, 2), "v1_1") == Angle::zero());
  // Heptadisk center: 2*pi - 0 - 7*pi/3.
  CHECK(kappa(builders::heptadisk(), "c") == Angle::of(-1, 3));
}

TEST_CASE("gauss-bonnet residual vanishes on disk diagrams") {
  for (int n = 3; n <= 12; ++n)
    CHECK(gauss_bonnet_check(builders::polygon(n)) == Angle::zero());
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= 4; ++k)
      CHECK(gauss_bonnet_check(builders::grid(m, k)) == Angle::zero());
  CHECK(gauss_bonnet_check(builders::heptadisk()) == Angle::zero());
}

TEST_CASE("gauss-bonnet refuses to run without the disk flag") {
  CHECK_THROWS_AS(gauss_bonnet_check(builders::torus()), Error);
  const auto report = curvature_report(builders::torus());
  CHECK_FALSE(report.gauss_bonnet_residual.has_value());
  CHECK(report.total == Angle::zero());
}

TEST_CASE("total angle equals the face supply") {
  for (const auto& x : {builders::torus(), builders::heptadisk(),
                        builders::grid(3, 2), builders::tetrahedron(),
                        testsupport::genus2()}) {
    Angle vertex_total = Angle::zero();
    for (const auto& v : x.vertices()) vertex_total += angle_sum(x, v);
    Angle face_total = Angle::zero();
    for (const auto& f : x.faces()) face_total += Angle::of(f.side_count() - 2);
    CHECK(vertex_total == face_total);
  }
}

TEST_CASE("kappa is invariant under relabeling") {
  const auto x = builders::heptadisk();
  // Shuffle identifiers with a fixed permutation.
  const auto rename = [](const std::string& id) { return "z_" + id + "_q"; };
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  std::vector<Face> fs;
  for (const auto& v : x.vertices()) vs.push_back(rename(v));
  for (const auto& e : x.edges())
    es.push_back({rename(e.id), rename(e.tail), rename(e.head)});
  for (const auto& f : x.faces()) {
    Face nf;
    nf.id = rename(f.id);
    for (const auto& d : f.boundary) nf.boundary.push_back({rename(d.edge), d.forward});
    nf.corner_angles = f.corner_angles;
    fs.push_back(std::move(nf));
  }
  std::mt19937_64 rng(11);
  std::shuffle(vs.begin(), vs.end(), rng);
  std::shuffle(es.begin(), es.end(), rng);
  std::shuffle(fs.begin(), fs.end(), rng);
  const Complex2 y(std::move(vs), std::move(es), std::move(fs),
                   x.is_disk_diagram());
  REQUIRE(validate(y).ok);
  for (const auto& v : x.vertices()) CHECK(kappa(x, v) == kappa(y, rename(v)));
  CHECK(gauss_bonnet_check(y) == Angle::zero());
}
