#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace a2c;

namespace {

bool has_violation(const ValidationReport& r, const std::string& rule) {
  for (const auto& v : r.violations)
    if (v.rule == rule) return true;
  return false;
}

}  // namespace

TEST_CASE("torus complex validates cleanly") {
  const auto x = builders::torus();
  const auto report = validate(x);
  CHECK(report.ok);
  CHECK(report.violations.empty());
}

TEST_CASE("single point complex is valid") {
  const Complex2 x({"v"}, {}, {});
  CHECK(validate(x).ok);
}

TEST_CASE("boundary vertex consistency is enforced") {
  // face a+ b+ where head(a) != tail(b).
  std::vector<VertexId> vs{"p", "q", "r"};
  std::vector<Edge> es{{"a", "p", "q"}, {"b", "r", "p"}};
  Face f;
  f.id = "f";
  f.boundary = {{"a", true}, {"b", true}};
  f.corner_angles = {Angle::of(1, 4), Angle::of(1, 4)};
  const Complex2 x(std::move(vs), std::move(es), {std::move(f)});
  const auto report = validate(x);
  CHECK_FALSE(report.ok);
  CHECK(has_violation(report, "boundary-not-consistent"));
}

TEST_CASE("disconnected complexes are flagged") {
  const Complex2 x({"p", "q"}, {}, {});
  const auto report = validate(x);
  CHECK_FALSE(report.ok);
  CHECK(has_violation(report, "not-connected"));
}

TEST_CASE("angle rules are enforced") {
  std::vector<VertexId> vs{"p", "q", "r"};
  std::vector<Edge> es{{"a", "p", "q"}, {"b", "q", "r"}, {"c", "r", "p"}};
  Face f;
  f.id = "f";
  f.boundary = {{"a", true}, {"b", true}, {"c", true}};
  f.corner_angles = {Angle::of(1, 3), Angle::of(1, 3), Angle::of(1, 2)};
  const Complex2 x(std::move(vs), std::move(es), {std::move(f)});
  const auto report = validate(x);
  CHECK_FALSE(report.ok);
  CHECK(has_violation(report, "angle-sum"));
}

TEST_CASE("validation enumerates every failure, not just the first") {
  std::vector<VertexId> vs{"p", "p", "q"};
  std::vector<Edge> es{{"a", "p", "zz"}};
  Face f;
  f.id = "f";
  f.boundary = {{"missing", true}};
  f.corner_angles = {};
  const Complex2 x(std::move(vs), std::move(es), {std::move(f)});
  const auto report = validate(x);
  CHECK(has_violation(report, "duplicate-id"));
  CHECK(has_violation(report, "unknown-vertex-ref"));
  CHECK(has_violation(report, "unknown-edge-ref"));
  CHECK(report.violations.size() >= 3);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(builders::torus()) == 0);
  CHECK(euler_characteristic(builders::grid(1, 1)) == 1);
  CHECK(euler_characteristic(testsupport::cycle_graph(3)) == 0);
  CHECK(euler_characteristic(builders::heptadisk()) == 1);
  CHECK(euler_characteristic(builders::tetrahedron()) == 2);
}

TEST_CASE("adjacency census") {
  const auto torus = builders::torus();
  CHECK(adjacency_census(torus, "a") == 2);
  CHECK(adjacency_census(torus, "b") == 2);

  const auto cyl = builders::cylinder(3);
  CHECK(adjacency_census(cyl, "t0") == 1);
  CHECK(adjacency_census(cyl, "s0") == 2);

  const Complex2 bare({"p", "q"}, {{"e", "p", "q"}}, {});
  CHECK(adjacency_census(bare, "e") == 0);

  CHECK_THROWS_AS(adjacency_census(torus, "zz"), Error);
}

TEST_CASE("census totals match boundary lengths") {
  for (const auto& x :
       {builders::torus(), builders::cylinder(4), builders::grid(3, 2),
        builders::heptadisk(), builders::tetrahedron()}) {
    int census_total = 0;
    for (const auto& e : x.edges()) census_total += adjacency_census(x, e.id);
    CHECK(census_total == testsupport::total_boundary_length(x));
  }
}
