#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace a2c;

TEST_CASE("flat torus is nonpositive only, with girth exactly 2*pi") {
  const auto report = classify(builders::torus());
  CHECK(report.classification == CurvatureClass::kNonpositiveOnly);
  REQUIRE(report.rows.size() == 1);
  REQUIRE(report.rows[0].girth.has_value());
  CHECK(*report.rows[0].girth == Angle::two_pi());
  CHECK(*report.rows[0].margin == Angle::zero());
  CHECK(report.rows[0].witness_arcs.size() == 4);
  CHECK(report.passes(/*strict=*/false));
  CHECK_FALSE(report.passes(/*strict=*/true));
}

TEST_CASE("heptadisk is negative with central girth 7*pi/3") {
  const auto report = classify(builders::heptadisk());
  CHECK(report.classification == CurvatureClass::kNegative);
  for (const auto& row : report.rows) {
    if (row.vertex == "c") {
      REQUIRE(row.girth.has_value());
      CHECK(*row.girth == Angle::of(7, 3));
      CHECK(*row.margin == Angle::of(1, 3));
    } else {
      CHECK_FALSE(row.girth.has_value());  // rim links are forests
    }
  }
}

TEST_CASE("pillow of two triangles fails with a bigon witness") {
  const auto report = classify(testsupport::triangle_pillow());
  CHECK(report.classification == CurvatureClass::kFails);
  bool found_bigon = false;
  for (const auto& row : report.rows) {
    REQUIRE(row.girth.has_value());
    CHECK(*row.girth == Angle::of(2, 3));  // pi/3 + pi/3 < 2*pi
    if (row.witness_arcs.size() == 2) found_bigon = true;
  }
  CHECK(found_bigon);
}

TEST_CASE("forest links classify negative vacuously") {
  CHECK(classify(builders::cylinder(3)).classification ==
        CurvatureClass::kNegative);
  CHECK(classify(builders::grid(1, 1)).classification ==
        CurvatureClass::kNegative);
  CHECK(classify(testsupport::path_graph(2)).classification ==
        CurvatureClass::kNegative);
}

TEST_CASE("tetrahedron fails: link triangles of length pi") {
  const auto report = classify(builders::tetrahedron());
  CHECK(report.classification == CurvatureClass::kFails);
  for (const auto& row : report.rows) {
    REQUIRE(row.girth.has_value());
    CHECK(*row.girth == Angle::pi());
    CHECK(row.witness_arcs.size() == 3);
  }
}

TEST_CASE("negative implies nonpositive passes") {
  for (const auto& x : {builders::heptadisk(), builders::cylinder(6),
                        testsupport::genus2()}) {
    const auto report = classify(x);
    if (report.classification == CurvatureClass::kNegative)
      CHECK(report.passes(/*strict=*/false));
  }
}

TEST_CASE("girth responds to corner angle redistribution") {
  // Shift weight between two corners of the torus face; the link 4-cycle
  // total stays 2*pi (it uses all four corners), so the class is stable,
  // but a skewed assignment on the pillow moves its bigon girth.
  std::vector<Face> faces;
  Face f;
  f.id = "f";
  f.boundary = {{"a", true}, {"b", true}, {"a", false}, {"b", false}};
  f.corner_angles = {Angle::of(2, 3), Angle::of(1, 3), Angle::of(2, 3),
                     Angle::of(1, 3)};
  const Complex2 skew({"v"}, {{"a", "v", "v"}, {"b", "v", "v"}},
                      {std::move(f)});
  REQUIRE(validate(skew).ok);
  const auto report = classify(skew);
  REQUIRE(report.rows[0].girth.has_value());
  CHECK(*report.rows[0].girth == Angle::two_pi());
  CHECK(report.classification == CurvatureClass::kNonpositiveOnly);
}

TEST_CASE("genus-2 surface complex is negative") {
  const auto report = classify(testsupport::genus2());
  CHECK(report.classification == CurvatureClass::kNegative);
  REQUIRE(report.rows.size() == 1);
  REQUIRE(report.rows[0].girth.has_value());
  CHECK(*report.rows[0].girth == Angle::of(6));  // 8 arcs of 3*pi/4
}
