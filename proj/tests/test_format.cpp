#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace a2c;

namespace {

const char* kTorusDoc = R"(# flat torus
vertex v
edge a v v
edge b v v
face f : a+ b+ a- b- angles: 1/2 1/2 1/2 1/2
)";

}  // namespace

TEST_CASE("parses the torus document") {
  const Complex2 x = parse_a2c(kTorusDoc);
  REQUIRE(x.vertices().size() == 1);
  REQUIRE(x.edges().size() == 2);
  REQUIRE(x.faces().size() == 1);
  const Face& f = x.faces().front();
  REQUIRE(f.side_count() == 4);
  CHECK(f.boundary[0] == DirectedEdge{"a", true});
  CHECK(f.boundary[2] == DirectedEdge{"a", false});
  CHECK(f.corner_angles[0] == Angle::of(1, 2));
  CHECK(structurally_equal(x, builders::torus()));
}

TEST_CASE("parses a single-point complex") {
  const Complex2 x = parse_a2c("vertex v\n");
  CHECK(x.vertices().size() == 1);
  CHECK(validate(x).ok);
}

TEST_CASE("angle-sum violation is a parse error") {
  const char* doc =
      "vertex p\nvertex q\nvertex r\n"
      "edge a p q\nedge b q r\nedge c r p\n"
      "face f : a+ b+ c+ angles: 1/3 1/3 1/2\n";
  try {
    parse_a2c(doc);
    FAIL("expected angle-sum violation");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("angle-sum violation") != std::string::npos);
    CHECK(e.line() == 7);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_a2c("vertex v\nedge e v\n");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_a2c("vertex v\nvertex v\n"), ParseError);    // duplicate
  CHECK_THROWS_AS(parse_a2c("edge e v w\n"), ParseError);            // unknown ref
  CHECK_THROWS_AS(parse_a2c("vertex v\nedge e v v\nface f : e* angles: 1\n"),
                  ParseError);                                       // bad sign
}

TEST_CASE("decimal angles are rejected, not rounded") {
  const char* doc =
      "vertex v\nedge a v v\nface f : a+ a- a+ angles: 0.5 0.25 0.25\n";
  CHECK_THROWS_AS(parse_a2c(doc), ParseError);
}

TEST_CASE("non-positive angles are rejected") {
  const char* doc =
      "vertex v\nedge a v v\nedge b v v\n"
      "face f : a+ b+ a- b- angles: -1/2 1/2 1 1\n";
  try {
    parse_a2c(doc);
    FAIL("expected non-positive angle error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("non-positive") != std::string::npos);
  }
}

TEST_CASE("bare faces need the permissive mode and get equal angles") {
  const char* doc = "vertex v\nedge a v v\nedge b v v\nface f : a+ b+ a- b-\n";
  CHECK_THROWS_AS(parse_a2c(doc), ParseError);
  const Complex2 x = parse_a2c(doc, /*allow_bare_faces=*/true);
  CHECK(x.faces().front().corner_angles[0] == Angle::of(1, 2));
  CHECK(validate(x).ok);
}

TEST_CASE("serialize then parse is the identity on the corpus") {
  std::vector<Complex2> corpus = {builders::torus(),
                                  builders::cylinder(5),
                                  builders::grid(3, 2),
                                  builders::heptadisk(),
                                  builders::tetrahedron(),
                                  builders::polygon(9),
                                  testsupport::cigar()};
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    corpus.push_back(fuzz::disk(seed));
  for (const auto& x : corpus) {
    const Complex2 back = parse_a2c(serialize_a2c(x));
    CHECK(structurally_equal(x, back));
  }
}
