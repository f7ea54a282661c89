#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "support.hpp"

using namespace a2c;
using testsupport::brute_force_girth;

TEST_CASE("torus vertex link is the 4-cycle of pi/2 arcs") {
  const auto x = builders::torus();
  const LinkGraph g = build_link(x, "v");
  REQUIRE(g.node_count() == 4);
  REQUIRE(g.arc_count() == 4);
  CHECK(g.node_names == std::vector<std::string>{"a.tail", "a.head", "b.tail",
                                                 "b.head"});
  for (const auto& arc : g.arcs) CHECK(arc.length == Angle::of(1, 2));

  // The corners form the cycle a.head - b.tail - a.tail - b.head - a.head.
  std::set<std::pair<std::string, std::string>> expected{
      {"a.head", "b.tail"}, {"a.head", "b.head"},
      {"a.tail", "b.tail"}, {"a.tail", "b.head"}};
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& arc : g.arcs) {
    auto a = g.node_names[arc.node_a];
    auto b = g.node_names[arc.node_b];
    if (a > b) std::swap(a, b);
    got.insert({a, b});
  }
  CHECK(got == expected);
  for (int n = 0; n < 4; ++n) {
    int degree = 0;
    for (const auto& arc : g.arcs)
      degree += (arc.node_a == n) + (arc.node_b == n);
    CHECK(degree == 2);
  }
}

TEST_CASE("isolated vertex has an empty link") {
  const Complex2 x({"v"}, {}, {});
  const LinkGraph g = build_link(x, "v");
  CHECK(g.node_count() == 0);
  CHECK(g.arc_count() == 0);
  CHECK_THROWS_AS(build_link(x, "w"), Error);
}

TEST_CASE("heptadisk central link is a 7-cycle of pi/3 arcs") {
  const auto x = builders::heptadisk();
  const LinkGraph g = build_link(x, "c");
  REQUIRE(g.node_count() == 7);
  REQUIRE(g.arc_count() == 7);
  for (const auto& arc : g.arcs) CHECK(arc.length == Angle::of(1, 3));
  const auto cycle = shortest_cycle(g);
  REQUIRE(cycle.has_value());
  CHECK(cycle->length == Angle::of(7, 3));
  CHECK(cycle->arcs.size() == 7);
}

TEST_CASE("edge-interior links") {
  const auto torus = builders::torus();
  const LinkGraph ga = link_of_edge_interior(torus, "a");
  REQUIRE(ga.node_count() == 2);
  REQUIRE(ga.arc_count() == 2);
  for (const auto& arc : ga.arcs) CHECK(arc.length == Angle::pi());

  const auto cyl = builders::cylinder(3);
  CHECK(link_of_edge_interior(cyl, "t0").arc_count() == 1);

  const Complex2 bare({"p", "q"}, {{"e", "p", "q"}}, {});
  const LinkGraph ge = link_of_edge_interior(bare, "e");
  CHECK(ge.node_count() == 2);
  CHECK(ge.arc_count() == 0);
}

TEST_CASE("distance examples") {
  const auto torus = builders::torus();
  const LinkGraph g = build_link(torus, "v");
  const int a_head = g.find_node("a.head");
  const int a_tail = g.find_node("a.tail");
  REQUIRE(a_head >= 0);
  REQUIRE(a_tail >= 0);
  const auto d = distance(g, MetricPoint::at_node(a_head),
                          MetricPoint::at_node(a_tail));
  REQUIRE(d.has_value());
  CHECK(*d == Angle::pi());
  CHECK(*distance(g, MetricPoint::at_node(a_head),
                  MetricPoint::at_node(a_head)) == Angle::zero());

  const LinkGraph ge = link_of_edge_interior(torus, "a");
  const auto p = MetricPoint::on_arc(0, Angle::of(1, 2));
  const auto q = MetricPoint::on_arc(1, Angle::of(1, 2));
  CHECK(*distance(ge, p, q) == Angle::pi());
  CHECK(*distance(ge, p, p) == Angle::zero());
}

TEST_CASE("distance is infinite across components") {
  LinkGraph g;
  g.node_names = {"p", "q"};
  CHECK_FALSE(distance(g, MetricPoint::at_node(0), MetricPoint::at_node(1))
                  .has_value());
}

TEST_CASE("shortest cycle examples") {
  CHECK(shortest_cycle(build_link(builders::torus(), "v"))->length ==
        Angle::two_pi());

  LinkGraph loop;
  loop.node_names = {"n"};
  loop.arcs = {{0, 0, Angle::of(1, 3), "l"}};
  CHECK(shortest_cycle(loop)->length == Angle::of(1, 3));

  const auto cyl = builders::cylinder(3);
  CHECK_FALSE(shortest_cycle(build_link(cyl, "u0")).has_value());
}

TEST_CASE("girth agrees with brute-force enumeration on random multigraphs") {
  int with_cycles = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const LinkGraph g = fuzz::multigraph(seed);
    const auto fast = shortest_cycle(g);
    const auto slow = brute_force_girth(g);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(fast->length == *slow);
      ++with_cycles;
      // The witness is a genuine closed walk of the claimed length.
      Angle total = Angle::zero();
      for (int arc : fast->arcs) total += g.arcs[arc].length;
      CHECK(total == fast->length);
    }
  }
  CHECK(with_cycles > 100);  // the corpus exercises the interesting case
}

TEST_CASE("distance is a metric on each component") {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const LinkGraph g = fuzz::multigraph(seed);
    if (g.arc_count() == 0) continue;
    std::uniform_int_distribution<int> arc_dist(0, g.arc_count() - 1);
    std::uniform_int_distribution<int> num(1, 7);
    const auto random_point = [&]() {
      const int arc = arc_dist(rng);
      const Angle len = g.arcs[arc].length;
      const Angle off = len * Rat(BigInt(num(rng)), BigInt(8));
      return MetricPoint::on_arc(arc, off);
    };
    const auto p = random_point();
    const auto q = random_point();
    const auto r = random_point();
    const auto pq = distance(g, p, q);
    const auto qp = distance(g, q, p);
    REQUIRE(pq.has_value() == qp.has_value());
    if (pq) CHECK(*pq == *qp);
    CHECK(*distance(g, p, p) == Angle::zero());
    const auto qr = distance(g, q, r);
    const auto pr = distance(g, p, r);
    if (pq && qr) {
      REQUIRE(pr.has_value());
      CHECK(*pr <= *pq + *qr);
    }
  }
}

TEST_CASE("eccentricity examples") {
  // Any point on a 2*pi cycle: the antipode is at distance exactly pi.
  const auto torus = builders::torus();
  const LinkGraph g = build_link(torus, "v");
  const auto from_node =
      eccentricity(g, MetricPoint::at_node(g.find_node("a.head")));
  CHECK(from_node.finite);
  CHECK(from_node.value == Angle::pi());
  REQUIRE(from_node.witness.is_node());
  CHECK(g.node_names[from_node.witness.node] == "a.tail");

  const auto interior = eccentricity(g, MetricPoint::on_arc(0, Angle::of(1, 4)));
  CHECK(interior.value == Angle::pi());

  // Path of two pi/2 arcs, p at offset pi/4 on the first arc.
  LinkGraph path;
  path.node_names = {"A", "B", "C"};
  path.arcs = {{0, 1, Angle::of(1, 2), "x"}, {1, 2, Angle::of(1, 2), "y"}};
  const auto e = eccentricity(path, MetricPoint::on_arc(0, Angle::of(1, 4)));
  CHECK(e.value == Angle::of(3, 4));
  REQUIRE(e.witness.is_node());
  CHECK(path.node_names[e.witness.node] == "C");
}

TEST_CASE("eccentricity is infinite on disconnected graphs") {
  LinkGraph g;
  g.node_names = {"p", "q", "r"};
  g.arcs = {{0, 1, Angle::pi(), "x"}};
  CHECK_FALSE(eccentricity(g, MetricPoint::at_node(0)).finite);
}

TEST_CASE("every edge-interior link cycle has length exactly 2*pi") {
  for (const auto& x : {builders::torus(), builders::cylinder(4),
                        testsupport::genus2(), builders::tetrahedron()}) {
    for (const auto& e : x.edges()) {
      const LinkGraph g = link_of_edge_interior(x, e.id);
      const auto cycle = shortest_cycle(g);
      if (g.arc_count() >= 2) {
        REQUIRE(cycle.has_value());
        CHECK(cycle->length == Angle::two_pi());
      } else {
        CHECK_FALSE(cycle.has_value());
      }
    }
  }
}

TEST_CASE("arc lengths of a vertex link sum to the angle sum") {
  for (const auto& x : {builders::torus(), builders::heptadisk(),
                        builders::grid(2, 3), testsupport::genus2()}) {
    for (const auto& v : x.vertices()) {
      const LinkGraph g = build_link(x, v);
      Angle total = Angle::zero();
      for (const auto& arc : g.arcs) total += arc.length;
      CHECK(total == angle_sum(x, v));
    }
  }
}

TEST_CASE("straight regions cover exactly the far points") {
  // On the torus 2*pi cycle, points >= pi from a node form a single point
  // set: the antipodal node; interior spans collapse to that point.
  const LinkGraph g = build_link(builders::torus(), "v");
  const int src = g.find_node("a.head");
  const auto regions =
      points_at_distance_at_least(g, MetricPoint::at_node(src), Angle::pi());
  REQUIRE(regions.nodes.size() == 1);
  CHECK(g.node_names[regions.nodes[0]] == "a.tail");
  CHECK(regions.spans.empty());

  // From an interior point the unique far point is the antipode, an
  // isolated interior point of some arc.
  const auto interior = points_at_distance_at_least(
      g, MetricPoint::on_arc(0, Angle::of(1, 4)), Angle::pi());
  CHECK(interior.nodes.empty());
  REQUIRE(interior.spans.size() == 1);
  CHECK(interior.spans[0].lo == interior.spans[0].hi);
}
