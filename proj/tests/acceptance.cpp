// Acceptance suite: ten executable criteria over the canonical and seeded
// corpora, each printed as a single PASS/FAIL line. All thresholds are
// exact rational comparisons unless stated otherwise.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "a2c/a2c.hpp"
#include "support.hpp"

using namespace a2c;

namespace {

struct Criterion {
  int number;
  std::string name;
  std::function<bool(std::string&)> run;
};

std::vector<Complex2> disk_corpus() {
  std::vector<Complex2> corpus;
  for (int n = 3; n <= 12; ++n) corpus.push_back(builders::polygon(n));
  for (int m = 1; m <= 6; ++m)
    for (int k = 1; k <= 6; ++k) corpus.push_back(builders::grid(m, k));
  corpus.push_back(builders::heptadisk());
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    corpus.push_back(fuzz::disk(seed));
  return corpus;
}

std::vector<Complex2> ring_corpus() {
  std::vector<Complex2> corpus;
  for (int k = 3; k <= 12; ++k) corpus.push_back(builders::cylinder(k));
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    corpus.push_back(fuzz::ring(seed));
  return corpus;
}

std::vector<Complex2> no_free_face_corpus() {
  std::vector<Complex2> corpus{builders::torus(), testsupport::klein(),
                               testsupport::genus2()};
  int produced = 0;
  for (std::uint64_t seed = 0; seed < 200 && produced < 12; ++seed) {
    if (auto x = fuzz::census2_complex(seed)) {
      corpus.push_back(std::move(*x));
      ++produced;
    }
  }
  return corpus;
}

bool criterion_gauss_bonnet(std::string& detail) {
  int checked = 0;
  for (int n = 3; n <= 12; ++n) {
    if (gauss_bonnet_check(builders::polygon(n)) != Angle::zero()) {
      detail = "polygon:" + std::to_string(n) + " has nonzero residual";
      return false;
    }
    ++checked;
  }
  for (int m = 1; m <= 6; ++m)
    for (int k = 1; k <= 6; ++k) {
      if (gauss_bonnet_check(builders::grid(m, k)) != Angle::zero()) {
        detail = "grid:" + std::to_string(m) + "," + std::to_string(k) +
                 " has nonzero residual";
        return false;
      }
      ++checked;
    }
  detail = std::to_string(checked) + " disk diagrams, residual exactly 0";
  return true;
}

bool criterion_theorem_1_1(std::string& detail) {
  const auto corpus = disk_corpus();
  for (const auto& x : corpus) {
    if (!validate(x).ok) {
      detail = x.source() + " failed validation";
      return false;
    }
    if (classify(x).classification == CurvatureClass::kFails) {
      detail = x.source() + " unexpectedly fails the weight test";
      return false;
    }
    if (collapse_all(x).terminal_class != TerminalClass::kPoint) {
      detail = x.source() + " did not collapse to a point";
      return false;
    }
  }
  detail = std::to_string(corpus.size()) +
           " simply connected weight-test passers all collapse to a point";
  return true;
}

bool criterion_theorem_1_2(std::string& detail) {
  const auto corpus = ring_corpus();
  for (const auto& x : corpus) {
    if (classify(x).classification != CurvatureClass::kNegative) {
      detail = x.source() + " is not negatively curved";
      return false;
    }
    if (!h1(x).is_z()) {
      detail = x.source() + " does not have H1 = Z";
      return false;
    }
    if (collapse_all(x).terminal_class != TerminalClass::kCycle) {
      detail = x.source() + " did not collapse to a cycle";
      return false;
    }
  }
  detail = std::to_string(corpus.size()) +
           " negative-class rings all collapse to a cycle";
  return true;
}

bool criterion_sharpness(std::string& detail) {
  const auto torus = builders::torus();
  const auto report = classify(torus);
  if (report.classification != CurvatureClass::kNonpositiveOnly) {
    detail = "torus classification is not nonpositive-only";
    return false;
  }
  if (!report.rows[0].girth || *report.rows[0].girth != Angle::two_pi()) {
    detail = "torus girth is not exactly 2*pi";
    return false;
  }
  if (!free_faces(torus).empty()) {
    detail = "torus unexpectedly has free faces";
    return false;
  }
  const auto h = h1(torus);
  if (h.betti != 2 || !h.torsion.empty()) {
    detail = "torus H1 is not Z^2";
    return false;
  }
#ifdef A2C_CLI_PATH
  {
    std::ofstream out("acceptance_torus.a2c");
    out << serialize_a2c(torus);
  }
  const int status = std::system(
      (std::string(A2C_CLI_PATH) +
       " check acceptance_torus.a2c --mode negative > /dev/null 2>&1")
          .c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (code != 1) {
    detail = "check --mode negative exited " + std::to_string(code) +
             ", expected 1";
    return false;
  }
  detail =
      "girth exactly 2*pi, no free faces, H1 = Z^2, strict check exits 1";
#else
  detail = "girth exactly 2*pi, no free faces, H1 = Z^2";
#endif
  return true;
}

bool criterion_girth_oracle(std::string& detail) {
  int agreements = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const LinkGraph g = fuzz::multigraph(seed, 8);
    const auto fast = shortest_cycle(g);
    const auto slow = testsupport::brute_force_girth(g);
    if (fast.has_value() != slow.has_value() ||
        (fast && fast->length != *slow)) {
      detail = "disagreement on seed " + std::to_string(seed);
      return false;
    }
    ++agreements;
  }
  detail = std::to_string(agreements) +
           " random multigraphs agree with brute-force enumeration";
  return true;
}

bool criterion_lemma_3_2(std::string& detail) {
  const auto corpus = no_free_face_corpus();
  for (const auto& x : corpus) {
    if (!free_faces(x).empty()) {
      detail = x.source() + " has free faces; corpus construction broken";
      return false;
    }
  }
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> num(1, 15);
  int sampled = 0;
  while (sampled < 200) {
    const auto& x = corpus[sampled % corpus.size()];
    std::uniform_int_distribution<std::size_t> pick_vertex(
        0, x.vertices().size() - 1);
    const VertexId v = x.vertices()[pick_vertex(rng)];
    const LinkGraph link = build_link(x, v);
    if (link.arc_count() == 0) continue;
    std::uniform_int_distribution<int> pick_arc(0, link.arc_count() - 1);
    const int arc = pick_arc(rng);
    const Angle offset = link.arcs[arc].length * Rat(BigInt(num(rng)), BigInt(16));
    const MetricPoint p = MetricPoint::on_arc(arc, offset);
    const auto ecc = eccentricity(link, p);
    if (ecc.finite && ecc.value < Angle::pi()) {
      detail = "eccentricity " + ecc.value.str() + "*pi < pi at vertex " + v +
               " of " + x.source();
      return false;
    }
    ++sampled;
  }
  detail = "200 random link points all have eccentricity >= pi";
  return true;
}

bool criterion_straightness(std::string& detail) {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> theta(0, 2 * 3.14159265358979323846);
  std::uniform_real_distribution<double> unit(0.1, 0.9);
  const auto torus = builders::torus();
  const auto hepta = builders::heptadisk();
  int traces = 0, torus_crossings = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Vec2 dir{std::cos(theta(rng)), std::sin(theta(rng))};
    {
      const Vec2 start{unit(rng), unit(rng)};
      const auto result = trace_straight(torus, "f", start, dir, 64);
      const auto check = verify_straight(torus, result.path);
      if (!check.ok) {
        detail = "torus trace " + std::to_string(trial) +
                 " failed verification: " + check.message;
        return false;
      }
      for (const auto& bp : result.path.points) {
        if (bp.kind != BreakKind::kEdgePoint || !bp.witness) continue;
        const auto& w = *bp.witness;
        if (w.entry.offset + w.exit.offset != Angle::pi()) {
          detail = "torus crossing violates alpha + beta = pi exactly";
          return false;
        }
        ++torus_crossings;
      }
    }
    {
      const double u = unit(rng) * 0.5, v = unit(rng) * 0.5;
      const Vec2 a{0, 0}, b{1, 0}, c{0.5, 0.8660254037844386};
      const Vec2 start = a + (b - a) * (0.2 + u * 0.5) + (c - a) * (0.1 + v * 0.4);
      std::uniform_int_distribution<int> face(0, 6);
      const auto result = trace_straight(
          hepta, "f" + std::to_string(face(rng)), start, dir, 64);
      const auto check = verify_straight(hepta, result.path);
      if (!check.ok) {
        detail = "heptadisk trace " + std::to_string(trial) +
                 " failed verification: " + check.message;
        return false;
      }
    }
    traces += 2;
  }
  detail = std::to_string(traces) + " traces verified; " +
           std::to_string(torus_crossings) +
           " torus crossings satisfy alpha + beta = pi exactly";
  return true;
}

bool criterion_tracer_termination(std::string& detail) {
  const auto torus = builders::torus();
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> coef(1, 8);
  std::uniform_int_distribution<int> sign(0, 1);
  int done = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const double p = coef(rng) * (sign(rng) ? 1 : -1);
    const double q = coef(rng) * (sign(rng) ? 1 : -1);
    const auto result = trace_straight(torus, "f", {0.37, 0.21}, {p, q}, 64);
    if (result.termination.reason != StopReason::kEdgeRevisit &&
        result.termination.reason != StopReason::kSelfIntersect) {
      detail = "slope (" + std::to_string(p) + "," + std::to_string(q) +
               ") terminated with " +
               stop_reason_name(result.termination.reason);
      return false;
    }
    ++done;
  }
  detail = std::to_string(done) +
           " rational-slope traces stopped by revisit or self-intersection "
           "within 64 steps";
  return true;
}

bool criterion_solver(std::string& detail) {
  const auto torus_outcome =
      solve_angles(builders::torus(), SolveMode::kNonpositive);
  if (!torus_outcome.feasible || !torus_outcome.solved) {
    detail = "torus should be feasible in nonpositive mode";
    return false;
  }
  if (!validate(*torus_outcome.solved).ok ||
      classify(*torus_outcome.solved).classification ==
          CurvatureClass::kFails) {
    detail = "torus solver output does not re-pass the weight test";
    return false;
  }
  for (const auto mode : {SolveMode::kNonpositive, SolveMode::kNegative}) {
    const auto outcome = solve_angles(builders::tetrahedron(), mode);
    if (outcome.feasible || !outcome.certificate) {
      detail = "tetrahedron should be infeasible with a certificate";
      return false;
    }
    const auto& cert = *outcome.certificate;
    if (cert.total_demand != Angle::of(8) || cert.total_supply != Angle::of(4) ||
        !cert.corners_disjoint) {
      detail = "tetrahedron certificate is not the 8*pi vs 4*pi obstruction";
      return false;
    }
  }
  detail =
      "torus feasible and re-classified; tetrahedron blocked by 8*pi demand "
      "against 4*pi supply in both modes";
  return true;
}

bool criterion_collapse_invariance(std::string& detail) {
  const auto rank = [](CurvatureClass c) {
    return c == CurvatureClass::kFails ? 0
           : c == CurvatureClass::kNonpositiveOnly ? 1
                                                   : 2;
  };
  auto corpus = disk_corpus();
  for (auto& x : ring_corpus()) corpus.push_back(std::move(x));
  long long steps = 0;
  for (const auto& x : corpus) {
    Complex2 current = x;
    AbelianInvariants h = h1(current);
    int cls = rank(classify(current).classification);
    for (;;) {
      const auto ffs = free_faces(current);
      if (ffs.empty()) break;
      current = elementary_collapse(current, ffs.front());
      ++steps;
      const auto h_next = h1(current);
      if (!(h_next == h)) {
        detail = "h1 changed during a collapse of " + x.source();
        return false;
      }
      const int cls_next = rank(classify(current).classification);
      if (cls_next < cls) {
        detail = "weight-test class degraded during a collapse of " + x.source();
        return false;
      }
      h = h_next;
      cls = cls_next;
    }
  }
  detail = "h1 and classification preserved across " + std::to_string(steps) +
           " elementary collapses";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Gauss-Bonnet exactness on disk diagrams", criterion_gauss_bonnet},
      {2, "simply connected passers collapse to a point", criterion_theorem_1_1},
      {3, "negative rings with H1 = Z collapse to a cycle", criterion_theorem_1_2},
      {4, "flat torus sharpness at exactly 2*pi", criterion_sharpness},
      {5, "girth agrees with brute-force enumeration", criterion_girth_oracle},
      {6, "no-free-face links have eccentricity >= pi", criterion_lemma_3_2},
      {7, "straightness round-trip and the crossing law", criterion_straightness},
      {8, "torus tracer stops by revisit or self-intersection",
       criterion_tracer_termination},
      {9, "solver soundness and the sphere obstruction", criterion_solver},
      {10, "collapse preserves h1 and the weight class",
       criterion_collapse_invariance},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion.number
              << ": " << criterion.name << " [" << detail << "] (" << ms
              << " ms)\n";
    if (!ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all 10 criteria passed\n";
  return 0;
}
