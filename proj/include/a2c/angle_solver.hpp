// Searches for a conformally nonpositively / negatively curved angle
// assignment by exact-rational LP with a shortest-cycle separation oracle.
//
// Variables are the corner angles plus a uniform slack t (in units of pi):
// face sums are fixed at (n-2)pi, every angle is >= t, and every discovered
// link cycle must reach 2pi (nonpositive) or 2pi + t (negative). The slack
// is maximized; feasibility requires t > 0.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "a2c/complex.hpp"
#include "a2c/link.hpp"
#include "a2c/simplex.hpp"
#include "a2c/weight_test.hpp"

namespace a2c {

enum class SolveMode { kNonpositive, kNegative };

inline const char* solve_mode_name(SolveMode m) {
  return m == SolveMode::kNonpositive ? "nonpositive" : "negative";
}

struct CornerKey {
  FaceId face;
  int index = 0;

  bool operator<(const CornerKey& o) const {
    return face != o.face ? face < o.face : index < o.index;
  }
};

/// One cycle constraint discovered by the separation oracle: the corners it
/// traverses (with multiplicity) and the length demanded of them.
struct CycleDemand {
  VertexId vertex;
  std::vector<std::string> corners;  // provenance strings "<face>#<index>"
  Angle demand;
};

struct InfeasibilityCertificate {
  std::vector<CycleDemand> cycles;
  Angle total_demand;  // sum of cycle demands
  Angle total_supply;  // sum over faces of (n-2)pi
  /// True when no corner appears in two listed cycles, making the counting
  /// obstruction (demand > supply) a proof of infeasibility on its own.
  bool corners_disjoint = false;
  std::string note;
};

struct SolveOutcome {
  bool feasible = false;
  std::map<CornerKey, Angle> angles;
  Angle margin;  // the maximized slack t
  std::optional<Complex2> solved;
  std::optional<InfeasibilityCertificate> certificate;
};

namespace solver_detail {

inline std::pair<FaceId, int> split_provenance(const std::string& prov) {
  const auto hash = prov.rfind('#');
  return {prov.substr(0, hash), std::stoi(prov.substr(hash + 1))};
}

inline Complex2 with_angles(const Complex2& x,
                            const std::map<CornerKey, Angle>& angles) {
  std::vector<Face> faces;
  for (const auto& f : x.faces()) {
    Face nf = f;
    for (int i = 0; i < f.side_count(); ++i)
      nf.corner_angles[i] = angles.at({f.id, i});
    faces.push_back(std::move(nf));
  }
  return Complex2(x.vertices(), x.edges(), std::move(faces),
                  x.is_disk_diagram(), x.source());
}

}  // namespace solver_detail

/// Decides whether the underlying complex of x admits a valid angle
/// assignment in the requested curvature class. Existing angle values are
/// ignored; only the cell structure matters.
inline SolveOutcome solve_angles(const Complex2& x, SolveMode mode) {
  SolveOutcome outcome;

  std::vector<CornerKey> corner_keys;
  std::map<CornerKey, int> corner_var;
  for (const Face* f : faces_lex_order(x))
    for (int i = 0; i < f->side_count(); ++i) {
      corner_var[{f->id, i}] = static_cast<int>(corner_keys.size());
      corner_keys.push_back({f->id, i});
    }
  const int num_corners = static_cast<int>(corner_keys.size());
  const int t_var = num_corners;

  if (num_corners == 0) {
    // No faces: nothing constrains the (empty) assignment, and every link
    // is arcless, so the complex is vacuously in either class.
    outcome.feasible = true;
    outcome.margin = Angle::zero();
    outcome.solved = x;
    return outcome;
  }

  std::vector<CycleDemand> cycles;
  std::set<std::pair<VertexId, std::vector<std::string>>> seen_cycles;

  Angle total_supply = Angle::zero();
  for (const auto& f : x.faces()) total_supply += Angle::of(f.side_count() - 2);

  const auto build_certificate = [&](std::string note) {
    InfeasibilityCertificate cert;
    cert.cycles = cycles;
    cert.total_demand = Angle::zero();
    for (const auto& c : cycles) cert.total_demand += c.demand;
    cert.total_supply = total_supply;
    std::map<std::string, int> corner_uses;
    for (const auto& c : cycles)
      for (const auto& corner : c.corners) corner_uses[corner]++;
    cert.corners_disjoint = true;
    for (const auto& [corner, uses] : corner_uses)
      if (uses > 1) cert.corners_disjoint = false;
    cert.note = std::move(note);
    return cert;
  };

  for (int round = 0;; ++round) {
    LpProblem lp;
    lp.num_vars = num_corners + 1;
    lp.objective.assign(lp.num_vars, Rat(0));
    lp.objective[t_var] = Rat(1);

    for (const auto& f : x.faces()) {
      std::vector<Rat> row(lp.num_vars, Rat(0));
      for (int i = 0; i < f.side_count(); ++i)
        row[corner_var.at({f.id, i})] = Rat(1);
      lp.add_row(std::move(row), Rel::kEq, Rat(f.side_count() - 2));
    }
    for (int c = 0; c < num_corners; ++c) {
      std::vector<Rat> row(lp.num_vars, Rat(0));
      row[c] = Rat(1);
      row[t_var] = Rat(-1);
      lp.add_row(std::move(row), Rel::kGe, Rat(0));
    }
    for (const auto& cycle : cycles) {
      std::vector<Rat> row(lp.num_vars, Rat(0));
      for (const auto& prov : cycle.corners) {
        const auto [face, index] = solver_detail::split_provenance(prov);
        row[corner_var.at({face, index})] += Rat(1);
      }
      if (mode == SolveMode::kNegative) row[t_var] = Rat(-1);
      lp.add_row(std::move(row), Rel::kGe, Rat(2));
    }

    const LpResult res = solve_lp(lp);
    if (res.status == LpStatus::kInfeasible) {
      outcome.certificate = build_certificate("LP infeasible");
      return outcome;
    }
    if (res.status == LpStatus::kUnbounded)
      throw Error("angle LP unbounded; complex has a face but no corners?");
    if (res.x[t_var] <= 0) {
      outcome.certificate = build_certificate(
          "maximal uniform slack is " + rat_to_string(res.x[t_var]) +
          "; no strictly positive assignment exists");
      return outcome;
    }

    std::map<CornerKey, Angle> angles;
    for (int c = 0; c < num_corners; ++c)
      angles[corner_keys[c]] = Angle(res.x[c]);
    const Complex2 candidate = solver_detail::with_angles(x, angles);

    // Separation oracle: girth witnesses violating the requested class.
    const WeightTestReport report = classify(candidate);
    bool violated = false;
    bool added = false;
    for (const auto& row : report.rows) {
      if (!row.girth) continue;
      const bool bad = mode == SolveMode::kNonpositive
                           ? *row.girth < Angle::two_pi()
                           : !(*row.girth > Angle::two_pi());
      if (!bad) continue;
      violated = true;
      CycleDemand demand;
      demand.vertex = row.vertex;
      for (int arc : row.witness_arcs)
        demand.corners.push_back(row.link.arcs[arc].provenance);
      demand.demand = Angle::two_pi();
      auto key = std::make_pair(demand.vertex, demand.corners);
      if (seen_cycles.insert(key).second) {
        cycles.push_back(std::move(demand));
        added = true;
      }
    }
    if (!violated) {
      outcome.feasible = true;
      outcome.angles = std::move(angles);
      outcome.margin = Angle(res.x[t_var]);
      outcome.solved = candidate;
      return outcome;
    }
    // Each violated witness must be new: a cycle the LP already carries is
    // satisfied by every LP solution. The guard below is a hard stop.
    if (!added || round > 100000)
      throw Error("separation loop failed to make progress");
  }
}

}  // namespace a2c
