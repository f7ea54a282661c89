// JSON forms of every CLI-facing report. Angles serialize as "p/q" strings
// (their pi-coefficient in lowest terms); see docs/json_schema.md.
#pragma once

#include <json.hpp>

#include "a2c/angle_solver.hpp"
#include "a2c/collapse.hpp"
#include "a2c/complex.hpp"
#include "a2c/curvature.hpp"
#include "a2c/homotopy.hpp"
#include "a2c/link.hpp"
#include "a2c/trace.hpp"
#include "a2c/weight_test.hpp"

namespace a2c {

using Json = nlohmann::json;

inline Json to_json(const Angle& a) { return a.str(); }

inline Json to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(
        {{"rule", v.rule}, {"message", v.message}, {"cells", v.cells}});
  return {{"ok", r.ok}, {"violations", violations}};
}

inline Json to_json(const LinkGraph& g) {
  Json arcs = Json::array();
  for (const auto& a : g.arcs)
    arcs.push_back({{"from", g.node_names[a.node_a]},
                    {"to", g.node_names[a.node_b]},
                    {"length", a.length.str()},
                    {"provenance", a.provenance}});
  return {{"nodes", g.node_names}, {"arcs", arcs}};
}

inline Json to_json(const CurvatureReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"vertex", row.vertex},
                    {"angle_sum", row.angle_sum.str()},
                    {"link_euler", row.link_chi},
                    {"kappa", row.kappa.str()}});
  Json out = {{"vertices", rows}, {"total", r.total.str()}};
  out["gauss_bonnet_residual"] =
      r.gauss_bonnet_residual ? Json(r.gauss_bonnet_residual->str()) : Json();
  return out;
}

inline Json to_json(const WeightTestReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json witness = Json::array();
    for (int arc : row.witness_arcs) {
      const auto& a = row.link.arcs[arc];
      witness.push_back({{"from", row.link.node_names[a.node_a]},
                         {"to", row.link.node_names[a.node_b]},
                         {"length", a.length.str()},
                         {"provenance", a.provenance}});
    }
    rows.push_back(
        {{"vertex", row.vertex},
         {"girth", row.girth ? Json(row.girth->str()) : Json()},
         {"margin", row.margin ? Json(row.margin->str()) : Json()},
         {"witness_cycle", witness}});
  }
  return {{"classification", curvature_class_name(r.classification)},
          {"vertices", rows}};
}

inline Json to_json(const CollapseTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"kind", free_face_kind_name(s.kind)},
                     {"cell", s.cell},
                     {"coface", s.coface}});
  return {{"steps", steps},
          {"terminal_class", terminal_class_name(t.terminal_class)},
          {"terminal",
           {{"vertices", t.terminal.vertices().size()},
            {"edges", t.terminal.edges().size()},
            {"faces", t.terminal.faces().size()}}}};
}

inline Json to_json(const AbelianInvariants& h) {
  Json torsion = Json::array();
  for (const auto& d : h.torsion) torsion.push_back(d.str());
  return {{"betti", h.betti}, {"torsion", torsion}};
}

inline Json to_json(const Presentation& p) {
  Json relators = Json::array();
  for (const auto& r : p.relators) {
    Json word = Json::array();
    for (int s : r)
      word.push_back(s > 0 ? p.generators[s - 1]
                           : p.generators[-s - 1] + "^-1");
    relators.push_back(word);
  }
  return {{"generators", p.generators}, {"relators", relators}};
}

inline Json to_json(const MetricPoint& p, const LinkGraph& g) {
  if (p.is_node()) return {{"node", g.node_names[p.node]}};
  return {{"arc", g.arcs[p.arc].provenance}, {"offset", p.offset.str()}};
}

inline Json to_json(const SegmentalPath& path, const Termination& term,
                    const Complex2& x) {
  Json points = Json::array();
  for (const auto& bp : path.points) {
    Json j = {{"kind", break_kind_name(bp.kind)}};
    if (!bp.face.empty()) {
      j["face"] = bp.face;
      j["pos"] = {bp.pos.x, bp.pos.y};
    }
    if (bp.kind == BreakKind::kEdgePoint) {
      j["edge"] = bp.edge;
      j["edge_param"] = bp.edge_param;
    }
    if (bp.kind == BreakKind::kVertex) j["vertex"] = bp.vertex;
    if (bp.witness) {
      const auto& w = *bp.witness;
      const bool vertex_link = w.link_id.rfind("vertex:", 0) == 0;
      const LinkGraph link = vertex_link
                                 ? build_link(x, w.link_id.substr(7))
                                 : link_of_edge_interior(x, w.link_id.substr(5));
      j["witness"] = {
          {"link", w.link_id},
          {"entry", to_json(w.entry, link)},
          {"exit", to_json(w.exit, link)},
          {"distance", w.distance ? Json(w.distance->str()) : Json("inf")}};
    }
    points.push_back(std::move(j));
  }
  Json segments = Json::array();
  for (const auto& s : path.segments) {
    Json j;
    if (s.face.empty())
      j["along_edge"] = s.along_edge;
    else
      j = {{"face", s.face}, {"a", {s.a.x, s.a.y}}, {"b", {s.b.x, s.b.y}}};
    segments.push_back(std::move(j));
  }
  return {{"breakpoints", points},
          {"segments", segments},
          {"termination",
           {{"reason", stop_reason_name(term.reason)},
            {"location", term.location}}}};
}

inline Json to_json(const SolveOutcome& o) {
  Json out;
  out["status"] = o.feasible ? "feasible" : "infeasible";
  if (o.feasible) {
    Json angles = Json::object();
    for (const auto& [key, angle] : o.angles)
      angles[key.face + "#" + std::to_string(key.index)] = angle.str();
    out["angles"] = angles;
    out["margin"] = o.margin.str();
  } else if (o.certificate) {
    const auto& c = *o.certificate;
    Json cycles = Json::array();
    for (const auto& cd : c.cycles)
      cycles.push_back({{"vertex", cd.vertex},
                        {"corners", cd.corners},
                        {"demand", cd.demand.str()}});
    out["certificate"] = {{"cycles", cycles},
                          {"total_demand", c.total_demand.str()},
                          {"total_supply", c.total_supply.str()},
                          {"corners_disjoint", c.corners_disjoint},
                          {"note", c.note}};
  }
  return out;
}

}  // namespace a2c
