// a2c: command-line toolkit for angled combinatorial 2-complexes.
//
// Subcommands: build, check, curvature, collapse, homology, presentation,
// trace, solve-angles. Exit codes: 0 pass/success, 1 property fails or
// infeasible, 2 invalid input or usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "a2c/a2c.hpp"
#include "a2c/json_io.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw a2c::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw a2c::Error("cannot write '" + path + "'");
  out << content;
}

/// Loads and validates an A2C file; validation failures are invalid input.
a2c::Complex2 load_valid(const std::string& path, bool allow_bare = false) {
  const a2c::Complex2 x = a2c::parse_a2c(read_file(path), allow_bare);
  const auto report = a2c::validate(x);
  if (!report.ok) {
    std::ostringstream msg;
    msg << "'" << path << "' is not a valid complex:";
    for (const auto& v : report.violations)
      msg << "\n  [" << v.rule << "] " << v.message;
    throw a2c::Error(msg.str());
  }
  return x;
}

void emit(const std::string& text, const a2c::Json& json, bool as_json) {
  if (as_json)
    std::cout << json.dump(2) << "\n";
  else
    std::cout << text;
}

int run_check(const std::string& path, const std::string& mode, bool as_json) {
  const auto x = load_valid(path);
  const auto report = a2c::classify(x);
  const bool strict = mode == "negative";
  const bool pass = report.passes(strict);

  std::ostringstream text;
  text << "weight test (" << mode << "): " << (pass ? "PASS" : "FAIL")
       << "  [classification: "
       << a2c::curvature_class_name(report.classification) << "]\n";
  for (const auto& row : report.rows) {
    text << "  " << row.vertex << ": girth ";
    if (row.girth) {
      text << row.girth->str() << "*pi, margin " << row.margin->str() << "*pi";
      if (!row.witness_arcs.empty()) {
        text << ", witness";
        for (int arc : row.witness_arcs)
          text << " " << row.link.arcs[arc].provenance;
      }
    } else {
      text << "none (forest link)";
    }
    text << "\n";
  }
  auto json = a2c::to_json(report);
  json["mode"] = mode;
  json["pass"] = pass;
  emit(text.str(), json, as_json);
  return pass ? kPass : kFail;
}

int run_curvature(const std::string& path, bool as_json) {
  const auto x = load_valid(path);
  const auto report = a2c::curvature_report(x);
  std::ostringstream text;
  text << "vertex  S(v)  chi(Lk)  kappa\n";
  for (const auto& row : report.rows)
    text << "  " << row.vertex << "  " << row.angle_sum.str() << "*pi  "
         << row.link_chi << "  " << row.kappa.str() << "*pi\n";
  text << "total curvature: " << report.total.str() << "*pi\n";
  if (report.gauss_bonnet_residual)
    text << "gauss-bonnet residual: " << report.gauss_bonnet_residual->str()
         << "*pi\n";
  else
    text << "gauss-bonnet residual: n/a (not marked as a disk diagram)\n";
  emit(text.str(), a2c::to_json(report), as_json);
  return kPass;
}

int run_collapse(const std::string& path, bool decide_pi1,
                 const std::string& out_path, bool as_json) {
  const auto x = load_valid(path);
  const auto trace = a2c::collapse_all(x);
  std::ostringstream text;
  for (const auto& step : trace.steps)
    text << "collapse " << a2c::free_face_kind_name(step.kind) << " ("
         << step.cell << ", " << step.coface << ")\n";
  text << "terminal: " << a2c::terminal_class_name(trace.terminal_class) << " ("
       << trace.terminal.vertices().size() << " vertices, "
       << trace.terminal.edges().size() << " edges, "
       << trace.terminal.faces().size() << " faces)\n";
  auto json = a2c::to_json(trace);
  int code = kPass;
  if (decide_pi1) {
    const auto sc = a2c::simply_connected_decision(x);
    const auto z = a2c::pi1_is_z_decision(x);
    text << "simply connected: "
         << (sc == a2c::Decision::kYes
                 ? "Yes (terminal = point)"
                 : sc == a2c::Decision::kNo ? "No"
                                            : "NotApplicable (fails weight test)")
         << "\n";
    text << "pi1 = Z: "
         << (z == a2c::Decision::kYes
                 ? "Yes (negative class, terminal = cycle)"
                 : z == a2c::Decision::kNo
                       ? "No"
                       : "NotApplicable (not in the negative class)")
         << "\n";
    json["simply_connected"] = a2c::decision_name(sc);
    json["pi1_is_z"] = a2c::decision_name(z);
    code = (sc == a2c::Decision::kYes || z == a2c::Decision::kYes) ? kPass : kFail;
  }
  if (!out_path.empty())
    write_file(out_path, a2c::serialize_a2c(trace.terminal));
  emit(text.str(), json, as_json);
  return code;
}

int run_homology(const std::string& path, bool as_json) {
  const auto x = load_valid(path);
  const auto h = a2c::h1(x);
  std::ostringstream text;
  text << "H1 = ";
  if (h.betti == 0 && h.torsion.empty()) text << "0";
  if (h.betti == 1) text << "Z";
  if (h.betti > 1) text << "Z^" << h.betti;
  for (const auto& d : h.torsion)
    text << (h.betti || &d != &h.torsion.front() ? " + " : "") << "Z/" << d.str();
  text << "\n";
  emit(text.str(), a2c::to_json(h), as_json);
  return kPass;
}

int run_presentation(const std::string& path, const std::string& basepoint,
                     int simplify_budget, bool as_json) {
  const auto x = load_valid(path);
  auto p = a2c::fundamental_presentation(
      x, basepoint.empty() ? std::nullopt
                           : std::optional<a2c::VertexId>(basepoint));
  if (simplify_budget > 0) p = a2c::tietze_simplify(p, simplify_budget);
  std::ostringstream text;
  text << "generators:";
  for (const auto& g : p.generators) text << " " << g;
  if (p.generators.empty()) text << " (none)";
  text << "\nrelators:\n";
  for (const auto& r : p.relators)
    text << "  " << a2c::relator_to_string(p, r) << "\n";
  if (p.relators.empty()) text << "  (none)\n";
  emit(text.str(), a2c::to_json(p), as_json);
  return kPass;
}

a2c::Vec2 parse_vec(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw a2c::Error(std::string(what) + " must be given as x,y");
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw a2c::Error(std::string("bad ") + what + " '" + text + "'");
  }
}

int run_trace(const std::string& path, const std::string& face,
              const std::string& point, const std::string& dir, int max_steps,
              const std::string& svg_path, const std::string& json_path) {
  const auto x = load_valid(path);
  const auto result = a2c::trace_straight(x, face, parse_vec(point, "--point"),
                                          parse_vec(dir, "--dir"), max_steps);
  std::ostringstream text;
  text << "segments: " << result.path.segments.size() << "\n";
  for (const auto& bp : result.path.points) {
    text << "  " << a2c::break_kind_name(bp.kind);
    if (bp.kind == a2c::BreakKind::kEdgePoint)
      text << " " << bp.edge << " @ " << bp.edge_param;
    if (bp.kind == a2c::BreakKind::kVertex) text << " " << bp.vertex;
    if (!bp.face.empty())
      text << "  [face " << bp.face << " (" << bp.pos.x << ", " << bp.pos.y
           << ")]";
    if (bp.witness)
      text << "  witness distance "
           << (bp.witness->distance ? bp.witness->distance->str() + "*pi"
                                    : "inf");
    text << "\n";
  }
  text << "termination: " << a2c::stop_reason_name(result.termination.reason)
       << " at " << result.termination.location << "\n";
  const auto check = a2c::verify_straight(x, result.path);
  text << "straightness verification: " << (check.ok ? "ok" : check.message)
       << "\n";
  std::cout << text.str();
  if (!svg_path.empty()) write_file(svg_path, a2c::trace_to_svg(x, result.path));
  if (!json_path.empty())
    write_file(json_path,
               a2c::to_json(result.path, result.termination, x).dump(2) + "\n");
  return check.ok ? kPass : kFail;
}

int run_solve(const std::string& path, const std::string& mode,
              const std::string& out_path, bool as_json) {
  const auto x = load_valid(path, /*allow_bare=*/true);
  const auto outcome = a2c::solve_angles(
      x, mode == "negative" ? a2c::SolveMode::kNegative
                            : a2c::SolveMode::kNonpositive);
  std::ostringstream text;
  if (outcome.feasible) {
    text << "feasible (margin " << outcome.margin.str() << "*pi)\n";
    for (const auto& [key, angle] : outcome.angles)
      text << "  " << key.face << "#" << key.index << " = " << angle.str()
           << "*pi\n";
    if (!out_path.empty())
      write_file(out_path, a2c::serialize_a2c(*outcome.solved));
  } else {
    const auto& cert = *outcome.certificate;
    text << "infeasible: " << cert.note << "\n";
    text << "  cycle demands total " << cert.total_demand.str()
         << "*pi against supply " << cert.total_supply.str() << "*pi"
         << (cert.corners_disjoint ? " (corner-disjoint cycles)" : "") << "\n";
    for (const auto& c : cert.cycles) {
      text << "  at " << c.vertex << ":";
      for (const auto& corner : c.corners) text << " " << corner;
      text << "  >= " << c.demand.str() << "*pi\n";
    }
  }
  emit(text.str(), a2c::to_json(outcome), as_json);
  return outcome.feasible ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"angled combinatorial 2-complex toolkit"};
  app.require_subcommand(1);

  std::string in_path, out_path, mode = "nonpositive", spec, face, basepoint;
  std::string svg_path, json_path;
  bool as_json = false;
  bool decide_pi1 = false;
  int max_steps = 64;
  int simplify_budget = 0;
  std::uint64_t seed = 0;
  std::string point = "0,0", dir = "1,0";

  auto* build = app.add_subcommand("build", "construct a canonical complex");
  build->add_option("spec", spec,
                    "polygon:n | grid:m,k | torus | cylinder:k | heptadisk | "
                    "tetrahedron | presentation:<gens>|<relators> | "
                    "fuzz-disk | fuzz-ring")
      ->required();
  build->add_option("-o,--output", out_path, "write A2C here (default stdout)");
  build->add_option("--seed", seed, "seed for fuzz-* specs");

  auto* check = app.add_subcommand("check", "run the weight test");
  check->add_option("file", in_path)->required();
  check->add_option("--mode", mode, "nonpositive|negative")
      ->check(CLI::IsMember({"nonpositive", "negative"}));
  check->add_flag("--json", as_json);

  auto* curvature = app.add_subcommand("curvature", "per-vertex curvature");
  curvature->add_option("file", in_path)->required();
  curvature->add_flag("--json", as_json);

  auto* collapse = app.add_subcommand("collapse", "free-face collapse");
  collapse->add_option("file", in_path)->required();
  collapse->add_flag("--decide-pi1", decide_pi1,
                     "decide simple connectivity and pi1 = Z");
  collapse->add_option("-o,--output", out_path, "write the terminal complex");
  collapse->add_flag("--json", as_json);

  auto* homology = app.add_subcommand("homology", "first homology");
  homology->add_option("file", in_path)->required();
  homology->add_flag("--json", as_json);

  auto* pres = app.add_subcommand("presentation", "pi1 presentation");
  pres->add_option("file", in_path)->required();
  pres->add_option("--basepoint", basepoint);
  pres->add_option("--simplify", simplify_budget, "Tietze budget");
  pres->add_flag("--json", as_json);

  auto* trace = app.add_subcommand("trace", "trace a straight segmental path");
  trace->add_option("file", in_path)->required();
  trace->add_option("--face", face)->required();
  trace->add_option("--point", point, "start x,y in the face realization")
      ->required();
  trace->add_option("--dir", dir, "direction dx,dy")->required();
  trace->add_option("--max-steps", max_steps);
  trace->add_option("--svg", svg_path, "write an SVG unfolding");
  trace->add_option("--json", json_path, "write the path as JSON");

  auto* solve = app.add_subcommand("solve-angles", "search for an assignment");
  solve->add_option("file", in_path)->required();
  solve->add_option("--mode", mode, "nonpositive|negative")
      ->check(CLI::IsMember({"nonpositive", "negative"}));
  solve->add_option("-o,--output", out_path, "write the angled A2C on success");
  solve->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      a2c::Complex2 x = [&] {
        if (spec == "fuzz-disk") return a2c::fuzz::disk(seed);
        if (spec == "fuzz-ring") return a2c::fuzz::ring(seed);
        return a2c::build(spec);
      }();
      const std::string text = a2c::serialize_a2c(x);
      if (out_path.empty())
        std::cout << text;
      else
        write_file(out_path, text);
      return kPass;
    }
    if (check->parsed()) return run_check(in_path, mode, as_json);
    if (curvature->parsed()) return run_curvature(in_path, as_json);
    if (collapse->parsed())
      return run_collapse(in_path, decide_pi1, out_path, as_json);
    if (homology->parsed()) return run_homology(in_path, as_json);
    if (pres->parsed())
      return run_presentation(in_path, basepoint, simplify_budget, as_json);
    if (trace->parsed())
      return run_trace(in_path, face, point, dir, max_steps, svg_path,
                       json_path);
    if (solve->parsed()) return run_solve(in_path, mode, out_path, as_json);
  } catch (const a2c::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const a2c::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
