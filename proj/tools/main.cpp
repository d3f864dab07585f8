// Command-line front end: instance generation, exact solving, selection
// verification, tour/selection conversion, oracle runs, LP emission,
// external assignment validation, and SVG rendering.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tspdisk/encode.hpp"
#include "tspdisk/ilp.hpp"
#include "tspdisk/oracle.hpp"
#include "tspdisk/render.hpp"
#include "tspdisk/solver.hpp"

namespace {

using namespace tspdisk;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

Complex build_complex(const std::string& mode, const Instance& inst) {
  if (mode == "full") return full_complex(inst.n());
  if (mode == "delaunay")
    return restricted_complex(inst.n(), delaunay_candidates(inst));
  if (mode.rfind("file:", 0) == 0)
    return restricted_complex(inst.n(),
                              parse_triangle_list(read_file(mode.substr(5))));
  throw Error("unknown complex mode: " + mode + " (use full|delaunay|file:PATH)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TSP as boundary of an admissible triangle selection: exact "
               "cGSTP solving, verification, and model emission"};
  app.require_subcommand(1);

  std::string instance_path, tour_path, selection_path, assignment_path;
  std::string complex_mode = "full";
  std::string out_path, svg_out;
  int n = 8;
  std::uint64_t seed = 1;
  long long range = 1000;
  int apex = 0;
  bool any_apex = false;
  bool use_bound = true;
  long long node_limit = 0;

  auto* gen = app.add_subcommand("gen", "write a random Euclidean instance (TSPLIB text)");
  gen->add_option("--n", n, "city count")->check(CLI::Range(3, 1000));
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--range", range, "coordinate range [0,range]");
  gen->add_option("--out", out_path, "output path");

  auto* solve = app.add_subcommand("solve", "run the exact cGSTP solver");
  solve->add_option("--instance", instance_path, "TSPLIB instance")->required();
  solve->add_option("--complex", complex_mode, "full|delaunay|file:PATH");
  solve->add_flag("--bound,!--no-bound", use_bound, "length-bound pruning");
  solve->add_option("--node-limit", node_limit, "abort after this many nodes");
  solve->add_option("--out", out_path, "report JSON path");
  solve->add_option("--svg-out", svg_out, "render the optimal disk");

  auto* verify = app.add_subcommand("verify", "check a selection and the boundary identity");
  verify->add_option("--instance", instance_path)->required();
  verify->add_option("--selection", selection_path, "selection JSON")->required();
  verify->add_option("--complex", complex_mode, "full|delaunay|file:PATH");
  verify->add_option("--out", out_path);

  auto* encode = app.add_subcommand("encode", "fan-encode a tour into a selection");
  encode->add_option("--instance", instance_path)->required();
  encode->add_option("--tour", tour_path, "tour text file")->required();
  encode->add_option("--apex", apex, "apex position in the tour");
  encode->add_flag("--any-apex", any_apex, "try all apexes until one fits");
  encode->add_option("--complex", complex_mode, "full|delaunay|file:PATH");
  encode->add_option("--out", out_path);

  auto* decode = app.add_subcommand("decode", "decode a selection's boundary into a tour");
  decode->add_option("--instance", instance_path)->required();
  decode->add_option("--selection", selection_path)->required();
  decode->add_option("--complex", complex_mode, "full|delaunay|file:PATH");
  decode->add_option("--out", out_path);

  auto* oracle = app.add_subcommand("oracle", "run both TSP oracles and compare");
  oracle->add_option("--instance", instance_path)->required();
  oracle->add_option("--out", out_path);

  auto* emitlp = app.add_subcommand("emit-lp", "write the 0/1 program in LP format");
  emitlp->add_option("--instance", instance_path)->required();
  emitlp->add_option("--complex", complex_mode, "full|delaunay|file:PATH");
  emitlp->add_option("--out", out_path);

  auto* validate = app.add_subcommand("validate", "audit an external solver assignment");
  validate->add_option("--instance", instance_path)->required();
  validate->add_option("--assignment", assignment_path, "'var value' lines or JSON map")->required();
  validate->add_option("--complex", complex_mode, "full|delaunay|file:PATH");
  validate->add_option("--out", out_path);

  auto* render = app.add_subcommand("render", "SVG of an instance and optional selection");
  render->add_option("--instance", instance_path)->required();
  render->add_option("--selection", selection_path);
  render->add_option("--complex", complex_mode, "full|delaunay|file:PATH");
  render->add_option("--svg-out", svg_out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const Instance inst = random_euclidean(n, seed, range);
      write_output(out_path, serialize_tsplib(inst, "random-n" + std::to_string(n) +
                                                        "-s" + std::to_string(seed)));
      return 0;
    }

    const Instance inst = parse_tsplib(read_file(instance_path));

    if (solve->parsed()) {
      const Complex cx = build_complex(complex_mode, inst);
      SolveOptions opts;
      opts.use_bound = use_bound;
      if (node_limit > 0) opts.node_limit = node_limit;
      const SolveReport report = solve_exact(inst, cx, opts);
      write_output(out_path, report_to_json(report));
      if (!svg_out.empty() && report.status != SolveStatus::infeasible) {
        const Selection sel = induce_selection(cx, report.best_K);
        write_output(svg_out, render_svg(inst, &sel));
      }
      return report.status == SolveStatus::optimal ? 0 : 1;
    }
    if (verify->parsed()) {
      const Complex cx = build_complex(complex_mode, inst);
      const Selection sel = selection_from_json(read_file(selection_path), cx);
      const Verdict verdict = check_admissible(sel);
      const ObjectiveBreakdown obj = net_weight(sel, inst);
      const IdentityStatus id = check_boundary_identity(sel, inst);
      nlohmann::json j;
      j["verdict"] = nlohmann::json::parse(verdict_to_json(verdict));
      j["objective"] = nlohmann::json::parse(objective_to_json(obj));
      j["identity"] = id == IdentityStatus::holds              ? "holds"
                      : id == IdentityStatus::fails            ? "fails"
                                                               : "precondition_violated";
      write_output(out_path, j.dump(2));
      return verdict.admissible && id == IdentityStatus::holds ? 0 : 1;
    }
    if (encode->parsed()) {
      const Complex cx = build_complex(complex_mode, inst);
      const Tour tour = parse_tour(read_file(tour_path));
      const Selection sel = any_apex ? fan_encode_any_apex(tour, cx)
                                     : fan_encode(tour, apex, cx);
      write_output(out_path, selection_to_json(sel));
      return 0;
    }
    if (decode->parsed()) {
      const Complex cx = build_complex(complex_mode, inst);
      const Selection sel = selection_from_json(read_file(selection_path), cx);
      const Verdict verdict = check_admissible(sel);
      if (!verdict.admissible) {
        std::cerr << "selection is inadmissible:\n" << verdict_to_json(verdict) << "\n";
        return 1;
      }
      write_output(out_path, format_tour(decode_tour(sel)) + "\n");
      return 0;
    }
    if (oracle->parsed()) {
      nlohmann::json j;
      std::optional<OracleResult> bf, hk;
      if (inst.n() <= 10) bf = tsp_oracle_bruteforce(inst);
      if (inst.n() <= 16) hk = tsp_oracle_held_karp(inst);
      j["brute_force"] = bf ? nlohmann::json{{"tour", bf->tour.order},
                                             {"length", bf->length}}
                            : nlohmann::json();
      j["held_karp"] = hk ? nlohmann::json{{"tour", hk->tour.order},
                                           {"length", hk->length}}
                          : nlohmann::json();
      j["agree"] = (bf && hk) ? nlohmann::json(bf->length == hk->length)
                              : nlohmann::json();
      write_output(out_path, j.dump(2));
      return (bf && hk && bf->length != hk->length) ? 1 : 0;
    }
    if (emitlp->parsed()) {
      const Complex cx = build_complex(complex_mode, inst);
      write_output(out_path, emit_lp(inst, cx));
      return 0;
    }
    if (validate->parsed()) {
      const Complex cx = build_complex(complex_mode, inst);
      const auto assignment = parse_assignment(read_file(assignment_path));
      const ValidationResult result = validate_external(assignment, inst, cx);
      write_output(out_path, validation_to_json(result));
      return result.verdict.admissible ? 0 : 1;
    }
    if (render->parsed()) {
      std::optional<Selection> sel;
      std::optional<Complex> cx;
      if (!selection_path.empty()) {
        cx.emplace(build_complex(complex_mode, inst));
        sel = selection_from_json(read_file(selection_path), *cx);
      }
      write_output(svg_out, render_svg(inst, sel ? &*sel : nullptr));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
