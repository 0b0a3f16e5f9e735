#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "trimlab/discretization.hpp"
#include "trimlab/embedding.hpp"
#include "trimlab/errors.hpp"
#include "trimlab/generators.hpp"
#include "trimlab/graph_io.hpp"
#include "trimlab/labeling_io.hpp"
#include "trimlab/render.hpp"
#include "trimlab/selftest.hpp"
#include "trimlab/solver.hpp"
#include "trimlab/trimming.hpp"

using namespace trimlab;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kRefused = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<Rational> parse_stops(const std::vector<std::string>& raw) {
  std::vector<Rational> out;
  for (const std::string& s : raw) out.push_back(Rational::parse(s));
  return out;
}

Budget budget_with(std::uint64_t nodes) {
  Budget b = Budget::from_env();
  if (nodes > 0) b.max_nodes = nodes;
  return b;
}

struct TrimArgs {
  std::string graph, decomposition, out, mode = "auto";
  bool planar = false;
  int t = 2;
};

int cmd_trim(const TrimArgs& a) {
  const WeightedGraph g = parse_graph(read_file(a.graph));
  TrimReport rep;
  rep.total_weight = g.total_weight();
  rep.t = a.t;
  std::string extra;
  if (a.planar) {
    const PlaneEmbedding e = find_planar_embedding(g);
    const PlanarDecomposition mode = a.mode == "exact"     ? PlanarDecomposition::kExactTiny
                                     : a.mode == "minfill" ? PlanarDecomposition::kMinFill
                                                           : PlanarDecomposition::kAuto;
    const PlanarTrimming r = planar_trimming(g, e, a.t, mode);
    rep.k = r.params.k;
    rep.s = r.params.s;
    rep.g = r.params.g;
    rep.removed = r.removed;
    rep.removed_weight = r.removed_weight;
    extra = "layers " + std::to_string(r.layer_count) + "\nbaker-residue " +
            std::to_string(r.baker_residue) + "\nbaker-weight " + r.baker_weight.str() + "\n";
  } else {
    TreeDecomposition d;
    if (!a.decomposition.empty()) {
      d = parse_decomposition(read_file(a.decomposition));
    } else {
      const bool exact = a.mode == "exact" || (a.mode == "auto" && g.vertex_count() <= 12);
      d = build_tree_decomposition(g, exact ? DecompositionMode::kExactTiny
                                            : DecompositionMode::kMinFill);
    }
    const LevelTrimming r = level_trimming(g, d, a.t);
    rep.k = r.params.k;
    rep.s = r.params.s;
    rep.g = r.params.g;
    rep.removed = r.removed;
    rep.removed_weight = r.removed_weight;
    extra = "residue " + std::to_string(r.residue) + "\n";
  }
  std::cout << format_trim_report(rep) << extra;
  int code = kOk;
  try {
    const bool ok = is_trimming(g, rep.removed, a.t, rep.g);
    std::cout << "verified " << (ok ? "yes" : "no") << "\n";
    if (!ok) code = kCheckFailed;
  } catch (const SizeGuardError&) {
    std::cout << "verified skipped\n";
  }
  if (!a.out.empty()) {
    std::ostringstream set;
    for (int v : rep.removed) set << v << "\n";
    write_output(a.out, set.str());
  }
  return code;
}

int cmd_decompose(const std::string& path, const std::string& mode) {
  const WeightedGraph g = parse_graph(read_file(path));
  const bool exact = mode == "exact" || (mode == "auto" && g.vertex_count() <= 12);
  const TreeDecomposition d =
      build_tree_decomposition(g, exact ? DecompositionMode::kExactTiny : DecompositionMode::kMinFill);
  std::cout << format_decomposition(d);
  std::cout << "# width " << width(d) << "\n# elongation " << elongation(d) << "\n";
  return kOk;
}

int cmd_deps(const std::string& inst_path, const std::string& lab_path,
             const std::vector<std::string>& stops) {
  const LabelInstance inst = parse_instance(read_file(inst_path));
  const Labeling lab = parse_labeling(read_file(lab_path));
  const StoppingSet s = stopping_set(inst, parse_stops(stops));
  const DependencyGraph g = dependency_graph(inst, lab, s.values);
  std::cout << format_graph(undirected(g, inst));
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::cout << "# vertex " << v << " point " << g.ids[v] << "\n";
  }
  for (const DependencyEdge& e : g.edges) {
    std::cout << "# arc " << e.from << " " << e.to << " length " << e.length.str() << "\n";
  }
  const StructureReport r = check_structure(g);
  std::cout << "# max-in-degree " << r.max_in_degree << "\n# max-out-degree " << r.max_out_degree
            << "\n# structure " << (r.clean() ? "ok" : "violated") << "\n";
  return r.clean() ? kOk : kCheckFailed;
}

int cmd_candidates(const std::string& inst_path, int g, const std::vector<std::string>& stops) {
  const LabelInstance inst = parse_instance(read_file(inst_path));
  const CandidateSet m =
      candidate_positions(inst, parse_stops(stops), g, Budget::from_env().max_candidates);
  for (const Rational& v : m.values) std::cout << v.str() << "\n";
  return kOk;
}

struct LabelArgs {
  std::string instance, out, model = "1sh", epsilon = "1/2", g_mode = "exhaustive",
                             downstream = "default";
  std::uint64_t budget = 0;
  int threads = 1;
  bool verify = false;
};

int cmd_label(const LabelArgs& a) {
  const LabelInstance inst = parse_instance(read_file(a.instance));
  PipelineOptions opt;
  opt.eps = Rational::parse(a.epsilon);
  opt.g = parse_g_mode(a.g_mode);
  opt.budget = budget_with(a.budget);
  opt.threads = a.threads;
  opt.downstream = a.downstream == "exact"      ? Downstream::kExact
                   : a.downstream == "shifting" ? Downstream::kShifting
                                                : Downstream::kDefault;
  PipelineResult r = a.model == "1sh"   ? ptas_1sh(inst, opt)
                     : a.model == "2sh" ? ptas_2sh(inst, opt)
                                        : ptas_4s(inst, opt);
  std::ostringstream rep;
  rep << "# model " << a.model << "\n# epsilon " << opt.eps.str() << "\n# t " << r.t
      << "\n# g-mode " << a.g_mode << "\n# g " << r.g << "\n";
  if (opt.g.mode == GMode::kTheory) rep << "# g-theory " << r.g_theory.get_str() << "\n";
  rep << "# candidates " << r.candidates << "\n# anchors " << r.anchors << "\n";
  if (r.used_shifting) {
    rep << "# solver shifting\n# solver-epsilon " << r.solver_eps.str() << "\n# offsets "
        << r.offsets_tried << "\n# best-offset " << r.best_offset << "\n";
  } else {
    rep << "# solver exact\n";
  }
  rep << "# labeled " << r.labeling.size() << " of " << inst.size() << "\n# weight "
      << r.weight.str() << "\n";
  if (a.verify) {
    if (inst.size() > 7) throw SizeGuardError("--verify-oracle accepts at most 7 points");
    const Rational best = weight_of(inst, exact_1sh(inst, 7));
    rep << "# oracle-1sh " << best.str() << "\n";
    if (a.model == "1sh") {
      rep << "# ratio " << (best.sign() == 0 ? Rational(1) : r.weight / best).str() << "\n";
    } else {
      rep << "# ratio-vs-1sh " << (best.sign() == 0 ? Rational(1) : r.weight / best).str()
          << "\n";
    }
  }
  const std::string labeling = format_anchor_labeling(r.labeling, inst);
  if (a.out.empty() || a.out == "-") {
    std::cout << labeling << rep.str();
  } else {
    write_output(a.out, labeling);
    std::cout << rep.str();
  }
  return kOk;
}

int cmd_oracle(const std::string& path) {
  const LabelInstance inst = parse_instance(read_file(path));
  const Labeling best = exact_1sh(inst);
  std::cout << format_labeling(best) << "# weight " << weight_of(inst, best).str() << "\n";
  return kOk;
}

int cmd_render(const std::string& inst_path, const std::string& lab_path, const std::string& out) {
  const LabelInstance inst = parse_instance(read_file(inst_path));
  const AnchorLabeling lab = parse_anchor_labeling(read_file(lab_path), inst);
  write_output(out, render_svg(inst, lab));
  return kOk;
}

int cmd_selftest(const SelftestOptions& opt) {
  const auto results = run_selftest(opt);
  bool ok = true;
  for (const SuiteResult& r : results) {
    std::cout << "suite " << r.name << ": " << r.trials << " trials, " << r.failures
              << " failures\n";
    if (r.failures > 0) {
      ok = false;
      std::cout << "first failure in " << r.name << ": " << r.first_failure << "\n";
    }
  }
  std::cout << "selftest " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_bench(std::uint64_t seed, bool timing, int threads) {
  using Clock = std::chrono::steady_clock;
  auto elapsed = [](Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
  };
  Generator gen(seed);
  std::cout << "bench seed " << seed << "\n";
  for (int n : {6, 8, 10, 12}) {
    const auto start = Clock::now();
    int removed = 0;
    BigInt gmax = 0;
    for (int i = 0; i < 20; ++i) {
      auto c = gen.graph_with_decomposition(n);
      const LevelTrimming r = level_trimming(c.graph, c.decomposition, 2);
      removed += static_cast<int>(r.removed.size());
      gmax = std::max(gmax, r.params.g);
    }
    std::cout << "trim n<=" << n << " cases 20 removed " << removed << " max-g " << gmax.get_str();
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", elapsed(start));
      std::cout << " ms " << buf;
    }
    std::cout << "\n";
  }
  for (int n : {3, 4, 5, 6}) {
    const auto start = Clock::now();
    Rational total;
    std::size_t candidates = 0;
    for (int i = 0; i < 10; ++i) {
      const LabelInstance inst = gen.instance(n);
      PipelineOptions opt;
      opt.eps = Rational(1, 2);
      opt.g = {GMode::kFixed, 2};
      opt.threads = threads;
      const PipelineResult r = ptas_1sh(inst, opt);
      total += r.weight;
      candidates += r.candidates;
    }
    std::cout << "label-1sh n=" << n << " cases 10 weight " << total.str() << " candidates "
              << candidates;
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", elapsed(start));
      std::cout << " ms " << buf;
    }
    std::cout << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph trimming and sliding-label placement"};
  app.require_subcommand(1);

  TrimArgs trim;
  auto* c_trim = app.add_subcommand("trim", "Trim a graph by deleting decomposition levels");
  c_trim->add_option("graph", trim.graph, "graph file")->required();
  c_trim->add_option("decomposition", trim.decomposition, "tree decomposition file");
  c_trim->add_flag("--auto", "build the decomposition (default without a file)");
  c_trim->add_flag("--planar", trim.planar, "layer a planar embedding first");
  c_trim->add_option("--t", trim.t, "weight fraction t")->check(CLI::Range(2, 1000000));
  c_trim->add_option("--mode", trim.mode, "decomposition mode")
      ->check(CLI::IsMember({"auto", "exact", "minfill"}));
  c_trim->add_option("--out", trim.out, "write the removed vertices here");

  std::string dec_graph, dec_mode = "auto";
  auto* c_dec = app.add_subcommand("decompose", "Build a tree decomposition");
  c_dec->add_option("graph", dec_graph)->required();
  c_dec->add_option("--mode", dec_mode)->check(CLI::IsMember({"auto", "exact", "minfill"}));

  std::string deps_inst, deps_lab;
  std::vector<std::string> deps_stops;
  auto* c_deps = app.add_subcommand("deps", "Dependency graph of a labeling");
  c_deps->add_option("instance", deps_inst)->required();
  c_deps->add_option("labeling", deps_lab)->required();
  c_deps->add_option("--stop", deps_stops, "extra stopping values");

  std::string cand_inst;
  int cand_g = 0;
  std::vector<std::string> cand_stops;
  auto* c_cand = app.add_subcommand("candidates", "Candidate label positions");
  c_cand->add_option("instance", cand_inst)->required();
  c_cand->add_option("--g", cand_g)->required()->check(CLI::NonNegativeNumber);
  c_cand->add_option("--stop", cand_stops, "extra stopping values");

  LabelArgs label;
  auto* c_label = app.add_subcommand("label", "Approximate maximum-weight labeling");
  c_label->add_option("instance", label.instance)->required();
  c_label->add_option("--model", label.model)->check(CLI::IsMember({"1sh", "2sh", "4s"}));
  c_label->add_option("--epsilon", label.epsilon, "rational in (0, 1]");
  c_label->add_option("--g-mode", label.g_mode, "theory | exhaustive | fixed:<g>");
  c_label->add_option("--downstream", label.downstream)
      ->check(CLI::IsMember({"default", "exact", "shifting"}));
  c_label->add_option("--budget", label.budget, "branch-and-bound node cap");
  c_label->add_option("--threads", label.threads)->check(CLI::Range(1, 256));
  c_label->add_flag("--verify-oracle", label.verify, "compare with the exact optimum");
  c_label->add_option("--out", label.out, "write the labeling here");

  std::string oracle_inst;
  auto* c_oracle = app.add_subcommand("oracle", "Exact optimum by exhaustive search");
  c_oracle->add_option("instance", oracle_inst)->required();

  std::string render_inst, render_lab, render_out;
  auto* c_render = app.add_subcommand("render", "Draw a labeling as SVG");
  c_render->add_option("instance", render_inst)->required();
  c_render->add_option("labeling", render_lab)->required();
  c_render->add_option("--out", render_out);

  SelftestOptions st;
  std::string mutant;
  auto* c_self = app.add_subcommand("selftest", "Run the randomized invariant suites");
  c_self->add_option("--seed", st.seed);
  c_self->add_option("--trials", st.trials)->check(CLI::NonNegativeNumber);
  c_self->add_option("--max-n", st.max_n)->check(CLI::NonNegativeNumber);
  c_self->add_option("--threads", st.threads)->check(CLI::Range(1, 256));
  c_self->add_option("--mutant", mutant, "inject a known defect")
      ->check(CLI::IsMember({"open-interval"}));

  std::uint64_t bench_seed = 1;
  bool bench_timing = false;
  int bench_threads = 1;
  auto* c_bench = app.add_subcommand("bench", "Deterministic workload summary");
  c_bench->add_option("--seed", bench_seed);
  c_bench->add_flag("--timing", bench_timing, "append wall-clock times");
  c_bench->add_option("--threads", bench_threads)->check(CLI::Range(1, 256));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_trim) return cmd_trim(trim);
    if (*c_dec) return cmd_decompose(dec_graph, dec_mode);
    if (*c_deps) return cmd_deps(deps_inst, deps_lab, deps_stops);
    if (*c_cand) return cmd_candidates(cand_inst, cand_g, cand_stops);
    if (*c_label) return cmd_label(label);
    if (*c_oracle) return cmd_oracle(oracle_inst);
    if (*c_render) return cmd_render(render_inst, render_lab, render_out);
    if (*c_self) {
      if (mutant == "open-interval") st.rule = IntervalRule::kOpen;
      return cmd_selftest(st);
    }
    if (*c_bench) return cmd_bench(bench_seed, bench_timing, bench_threads);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const SizeGuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kRefused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
