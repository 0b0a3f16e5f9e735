#include "trimlab/selftest.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "trimlab/embedding.hpp"
#include "trimlab/errors.hpp"
#include "trimlab/generators.hpp"
#include "trimlab/graph_io.hpp"
#include "trimlab/labeling_io.hpp"
#include "trimlab/solver.hpp"
#include "trimlab/trimming.hpp"

namespace trimlab {

namespace {

using Check = std::function<std::optional<std::string>(const LabelInstance&, const Labeling&)>;

std::optional<std::string> guarded(const Check& check, const LabelInstance& inst,
                                   const Labeling& lab) {
  try {
    return check(inst, lab);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

std::pair<LabelInstance, Labeling> drop_point(const LabelInstance& inst, const Labeling& lab,
                                              int id) {
  std::vector<LabelPoint> points;
  Labeling out;
  for (const LabelPoint& p : inst.points) {
    if (p.id == id) continue;
    const int fresh = static_cast<int>(points.size());
    if (auto it = lab.z.find(p.id); it != lab.z.end()) out.z.emplace(fresh, it->second);
    points.push_back(p);
  }
  return {make_instance(std::move(points)), out};
}

// Deletes points one at a time as long as the check keeps failing.
std::string minimized(const Check& check, LabelInstance inst, Labeling lab, std::string message) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int id = 0; id < inst.size(); ++id) {
      auto [smaller, smaller_lab] = drop_point(inst, lab, id);
      if (auto m = guarded(check, smaller, smaller_lab)) {
        inst = std::move(smaller);
        lab = std::move(smaller_lab);
        message = *m;
        shrunk = true;
        break;
      }
    }
  }
  return message + "\n" + format_instance(inst) + format_labeling(lab);
}

class Suite {
 public:
  Suite(std::string name, const SelftestOptions& opt, int index)
      : gen_(opt.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(index)) {
    result_.name = std::move(name);
  }

  Generator& gen() { return gen_; }

  void record(const std::optional<std::string>& failure) {
    ++result_.trials;
    if (!failure) return;
    if (result_.failures++ == 0) result_.first_failure = *failure;
  }

  void run_labeled(const LabelInstance& inst, const Labeling& lab, const Check& check) {
    auto failure = guarded(check, inst, lab);
    if (failure && result_.failures == 0) failure = minimized(check, inst, lab, *failure);
    record(failure);
  }

  SuiteResult result() && { return std::move(result_); }

 private:
  Generator gen_;
  SuiteResult result_;
};

std::string show(const std::vector<std::string>& report) {
  return report.empty() ? std::string() : report.front();
}

SuiteResult trimming_suite(const SelftestOptions& opt, int index) {
  Suite suite("trimming", opt, index);
  const int limit = std::min(opt.max_n, 14);
  for (int i = 0; i < opt.trials; ++i) {
    auto c = suite.gen().graph_with_decomposition(limit);
    const int t = suite.gen().uniform(2, 4);
    std::optional<std::string> failure;
    try {
      const LevelTrimming r = level_trimming(c.graph, c.decomposition, t);
      if (!is_trimming(c.graph, r.removed, t, r.params.g)) {
        failure = "not a (" + std::to_string(t) + ", " + r.params.g.get_str() + ")-trimming\n" +
                  format_graph(c.graph) + format_decomposition(c.decomposition);
      }
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what() + "\n" + format_graph(c.graph) +
                format_decomposition(c.decomposition);
    }
    suite.record(failure);
  }
  return std::move(suite).result();
}

SuiteResult clique_suite(const SelftestOptions& opt, int index) {
  Suite suite("clique", opt, index);
  for (int n = 4; n <= std::min(opt.max_n, 10); ++n) {
    for (int t : {2, 3}) {
      const WeightedGraph k = complete_graph(n);
      std::optional<std::string> failure;
      for (unsigned mask = 0; mask < (1u << n) && !failure; ++mask) {
        std::vector<int> u;
        for (int v = 0; v < n; ++v) {
          if (mask & (1u << v)) u.push_back(v);
        }
        if (Rational(static_cast<long long>(u.size() * t)) > Rational(n)) continue;
        const int left = longest_simple_path(remove_vertices(k, u).graph);
        if (Rational(left + 1) < Rational(n) * (Rational(1) - Rational(1, t))) {
          failure = "K" + std::to_string(n) + " minus " + std::to_string(u.size()) +
                    " vertices keeps only a " + std::to_string(left) + "-edge path";
        }
      }
      suite.record(failure);
    }
  }
  return std::move(suite).result();
}

std::vector<Rational> random_stops(Generator& gen) {
  std::vector<Rational> s;
  const int count = gen.uniform(0, 2);
  for (int i = 0; i < count; ++i) s.push_back(gen.grid(Rational(-2), Rational(8), 4));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

SuiteResult structure_suite(const SelftestOptions& opt, int index) {
  Suite suite("structure", opt, index);
  const int limit = std::min(opt.max_n, 10);
  for (int i = 0; i < opt.trials; ++i) {
    const LabelInstance inst = suite.gen().instance(suite.gen().uniform(0, std::max(0, limit)));
    const std::vector<Rational> user = random_stops(suite.gen());
    auto check = [&](const LabelInstance& in, const Labeling& l) -> std::optional<std::string> {
      const StoppingSet s = stopping_set(in, user);
      const DependencyGraph g = dependency_graph(in, l, s.values, opt.rule);
      const StructureReport r = check_structure(g);
      if (r.clean()) return std::nullopt;
      std::string why = !r.degree_violations.empty()     ? r.degree_violations.front()
                        : !r.triangle_violations.empty() ? r.triangle_violations.front()
                        : !r.crossing_pairs.empty()      ? std::string("crossing edges")
                                                         : std::string("cycle");
      return "dependency structure violated: " + why;
    };
    // Several labelings per instance: degenerate touching configurations
    // are rare per draw.
    for (int k = 0; k < 4; ++k) suite.run_labeled(inst, suite.gen().feasible_labeling(inst), check);
  }
  return std::move(suite).result();
}

std::optional<std::string> normalization_failure(const LabelInstance& inst, const Labeling& lab,
                                                 const std::vector<Rational>& user,
                                                 const std::vector<int>& removed_ids,
                                                 IntervalRule rule) {
  std::vector<int> removed;
  for (int id : removed_ids) {
    if (lab.z.contains(id)) removed.push_back(id);
  }
  const Labeling out = normalize(inst, lab, user, removed, rule);
  if (auto r = validate_labeling(inst, out); !r.empty()) return "normalized labeling infeasible: " + r.front();
  std::vector<Rational> s = user;
  std::sort(s.begin(), s.end());
  for (const auto& [id, z] : out.z) {
    const Rational& before = lab.z.at(id);
    if (z > before) return "p" + std::to_string(id) + " moved right";
    if (rank_in(s, z) != rank_in(s, before)) return "p" + std::to_string(id) + " changed rank";
  }
  if (normalize(inst, out, user, {}, rule) != out) return "normalization is not idempotent";
  const StoppingSet stops = stopping_set(inst, user);
  const DependencyGraph g = dependency_graph(inst, lab, stops.values, rule);
  std::vector<int> removed_vertices;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (std::find(removed.begin(), removed.end(), g.ids[v]) != removed.end()) {
      removed_vertices.push_back(v);
    }
  }
  const int path = longest_directed_path(g, removed_vertices);
  for (const auto& [id, z] : out.z) {
    if (!is_candidate(inst, user, path, z)) {
      return "p" + std::to_string(id) + " at " + z.str() + " is not a candidate for g = " +
             std::to_string(path);
    }
  }
  if (removed.empty() && weight_of(inst, out) != weight_of(inst, lab)) return "weight changed";
  return std::nullopt;
}

SuiteResult normalize_suite(const SelftestOptions& opt, int index) {
  Suite suite("normalize", opt, index);
  const int limit = std::min(opt.max_n, 10);
  for (int i = 0; i < opt.trials; ++i) {
    const LabelInstance inst = suite.gen().instance(suite.gen().uniform(0, std::max(0, limit)));
    const Labeling lab = suite.gen().feasible_labeling(inst);
    const std::vector<Rational> user = random_stops(suite.gen());
    std::vector<int> removed;
    for (const auto& [id, z] : lab.z) {
      if (suite.gen().coin(1, 4)) removed.push_back(id);
    }
    suite.run_labeled(inst, lab, [&](const LabelInstance& in, const Labeling& l) {
      // Ids shift when the minimizer drops points; only the full instance
      // keeps the sampled trimmed set.
      const bool original = in.size() == inst.size();
      return normalization_failure(in, l, user, original ? removed : std::vector<int>{},
                                   opt.rule);
    });
  }
  return std::move(suite).result();
}

SuiteResult oracle_suite(const SelftestOptions& opt, int index) {
  Suite suite("oracle", opt, index);
  const int limit = std::min(opt.max_n, 5);
  Budget budget;
  for (int i = 0; i < opt.trials; ++i) {
    const LabelInstance inst = suite.gen().instance(suite.gen().uniform(0, std::max(0, limit)));
    suite.run_labeled(inst, {}, [&](const LabelInstance& in, const Labeling&)
                                    -> std::optional<std::string> {
      const Labeling a = exact_1sh(in);
      const CandidateSet m =
          candidate_positions(in, {}, std::max(0, in.size() - 1), budget.max_candidates);
      const MultiPosInstance mp = shared_positions(in, m.values);
      const Labeling b = exact_multipos(mp, budget);
      if (auto r = validate_labeling(in, a); !r.empty()) return "oracle labeling infeasible";
      if (auto r = validate_multipos(mp, b); !r.empty()) return "candidate labeling infeasible";
      if (weight_of(in, a) != weight_of(in, b)) {
        return "optima differ: " + weight_of(in, a).str() + " vs " + weight_of(in, b).str();
      }
      return std::nullopt;
    });
  }
  return std::move(suite).result();
}

SuiteResult shifting_suite(const SelftestOptions& opt, int index) {
  Suite suite("shifting", opt, index);
  const int limit = std::min(opt.max_n, 8);
  Budget budget;
  const Rational eps_values[] = {Rational(1), Rational(1, 2), Rational(1, 4)};
  for (int i = 0; i < opt.trials; ++i) {
    const AnchorLabelInstance inst =
        suite.gen().anchor_instance(suite.gen().uniform(0, std::max(0, limit)), 4);
    const Rational eps = eps_values[i % 3];
    std::optional<std::string> failure;
    try {
      const AnchorLabeling best = exact_anchor(inst, budget);
      const ShiftingResult s = shifting_ptas(inst, eps, budget, opt.threads);
      if (auto r = validate_anchor_labeling(inst.base, s.labeling, &inst); !r.empty()) {
        failure = "shifting output infeasible: " + show(r);
      } else if (weight_of(inst.base, s.labeling) <
                 (Rational(1) - eps) * weight_of(inst.base, best)) {
        failure = "shifting weight " + weight_of(inst.base, s.labeling).str() + " below (1 - " +
                  eps.str() + ") * " + weight_of(inst.base, best).str();
      }
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) *failure += "\n" + format_instance(inst.base);
    suite.record(failure);
  }
  return std::move(suite).result();
}

SuiteResult ptas_suite(const SelftestOptions& opt, int index) {
  Suite suite("ptas-1sh", opt, index);
  const int limit = std::min(opt.max_n, 6);
  for (int i = 0; i < opt.trials; ++i) {
    const LabelInstance inst = suite.gen().instance(suite.gen().uniform(0, std::max(0, limit)));
    suite.run_labeled(inst, {}, [&](const LabelInstance& in, const Labeling&)
                                    -> std::optional<std::string> {
      PipelineOptions po;
      po.eps = Rational(1, 2);
      po.threads = opt.threads;
      const PipelineResult r = ptas_1sh(in, po);
      const Rational best = weight_of(in, exact_1sh(in));
      if (r.weight != best) return "exhaustive pipeline " + r.weight.str() + " vs OPT " + best.str();
      return std::nullopt;
    });
  }
  return std::move(suite).result();
}

SuiteResult trim_normalize_suite(const SelftestOptions& opt, int index) {
  Suite suite("trim-normalize", opt, index);
  const int limit = std::min(opt.max_n, 6);
  Budget budget;
  for (int i = 0; i < opt.trials; ++i) {
    const LabelInstance inst = suite.gen().instance(suite.gen().uniform(0, std::max(0, limit)));
    const int t = i % 2 == 0 ? 2 : 4;
    suite.run_labeled(inst, {}, [&](const LabelInstance& in, const Labeling&)
                                    -> std::optional<std::string> {
      const Labeling best = exact_1sh(in);
      const StoppingSet s = stopping_set(in, {});
      const DependencyGraph g = dependency_graph(in, best, s.values, opt.rule);
      const WeightedGraph ug = undirected(g, in);
      std::vector<Rational> xs, ys;
      for (const Point& p : g.coords) {
        xs.push_back(p.x);
        ys.push_back(p.y);
      }
      const PlaneEmbedding e = embedding_from_coordinates(ug, xs, ys);
      const PlanarTrimming trim = planar_trimming(ug, e, t);
      std::vector<int> removed_ids;
      for (int v : trim.removed) removed_ids.push_back(g.ids[v]);
      const int path = longest_directed_path(g, trim.removed);
      const Labeling out = normalize(in, best, {}, removed_ids, opt.rule);
      const CandidateSet m = candidate_positions(in, {}, path, budget.max_candidates);
      if (auto r = validate_multipos(shared_positions(in, m.values), out); !r.empty()) {
        return "re-normalized labeling rejected: " + r.front();
      }
      const Rational opt_w = weight_of(in, best);
      if (weight_of(in, out) < (Rational(1) - Rational(1, t)) * opt_w) {
        return "kept weight " + weight_of(in, out).str() + " below (1 - 1/" + std::to_string(t) +
               ") * " + opt_w.str();
      }
      return std::nullopt;
    });
  }
  return std::move(suite).result();
}

SuiteResult roundtrip_suite(const SelftestOptions& opt, int index) {
  Suite suite("roundtrip", opt, index);
  for (int i = 0; i < opt.trials; ++i) {
    std::optional<std::string> failure;
    const LabelInstance inst = suite.gen().instance(suite.gen().uniform(0, std::max(0, opt.max_n)));
    const Labeling lab = suite.gen().feasible_labeling(inst);
    auto c = suite.gen().graph_with_decomposition(opt.max_n);
    try {
      const std::string a = format_instance(inst);
      if (format_instance(parse_instance(a)) != a) failure = "instance round trip";
      const std::string b = format_labeling(lab);
      if (parse_labeling(b) != lab) failure = "labeling round trip";
      const std::string gtext = format_graph(c.graph);
      if (format_graph(parse_graph(gtext)) != gtext) failure = "graph round trip";
      const std::string dtext = format_decomposition(c.decomposition);
      if (format_decomposition(parse_decomposition(dtext)) != dtext) {
        failure = "decomposition round trip";
      }
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    suite.record(failure);
  }
  return std::move(suite).result();
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& opt) {
  std::vector<SuiteResult> out;
  out.push_back(trimming_suite(opt, 0));
  out.push_back(clique_suite(opt, 1));
  out.push_back(structure_suite(opt, 2));
  out.push_back(normalize_suite(opt, 3));
  out.push_back(oracle_suite(opt, 4));
  out.push_back(shifting_suite(opt, 5));
  out.push_back(ptas_suite(opt, 6));
  out.push_back(trim_normalize_suite(opt, 7));
  out.push_back(roundtrip_suite(opt, 8));
  return out;
}

}  // namespace trimlab
