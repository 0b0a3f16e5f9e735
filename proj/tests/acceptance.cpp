// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Every comparison is exact rational or integer arithmetic; the only
// tolerances are the wall-clock limits printed next to each line.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "trimlab/discretization.hpp"
#include "trimlab/generators.hpp"
#include "trimlab/labeling_io.hpp"
#include "trimlab/solver.hpp"
#include "trimlab/trimming.hpp"

using namespace trimlab;
namespace fs = std::filesystem;

namespace {

// Collects failures for one criterion; keeps the first few for the report.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(what);
  }
  long checks() const { return checks_; }
  long failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> notes_;
};

int g_failed = 0;

void criterion(const std::string& name, double limit_s, const std::string& tolerance,
               const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool pass = c.failures() == 0 && in_time;
  if (!pass) ++g_failed;
  char time_buf[64];
  std::snprintf(time_buf, sizeof time_buf, "%.2fs < %.0fs", secs, limit_s);
  std::cout << (pass ? "PASS " : "FAIL ") << name << " [" << tolerance << "; " << c.checks()
            << " checks, " << c.failures() << " failed; " << time_buf << "]\n";
  for (const auto& n : c.notes()) std::cout << "     " << n << "\n";
  if (!in_time) std::cout << "     over the time limit\n";
  std::cout.flush();
}

std::string str(const BigInt& v) { return v.get_str(); }

// ceil(a/b) for positive integers.
BigInt ceil_div(const BigInt& a, long b) { return (a + (b - 1)) / b; }

void formula_reproduction(Check& c) {
  for (int k = 0; k <= 10; ++k) {
    for (int s = 0; s <= 3; ++s) {
      for (int t = 2; t <= 5; ++t) {
        const auto b = g_bound(k, s, t);
        const BigInt a = s >= 2 ? BigInt(k + 1) : oracle::ceil_half(k);
        BigInt g;
        if (a <= 1) {
          g = BigInt(2 * (s + 1) * t - 3) * (k + 1);
        } else {
          g = (oracle::power(a, (s + 1) * t - 2) * (a + 1) - 2) * (k + 1) / (a - 1);
        }
        c.expect(b.a == a && b.g == g && b.g == oracle::level_g(k, s, t),
                 "g_bound(" + std::to_string(k) + "," + std::to_string(s) + "," +
                     std::to_string(t) + ") = " + str(b.g) + ", expected " + str(g));
      }
    }
  }
  for (int k = 0; k <= 10; ++k) {
    for (int d = 1; d <= 4; ++d) {
      for (int t = 2; t <= 5; ++t) {
        const auto b = twdeg_g_bound(k, d, t);
        const BigInt K = BigInt(9 * k + 7) * d * (d + 1) - 1;
        c.expect(b.K == K && b.g == oracle::power(ceil_div(K, 2), 2 * t),
                 "twdeg_g_bound(" + std::to_string(k) + "," + std::to_string(d) + "," +
                     std::to_string(t) + ")");
        if (k >= 1) c.expect(b.K >= 31, "K >= 31 fails at k=" + std::to_string(k));
      }
    }
  }
  for (int d = 1; d <= 4; ++d) {
    for (int t = 1; t <= 5; ++t) {
      const auto b = planar_g_bound(d, t);
      const BigInt K = BigInt(54 * t - 29) * d * (d + 1) - 1;
      c.expect(b.K == K && b.g == oracle::power(ceil_div(K, 2), 4 * t),
               "planar_g_bound(" + std::to_string(d) + "," + std::to_string(t) + ")");
      // Alphas with 27 alpha t integral: 3, 4, 7/3 (when 27*7t/3 = 63t).
      for (const Rational& alpha : {Rational(3), Rational(4), Rational(7, 3), Rational(5, 2)}) {
        const Rational scaled = Rational(27) * alpha * Rational(t);
        if (!scaled.is_integer()) continue;
        const auto r = remark_bound(d, t, alpha);
        const BigInt RK = (scaled.numerator() - 29) * d * (d + 1) - 1;
        // 2 ceil(alpha t / (alpha - 1)), from numerator and denominator.
        const Rational q = alpha * Rational(t) / (alpha - Rational(1));
        const BigInt num = q.numerator();
        const BigInt den = q.denominator();
        const BigInt ceil_q = (num + den - 1) / den;
        const int e = static_cast<int>(2 * ceil_q.get_si());
        c.expect(r.K == RK && r.exponent == e && r.bound == oracle::power(ceil_div(RK, 2), e),
                 "remark_bound(" + std::to_string(d) + "," + std::to_string(t) + "," +
                     alpha.str() + ")");
      }
    }
  }
}

void check_trimming(Check& c, const WeightedGraph& g, const TreeDecomposition& d, int t,
                    const std::string& tag, int* removed_any, int* binding) {
  const auto lt = level_trimming(g, d, t);
  c.expect(lt.params.k == width(d) && lt.params.s == elongation(d),
           tag + ": reported (k, s) differ from the decomposition");
  c.expect(lt.params.g == g_bound(lt.params.k, lt.params.s, t).g, tag + ": g mismatch");
  c.expect(g.weight_of(lt.removed) * Rational(t) <= g.total_weight(), tag + ": weight(U) > W/t");
  const int longest = oracle::subset_longest_path(remove_vertices(g, lt.removed).graph);
  c.expect(BigInt(longest) <= lt.params.g,
           tag + ": path of " + std::to_string(longest) + " edges > g " + str(lt.params.g));
  if (!lt.removed.empty()) ++*removed_any;
  if (lt.params.g < oracle::subset_longest_path(g)) ++*binding;
}

void trimming_soundness(Check& c) {
  Generator gen(1001);
  int removed_any = 0, binding = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto gc = gen.graph_with_decomposition(14);
    check_trimming(c, gc.graph, gc.decomposition, gen.uniform(2, 5),
                   "trial " + std::to_string(trial), &removed_any, &binding);
  }
  // The generator mostly yields shallow decompositions, where a whole residue
  // class is empty. Long paths and sparse trees with built decompositions and
  // random roots are deep enough for g to fall below the longest path.
  for (int trial = 0; trial < 500; ++trial) {
    const bool path = gen.coin(1, 2);
    const int n = path ? gen.uniform(11, 14) : gen.uniform(2, 14);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(path ? v - 1 : gen.uniform(std::max(0, v - 2), v - 1), v);
    for (int x = path ? 0 : gen.uniform(0, 2); x > 0; --x) {
      const int a = gen.uniform(0, n - 1), b = gen.uniform(0, n - 1);
      if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    const WeightedGraph g(n, edges);
    auto d = build_tree_decomposition(g, DecompositionMode::kMinFill);
    d.root = gen.uniform(0, d.node_count() - 1);
    check_trimming(c, g, d, path ? 2 : gen.uniform(2, 3), "deep trial " + std::to_string(trial),
                   &removed_any, &binding);
  }
  c.expect(removed_any >= 100, "coverage: only " + std::to_string(removed_any) + " nonempty U");
  c.expect(binding >= 100, "coverage: g below the longest path only " + std::to_string(binding) +
                               " times");
}

void clique_control(Check& c) {
  for (int n = 4; n <= 10; ++n) {
    const WeightedGraph g = complete_graph(n);
    for (int t = 2; t <= 3; ++t) {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> u;
        for (int v = 0; v < n; ++v) {
          if (mask >> v & 1u) u.push_back(v);
        }
        if (g.weight_of(u) * Rational(t) > g.total_weight()) continue;
        const int left = oracle::subset_longest_path(remove_vertices(g, u).graph);
        c.expect(Rational(left) >= Rational(n) * (Rational(1) - Rational(1, t)) - Rational(1),
                 "K" + std::to_string(n) + " t=" + std::to_string(t) + " mask " +
                     std::to_string(mask));
      }
    }
  }
}

// Points in a band of rows `span` tall, so most labels compete along x.
LabelInstance row_instance(Generator& gen, int n, const Rational& span) {
  std::vector<LabelPoint> points;
  std::set<std::pair<Rational, Rational>> used;
  while (static_cast<int>(points.size()) < n) {
    LabelPoint p;
    p.x = gen.grid(Rational(0), Rational(n), 4);
    p.y = gen.grid(Rational(0), span, 4);
    if (!used.emplace(p.x, p.y).second) continue;
    p.length = gen.grid(Rational(1, 2), Rational(3, 2), 4);
    p.weight = Rational(gen.uniform(1, 4));
    points.push_back(p);
  }
  return make_instance(std::move(points));
}

// Moves the labels of `lab` around without changing which points are labeled,
// preferring off-grid eighths and positions touching a neighbour, so chains of
// dependencies form. Feasibility is kept after every move.
Labeling replace_labels(const LabelInstance& inst, Labeling lab, Generator& gen) {
  std::vector<int> ids;
  for (const auto& [id, z] : lab.z) ids.push_back(id);
  for (int round = 0; round < 4 * static_cast<int>(ids.size()); ++round) {
    const int id = ids[gen.uniform(0, static_cast<int>(ids.size()) - 1)];
    const LabelPoint& p = inst[id];
    auto fits = [&](const Rational& z) {
      if (z < p.x - p.length || z > p.x) return false;
      for (const auto& [q, zq] : lab.z) {
        if (q == id || !y_overlap(p, inst[q])) continue;
        if (!(z + p.length <= zq || zq + inst[q].length <= z)) return false;
      }
      return true;
    };
    std::vector<Rational> any, touch;
    for (Rational z = p.x - p.length; z <= p.x; z += Rational(1, 8)) {
      if (gen.coin(1, 3) && fits(z)) any.push_back(z);
    }
    for (const auto& [q, zq] : lab.z) {
      if (q == id || !y_overlap(p, inst[q])) continue;
      const Rational z = zq + inst[q].length;
      if (fits(z)) touch.push_back(z);
    }
    const auto& pool = !touch.empty() && (any.empty() || gen.coin(3, 4)) ? touch : any;
    if (!pool.empty()) lab.z[id] = pool[gen.uniform(0, static_cast<int>(pool.size()) - 1)];
  }
  return lab;
}

// Sweeps points by x and butts each label against the furthest y-overlapping
// label already placed, plus a gap of 0..3 sixteenths. Feasible by
// construction; off-grid ends let dependency arcs survive the stopping set.
Labeling packed_labeling(const LabelInstance& inst, Generator& gen) {
  std::vector<int> order(inst.size());
  for (int i = 0; i < inst.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(inst[a].x, inst[a].y) < std::pair(inst[b].x, inst[b].y);
  });
  Labeling lab;
  for (int id : order) {
    if (gen.coin(1, 8)) continue;
    const LabelPoint& p = inst[id];
    Rational z = p.x - p.length;
    for (const auto& [q, zq] : lab.z) {
      if (y_overlap(p, inst[q])) z = std::max(z, zq + inst[q].length);
    }
    if (gen.coin(1, 2)) z += Rational(gen.uniform(1, 3), 16);
    if (z <= p.x) lab.z.emplace(id, z);
  }
  return lab;
}

struct LabelCase {
  LabelInstance inst;
  Labeling lab;
  std::vector<Rational> user;
  std::vector<int> removed;  // point ids
};

std::vector<LabelCase> label_corpus() {
  Generator gen(2002);
  std::vector<LabelCase> out;
  for (int trial = 0; trial < 1000; ++trial) {
    LabelCase lc;
    // Odd trials pack one band of rows so dependency chains are common.
    const bool rows = trial % 2 == 1;
    lc.inst = rows ? row_instance(gen, gen.uniform(2, 10), Rational(3, 2)) : gen.instance(gen.uniform(0, 10));
    lc.lab = rows ? packed_labeling(lc.inst, gen) : gen.feasible_labeling(lc.inst);
    for (int i = gen.uniform(0, 2); i > 0; --i) {
      lc.user.push_back(gen.grid(Rational(-2), Rational(10), 4));
    }
    std::sort(lc.user.begin(), lc.user.end());
    lc.user.erase(std::unique(lc.user.begin(), lc.user.end()), lc.user.end());
    for (const auto& [id, z] : lc.lab.z) {
      if (gen.coin(1, 4)) lc.removed.push_back(id);
    }
    out.push_back(std::move(lc));
  }
  return out;
}

void dependency_structure(Check& c, const std::vector<LabelCase>& corpus) {
  long arcs = 0, saturated = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& lc = corpus[i];
    const std::string tag = "labeling " + std::to_string(i);
    c.expect(validate_labeling(lc.inst, lc.lab).empty(), tag + ": generator gave infeasible");
    const auto sp = stopping_set(lc.inst, lc.user).values;
    const auto g = dependency_graph(lc.inst, lc.lab, sp);
    const auto r = check_structure(g);
    c.expect(r.max_in_degree <= 2 && r.max_out_degree <= 2, tag + ": degree above 2");
    c.expect(r.triangle_violations.empty(), tag + ": triangle property violated");
    c.expect(r.crossing_pairs.empty(), tag + ": crossing edges");
    c.expect(r.acyclic, tag + ": cycle");
    // Independent degree count from the edge list.
    std::vector<int> in(g.vertex_count(), 0), out(g.vertex_count(), 0);
    for (const auto& e : g.edges) {
      ++out[e.from];
      ++in[e.to];
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      c.expect(in[v] <= 2 && out[v] <= 2, tag + ": raw degree above 2");
      if (in[v] == 2 || out[v] == 2) ++saturated;
    }
    arcs += static_cast<long>(g.edges.size());
  }
  c.expect(arcs >= 500, "coverage: only " + std::to_string(arcs) + " arcs");
  c.expect(saturated >= 10, "coverage: degree 2 reached " + std::to_string(saturated) + " times");
}

void normalization_contract(Check& c, const std::vector<LabelCase>& corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& lc = corpus[i];
    const std::string tag = "labeling " + std::to_string(i);
    const Labeling n = normalize(lc.inst, lc.lab, lc.user, lc.removed);
    c.expect(validate_labeling(lc.inst, n).empty(), tag + ": normalized labeling infeasible");
    c.expect(n.size() == lc.lab.size() - static_cast<int>(lc.removed.size()),
             tag + ": wrong label count");
    for (const auto& [id, z] : n.z) {
      c.expect(z <= lc.lab.z.at(id), tag + ": position moved right");
      c.expect(rank_in(lc.user, z) == rank_in(lc.user, lc.lab.z.at(id)), tag + ": rank changed");
    }
    c.expect(normalize(lc.inst, n, lc.user, {}) == n, tag + ": not idempotent");
    const auto sp = stopping_set(lc.inst, lc.user).values;
    const auto dg = dependency_graph(lc.inst, lc.lab, sp);
    std::vector<int> removed_vertices;
    for (int v = 0; v < dg.vertex_count(); ++v) {
      if (std::find(lc.removed.begin(), lc.removed.end(), dg.ids[v]) != lc.removed.end()) {
        removed_vertices.push_back(v);
      }
    }
    const int g = longest_directed_path(dg, removed_vertices);
    for (const auto& [id, z] : n.z) {
      c.expect(is_candidate(lc.inst, lc.user, g, z), tag + ": position outside M");
    }
  }
}

void trim_normalize_end_to_end(Check& c) {
  Generator gen(3003);
  int arcs = 0, trimmed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const bool rows = trial % 2 == 1;
    const auto inst = rows ? row_instance(gen, gen.uniform(2, 6), Rational(1, 2)) : gen.instance(gen.uniform(0, 6));
    Labeling opt_lab = exact_1sh(inst);
    const Rational opt = weight_of(inst, opt_lab);
    // Any labeling of the same point set is optimal too.
    if (rows) opt_lab = replace_labels(inst, opt_lab, gen);
    const std::string base = "trial " + std::to_string(trial);
    c.expect(validate_labeling(inst, opt_lab).empty() && weight_of(inst, opt_lab) == opt,
             base + ": re-placed optimum broken");
    const auto sp = stopping_set(inst, {}).values;
    const auto dg = dependency_graph(inst, opt_lab, sp);
    arcs += static_cast<int>(dg.edges.size());
    const WeightedGraph ug = undirected(dg, inst);
    const auto d = build_tree_decomposition(ug, DecompositionMode::kExactTiny);
    for (int t : {2, 4}) {
      const std::string tag = base + " t=" + std::to_string(t);
      const auto lt = level_trimming(ug, d, t);
      std::vector<int> removed_ids;
      for (int v : lt.removed) removed_ids.push_back(dg.ids[v]);
      if (!removed_ids.empty()) ++trimmed;
      c.expect(ug.weight_of(lt.removed) * Rational(t) <= opt, tag + ": trimmed too much");
      const int left = oracle::subset_longest_path(remove_vertices(ug, lt.removed).graph);
      c.expect(BigInt(left) <= lt.params.g, tag + ": trimmed graph path exceeds g");
      const Labeling n = normalize(inst, opt_lab, {}, removed_ids);
      c.expect(validate_labeling(inst, n).empty(), tag + ": result infeasible");
      c.expect(weight_of(inst, n) >= (Rational(1) - Rational(1, t)) * opt,
               tag + ": weight " + weight_of(inst, n).str() + " < (1-1/t) " + opt.str());
      // The longest kept path is at most g, so M for that length already
      // holds every position.
      for (const auto& [id, z] : n.z) {
        c.expect(is_candidate(inst, {}, left, z), tag + ": position not in M");
      }
    }
  }
  c.expect(arcs >= 50, "coverage: only " + std::to_string(arcs) + " dependency arcs");
  c.expect(trimmed >= 100, "coverage: only " + std::to_string(trimmed) + " nonempty trims");
}

void oracle_cross_validation(Check& c) {
  Generator gen(4004);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = gen.instance(gen.uniform(0, 5));
    const Rational a = weight_of(inst, exact_1sh(inst));
    const int g = std::max(0, inst.size() - 1);
    const auto m = candidate_positions(inst, {}, g, 1'000'000);
    const auto mp = shared_positions(inst, m.values);
    const Labeling l = exact_multipos(mp, Budget{});
    c.expect(validate_multipos(mp, l).empty(), "trial " + std::to_string(trial) + ": infeasible");
    const Rational b = weight_of(inst, l);
    c.expect(a == b, "trial " + std::to_string(trial) + ": exact_1sh " + a.str() +
                         " vs candidate solve " + b.str());
  }
}

// Best weight over every "unlabeled or one allowed anchor" assignment.
Rational brute_anchor(const AnchorLabelInstance& inst) {
  const int n = inst.base.size();
  std::vector<Rect> chosen;
  Rational best(0);
  std::function<void(int, Rational)> go = [&](int i, Rational w) {
    if (i == n) {
      best = std::max(best, w);
      return;
    }
    go(i + 1, w);
    for (const Anchor& a : inst.anchors[i]) {
      const Rect r = anchor_rectangle(inst.base[i], a);
      bool ok = true;
      for (const Rect& q : chosen) {
        if (r.x0 < q.x1 && q.x0 < r.x1 && r.y0 < q.y1 && q.y0 < r.y1) ok = false;
      }
      if (!ok) continue;
      chosen.push_back(r);
      go(i + 1, w + inst.base[i].weight);
      chosen.pop_back();
    }
  };
  go(0, Rational(0));
  return best;
}

PipelineOptions exhaustive(const Rational& eps) {
  PipelineOptions o;
  o.eps = eps;
  o.g.mode = GMode::kExhaustive;
  return o;
}

void ptas_ratio(Check& c) {
  Generator gen(5005);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ai = gen.anchor_instance(gen.uniform(0, 8), 4);
    const Rational opt = weight_of(ai.base, exact_anchor(ai, Budget{}));
    const std::string tag = "4M trial " + std::to_string(trial);
    c.expect(opt == brute_anchor(ai), tag + ": exact solver disagrees with brute force");
    for (const Rational& eps : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
      const auto r = shifting_ptas(ai, eps, Budget{});
      c.expect(validate_anchor_labeling(ai.base, r.labeling, &ai).empty(), tag + ": infeasible");
      c.expect(weight_of(ai.base, r.labeling) >= (Rational(1) - eps) * opt,
               tag + " eps " + eps.str() + ": below (1 - eps) OPT");
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = gen.instance(gen.uniform(0, 6));
    const Rational opt = weight_of(inst, exact_1sh(inst));
    const auto r = ptas_1sh(inst, exhaustive(Rational(1, 2)));
    c.expect(validate_anchor_labeling(inst, r.labeling).empty(), "1SH infeasible");
    c.expect(r.weight == opt, "1SH trial " + std::to_string(trial) + ": " + r.weight.str() +
                                  " vs exact " + opt.str());
  }
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = gen.instance(gen.uniform(0, 4));
    const auto tag = "containment trial " + std::to_string(trial);
    const auto eps = Rational(1, 2);
    const Rational one = ptas_1sh(inst, exhaustive(eps)).weight;
    const auto two = ptas_2sh(inst, exhaustive(eps));
    const auto four = ptas_4s(inst, exhaustive(eps));
    c.expect(validate_anchor_labeling(inst, two.labeling).empty(), tag + ": 2SH infeasible");
    c.expect(validate_anchor_labeling(inst, four.labeling).empty(), tag + ": 4S infeasible");
    c.expect(two.weight == weight_of(inst, two.labeling), tag + ": 2SH weight mismatch");
    c.expect(four.weight == weight_of(inst, four.labeling), tag + ": 4S weight mismatch");
    c.expect(two.weight >= one, tag + ": 2SH below 1SH");
    c.expect(four.weight >= one, tag + ": 4S below 1SH");
  }
}

// --- command-line determinism ------------------------------------------------

std::string run_cli(const std::string& args, int* status) {
  const std::string cmd = std::string(TRIMLAB_CLI) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  *status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

void determinism(Check& c) {
  const fs::path dir = fs::temp_directory_path() / ("trimlab_accept_" + std::to_string(getpid()));
  fs::create_directories(dir);
  auto put = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  Generator gen(6006);
  const auto inst = put("i.inst", format_instance(gen.instance(7)));
  const auto small = put("s.inst", format_instance(gen.instance(5)));
  const auto graph = put("g.g",
                         "graph 9\ne 0 1\ne 1 2\ne 3 4\ne 4 5\ne 6 7\ne 7 8\n"
                         "e 0 3\ne 3 6\ne 1 4\ne 4 7\ne 2 5\ne 5 8\n");
  const auto lab = (dir / "i.lab").string();
  int st = 0;
  run_cli("label " + inst + " --out " + lab, &st);
  c.expect(st == 0, "label --out failed");

  const std::vector<std::string> commands = {
      "trim " + graph + " --auto --t 2",
      "trim " + graph + " --planar --t 2",
      "decompose " + graph,
      "deps " + inst + " " + lab,
      "candidates " + small + " --g 2",
      "oracle " + small,
      "render " + inst + " " + lab,
      "label " + inst + " --model 1sh",
      "label " + inst + " --model 1sh --downstream shifting --epsilon 1/4",
      "label " + inst + " --model 2sh --downstream shifting",
      "label " + small + " --model 4s",
      "label " + small + " --model 4s --downstream shifting --epsilon 1/2",
      "selftest --seed 5 --trials 30",
      "bench --seed 7",
  };
  const bool threaded[] = {false, false, false, false, false, false, false,
                           true,  true,  true,  true,  true,  true,  true};
  for (std::size_t i = 0; i < commands.size(); ++i) {
    int s1 = 0, s2 = 0;
    const std::string a = run_cli(commands[i], &s1);
    const std::string b = run_cli(commands[i], &s2);
    c.expect(s1 == 0 && s2 == 0, commands[i] + ": nonzero exit");
    c.expect(a == b, commands[i] + ": output differs between runs");
    if (threaded[i]) {
      for (int th : {1, 2, 4}) {
        int s3 = 0;
        const std::string p = run_cli(commands[i] + " --threads " + std::to_string(th), &s3);
        c.expect(s3 == 0 && p == a,
                 commands[i] + ": output differs with --threads " + std::to_string(th));
      }
    }
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
}

}  // namespace

int main() {
  criterion("formula-reproduction", 1, "exact integer equality", formula_reproduction);
  criterion("trimming-soundness", 120, "exact; 1000 + 500 deep triples, |V| <= 14", trimming_soundness);
  criterion("clique-negative-control", 60, "exact; n in 4..10, t in {2,3}", clique_control);
  const auto corpus = label_corpus();
  criterion("dependency-structure", 60, "exact; 1000 labelings, n <= 10",
            [&](Check& c) { dependency_structure(c, corpus); });
  criterion("normalization-contract", 60, "exact; same 1000 labelings",
            [&](Check& c) { normalization_contract(c, corpus); });
  criterion("trim-and-normalize-end-to-end", 120, "exact; 300 optima, n <= 6, t in {2,4}", trim_normalize_end_to_end);
  criterion("oracle-cross-validation", 120, "exact equality; 200 instances, n <= 5",
            oracle_cross_validation);
  criterion("ptas-ratio", 300, "exact; eps in {1,1/2,1/4}, 200 instances, n <= 8", ptas_ratio);
  criterion("determinism", 120, "byte-identical output", determinism);
  std::cout << (g_failed == 0 ? "acceptance: all criteria pass\n"
                              : "acceptance: " + std::to_string(g_failed) + " criteria fail\n");
  return g_failed == 0 ? 0 : 1;
}
