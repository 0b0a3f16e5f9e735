#include "trimlab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "trimlab/discretization.hpp"
#include "trimlab/errors.hpp"
#include "trimlab/trimming.hpp"

namespace trimlab {

namespace {

template <typename T>
T env_number(const char* name, T fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  const std::string_view text(raw);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw std::invalid_argument(std::string(name) + " must be a positive integer, got '" +
                                std::string(text) + "'");
  }
  return value;
}

// Greedy leftmost placement over all orders of the points in `mask`.
class OrderSearch {
 public:
  OrderSearch(const LabelInstance& inst, unsigned mask) : inst_(inst) {
    for (int i = 0; i < inst.size(); ++i) {
      if (mask & (1u << i)) members_.push_back(i);
    }
    used_.assign(members_.size(), 0);
  }

  bool run() { return extend(); }
  const Labeling& labeling() const { return lab_; }

 private:
  bool extend() {
    if (lab_.size() == static_cast<int>(members_.size())) return true;
    for (std::size_t k = 0; k < members_.size(); ++k) {
      if (used_[k]) continue;
      const LabelPoint& p = inst_[members_[k]];
      Rational z = p.x - p.length;
      for (const auto& [id, zq] : lab_.z) {
        const LabelPoint& q = inst_[id];
        if (y_overlap(p, q)) z = std::max(z, zq + q.length);
      }
      if (z > p.x) continue;
      used_[k] = 1;
      lab_.z.emplace(p.id, z);
      if (extend()) return true;
      lab_.z.erase(p.id);
      used_[k] = 0;
    }
    return false;
  }

  const LabelInstance& inst_;
  std::vector<int> members_;
  std::vector<char> used_;
  Labeling lab_;
};

class AnchorSearch {
 public:
  AnchorSearch(const AnchorLabelInstance& inst, const Budget& budget)
      : inst_(inst), budget_(budget) {
    for (const LabelPoint& p : inst.base.points) {
      if (!inst.anchors.at(p.id).empty() && p.weight.sign() > 0) order_.push_back(p.id);
    }
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      const LabelPoint& p = inst.base[a];
      const LabelPoint& q = inst.base[b];
      if (p.x != q.x) return p.x < q.x;
      if (p.y != q.y) return p.y < q.y;
      return a < b;
    });
    for (int id : order_) {
      std::vector<std::pair<Rect, Anchor>> cs;
      for (const Anchor& a : inst.anchors[id]) {
        Rect r = anchor_rectangle(inst.base[id], a);
        bool dup = false;
        for (const auto& c : cs) dup = dup || c.first == r;
        if (!dup) cs.emplace_back(r, a);
      }
      cands_.push_back(std::move(cs));
    }
  }

  AnchorLabeling run() {
    chosen_.assign(order_.size(), -1);
    branch(0, Rational(0));
    AnchorLabeling out;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (best_choice_.size() == order_.size() && best_choice_[i] >= 0) {
        out.placed.emplace(order_[i], cands_[i][best_choice_[i]].second);
      }
    }
    return out;
  }

 private:
  bool compatible(std::size_t i, int c) const {
    const Rect& r = cands_[i][c].first;
    for (std::size_t j = 0; j < i; ++j) {
      if (chosen_[j] >= 0 && open_overlap(r, cands_[j][chosen_[j]].first)) return false;
    }
    return true;
  }

  void branch(std::size_t i, const Rational& weight) {
    if (++nodes_ > budget_.max_nodes) {
      throw BudgetError("exact solver exceeded " + std::to_string(budget_.max_nodes) +
                        " nodes");
    }
    if (i == order_.size()) {
      if (weight > best_weight_ || best_choice_.empty()) {
        best_weight_ = weight;
        best_choice_ = chosen_;
      }
      return;
    }
    // Optimistic bound: every later point that still has a free candidate.
    Rational bound = weight;
    for (std::size_t j = i; j < order_.size(); ++j) {
      for (std::size_t c = 0; c < cands_[j].size(); ++c) {
        if (compatible(j, static_cast<int>(c))) {
          bound += inst_.base[order_[j]].weight;
          break;
        }
      }
    }
    if (!best_choice_.empty() && bound <= best_weight_) return;
    const Rational& w = inst_.base[order_[i]].weight;
    for (std::size_t c = 0; c < cands_[i].size(); ++c) {
      if (!compatible(i, static_cast<int>(c))) continue;
      chosen_[i] = static_cast<int>(c);
      branch(i + 1, weight + w);
      chosen_[i] = -1;
    }
    branch(i + 1, weight);
  }

  const AnchorLabelInstance& inst_;
  const Budget& budget_;
  std::vector<int> order_;
  std::vector<std::vector<std::pair<Rect, Anchor>>> cands_;
  std::vector<int> chosen_;
  std::vector<int> best_choice_;
  Rational best_weight_;
  std::uint64_t nodes_ = 0;
};

BigInt floor_div(const Rational& a, const Rational& b) { return (a / b).floor(); }

int positive_mod(const BigInt& a, int m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return static_cast<int>(r.get_si());
}

// Connected components of the candidate conflict graph among `members`.
std::vector<std::vector<int>> conflict_clusters(const AnchorLabelInstance& inst,
                                                const std::vector<int>& members,
                                                const std::vector<std::vector<Rect>>& rects) {
  const std::size_t n = members.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (find(static_cast<int>(a)) == find(static_cast<int>(b))) continue;
      bool hit = false;
      for (const Rect& ra : rects[members[a]]) {
        for (const Rect& rb : rects[members[b]]) {
          if (open_overlap(ra, rb)) {
            hit = true;
            break;
          }
        }
        if (hit) break;
      }
      if (hit) parent[std::max(find(a), find(b))] = std::min(find(a), find(b));
    }
  }
  std::map<int, std::vector<int>> groups;
  for (std::size_t a = 0; a < n; ++a) groups[find(static_cast<int>(a))].push_back(members[a]);
  std::vector<std::vector<int>> out;
  for (auto& [root, ids] : groups) out.push_back(std::move(ids));
  (void)inst;
  return out;
}

AnchorLabelInstance restrict_to(const AnchorLabelInstance& inst, const std::vector<int>& ids) {
  AnchorLabelInstance sub;
  sub.base = inst.base;
  sub.anchors.assign(inst.base.size(), {});
  for (int id : ids) sub.anchors[id] = inst.anchors[id];
  return sub;
}

int eps_to_t(const Rational& eps) {
  if (eps.sign() <= 0 || eps > Rational(1)) {
    throw std::invalid_argument("epsilon must lie in (0, 1], got " + eps.str());
  }
  const BigInt t = (Rational(2) / eps).ceil();
  if (t > 1'000'000) throw std::invalid_argument("epsilon too small");
  return std::max(2, static_cast<int>(t.get_si()));
}

struct GResolved {
  int g;
  BigInt theory;
};

GResolved resolve_g(const GChoice& c, int n, int t) {
  const int exhaustive = std::max(0, n - 1);
  switch (c.mode) {
    case GMode::kExhaustive:
      return {exhaustive, BigInt(0)};
    case GMode::kFixed:
      if (c.fixed < 0) throw std::invalid_argument("fixed g must be nonnegative");
      return {c.fixed, BigInt(0)};
    case GMode::kTheory: {
      const BigInt bound = planar_g_bound(4, t).g;
      return {bound < exhaustive ? static_cast<int>(bound.get_si()) : exhaustive, bound};
    }
  }
  throw std::logic_error("unreachable");
}

PipelineResult solve_anchors(const AnchorLabelInstance& inst, const PipelineOptions& opt,
                             PipelineResult res) {
  const bool exact = opt.downstream == Downstream::kExact ||
                     (opt.downstream == Downstream::kDefault &&
                      opt.g.mode == GMode::kExhaustive);
  for (const auto& a : inst.anchors) res.anchors += a.size();
  if (exact) {
    res.labeling = exact_anchor(inst, opt.budget);
  } else {
    res.used_shifting = true;
    res.solver_eps = opt.eps / Rational(2);
    ShiftingResult s = shifting_ptas(inst, res.solver_eps, opt.budget, opt.threads);
    res.labeling = std::move(s.labeling);
    res.offsets_tried = s.modulus;
    res.best_offset = s.best_offset;
  }
  if (auto report = validate_anchor_labeling(inst.base, res.labeling, &inst); !report.empty()) {
    throw std::logic_error("solver produced an infeasible labeling: " + report.front());
  }
  res.weight = weight_of(inst.base, res.labeling);
  return res;
}

LabelInstance doubled(const LabelInstance& inst, const Rational& drop) {
  LabelInstance out = inst;
  for (const LabelPoint& p : inst.points) {
    LabelPoint c = p;
    c.y = p.y - drop;
    c.id = out.size();
    out.points.push_back(c);
  }
  return out;
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  b.max_nodes = env_number<std::uint64_t>("TRIMLAB_BUDGET", b.max_nodes);
  b.max_candidates = env_number<std::size_t>("TRIMLAB_MAX_CANDIDATES", b.max_candidates);
  return b;
}

Labeling exact_1sh(const LabelInstance& inst, int max_n) {
  const int n = inst.size();
  if (n > max_n || n > 20) {
    throw SizeGuardError("exact_1sh accepts at most " + std::to_string(max_n) + " points, got " +
                         std::to_string(n));
  }
  std::vector<unsigned> masks(1u << n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::vector<Rational> weight(masks.size());
  for (unsigned m : masks) {
    for (int i = 0; i < n; ++i) {
      if (m & (1u << i)) weight[m] += inst[i].weight;
    }
  }
  std::stable_sort(masks.begin(), masks.end(),
                   [&](unsigned a, unsigned b) { return weight[a] > weight[b]; });
  for (unsigned m : masks) {
    OrderSearch search(inst, m);
    if (search.run()) return search.labeling();
  }
  return {};
}

AnchorLabeling exact_anchor(const AnchorLabelInstance& inst, const Budget& budget) {
  if (inst.anchors.size() != static_cast<std::size_t>(inst.base.size())) {
    throw StructuralError("anchor lists do not match the instance size");
  }
  AnchorSearch search(inst, budget);
  return search.run();
}

Labeling exact_multipos(const MultiPosInstance& inst, const Budget& budget) {
  const AnchorLabelInstance anchors = bottom_anchor_instance(inst);
  return to_slider_labeling(inst.base, exact_anchor(anchors, budget));
}

ShiftingResult shifting_ptas(const AnchorLabelInstance& inst, const Rational& eps,
                             const Budget& budget, int threads) {
  if (eps.sign() <= 0 || eps > Rational(1)) {
    throw std::invalid_argument("epsilon must lie in (0, 1], got " + eps.str());
  }
  if (inst.anchors.size() != static_cast<std::size_t>(inst.base.size())) {
    throw StructuralError("anchor lists do not match the instance size");
  }
  ShiftingResult res;
  const BigInt m = (Rational(1) / eps).floor() + 1;
  if (m > 1'000'000) throw std::invalid_argument("epsilon too small");
  res.modulus = static_cast<int>(m.get_si());

  Rational max_height(0);
  bool bottom_only = true;
  std::vector<std::vector<Rect>> rects(inst.base.size());
  std::vector<int> active;
  for (const LabelPoint& p : inst.base.points) {
    max_height = std::max(max_height, p.height);
    for (const Anchor& a : inst.anchors[p.id]) {
      bottom_only = bottom_only && a.edge == Edge::kBottom;
      rects[p.id].push_back(anchor_rectangle(p, a));
    }
    if (!rects[p.id].empty() && p.weight.sign() > 0) active.push_back(p.id);
  }
  res.band_height = bottom_only ? max_height : Rational(2) * max_height;
  if (active.empty()) {
    res.offset_weights.assign(res.modulus, Rational(0));
    return res;
  }

  std::vector<int> band(inst.base.size(), 0);
  for (int id : active) band[id] = positive_mod(floor_div(inst.base[id].y, res.band_height), res.modulus);

  std::map<std::vector<int>, int> cluster_index;
  std::vector<std::vector<int>> clusters;
  std::vector<std::vector<int>> offset_clusters(res.modulus);
  for (int r = 0; r < res.modulus; ++r) {
    std::vector<int> kept;
    for (int id : active) {
      if (band[id] != r) kept.push_back(id);
    }
    for (auto& c : conflict_clusters(inst, kept, rects)) {
      auto [it, fresh] = cluster_index.emplace(c, static_cast<int>(clusters.size()));
      if (fresh) clusters.push_back(c);
      offset_clusters[r].push_back(it->second);
    }
  }
  res.clusters_solved = static_cast<int>(clusters.size());

  std::vector<AnchorLabeling> solutions(clusters.size());
  std::vector<std::exception_ptr> errors(clusters.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < clusters.size(); i = next++) {
      try {
        solutions[i] = exact_anchor(restrict_to(inst, clusters[i]), budget);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int pool = std::max(1, std::min<int>(threads, static_cast<int>(clusters.size())));
  if (pool == 1) {
    worker();
  } else {
    std::vector<std::thread> workers;
    for (int i = 0; i < pool; ++i) workers.emplace_back(worker);
    for (auto& w : workers) w.join();
  }
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const BudgetError& e) {
      std::string ids;
      for (int id : clusters[i]) ids += " p" + std::to_string(id);
      throw BudgetError(std::string(e.what()) + " on cluster {" + ids + " }");
    }
  }

  res.offset_weights.assign(res.modulus, Rational(0));
  for (int r = 0; r < res.modulus; ++r) {
    for (int c : offset_clusters[r]) res.offset_weights[r] += weight_of(inst.base, solutions[c]);
  }
  res.best_offset = static_cast<int>(
      std::max_element(res.offset_weights.begin(), res.offset_weights.end(),
                       [](const Rational& a, const Rational& b) { return a < b; }) -
      res.offset_weights.begin());
  for (int c : offset_clusters[res.best_offset]) {
    res.labeling.placed.insert(solutions[c].placed.begin(), solutions[c].placed.end());
  }
  return res;
}

GChoice parse_g_mode(std::string_view text) {
  if (text == "theory") return {GMode::kTheory, 0};
  if (text == "exhaustive") return {GMode::kExhaustive, 0};
  constexpr std::string_view prefix = "fixed:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view num = text.substr(prefix.size());
    int g = -1;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), g);
    if (ec == std::errc() && ptr == num.data() + num.size() && g >= 0) return {GMode::kFixed, g};
  }
  throw std::invalid_argument("g-mode must be theory, exhaustive or fixed:<g>, got '" +
                              std::string(text) + "'");
}

PipelineResult ptas_1sh(const LabelInstance& inst, const PipelineOptions& opt) {
  PipelineResult res;
  res.t = eps_to_t(opt.eps);
  const GResolved g = resolve_g(opt.g, inst.size(), res.t);
  res.g = g.g;
  res.g_theory = g.theory;
  const CandidateSet m = candidate_positions(inst, {}, res.g, opt.budget.max_candidates);
  res.candidates = m.values.size();
  const AnchorLabelInstance anchors = bottom_anchor_instance(shared_positions(inst, m.values));
  return solve_anchors(anchors, opt, std::move(res));
}

AnchorLabelInstance reduce_2sh(const LabelInstance& inst, int g, const Budget& budget,
                               std::size_t* candidate_count) {
  const CandidateSet m =
      candidate_positions(doubled(inst, Rational(1)), {}, g, budget.max_candidates);
  if (candidate_count != nullptr) *candidate_count = m.values.size();
  AnchorLabelInstance out;
  out.base = inst;
  out.anchors.resize(inst.size());
  for (const LabelPoint& p : inst.points) {
    for (const Rational& z : m.values) {
      if (z >= p.x - p.length && z <= p.x) out.anchors[p.id].push_back({Edge::kBottom, p.x - z});
    }
    for (const Rational& z : m.values) {
      if (z >= p.x - p.length && z <= p.x) out.anchors[p.id].push_back({Edge::kTop, p.x - z});
    }
  }
  return out;
}

PipelineResult ptas_2sh(const LabelInstance& inst, const PipelineOptions& opt) {
  PipelineResult res;
  res.t = eps_to_t(opt.eps);
  const GResolved g = resolve_g(opt.g, inst.size(), res.t);
  res.g = g.g;
  res.g_theory = g.theory;
  const AnchorLabelInstance anchors = reduce_2sh(inst, res.g, opt.budget, &res.candidates);
  return solve_anchors(anchors, opt, std::move(res));
}

AnchorLabelInstance reduce_4s(const LabelInstance& inst, int g, const Budget& budget,
                              std::size_t* candidate_count) {
  std::vector<Rational> sh, sv;
  for (const LabelPoint& p : inst.points) {
    sh.insert(sh.end(), {p.x - p.length, p.x, p.x + p.length});
    sv.insert(sv.end(), {p.y - p.height, p.y, p.y + p.height});
  }
  const CandidateSet mh =
      candidate_positions(doubled(inst, Rational(1)), sh, g, budget.max_candidates);
  const LabelInstance flipped = transpose_instance(inst);
  // The transposed copies sit one label length below; they add no new
  // stopping values or lengths, so the doubled transposed instance is not
  // materialized.
  const CandidateSet mv = candidate_positions(flipped, sv, g, budget.max_candidates);
  if (candidate_count != nullptr) *candidate_count = mh.values.size() + mv.values.size();

  AnchorLabelInstance out;
  out.base = inst;
  out.anchors.resize(inst.size());
  for (const LabelPoint& p : inst.points) {
    auto& list = out.anchors[p.id];
    for (Edge e : {Edge::kBottom, Edge::kTop}) {
      for (const Rational& z : mh.values) {
        if (z >= p.x - p.length && z <= p.x) list.push_back({e, p.x - z});
      }
    }
    for (Edge e : {Edge::kLeft, Edge::kRight}) {
      for (const Rational& z : mv.values) {
        if (z >= p.y - p.height && z <= p.y) list.push_back({e, p.y - z});
      }
    }
  }
  return out;
}

PipelineResult ptas_4s(const LabelInstance& inst, const PipelineOptions& opt) {
  PipelineResult res;
  res.t = eps_to_t(opt.eps);
  const GResolved g = resolve_g(opt.g, inst.size(), res.t);
  res.g = g.g;
  res.g_theory = g.theory;
  const AnchorLabelInstance anchors = reduce_4s(inst, res.g, opt.budget, &res.candidates);
  return solve_anchors(anchors, opt, std::move(res));
}

}  // namespace trimlab
