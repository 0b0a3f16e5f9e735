#include "trimlab/trimming.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "trimlab/errors.hpp"

namespace trimlab {

LevelBound g_bound(int k, int s, int t) {
  if (k < -1 || s < 0 || t < 2) {
    throw std::invalid_argument("g_bound requires k >= 0, s >= 0, t >= 2");
  }
  LevelBound out;
  out.a = s >= 2 ? BigInt(k + 1) : BigInt((k + 1) / 2);
  const BigInt levels = BigInt(s + 1) * t;
  if (out.a <= 1) {
    out.g = (2 * levels - 3) * BigInt(k + 1);
    return out;
  }
  const unsigned long depth = static_cast<unsigned long>((s + 1) * t - 2);
  const BigInt num = (pow(out.a, depth) * (out.a + 1) - 2) * BigInt(k + 1);
  const BigInt den = out.a - 1;
  if (num % den != 0) throw std::logic_error("g_bound: quotient is not integral");
  out.g = num / den;
  return out;
}

LevelTrimming level_trimming(const WeightedGraph& g, const TreeDecomposition& d, int t) {
  if (t < 2) throw std::invalid_argument("level_trimming requires t >= 2");
  if (auto report = validate_tree_decomposition(g, d); !report.empty()) {
    throw StructuralError("not a tree decomposition: " + report.front());
  }
  LevelTrimming out;
  out.params.t = t;
  out.params.k = width(d);
  out.params.s = elongation(d);
  out.params.g = g_bound(out.params.k, out.params.s, t).g;

  const int period = (out.params.s + 1) * t;
  const auto depth = node_depths(d);
  std::vector<std::vector<char>> in_class(period, std::vector<char>(g.vertex_count(), 0));
  for (int x = 0; x < d.node_count(); ++x) {
    for (int v : d.bags[x]) in_class[depth[x] % period][v] = 1;
  }
  out.residue_weights.assign(period, Rational(0));
  for (int i = 0; i < period; ++i) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (in_class[i][v]) out.residue_weights[i] += g.weight(v);
    }
  }
  Rational sum;
  for (const Rational& w : out.residue_weights) sum += w;
  if (sum > Rational(out.params.s + 1) * g.total_weight()) {
    throw std::logic_error("level_trimming: residue weights exceed (s+1)W");
  }
  out.residue = static_cast<int>(
      std::min_element(out.residue_weights.begin(), out.residue_weights.end()) -
      out.residue_weights.begin());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in_class[out.residue][v]) out.removed.push_back(v);
  }
  out.removed_weight = out.residue_weights[out.residue];
  return out;
}

bool is_trimming(const WeightedGraph& g, std::span<const int> removed, int t,
                 const BigInt& max_path) {
  if (t < 1) throw std::invalid_argument("is_trimming requires t >= 1");
  const VertexSet u = make_vertex_set({removed.begin(), removed.end()});
  if (g.weight_of(u) * Rational(t) > g.total_weight()) return false;
  const InducedSubgraph rest = remove_vertices(g, u);
  return BigInt(longest_simple_path(rest.graph)) <= max_path;
}

DegreeBound twdeg_g_bound(int k, int d, int t) {
  if (k < 0 || d < 1 || t < 2) {
    throw std::invalid_argument("twdeg_g_bound requires k >= 0, d >= 1, t >= 2");
  }
  DegreeBound out;
  out.K = BigInt(9 * k + 7) * d * (d + 1) - 1;
  out.g = pow(ceil_div(out.K, 2), 2UL * t);
  return out;
}

DegreeBound planar_g_bound(int d, int t) {
  if (d < 1 || t < 1) throw std::invalid_argument("planar_g_bound requires d, t >= 1");
  DegreeBound out;
  out.K = BigInt(54 * t - 29) * d * (d + 1) - 1;
  out.g = pow(ceil_div(out.K, 2), 4UL * t);
  return out;
}

RemarkBound remark_bound(int d, int t, const Rational& alpha) {
  if (d < 1 || t < 1) throw std::invalid_argument("remark_bound requires d, t >= 1");
  if (alpha <= Rational(2)) throw std::invalid_argument("remark_bound requires alpha > 2");
  const Rational scaled = Rational(27) * alpha * Rational(t);
  if (!scaled.is_integer()) {
    throw std::invalid_argument("remark_bound: 27*alpha*t = " + scaled.str() +
                                " is not an integer");
  }
  RemarkBound out;
  out.K = (scaled.numerator() - 29) * d * (d + 1) - 1;
  const Rational ratio = alpha * Rational(t) / (alpha - Rational(1));
  out.exponent = static_cast<int>(2 * ratio.ceil().get_si());
  out.bound = pow(ceil_div(out.K, 2), static_cast<unsigned long>(out.exponent));
  return out;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

// Peeling the outer face layer by layer equals a breadth-first search from
// the outer face in the vertex-face incidence graph: a vertex at incidence
// distance 2i-1 lies in layer R_i.
std::vector<VertexSet> planar_layers(const WeightedGraph& g, const PlaneEmbedding& e) {
  const FaceStructure fs = trace_faces(g, e);
  const int n = g.vertex_count();
  const int face_count = static_cast<int>(fs.faces.size());
  // Face node face_count stands for the unbounded region.
  const int unbounded = face_count;
  DisjointSets regions(face_count + 1);
  std::vector<int> comp_of(n, -1);
  const auto comps = connected_components(g);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    for (int v : comps[c]) comp_of[v] = c;
  }
  // Region each component's outside lies in: the unbounded one unless nested.
  std::vector<int> host(comps.size(), unbounded);
  for (const auto& [v, d] : e.nested) host[comp_of[v]] = fs.face_of_dart(e, d);
  for (const Dart& d : e.outer) regions.unite(fs.face_of_dart(e, d), host[comp_of[d.from]]);

  std::vector<std::vector<int>> vertex_regions(n);
  for (int v = 0; v < n; ++v) {
    if (e.rotation[v].empty()) {
      vertex_regions[v].push_back(regions.find(host[comp_of[v]]));
      continue;
    }
    for (int f : fs.face_of[v]) vertex_regions[v].push_back(regions.find(f));
    std::sort(vertex_regions[v].begin(), vertex_regions[v].end());
    vertex_regions[v].erase(std::unique(vertex_regions[v].begin(), vertex_regions[v].end()),
                            vertex_regions[v].end());
  }
  std::vector<std::vector<int>> region_vertices(face_count + 1);
  for (int v = 0; v < n; ++v) {
    for (int r : vertex_regions[v]) region_vertices[r].push_back(v);
  }

  std::vector<int> region_dist(face_count + 1, -1);
  std::vector<int> vertex_dist(n, -1);
  std::queue<int> q;
  const int start = regions.find(unbounded);
  region_dist[start] = 0;
  q.push(start);
  while (!q.empty()) {
    const int r = q.front();
    q.pop();
    for (int v : region_vertices[r]) {
      if (vertex_dist[v] >= 0) continue;
      vertex_dist[v] = region_dist[r] + 1;
      for (int r2 : vertex_regions[v]) {
        if (region_dist[r2] < 0) {
          region_dist[r2] = vertex_dist[v] + 1;
          q.push(r2);
        }
      }
    }
  }
  std::vector<VertexSet> layers;
  for (int v = 0; v < n; ++v) {
    if (vertex_dist[v] < 0) {
      throw StructuralError("vertex " + std::to_string(v) +
                            " is not reachable from the outer face (cyclic nesting)");
    }
    const std::size_t layer = static_cast<std::size_t>((vertex_dist[v] + 1) / 2);
    if (layers.size() < layer) layers.resize(layer);
    layers[layer - 1].push_back(v);
  }
  return layers;
}

BakerSelection baker_select(const WeightedGraph& g, const std::vector<VertexSet>& layers,
                            int t) {
  if (t < 1) throw std::invalid_argument("baker_select requires t >= 1");
  const int period = 2 * t;
  BakerSelection out;
  out.residue_weights.assign(period, Rational(0));
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const int index = static_cast<int>(i) + 1;
    out.residue_weights[index % period] += g.weight_of(layers[i]);
  }
  out.residue = static_cast<int>(
      std::min_element(out.residue_weights.begin(), out.residue_weights.end()) -
      out.residue_weights.begin());
  std::vector<int> removed;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if ((static_cast<int>(i) + 1) % period == out.residue) {
      removed.insert(removed.end(), layers[i].begin(), layers[i].end());
    }
  }
  out.removed = make_vertex_set(std::move(removed));
  out.removed_weight = out.residue_weights[out.residue];
  out.remaining = remove_vertices(g, out.removed);
  return out;
}

PlanarTrimming planar_trimming(const WeightedGraph& g, const PlaneEmbedding& e, int t,
                               PlanarDecomposition mode) {
  if (t < 1) throw std::invalid_argument("planar_trimming requires t >= 1");
  PlanarTrimming out;
  const auto layers = planar_layers(g, e);
  out.layer_count = static_cast<int>(layers.size());
  BakerSelection baker = baker_select(g, layers, t);
  out.baker_residue = baker.residue;
  out.baker_weight = baker.removed_weight;

  const WeightedGraph& h = baker.remaining.graph;
  DecompositionMode dm = DecompositionMode::kMinFill;
  if (mode == PlanarDecomposition::kExactTiny ||
      (mode == PlanarDecomposition::kAuto && h.vertex_count() <= 12)) {
    dm = DecompositionMode::kExactTiny;
  }
  const TreeDecomposition d = build_tree_decomposition(h, dm);
  const LevelTrimming inner = level_trimming(h, d, 2 * t);
  out.params = inner.params;

  std::vector<int> removed = baker.removed;
  for (int v : inner.removed) removed.push_back(baker.remaining.original[v]);
  out.removed = make_vertex_set(std::move(removed));
  out.removed_weight = g.weight_of(out.removed);
  if (out.removed_weight * Rational(t) > g.total_weight()) {
    throw std::logic_error("planar_trimming: removed weight exceeds W/t");
  }
  return out;
}

std::string format_trim_report(const TrimReport& r) {
  std::ostringstream out;
  out << "trim-report\n";
  out << "W " << r.total_weight.str() << "\n";
  out << "t " << r.t << "\n";
  out << "k " << r.k << "\n";
  out << "s " << r.s << "\n";
  out << "g " << r.g.get_str() << "\n";
  out << "|U| " << r.removed.size() << "\n";
  out << "weight(U) " << r.removed_weight.str() << "\n";
  out << "U";
  for (int v : r.removed) out << " " << v;
  out << "\n";
  return out.str();
}

}  // namespace trimlab
