#ifndef TRIMLAB_SOLVER_HPP
#define TRIMLAB_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trimlab/labeling.hpp"

namespace trimlab {

struct Budget {
  std::uint64_t max_nodes = 20'000'000;       // branch-and-bound nodes per exact solve
  std::size_t max_candidates = 200'000;       // values of a candidate set

  // Defaults overridden by TRIMLAB_BUDGET and TRIMLAB_MAX_CANDIDATES.
  // Throws std::invalid_argument on a malformed value.
  static Budget from_env();
};

// Largest instance exact_1sh accepts.
inline constexpr int kExact1shLimit = 8;

// Maximum-weight 1SH labeling by search over subsets and placement orders
// with greedy leftmost placement. Among optimal subsets the one with the
// smallest bitmask wins. SizeGuardError above `max_n` points.
Labeling exact_1sh(const LabelInstance& inst, int max_n = kExact1shLimit);

// Maximum-weight labeling using only the listed anchors. Points are branched
// in order of (x, y, id); BudgetError once `budget.max_nodes` is exceeded.
AnchorLabeling exact_anchor(const AnchorLabelInstance& inst, const Budget& budget);

// Fixed-position 1MH instance solved through bottom anchors.
Labeling exact_multipos(const MultiPosInstance& inst, const Budget& budget);

struct ShiftingResult {
  AnchorLabeling labeling;
  int modulus = 1;            // number of shifting offsets
  Rational band_height;       // horizontal bands of this height are deleted per offset
  int best_offset = 0;
  std::vector<Rational> offset_weights;
  int clusters_solved = 0;    // distinct clusters handed to the exact solver
};

// Band-deletion shifting scheme: for each offset r, drop every point whose
// band index floor(p_y / h) is congruent to r modulo m = floor(1/eps) + 1 and
// solve the remaining independent clusters exactly. The best offset (smallest
// on ties) is returned, losing less than eps * OPT. Clusters are solved on
// `threads` worker threads; the result does not depend on the thread count.
ShiftingResult shifting_ptas(const AnchorLabelInstance& inst, const Rational& eps,
                             const Budget& budget, int threads = 1);

enum class GMode { kTheory, kFixed, kExhaustive };

struct GChoice {
  GMode mode = GMode::kExhaustive;
  int fixed = 0;  // used in kFixed
};

// Throws std::invalid_argument on anything but theory, exhaustive or fixed:<g>.
GChoice parse_g_mode(std::string_view text);

enum class Downstream { kDefault, kShifting, kExact };

struct PipelineOptions {
  Rational eps{1};
  GChoice g;
  Downstream downstream = Downstream::kDefault;
  Budget budget;
  int threads = 1;
};

struct PipelineResult {
  AnchorLabeling labeling;
  Rational weight;
  int t = 2;
  int g = 0;             // g used for candidate generation
  BigInt g_theory;       // the trimming bound, reported in theory mode
  std::size_t candidates = 0;  // total candidate values (both axes for 4S)
  std::size_t anchors = 0;     // total anchors handed to the solver
  bool used_shifting = false;
  int offsets_tried = 0;
  int best_offset = 0;
  Rational solver_eps;   // eps handed to the shifting scheme
};

// 1SH: t = max(2, ceil(2/eps)); M = candidate_positions(I, {}, g); solve the
// fixed-position instance with the shifting scheme at eps/2 or exactly.
// Theory mode uses the planar bound for degree 4 at this t, clamped to n-1
// (no simple path has more edges). The default downstream solver is exact
// in exhaustive mode and the shifting scheme otherwise.
PipelineResult ptas_1sh(const LabelInstance& inst, const PipelineOptions& opt);

// Candidates of the instance doubled by copies one unit below every point;
// each point gets bottom anchors from its own candidates and top anchors from
// its copy's.
AnchorLabelInstance reduce_2sh(const LabelInstance& inst, int g, const Budget& budget,
                               std::size_t* candidate_count = nullptr);
PipelineResult ptas_2sh(const LabelInstance& inst, const PipelineOptions& opt);

// Horizontal sliding with stopping lines p_x - l, p_x, p_x + l and vertical
// sliding (candidates computed on the transposed instance) with stopping
// lines p_y - 1, p_y, p_y + 1; anchors on all four edges. The merged labeling
// is validated before it is returned.
AnchorLabelInstance reduce_4s(const LabelInstance& inst, int g, const Budget& budget,
                              std::size_t* candidate_count = nullptr);
PipelineResult ptas_4s(const LabelInstance& inst, const PipelineOptions& opt);

}  // namespace trimlab

#endif  // TRIMLAB_SOLVER_HPP
