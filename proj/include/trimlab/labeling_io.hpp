#ifndef TRIMLAB_LABELING_IO_HPP
#define TRIMLAB_LABELING_IO_HPP

#include <string>
#include <string_view>

#include "trimlab/labeling.hpp"

namespace trimlab {

// Instance format:
//   instance <n>
//   pt <x> <y> <length> <weight>     (one line per point, ids in order)
LabelInstance parse_instance(std::string_view text);
std::string format_instance(const LabelInstance& inst);

// Labeling format:
//   lab <id> <z>                     slider label, left edge at z
//   place <id> <edge> <offset>       anchored label (bottom|top|left|right)
// parse_labeling accepts `lab` lines only; parse_anchor_labeling accepts
// both and turns `lab` lines into bottom anchors.
Labeling parse_labeling(std::string_view text);
std::string format_labeling(const Labeling& lab);
AnchorLabeling parse_anchor_labeling(std::string_view text, const LabelInstance& inst);
// Bottom anchors are written as `lab` lines, everything else as `place`.
std::string format_anchor_labeling(const AnchorLabeling& lab, const LabelInstance& inst);

}  // namespace trimlab

#endif  // TRIMLAB_LABELING_IO_HPP
