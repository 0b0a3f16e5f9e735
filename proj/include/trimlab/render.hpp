#ifndef TRIMLAB_RENDER_HPP
#define TRIMLAB_RENDER_HPP

#include <string>

#include "trimlab/labeling.hpp"

namespace trimlab {

// Deterministic SVG: labeled points as filled circles, unlabeled points as
// hollow circles, labels as rectangles. Throws std::invalid_argument with
// the validator's first complaint if the labeling is infeasible.
std::string render_svg(const LabelInstance& inst, const AnchorLabeling& lab);

}  // namespace trimlab

#endif  // TRIMLAB_RENDER_HPP
