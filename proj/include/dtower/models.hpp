#pragma once

#include <string>
#include <vector>

#include "dtower/complex.hpp"

namespace dtower {

/// Alternating horizontal/vertical segment lengths of a staircase symmetric
/// about i = j.  An even-length palindrome is taken as the full segment
/// list; any other list is completed with its own reversal.
struct StaircaseSpec {
    std::vector<int> steps;
};

/// Single generator at the origin, no arrows.
KnotComplex unknot();

/// Staircase complex on the given spec, placed in the first quadrant
/// touching both axes; every corner generator maps to its two neighbours.
KnotComplex staircase(const StaircaseSpec& spec);

/// One isolated generator at the origin plus, per offset (p,q), an acyclic
/// box {x@(p,q), y@(p-1,q), z@(p,q-1), w@(p-1,q-1)} with arrows x->y, x->z,
/// y->w, z->w.
KnotComplex box_sum(std::size_t n_boxes, const std::vector<Bifiltration>& offsets);

/// Named builder presets: unknot | rht | lht | t34 | fig8 | c21-model.
KnotComplex preset(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace dtower
