#pragma once

#include <string>

#include "tl/diagram.hpp"
#include "tl/skewshape.hpp"

namespace tl {

// Vertex k sits in column 2(k-1). Top row of `o`, then cup rows, one row per
// non-vertical through strand, cap rows, bottom row of `o`. Lines end in '\n'
// and carry no trailing spaces.
std::string render_ascii(const Diagram& d);
// Row of `o`, link rows below it; defects run down every row.
std::string render_ascii(const HalfDiagram& h);
// One line per row of the outline; cells are two characters wide and joined
// by single spaces; inner-partition cells print as "##", others as their label.
std::string render_skew(const LabeledSkewShape& s);

}  // namespace tl
