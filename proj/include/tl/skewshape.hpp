#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tl/diagram.hpp"
#include "tl/word.hpp"

namespace tl {

enum class Compass : char { W = 'W', S = 'S', N = 'N', E = 'E' };

// First n entries are the top vertices 1..n, last n the bottom vertices n'..1'.
struct CompassSeq {
  std::vector<Compass> dirs;
  std::string to_string() const;
  bool operator==(const CompassSeq& o) const { return dirs == o.dirs; }
};

// Cells (i, j) are south-east box corners; i grows southward, j eastward, path
// origin (0,0). Label of (i, j) is i - j.
struct LabeledSkewShape {
  std::set<std::pair<int, int>> cells;

  static int label(const std::pair<int, int>& c) { return c.first - c.second; }
  bool operator==(const LabeledSkewShape& o) const { return cells == o.cells; }
};

// Outer and inner partitions of a skew shape, left-aligned at a common column.
struct SkewOutline {
  std::vector<int> lambda, mu;
  int left = 0;  // j-coordinate of the left boundary line
};

CompassSeq compass(const Diagram& d);
LabeledSkewShape shape_from_compass(const CompassSeq& c);
SkewOutline outline_from_compass(const CompassSeq& c);
// Outline recovered from cells alone; empty rows take the width of the next row below.
SkewOutline outline_from_cells(const LabeledSkewShape& s);
LabeledSkewShape theta(const Diagram& d);

// Checks row decrease / column increase of labels and the label range 1..n-1.
bool labels_consistent(const LabeledSkewShape& s, int n);

NormalForm row_reading_word(const LabeledSkewShape& s, int n);
DualNormalForm col_reading_word(const LabeledSkewShape& s, int n);
bool bjs_equivalent(const LabeledSkewShape& a, const LabeledSkewShape& b, int n);

using Permutation = std::vector<int>;  // one-line notation, values 1..n

std::string permutation_string(const Permutation& w);
bool is_321_avoiding(const Permutation& w);
Permutation to_permutation(const Diagram& d);
Diagram from_permutation(const Permutation& w);
CompassSeq compass_of_permutation(const Permutation& w);

// Number of standard fillings of theta(d), i.e. reduced words of d.
std::uint64_t count_reduced_expressions(const Diagram& d);
std::uint64_t count_standard_fillings(const LabeledSkewShape& s);

namespace detail {
// Compass sequence where the vertical strands selected by `we_mask` (bit k for
// the k-th vertical strand from the left) are labelled W on top and E below.
CompassSeq compass_with_vertical_we(const Diagram& d, std::uint64_t we_mask);
}  // namespace detail

}  // namespace tl
