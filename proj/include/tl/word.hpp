#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tl/diagram.hpp"

namespace tl {

struct Word {
  int n = 1;
  std::vector<int> letters;  // generator indices in 1..n-1

  static Word make(int n, std::vector<int> letters);  // validates indices
  bool operator==(const Word& o) const { return n == o.n && letters == o.letters; }
  std::string to_string() const;  // "e3e2e1" or "1" for the empty word
};

// Descending runs e_j e_{j-1} ... e_k, stored as (j, k), with j and k strictly increasing.
struct NormalForm {
  int n = 1;
  std::vector<std::pair<int, int>> blocks;

  static NormalForm make(int n, std::vector<std::pair<int, int>> blocks);  // validates
  Word word() const;
  std::size_t length() const;
  bool operator==(const NormalForm& o) const { return n == o.n && blocks == o.blocks; }
  bool operator<(const NormalForm& o) const { return n != o.n ? n < o.n : blocks < o.blocks; }
  std::string to_string() const;  // "(e3e2e1)(e4e3)"
};

// Ascending runs e_k e_{k+1} ... e_j, stored as (k, j), with k and j strictly decreasing.
struct DualNormalForm {
  int n = 1;
  std::vector<std::pair<int, int>> blocks;

  static DualNormalForm make(int n, std::vector<std::pair<int, int>> blocks);
  Word word() const;
  bool operator==(const DualNormalForm& o) const { return n == o.n && blocks == o.blocks; }
  std::string to_string() const;
};

// Lattice path from (0,0) to (n,n) with steps R = (1,0), U = (0,1), never above y = x.
struct DyckPath {
  int n = 1;
  std::string steps;  // over {'R','U'}, length 2n

  static DyckPath make(int n, std::string steps);  // validates
  std::vector<std::pair<int, int>> corners() const;
  bool operator==(const DyckPath& o) const { return n == o.n && steps == o.steps; }
};

ScaledDiagram eval(const Word& w);

struct NormalFormResult {
  int exponent;
  NormalForm nf;
};
struct DualNormalFormResult {
  int exponent;
  DualNormalForm nf;
};

NormalFormResult normal_form(const Word& w);
DualNormalFormResult dual_normal_form(const Word& w);
NormalForm normal_form(const Diagram& d);
DualNormalForm dual_normal_form(const Diagram& d);
bool is_reduced(const Word& w);

// Reduced word for d from the region-numbering construction.
Word kauffman_word(const Diagram& d);
// Region words in reading order, concatenating to kauffman_word(d).
std::vector<std::vector<int>> kauffman_regions(const Diagram& d);

DyckPath nf_to_dyck(const NormalForm& nf);
NormalForm dyck_to_nf(const DyckPath& p);

}  // namespace tl
