#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "tl/diagram.hpp"

namespace tl {

// Number of lattice walks from (0,0) to (n-p, p): C(n,p) - C(n,p-1), and 0 once 2p > n.
mpz_class cat(int n, int p);

// Steps 'R' = (1,0) and 'U' = (0,1); no prefix has more U than R.
struct LatticeWalk {
  std::string steps;

  static LatticeWalk make(std::string steps);
  int n() const { return static_cast<int>(steps.size()); }
  int p() const;
  bool operator==(const LatticeWalk& o) const { return steps == o.steps; }
};

struct TwoRowTableau {
  std::vector<int> row1, row2;

  static TwoRowTableau make(std::vector<int> row1, std::vector<int> row2);
  int n() const { return static_cast<int>(row1.size() + row2.size()); }
  bool operator==(const TwoRowTableau& o) const { return row1 == o.row1 && row2 == o.row2; }
  std::string to_string() const;  // "12358/467" style, entries comma separated
};

struct OneFactor {
  std::vector<int> signs;  // +1 / -1

  static OneFactor make(std::vector<int> signs);
  // Paired index pairs (1-based) from the stack scan.
  std::vector<std::pair<int, int>> pairings() const;
  bool operator==(const OneFactor& o) const { return signs == o.signs; }
  std::string to_string() const;  // "++-+--+"
};

// Edges 'V' (grow the first row) and 'D' (grow the second row).
struct BratteliPath {
  std::string edges;

  static BratteliPath make(std::string edges);
  std::pair<int, int> end() const;
  bool operator==(const BratteliPath& o) const { return edges == o.edges; }
};

enum class Rep { Half, Walk, Bratteli, Tableau, OneFactor };
const char* rep_name(Rep r);
Rep rep_from_name(const std::string& s);

using CombObject = std::variant<HalfDiagram, LatticeWalk, BratteliPath, TwoRowTableau, OneFactor>;
Rep rep_of(const CombObject& x);

LatticeWalk to_walk(const CombObject& x);
CombObject from_walk(const LatticeWalk& w, Rep target);
CombObject convert(const CombObject& x, Rep target);

std::vector<LatticeWalk> enumerate_walks(int n, int p);
mpz_class count_paths_to(int lambda1, int lambda2);

}  // namespace tl
