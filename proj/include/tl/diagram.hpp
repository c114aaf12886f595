#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tl/error.hpp"

namespace tl {

enum class Row { Top, Bottom };

struct Endpoint {
  Row row;
  int index;  // 1-based
  bool operator==(const Endpoint& o) const { return row == o.row && index == o.index; }
};

std::string endpoint_name(const Endpoint& e);  // "T3", "B1"
Endpoint parse_endpoint(const std::string& s);

// Planar n-diagram. Endpoints are stored as slots: Top k -> k-1, Bottom k -> n+k-1,
// which is also the canonical endpoint order.
class Diagram {
 public:
  Diagram() = default;

  // Checks perfect matching and planarity, then canonicalizes.
  static Diagram validate(int n, const std::vector<std::pair<Endpoint, Endpoint>>& pairs);
  static Diagram from_partner(int n, std::vector<int> partner);
  static Diagram identity(int n);
  static Diagram generator(int n, int i);

  int n() const { return n_; }
  int partner(int slot) const { return partner_[static_cast<std::size_t>(slot)]; }
  const std::vector<int>& partners() const { return partner_; }
  int slot(const Endpoint& e) const { return e.row == Row::Top ? e.index - 1 : n_ + e.index - 1; }
  Endpoint endpoint(int slot) const;

  // Canonical pair list over slots, each pair (a, b) with a < b, sorted.
  std::vector<std::pair<int, int>> pair_slots() const;
  std::vector<std::pair<Endpoint, Endpoint>> pairs() const;
  int through_count() const;

  bool operator==(const Diagram& o) const { return n_ == o.n_ && partner_ == o.partner_; }
  bool operator!=(const Diagram& o) const { return !(*this == o); }
  // Lexicographic on canonical pair lists (smaller n first).
  bool operator<(const Diagram& o) const;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<int> partner_;
};

struct ScaledDiagram {
  int loops = 0;
  Diagram diagram;
  bool operator==(const ScaledDiagram& o) const { return loops == o.loops && diagram == o.diagram; }
};

// Row of n points with non-crossing links below it; unmatched points are defects.
class HalfDiagram {
 public:
  HalfDiagram() = default;
  static HalfDiagram validate(int n, const std::vector<std::pair<int, int>>& links);  // 1-based links
  static HalfDiagram from_partner(int n, std::vector<int> partner);                    // 0-based, -1 = defect

  int n() const { return n_; }
  int partner(int k) const { return partner_[static_cast<std::size_t>(k)]; }  // 0-based
  const std::vector<int>& partners() const { return partner_; }
  std::vector<std::pair<int, int>> links() const;  // 1-based, sorted
  std::vector<int> defects() const;                // 1-based, increasing
  int link_count() const;
  int defect_count() const { return n_ - 2 * link_count(); }

  bool operator==(const HalfDiagram& o) const { return n_ == o.n_ && partner_ == o.partner_; }
  bool operator!=(const HalfDiagram& o) const { return !(*this == o); }
  bool operator<(const HalfDiagram& o) const;  // lexicographic on link lists

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<int> partner_;
};

ScaledDiagram multiply(const Diagram& a, const Diagram& b);
Diagram involution(const Diagram& d);
int close_full(const Diagram& d);
struct ClosedLast {
  int loops;
  Diagram diagram;
};
ClosedLast close_last(const Diagram& d);
// Adds a vertical strand at position n+1.
Diagram embed(const Diagram& d);

// Upper bound on n for exhaustive enumeration: 12, or TL_MAX_N if set.
int enumeration_bound();
std::vector<Diagram> enumerate_diagrams(int n);
std::vector<HalfDiagram> enumerate_half(int n, int p);

Diagram cell_glue(const HalfDiagram& s, const HalfDiagram& t);
struct Decomposition {
  int lambda;
  HalfDiagram s, t;
};
Decomposition decompose(const Diagram& d);

struct HalfAction {
  int loops;
  HalfDiagram half;
};
HalfAction act_on_half(const Diagram& d, const HalfDiagram& h);

// Pairing of h* stacked on h2: loop count when every defect survives, else nullopt
// encoded as loops = -1.
int bilinear_loops(const HalfDiagram& h, const HalfDiagram& h2);

namespace kernels {
std::vector<Diagram> enumerate_diagrams_serial(int n);
std::vector<Diagram> enumerate_diagrams_parallel(int n);
}  // namespace kernels

}  // namespace tl
