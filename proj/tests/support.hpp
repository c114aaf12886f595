#pragma once

// Independent reference implementations used as test oracles. None of these
// call into the library beyond its data types.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tl/diagram.hpp"
#include "tl/laurent.hpp"
#include "tl/word.hpp"

namespace oracle {

using Pairs = std::vector<std::pair<std::string, std::string>>;

inline tl::Diagram make(int n, const Pairs& pairs) {
  std::vector<std::pair<tl::Endpoint, tl::Endpoint>> ps;
  for (const auto& [a, b] : pairs) ps.emplace_back(tl::parse_endpoint(a), tl::parse_endpoint(b));
  return tl::Diagram::validate(n, ps);
}

inline tl::LaurentPoly delta_pow(int k) { return tl::LaurentPoly::monomial(tl::Var::Delta, k); }

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
  void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

// Stacks a above b as a graph on 3n nodes: 0..n-1 top of a, n..2n-1 the
// middle row, 2n..3n-1 bottom of b. Components avoiding the outer rows are loops.
inline tl::ScaledDiagram stack(const tl::Diagram& a, const tl::Diagram& b) {
  const int n = a.n();
  auto node_a = [](int slot) { return slot; };       // a's bottom row is the middle
  auto node_b = [n](int slot) { return n + slot; };  // b's top row is the middle
  UnionFind uf(3 * n);
  for (auto [x, y] : a.pair_slots()) uf.unite(node_a(x), node_a(y));
  for (auto [x, y] : b.pair_slots()) uf.unite(node_b(x), node_b(y));
  std::set<int> outer_roots;
  for (int k = 0; k < n; ++k) outer_roots.insert(uf.find(k));
  for (int k = 2 * n; k < 3 * n; ++k) outer_roots.insert(uf.find(k));
  std::set<int> loop_roots;
  for (int k = n; k < 2 * n; ++k)
    if (!outer_roots.count(uf.find(k))) loop_roots.insert(uf.find(k));
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  for (int x = 0; x < 2 * n; ++x) {
    const int nx = x < n ? x : x + n;
    for (int y = 0; y < 2 * n; ++y) {
      const int ny = y < n ? y : y + n;
      if (x != y && uf.find(nx) == uf.find(ny)) partner[static_cast<std::size_t>(x)] = y;
    }
  }
  return {static_cast<int>(loop_roots.size()), tl::Diagram::from_partner(n, partner)};
}

// Product of generator diagrams via repeated stacking.
inline tl::ScaledDiagram eval_word(int n, const std::vector<int>& letters) {
  tl::ScaledDiagram acc{0, tl::Diagram::identity(n)};
  for (int i : letters) {
    auto s = stack(acc.diagram, tl::Diagram::generator(n, i));
    acc = {acc.loops + s.loops, s.diagram};
  }
  return acc;
}

// Closed loops after joining k to k' for every k.
inline int closure_loops(const tl::Diagram& d) {
  const int n = d.n();
  UnionFind uf(2 * n);
  for (auto [x, y] : d.pair_slots()) uf.unite(x, y);
  for (int k = 0; k < n; ++k) uf.unite(k, n + k);
  std::set<int> roots;
  for (int k = 0; k < 2 * n; ++k) roots.insert(uf.find(k));
  return static_cast<int>(roots.size());
}

// All non-crossing perfect matchings of 2n points, as partner vectors over
// slots (top 0..n-1, bottom n..2n-1), by brute force over all matchings.
inline std::vector<tl::Diagram> all_diagrams(int n) {
  // Boundary order around the rectangle: T1..Tn then Bn..B1.
  std::vector<int> ring;
  for (int k = 0; k < n; ++k) ring.push_back(k);
  for (int k = n - 1; k >= 0; --k) ring.push_back(n + k);
  std::vector<int> pos(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) pos[static_cast<std::size_t>(ring[static_cast<std::size_t>(i)])] = i;
  std::vector<tl::Diagram> out;
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int i = 0; i < 2 * n; ++i)
      if (partner[static_cast<std::size_t>(i)] < 0) {
        first = i;
        break;
      }
    if (first < 0) {
      // crossing test on the boundary circle
      for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) {
          int a1 = pos[static_cast<std::size_t>(a)], a2 = pos[static_cast<std::size_t>(partner[static_cast<std::size_t>(a)])];
          int b1 = pos[static_cast<std::size_t>(b)], b2 = pos[static_cast<std::size_t>(partner[static_cast<std::size_t>(b)])];
          if (a1 > a2) std::swap(a1, a2);
          if (b1 > b2) std::swap(b1, b2);
          if (a1 < b1 && b1 < a2 && a2 < b2) return;
        }
      out.push_back(tl::Diagram::from_partner(n, partner));
      return;
    }
    for (int j = first + 1; j < 2 * n; ++j) {
      if (partner[static_cast<std::size_t>(j)] >= 0) continue;
      partner[static_cast<std::size_t>(first)] = j;
      partner[static_cast<std::size_t>(j)] = first;
      rec();
      partner[static_cast<std::size_t>(first)] = partner[static_cast<std::size_t>(j)] = -1;
    }
  };
  if (n == 0) return out;
  rec();
  return out;
}

// Number of reduced words for d: BFS over the commutation class of one
// reduced word (fully commutative elements), counted by brute force.
inline std::size_t commutation_class_size(const std::vector<int>& word) {
  std::set<std::vector<int>> seen{word};
  std::deque<std::vector<int>> queue{word};
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (std::abs(w[k] - w[k + 1]) <= 1) continue;
      auto u = w;
      std::swap(u[k], u[k + 1]);
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  return seen.size();
}

// Counts words of the given length whose product is exactly d (no loops), by
// exhaustive enumeration. Exponential; only for tiny n.
inline std::size_t words_hitting(const tl::Diagram& d, std::size_t length) {
  const int n = d.n();
  std::size_t count = 0;
  std::vector<int> w(length, 1);
  if (n < 2) return length == 0 ? 1 : 0;
  while (true) {
    auto s = eval_word(n, w);
    if (s.loops == 0 && s.diagram == d) ++count;
    std::size_t k = 0;
    while (k < length && w[k] == n - 1) w[k++] = 1;
    if (k == length) break;
    ++w[k];
  }
  return count;
}

// Independent half-diagram pairing: loops of h* over h2 and whether every
// defect of h runs to a defect of h2.
inline std::pair<int, bool> pair_halves(const tl::HalfDiagram& h, const tl::HalfDiagram& h2) {
  const int n = h.n();
  UnionFind uf(n);
  for (auto [a, b] : h.links()) uf.unite(a - 1, b - 1);
  for (auto [a, b] : h2.links()) uf.unite(a - 1, b - 1);
  std::set<int> defect_roots;
  for (int d : h.defects()) defect_roots.insert(uf.find(d - 1));
  for (int d : h2.defects()) defect_roots.insert(uf.find(d - 1));
  std::set<int> roots;
  for (int k = 0; k < n; ++k)
    if (!defect_roots.count(uf.find(k))) roots.insert(uf.find(k));
  // preserved iff each component holds at most one defect of each side
  bool preserved = true;
  std::map<int, int> top, bottom;
  for (int d : h.defects()) ++top[uf.find(d - 1)];
  for (int d : h2.defects()) ++bottom[uf.find(d - 1)];
  for (auto [r, c] : top)
    if (c != 1 || bottom[r] != 1) preserved = false;
  return {static_cast<int>(roots.size()), preserved};
}

inline std::size_t catalan(int n) {
  std::size_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / static_cast<std::size_t>(k + 2);
  return c;
}

inline std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace oracle
