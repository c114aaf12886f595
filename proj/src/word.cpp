#include "tl/word.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "tl/skewshape.hpp"

namespace tl {

Word Word::make(int n, std::vector<int> letters) {
  if (n < 1) throw Error("word ambient size must be positive");
  for (int l : letters)
    if (l < 1 || l >= n) throw Error("letter " + std::to_string(l) + " out of range for n=" + std::to_string(n));
  return Word{n, std::move(letters)};
}

std::string Word::to_string() const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  for (int l : letters) os << "e" << l;
  return os.str();
}

NormalForm NormalForm::make(int n, std::vector<std::pair<int, int>> blocks) {
  if (n < 1) throw Error("normal form ambient size must be positive");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto [j, k] = blocks[b];
    if (k < 1 || j < k || j >= n) throw Error("invalid normal form block (" + std::to_string(j) + "," + std::to_string(k) + ")");
    if (b > 0 && (blocks[b - 1].first >= j || blocks[b - 1].second >= k))
      throw Error("normal form blocks must have strictly increasing starts and ends");
  }
  return NormalForm{n, std::move(blocks)};
}

Word NormalForm::word() const {
  Word w{n, {}};
  for (auto [j, k] : blocks)
    for (int l = j; l >= k; --l) w.letters.push_back(l);
  return w;
}

std::size_t NormalForm::length() const {
  std::size_t len = 0;
  for (auto [j, k] : blocks) len += static_cast<std::size_t>(j - k + 1);
  return len;
}

std::string NormalForm::to_string() const {
  if (blocks.empty()) return "1";
  std::ostringstream os;
  for (auto [j, k] : blocks) {
    os << "(";
    for (int l = j; l >= k; --l) os << "e" << l;
    os << ")";
  }
  return os.str();
}

DualNormalForm DualNormalForm::make(int n, std::vector<std::pair<int, int>> blocks) {
  if (n < 1) throw Error("normal form ambient size must be positive");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto [k, j] = blocks[b];
    if (k < 1 || j < k || j >= n) throw Error("invalid dual normal form block (" + std::to_string(k) + "," + std::to_string(j) + ")");
    if (b > 0 && (blocks[b - 1].first <= k || blocks[b - 1].second <= j))
      throw Error("dual normal form blocks must have strictly decreasing starts and ends");
  }
  return DualNormalForm{n, std::move(blocks)};
}

Word DualNormalForm::word() const {
  Word w{n, {}};
  for (auto [k, j] : blocks)
    for (int l = k; l <= j; ++l) w.letters.push_back(l);
  return w;
}

std::string DualNormalForm::to_string() const {
  if (blocks.empty()) return "1";
  std::ostringstream os;
  for (auto [k, j] : blocks) {
    os << "(";
    for (int l = k; l <= j; ++l) os << "e" << l;
    os << ")";
  }
  return os.str();
}

DyckPath DyckPath::make(int n, std::string steps) {
  if (n < 1 || steps.size() != static_cast<std::size_t>(2 * n)) throw Error("Dyck path must have 2n steps");
  int x = 0, y = 0;
  for (char c : steps) {
    if (c == 'R') ++x;
    else if (c == 'U') ++y;
    else throw Error("Dyck path steps must be R or U");
    if (y > x) throw Error("malformed path: crosses the diagonal");
  }
  if (x != n || y != n) throw Error("Dyck path must end at (n,n)");
  return DyckPath{n, std::move(steps)};
}

std::vector<std::pair<int, int>> DyckPath::corners() const {
  std::vector<std::pair<int, int>> out{{0, 0}};
  int x = 0, y = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    (steps[k] == 'R' ? x : y) += 1;
    if (k + 1 == steps.size() || steps[k + 1] != steps[k]) out.emplace_back(x, y);
  }
  return out;
}

ScaledDiagram eval(const Word& w) {
  ScaledDiagram acc{0, Diagram::identity(w.n)};
  for (int l : w.letters) {
    ScaledDiagram step = multiply(acc.diagram, Diagram::generator(w.n, l));
    acc.loops += step.loops;
    acc.diagram = std::move(step.diagram);
  }
  return acc;
}

NormalForm normal_form(const Diagram& d) { return row_reading_word(theta(d), d.n()); }
DualNormalForm dual_normal_form(const Diagram& d) { return col_reading_word(theta(d), d.n()); }

NormalFormResult normal_form(const Word& w) {
  const ScaledDiagram e = eval(w);
  return {e.loops, normal_form(e.diagram)};
}

DualNormalFormResult dual_normal_form(const Word& w) {
  const ScaledDiagram e = eval(w);
  return {e.loops, dual_normal_form(e.diagram)};
}

bool is_reduced(const Word& w) {
  const auto r = normal_form(w);
  return r.exponent == 0 && r.nf.length() == w.letters.size();
}

// ---- region algorithm ----

namespace {

struct Strand {
  enum Kind { Cup, Cap, Through } kind;
  int a, b;  // cups/caps: positions a < b; through: a = top position, b = bottom position
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<std::vector<int>> kauffman_regions(const Diagram& d) {
  const int n = d.n();
  std::vector<Strand> strands;
  std::vector<int> at_top(static_cast<std::size_t>(n)), at_bottom(static_cast<std::size_t>(n));
  for (auto [x, y] : d.pair_slots()) {
    const int id = static_cast<int>(strands.size());
    if (y < n) {
      strands.push_back({Strand::Cup, x + 1, y + 1});
      at_top[static_cast<std::size_t>(x)] = at_top[static_cast<std::size_t>(y)] = id;
    } else if (x >= n) {
      strands.push_back({Strand::Cap, x - n + 1, y - n + 1});
      at_bottom[static_cast<std::size_t>(x - n)] = at_bottom[static_cast<std::size_t>(y - n)] = id;
    } else {
      strands.push_back({Strand::Through, x + 1, y - n + 1});
      at_top[static_cast<std::size_t>(x)] = id;
      at_bottom[static_cast<std::size_t>(y - n)] = id;
    }
  }

  // Crossings of bisector i (between positions i and i+1), listed top to bottom.
  std::vector<std::vector<int>> cross(static_cast<std::size_t>(n + 1));
  for (int i = 1; i < n; ++i) {
    std::vector<int> cups, throughs, caps;
    for (int s = 0; s < static_cast<int>(strands.size()); ++s) {
      const Strand& st = strands[static_cast<std::size_t>(s)];
      const int lo = std::min(st.a, st.b), hi = std::max(st.a, st.b);
      if (!(lo <= i && i < hi)) continue;
      (st.kind == Strand::Cup ? cups : st.kind == Strand::Cap ? caps : throughs).push_back(s);
    }
    auto A = [&](int s) { return strands[static_cast<std::size_t>(s)].a; };
    std::sort(cups.begin(), cups.end(), [&](int x, int y) { return A(x) > A(y); });     // innermost first
    std::sort(caps.begin(), caps.end(), [&](int x, int y) { return A(x) < A(y); });     // outermost first
    std::sort(throughs.begin(), throughs.end(), [&](int x, int y) {
      const bool right = strands[static_cast<std::size_t>(x)].a <= i;  // all crossing throughs share a direction
      return right ? A(x) > A(y) : A(x) < A(y);
    });
    auto& c = cross[static_cast<std::size_t>(i)];
    c.insert(c.end(), cups.begin(), cups.end());
    c.insert(c.end(), throughs.begin(), throughs.end());
    c.insert(c.end(), caps.begin(), caps.end());
    if (c.size() % 2) throw Error("internal: odd crossing count");
  }

  // Gap g on bisector i gets a global id.
  std::vector<std::size_t> base(static_cast<std::size_t>(n + 2), 0);
  for (int i = 0; i <= n; ++i) base[static_cast<std::size_t>(i + 1)] = base[static_cast<std::size_t>(i)] + cross[static_cast<std::size_t>(i)].size() + 1;
  UnionFind uf(base[static_cast<std::size_t>(n + 1)]);
  auto gap = [&](int i, std::size_t g) { return base[static_cast<std::size_t>(i)] + g; };

  for (int i = 0; i < n; ++i) {
    const int v = i + 1;
    const int T = at_top[static_cast<std::size_t>(v - 1)], B = at_bottom[static_cast<std::size_t>(v - 1)];
    if (T == B) continue;  // vertical strand at v: both bisectors carry no crossings
    const auto& L = cross[static_cast<std::size_t>(i)];
    const auto& R = cross[static_cast<std::size_t>(i + 1)];
    auto strip = [&](const std::vector<int>& side) {
      std::vector<int> mid;
      for (int s : side)
        if (s != T && s != B) mid.push_back(s);
      return mid;
    };
    const std::vector<int> mid = strip(L);
    if (mid != strip(R)) throw Error("internal: strip strands disagree");
    const bool t_left = std::find(L.begin(), L.end(), T) != L.end();
    const bool t_right = std::find(R.begin(), R.end(), T) != R.end();
    if ((t_left && L.front() != T) || (t_right && R.front() != T)) throw Error("internal: top strand not outermost");
    const std::size_t tL = t_left ? 1 : 0, tR = t_right ? 1 : 0;
    for (std::size_t k = 0; k <= mid.size(); ++k) uf.unite(gap(i, tL + k), gap(i + 1, tR + k));
  }

  // Numbered regions own at least one connecting segment.
  std::map<std::size_t, std::vector<int>> region_letters;
  for (int i = 1; i < n; ++i)
    for (std::size_t k = 0; 2 * k < cross[static_cast<std::size_t>(i)].size(); ++k)
      region_letters[uf.find(gap(i, 2 * k + 1))].push_back(i);

  std::map<std::size_t, std::vector<std::size_t>> below;
  std::map<std::size_t, int> indegree;
  for (auto& [f, _] : region_letters) indegree[f] = 0;
  for (int i = 1; i < n; ++i) {
    std::size_t prev = SIZE_MAX;
    for (std::size_t g = 0; g <= cross[static_cast<std::size_t>(i)].size(); ++g) {
      const std::size_t f = uf.find(gap(i, g));
      if (!region_letters.count(f) || f == prev) continue;
      if (prev != SIZE_MAX) {
        below[prev].push_back(f);
        ++indegree[f];
      }
      prev = f;
    }
  }
  // Longest-path levels by Kahn's algorithm.
  std::map<std::size_t, int> level;
  std::vector<std::size_t> ready;
  for (auto& [f, deg] : indegree)
    if (deg == 0) ready.push_back(f), level[f] = 0;
  std::size_t done = 0;
  while (!ready.empty()) {
    const std::size_t f = ready.back();
    ready.pop_back();
    ++done;
    for (std::size_t g : below[f]) {
      level[g] = std::max(level[g], level[f] + 1);
      if (--indegree[g] == 0) ready.push_back(g);
    }
  }
  if (done != region_letters.size()) throw Error("internal: region order has a cycle");

  std::vector<std::pair<std::pair<int, int>, std::size_t>> order;
  for (auto& [f, letters] : region_letters) {
    std::sort(letters.begin(), letters.end());
    order.push_back({{level[f], letters.front()}, f});
  }
  std::sort(order.begin(), order.end());
  std::vector<std::vector<int>> out;
  for (auto& [key, f] : order) out.push_back(region_letters[f]);
  return out;
}

Word kauffman_word(const Diagram& d) {
  Word w{d.n(), {}};
  for (const auto& r : kauffman_regions(d)) w.letters.insert(w.letters.end(), r.begin(), r.end());
  return w;
}

DyckPath nf_to_dyck(const NormalForm& nf) {
  std::string steps;
  int x = 0, y = 0;
  for (auto [j, k] : nf.blocks) {
    steps.append(static_cast<std::size_t>(j - x), 'R');
    steps.append(static_cast<std::size_t>(k - y), 'U');
    x = j;
    y = k;
  }
  steps.append(static_cast<std::size_t>(nf.n - x), 'R');
  steps.append(static_cast<std::size_t>(nf.n - y), 'U');
  return DyckPath::make(nf.n, std::move(steps));
}

NormalForm dyck_to_nf(const DyckPath& p) {
  const DyckPath q = DyckPath::make(p.n, p.steps);
  std::vector<std::pair<int, int>> blocks;
  int x = 0, y = 0;
  std::size_t k = 0;
  while (k < q.steps.size()) {
    while (k < q.steps.size() && q.steps[k] == 'R') ++x, ++k;
    while (k < q.steps.size() && q.steps[k] == 'U') ++y, ++k;
    if (k < q.steps.size()) blocks.emplace_back(x, y);
  }
  return NormalForm::make(q.n, std::move(blocks));
}

}  // namespace tl
