#include "tl/skewshape.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace tl {

std::string CompassSeq::to_string() const {
  std::string s;
  for (Compass c : dirs) s.push_back(static_cast<char>(c));
  return s;
}

namespace {

// Position (1-based column) of the other end of the strand at `slot`.
int partner_position(const Diagram& d, int slot) {
  const int q = d.partner(slot);
  return q < d.n() ? q + 1 : q - d.n() + 1;
}

}  // namespace

CompassSeq compass(const Diagram& d) { return detail::compass_with_vertical_we(d, 0); }

namespace detail {

CompassSeq compass_with_vertical_we(const Diagram& d, std::uint64_t we_mask) {
  const int n = d.n();
  CompassSeq c;
  std::vector<char> vertical_we(static_cast<std::size_t>(n), 0);
  int vertical_index = 0;
  for (int k = 0; k < n; ++k) {
    if (d.partner(k) == n + k) {
      vertical_we[static_cast<std::size_t>(k)] = (we_mask >> vertical_index & 1u) ? 1 : 0;
      ++vertical_index;
    }
  }
  for (int k = 1; k <= n; ++k) {
    if (vertical_we[static_cast<std::size_t>(k - 1)]) c.dirs.push_back(Compass::W);
    else c.dirs.push_back(partner_position(d, k - 1) > k ? Compass::W : Compass::S);
  }
  for (int k = n; k >= 1; --k) {
    if (vertical_we[static_cast<std::size_t>(k - 1)]) c.dirs.push_back(Compass::E);
    else c.dirs.push_back(partner_position(d, n + k - 1) >= k ? Compass::N : Compass::E);
  }
  return c;
}

}  // namespace detail

namespace {

// Column of the south step and of the north step crossing each row strip.
struct RowBounds {
  std::vector<int> south, north;  // index i-1 for row i
};

RowBounds trace_path(const CompassSeq& c) {
  const std::size_t len = c.dirs.size();
  if (len % 2) throw Error("compass sequence must have even length");
  const std::size_t n = len / 2;
  RowBounds rb;
  int i = 0, j = 0;
  for (std::size_t k = 0; k < n; ++k) {
    switch (c.dirs[k]) {
      case Compass::W: --j; break;
      case Compass::S: ++i; rb.south.push_back(j); break;
      default: throw Error("top half of a compass sequence must be W/S");
    }
  }
  rb.north.assign(rb.south.size(), 0);
  for (std::size_t k = n; k < len; ++k) {
    switch (c.dirs[k]) {
      case Compass::E: ++j; break;
      case Compass::N:
        if (i < 1) throw Error("polygonal path leaves the upper half plane");
        rb.north[static_cast<std::size_t>(i - 1)] = j;
        --i;
        break;
      default: throw Error("bottom half of a compass sequence must be N/E");
    }
  }
  if (i != 0 || j != 0) throw Error("polygonal path does not close");
  for (std::size_t r = 0; r < rb.south.size(); ++r)
    if (rb.south[r] > rb.north[r]) throw Error("polygonal path is not a skew boundary");
  return rb;
}

}  // namespace

LabeledSkewShape shape_from_compass(const CompassSeq& c) {
  const RowBounds rb = trace_path(c);
  LabeledSkewShape s;
  for (std::size_t r = 0; r < rb.south.size(); ++r)
    for (int j = rb.south[r] + 1; j <= rb.north[r]; ++j) s.cells.insert({static_cast<int>(r) + 1, j});
  return s;
}

SkewOutline outline_from_compass(const CompassSeq& c) {
  const RowBounds rb = trace_path(c);
  SkewOutline o;
  if (rb.south.empty()) return o;
  o.left = *std::min_element(rb.south.begin(), rb.south.end());
  for (std::size_t r = 0; r < rb.south.size(); ++r) {
    o.lambda.push_back(rb.north[r] - o.left);
    o.mu.push_back(rb.south[r] - o.left);
  }
  while (!o.lambda.empty() && o.lambda.back() == 0) o.lambda.pop_back();
  while (!o.mu.empty() && o.mu.back() == 0) o.mu.pop_back();
  return o;
}

SkewOutline outline_from_cells(const LabeledSkewShape& s) {
  SkewOutline o;
  if (s.cells.empty()) return o;
  std::map<int, std::pair<int, int>> rows;  // row -> (min j, max j)
  for (auto [i, j] : s.cells) {
    auto it = rows.find(i);
    if (it == rows.end()) rows[i] = {j, j};
    else it->second = {std::min(it->second.first, j), std::max(it->second.second, j)};
  }
  o.left = rows.begin()->second.first - 1;
  for (auto& [i, r] : rows) o.left = std::min(o.left, r.first - 1);
  const int last = rows.rbegin()->first;
  int below = 0;
  std::vector<int> lam(static_cast<std::size_t>(last)), mu(static_cast<std::size_t>(last));
  for (int i = last; i >= 1; --i) {
    auto it = rows.find(i);
    if (it != rows.end()) {
      lam[static_cast<std::size_t>(i - 1)] = it->second.second - o.left;
      mu[static_cast<std::size_t>(i - 1)] = it->second.first - 1 - o.left;
      below = lam[static_cast<std::size_t>(i - 1)];
    } else {
      lam[static_cast<std::size_t>(i - 1)] = mu[static_cast<std::size_t>(i - 1)] = below;
    }
  }
  o.lambda = lam;
  o.mu = mu;
  while (!o.mu.empty() && o.mu.back() == 0) o.mu.pop_back();
  return o;
}

LabeledSkewShape theta(const Diagram& d) { return shape_from_compass(compass(d)); }

bool labels_consistent(const LabeledSkewShape& s, int n) {
  std::map<int, std::vector<int>> rows, cols;
  for (auto c : s.cells) {
    const int l = LabeledSkewShape::label(c);
    if (l < 1 || l >= n) return false;
    rows[c.first].push_back(c.second);
    cols[c.second].push_back(c.first);
  }
  auto contiguous = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    for (std::size_t k = 1; k < v.size(); ++k)
      if (v[k] != v[k - 1] + 1) return false;
    return true;
  };
  for (auto& [i, js] : rows) {
    if (!contiguous(js)) return false;
    // Label decreases by one along the row: neighbours j, j+1 give i-j, i-j-1.
  }
  for (auto& [j, is] : cols)
    if (!contiguous(is)) return false;
  // Row intervals move weakly left going down.
  int prev_lo = 1 << 30, prev_hi = 1 << 30, prev_row = -1;
  for (auto& [i, js] : rows) {
    if (prev_row != -1 && (js.front() > prev_lo || js.back() > prev_hi)) return false;
    prev_lo = js.front();
    prev_hi = js.back();
    prev_row = i;
  }
  return true;
}

NormalForm row_reading_word(const LabeledSkewShape& s, int n) {
  std::map<int, std::vector<int>> rows;
  for (auto c : s.cells) rows[c.first].push_back(LabeledSkewShape::label(c));
  std::vector<std::pair<int, int>> blocks;
  for (auto& [i, labels] : rows) {
    // std::set order gives increasing j, i.e. decreasing labels.
    for (int l : labels)
      if (l < 1 || l >= n) throw Error("label " + std::to_string(l) + " out of range for n=" + std::to_string(n));
    blocks.emplace_back(labels.front(), labels.back());
  }
  return NormalForm::make(n, std::move(blocks));
}

DualNormalForm col_reading_word(const LabeledSkewShape& s, int n) {
  std::map<int, std::vector<int>> cols;
  for (auto c : s.cells) cols[c.second].push_back(LabeledSkewShape::label(c));
  std::vector<std::pair<int, int>> blocks;
  for (auto& [j, labels] : cols) {
    for (int l : labels)
      if (l < 1 || l >= n) throw Error("label " + std::to_string(l) + " out of range for n=" + std::to_string(n));
    std::sort(labels.begin(), labels.end());
    blocks.emplace_back(labels.front(), labels.back());
  }
  return DualNormalForm::make(n, std::move(blocks));
}

bool bjs_equivalent(const LabeledSkewShape& a, const LabeledSkewShape& b, int n) {
  return row_reading_word(a, n) == row_reading_word(b, n);
}

std::string permutation_string(const Permutation& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w.size() > 9 && k) s.push_back(',');
    s += std::to_string(w[k]);
  }
  return s;
}

namespace {

void check_permutation(const Permutation& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(x)]) throw Error("not a permutation");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

}  // namespace

bool is_321_avoiding(const Permutation& w) {
  check_permutation(w);
  // Middle element of a 321 pattern has a larger value before it and a smaller one after.
  const std::size_t n = w.size();
  std::vector<int> suffix_min(n + 1, 1 << 30);
  for (std::size_t k = n; k-- > 0;) suffix_min[k] = std::min(suffix_min[k + 1], w[k]);
  int prefix_max = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (prefix_max > w[k] && suffix_min[k + 1] < w[k]) return false;
    prefix_max = std::max(prefix_max, w[k]);
  }
  return true;
}

Permutation to_permutation(const Diagram& d) {
  Permutation w(static_cast<std::size_t>(d.n()));
  for (int k = 0; k < d.n(); ++k) w[static_cast<std::size_t>(k)] = k + 1;
  // Right multiplication by s_a swaps the entries in positions a and a+1.
  for (int a : normal_form(d).word().letters) std::swap(w[static_cast<std::size_t>(a - 1)], w[static_cast<std::size_t>(a)]);
  return w;
}

CompassSeq compass_of_permutation(const Permutation& w) {
  check_permutation(w);
  const int n = static_cast<int>(w.size());
  std::vector<int> inv(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) inv[static_cast<std::size_t>(w[static_cast<std::size_t>(k - 1)])] = k;
  // Top k joins bottom w^{-1}(k).
  CompassSeq c;
  for (int k = 1; k <= n; ++k) c.dirs.push_back(inv[static_cast<std::size_t>(k)] > k ? Compass::W : Compass::S);
  for (int k = n; k >= 1; --k) c.dirs.push_back(w[static_cast<std::size_t>(k - 1)] >= k ? Compass::N : Compass::E);
  return c;
}

Diagram from_permutation(const Permutation& w) {
  check_permutation(w);
  if (w.empty()) throw Error("empty permutation");
  if (!is_321_avoiding(w)) throw Error("not 321-avoiding: " + permutation_string(w));
  const int n = static_cast<int>(w.size());
  const NormalForm nf = row_reading_word(shape_from_compass(compass_of_permutation(w)), n);
  const ScaledDiagram e = eval(nf.word());
  if (e.loops != 0) throw Error("internal: permutation word is not reduced");
  return e.diagram;
}

std::uint64_t count_standard_fillings(const LabeledSkewShape& s) {
  std::vector<std::pair<int, int>> cells(s.cells.begin(), s.cells.end());
  if (cells.size() > 64) throw Error("shape too large for filling count");
  const std::size_t m = cells.size();
  // Bit masks of the in-shape left and upper neighbours of each cell.
  std::vector<std::uint64_t> need(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const auto [i, j] = cells[a];
      if (cells[b] == std::make_pair(i, j - 1) || cells[b] == std::make_pair(i - 1, j)) need[a] |= std::uint64_t{1} << b;
    }
  const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  auto rec = [&](auto&& self, std::uint64_t placed) -> std::uint64_t {
    if (placed == full) return 1;
    if (auto it = memo.find(placed); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t a = 0; a < m; ++a) {
      const std::uint64_t bit = std::uint64_t{1} << a;
      if ((placed & bit) || (need[a] & ~placed)) continue;
      if (__builtin_add_overflow(total, self(self, placed | bit), &total)) throw Error("filling count overflow");
    }
    memo[placed] = total;
    return total;
  };
  return rec(rec, 0);
}

std::uint64_t count_reduced_expressions(const Diagram& d) { return count_standard_fillings(theta(d)); }

}  // namespace tl
