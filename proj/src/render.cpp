#include "tl/render.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace tl {

namespace {

using Canvas = std::vector<std::string>;

int col(int k) { return 2 * k; }  // 0-based vertex k

std::string flatten(const Canvas& c) {
  std::string out;
  for (std::string row : c) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + '\n';
  }
  return out;
}

std::string vertex_row(int n) {
  std::string s(static_cast<std::size_t>(2 * n - 1), ' ');
  for (int k = 0; k < n; ++k) s[static_cast<std::size_t>(col(k))] = 'o';
  return s;
}

// Nesting depth of each arc (innermost = 1) for a row of n points with the
// given 0-based partner map; -1 marks points without an arc.
std::map<int, int> arc_depths(const std::vector<int>& partner) {
  std::map<int, int> depth;  // left endpoint -> depth
  std::vector<int> stack;
  std::vector<int> inner(partner.size(), 0);
  for (int k = 0; k < static_cast<int>(partner.size()); ++k) {
    const int p = partner[static_cast<std::size_t>(k)];
    if (p < 0) continue;
    if (p > k) {
      stack.push_back(k);
    } else {
      const int d = inner[static_cast<std::size_t>(p)] + 1;
      depth[p] = d;
      stack.pop_back();
      if (!stack.empty()) {
        auto& outer = inner[static_cast<std::size_t>(stack.back())];
        outer = std::max(outer, d);
      }
    }
  }
  return depth;
}

// Draws arcs into rows [first, first + rows). `down` arcs hang below the top
// row; otherwise they rise towards the bottom row and the picture is mirrored.
void draw_arcs(Canvas& c, int first, int rows, const std::vector<int>& partner, bool down) {
  for (auto [a, d] : arc_depths(partner)) {
    const int b = partner[static_cast<std::size_t>(a)];
    for (int r = 0; r < d; ++r) {
      std::string& row = c[static_cast<std::size_t>(down ? first + r : first + rows - 1 - r)];
      if (r + 1 < d) {
        row[static_cast<std::size_t>(col(a))] = '|';
        row[static_cast<std::size_t>(col(b))] = '|';
      } else {
        row[static_cast<std::size_t>(col(a))] = '(';
        row[static_cast<std::size_t>(col(b))] = ')';
        for (int x = col(a) + 1; x < col(b); ++x) row[static_cast<std::size_t>(x)] = '-';
      }
    }
  }
}

int max_depth(const std::vector<int>& partner) {
  int m = 0;
  for (auto [a, d] : arc_depths(partner)) m = std::max(m, d);
  return m;
}

}  // namespace

std::string render_ascii(const Diagram& d) {
  const int n = d.n();
  std::vector<int> top(static_cast<std::size_t>(n), -1), bottom(static_cast<std::size_t>(n), -1);
  std::vector<std::pair<int, int>> right, left;  // moving through strands (top, bottom)
  std::vector<int> vertical;
  for (int k = 0; k < n; ++k) {
    const int p = d.partner(k);
    if (p < n) {
      top[static_cast<std::size_t>(k)] = p;
    } else if (p - n == k) {
      vertical.push_back(k);
    } else if (p - n > k) {
      right.emplace_back(k, p - n);
    } else {
      left.emplace_back(k, p - n);
    }
    const int q = d.partner(n + k);
    if (q >= n) bottom[static_cast<std::size_t>(k)] = q - n;
  }
  std::sort(right.begin(), right.end(), [](auto x, auto y) { return x.first > y.first; });
  std::sort(left.begin(), left.end());
  std::vector<std::pair<int, int>> moving = right;
  moving.insert(moving.end(), left.begin(), left.end());

  const int cups = max_depth(top), caps = max_depth(bottom);
  const int middle = std::max<int>(1, static_cast<int>(moving.size()));
  const int inner = cups + middle + caps;
  Canvas c(static_cast<std::size_t>(inner + 2), std::string(static_cast<std::size_t>(2 * n - 1), ' '));
  c.front() = vertex_row(n);
  c.back() = vertex_row(n);
  draw_arcs(c, 1, cups, top, true);
  draw_arcs(c, 1 + cups + middle, caps, bottom, false);
  for (int k : vertical)
    for (int r = 1; r <= inner; ++r) c[static_cast<std::size_t>(r)][static_cast<std::size_t>(col(k))] = '|';
  for (std::size_t m = 0; m < moving.size(); ++m) {
    const auto [t, b] = moving[m];
    const int row = 1 + cups + static_cast<int>(m);
    for (int r = 1; r < row; ++r) c[static_cast<std::size_t>(r)][static_cast<std::size_t>(col(t))] = '|';
    for (int x = std::min(col(t), col(b)); x <= std::max(col(t), col(b)); ++x)
      c[static_cast<std::size_t>(row)][static_cast<std::size_t>(x)] = '-';
    for (int r = row + 1; r <= inner; ++r) c[static_cast<std::size_t>(r)][static_cast<std::size_t>(col(b))] = '|';
  }
  return flatten(c);
}

std::string render_ascii(const HalfDiagram& h) {
  const int n = h.n();
  const int rows = std::max(1, max_depth(h.partners()));
  Canvas c(static_cast<std::size_t>(rows + 1), std::string(static_cast<std::size_t>(2 * n - 1), ' '));
  c.front() = vertex_row(n);
  draw_arcs(c, 1, rows, h.partners(), true);
  for (int d : h.defects())
    for (int r = 1; r <= rows; ++r) c[static_cast<std::size_t>(r)][static_cast<std::size_t>(col(d - 1))] = '|';
  return flatten(c);
}

std::string render_skew(const LabeledSkewShape& s) {
  SkewOutline o = outline_from_cells(s);
  std::string out;
  for (std::size_t r = 0; r < o.lambda.size(); ++r) {
    const int i = static_cast<int>(r) + 1;
    const int mu = r < o.mu.size() ? o.mu[r] : 0;
    std::string line;
    for (int c = 1; c <= o.lambda[r]; ++c) {
      if (c > 1) line += ' ';
      if (c <= mu) {
        line += "##";
      } else {
        std::string lab = std::to_string(LabeledSkewShape::label({i, o.left + c}));
        line += std::string(lab.size() < 2 ? 2 - lab.size() : 0, ' ') + lab;
      }
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace tl
