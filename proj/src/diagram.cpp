#include "tl/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace tl {

std::string endpoint_name(const Endpoint& e) { return (e.row == Row::Top ? "T" : "B") + std::to_string(e.index); }

Endpoint parse_endpoint(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'T' && s[0] != 'B')) throw Error("malformed endpoint '" + s + "'");
  int idx = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') throw Error("malformed endpoint '" + s + "'");
    idx = idx * 10 + (s[k] - '0');
  }
  return {s[0] == 'T' ? Row::Top : Row::Bottom, idx};
}

namespace {

// Position of a slot on the boundary circle 1..n, n'..1'.
int circ_pos(int n, int slot) { return slot < n ? slot : 3 * n - 1 - slot; }
int slot_of_pos(int n, int pos) { return pos < n ? pos : 3 * n - 1 - pos; }

// Returns an offending pair of slots (a, b), (c, d) when the matching crosses.
bool find_crossing(int n, const std::vector<int>& partner, std::pair<int, int>& x, std::pair<int, int>& y) {
  std::vector<int> stack;
  for (int pos = 0; pos < 2 * n; ++pos) {
    const int s = slot_of_pos(n, pos);
    const int q = circ_pos(n, partner[static_cast<std::size_t>(s)]);
    if (q > pos) {
      stack.push_back(pos);
    } else if (stack.back() != q) {
      const int top = stack.back();
      x = {slot_of_pos(n, top), partner[static_cast<std::size_t>(slot_of_pos(n, top))]};
      y = {s, partner[static_cast<std::size_t>(s)]};
      return true;
    } else {
      stack.pop_back();
    }
  }
  return false;
}

}  // namespace

Diagram Diagram::validate(int n, const std::vector<std::pair<Endpoint, Endpoint>>& pairs) {
  if (n < 1) throw Error("diagram size must be positive");
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  auto slot = [n](const Endpoint& e) {
    if (e.index < 1 || e.index > n) throw Error("not a perfect matching: endpoint " + endpoint_name(e) + " out of range");
    return e.row == Row::Top ? e.index - 1 : n + e.index - 1;
  };
  for (const auto& [a, b] : pairs) {
    const int x = slot(a), y = slot(b);
    if (x == y || partner[static_cast<std::size_t>(x)] != -1 || partner[static_cast<std::size_t>(y)] != -1)
      throw Error("not a perfect matching: endpoint used twice");
    partner[static_cast<std::size_t>(x)] = y;
    partner[static_cast<std::size_t>(y)] = x;
  }
  for (int p : partner)
    if (p == -1) throw Error("not a perfect matching: unmatched endpoint");
  return from_partner(n, std::move(partner));
}

Diagram Diagram::from_partner(int n, std::vector<int> partner) {
  if (n < 1 || partner.size() != static_cast<std::size_t>(2 * n)) throw Error("not a perfect matching");
  for (int s = 0; s < 2 * n; ++s) {
    const int p = partner[static_cast<std::size_t>(s)];
    if (p < 0 || p >= 2 * n || p == s || partner[static_cast<std::size_t>(p)] != s)
      throw Error("not a perfect matching");
  }
  Diagram d;
  d.n_ = n;
  d.partner_ = std::move(partner);
  std::pair<int, int> x, y;
  if (find_crossing(n, d.partner_, x, y)) {
    throw Error("crossing detected: {" + endpoint_name(d.endpoint(x.first)) + "," + endpoint_name(d.endpoint(x.second)) +
                "} and {" + endpoint_name(d.endpoint(y.first)) + "," + endpoint_name(d.endpoint(y.second)) + "}");
  }
  return d;
}

Diagram Diagram::identity(int n) {
  if (n < 1) throw Error("diagram size must be positive");
  std::vector<int> p(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    p[static_cast<std::size_t>(k)] = n + k;
    p[static_cast<std::size_t>(n + k)] = k;
  }
  Diagram d;
  d.n_ = n;
  d.partner_ = std::move(p);
  return d;
}

Diagram Diagram::generator(int n, int i) {
  if (i < 1 || i >= n) throw Error("generator index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
  Diagram d = identity(n);
  auto& p = d.partner_;
  p[static_cast<std::size_t>(i - 1)] = i;
  p[static_cast<std::size_t>(i)] = i - 1;
  p[static_cast<std::size_t>(n + i - 1)] = n + i;
  p[static_cast<std::size_t>(n + i)] = n + i - 1;
  return d;
}

Endpoint Diagram::endpoint(int slot) const {
  return slot < n_ ? Endpoint{Row::Top, slot + 1} : Endpoint{Row::Bottom, slot - n_ + 1};
}

std::vector<std::pair<int, int>> Diagram::pair_slots() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < 2 * n_; ++s)
    if (partner_[static_cast<std::size_t>(s)] > s) out.emplace_back(s, partner_[static_cast<std::size_t>(s)]);
  return out;
}

std::vector<std::pair<Endpoint, Endpoint>> Diagram::pairs() const {
  std::vector<std::pair<Endpoint, Endpoint>> out;
  for (auto [a, b] : pair_slots()) out.emplace_back(endpoint(a), endpoint(b));
  return out;
}

int Diagram::through_count() const {
  int c = 0;
  for (int s = 0; s < n_; ++s) c += partner_[static_cast<std::size_t>(s)] >= n_;
  return c;
}

bool Diagram::operator<(const Diagram& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  // Walk both canonical pair lists in step.
  int i = 0, j = 0;
  const int m = 2 * n_;
  while (true) {
    while (i < m && partner_[static_cast<std::size_t>(i)] < i) ++i;
    while (j < m && o.partner_[static_cast<std::size_t>(j)] < j) ++j;
    if (i == m || j == m) return i == m && j != m;
    if (i != j) return i < j;
    const int a = partner_[static_cast<std::size_t>(i)], b = o.partner_[static_cast<std::size_t>(j)];
    if (a != b) return a < b;
    ++i;
    ++j;
  }
}

std::string Diagram::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [a, b] : pairs()) {
    if (!first) os << ",";
    first = false;
    os << "{" << endpoint_name(a) << "," << endpoint_name(b) << "}";
  }
  os << "}";
  return os.str();
}

// ---- HalfDiagram ----

HalfDiagram HalfDiagram::validate(int n, const std::vector<std::pair<int, int>>& links) {
  if (n < 1) throw Error("half-diagram size must be positive");
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  for (auto [a, b] : links) {
    if (a < 1 || b < 1 || a > n || b > n || a == b) throw Error("invalid link");
    if (partner[static_cast<std::size_t>(a - 1)] != -1 || partner[static_cast<std::size_t>(b - 1)] != -1)
      throw Error("vertex used by two links");
    partner[static_cast<std::size_t>(a - 1)] = b - 1;
    partner[static_cast<std::size_t>(b - 1)] = a - 1;
  }
  return from_partner(n, std::move(partner));
}

HalfDiagram HalfDiagram::from_partner(int n, std::vector<int> partner) {
  if (n < 1 || partner.size() != static_cast<std::size_t>(n)) throw Error("invalid half-diagram");
  // Scan: opening ends push, closing ends must match the top, defects need an empty stack.
  std::vector<int> stack;
  for (int k = 0; k < n; ++k) {
    const int p = partner[static_cast<std::size_t>(k)];
    if (p == -1) {
      if (!stack.empty()) throw Error("defect " + std::to_string(k + 1) + " lies under a link");
      continue;
    }
    if (p < 0 || p >= n || p == k || partner[static_cast<std::size_t>(p)] != k) throw Error("invalid half-diagram");
    if (p > k) {
      stack.push_back(k);
    } else {
      if (stack.back() != p) throw Error("crossing links in half-diagram");
      stack.pop_back();
    }
  }
  HalfDiagram h;
  h.n_ = n;
  h.partner_ = std::move(partner);
  return h;
}

std::vector<std::pair<int, int>> HalfDiagram::links() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < n_; ++k)
    if (partner_[static_cast<std::size_t>(k)] > k) out.emplace_back(k + 1, partner_[static_cast<std::size_t>(k)] + 1);
  return out;
}

std::vector<int> HalfDiagram::defects() const {
  std::vector<int> out;
  for (int k = 0; k < n_; ++k)
    if (partner_[static_cast<std::size_t>(k)] == -1) out.push_back(k + 1);
  return out;
}

int HalfDiagram::link_count() const {
  int c = 0;
  for (int k = 0; k < n_; ++k) c += partner_[static_cast<std::size_t>(k)] > k;
  return c;
}

bool HalfDiagram::operator<(const HalfDiagram& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return links() < o.links();
}

std::string HalfDiagram::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto [a, b] : links()) {
    if (!first) os << ",";
    first = false;
    os << "(" << a << "," << b << ")";
  }
  os << "}";
  return os.str();
}

// ---- operations ----

ScaledDiagram multiply(const Diagram& a, const Diagram& b) {
  const int n = a.n();
  if (b.n() != n) throw Error("size mismatch: " + std::to_string(n) + " vs " + std::to_string(b.n()));
  std::vector<int> out(static_cast<std::size_t>(2 * n), -1);
  std::vector<char> mid_seen(static_cast<std::size_t>(n), 0);
  // Follows a strand that entered the middle row at m heading into `down` (b) or up (a).
  auto travel = [&](int m, bool down) {
    while (true) {
      mid_seen[static_cast<std::size_t>(m)] = 1;
      if (down) {
        const int q = b.partner(m);
        if (q >= n) return q;  // bottom of result
        m = q;
      } else {
        const int q = a.partner(n + m);
        if (q < n) return q;  // top of result
        m = q - n;
      }
      mid_seen[static_cast<std::size_t>(m)] = 1;
      down = !down;
    }
  };
  for (int s = 0; s < n; ++s) {
    if (out[static_cast<std::size_t>(s)] != -1) continue;
    const int q = a.partner(s);
    const int end = q < n ? q : travel(q - n, true);
    out[static_cast<std::size_t>(s)] = end;
    out[static_cast<std::size_t>(end)] = s;
  }
  for (int s = n; s < 2 * n; ++s) {
    if (out[static_cast<std::size_t>(s)] != -1) continue;
    const int q = b.partner(s);
    const int end = q >= n ? q : travel(q, false);
    out[static_cast<std::size_t>(s)] = end;
    out[static_cast<std::size_t>(end)] = s;
  }
  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (mid_seen[static_cast<std::size_t>(m)]) continue;
    ++loops;
    int cur = m;
    do {
      mid_seen[static_cast<std::size_t>(cur)] = 1;
      const int via_a = a.partner(n + cur) - n;
      mid_seen[static_cast<std::size_t>(via_a)] = 1;
      cur = b.partner(via_a);
    } while (cur != m);
  }
  return {loops, Diagram::from_partner(n, std::move(out))};
}

Diagram involution(const Diagram& d) {
  const int n = d.n();
  std::vector<int> p(static_cast<std::size_t>(2 * n));
  auto flip = [n](int s) { return s < n ? s + n : s - n; };
  for (int s = 0; s < 2 * n; ++s) p[static_cast<std::size_t>(flip(s))] = flip(d.partner(s));
  return Diagram::from_partner(n, std::move(p));
}

int close_full(const Diagram& d) {
  const int n = d.n();
  std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
  int loops = 0;
  for (int s = 0; s < 2 * n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++loops;
    int cur = s;
    do {
      seen[static_cast<std::size_t>(cur)] = 1;
      const int p = d.partner(cur);
      seen[static_cast<std::size_t>(p)] = 1;
      cur = p < n ? p + n : p - n;
    } while (cur != s);
  }
  return loops;
}

ClosedLast close_last(const Diagram& d) {
  const int n = d.n();
  if (n < 2) throw Error("close_last needs n >= 2");
  const int top = n - 1, bot = 2 * n - 1;
  auto reindex = [n](int s) { return s < n ? s : s - 1; };  // drops Top n and Bottom n
  std::vector<int> p(static_cast<std::size_t>(2 * (n - 1)), -1);
  int loops = 0;
  for (int s = 0; s < 2 * n; ++s) {
    if (s == top || s == bot) continue;
    int q = d.partner(s);
    if (q == top) q = d.partner(bot);
    else if (q == bot) q = d.partner(top);
    p[static_cast<std::size_t>(reindex(s))] = reindex(q);
  }
  if (d.partner(top) == bot) loops = 1;
  return {loops, Diagram::from_partner(n - 1, std::move(p))};
}

Diagram embed(const Diagram& d) {
  const int n = d.n();
  auto up = [n](int s) { return s < n ? s : s + 1; };
  std::vector<int> p(static_cast<std::size_t>(2 * (n + 1)));
  for (int s = 0; s < 2 * n; ++s) p[static_cast<std::size_t>(up(s))] = up(d.partner(s));
  p[static_cast<std::size_t>(n)] = 2 * n + 1;
  p[static_cast<std::size_t>(2 * n + 1)] = n;
  return Diagram::from_partner(n + 1, std::move(p));
}

int enumeration_bound() {
  if (const char* env = std::getenv("TL_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return 12;
}

namespace {

// All balanced words of length 2n as bitmasks, 1 = opening. Bit k is position k.
std::vector<std::uint64_t> dyck_masks(int n) {
  std::vector<std::uint64_t> out;
  std::function<void(int, int, int, std::uint64_t)> rec = [&](int pos, int open, int depth, std::uint64_t mask) {
    if (pos == 2 * n) {
      out.push_back(mask);
      return;
    }
    if (open < n) rec(pos + 1, open + 1, depth + 1, mask | (std::uint64_t{1} << pos));
    if (depth > 0) rec(pos + 1, open, depth - 1, mask);
  };
  rec(0, 0, 0, 0);
  return out;
}

Diagram diagram_from_mask(int n, std::uint64_t mask) {
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  std::vector<int> stack;
  for (int pos = 0; pos < 2 * n; ++pos) {
    if (mask >> pos & 1u) {
      stack.push_back(pos);
    } else {
      const int a = slot_of_pos(n, stack.back()), b = slot_of_pos(n, pos);
      stack.pop_back();
      partner[static_cast<std::size_t>(a)] = b;
      partner[static_cast<std::size_t>(b)] = a;
    }
  }
  return Diagram::from_partner(n, std::move(partner));
}

void check_bound(int n) {
  if (n < 1) throw Error("diagram size must be positive");
  if (n > enumeration_bound())
    throw Error("n=" + std::to_string(n) + " exceeds enumeration bound " + std::to_string(enumeration_bound()) +
                " (set TL_MAX_N to raise it)");
}

}  // namespace

namespace kernels {

std::vector<Diagram> enumerate_diagrams_serial(int n) {
  check_bound(n);
  std::vector<Diagram> out;
  for (auto m : dyck_masks(n)) out.push_back(diagram_from_mask(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagram> enumerate_diagrams_parallel(int n) {
  check_bound(n);
  const auto masks = dyck_masks(n);
  std::vector<Diagram> out(masks.size());
  const long count = static_cast<long>(masks.size());
#pragma omp parallel for schedule(static) if (count > 256)
  for (long k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = diagram_from_mask(n, masks[static_cast<std::size_t>(k)]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kernels

std::vector<Diagram> enumerate_diagrams(int n) { return kernels::enumerate_diagrams_parallel(n); }

std::vector<HalfDiagram> enumerate_half(int n, int p) {
  if (n < 1) throw Error("half-diagram size must be positive");
  if (p < 0 || 2 * p > n) throw Error("need 0 <= 2p <= n");
  std::vector<HalfDiagram> out;
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  std::vector<int> open;  // unmatched points that may still close
  std::function<void(int, int, int)> rec = [&](int k, int ups, int rights) {
    if (k == n) {
      if (ups == p) out.push_back(HalfDiagram::from_partner(n, partner));
      return;
    }
    // Right: point k opens a link or is a defect. Deciding which is deferred:
    // the nearest open point is closed by each Up.
    if (rights < n - p) {
      open.push_back(k);
      rec(k + 1, ups, rights + 1);
      open.pop_back();
    }
    if (ups < p && !open.empty()) {
      const int a = open.back();
      open.pop_back();
      partner[static_cast<std::size_t>(a)] = k;
      partner[static_cast<std::size_t>(k)] = a;
      rec(k + 1, ups + 1, rights);
      partner[static_cast<std::size_t>(a)] = -1;
      partner[static_cast<std::size_t>(k)] = -1;
      open.push_back(a);
    }
  };
  rec(0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Diagram cell_glue(const HalfDiagram& s, const HalfDiagram& t) {
  const int n = s.n();
  if (t.n() != n) throw Error("size mismatch in cell_glue");
  const auto ds = s.defects(), dt = t.defects();
  if (ds.size() != dt.size()) throw Error("defect mismatch: " + std::to_string(ds.size()) + " vs " + std::to_string(dt.size()));
  std::vector<int> p(static_cast<std::size_t>(2 * n), -1);
  for (int k = 0; k < n; ++k) {
    if (s.partner(k) >= 0) p[static_cast<std::size_t>(k)] = s.partner(k);
    if (t.partner(k) >= 0) p[static_cast<std::size_t>(n + k)] = n + t.partner(k);
  }
  for (std::size_t k = 0; k < ds.size(); ++k) {
    p[static_cast<std::size_t>(ds[k] - 1)] = n + dt[k] - 1;
    p[static_cast<std::size_t>(n + dt[k] - 1)] = ds[k] - 1;
  }
  return Diagram::from_partner(n, std::move(p));
}

Decomposition decompose(const Diagram& d) {
  const int n = d.n();
  std::vector<int> s(static_cast<std::size_t>(n), -1), t(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < n; ++k) {
    const int q = d.partner(k);
    if (q < n) s[static_cast<std::size_t>(k)] = q;
    const int r = d.partner(n + k);
    if (r >= n) t[static_cast<std::size_t>(k)] = r - n;
  }
  return {d.through_count(), HalfDiagram::from_partner(n, std::move(s)), HalfDiagram::from_partner(n, std::move(t))};
}

HalfAction act_on_half(const Diagram& d, const HalfDiagram& h) {
  const int n = d.n();
  if (h.n() != n) throw Error("size mismatch in act_on_half");
  std::vector<int> out(static_cast<std::size_t>(n), -2);  // -2 = unresolved
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    if (out[static_cast<std::size_t>(k)] != -2) continue;
    int q = d.partner(k);
    int end = -1;  // -1: reaches a defect of h
    while (true) {
      if (q < n) {
        end = q;
        break;
      }
      const int j = q - n;
      seen[static_cast<std::size_t>(j)] = 1;
      const int j2 = h.partner(j);
      if (j2 == -1) break;
      seen[static_cast<std::size_t>(j2)] = 1;
      q = d.partner(n + j2);
    }
    out[static_cast<std::size_t>(k)] = end;
    if (end >= 0) out[static_cast<std::size_t>(end)] = k;
  }
  // Strands joining two defects of h vanish; what remains unseen forms loops.
  for (int j = 0; j < n; ++j) {
    if (seen[static_cast<std::size_t>(j)] || h.partner(j) != -1) continue;
    int cur = j;
    while (true) {
      seen[static_cast<std::size_t>(cur)] = 1;
      const int j2 = d.partner(n + cur) - n;
      seen[static_cast<std::size_t>(j2)] = 1;
      const int j3 = h.partner(j2);
      if (j3 == -1) break;
      cur = j3;
    }
  }
  int loops = 0;
  for (int j = 0; j < n; ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    ++loops;
    int cur = j;
    do {
      seen[static_cast<std::size_t>(cur)] = 1;
      const int j2 = d.partner(n + cur) - n;
      seen[static_cast<std::size_t>(j2)] = 1;
      cur = h.partner(j2);
    } while (cur != j);
  }
  return {loops, HalfDiagram::from_partner(n, std::move(out))};
}

int bilinear_loops(const HalfDiagram& h, const HalfDiagram& h2) {
  const int n = h.n();
  if (h2.n() != n) throw Error("size mismatch in bilinear form");
  if (h.link_count() != h2.link_count()) throw Error("link count mismatch in bilinear form");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  bool preserving = true;
  for (int d : h.defects()) {
    int j = d - 1;  // arrived through a defect ray of h; continue in h2
    while (true) {
      seen[static_cast<std::size_t>(j)] = 1;
      const int a = h2.partner(j);
      if (a == -1) break;
      seen[static_cast<std::size_t>(a)] = 1;
      const int b = h.partner(a);
      if (b == -1) {
        preserving = false;
        break;
      }
      j = b;
    }
  }
  if (!preserving) return -1;
  int loops = 0;
  for (int j = 0; j < n; ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    ++loops;
    int cur = j;
    do {
      seen[static_cast<std::size_t>(cur)] = 1;
      const int a = h2.partner(cur);
      seen[static_cast<std::size_t>(a)] = 1;
      cur = h.partner(a);
    } while (cur != j);
  }
  return loops;
}

}  // namespace tl
