#include "tl/combinat.hpp"

#include <algorithm>
#include <map>

namespace tl {

mpz_class cat(int n, int p) {
  if (n < 0 || p < 0) throw Error("cat needs n, p >= 0");
  if (2 * p > n) return 0;
  mpz_class a, b = 0;
  mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(p));
  if (p >= 1) mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(p - 1));
  return a - b;
}

LatticeWalk LatticeWalk::make(std::string steps) {
  int height = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    char c = steps[k];
    if (c == 'R') {
      ++height;
    } else if (c == 'U') {
      if (--height < 0) throw Error("walk crosses the diagonal at step " + std::to_string(k + 1));
    } else {
      throw Error(std::string("bad walk step '") + c + "'");
    }
  }
  return LatticeWalk{std::move(steps)};
}

int LatticeWalk::p() const {
  int ups = 0;
  for (char c : steps) ups += c == 'U';
  return ups;
}

TwoRowTableau TwoRowTableau::make(std::vector<int> row1, std::vector<int> row2) {
  const std::size_t n = row1.size() + row2.size();
  if (row2.size() > row1.size()) throw Error("tableau rows must be weakly decreasing in length");
  std::vector<bool> seen(n + 1, false);
  for (const auto* row : {&row1, &row2})
    for (std::size_t c = 0; c < row->size(); ++c) {
      int v = (*row)[c];
      if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
        throw Error("tableau entries must be 1.." + std::to_string(n) + " without repeats");
      seen[static_cast<std::size_t>(v)] = true;
      if (c > 0 && (*row)[c - 1] >= v) throw Error("tableau rows must increase");
    }
  for (std::size_t c = 0; c < row2.size(); ++c)
    if (row2[c] <= row1[c]) throw Error("tableau column " + std::to_string(c + 1) + " does not increase");
  return TwoRowTableau{std::move(row1), std::move(row2)};
}

std::string TwoRowTableau::to_string() const {
  std::string s;
  auto emit = [&](const std::vector<int>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
  };
  emit(row1);
  s += "/";
  emit(row2);
  return s;
}

OneFactor OneFactor::make(std::vector<int> signs) {
  int sum = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw Error("1-factor entries must be +1 or -1");
    sum += signs[i];
    if (sum < 0) throw Error("1-factor partial sum negative at " + std::to_string(i + 1));
  }
  return OneFactor{std::move(signs)};
}

std::vector<std::pair<int, int>> OneFactor::pairings() const {
  std::vector<std::pair<int, int>> out;
  std::vector<int> stack;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == 1) {
      stack.push_back(static_cast<int>(i) + 1);
    } else {
      out.emplace_back(stack.back(), static_cast<int>(i) + 1);
      stack.pop_back();
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string OneFactor::to_string() const {
  std::string s;
  for (int f : signs) s += f == 1 ? '+' : '-';
  return s;
}

BratteliPath BratteliPath::make(std::string edges) {
  int l1 = 0, l2 = 0;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    char c = edges[k];
    if (c == 'V') {
      ++l1;
    } else if (c == 'D') {
      if (l1 <= l2) throw Error("diagonal edge from a partition with equal parts at step " + std::to_string(k + 1));
      ++l2;
    } else {
      throw Error(std::string("bad Bratteli edge '") + c + "'");
    }
  }
  return BratteliPath{std::move(edges)};
}

std::pair<int, int> BratteliPath::end() const {
  int l2 = 0;
  for (char c : edges) l2 += c == 'D';
  return {static_cast<int>(edges.size()) - l2, l2};
}

const char* rep_name(Rep r) {
  switch (r) {
    case Rep::Half: return "half";
    case Rep::Walk: return "walk";
    case Rep::Bratteli: return "bratteli";
    case Rep::Tableau: return "tableau";
    case Rep::OneFactor: return "onefactor";
  }
  return "?";
}

Rep rep_from_name(const std::string& s) {
  for (Rep r : {Rep::Half, Rep::Walk, Rep::Bratteli, Rep::Tableau, Rep::OneFactor})
    if (s == rep_name(r)) return r;
  throw Error("unknown representation: " + s);
}

Rep rep_of(const CombObject& x) { return static_cast<Rep>(x.index()); }

LatticeWalk to_walk(const CombObject& x) {
  std::string s;
  switch (rep_of(x)) {
    case Rep::Walk:
      return std::get<LatticeWalk>(x);
    case Rep::Half: {
      const auto& h = std::get<HalfDiagram>(x);
      for (int k = 0; k < h.n(); ++k) s += (h.partner(k) >= 0 && h.partner(k) < k) ? 'U' : 'R';
      break;
    }
    case Rep::Bratteli:
      for (char c : std::get<BratteliPath>(x).edges) s += c == 'V' ? 'R' : 'U';
      break;
    case Rep::Tableau: {
      const auto& t = std::get<TwoRowTableau>(x);
      s.assign(static_cast<std::size_t>(t.n()), 'R');
      for (int v : t.row2) s[static_cast<std::size_t>(v - 1)] = 'U';
      break;
    }
    case Rep::OneFactor:
      for (int f : std::get<OneFactor>(x).signs) s += f == 1 ? 'R' : 'U';
      break;
  }
  return LatticeWalk::make(s);
}

CombObject from_walk(const LatticeWalk& w, Rep target) {
  const int n = w.n();
  switch (target) {
    case Rep::Walk:
      return w;
    case Rep::Half: {
      // Each U closes a link with the most recent unmatched R; leftover R's are defects.
      std::vector<int> partner(static_cast<std::size_t>(n), -1), open;
      for (int k = 0; k < n; ++k) {
        if (w.steps[static_cast<std::size_t>(k)] == 'R') {
          open.push_back(k);
        } else {
          partner[static_cast<std::size_t>(k)] = open.back();
          partner[static_cast<std::size_t>(open.back())] = k;
          open.pop_back();
        }
      }
      return HalfDiagram::from_partner(n, partner);
    }
    case Rep::Bratteli: {
      std::string e;
      for (char c : w.steps) e += c == 'R' ? 'V' : 'D';
      return BratteliPath{e};
    }
    case Rep::Tableau: {
      TwoRowTableau t;
      for (int k = 0; k < n; ++k) (w.steps[static_cast<std::size_t>(k)] == 'R' ? t.row1 : t.row2).push_back(k + 1);
      return t;
    }
    case Rep::OneFactor: {
      OneFactor f;
      for (char c : w.steps) f.signs.push_back(c == 'R' ? 1 : -1);
      return f;
    }
  }
  throw Error("unknown representation");
}

CombObject convert(const CombObject& x, Rep target) { return from_walk(to_walk(x), target); }

std::vector<LatticeWalk> enumerate_walks(int n, int p) {
  std::vector<LatticeWalk> out;
  if (n < 0 || p < 0 || 2 * p > n) return out;
  std::string cur;
  auto rec = [&](auto& self, int r, int u) -> void {
    if (r + u == n) {
      out.push_back(LatticeWalk{cur});
      return;
    }
    if (r < n - p) {
      cur.push_back('R');
      self(self, r + 1, u);
      cur.pop_back();
    }
    if (u < p && u < r) {
      cur.push_back('U');
      self(self, r, u + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

mpz_class count_paths_to(int lambda1, int lambda2) {
  if (lambda2 < 0 || lambda1 < lambda2) throw Error("not a two-part partition");
  // Level-by-level path counts, keyed by the second part.
  std::map<int, mpz_class> level{{0, 1}};
  for (int m = 1; m <= lambda1 + lambda2; ++m) {
    std::map<int, mpz_class> next;
    for (const auto& [l2, c] : level) {
      int l1 = m - 1 - l2;
      next[l2] += c;
      if (l1 > l2) next[l2 + 1] += c;
    }
    level = std::move(next);
  }
  auto it = level.find(lambda2);
  return it == level.end() ? mpz_class(0) : it->second;
}

}  // namespace tl
