#include "tl/schurweyl.hpp"

#include <omp.h>

#include <algorithm>

#include "tl/combinat.hpp"
#include "tl/diagram.hpp"
#include "tl/linalg.hpp"
#include "tl/repr.hpp"
#include "tl/word.hpp"

namespace tl {

namespace {

constexpr int kMaxSites = 14;

LaurentPoly vpow(int k, long c = 1) { return LaurentPoly::monomial(Var::V, k, c); }
LaurentPoly vzero() { return LaurentPoly::zero(Var::V); }
LaurentPoly delta_v() { return LaurentPoly::from_terms(Var::V, {{-1, 1}, {1, 1}}); }

void check_sites(int n) {
  if (n < 1 || n > kMaxSites) throw Error("tensor power must be in 1.." + std::to_string(kMaxSites));
}

int ones(BasisIndex b) { return __builtin_popcount(b); }

}  // namespace

std::string bitstring(BasisIndex b, int n) {
  std::string s;
  for (int j = 1; j <= n; ++j) s += static_cast<char>('0' + site_bit(b, n, j));
  return s;
}

BasisIndex parse_bitstring(const std::string& s) {
  if (s.empty() || static_cast<int>(s.size()) > kMaxSites) throw Error("bad bitstring length: " + s);
  BasisIndex b = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw Error("bad bitstring: " + s);
    b = (b << 1) | static_cast<BasisIndex>(c - '0');
  }
  return b;
}

TensorOperator::TensorOperator(int n) : n_(n) {
  check_sites(n);
  cols_.resize(std::size_t{1} << n);
}

TensorOperator TensorOperator::identity(int n) {
  TensorOperator t(n);
  for (BasisIndex c = 0; c < t.dim(); ++c) t.add_entry(c, c, 1);
  return t;
}

LaurentPoly TensorOperator::entry(BasisIndex r, BasisIndex c) const {
  const auto& col = cols_.at(c);
  auto it = col.find(r);
  return it == col.end() ? vzero() : it->second;
}

void TensorOperator::add_entry(BasisIndex r, BasisIndex c, const LaurentPoly& x) {
  if (x.is_zero()) return;
  if (x.var() != Var::None && x.var() != Var::V) throw Error("variable mismatch: tensor operators live over v");
  auto& col = cols_.at(c);
  auto [it, inserted] = col.try_emplace(r, x);
  if (!inserted) {
    it->second += x;
    if (it->second.is_zero()) col.erase(it);
  }
}

bool TensorOperator::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
}

std::size_t TensorOperator::nonzeros() const {
  std::size_t k = 0;
  for (const auto& c : cols_) k += c.size();
  return k;
}

void TensorOperator::check_size(const TensorOperator& o) const {
  if (n_ != o.n_) throw Error("size mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_) + " sites");
}

TensorOperator& TensorOperator::operator+=(const TensorOperator& o) {
  check_size(o);
  for (BasisIndex c = 0; c < dim(); ++c)
    for (const auto& [r, x] : o.cols_[c]) add_entry(r, c, x);
  return *this;
}

TensorOperator& TensorOperator::operator-=(const TensorOperator& o) {
  check_size(o);
  for (BasisIndex c = 0; c < dim(); ++c)
    for (const auto& [r, x] : o.cols_[c]) add_entry(r, c, -x);
  return *this;
}

TensorOperator TensorOperator::scaled(const LaurentPoly& k) const {
  TensorOperator t(n_);
  for (BasisIndex c = 0; c < dim(); ++c)
    for (const auto& [r, x] : cols_[c]) t.add_entry(r, c, x * k);
  return t;
}

std::map<BasisIndex, LaurentPoly> TensorOperator::apply(const std::map<BasisIndex, LaurentPoly>& x) const {
  std::map<BasisIndex, LaurentPoly> out;
  for (const auto& [k, xk] : x)
    for (const auto& [r, a] : cols_.at(k)) {
      auto [it, inserted] = out.try_emplace(r, a * xk);
      if (!inserted) it->second += a * xk;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
  a.check_size(b);
  TensorOperator t(a.n());
  // Column c of ab is a applied to column c of b.
  for (BasisIndex c = 0; c < b.dim(); ++c) t.cols_[c] = a.apply(b.cols_[c]);
  return t;
}

bool TensorOperator::operator==(const TensorOperator& o) const {
  if (n_ != o.n_) return false;
  for (BasisIndex c = 0; c < dim(); ++c) {
    if (cols_[c].size() != o.cols_[c].size()) return false;
    auto it = o.cols_[c].begin();
    for (const auto& [r, x] : cols_[c]) {
      if (r != it->first || x != it->second) return false;
      ++it;
    }
  }
  return true;
}

const char* ugen_name(UGen g) {
  switch (g) {
    case UGen::E: return "E";
    case UGen::F: return "F";
    case UGen::K: return "K";
    case UGen::Kinv: return "Kinv";
  }
  return "?";
}

TwoSiteBlock TwoSiteBlock::standard() { return {vpow(-1), vpow(0, -1), vpow(0, -1), vpow(1)}; }

TensorOperator e_op_with(int n, int i, const TwoSiteBlock& blk) {
  check_sites(n);
  if (i < 1 || i >= n) throw Error("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(n - 1));
  TensorOperator t(n);
  const BasisIndex hi = BasisIndex{1} << (n - i), lo = BasisIndex{1} << (n - i - 1);
  for (BasisIndex c = 0; c < t.dim(); ++c) {
    const bool bi = c & hi, bj = c & lo;
    if (bi == bj) continue;
    const BasisIndex x01 = (c & ~hi) | lo, x10 = (c & ~lo) | hi;
    if (!bi) {  // column x_01
      t.add_entry(x01, c, blk.a);
      t.add_entry(x10, c, blk.c);
    } else {  // column x_10
      t.add_entry(x01, c, blk.b);
      t.add_entry(x10, c, blk.d);
    }
  }
  return t;
}

TensorOperator e_op(int n, int i) { return e_op_with(n, i, TwoSiteBlock::standard()); }

SiteAction SiteAction::standard() {
  SiteAction s;
  s.e[0] = {0, vzero()};
  s.e[1] = {0, 1};
  s.f[0] = {1, 1};
  s.f[1] = {1, vzero()};
  return s;
}

SiteAction SiteAction::swapped() {
  SiteAction s = standard();
  std::swap(s.e, s.f);
  return s;
}

TensorOperator u_gen_op(int n, UGen g, const SiteAction& site) {
  check_sites(n);
  TensorOperator t(n);
  auto kfactor = [&](BasisIndex b, int from, int to, int sign) {
    int w = 0;  // sum of site weights over sites from..to
    for (int j = from; j <= to; ++j) w += site_bit(b, n, j) ? -1 : 1;
    return vpow(sign * w);
  };
  for (BasisIndex c = 0; c < t.dim(); ++c) {
    if (g == UGen::K || g == UGen::Kinv) {
      t.add_entry(c, c, kfactor(c, 1, n, g == UGen::K ? 1 : -1));
      continue;
    }
    // E acts as K^(j-1) (x) E (x) 1; F as 1 (x) F (x) K^-(n-j).
    for (int j = 1; j <= n; ++j) {
      const int bit = site_bit(c, n, j);
      const auto& [to, coeff] = g == UGen::E ? site.e[bit] : site.f[bit];
      if (coeff.is_zero()) continue;
      const BasisIndex mask = BasisIndex{1} << (n - j);
      const BasisIndex r = to ? (c | mask) : (c & ~mask);
      LaurentPoly k = g == UGen::E ? kfactor(c, 1, j - 1, 1) : kfactor(c, j + 1, n, -1);
      t.add_entry(r, c, coeff * k);
    }
  }
  return t;
}

bool verify_uu_relations(int n, const SiteAction& site) {
  TensorOperator e = u_gen_op(n, UGen::E, site), f = u_gen_op(n, UGen::F, site);
  TensorOperator k = u_gen_op(n, UGen::K, site), ki = u_gen_op(n, UGen::Kinv, site);
  TensorOperator id = TensorOperator::identity(n);
  if (k * ki != id || ki * k != id) return false;
  if (k * e * ki != e.scaled(vpow(2))) return false;
  if (k * f * ki != f.scaled(vpow(-2))) return false;
  return (e * f - f * e).scaled(vpow(1) - vpow(-1)) == k - ki;
}

namespace kernels {

namespace {
bool commutator_vanishes(int n, int i, UGen g, const TwoSiteBlock& block) {
  TensorOperator e = e_op_with(n, i, block), u = u_gen_op(n, g);
  return e * u == u * e;
}
}  // namespace

bool commutators_serial(int n, const TwoSiteBlock& block) {
  for (int i = 1; i < n; ++i)
    for (UGen g : {UGen::E, UGen::F, UGen::K})
      if (!commutator_vanishes(n, i, g, block)) return false;
  return true;
}

bool commutators_parallel(int n, const TwoSiteBlock& block) {
  const UGen gens[] = {UGen::E, UGen::F, UGen::K};
  const long jobs = 3L * (n - 1);
  std::vector<char> ok(static_cast<std::size_t>(std::max(jobs, 0L)), 0);
  detail::OmpErrorSlot err;
#pragma omp parallel for schedule(dynamic)
  for (long job = 0; job < jobs; ++job)
    err.run([&] {
      ok[static_cast<std::size_t>(job)] =
          commutator_vanishes(n, static_cast<int>(job / 3) + 1, gens[job % 3], block) ? 1 : 0;
    });
  err.rethrow();
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

}  // namespace kernels

bool verify_commutation(int n, const TwoSiteBlock& block) {
  if (n < 2) throw Error("verify_commutation needs n >= 2");
  return kernels::commutators_parallel(n, block);
}

bool verify_tl_action(int n) {
  std::vector<TensorOperator> e;
  for (int i = 1; i < n; ++i) e.push_back(e_op(n, i));
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] * e[i] != e[i].scaled(delta_v())) return false;
    for (std::size_t j = 0; j < e.size(); ++j) {
      std::size_t gap = i > j ? i - j : j - i;
      if (gap == 1 && e[i] * e[j] * e[i] != e[i]) return false;
      if (gap >= 2 && e[i] * e[j] != e[j] * e[i]) return false;
    }
  }
  return true;
}

WeightSpace weight_space(int n, int weight) {
  check_sites(n);
  WeightSpace w{weight, {}};
  for (BasisIndex b = 0; b < (BasisIndex{1} << n); ++b)
    if (n - 2 * ones(b) == weight) w.basis.push_back(b);
  return w;
}

bool weight_shift_check(int n) {
  for (auto [g, shift] : {std::pair{UGen::E, 2}, std::pair{UGen::F, -2}}) {
    TensorOperator t = u_gen_op(n, g);
    for (BasisIndex c = 0; c < t.dim(); ++c)
      for (const auto& [r, x] : t.column(c))
        if ((n - 2 * ones(r)) - (n - 2 * ones(c)) != shift) return false;
  }
  return true;
}

namespace {

// Divides out the gcd of the entries and fixes the unit on the first nonzero entry.
void make_primitive(std::vector<LaurentPoly>& x) {
  LaurentPoly g = LaurentPoly::zero(Var::V);
  for (const auto& e : x)
    if (!e.is_zero()) g = gcd(g, e.retag(Var::V));
  if (g.is_zero()) return;
  for (auto& e : x)
    if (!e.is_zero()) e = exact_div(e.retag(Var::V), g);
  for (const auto& e : x) {
    if (e.is_zero()) continue;
    LaurentPoly unit = vpow(-e.min_exp(), e.terms().back().coeff > 0 ? 1 : -1);
    for (auto& y : x) y *= unit;
    break;
  }
}

}  // namespace

MaxVectors maximal_vectors(int n, int lambda) {
  if (n < 1 || lambda < 0 || lambda > n || (n - lambda) % 2)
    throw Error("lambda " + std::to_string(lambda) + " is not in Lambda(" + std::to_string(n) + ")");
  MaxVectors out{n, lambda, weight_space(n, lambda), {}, {}};
  WeightSpace up = weight_space(n, lambda + 2);
  TensorOperator e = u_gen_op(n, UGen::E);
  Matrix<LaurentPoly> a(up.basis.size(), std::vector<LaurentPoly>(out.space.basis.size(), vzero()));
  for (std::size_t c = 0; c < out.space.basis.size(); ++c)
    for (const auto& [r, x] : e.column(out.space.basis[c])) {
      auto it = std::lower_bound(up.basis.begin(), up.basis.end(), r);
      a[static_cast<std::size_t>(it - up.basis.begin())][c] = x;
    }
  auto kernel = kernel_basis(a, out.space.basis.size(), LaurentPoly(1));
  // Non-pivot columns, in the order kernel_basis emits its vectors.
  if (!a.empty()) {
    auto gj = fraction_free_gauss_jordan(a);
    std::vector<bool> pivot(out.space.basis.size(), false);
    for (auto c : gj.pivots) pivot[c] = true;
    for (std::size_t f = 0; f < pivot.size(); ++f)
      if (!pivot[f]) out.free_coords.push_back(f);
  } else {
    for (std::size_t f = 0; f < out.space.basis.size(); ++f) out.free_coords.push_back(f);
  }
  for (auto& k : kernel) {
    make_primitive(k);
    out.vectors.push_back(std::move(k));
  }
  return out;
}

namespace {

// Residue arithmetic for the operator-span rank.
constexpr std::uint64_t kSpanPrime = 2147483647ULL;

std::vector<std::vector<ModP>> span_rows_mod_p(int n, const std::vector<Diagram>& diagrams, const ModP& v) {
  // The TL action is faithful on the weight space of smallest |weight|, which
  // carries every H(k) once. Each diagram contributes its flattened restriction.
  WeightSpace w = weight_space(n, n % 2);
  const std::size_t d = w.basis.size();
  const ModP vinv = v.inverse();
  std::vector<std::vector<ModP>> rows(diagrams.size());
  const long count = static_cast<long>(diagrams.size());
  detail::OmpErrorSlot err;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k)
    err.run([&] {
      Word word = kauffman_word(diagrams[static_cast<std::size_t>(k)]);
      std::vector<ModP> row(d * d, ModP(0, kSpanPrime));
      for (std::size_t c = 0; c < d; ++c) {
        std::map<BasisIndex, ModP> x{{w.basis[c], ModP(1, kSpanPrime)}};
        // Rightmost letter acts first.
        for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
          const BasisIndex hi = BasisIndex{1} << (n - *it), lo = BasisIndex{1} << (n - *it - 1);
          std::map<BasisIndex, ModP> y;
          for (const auto& [b, xb] : x) {
            const bool bi = b & hi, bj = b & lo;
            if (bi == bj) continue;
            const BasisIndex x01 = (b & ~hi) | lo, x10 = (b & ~lo) | hi;
            const ModP minus_one(-1, kSpanPrime);
            if (!bi) {
              y[x01] = y[x01] + vinv * xb;
              y[x10] = y[x10] + minus_one * xb;
            } else {
              y[x01] = y[x01] + minus_one * xb;
              y[x10] = y[x10] + v * xb;
            }
          }
          x = std::move(y);
        }
        for (const auto& [b, xb] : x) {
          std::size_t r = static_cast<std::size_t>(std::lower_bound(w.basis.begin(), w.basis.end(), b) - w.basis.begin());
          row[r * d + c] = xb;
        }
      }
      rows[static_cast<std::size_t>(k)] = std::move(row);
    });
  err.rethrow();
  return rows;
}

}  // namespace

DimensionAudit dimension_audit(int n, int bound, int span_bound) {
  if (n < 1) throw Error("dimension_audit needs n >= 1");
  if (n > bound) throw Error("n = " + std::to_string(n) + " exceeds the audit bound " + std::to_string(bound));
  DimensionAudit a;
  a.n = n;
  mpz_ui_pow_ui(a.tensor_dim.get_mpz_t(), 2, static_cast<unsigned long>(n));
  a.catalan = cat(2 * n, n);
  for (int k : lambda_set(n)) {
    mpz_class m = cat(n, (n - k) / 2);
    a.weighted_sum += (k + 1) * m;
    a.square_sum += m * m;
  }
  if (n > span_bound) {
    a.span_method = "skipped";
    return a;
  }
  std::vector<Diagram> diagrams = enumerate_diagrams(n);
  auto rows = span_rows_mod_p(n, diagrams, ModP(3, kSpanPrime));
  std::vector<std::vector<std::uint64_t>> residues(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (const ModP& x : rows[k]) residues[k].push_back(x.value);
  std::size_t rank = rank_mod_p(std::move(residues), kSpanPrime, true);
  a.span_method = "mod-p";
  if (rank != diagrams.size()) {
    // Residue rank only bounds the generic rank from below; redo it exactly.
    Matrix<LaurentPoly> generic;
    for (const Diagram& d : diagrams) {
      Word word = kauffman_word(d);
      TensorOperator t = TensorOperator::identity(n);
      for (int i : word.letters) t = t * e_op(n, i);
      std::vector<LaurentPoly> row;
      for (BasisIndex c = 0; c < t.dim(); ++c)
        for (BasisIndex r = 0; r < t.dim(); ++r) row.push_back(t.entry(r, c));
      generic.push_back(std::move(row));
    }
    rank = bareiss_rank(generic, true);
    a.span_method = "generic";
  }
  a.span_rank = static_cast<long>(rank);
  return a;
}

MaxModuleReport max_module_check(int n, int lambda) {
  MaxModuleReport rep;
  MaxVectors mv = maximal_vectors(n, lambda);
  const std::size_t m = mv.vectors.size();
  CellModule cell(n, lambda);
  if (m != cell.dim()) return rep;
  const auto& basis = mv.space.basis;
  auto to_sparse = [&](const std::vector<LaurentPoly>& x) {
    std::map<BasisIndex, LaurentPoly> s;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!x[k].is_zero()) s.emplace(basis[k], x[k]);
    return s;
  };
  auto coord = [&](const std::map<BasisIndex, LaurentPoly>& s, std::size_t k) {
    auto it = s.find(basis[k]);
    return it == s.end() ? vzero() : it->second;
  };
  // pivot value of vectors[j] at its own free coordinate
  std::vector<LaurentPoly> lead(m);
  for (std::size_t j = 0; j < m; ++j) lead[j] = mv.vectors[j][mv.free_coords[j]];
  LaurentPoly all_leads = 1;
  for (const auto& l : lead) all_leads *= l;

  rep.preserved = rep.traces = true;
  std::vector<Matrix<RationalFunction>> mats;
  for (int i = 1; i < n; ++i) {
    TensorOperator e = e_op(n, i);
    Matrix<RationalFunction> c(m, std::vector<RationalFunction>(m));
    RationalFunction trace;
    for (std::size_t j = 0; j < m; ++j) {
      auto img = e.apply(to_sparse(mv.vectors[j]));
      // Coefficient on vectors[l] is img[f_l] / lead[l]; check the expansion exactly.
      std::map<BasisIndex, LaurentPoly> rebuilt;
      for (std::size_t l = 0; l < m; ++l) {
        LaurentPoly num = coord(img, mv.free_coords[l]);
        c[l][j] = RationalFunction(num, lead[l]);
        if (num.is_zero()) continue;
        LaurentPoly scale = num * exact_div(all_leads, lead[l]);
        for (const auto& [b, x] : to_sparse(mv.vectors[l])) {
          auto [it, inserted] = rebuilt.try_emplace(b, x * scale);
          if (!inserted) it->second += x * scale;
        }
      }
      for (auto it = rebuilt.begin(); it != rebuilt.end();) it = it->second.is_zero() ? rebuilt.erase(it) : std::next(it);
      std::map<BasisIndex, LaurentPoly> target;
      for (const auto& [b, x] : img) target.emplace(b, x * all_leads);
      if (rebuilt != target) rep.preserved = false;
      trace += c[j][j];
    }
    LaurentPoly cell_trace = LaurentPoly::zero(Var::Delta);
    Matrix<LaurentPoly> r = rep_matrix(i, cell);
    for (std::size_t k = 0; k < r.size(); ++k) cell_trace += r[k][k];
    if (trace != RationalFunction(delta_to_v(cell_trace).retag(Var::V))) rep.traces = false;
    mats.push_back(std::move(c));
  }

  auto mul = [](const Matrix<RationalFunction>& a, const Matrix<RationalFunction>& b) {
    const std::size_t k = a.size();
    Matrix<RationalFunction> out(k, std::vector<RationalFunction>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) {
        if (a[i][l].is_zero()) continue;
        for (std::size_t j = 0; j < k; ++j) out[i][j] += a[i][l] * b[l][j];
      }
    return out;
  };
  const RationalFunction delta(delta_v());
  rep.relations = true;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    Matrix<RationalFunction> scaled = mats[i];
    for (auto& row : scaled)
      for (auto& x : row) x *= delta;
    if (mul(mats[i], mats[i]) != scaled) rep.relations = false;
    for (std::size_t j = 0; j < mats.size(); ++j) {
      std::size_t gap = i > j ? i - j : j - i;
      if (gap == 1 && mul(mul(mats[i], mats[j]), mats[i]) != mats[i]) rep.relations = false;
      if (gap >= 2 && mul(mats[i], mats[j]) != mul(mats[j], mats[i])) rep.relations = false;
    }
  }
  return rep;
}

}  // namespace tl
