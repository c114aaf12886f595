#include "tl/repr.hpp"

#include <omp.h>

namespace tl {

std::vector<int> lambda_set(int n) {
  if (n < 1) throw Error("lambda_set needs n >= 1");
  std::vector<int> out;
  for (int l = n; l >= 0; l -= 2) out.push_back(l);
  return out;
}

namespace {

void check_lambda(int n, int lambda) {
  if (n < 1 || lambda < 0 || lambda > n || (n - lambda) % 2 != 0)
    throw Error("lambda " + std::to_string(lambda) + " is not in Lambda(" + std::to_string(n) + ")");
}

LaurentPoly delta_pow(int k) { return LaurentPoly::monomial(Var::Delta, k); }

}  // namespace

CellModule::CellModule(int n, int lambda) : n_(n), lambda_(lambda) {
  check_lambda(n, lambda);
  basis_ = enumerate_half(n, (n - lambda) / 2);
  for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
}

std::size_t CellModule::index(const HalfDiagram& h) const {
  auto it = index_.find(h);
  if (it == index_.end()) throw Error("half-diagram " + h.to_string() + " is not in M(" + std::to_string(lambda_) + ")");
  return it->second;
}

std::vector<LaurentPoly> act(const Diagram& d, const CellModule& m, std::size_t k) {
  if (d.n() != m.n()) throw Error("size mismatch: diagram " + std::to_string(d.n()) + " on module " + std::to_string(m.n()));
  std::vector<LaurentPoly> out(m.dim(), LaurentPoly::zero(Var::Delta));
  HalfAction a = act_on_half(d, m.basis().at(k));
  if (a.half.defect_count() == m.lambda()) out[m.index(a.half)] = delta_pow(a.loops);
  return out;
}

Matrix<LaurentPoly> rep_matrix(int i, const CellModule& m) {
  Diagram g = Diagram::generator(m.n(), i);
  Matrix<LaurentPoly> r(m.dim(), std::vector<LaurentPoly>(m.dim(), LaurentPoly::zero(Var::Delta)));
  for (std::size_t c = 0; c < m.dim(); ++c) {
    auto col = act(g, m, c);
    for (std::size_t row = 0; row < m.dim(); ++row) r[row][c] = col[row];
  }
  return r;
}

Matrix<LaurentPoly> mat_mul(const Matrix<LaurentPoly>& a, const Matrix<LaurentPoly>& b) {
  const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  Matrix<LaurentPoly> r(rows, std::vector<LaurentPoly>(cols, LaurentPoly::zero(Var::Delta)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

bool rep_relations_hold(const CellModule& m) {
  std::vector<Matrix<LaurentPoly>> g;
  for (int i = 1; i < m.n(); ++i) g.push_back(rep_matrix(i, m));
  auto scaled = [](Matrix<LaurentPoly> x, const LaurentPoly& c) {
    for (auto& row : x)
      for (auto& e : row) e *= c;
    return x;
  };
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (mat_mul(g[i], g[i]) != scaled(g[i], delta_pow(1))) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      std::size_t gap = i > j ? i - j : j - i;
      if (gap == 1 && mat_mul(mat_mul(g[i], g[j]), g[i]) != g[i]) return false;
      if (gap >= 2 && mat_mul(g[i], g[j]) != mat_mul(g[j], g[i])) return false;
    }
  }
  return true;
}

LaurentPoly bilinear(const HalfDiagram& h, const HalfDiagram& h2) {
  int loops = bilinear_loops(h, h2);
  return loops < 0 ? LaurentPoly::zero(Var::Delta) : delta_pow(loops);
}

namespace kernels {

Matrix<LaurentPoly> gram_serial(int n, int lambda) {
  CellModule m(n, lambda);
  const auto& b = m.basis();
  Matrix<LaurentPoly> g(m.dim(), std::vector<LaurentPoly>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) g[i][j] = bilinear(b[i], b[j]);
  return g;
}

Matrix<LaurentPoly> gram_parallel(int n, int lambda) {
  CellModule m(n, lambda);
  const auto& b = m.basis();
  const long dim = static_cast<long>(m.dim());
  Matrix<LaurentPoly> g(m.dim(), std::vector<LaurentPoly>(m.dim()));
  detail::OmpErrorSlot err;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < dim; ++i)
    err.run([&] {
      for (long j = 0; j < dim; ++j)
        g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            bilinear(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
    });
  err.rethrow();
  return g;
}

}  // namespace kernels

Matrix<LaurentPoly> gram(int n, int lambda) {
  check_lambda(n, lambda);
  return n >= 8 ? kernels::gram_parallel(n, lambda) : kernels::gram_serial(n, lambda);
}

LaurentPoly gram_det(int n, int lambda) { return bareiss_det(gram(n, lambda)); }

bool form_associativity_check(int n, int lambda) {
  CellModule m(n, lambda);
  const auto& b = m.basis();
  for (int i = 1; i < n; ++i) {
    Diagram g = Diagram::generator(n, i);  // self-adjoint under the involution
    for (std::size_t h = 0; h < m.dim(); ++h) {
      auto gh = act(g, m, h);
      for (std::size_t h2 = 0; h2 < m.dim(); ++h2) {
        auto gh2 = act(g, m, h2);
        LaurentPoly lhs = LaurentPoly::zero(Var::Delta), rhs = LaurentPoly::zero(Var::Delta);
        for (std::size_t k = 0; k < m.dim(); ++k) {
          if (!gh[k].is_zero()) lhs += gh[k] * bilinear(b[k], b[h2]);
          if (!gh2[k].is_zero()) rhs += gh2[k] * bilinear(b[h], b[k]);
        }
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool cellular_c3_check(int n) {
  for (int lambda : lambda_set(n)) {
    CellModule m(n, lambda);
    const auto& b = m.basis();
    for (int i = 1; i < n; ++i) {
      Diagram g = Diagram::generator(n, i);
      for (const auto& s : b) {
        // Expected: same cell iff the action on s keeps lambda defects.
        HalfAction a = act_on_half(g, s);
        const bool stays = a.half.defect_count() == lambda;
        for (const auto& t : b) {
          ScaledDiagram prod = multiply(g, cell_glue(s, t));
          const bool same_cell = prod.diagram.through_count() == lambda;
          if (same_cell != stays) return false;
          if (!same_cell) continue;
          Decomposition dec = decompose(prod.diagram);
          if (dec.t != t || dec.s != a.half || prod.loops != a.loops) return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Gram matrix specialized at spec and ranked.
template <class T, class F>
std::size_t rank_with(const Matrix<LaurentPoly>& g, F&& eval) {
  Matrix<T> m(g.size(), std::vector<T>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m[i][j] = eval(g[i][j]);
  return bareiss_rank(std::move(m));
}

template <class T>
T horner(const LaurentPoly& p, const T& x, const T& one) {
  if (!p.is_zero() && p.min_exp() < 0) throw Error("internal: negative delta power in Gram entry");
  T acc = one - one;
  if (p.is_zero()) return acc;
  for (int e = p.max_exp(); e >= 0; --e) {
    acc = acc * x;
    mpz_class c = p.coeff(e);
    if (c != 0) acc = acc + one * T(c);
  }
  return acc;
}

}  // namespace

std::size_t gram_rank(int n, int lambda, const FieldSpec& spec) {
  Matrix<LaurentPoly> g = gram(n, lambda);
  FieldElement dv = delta_value(spec);
  if (spec.kind == FieldSpec::Kind::Generic) return bareiss_rank(g);
  if (spec.kind == FieldSpec::Kind::Rationals) {
    mpq_class x = std::get<mpq_class>(dv);
    return rank_with<mpq_class>(g, [&](const LaurentPoly& p) { return horner<mpq_class>(p, x, mpq_class(1)); });
  }
  ModP x = std::get<ModP>(dv);
  return rank_with<ModP>(g, [&](const LaurentPoly& p) {
    // Coefficients are reduced modulo p before Horner.
    ModP acc(0, spec.p);
    if (p.is_zero()) return acc;
    for (int e = p.max_exp(); e >= 0; --e) {
      acc = acc * x;
      mpz_class c = p.coeff(e);
      if (c != 0) {
        mpz_class red = c % static_cast<unsigned long>(spec.p);
        acc = acc + ModP(red.get_si(), spec.p);
      }
    }
    return acc;
  });
}

namespace {

bool rational_sqrt(const mpq_class& x, mpq_class& root) {
  if (sgn(x) < 0) return false;
  mpz_class a = x.get_num(), b = x.get_den();
  if (!mpz_perfect_square_p(a.get_mpz_t()) || !mpz_perfect_square_p(b.get_mpz_t())) return false;
  root = mpq_class(sqrt(a), sqrt(b));
  root.canonicalize();
  return true;
}

bool delta_is_zero(const FieldElement& dv) { return is_zero(dv); }

bool part_b(int n, std::uint64_t characteristic) {
  if (n == 0) return true;
  if (n % 2 == 0) return false;
  return characteristic == 0 || static_cast<std::uint64_t>(n) <= 2 * characteristic - 1;
}

}  // namespace

std::optional<bool> closed_form_semisimple(int n, const FieldSpec& spec) {
  if (spec.kind == FieldSpec::Kind::Generic) return true;
  FieldElement dv = delta_value(spec);
  if (delta_is_zero(dv)) return part_b(n, spec.characteristic());
  if (spec.var == Var::V) return semisimple_at(n, spec);
  // delta-spec: look for v in the field with v + 1/v = delta.
  if (spec.kind == FieldSpec::Kind::Rationals) {
    mpq_class d = spec.value, root;
    if (!rational_sqrt(d * d - 4, root)) return std::nullopt;
    mpq_class v = (d + root) / 2;
    return semisimple_at(n, FieldSpec::rationals(v, Var::V));
  }
  if (spec.p > 1000000) return std::nullopt;
  ModP d = std::get<ModP>(dv);
  for (std::uint64_t r = 1; r < spec.p; ++r) {
    ModP v(static_cast<std::int64_t>(r), spec.p);
    if (v + v.inverse() == d) return semisimple_at(n, FieldSpec::prime_field(spec.p, static_cast<std::int64_t>(r), Var::V));
  }
  return std::nullopt;
}

SemisimplicityReport simple_dims(int n, const FieldSpec& spec) {
  SemisimplicityReport rep;
  rep.n = n;
  rep.spec = spec;
  rep.is_semisimple = true;
  for (int lambda : lambda_set(n)) {
    std::size_t dim = CellModule(n, lambda).dim();
    std::size_t rank = gram_rank(n, lambda, spec);
    rep.cell_dims[lambda] = dim;
    rep.simple_dims[lambda] = rank;
    if (rank > 0) rep.lambda0.insert(lambda);
    if (rank != dim) rep.is_semisimple = false;
  }
  rep.closed_form = closed_form_semisimple(n, spec);
  return rep;
}

}  // namespace tl
