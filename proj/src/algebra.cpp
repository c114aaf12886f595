#include "tl/algebra.hpp"

#include <omp.h>

#include <sstream>

#include "tl/linalg.hpp"
#include "tl/ring.hpp"

namespace tl {

Var ring_var(CoeffRing r) { return r == CoeffRing::Delta ? Var::Delta : Var::V; }

const char* ring_name(CoeffRing r) { return r == CoeffRing::Delta ? "delta" : "v"; }

CoeffRing ring_from_name(const std::string& s) {
  if (s == "delta" || s == "d") return CoeffRing::Delta;
  if (s == "v") return CoeffRing::V;
  throw Error("unknown coefficient ring: " + s);
}

namespace {

void check_coeff(const LaurentPoly& c, CoeffRing ring) {
  if (c.var() != Var::None && c.var() != ring_var(ring))
    throw Error(std::string("variable mismatch: coefficient in ") + var_name(c.var()) + " for " +
                ring_name(ring) + "-ring element");
}

LaurentPoly loop_power(CoeffRing ring, int k) {
  if (ring == CoeffRing::Delta) return LaurentPoly::monomial(Var::Delta, k);
  LaurentPoly d = LaurentPoly::from_terms(Var::V, {{1, 1}, {-1, 1}});
  return d.pow(static_cast<unsigned>(k));
}

// Loop powers 0..max for a product of elements of size n.
std::vector<LaurentPoly> loop_table(CoeffRing ring, int n) {
  std::vector<LaurentPoly> t;
  for (int k = 0; k <= n; ++k) t.push_back(loop_power(ring, k));
  return t;
}

}  // namespace

TLElement TLElement::basis(const Diagram& d, CoeffRing ring, const LaurentPoly& c) {
  TLElement x(d.n(), ring);
  x.add_term(d, c);
  return x;
}

TLElement TLElement::identity(int n, CoeffRing ring) { return basis(Diagram::identity(n), ring); }

TLElement TLElement::generator(int n, int i, CoeffRing ring) {
  return basis(Diagram::generator(n, i), ring);
}

TLElement TLElement::scalar(int n, CoeffRing ring, const LaurentPoly& c) {
  return basis(Diagram::identity(n), ring, c);
}

LaurentPoly TLElement::coeff(const Diagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? LaurentPoly::zero(ring_var(ring_)) : it->second;
}

void TLElement::add_term(const Diagram& d, const LaurentPoly& c) {
  if (d.n() != n_) throw Error("size mismatch: diagram of size " + std::to_string(d.n()) +
                               " in element of size " + std::to_string(n_));
  check_coeff(c, ring_);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly TLElement::loop_factor(int k) const { return loop_power(ring_, k); }

void TLElement::check_compatible(const TLElement& o) const {
  if (n_ != o.n_)
    throw Error("size mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  if (ring_ != o.ring_)
    throw Error(std::string("ring mismatch: ") + ring_name(ring_) + " vs " + ring_name(o.ring_));
}

TLElement& TLElement::operator+=(const TLElement& o) {
  check_compatible(o);
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) {
  check_compatible(o);
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

TLElement TLElement::operator-() const {
  TLElement r(n_, ring_);
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

TLElement TLElement::scaled(const LaurentPoly& c) const {
  check_coeff(c, ring_);
  TLElement r(n_, ring_);
  if (c.is_zero()) return r;
  for (const auto& [d, k] : terms_) {
    LaurentPoly p = k * c;
    if (!p.is_zero()) r.terms_.emplace(d, std::move(p));
  }
  return r;
}

TLElement operator*(const TLElement& a, const TLElement& b) {
  if (a.terms().size() * b.terms().size() >= 64) return kernels::multiply_parallel(a, b);
  return kernels::multiply_serial(a, b);
}

bool TLElement::operator==(const TLElement& o) const {
  if (n_ != o.n_ || ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [d, c] : terms_) {
    if (d != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

std::string TLElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << d.to_string();
  }
  return os.str();
}

namespace kernels {

TLElement multiply_serial(const TLElement& a, const TLElement& b) {
  if (a.n() != b.n()) throw Error("size mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  if (a.ring() != b.ring()) throw Error("ring mismatch");
  auto loops = loop_table(a.ring(), a.n());
  TLElement r(a.n(), a.ring());
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) {
      ScaledDiagram s = multiply(da, db);
      r.add_term(s.diagram, ca * cb * loops[static_cast<std::size_t>(s.loops)]);
    }
  return r;
}

TLElement multiply_parallel(const TLElement& a, const TLElement& b) {
  if (a.n() != b.n()) throw Error("size mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  if (a.ring() != b.ring()) throw Error("ring mismatch");
  auto loops = loop_table(a.ring(), a.n());
  std::vector<std::pair<Diagram, LaurentPoly>> left(a.terms().begin(), a.terms().end());
  std::vector<std::pair<Diagram, LaurentPoly>> right(b.terms().begin(), b.terms().end());
  // One partial sum per left term, merged in order afterwards.
  std::vector<TLElement> partial(left.size(), TLElement(a.n(), a.ring()));
  detail::OmpErrorSlot err;
  const long count = static_cast<long>(left.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    err.run([&] {
      auto& out = partial[static_cast<std::size_t>(i)];
      const auto& [da, ca] = left[static_cast<std::size_t>(i)];
      for (const auto& [db, cb] : right) {
        ScaledDiagram s = multiply(da, db);
        out.add_term(s.diagram, ca * cb * loops[static_cast<std::size_t>(s.loops)]);
      }
    });
  }
  err.rethrow();
  TLElement r(a.n(), a.ring());
  for (const auto& p : partial) r += p;
  return r;
}

}  // namespace kernels

TLElement to_v_ring(const TLElement& x) {
  if (x.ring() == CoeffRing::V) return x;
  TLElement r(x.n(), CoeffRing::V);
  for (const auto& [d, c] : x.terms()) r.add_term(d, delta_to_v(c.retag(Var::Delta)));
  return r;
}

namespace {
void require_delta(const TLElement& x, const char* what) {
  if (x.ring() != CoeffRing::Delta)
    throw Error(std::string(what) + " needs the delta-ring (delta^{-1} is not available over v)");
}
}  // namespace

LaurentPoly markov_trace(const TLElement& x) {
  require_delta(x, "markov_trace");
  LaurentPoly r = LaurentPoly::zero(Var::Delta);
  for (const auto& [d, c] : x.terms()) r += c * LaurentPoly::monomial(Var::Delta, close_full(d) - x.n());
  return r;
}

TLElement conditional_expectation(const TLElement& x) {
  require_delta(x, "conditional_expectation");
  if (x.n() < 2) throw Error("conditional_expectation needs n >= 2");
  TLElement r(x.n() - 1, CoeffRing::Delta);
  for (const auto& [d, c] : x.terms()) {
    ClosedLast cl = close_last(d);
    r.add_term(cl.diagram, c * LaurentPoly::monomial(Var::Delta, cl.loops - 1));
  }
  return r;
}

TLElement embed(const TLElement& x) {
  TLElement r(x.n() + 1, x.ring());
  for (const auto& [d, c] : x.terms()) r.add_term(embed(d), c);
  return r;
}

std::vector<Diagram> sub_basis(int n, int j) {
  if (j < 1 || j > n) throw Error("sub_basis needs 1 <= j <= n");
  std::vector<Diagram> out = enumerate_diagrams(j);
  for (int m = j; m < n; ++m)
    for (auto& d : out) d = embed(d);
  return out;
}

bool verify_markov_property(int n, int j) {
  if (j < 1 || j > n - 1) throw Error("verify_markov_property needs 1 <= j <= n-1");
  const LaurentPoly delta = LaurentPoly::monomial(Var::Delta, 1);
  TLElement ej = TLElement::generator(n, j, CoeffRing::Delta);
  for (const Diagram& w : sub_basis(n, j)) {
    TLElement x = TLElement::basis(w, CoeffRing::Delta);
    if (delta * markov_trace(x * ej) != markov_trace(x)) return false;
  }
  return verify_ce_identity(n);
}

bool verify_ce_identity(int n) {
  if (n < 2) throw Error("verify_ce_identity needs n >= 2");
  const LaurentPoly inv = LaurentPoly::monomial(Var::Delta, -1);
  TLElement e = TLElement::generator(n, n - 1, CoeffRing::Delta);
  for (const Diagram& d : enumerate_diagrams(n)) {
    TLElement ex = e * TLElement::basis(d, CoeffRing::Delta);
    TLElement lhs = e * embed(conditional_expectation(ex));
    if (lhs != ex.scaled(inv)) return false;
  }
  return true;
}

LaurentPoly tower_trace_constant(int n) {
  if (n < 2) throw Error("tower_trace_constant needs n >= 2");
  LaurentPoly constant = LaurentPoly::zero(Var::Delta);
  bool have = false;
  for (const Diagram& d : enumerate_diagrams(n)) {
    TLElement x = TLElement::basis(d, CoeffRing::Delta);
    LaurentPoly lhs = markov_trace(conditional_expectation(x));
    LaurentPoly rhs = markov_trace(x);
    if (!divides(rhs, lhs)) return LaurentPoly::zero(Var::Delta);
    LaurentPoly c = exact_div(lhs, rhs);
    if (!have) {
      constant = c;
      have = true;
    } else if (c != constant) {
      return LaurentPoly::zero(Var::Delta);
    }
  }
  return constant;
}

bool jones_rescale_check(int n, const LaurentPoly& beta) {
  if (n < 2) throw Error("jones_rescale_check needs n >= 2");
  const LaurentPoly inv = LaurentPoly::monomial(Var::Delta, -1);
  std::vector<TLElement> u;
  for (int i = 1; i < n; ++i) u.push_back(TLElement::generator(n, i, CoeffRing::Delta).scaled(inv));
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] * u[i] != u[i]) return false;
    for (std::size_t j = 0; j < u.size(); ++j) {
      std::size_t gap = i > j ? i - j : j - i;
      if (gap == 1 && (u[i] * u[j] * u[i]).scaled(beta) != u[i]) return false;
      if (gap >= 2 && u[i] * u[j] != u[j] * u[i]) return false;
    }
  }
  return true;
}

bool jones_rescale_check(int n) { return jones_rescale_check(n, LaurentPoly::monomial(Var::Delta, 2)); }

HeckeWord HeckeWord::make(int n, std::vector<std::pair<int, int>> letters) {
  for (const auto& [i, e] : letters) {
    if (i < 1 || i > n - 1)
      throw Error("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(n - 1));
    if (e != 1 && e != -1) throw Error("Hecke exponent must be +1 or -1");
  }
  return HeckeWord{n, std::move(letters)};
}

namespace {
LaurentPoly vpow(int k, long c = 1) { return LaurentPoly::monomial(Var::V, k, c); }
}  // namespace

TLElement gamma(int n, int i) {
  return TLElement::generator(n, i, CoeffRing::V) - TLElement::scalar(n, CoeffRing::V, vpow(-1));
}

namespace {
TLElement gamma_inverse(int n, int i) {
  return gamma(n, i) + TLElement::scalar(n, CoeffRing::V, vpow(-1) - vpow(1));
}
}  // namespace

TLElement hecke_image(const HeckeWord& w) {
  TLElement r = TLElement::identity(w.n, CoeffRing::V);
  for (const auto& [i, e] : w.letters) r = r * (e == 1 ? gamma(w.n, i) : gamma_inverse(w.n, i));
  return r;
}

TLElement kernel_generator_image(int n, int k, const LaurentPoly& constant) {
  if (k < 1 || k + 1 > n - 1) throw Error("kernel generator x_k needs 1 <= k <= n-2");
  TLElement a = gamma(n, k), b = gamma(n, k + 1);
  TLElement r = (a * b * a).scaled(vpow(3));
  r += (a * b + b * a).scaled(vpow(2));
  r += (a + b).scaled(vpow(1));
  r += TLElement::scalar(n, CoeffRing::V, constant);
  return r;
}

namespace {

// Images of C = T_1...T_{n-1} and its inverse T_{n-1}^{-1}...T_1^{-1}.
std::pair<TLElement, TLElement> coxeter_pair(int n) {
  std::vector<std::pair<int, int>> fwd, bwd;
  for (int i = 1; i < n; ++i) fwd.emplace_back(i, 1);
  for (int i = n - 1; i >= 1; --i) bwd.emplace_back(i, -1);
  return {hecke_image(HeckeWord::make(n, fwd)), hecke_image(HeckeWord::make(n, bwd))};
}

bool normalization_checks(int n) {
  const TLElement one = TLElement::identity(n, CoeffRing::V);
  for (int i = 1; i < n; ++i) {
    TLElement t = gamma(n, i).scaled(vpow(1));  // generator of H(-1, v^2)
    if (!((t + one) * (t - one.scaled(vpow(2)))).is_zero()) return false;
    // Two-parameter form with q1 = -(+-v^a), q2 = -q1 v^2.
    for (int a = -2; a <= 2; ++a)
      for (long sign : {1L, -1L}) {
        LaurentPoly q1 = vpow(a, sign);
        LaurentPoly q2 = -(q1 * vpow(2));
        TLElement s = t.scaled(-q1);
        if (!((s - one.scaled(q1)) * (s - one.scaled(q2))).is_zero()) return false;
      }
  }
  return true;
}

}  // namespace

HeckeReport hecke_check(int n) {
  if (n < 2) throw Error("hecke_check needs n >= 2");
  HeckeReport rep;
  const TLElement one = TLElement::identity(n, CoeffRing::V);
  std::vector<TLElement> g;
  for (int i = 1; i < n; ++i) g.push_back(gamma(n, i));
  rep.quadratic = rep.braid = rep.commute = rep.inverse = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!((g[i] + one.scaled(vpow(-1))) * (g[i] - one.scaled(vpow(1)))).is_zero()) rep.quadratic = false;
    if (g[i] * gamma_inverse(n, static_cast<int>(i) + 1) != one) rep.inverse = false;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (j == i + 1 && g[i] * g[j] * g[i] != g[j] * g[i] * g[j]) rep.braid = false;
      if (j >= i + 2 && g[i] * g[j] != g[j] * g[i]) rep.commute = false;
    }
  }
  rep.kernel_zero = n < 3 || hecke_kernel_check(n);
  auto [c, cinv] = coxeter_pair(n);
  rep.generator_shift = true;
  for (int k = 1; k + 1 <= n - 1; ++k)
    if (c * gamma(n, k) * cinv != gamma(n, k + 1)) rep.generator_shift = false;
  rep.conjugation_shift = true;
  for (int k = 1; k + 2 <= n - 1; ++k)
    if (c * kernel_generator_image(n, k) * cinv != kernel_generator_image(n, k + 1)) rep.conjugation_shift = false;
  rep.normalizations = normalization_checks(n);
  return rep;
}

bool hecke_kernel_check(int n) {
  if (n < 3) throw Error("hecke_kernel_check needs n >= 3");
  for (int k = 1; k <= n - 2; ++k)
    if (!kernel_generator_image(n, k).is_zero()) return false;
  auto [c, cinv] = coxeter_pair(n);
  for (int k = 1; k + 2 <= n - 1; ++k)
    if (c * kernel_generator_image(n, k) * cinv != kernel_generator_image(n, k + 1)) return false;
  return true;
}

}  // namespace tl
