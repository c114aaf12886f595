#include "tl/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tl {

const char* var_name(Var v) {
  switch (v) {
    case Var::None: return "";
    case Var::Delta: return "delta";
    case Var::V: return "v";
    case Var::Q: return "q";
    case Var::X: return "x";
  }
  return "";
}

Var var_from_name(const std::string& s) {
  if (s == "delta") return Var::Delta;
  if (s == "v") return Var::V;
  if (s == "q") return Var::Q;
  if (s == "x") return Var::X;
  if (s.empty()) return Var::None;
  throw Error("unknown variable tag '" + s + "'");
}

Var join_var(Var a, Var b) {
  if (a == Var::None) return b;
  if (b == Var::None || a == b) return a;
  throw Error(std::string("variable mismatch: ") + var_name(a) + " vs " + var_name(b));
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({0, mpz_class(c)});
}

LaurentPoly::LaurentPoly(const mpz_class& c, Var var) : var_(var) {
  if (c != 0) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::monomial(Var var, int exp, const mpz_class& c) {
  LaurentPoly p;
  p.var_ = var;
  if (c != 0) p.terms_.push_back({exp, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(Var var, const std::vector<std::pair<int, mpz_class>>& terms) {
  std::map<int, mpz_class> acc;
  for (const auto& [e, c] : terms) acc[e] += c;
  LaurentPoly p;
  p.var_ = var;
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.push_back({e, c});
  return p;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw Error("min_exp of zero polynomial");
  return terms_.front().exp;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw Error("max_exp of zero polynomial");
  return terms_.back().exp;
}

mpz_class LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::retag(Var var) const {
  LaurentPoly p = *this;
  p.var_ = var;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  var_ = join_var(var_, o.var_);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exp < o.terms_[j].exp)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].exp < terms_[i].exp) {
      out.push_back(o.terms_[j++]);
    } else {
      mpz_class c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) out.push_back({terms_[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  p.var_ = join_var(a.var_, b.var_);
  if (a.terms_.empty() || b.terms_.empty()) return p;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const LaurentPoly& m = a.terms_.size() == 1 ? a : b;
    const LaurentPoly& o = a.terms_.size() == 1 ? b : a;
    p.terms_.reserve(o.terms_.size());
    for (const auto& t : o.terms_) p.terms_.push_back({t.exp + m.terms_[0].exp, t.coeff * m.terms_[0].coeff});
    return p;
  }
  const int lo = a.min_exp() + b.min_exp();
  const int hi = a.max_exp() + b.max_exp();
  std::vector<mpz_class> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      mpz_class& slot = acc[static_cast<std::size_t>(s.exp + t.exp - lo)];
      mpz_addmul(slot.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
    }
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (acc[k] != 0) p.terms_.push_back({lo + static_cast<int>(k), std::move(acc[k])});
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  join_var(var_, o.var_);
  return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = LaurentPoly(1).retag(var_);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp += k;
  return p;
}

LaurentPoly LaurentPoly::dilate(int k) const {
  if (k == 0) throw Error("dilate by 0");
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp *= k;
  if (k < 0) std::reverse(p.terms_.begin(), p.terms_.end());
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  const std::string x = var_ == Var::None ? "x" : var_name(var_);
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class c = it->coeff;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0 && it->exp != 0) {
      os << "-";
      c = -c;
    }
    first = false;
    if (it->exp == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << x;
    if (it->exp != 1) os << "^" << it->exp;
  }
  return os.str();
}

namespace {

// Dense polynomial helpers, coefficients from low to high degree.
using Dense = std::vector<mpz_class>;

Dense to_dense(const LaurentPoly& p) {
  Dense d(static_cast<std::size_t>(p.max_exp() - p.min_exp() + 1));
  for (const auto& t : p.terms()) d[static_cast<std::size_t>(t.exp - p.min_exp())] = t.coeff;
  return d;
}

LaurentPoly from_dense(Var var, const Dense& d, int shift) {
  std::vector<std::pair<int, mpz_class>> terms;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] != 0) terms.emplace_back(static_cast<int>(k) + shift, d[k]);
  return LaurentPoly::from_terms(var, terms);
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

mpz_class dense_content(const Dense& d) {
  mpz_class g = 0;
  for (const auto& c : d) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void make_primitive(Dense& d) {
  mpz_class g = dense_content(d);
  if (g == 0) return;
  if (d.back() < 0) g = -g;
  for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^k * a mod b, sufficient for gcd computations.
Dense pseudo_rem(Dense a, const Dense& b) {
  trim(a);
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t off = a.size() - b.size();
    mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k < b.size(); ++k) a[off + k] -= la * b[k];
    trim(a);
    make_primitive(a);
  }
  return a;
}

}  // namespace

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  try {
    exact_div(a, b);
    return true;
  } catch (const Error&) {
    return false;
  }
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  const Var var = join_var(a.var(), b.var());
  if (b.is_zero()) throw Error("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly::zero(var);
  if (b.size() == 1) {
    const auto& bt = b.terms()[0];
    std::vector<std::pair<int, mpz_class>> terms;
    for (const auto& t : a.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), bt.coeff.get_mpz_t())) throw Error("inexact division");
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), bt.coeff.get_mpz_t());
      terms.emplace_back(t.exp - bt.exp, q);
    }
    return LaurentPoly::from_terms(var, terms);
  }
  Dense r = to_dense(a);
  const Dense d = to_dense(b);
  if (r.size() < d.size()) throw Error("inexact division");
  Dense q(r.size() - d.size() + 1);
  const mpz_class& ld = d.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = r[k + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), ld.get_mpz_t())) throw Error("inexact division");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), ld.get_mpz_t());
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= q[k] * d[j];
  }
  for (const auto& c : r)
    if (c != 0) throw Error("inexact division");
  return from_dense(var, q, a.min_exp() - b.min_exp());
}

mpz_class content(const LaurentPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
  return g;
}

LaurentPoly normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly r = p.shift(-p.min_exp());
  if (r.terms().back().coeff < 0) r = -r;
  return r;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  const Var var = join_var(a.var(), b.var());
  if (a.is_zero()) return normalize_unit(b).retag(var);
  if (b.is_zero()) return normalize_unit(a).retag(var);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
  Dense x = to_dense(a), y = to_dense(b);
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty() && y.size() > 1) {
    Dense r = pseudo_rem(x, y);
    x = std::move(y);
    y = std::move(r);
    make_primitive(y);
  }
  if (!y.empty()) x = Dense{1};  // nonzero constant remainder: coprime
  make_primitive(x);
  for (auto& k : x) k *= c;
  return normalize_unit(from_dense(var, x, 0));
}

// ---- RationalFunction ----

RationalFunction::RationalFunction(const LaurentPoly& num) : num_(num), den_(LaurentPoly(1).retag(num.var())) {}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  const Var var = join_var(num_.var(), den_.var());
  if (num_.is_zero()) {
    num_ = LaurentPoly::zero(var);
    den_ = LaurentPoly(1).retag(var);
    return;
  }
  LaurentPoly g = gcd(num_, den_);
  if (!(g.is_constant() && g.coeff(0) == 1)) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  // Fix the unit: denominator has lowest exponent 0 and positive leading coefficient.
  const int s = den_.min_exp();
  num_ = num_.shift(-s);
  den_ = den_.shift(-s);
  if (den_.terms().back().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error("division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.coeff(0) == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace tl
