#include "tl/ring.hpp"

#include <sstream>

namespace tl {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t common_modulus(const ModP& a, const ModP& b) {
  if (a.p && b.p && a.p != b.p) throw Error("modulus mismatch");
  return a.p ? a.p : b.p;
}

ModP reduce(const ModP& a, std::uint64_t p) { return p == 0 || a.p == p ? a : ModP(static_cast<std::int64_t>(a.value), p); }

}  // namespace

ModP::ModP(std::int64_t v, std::uint64_t prime) : p(prime) {
  if (p == 0) {
    if (v < 0) throw Error("negative untyped residue");
    value = static_cast<std::uint64_t>(v);
    return;
  }
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  value = static_cast<std::uint64_t>(r);
}

ModP ModP::inverse() const {
  if (p == 0) throw Error("inverse without modulus");
  if (value == 0) throw Error("division by zero in prime field");
  std::uint64_t result = 1, base = value, e = p - 2;
  while (e) {
    if (e & 1u) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1u;
  }
  ModP r;
  r.value = result;
  r.p = p;
  return r;
}

ModP operator+(const ModP& a, const ModP& b) {
  const std::uint64_t p = common_modulus(a, b);
  ModP x = reduce(a, p), y = reduce(b, p), r;
  r.p = p;
  r.value = x.value + y.value;
  if (p && r.value >= p) r.value -= p;
  return r;
}

ModP operator-(const ModP& a, const ModP& b) {
  const std::uint64_t p = common_modulus(a, b);
  if (p == 0) throw Error("subtraction without modulus");
  ModP x = reduce(a, p), y = reduce(b, p), r;
  r.p = p;
  r.value = x.value >= y.value ? x.value - y.value : x.value + p - y.value;
  return r;
}

ModP operator*(const ModP& a, const ModP& b) {
  const std::uint64_t p = common_modulus(a, b);
  ModP x = reduce(a, p), y = reduce(b, p), r;
  r.p = p;
  r.value = p ? mulmod(x.value, y.value, p) : x.value * y.value;
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::generic(Var var) {
  FieldSpec s;
  s.var = var;
  return s;
}

FieldSpec FieldSpec::rationals(const mpq_class& value, Var var) {
  FieldSpec s;
  s.kind = Kind::Rationals;
  s.var = var;
  s.value = value;
  s.value.canonicalize();
  return s;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p, std::int64_t residue, Var var) {
  if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
  FieldSpec s;
  s.kind = Kind::PrimeField;
  s.var = var;
  s.p = p;
  s.residue = ModP(residue, p).value;
  return s;
}

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Generic: os << "generic"; break;
    case Kind::Rationals: os << var_name(var) << "=" << value.get_str() << " over Q"; break;
    case Kind::PrimeField: os << var_name(var) << "=" << residue << " over F_" << p; break;
  }
  return os.str();
}

bool is_zero(const FieldElement& x) {
  return std::visit([](const auto& e) { return tl::is_zero(e); }, x);
}

std::string to_string(const FieldElement& x) {
  if (const auto* p = std::get_if<LaurentPoly>(&x)) return p->to_string();
  if (const auto* q = std::get_if<mpq_class>(&x)) return q->get_str();
  return std::to_string(std::get<ModP>(x).value);
}

LaurentPoly q_int_balanced(int n) {
  if (n < 0) throw Error("quantum integer of negative n");
  std::vector<std::pair<int, mpz_class>> terms;
  for (int k = 0; k < n; ++k) terms.emplace_back(-(n - 1) + 2 * k, 1);
  return LaurentPoly::from_terms(Var::V, terms);
}

LaurentPoly q_int_classical(int n) {
  if (n < 0) throw Error("quantum integer of negative n");
  std::vector<std::pair<int, mpz_class>> terms;
  for (int k = 0; k < n; ++k) terms.emplace_back(k, 1);
  return LaurentPoly::from_terms(Var::Q, terms);
}

LaurentPoly q_factorial(int n, QForm form) {
  const Var var = form == QForm::Balanced ? Var::V : Var::Q;
  LaurentPoly r = LaurentPoly(1).retag(var);
  for (int k = 1; k <= n; ++k) r *= form == QForm::Balanced ? q_int_balanced(k) : q_int_classical(k);
  return r;
}

LaurentPoly jones_P(int n) {
  if (n < 0) throw Error("jones_P of negative n");
  const LaurentPoly x = LaurentPoly::monomial(Var::X, 1);
  LaurentPoly prev = LaurentPoly(1).retag(Var::X), cur = prev;
  for (int k = 1; k < n; ++k) {
    LaurentPoly next = cur - x * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool verify_P_identity_against(int n, const LaurentPoly& rhs) {
  // 1/beta = q/(1+q)^2, so P_n(1/beta)(1+q)^n = sum_k c_k q^k (1+q)^{n-2k}.
  const LaurentPoly p = jones_P(n);
  const LaurentPoly one_plus_q = LaurentPoly::from_terms(Var::Q, {{0, 1}, {1, 1}});
  LaurentPoly lhs = LaurentPoly::zero(Var::Q);
  for (const auto& t : p.terms()) {
    if (t.exp < 0 || 2 * t.exp > n) return false;
    lhs += LaurentPoly::monomial(Var::Q, t.exp, t.coeff) * one_plus_q.pow(static_cast<unsigned>(n - 2 * t.exp));
  }
  return lhs == rhs;
}

bool verify_P_identity(int n) { return verify_P_identity_against(n, q_int_classical(n + 1)); }

LaurentPoly delta_to_v(const LaurentPoly& p) {
  join_var(p.var(), Var::Delta);
  const LaurentPoly d = LaurentPoly::from_terms(Var::V, {{-1, 1}, {1, 1}});
  LaurentPoly r = LaurentPoly::zero(Var::V);
  for (const auto& t : p.terms()) {
    if (t.exp < 0) throw Error("delta -> v+1/v needs nonnegative delta exponents");
    r += LaurentPoly(t.coeff, Var::V) * d.pow(static_cast<unsigned>(t.exp));
  }
  return r;
}

LaurentPoly q_to_v(const LaurentPoly& p) {
  join_var(p.var(), Var::Q);
  return p.dilate(2).retag(Var::V);
}

mpq_class evaluate_rational(const LaurentPoly& p, const mpq_class& x) {
  if (p.is_zero()) return 0;
  if (sgn(x) == 0 && p.min_exp() < 0) throw Error("singular specialization");
  mpq_class r = 0;
  for (const auto& t : p.terms()) {
    mpq_class m = 1;
    mpq_class base = t.exp < 0 ? mpq_class(1) / x : x;
    for (int k = 0; k < std::abs(t.exp); ++k) m *= base;
    r += mpq_class(t.coeff) * m;
  }
  r.canonicalize();
  return r;
}

ModP evaluate_mod(const LaurentPoly& p, const ModP& x) {
  ModP r(0, x.p);
  if (p.is_zero()) return r;
  if (x.is_zero() && p.min_exp() < 0) throw Error("singular specialization");
  for (const auto& t : p.terms()) {
    ModP base = t.exp < 0 ? x.inverse() : x, m(1, x.p);
    for (int k = 0; k < std::abs(t.exp); ++k) m = m * base;
    mpz_class c = t.coeff % mpz_class(static_cast<unsigned long>(x.p));
    if (c < 0) c += static_cast<unsigned long>(x.p);
    r = r + ModP(static_cast<std::int64_t>(c.get_ui()), x.p) * m;
  }
  return r;
}

FieldElement evaluate(const LaurentPoly& p, const FieldSpec& spec) {
  join_var(p.var(), spec.var);
  switch (spec.kind) {
    case FieldSpec::Kind::Generic:
      return p;
    case FieldSpec::Kind::Rationals:
      if (spec.var == Var::V && sgn(spec.value) == 0) throw Error("singular specialization");
      return evaluate_rational(p, spec.value);
    case FieldSpec::Kind::PrimeField:
      if (spec.var == Var::V && spec.residue == 0) throw Error("singular specialization");
      return evaluate_mod(p, ModP(static_cast<std::int64_t>(spec.residue), spec.p));
  }
  return p;
}

bool semisimple_at(int n, const FieldSpec& spec) {
  if (spec.var != Var::V) throw Error("semisimple_at needs a specialization of v");
  if (spec.kind == FieldSpec::Kind::Generic) return true;
  for (int k = 1; k <= n; ++k)
    if (is_zero(evaluate(q_int_balanced(k), spec))) return false;
  return true;
}

FieldElement delta_value(const FieldSpec& spec) {
  if (spec.var == Var::Delta) {
    if (spec.kind == FieldSpec::Kind::Generic) return LaurentPoly::monomial(Var::Delta, 1);
    return evaluate(LaurentPoly::monomial(Var::Delta, 1), spec);
  }
  if (spec.var != Var::V) throw Error("spec does not determine delta");
  if (spec.kind == FieldSpec::Kind::Generic) return LaurentPoly::from_terms(Var::V, {{-1, 1}, {1, 1}});
  return evaluate(LaurentPoly::from_terms(Var::V, {{-1, 1}, {1, 1}}), spec);
}

}  // namespace tl
