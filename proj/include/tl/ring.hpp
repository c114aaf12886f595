#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "tl/laurent.hpp"

namespace tl {

// Residue modulo a prime. p == 0 marks a small integer constant that adopts
// the modulus of the other operand.
struct ModP {
  std::uint64_t value = 0;
  std::uint64_t p = 0;

  ModP() = default;
  ModP(std::int64_t v, std::uint64_t prime);
  bool is_zero() const { return value == 0; }
  ModP inverse() const;
  friend ModP operator+(const ModP& a, const ModP& b);
  friend ModP operator-(const ModP& a, const ModP& b);
  friend ModP operator*(const ModP& a, const ModP& b);
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
  ModP operator-() const { return ModP(0, p) - *this; }
  bool operator==(const ModP& o) const { return value == o.value; }
  bool operator!=(const ModP& o) const { return value != o.value; }
};

inline bool is_zero(const ModP& a) { return a.is_zero(); }
inline ModP exact_div(const ModP& a, const ModP& b) { return a / b; }
inline ModP one_like(const ModP& a) { return ModP(1, a.p); }
inline bool is_zero(const mpq_class& a) { return sgn(a) == 0; }
inline mpq_class exact_div(const mpq_class& a, const mpq_class& b) { return a / b; }
inline mpq_class one_like(const mpq_class&) { return 1; }

bool is_prime(std::uint64_t p);

// Target of a specialization. `var` names the variable that receives `value`
// (v, or delta directly).
struct FieldSpec {
  enum class Kind { Generic, Rationals, PrimeField };
  Kind kind = Kind::Generic;
  Var var = Var::V;
  mpq_class value = 0;
  std::uint64_t p = 0;
  std::uint64_t residue = 0;

  static FieldSpec generic(Var var = Var::V);
  static FieldSpec rationals(const mpq_class& value, Var var = Var::V);
  static FieldSpec prime_field(std::uint64_t p, std::int64_t residue, Var var = Var::V);

  // Characteristic of the target field (0 for Generic and Rationals).
  std::uint64_t characteristic() const { return kind == Kind::PrimeField ? p : 0; }
  std::string to_string() const;
};

using FieldElement = std::variant<LaurentPoly, mpq_class, ModP>;

bool is_zero(const FieldElement& x);
std::string to_string(const FieldElement& x);

// [n]_v = v^{-(n-1)} + v^{-(n-3)} + ... + v^{n-1}
LaurentPoly q_int_balanced(int n);
// [[n]]_q = 1 + q + ... + q^{n-1}
LaurentPoly q_int_classical(int n);
enum class QForm { Balanced, Classical };
LaurentPoly q_factorial(int n, QForm form);

// P_0 = P_1 = 1, P_{n+1} = P_n - x P_{n-1}
LaurentPoly jones_P(int n);
// Checks P_n(1/beta) (1+q)^n == [[n+1]]_q with beta = q + 2 + q^{-1}.
bool verify_P_identity(int n);
// Same check with an arbitrary right-hand side; used for negative controls.
bool verify_P_identity_against(int n, const LaurentPoly& rhs);

// Explicit ring maps between tags.
LaurentPoly delta_to_v(const LaurentPoly& p);  // delta -> v + v^{-1}; needs delta-exponents >= 0
LaurentPoly q_to_v(const LaurentPoly& p);      // q -> v^2

// Evaluation homomorphism. Generic returns p itself.
FieldElement evaluate(const LaurentPoly& p, const FieldSpec& spec);
mpq_class evaluate_rational(const LaurentPoly& p, const mpq_class& x);
ModP evaluate_mod(const LaurentPoly& p, const ModP& x);

// True iff [k]_v != 0 at spec for 1 <= k <= n. Spec must specialize v.
bool semisimple_at(int n, const FieldSpec& spec);

// Value of delta at spec: the spec value itself for delta-specs, v + 1/v for v-specs.
FieldElement delta_value(const FieldSpec& spec);

}  // namespace tl
