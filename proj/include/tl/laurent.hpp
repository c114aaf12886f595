#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tl/error.hpp"

namespace tl {

// Variable tag of a Laurent polynomial. `None` marks an untagged integer
// constant, which combines with any tag.
enum class Var { None, Delta, V, Q, X };

const char* var_name(Var v);
Var var_from_name(const std::string& s);

// Integer Laurent polynomial in one named variable, kept as a sparse list of
// terms sorted by exponent with no zero coefficients.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    mpz_class coeff;
    bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: integer constants convert implicitly
  explicit LaurentPoly(const mpz_class& c, Var var = Var::None);

  static LaurentPoly zero(Var var) { LaurentPoly p; p.var_ = var; return p; }
  static LaurentPoly monomial(Var var, int exp, const mpz_class& c = 1);
  // Builds from unsorted (exp, coeff) pairs; repeated exponents are summed.
  static LaurentPoly from_terms(Var var, const std::vector<std::pair<int, mpz_class>>& terms);

  Var var() const { return var_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
  std::size_t size() const { return terms_.size(); }
  int min_exp() const;
  int max_exp() const;
  mpz_class coeff(int exp) const;

  // Same terms under another tag. Only meaningful for explicit renaming.
  LaurentPoly retag(Var var) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly pow(unsigned k) const;
  // Multiply by var^k.
  LaurentPoly shift(int k) const;
  // p(var) -> p(var^k), k != 0.
  LaurentPoly dilate(int k) const;

  std::string to_string() const;

 private:
  Var var_ = Var::None;
  std::vector<Term> terms_;
  friend Var join_var(Var a, Var b);
};

// Resolves the tag of a binary operation; throws on two distinct named tags.
Var join_var(Var a, Var b);

// Exact quotient a / b in the Laurent ring; throws tl::Error when b does not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
bool divides(const LaurentPoly& b, const LaurentPoly& a);

// gcd of the integer coefficients (0 for the zero polynomial).
mpz_class content(const LaurentPoly& p);
// Greatest common divisor up to units +-var^k. Result has positive leading
// coefficient and lowest exponent 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
// Multiplies by the unit +-var^k so that the lowest exponent is 0 and the
// leading coefficient is positive.
LaurentPoly normalize_unit(const LaurentPoly& p);

// Element of the fraction field of a Laurent ring. Kept reduced.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(const LaurentPoly& num);  // NOLINT
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  LaurentPoly num_, den_;
  void reduce();
};

// Hooks used by the generic elimination routines in linalg.hpp.
inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline LaurentPoly one_like(const LaurentPoly&) { return LaurentPoly(1); }
inline bool is_zero(const RationalFunction& p) { return p.is_zero(); }
inline RationalFunction exact_div(const RationalFunction& a, const RationalFunction& b) { return a / b; }
inline RationalFunction one_like(const RationalFunction&) { return RationalFunction(LaurentPoly(1)); }

}  // namespace tl
