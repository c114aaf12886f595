#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tl/diagram.hpp"
#include "tl/laurent.hpp"

namespace tl {

// Coefficient regime of a TL element: Laurent in delta, or Laurent in v with
// delta = v + v^{-1}.
enum class CoeffRing { Delta, V };

Var ring_var(CoeffRing r);
const char* ring_name(CoeffRing r);
CoeffRing ring_from_name(const std::string& s);

// Formal combination of n-diagrams, terms kept in canonical diagram order.
class TLElement {
 public:
  TLElement(int n, CoeffRing ring) : n_(n), ring_(ring) {}

  static TLElement basis(const Diagram& d, CoeffRing ring, const LaurentPoly& c = 1);
  static TLElement identity(int n, CoeffRing ring);
  static TLElement generator(int n, int i, CoeffRing ring);
  static TLElement scalar(int n, CoeffRing ring, const LaurentPoly& c);

  int n() const { return n_; }
  CoeffRing ring() const { return ring_; }
  const std::map<Diagram, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Diagram& d) const;

  void add_term(const Diagram& d, const LaurentPoly& c);
  // Value of a closed loop in this ring raised to k.
  LaurentPoly loop_factor(int k) const;

  TLElement& operator+=(const TLElement& o);
  TLElement& operator-=(const TLElement& o);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  TLElement operator-() const;
  TLElement scaled(const LaurentPoly& c) const;
  friend TLElement operator*(const TLElement& a, const TLElement& b);
  bool operator==(const TLElement& o) const;
  bool operator!=(const TLElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  int n_;
  CoeffRing ring_;
  std::map<Diagram, LaurentPoly> terms_;
  void check_compatible(const TLElement& o) const;
};

// delta-ring element mapped into the v-ring (delta -> v + v^{-1}).
TLElement to_v_ring(const TLElement& x);

// Normalized trace: sum of c * delta^(loops - n). delta-ring only.
LaurentPoly markov_trace(const TLElement& x);
// delta^{-1} times the closure of strand n. delta-ring only.
TLElement conditional_expectation(const TLElement& x);
TLElement embed(const TLElement& x);
// Basis of the copy of TL_j inside TL_n generated by e_1..e_{j-1}.
std::vector<Diagram> sub_basis(int n, int j);

bool verify_markov_property(int n, int j);
// e_{n-1} E_n(e_{n-1} x) == delta^{-1} e_{n-1} x on every basis diagram x.
bool verify_ce_identity(int n);
// Constant c with tr_{n-1}(E_n(x)) == c tr_n(x) on every basis diagram; zero if none exists.
LaurentPoly tower_trace_constant(int n);

// Jones relations for u_i = delta^{-1} e_i with the given beta (delta^2 is correct).
bool jones_rescale_check(int n, const LaurentPoly& beta);
bool jones_rescale_check(int n);

struct HeckeWord {
  int n = 1;
  std::vector<std::pair<int, int>> letters;  // (index, +1 | -1)
  static HeckeWord make(int n, std::vector<std::pair<int, int>> letters);
};

// psi(T_i) = e_i - v^{-1}; psi(T_i^{-1}) = psi(T_i) + v^{-1} - v.
TLElement hecke_image(const HeckeWord& w);
TLElement gamma(int n, int i);
// Image of x_k = v^3 T_k T_{k+1} T_k + v^2 (T_k T_{k+1} + T_{k+1} T_k) + v (T_k + T_{k+1}) + constant.
TLElement kernel_generator_image(int n, int k, const LaurentPoly& constant = 1);
struct HeckeReport {
  bool quadratic = false, braid = false, commute = false, inverse = false;
  bool kernel_zero = false, conjugation_shift = false, generator_shift = false;
  bool normalizations = false;
  bool all() const {
    return quadratic && braid && commute && inverse && kernel_zero && conjugation_shift && generator_shift && normalizations;
  }
};
HeckeReport hecke_check(int n);
bool hecke_kernel_check(int n);

namespace kernels {
TLElement multiply_serial(const TLElement& a, const TLElement& b);
TLElement multiply_parallel(const TLElement& a, const TLElement& b);
}  // namespace kernels

}  // namespace tl
