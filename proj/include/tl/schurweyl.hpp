#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tl/laurent.hpp"

namespace tl {

// Basis vector x_{b_1} (x) ... (x) x_{b_n} is stored as the integer whose
// binary expansion, most significant bit first, is b_1 ... b_n.
using BasisIndex = std::uint32_t;

std::string bitstring(BasisIndex b, int n);
BasisIndex parse_bitstring(const std::string& s);
// Site j in 1..n.
inline int site_bit(BasisIndex b, int n, int j) { return static_cast<int>((b >> (n - j)) & 1U); }

// 2^n x 2^n matrix over Z[v, v^{-1}], stored by column.
class TensorOperator {
 public:
  using Column = std::map<BasisIndex, LaurentPoly>;

  explicit TensorOperator(int n);
  static TensorOperator identity(int n);

  int n() const { return n_; }
  std::size_t dim() const { return cols_.size(); }
  const Column& column(BasisIndex c) const { return cols_.at(c); }
  LaurentPoly entry(BasisIndex r, BasisIndex c) const;
  void add_entry(BasisIndex r, BasisIndex c, const LaurentPoly& x);
  bool is_zero() const;
  std::size_t nonzeros() const;

  TensorOperator& operator+=(const TensorOperator& o);
  TensorOperator& operator-=(const TensorOperator& o);
  friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
  friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }
  TensorOperator scaled(const LaurentPoly& c) const;
  friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b);
  bool operator==(const TensorOperator& o) const;
  bool operator!=(const TensorOperator& o) const { return !(*this == o); }

  // Sparse vector image.
  std::map<BasisIndex, LaurentPoly> apply(const std::map<BasisIndex, LaurentPoly>& x) const;

 private:
  int n_;
  std::vector<Column> cols_;
  void check_size(const TensorOperator& o) const;
};

enum class UGen { E, F, K, Kinv };
const char* ugen_name(UGen g);

// Block acting on sites (i, i+1) in the basis {x_01, x_10}; x_00 and x_11 are killed.
struct TwoSiteBlock {
  LaurentPoly a, b, c, d;  // [[a, b], [c, d]]
  static TwoSiteBlock standard();  // [[v^-1, -1], [-1, v]]
};

TensorOperator e_op(int n, int i);
TensorOperator e_op_with(int n, int i, const TwoSiteBlock& block);

// Single-site actions; the default is the two-dimensional module V(1).
struct SiteAction {
  // Each maps a site value to (image value, coefficient), or coefficient 0.
  std::pair<int, LaurentPoly> e[2], f[2];
  static SiteAction standard();
  static SiteAction swapped();  // E and F exchanged; used as a negative control
};

TensorOperator u_gen_op(int n, UGen g, const SiteAction& site = SiteAction::standard());

bool verify_uu_relations(int n, const SiteAction& site = SiteAction::standard());
bool verify_commutation(int n, const TwoSiteBlock& block = TwoSiteBlock::standard());
// e_op relations: e^2 = delta e, e_i e_{i+-1} e_i = e_i, far commutation.
bool verify_tl_action(int n);

struct WeightSpace {
  int weight;
  std::vector<BasisIndex> basis;  // increasing
};
WeightSpace weight_space(int n, int weight);
// Every nonzero entry of E (F) raises (lowers) the weight by exactly 2.
bool weight_shift_check(int n);

struct MaxVectors {
  int n, lambda;
  WeightSpace space;
  std::vector<std::vector<LaurentPoly>> vectors;  // coordinates over space.basis, primitive
  std::vector<std::size_t> free_coords;           // vectors[j] vanishes at free_coords[l] for l != j
};
MaxVectors maximal_vectors(int n, int lambda);

struct DimensionAudit {
  int n = 0;
  mpz_class tensor_dim;       // 2^n
  mpz_class weighted_sum;     // sum (k+1) |M(k)|
  mpz_class catalan;          // Cat(n)
  mpz_class square_sum;       // sum |M(k)|^2
  long span_rank = -1;        // -1 when skipped
  std::string span_method;    // "mod-p", "generic" or "skipped"
  bool ok() const {
    return weighted_sum == tensor_dim && square_sum == catalan && (span_rank < 0 || span_rank == catalan);
  }
};
// Span rank is computed for n <= span_bound; the audit itself refuses n > bound.
DimensionAudit dimension_audit(int n, int bound = 10, int span_bound = 8);

struct MaxModuleReport {
  bool preserved = false, relations = false, traces = false;
  bool ok() const { return preserved && relations && traces; }
};
MaxModuleReport max_module_check(int n, int lambda);

namespace kernels {
// Commutators [e_op(n,i), g] for all i and g in {E, F, K}.
bool commutators_serial(int n, const TwoSiteBlock& block);
bool commutators_parallel(int n, const TwoSiteBlock& block);
}  // namespace kernels

}  // namespace tl
