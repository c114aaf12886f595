#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tl/diagram.hpp"
#include "tl/laurent.hpp"
#include "tl/linalg.hpp"
#include "tl/ring.hpp"

namespace tl {

// {n, n-2, ..., n mod 2}, decreasing.
std::vector<int> lambda_set(int n);

// Cell module H(lambda): basis = half-diagrams with lambda defects, sorted by link list.
class CellModule {
 public:
  CellModule(int n, int lambda);

  int n() const { return n_; }
  int lambda() const { return lambda_; }
  const std::vector<HalfDiagram>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  // Position of h in the basis; throws if h is not a basis element.
  std::size_t index(const HalfDiagram& h) const;

 private:
  int n_, lambda_;
  std::vector<HalfDiagram> basis_;
  std::map<HalfDiagram, std::size_t> index_;
};

// Coordinates of d . basis[k] in H(lambda), coefficients in delta.
std::vector<LaurentPoly> act(const Diagram& d, const CellModule& m, std::size_t k);
Matrix<LaurentPoly> rep_matrix(int i, const CellModule& m);
Matrix<LaurentPoly> mat_mul(const Matrix<LaurentPoly>& a, const Matrix<LaurentPoly>& b);
// Relations of the generators' matrices on H(lambda): idempotent up to delta,
// M_i M_{i+-1} M_i = M_i, far commutation.
bool rep_relations_hold(const CellModule& m);

LaurentPoly bilinear(const HalfDiagram& h, const HalfDiagram& h2);
Matrix<LaurentPoly> gram(int n, int lambda);
LaurentPoly gram_det(int n, int lambda);
bool form_associativity_check(int n, int lambda);
// For each generator and cell basis element C_{s,t}, the image of e_i C_{s,t}
// modulo lower cells depends on s only.
bool cellular_c3_check(int n);

struct SemisimplicityReport {
  int n = 0;
  FieldSpec spec;
  std::set<int> lambda0;
  std::map<int, std::size_t> cell_dims;    // |M(lambda)|
  std::map<int, std::size_t> simple_dims;  // rank of the specialized form
  bool is_semisimple = false;
  // Closed-form prediction when the field lets us decide it.
  std::optional<bool> closed_form;
  bool consistent() const { return !closed_form || *closed_form == is_semisimple; }
};

SemisimplicityReport simple_dims(int n, const FieldSpec& spec);
// Rank of the Gram matrix of H(lambda) specialized at spec.
std::size_t gram_rank(int n, int lambda, const FieldSpec& spec);
// Closed-form semisimplicity when it can be decided; nullopt for delta-specs
// with delta != 0 and no v in the field.
std::optional<bool> closed_form_semisimple(int n, const FieldSpec& spec);

namespace kernels {
Matrix<LaurentPoly> gram_serial(int n, int lambda);
Matrix<LaurentPoly> gram_parallel(int n, int lambda);
}  // namespace kernels

}  // namespace tl
