#pragma once

// Exact elimination over an integral domain T. T needs +, -, * and the free
// functions is_zero(T), exact_div(T, T) and one_like(T).

#include <cstddef>
#include <cstdint>
#include <exception>
#include <utility>
#include <vector>

#include "tl/error.hpp"
#include "tl/ring.hpp"  // is_zero / exact_div / one_like overloads for the scalar types

namespace tl {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

// Replays the first exception thrown inside an OpenMP region after it ends.
class OmpErrorSlot {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(tl_omp_error)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

// One Bareiss step: rows in [from, to) other than the pivot row r are updated
// against it at column c, dividing by the previous pivot.
template <class T>
void bareiss_update(Matrix<T>& m, std::size_t r, std::size_t c, const T& prev, std::size_t from, std::size_t to,
                    std::size_t col_from, bool parallel) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  OmpErrorSlot slot;
  const long lo = static_cast<long>(from), hi = static_cast<long>(to);
#pragma omp parallel for schedule(dynamic) if (parallel && hi - lo > 8)
  for (long ii = lo; ii < hi; ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    if (i == r) continue;
    slot.run([&] {
      const T factor = m[i][c];
      for (std::size_t j = col_from; j < cols; ++j) {
        if (j == c) continue;
        T val = m[r][c] * m[i][j] - factor * m[r][j];
        m[i][j] = exact_div(val, prev);
      }
      m[i][c] = m[i][c] - m[i][c];
    });
  }
  slot.rethrow();
}

}  // namespace detail

// Rank by fraction-free forward elimination.
template <class T>
std::size_t bareiss_rank(Matrix<T> m, bool parallel = false) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  T prev = one_like(m[0][0]);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    detail::bareiss_update(m, r, c, prev, r + 1, rows, c, parallel);
    prev = m[r][c];
    ++r;
  }
  return r;
}

// Determinant of a square matrix by Bareiss elimination.
template <class T>
T bareiss_det(Matrix<T> m, bool parallel = false) {
  const std::size_t n = m.size();
  if (n == 0) throw Error("determinant of empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw Error("determinant of non-square matrix");
  T prev = one_like(m[0][0]);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m[p][k])) ++p;
    if (p == n) return m[0][0] - m[0][0];
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    detail::bareiss_update(m, k, k, prev, k + 1, n, k, parallel);
    prev = m[k][k];
  }
  return negate ? T(-prev) : prev;
}

template <class T>
struct GaussJordan {
  Matrix<T> m;                      // reduced matrix; rank rows carry the pivots
  std::vector<std::size_t> pivots;  // pivot column of row k
  T d;                              // common pivot value
};

// Fraction-free Gauss-Jordan: on return every pivot entry equals d and pivot
// columns are zero off the pivot.
template <class T>
GaussJordan<T> fraction_free_gauss_jordan(Matrix<T> m, bool parallel = false) {
  GaussJordan<T> out{{}, {}, T{}};
  if (m.empty()) {
    out.m = std::move(m);
    return out;
  }
  const std::size_t rows = m.size(), cols = m[0].size();
  T prev = one_like(m[0][0]);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    detail::bareiss_update(m, r, c, prev, 0, rows, 0, parallel);
    prev = m[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  out.d = prev;
  out.m = std::move(m);
  return out;
}

// Kernel basis of an integral-domain matrix with `cols` columns: one vector per
// free column f, with entry d at f and -m[k][f] at pivot column k.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& a, std::size_t cols, const T& one, bool parallel = false) {
  std::vector<std::vector<T>> basis;
  if (a.empty()) {
    for (std::size_t f = 0; f < cols; ++f) {
      std::vector<T> x(cols, one - one);
      x[f] = one;
      basis.push_back(std::move(x));
    }
    return basis;
  }
  auto gj = fraction_free_gauss_jordan(a, parallel);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : gj.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> x(cols, one - one);
    x[f] = gj.d;
    for (std::size_t k = 0; k < gj.pivots.size(); ++k) x[gj.pivots[k]] = x[gj.pivots[k]] - gj.m[k][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

// Rank over the prime field F_p by ordinary elimination; entries must be < p < 2^63.
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p, bool parallel = false) {
  if (m.empty()) return 0;
  auto mul = [p](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  };
  auto inv = [&](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  };
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const std::uint64_t pinv = inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = mul(m[r][j], pinv);
    const long lo = static_cast<long>(r + 1), hi = static_cast<long>(rows);
#pragma omp parallel for schedule(static) if (parallel)
    for (long i = lo; i < hi; ++i) {
      auto& row = m[static_cast<std::size_t>(i)];
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t t = mul(f, m[r][j]);
        row[j] = row[j] >= t ? row[j] - t : row[j] + p - t;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace tl
