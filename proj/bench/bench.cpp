// Serial vs OpenMP timings for the parallel kernels. Results are compared for
// equality before any timing is reported.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "tl/algebra.hpp"
#include "tl/diagram.hpp"
#include "tl/repr.hpp"
#include "tl/schurweyl.hpp"

using namespace tl;

namespace {

double time_best(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::printf("%-28s %10.4f %10.4f %7.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel, agree ? "equal" : "MISMATCH");
}

TLElement dense(int n, int salt) {
  TLElement x(n, CoeffRing::Delta);
  int k = 0;
  for (const auto& d : enumerate_diagrams(n)) {
    if ((k + salt) % 3 != 0) x.add_term(d, LaurentPoly::monomial(Var::Delta, k % 3, k % 5 + 1));
    ++k;
  }
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);
  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial s", "parallel s", "speedup");
  bool all_equal = true;

  {
    const int n = 11;
    std::vector<Diagram> a, b;
    double s = time_best(reps, [&] { a = kernels::enumerate_diagrams_serial(n); });
    double p = time_best(reps, [&] { b = kernels::enumerate_diagrams_parallel(n); });
    row("enumerate_diagrams n=11", s, p, a == b);
    all_equal &= a == b;
  }
  {
    const int n = 7;
    TLElement x = dense(n, 0), y = dense(n, 1);
    TLElement a(n, CoeffRing::Delta), b(n, CoeffRing::Delta);
    double s = time_best(reps, [&] { a = kernels::multiply_serial(x, y); });
    double p = time_best(reps, [&] { b = kernels::multiply_parallel(x, y); });
    row("element multiply n=7", s, p, a == b);
    all_equal &= a == b;
  }
  {
    const int n = 12, lambda = 4;
    Matrix<LaurentPoly> a, b;
    double s = time_best(reps, [&] { a = kernels::gram_serial(n, lambda); });
    double p = time_best(reps, [&] { b = kernels::gram_parallel(n, lambda); });
    row("gram n=12 lambda=4", s, p, a == b);
    all_equal &= a == b;
  }
  {
    const int n = 8;
    bool a = false, b = false;
    double s = time_best(reps, [&] { a = kernels::commutators_serial(n, TwoSiteBlock::standard()); });
    double p = time_best(reps, [&] { b = kernels::commutators_parallel(n, TwoSiteBlock::standard()); });
    row("commutators n=8", s, p, a == b);
    all_equal &= a == b;
  }
  return all_equal ? 0 : 1;
}
