#include <doctest.h>

#include <set>

#include "support.hpp"
#include "tl/combinat.hpp"

using namespace tl;

namespace {

const Rep kReps[] = {Rep::Half, Rep::Walk, Rep::Bratteli, Rep::Tableau, Rep::OneFactor};

// Lattice walks counted by the ballot recursion, independent of cat().
mpz_class ballot(int r, int u) {
  if (u < 0 || u > r) return 0;
  if (r == 0 && u == 0) return 1;
  return ballot(r - 1, u) + ballot(r, u - 1);
}

}  // namespace

TEST_CASE("cat numbers") {
  for (int n = 0; n <= 12; ++n) CHECK(cat(n, 0) == 1);
  CHECK(cat(8, 3) == 28);
  CHECK(cat(5, 3) == 0);
  for (int n = 0; n <= 16; ++n)
    for (int p = 0; 2 * p <= n; ++p) CHECK(cat(n, p) == ballot(n - p, p));
  for (int m = 1; m <= 10; ++m) CHECK(cat(2 * m, m) == oracle::catalan(m));
  // recursion over the last step
  for (int n = 1; n <= 16; ++n)
    for (int p = 1; 2 * p <= n; ++p) CHECK(cat(n, p) == cat(n - 1, p) + cat(n - 1, p - 1));
}

TEST_CASE("the eight-point half-diagram example") {
  HalfDiagram h = HalfDiagram::validate(8, {{2, 7}, {3, 4}, {5, 6}});
  LatticeWalk w = to_walk(h);
  CHECK(w.steps == "RRRURUUR");
  CHECK(w.p() == 3);
  auto t = std::get<TwoRowTableau>(convert(h, Rep::Tableau));
  CHECK(t.row1 == std::vector<int>{1, 2, 3, 5, 8});
  CHECK(t.row2 == std::vector<int>{4, 6, 7});
  CHECK(std::get<BratteliPath>(convert(h, Rep::Bratteli)).end() == std::pair<int, int>{5, 3});
  CHECK(std::get<HalfDiagram>(convert(t, Rep::Half)) == h);
}

TEST_CASE("all-defect half-diagram") {
  HalfDiagram h = HalfDiagram::validate(4, {});
  CHECK(to_walk(h).steps == "RRRR");
  auto t = std::get<TwoRowTableau>(convert(h, Rep::Tableau));
  CHECK(t.row1 == std::vector<int>{1, 2, 3, 4});
  CHECK(t.row2.empty());
  CHECK(std::get<OneFactor>(convert(h, Rep::OneFactor)).signs == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("validation of combinatorial objects") {
  CHECK_THROWS_AS(LatticeWalk::make("URR"), Error);
  CHECK_THROWS_AS(LatticeWalk::make("RXR"), Error);
  CHECK_THROWS_AS(TwoRowTableau::make({1, 3}, {2, 4, 5}), Error);
  CHECK_THROWS_AS(TwoRowTableau::make({2, 3}, {1}), Error);
  CHECK_THROWS_AS(OneFactor::make({-1, 1}), Error);
  CHECK_THROWS_AS(BratteliPath::make("DV"), Error);
  CHECK_THROWS_AS(rep_from_name("dyck"), Error);
}

TEST_CASE("one-factor pairings") {
  OneFactor f = OneFactor::make({1, 1, -1, 1, -1, -1});
  CHECK(f.pairings() == std::vector<std::pair<int, int>>{{1, 6}, {2, 3}, {4, 5}});
  CHECK(f.to_string() == "++-+--");
}

TEST_CASE("bijections round trip exhaustively") {
  for (int n = 1; n <= 10; ++n)
    for (int p = 0; 2 * p <= n; ++p) {
      auto halves = enumerate_half(n, p);
      CHECK(mpz_class(static_cast<unsigned long>(halves.size())) == cat(n, p));
      CHECK(enumerate_walks(n, p).size() == halves.size());
      for (Rep r : kReps) {
        std::set<std::string> images;
        for (const auto& h : halves) {
          CombObject x = convert(h, r);
          CHECK(rep_of(x) == r);
          CHECK(std::get<HalfDiagram>(convert(x, Rep::Half)) == h);
          for (Rep s : kReps) CHECK(convert(convert(x, s), r) == x);
          images.insert(to_walk(x).steps);
        }
        CHECK(images.size() == halves.size());
      }
    }
}

TEST_CASE("half to walk follows the closing rule") {
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; 2 * p <= n; ++p)
      for (const auto& h : enumerate_half(n, p)) {
        std::string expect;
        for (int k = 0; k < n; ++k) expect += (h.partner(k) >= 0 && h.partner(k) < k) ? 'U' : 'R';
        CHECK(to_walk(h).steps == expect);
      }
}

TEST_CASE("Bratteli path counts") {
  CHECK(count_paths_to(1, 0) == 1);
  CHECK(count_paths_to(2, 1) == 2);
  CHECK(count_paths_to(4, 3) == 14);
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= a; ++b) CHECK(count_paths_to(a, b) == cat(a + b, b));
}
