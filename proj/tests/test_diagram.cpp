#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "support.hpp"
#include "tl/combinat.hpp"
#include "tl/diagram.hpp"

using namespace tl;
using oracle::make;

TEST_CASE("validate accepts planar matchings and canonicalizes") {
  Diagram d = make(8, {{"T1", "B1"}, {"T2", "T7"}, {"T3", "T4"}, {"T5", "T6"}, {"T8", "B6"}, {"B2", "B5"}, {"B3", "B4"}, {"B7", "B8"}});
  CHECK(d.n() == 8);
  CHECK(d.through_count() == 2);
  // pair order and orientation are irrelevant
  Diagram e = make(8, {{"B8", "B7"}, {"B4", "B3"}, {"B5", "B2"}, {"B6", "T8"}, {"T6", "T5"}, {"T4", "T3"}, {"T7", "T2"}, {"B1", "T1"}});
  CHECK(d == e);
  CHECK(make(1, {{"T1", "B1"}}) == Diagram::identity(1));
}

TEST_CASE("validate rejects crossings and bad matchings") {
  CHECK_THROWS_AS(make(2, {{"T1", "B2"}, {"T2", "B1"}}), Error);
  CHECK_THROWS_AS(make(2, {{"T1", "B1"}}), Error);
  CHECK_THROWS_AS(make(2, {{"T1", "B1"}, {"T1", "B2"}}), Error);
  CHECK_THROWS_AS(make(2, {{"T1", "B3"}, {"T2", "B2"}}), Error);
  CHECK_THROWS_AS(make(4, {{"T1", "T3"}, {"T2", "T4"}, {"B1", "B2"}, {"B3", "B4"}}), Error);
  CHECK_THROWS_AS(parse_endpoint("X1"), Error);
}

TEST_CASE("generators") {
  CHECK(Diagram::generator(2, 1) == make(2, {{"T1", "T2"}, {"B1", "B2"}}));
  CHECK(Diagram::generator(4, 3) == make(4, {{"T3", "T4"}, {"B3", "B4"}, {"T1", "B1"}, {"T2", "B2"}}));
  CHECK_THROWS_AS(Diagram::generator(3, 0), Error);
  CHECK_THROWS_AS(Diagram::generator(3, 3), Error);
}

TEST_CASE("multiplication follows the stacking rule") {
  Diagram e1 = Diagram::generator(2, 1);
  CHECK(multiply(e1, e1) == ScaledDiagram{1, e1});
  Diagram f1 = Diagram::generator(3, 1), f2 = Diagram::generator(3, 2);
  CHECK(multiply(multiply(f1, f2).diagram, f1) == ScaledDiagram{0, f1});
  // exhaustive comparison with the union-find oracle
  for (int n = 1; n <= 4; ++n) {
    auto all = enumerate_diagrams(n);
    for (const auto& a : all)
      for (const auto& b : all) CHECK(multiply(a, b) == oracle::stack(a, b));
  }
}

TEST_CASE("multiplication is associative") {
  auto all = enumerate_diagrams(4);
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (std::size_t j = 0; j < all.size(); j += 2)
      for (std::size_t k = 0; k < all.size(); k += 5) {
        auto ab = multiply(all[i], all[j]);
        auto ab_c = multiply(ab.diagram, all[k]);
        auto bc = multiply(all[j], all[k]);
        auto a_bc = multiply(all[i], bc.diagram);
        CHECK(ab_c.diagram == a_bc.diagram);
        CHECK(ab.loops + ab_c.loops == bc.loops + a_bc.loops);
      }
}

TEST_CASE("involution is an anti-automorphism") {
  auto all = enumerate_diagrams(4);
  for (const auto& a : all) {
    CHECK(involution(involution(a)) == a);
    for (const auto& b : all) {
      auto ab = multiply(a, b);
      auto ba = multiply(involution(b), involution(a));
      CHECK(ba.loops == ab.loops);
      CHECK(ba.diagram == involution(ab.diagram));
    }
  }
  CHECK(involution(Diagram::generator(5, 2)) == Diagram::generator(5, 2));
}

TEST_CASE("full and partial closure") {
  CHECK(close_full(Diagram::identity(3)) == 3);
  CHECK(close_full(Diagram::generator(2, 1)) == 1);
  CHECK(close_full(multiply(Diagram::generator(4, 1), Diagram::generator(4, 3)).diagram) == 2);
  for (const auto& d : enumerate_diagrams(5)) CHECK(close_full(d) == oracle::closure_loops(d));

  auto c = close_last(Diagram::identity(2));
  CHECK(c.loops == 1);
  CHECK(c.diagram == Diagram::identity(1));
  c = close_last(Diagram::generator(2, 1));
  CHECK(c.loops == 0);
  CHECK(c.diagram == Diagram::identity(1));
  c = close_last(Diagram::generator(3, 1));
  CHECK(c.loops == 1);
  CHECK(c.diagram == Diagram::generator(2, 1));
  // closing the last strand, then the rest, equals closing everything
  for (const auto& d : enumerate_diagrams(5)) {
    auto cl = close_last(d);
    CHECK(cl.loops + close_full(cl.diagram) == close_full(d));
  }
}

TEST_CASE("embedding adds a vertical strand") {
  CHECK(embed(Diagram::generator(3, 2)) == Diagram::generator(4, 2));
  auto all = enumerate_diagrams(3);
  for (const auto& a : all)
    for (const auto& b : all) {
      auto ab = multiply(a, b);
      auto eab = multiply(embed(a), embed(b));
      CHECK(eab.loops == ab.loops);
      CHECK(eab.diagram == embed(ab.diagram));
    }
}

TEST_CASE("enumeration matches Catalan numbers and a brute-force oracle") {
  CHECK(enumerate_diagrams(1).size() == 1);
  CHECK(enumerate_diagrams(3).size() == 5);
  CHECK(enumerate_diagrams(6).size() == 132);
  for (int n = 1; n <= 6; ++n) {
    auto lib = enumerate_diagrams(n);
    auto ref = oracle::all_diagrams(n);
    std::sort(ref.begin(), ref.end());
    CHECK(lib.size() == oracle::catalan(n));
    CHECK(lib == ref);  // canonical order is sorted order
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  for (int n = 1; n <= 8; ++n) CHECK(kernels::enumerate_diagrams_serial(n) == kernels::enumerate_diagrams_parallel(n));
}

TEST_CASE("enumeration bound") {
  CHECK(enumeration_bound() >= 12);
  CHECK_THROWS_AS(enumerate_diagrams(enumeration_bound() + 1), Error);
}

TEST_CASE("half-diagram enumeration") {
  CHECK(enumerate_half(4, 2).size() == 2);
  CHECK(enumerate_half(8, 3).size() == 28);
  CHECK(enumerate_half(5, 0).size() == 1);
  for (int n = 1; n <= 10; ++n)
    for (int p = 0; 2 * p <= n; ++p) {
      auto hs = enumerate_half(n, p);
      CHECK(hs.size() == oracle::binom(n, p) - oracle::binom(n, p - 1));
      CHECK(std::is_sorted(hs.begin(), hs.end()));
      for (const auto& h : hs) CHECK(h.link_count() == p);
    }
}

TEST_CASE("half-diagram validation") {
  CHECK_THROWS_AS(HalfDiagram::validate(4, {{1, 3}, {2, 4}}), Error);
  CHECK_THROWS_AS(HalfDiagram::validate(4, {{1, 3}}), Error);  // defect 2 trapped under a link
  CHECK_NOTHROW(HalfDiagram::validate(4, {{1, 4}, {2, 3}}));
}

TEST_CASE("cell glue and decomposition are inverse") {
  HalfDiagram all3 = HalfDiagram::validate(3, {});
  CHECK(cell_glue(all3, all3) == Diagram::identity(3));
  HalfDiagram link2 = HalfDiagram::validate(2, {{1, 2}});
  CHECK(cell_glue(link2, link2) == Diagram::generator(2, 1));
  auto dec = decompose(Diagram::identity(2));
  CHECK(dec.lambda == 2);
  CHECK(dec.s.link_count() == 0);
  dec = decompose(Diagram::generator(2, 1));
  CHECK(dec.lambda == 0);
  CHECK(dec.s == link2);
  CHECK(dec.t == link2);
  for (int n = 1; n <= 7; ++n)
    for (const auto& d : enumerate_diagrams(n)) {
      auto x = decompose(d);
      CHECK(x.lambda == d.through_count());
      CHECK(cell_glue(x.s, x.t) == d);
    }
}

TEST_CASE("action on half-diagrams") {
  Diagram d = make(6, {{"B5", "B6"}, {"T6", "B4"}, {"T1", "B3"}, {"B1", "B2"}, {"T2", "T5"}, {"T3", "T4"}});
  HalfDiagram h = HalfDiagram::validate(6, {{2, 5}, {3, 4}});
  auto r = act_on_half(d, h);
  CHECK(r.loops == 0);
  CHECK(r.half == HalfDiagram::validate(6, {{1, 6}, {2, 5}, {3, 4}}));
  for (const auto& g : enumerate_half(5, 1)) CHECK(act_on_half(Diagram::identity(5), g).half == g);
  auto e1 = act_on_half(Diagram::generator(4, 1), HalfDiagram::validate(4, {{1, 2}}));
  CHECK(e1.loops == 1);
  CHECK(e1.half == HalfDiagram::validate(4, {{1, 2}}));
  // action through glueing: d * (s glued to t) = d.s glued to t
  for (const auto& x : enumerate_diagrams(4))
    for (const auto& s : enumerate_half(4, 1)) {
      HalfDiagram t = HalfDiagram::validate(4, {{2, 3}});
      auto prod = multiply(x, cell_glue(s, t));
      auto act = act_on_half(x, s);
      if (act.half.defect_count() != s.defect_count()) continue;  // left the cell ideal
      CHECK(prod.diagram == cell_glue(act.half, t));
      CHECK(prod.loops == act.loops);
    }
}

TEST_CASE("bilinear pairing loops") {
  for (int n = 2; n <= 8; ++n)
    for (int p = 0; 2 * p <= n; ++p) {
      auto hs = enumerate_half(n, p);
      for (const auto& a : hs)
        for (const auto& b : hs) {
          auto [loops, ok] = oracle::pair_halves(a, b);
          CHECK(bilinear_loops(a, b) == (ok ? loops : -1));
        }
    }
}

TEST_CASE("diagram text round trip") {
  for (const auto& d : enumerate_diagrams(4))
    for (const auto& [a, b] : d.pairs()) {
      CHECK(parse_endpoint(endpoint_name(a)) == a);
      CHECK(parse_endpoint(endpoint_name(b)) == b);
    }
}
