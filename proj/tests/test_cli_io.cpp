#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tl/json.hpp"
#include "tl/render.hpp"

using namespace tl;
using oracle::make;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(TL_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("laurent JSON round trip") {
  LaurentPoly p = LaurentPoly::monomial(Var::V, -2, 3) - LaurentPoly::monomial(Var::V, 5);
  CHECK(to_json(p).dump() == R"({"var":"v","terms":[[-2,3],[5,-1]]})");
  CHECK(laurent_from_json(to_json(p)) == p);
  CHECK(laurent_from_json(Json::parse("7")) == LaurentPoly(7));
  mpz_class big("123456789012345678901234567890");
  LaurentPoly b(big, Var::Delta);
  CHECK(to_json(b)["terms"][0][1] == "123456789012345678901234567890");
  CHECK(laurent_from_json(to_json(b)) == b);
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"var":"v","terms":[[2,1],[1,1]]})")), Error);
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"var":"w","terms":[]})")), Error);
}

TEST_CASE("diagram JSON round trip") {
  for (const auto& d : enumerate_diagrams(4)) CHECK(diagram_from_json(to_json(d)) == d);
  CHECK(to_json(Diagram::generator(2, 1)).dump() == R"({"n":2,"pairs":[["T1","T2"],["B1","B2"]]})");
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"n":2,"pairs":[["T1","B2"],["T2","B1"]]})")), Error);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"pairs":[]})")), Error);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"n":"2","pairs":[]})")), Error);
}

TEST_CASE("other JSON round trips") {
  HalfDiagram h = HalfDiagram::validate(6, {{2, 5}, {3, 4}});
  CHECK(half_from_json(to_json(h)) == h);
  Word w = Word::make(5, {1, 3, 2});
  CHECK(word_from_json(to_json(w)) == w);
  NormalForm nf = NormalForm::make(6, {{3, 1}, {4, 3}});
  CHECK(nf_from_json(to_json(nf)) == nf);
  TLElement x = TLElement::generator(3, 1, CoeffRing::V) + TLElement::identity(3, CoeffRing::V).scaled(LaurentPoly::monomial(Var::V, -1));
  CHECK(element_from_json(to_json(x)) == x);
  CHECK(element_from_json(to_json(Diagram::generator(3, 2))) == TLElement::generator(3, 2, CoeffRing::Delta));
  LabeledSkewShape s = theta(from_permutation({3, 5, 1, 2, 4, 6, 7, 9, 8}));
  CHECK(skew_from_json(to_json(s)) == s);
  CombObject t = TwoRowTableau::make({1, 2, 4}, {3});
  CHECK(comb_from_json(to_json(t), Rep::Tableau) == t);
  CHECK_THROWS_AS(comb_from_json(Json::parse(R"({"steps":5})"), Rep::Walk), Error);
}

TEST_CASE("normal form result JSON is compact and ordered") {
  auto r = normal_form(Word::make(6, {3, 2, 1, 4, 3, 5, 4}));
  CHECK(to_json(r).dump() == R"({"exponent":0,"blocks":[[3,1],[4,3],[5,4]]})");
}

TEST_CASE("ascii render golden files") {
  Diagram eight = make(8, {{"T1", "B1"}, {"T2", "T7"}, {"T3", "T4"}, {"T5", "T6"}, {"T8", "B6"}, {"B2", "B5"}, {"B3", "B4"}, {"B7", "B8"}});
  CHECK(render_ascii(eight) == golden("diagram8.txt"));
  Diagram ten = make(10, {{"T1", "B5"}, {"T2", "T9"}, {"T3", "T8"}, {"T4", "T7"}, {"T5", "T6"}, {"T10", "B6"},
                          {"B1", "B2"}, {"B3", "B4"}, {"B7", "B10"}, {"B8", "B9"}});
  CHECK(render_ascii(ten) == golden("diagram10.txt"));
  CHECK(render_ascii(Diagram::identity(3)) == golden("identity3.txt"));
  CHECK(render_ascii(HalfDiagram::validate(8, {{2, 7}, {3, 4}, {5, 6}})) == golden("half8.txt"));
  CHECK(render_skew(theta(from_permutation({3, 5, 1, 2, 4, 6, 7, 9, 8}))) == golden("skew9.txt"));
}

TEST_CASE("render shape invariants") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& d : enumerate_diagrams(n)) {
      std::string r = render_ascii(d);
      CHECK(r.back() == '\n');
      CHECK(r.find(" \n") == std::string::npos);
      std::string first = r.substr(0, r.find('\n'));
      CHECK(std::count(first.begin(), first.end(), 'o') == n);
    }
}
