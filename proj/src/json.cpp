#include "tl/json.hpp"

namespace tl {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("malformed JSON: missing \"") + key + "\"");
  return j.at(key);
}

int int_of(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(std::string("malformed JSON: ") + what + " must be an integer");
  return j.get<int>();
}

std::vector<int> ints_of(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string("malformed JSON: ") + what + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(int_of(x, what));
  return out;
}

std::vector<std::pair<int, int>> int_pairs_of(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string("malformed JSON: ") + what + " must be an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (const auto& x : j) {
    auto v = ints_of(x, what);
    if (v.size() != 2) throw Error(std::string("malformed JSON: ") + what + " entries must be pairs");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

Json int_pairs(const std::vector<std::pair<int, int>>& v) {
  Json a = Json::array();
  for (auto [x, y] : v) a.push_back({x, y});
  return a;
}

template <class M>
Json int_map(const M& m) {
  Json o = Json::object();
  for (const auto& [k, v] : m) o[std::to_string(k)] = v;
  return o;
}

}  // namespace

Json to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class mpz_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw Error("malformed JSON: bad integer string");
    return z;
  }
  throw Error("malformed JSON: coefficient must be an integer");
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) terms.push_back({t.exp, to_json(t.coeff)});
  return {{"var", var_name(p.var())}, {"terms", terms}};
}

Json to_json(const RationalFunction& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

Json to_json(const FieldElement& x) {
  if (const auto* p = std::get_if<LaurentPoly>(&x)) return to_json(*p);
  if (const auto* q = std::get_if<mpq_class>(&x)) return q->get_str();
  const auto& m = std::get<ModP>(x);
  return {{"residue", m.value}, {"p", m.p}};
}

LaurentPoly laurent_from_json(const Json& j) {
  if (j.is_number_integer()) return LaurentPoly(mpz_from_json(j));
  Var var = var_from_name(field(j, "var").get<std::string>());
  std::vector<std::pair<int, mpz_class>> terms;
  int last = 0;
  bool first = true;
  for (const auto& t : field(j, "terms")) {
    if (!t.is_array() || t.size() != 2) throw Error("malformed JSON: terms must be [exp, coeff] pairs");
    int e = int_of(t[0], "exponent");
    if (!first && e <= last) throw Error("malformed JSON: exponents must be strictly increasing");
    first = false;
    last = e;
    terms.emplace_back(e, mpz_from_json(t[1]));
  }
  return LaurentPoly::from_terms(var, terms);
}

Json to_json(const Diagram& d) {
  Json pairs = Json::array();
  for (const auto& [a, b] : d.pairs()) pairs.push_back({endpoint_name(a), endpoint_name(b)});
  return {{"n", d.n()}, {"pairs", pairs}};
}

Diagram diagram_from_json(const Json& j) {
  const int n = int_of(field(j, "n"), "n");
  std::vector<std::pair<Endpoint, Endpoint>> pairs;
  for (const auto& p : field(j, "pairs")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw Error("malformed JSON: pairs must be [\"T1\",\"B1\"] style");
    pairs.emplace_back(parse_endpoint(p[0].get<std::string>()), parse_endpoint(p[1].get<std::string>()));
  }
  return Diagram::validate(n, pairs);
}

Json to_json(const HalfDiagram& h) { return {{"n", h.n()}, {"links", int_pairs(h.links())}}; }

HalfDiagram half_from_json(const Json& j) {
  return HalfDiagram::validate(int_of(field(j, "n"), "n"), int_pairs_of(field(j, "links"), "links"));
}

Json to_json(const Word& w) { return {{"n", w.n}, {"letters", w.letters}}; }

Word word_from_json(const Json& j) { return Word::make(int_of(field(j, "n"), "n"), ints_of(field(j, "letters"), "letters")); }

Json to_json(const NormalForm& nf) { return {{"n", nf.n}, {"blocks", int_pairs(nf.blocks)}}; }
Json to_json(const DualNormalForm& nf) { return {{"n", nf.n}, {"blocks", int_pairs(nf.blocks)}}; }

NormalForm nf_from_json(const Json& j) {
  return NormalForm::make(int_of(field(j, "n"), "n"), int_pairs_of(field(j, "blocks"), "blocks"));
}

Json to_json(const NormalFormResult& r) { return {{"exponent", r.exponent}, {"blocks", int_pairs(r.nf.blocks)}}; }
Json to_json(const DualNormalFormResult& r) { return {{"exponent", r.exponent}, {"blocks", int_pairs(r.nf.blocks)}}; }

Json to_json(const DyckPath& p) { return {{"n", p.n}, {"steps", p.steps}}; }

Json to_json(const TLElement& x) {
  Json terms = Json::array();
  for (const auto& [d, c] : x.terms()) terms.push_back({{"diagram", to_json(d)}, {"coeff", to_json(c)}});
  return {{"n", x.n()}, {"ring", ring_name(x.ring())}, {"terms", terms}};
}

TLElement element_from_json(const Json& j) {
  if (j.is_object() && j.contains("pairs")) return TLElement::basis(diagram_from_json(j), CoeffRing::Delta);
  const int n = int_of(field(j, "n"), "n");
  CoeffRing ring = ring_from_name(field(j, "ring").get<std::string>());
  TLElement x(n, ring);
  for (const auto& t : field(j, "terms")) x.add_term(diagram_from_json(field(t, "diagram")), laurent_from_json(field(t, "coeff")));
  return x;
}

Json to_json(const LabeledSkewShape& s) {
  Json cells = Json::array();
  for (auto [i, j] : s.cells) cells.push_back({i, j});
  return {{"cells", cells}};
}

LabeledSkewShape skew_from_json(const Json& j) {
  LabeledSkewShape s;
  for (auto c : int_pairs_of(field(j, "cells"), "cells")) s.cells.insert(c);
  return s;
}

Json to_json(const CompassSeq& c) { return c.to_string(); }

Json to_json(const SkewOutline& o) { return {{"lambda", o.lambda}, {"mu", o.mu}, {"left", o.left}}; }

Json to_json(const CombObject& x) {
  switch (rep_of(x)) {
    case Rep::Half: return to_json(std::get<HalfDiagram>(x));
    case Rep::Walk: return {{"steps", std::get<LatticeWalk>(x).steps}};
    case Rep::Bratteli: return {{"edges", std::get<BratteliPath>(x).edges}};
    case Rep::Tableau: {
      const auto& t = std::get<TwoRowTableau>(x);
      return {{"row1", t.row1}, {"row2", t.row2}};
    }
    case Rep::OneFactor: return {{"signs", std::get<OneFactor>(x).signs}};
  }
  return nullptr;
}

CombObject comb_from_json(const Json& j, Rep rep) {
  auto str = [&](const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw Error(std::string("malformed JSON: ") + key + " must be a string");
    return v.get<std::string>();
  };
  switch (rep) {
    case Rep::Half: return half_from_json(j);
    case Rep::Walk: return LatticeWalk::make(str("steps"));
    case Rep::Bratteli: return BratteliPath::make(str("edges"));
    case Rep::Tableau: return TwoRowTableau::make(ints_of(field(j, "row1"), "row1"), ints_of(field(j, "row2"), "row2"));
    case Rep::OneFactor: return OneFactor::make(ints_of(field(j, "signs"), "signs"));
  }
  throw Error("unknown representation");
}

Json to_json(const SemisimplicityReport& r) {
  Json closed = r.closed_form ? Json(*r.closed_form) : Json(nullptr);
  return {{"n", r.n},
          {"spec", r.spec.to_string()},
          {"lambda0", Json(std::vector<int>(r.lambda0.rbegin(), r.lambda0.rend()))},
          {"cell_dims", int_map(r.cell_dims)},
          {"simple_dims", int_map(r.simple_dims)},
          {"is_semisimple", r.is_semisimple},
          {"closed_form", closed},
          {"consistent", r.consistent()}};
}

Json to_json(const DimensionAudit& a) {
  return {{"n", a.n},
          {"tensor_dim", to_json(a.tensor_dim)},
          {"weighted_sum", to_json(a.weighted_sum)},
          {"catalan", to_json(a.catalan)},
          {"square_sum", to_json(a.square_sum)},
          {"span_rank", a.span_rank < 0 ? Json(nullptr) : Json(a.span_rank)},
          {"span_method", a.span_method},
          {"ok", a.ok()}};
}

Json to_json(const MaxVectors& m) {
  Json vecs = Json::array();
  for (const auto& v : m.vectors) {
    Json entries = Json::array();
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) entries.push_back({bitstring(m.space.basis[k], m.n), to_json(v[k])});
    vecs.push_back(entries);
  }
  return {{"n", m.n}, {"lambda", m.lambda}, {"dim", m.vectors.size()}, {"vectors", vecs}};
}

Json to_json(const HeckeReport& r) {
  return {{"quadratic", r.quadratic},         {"braid", r.braid},
          {"commute", r.commute},             {"inverse", r.inverse},
          {"kernel_zero", r.kernel_zero},     {"conjugation_shift", r.conjugation_shift},
          {"generator_shift", r.generator_shift}, {"normalizations", r.normalizations},
          {"all", r.all()}};
}

Json gram_to_json(int n, int lambda, const Matrix<LaurentPoly>& g) {
  Json basis = Json::array();
  const CellModule m(n, lambda);
  for (const auto& h : m.basis()) basis.push_back(to_json(h));
  Json rows = Json::array();
  for (const auto& row : g) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(r);
  }
  return {{"n", n}, {"lambda", lambda}, {"basis", basis}, {"entries", rows}};
}

}  // namespace tl
