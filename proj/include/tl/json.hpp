#pragma once

#include <json.hpp>

#include "tl/algebra.hpp"
#include "tl/combinat.hpp"
#include "tl/diagram.hpp"
#include "tl/laurent.hpp"
#include "tl/linalg.hpp"
#include "tl/repr.hpp"
#include "tl/ring.hpp"
#include "tl/schurweyl.hpp"
#include "tl/skewshape.hpp"
#include "tl/word.hpp"

namespace tl {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json to_json(const mpz_class& z);
mpz_class mpz_from_json(const Json& j);

Json to_json(const LaurentPoly& p);  // {"var":"v","terms":[[exp,coeff],...]}
Json to_json(const RationalFunction& r);
Json to_json(const FieldElement& x);
Json to_json(const Diagram& d);      // {"n":8,"pairs":[["T1","B1"],...]}
Json to_json(const HalfDiagram& h);  // {"n":8,"links":[[2,7],...]}
Json to_json(const Word& w);
Json to_json(const NormalForm& nf);
Json to_json(const DualNormalForm& nf);
Json to_json(const NormalFormResult& r);
Json to_json(const DualNormalFormResult& r);
Json to_json(const DyckPath& p);
Json to_json(const TLElement& x);
Json to_json(const LabeledSkewShape& s);
Json to_json(const CompassSeq& c);
Json to_json(const SkewOutline& o);
Json to_json(const CombObject& x);
Json to_json(const SemisimplicityReport& r);
Json to_json(const DimensionAudit& a);
Json to_json(const MaxVectors& m);
Json to_json(const HeckeReport& r);
Json gram_to_json(int n, int lambda, const Matrix<LaurentPoly>& g);

LaurentPoly laurent_from_json(const Json& j);
Diagram diagram_from_json(const Json& j);
HalfDiagram half_from_json(const Json& j);
Word word_from_json(const Json& j);
NormalForm nf_from_json(const Json& j);
TLElement element_from_json(const Json& j);
LabeledSkewShape skew_from_json(const Json& j);
CombObject comb_from_json(const Json& j, Rep rep);

}  // namespace tl
