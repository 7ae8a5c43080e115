#pragma once

#include <json.hpp>

#include "monodromy/classify.hpp"
#include "monodromy/hurwitz.hpp"
#include "monodromy/intpoly.hpp"
#include "monodromy/invariants.hpp"
#include "monodromy/sl2z.hpp"

namespace monodromy {

using Json = nlohmann::ordered_json;

// Integers are JSON numbers when they fit in int64 and decimal strings
// otherwise. All *_from_json functions throw ParseError on malformed input.

Json to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json to_json(const Mat2& m);  // [[a,b],[c,d]]
Mat2 mat2_from_json(const Json& j);

Json to_json(const PrimVec& v);  // [p,q]
PrimVec primvec_from_json(const Json& j);

/// {"decoration": "none", "entries": [...]}. A bare array of matrices is
/// also accepted on input as an undecorated tuple.
Json to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

Json to_json(const BiPoly& f);  // {"i,j": coeff}
BiPoly bipoly_from_json(const Json& j);

Json to_json(const UniPoly& g);  // ascending coefficient list
UniPoly unipoly_from_json(const Json& j);

Json to_json(const MatOrder& o);  // {"kind": "finite", "k": 4}
MatOrder matorder_from_json(const Json& j);

Json to_json(const ConjugacyWitness& w);
ConjugacyWitness witness_from_json(const Json& j);

Json to_json(const ClassReport& r);
ClassReport classreport_from_json(const Json& j);

Json to_json(const std::vector<Move>& word);  // the "s1,s2'" text

// Output-only report encodings.
Json to_json(const ConicTable& t);
Json to_json(const SymmetryGroup& g);
Json to_json(const GeneratorReport& r);
Json to_json(const NormHeadReport& r);
Json to_json(const CheckResult& r);
Json to_json(const Derivation& d);
Json to_json(const EtaAnalysis& a);
Json to_json(const HalfRotationReport& r);
Json to_json(const DecoratedSolution& s);
Json to_json(const Discrepancy& d);

}  // namespace monodromy
