#include "monodromy/serialize.hpp"

namespace monodromy {

namespace {

[[noreturn]] void fail(const std::string& what, const Json& j) {
  throw ParseError("expected " + what + ", got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("object with key '") + key + "'", j);
  return j.at(key);
}

}  // namespace

Json to_json(const BigInt& v) {
  if (auto small = to_int64(v)) return *small;
  return to_string(v);
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    if (auto v = parse_bigint(j.get<std::string>())) return *v;
  }
  fail("integer", j);
}

Json to_json(const Mat2& m) {
  return Json::array({Json::array({to_json(m.a()), to_json(m.b())}),
                      Json::array({to_json(m.c()), to_json(m.d())})});
}

Mat2 mat2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
      j[0].size() != 2 || j[1].size() != 2) {
    fail("2x2 matrix [[a,b],[c,d]]", j);
  }
  try {
    return Mat2(bigint_from_json(j[0][0]), bigint_from_json(j[0][1]), bigint_from_json(j[1][0]),
                bigint_from_json(j[1][1]));
  } catch (const NotSL2& e) {
    throw ParseError(std::string("matrix ") + j.dump() + ": " + e.what());
  }
}

Json to_json(const PrimVec& v) { return Json::array({to_json(v.p()), to_json(v.q())}); }

PrimVec primvec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) fail("vector [p,q]", j);
  try {
    return PrimVec(bigint_from_json(j[0]), bigint_from_json(j[1]));
  } catch (const InvalidVector& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Factorization& f) {
  Json entries = Json::array();
  for (const auto& m : f.entries()) entries.push_back(to_json(m));
  return Json{{"decoration", to_string(f.decoration())}, {"entries", entries}};
}

Factorization factorization_from_json(const Json& j) {
  const Json* entries = &j;
  Decoration deco = Decoration::none;
  if (j.is_object()) {
    entries = &field(j, "entries");
    if (j.contains("decoration")) {
      if (!j["decoration"].is_string()) fail("decoration string", j["decoration"]);
      deco = parse_decoration(j["decoration"].get<std::string>());
    }
  }
  if (!entries->is_array()) fail("array of matrices", *entries);
  std::vector<Mat2> ms;
  for (const auto& m : *entries) ms.push_back(mat2_from_json(m));
  return Factorization(std::move(ms), deco);
}

Json to_json(const BiPoly& f) {
  Json out = Json::object();
  for (const auto& [e, c] : f.terms()) {
    out[std::to_string(e.first) + "," + std::to_string(e.second)] = to_json(c);
  }
  return out;
}

BiPoly bipoly_from_json(const Json& j) {
  if (!j.is_object()) fail("polynomial object {\"i,j\": coeff}", j);
  BiPoly f;
  for (const auto& [key, value] : j.items()) {
    const auto comma = key.find(',');
    int i = 0, k = 0;
    try {
      if (comma == std::string::npos) throw std::invalid_argument(key);
      std::size_t used1 = 0, used2 = 0;
      i = std::stoi(key.substr(0, comma), &used1);
      k = std::stoi(key.substr(comma + 1), &used2);
      if (used1 != comma || used2 != key.size() - comma - 1 || i < 0 || k < 0) {
        throw std::invalid_argument(key);
      }
    } catch (const std::logic_error&) {
      throw ParseError("bad exponent key '" + key + "'");
    }
    f += BiPoly::monomial(i, k, bigint_from_json(value));
  }
  return f;
}

Json to_json(const UniPoly& g) {
  Json out = Json::array();
  for (const auto& c : g.coeffs()) out.push_back(to_json(c));
  return out;
}

UniPoly unipoly_from_json(const Json& j) {
  if (!j.is_array()) fail("coefficient array", j);
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(bigint_from_json(x));
  return UniPoly(std::move(c));
}

Json to_json(const MatOrder& o) {
  switch (o.kind) {
    case MatOrder::Kind::finite:
      return Json{{"kind", "finite"}, {"k", o.k}};
    case MatOrder::Kind::parabolic:
      return Json{{"kind", "parabolic"}};
    case MatOrder::Kind::hyperbolic:
      return Json{{"kind", "hyperbolic"}};
  }
  return Json();
}

MatOrder matorder_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (kind == "finite") {
    const Json& k = field(j, "k");
    if (!k.is_number_integer() || k.get<int>() < 1) fail("positive order", k);
    return MatOrder::finite(k.get<int>());
  }
  if (kind == "parabolic") return MatOrder::parabolic();
  if (kind == "hyperbolic") return MatOrder::hyperbolic();
  fail("order kind", kind);
}

Json to_json(const ConjugacyWitness& w) {
  Json out{{"status", to_string(w.status)},
           {"conjugator", w.conjugator ? to_json(*w.conjugator) : Json()},
           {"complete", w.complete},
           {"method", to_string(w.method)}};
  return out;
}

ConjugacyWitness witness_from_json(const Json& j) {
  ConjugacyWitness w;
  const std::string status = field(j, "status").get<std::string>();
  if (status == "found") {
    w.status = ConjugacyWitness::Status::found;
  } else if (status == "none") {
    w.status = ConjugacyWitness::Status::not_conjugate;
  } else if (status == "inconclusive") {
    w.status = ConjugacyWitness::Status::inconclusive;
  } else {
    fail("witness status", j["status"]);
  }
  if (j.contains("conjugator") && !j["conjugator"].is_null()) {
    w.conjugator = mat2_from_json(j["conjugator"]);
  }
  w.complete = j.value("complete", true);
  const std::string method = j.value("method", "trace-mismatch");
  using M = ConjugacyWitness::Method;
  for (M m : {M::trace_mismatch, M::anchor_pair, M::anchor_line, M::brute_force}) {
    if (to_string(m) == method) w.method = m;
  }
  return w;
}

Json to_json(const ClassReport& r) {
  return Json{{"period", r.period},
              {"canonical", r.canonical},
              {"conjugator", to_json(r.conjugator)},
              {"conjugator_order", order_of(r.conjugator).str()},
              {"witness", to_json(r.witness)},
              {"seed", to_json(r.seed)},
              {"provenance", r.provenance},
              {"representative", to_json(r.representative)}};
}

ClassReport classreport_from_json(const Json& j) {
  ClassReport r;
  r.period = field(j, "period").get<int>();
  r.canonical = field(j, "canonical").get<std::string>();
  r.conjugator = mat2_from_json(field(j, "conjugator"));
  r.witness = mat2_from_json(field(j, "witness"));
  r.seed = primvec_from_json(field(j, "seed"));
  r.provenance = field(j, "provenance").get<std::string>();
  r.representative = factorization_from_json(field(j, "representative"));
  return r;
}

Json to_json(const std::vector<Move>& word) { return format_moves(word); }

Json to_json(const ConicTable& t) {
  Json orbits = Json::array();
  for (const auto& o : t.orbits) {
    Json members = Json::array();
    for (const auto& v : o.members) members.push_back(to_json(v));
    orbits.push_back(Json{{"members", members},
                          {"norm", to_json(o.norm)},
                          {"trace", to_json(o.trace)},
                          {"product_order", o.product_order.str()}});
  }
  return Json{{"case", to_string(t.c)},
              {"norm_bound", to_json(t.norm_bound)},
              {"box", t.box},
              {"orbits", orbits}};
}

Json to_json(const SymmetryGroup& g) {
  Json gens = Json::array();
  for (const auto& m : g.generators) gens.push_back(to_json(m));
  return Json{{"order", g.order()}, {"structure", g.structure}, {"generators", gens}};
}

Json to_json(const GeneratorReport& r) {
  Json out{{"case", to_string(r.which)},
           {"f1", r.f1.str()},
           {"f2", r.f2.str()},
           {"group", to_json(r.group)},
           {"invariant", r.invariant},
           {"jacobian", r.jacobian.str()},
           {"jacobian_nonzero", r.jacobian_nonzero},
           {"degrees", Json::array({r.deg1, r.deg2})},
           {"expected_degree", r.expected_degree},
           {"degree_ok", r.degree_ok},
           {"reference_jacobian", r.reference.str()},
           {"constant", r.ratio ? Json(r.ratio->str()) : Json()}};
  if (r.divisible) out["divisible_by_6(2x-y)(2y-x)"] = *r.divisible;
  return out;
}

Json to_json(const NormHeadReport& r) {
  return Json{{"case", to_string(r.c)},
              {"k", r.k},
              {"head", r.head.str()},
              {"constant", r.constant ? to_json(*r.constant) : Json()},
              {"remainder_in_norm", r.remainder_in_norm ? Json(r.remainder_in_norm->str("N"))
                                                        : Json()},
              {"ok", r.ok()}};
}

Json to_json(const CheckResult& r) {
  return Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
}

Json to_json(const Derivation& d) {
  Json steps = Json::array();
  for (const auto& s : d.steps) {
    steps.push_back(Json{{"statement", s.statement}, {"verified", s.verified}, {"detail", s.detail}});
  }
  return Json{{"steps", steps}, {"contradiction", d.contradiction}, {"reached", d.reached()}};
}

Json to_json(const EtaAnalysis& a) {
  Json rows = Json::array();
  for (const auto& r : a.rows) {
    rows.push_back(Json{{"s", r.s},
                        {"product_ok", r.product_ok},
                        {"fixed", r.fixed},
                        {"witness", r.witness ? to_json(*r.witness) : Json()}});
  }
  return Json{{"rows", rows},
              {"minimal_power", a.minimal_power ? Json(*a.minimal_power) : Json()},
              {"probe", a.probe},
              {"probe_fixed", a.probe_fixed},
              {"induced_order", a.induced_order}};
}

Json to_json(const HalfRotationReport& r) {
  Json shifts = Json::array();
  for (std::size_t s = 0; s < r.shift_found.size(); ++s) {
    if (r.shift_found[s]) shifts.push_back(static_cast<int>(s + 1));
  }
  return Json{{"n", r.n},
              {"assignment_found", r.assignment_found},
              {"gamma", to_json(r.gamma)},
              {"delta", to_json(r.delta)},
              {"block_product", to_json(r.block_product)},
              {"block_order", r.block_order.str()},
              {"conjugate_shifts", shifts},
              {"minimal_shift", r.minimal_shift ? Json(*r.minimal_shift) : Json()},
              {"induced_order", r.induced_order}};
}

Json to_json(const DecoratedSolution& s) {
  return Json{{"C", to_json(s.c)}, {"tuple", to_json(s.tuple)}};
}

Json to_json(const Discrepancy& d) {
  return Json{{"item", d.item}, {"reference", d.reference}, {"computed", d.computed}};
}

}  // namespace monodromy
