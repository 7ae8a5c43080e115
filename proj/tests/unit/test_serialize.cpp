#include <doctest.h>

#include "monodromy/serialize.hpp"

using namespace monodromy;

namespace {
template <class T, class F>
void round_trip(const T& value, F from) {
  const Json j = to_json(value);
  const Json reparsed = Json::parse(j.dump());
  CHECK(from(reparsed) == value);
  CHECK(to_json(from(reparsed)) == j);
}
}  // namespace

TEST_CASE("integers") {
  round_trip(BigInt(-17), bigint_from_json);
  const BigInt big = BigInt(1) << 100;
  CHECK(to_json(big).is_string());
  round_trip(big, bigint_from_json);
  CHECK_THROWS_AS(bigint_from_json(Json("abc")), ParseError);
  CHECK_THROWS_AS(bigint_from_json(Json(1.5)), ParseError);
}

TEST_CASE("matrices and vectors") {
  round_trip(Mat2(2, 1, 1, 1).pow(90), mat2_from_json);
  CHECK(to_json(Mat2(1, -1, 0, 1)).dump() == "[[1,-1],[0,1]]");
  round_trip(PrimVec(-3, 5), primvec_from_json);
  CHECK_THROWS_AS(mat2_from_json(Json::parse("[[1,2],[3,4]]")), ParseError);
  CHECK_THROWS_AS(mat2_from_json(Json::parse("[1,2,3,4]")), ParseError);
  CHECK_THROWS_AS(primvec_from_json(Json::parse("[2,4]")), ParseError);
}

TEST_CASE("factorizations") {
  round_trip(standard_tuple(12), factorization_from_json);
  round_trip(build_eta12_example(), factorization_from_json);
  round_trip(garside_act(standard_tuple(12)), factorization_from_json);
  const Json bare = to_json(period3_tuple(12))["entries"];
  CHECK(factorization_from_json(bare) == period3_tuple(12));
  Json broken = to_json(standard_tuple(12));
  broken["entries"].erase(0);
  CHECK_THROWS_AS(factorization_from_json(broken), ProductError);
  CHECK_THROWS_AS(factorization_from_json(Json::parse("{\"decoration\":\"none\"}")), ParseError);
}

TEST_CASE("polynomials") {
  round_trip(trace_polynomial(CanonicalC::c6), bipoly_from_json);
  round_trip(sixth_power_sum(), bipoly_from_json);
  CHECK(to_json(norm4()) == Json::parse("{\"0,2\":1,\"2,0\":1}"));
  round_trip(UniPoly::from_ints({2, 0, -1}), unipoly_from_json);
  CHECK_THROWS_AS(bipoly_from_json(Json::parse("{\"2\":1}")), ParseError);
  CHECK_THROWS_AS(bipoly_from_json(Json::parse("{\"-1,0\":1}")), ParseError);
}

TEST_CASE("orders and witnesses") {
  round_trip(MatOrder::finite(6), matorder_from_json);
  round_trip(MatOrder::parabolic(), matorder_from_json);
  round_trip(MatOrder::hyperbolic(), matorder_from_json);
  for (const auto& w : {decide_sim_conjugacy(standard_tuple(12), rotate(standard_tuple(12))),
                        decide_sim_conjugacy(standard_tuple(12), period3_tuple(12))}) {
    const auto back = witness_from_json(Json::parse(to_json(w).dump()));
    CHECK(back.status == w.status);
    CHECK(back.conjugator == w.conjugator);
    CHECK(back.complete == w.complete);
    CHECK(back.method == w.method);
  }
}

TEST_CASE("class reports") {
  for (const auto& r : classify_rotation_invariant(12)) {
    const Json j = to_json(r);
    const auto back = classreport_from_json(Json::parse(j.dump()));
    CHECK(back.period == r.period);
    CHECK(back.canonical == r.canonical);
    CHECK(back.conjugator == r.conjugator);
    CHECK(back.witness == r.witness);
    CHECK(back.seed == r.seed);
    CHECK(back.provenance == r.provenance);
    CHECK(back.representative == r.representative);
    CHECK(to_json(back) == j);
  }
}

TEST_CASE("report encodings") {
  const Json t = to_json(enumerate_conic_points(CanonicalC::c6));
  CHECK(t["case"] == "C6");
  CHECK(t["orbits"].size() == 2);
  CHECK(t["orbits"][1]["members"][0].dump() == "[2,1]");
  CHECK(to_json(parse_moves("s1,s2'")) == "s1,s2'");
  CHECK(to_json(analyze_eta_fixing(build_eta12_example()))["induced_order"] == 11);
  CHECK(to_json(derive_eta_contradiction())["reached"] == true);
}
