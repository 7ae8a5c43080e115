#include <doctest.h>

#include "../support/oracle.hpp"
#include "monodromy/sl2z.hpp"

using namespace monodromy;

namespace {
const Mat2 C3(0, -1, 1, -1);
const Mat2 C4(0, -1, 1, 0);
const Mat2 C6(1, -1, 1, 0);
Mat2 T(long long p, long long q) { return transvection(PrimVec(p, q)); }
}  // namespace

TEST_CASE("bigint helpers") {
  CHECK(to_string(BigInt(-42)) == "-42");
  CHECK(parse_bigint("123456789012345678901234567890").has_value());
  CHECK_FALSE(parse_bigint("12x").has_value());
  CHECK_FALSE(parse_bigint("").has_value());
  CHECK(floor_div(BigInt(-7), BigInt(2)) == -4);
  CHECK(floor_mod(BigInt(-7), BigInt(12)) == 5);
  CHECK(gcd(BigInt(-12), BigInt(18)) == 6);
  CHECK(*exact_sqrt(BigInt(144)) == 12);
  CHECK_FALSE(exact_sqrt(BigInt(2)).has_value());
  CHECK_FALSE(to_int64(BigInt(1) << 70).has_value());
}

TEST_CASE("PrimVec validation and normalisation") {
  CHECK_THROWS_AS(PrimVec(0, 0), InvalidVector);
  CHECK_THROWS_AS(PrimVec(2, 4), InvalidVector);
  CHECK(PrimVec(-1, 2).normalized() == PrimVec(1, -2));
  CHECK(PrimVec(0, -1).normalized() == PrimVec(0, 1));
  CHECK(PrimVec(1, 1).same_line(PrimVec(-1, -1)));
  CHECK_FALSE(PrimVec(1, 1).same_line(PrimVec(1, -1)));
}

TEST_CASE("Mat2 rejects determinants other than +-1") {
  CHECK_THROWS_AS(Mat2(2, 0, 0, 1), NotSL2);
  CHECK_NOTHROW(Mat2(0, 1, 1, 0));  // det -1 is allowed (GL2 elements)
}

TEST_CASE("transvection reference values") {
  CHECK(T(1, 0) == Mat2(1, -1, 0, 1));
  CHECK(T(0, 1) == Mat2(1, 0, 1, 1));
  CHECK(T(1, 1) == Mat2(2, -1, 1, 0));
  CHECK(T(-1, 0) == Mat2(1, -1, 0, 1));
}

TEST_CASE("transvection agrees with the column-image oracle on a box") {
  for (long long p = -10; p <= 10; ++p) {
    for (long long q = -10; q <= 10; ++q) {
      if (!oracle::primitive(p, q)) continue;
      const Mat2 m = T(p, q);
      CHECK(oracle::from(m) == oracle::transvection(p, q));
      CHECK(m.det() == 1);
      CHECK(m.trace() == 2);
      const auto back = transvection_vector(m);
      REQUIRE(back.has_value());
      CHECK(back->same_line(PrimVec(p, q)));
    }
  }
}

TEST_CASE("transvection_vector reference values") {
  CHECK(*transvection_vector(Mat2(1, -1, 0, 1)) == PrimVec(1, 0));
  CHECK_FALSE(transvection_vector(Mat2::identity()).has_value());
  CHECK_FALSE(transvection_vector(Mat2(1, -4, 0, 1)).has_value());
  // Oracle: no transvection in a box equals T_(1,0)^4.
  const auto target = oracle::from(Mat2(1, -4, 0, 1));
  for (long long p = -5; p <= 5; ++p)
    for (long long q = -5; q <= 5; ++q)
      if (oracle::primitive(p, q)) CHECK_FALSE(oracle::transvection(p, q) == target);
  CHECK_FALSE(transvection_vector(Mat2(-1, 0, 0, -1)).has_value());
  CHECK_FALSE(transvection_vector(C4).has_value());
}

TEST_CASE("conjugate reference values") {
  CHECK(conjugate(C4, T(1, 0)) == T(0, 1));
  CHECK(conjugate(Mat2::identity(), C6) == C6);
  CHECK(conjugate(C6, T(1, 0)) == T(1, 1));
  CHECK_THROWS_AS(conjugate(Mat2(0, 1, 1, 0), T(1, 0)), NotSL2);
}

TEST_CASE("order_of reference values") {
  CHECK(order_of(C4) == MatOrder::finite(4));
  CHECK(order_of(C3) == MatOrder::finite(3));
  CHECK(order_of(C6) == MatOrder::finite(6));
  CHECK(order_of(Mat2(1, -1, 0, 1)) == MatOrder::parabolic());
  CHECK(order_of(Mat2(-1, -4, 0, -1)) == MatOrder::parabolic());
  CHECK(oracle::iterated_order(oracle::from(Mat2(-1, -4, 0, -1))) == 0);
  CHECK(order_of(Mat2(2, 1, 1, 1)) == MatOrder::hyperbolic());
  CHECK(order_of(Mat2(-1, 0, 0, -1)) == MatOrder::finite(2));
  CHECK(order_of(Mat2::identity()) == MatOrder::finite(1));
  CHECK_THROWS_AS(order_of(Mat2(0, 1, 1, 0)), NotSL2);
  CHECK(MatOrder::finite(4).str() == "Finite(4)");
  CHECK(MatOrder::parabolic().str() == "Infinite(parabolic)");
}

TEST_CASE("order_of matches iterated multiplication on the [-3,3] box") {
  for (const auto& m : oracle::sl2_box(3)) {
    const int k = oracle::iterated_order(m);
    const MatOrder o = order_of(oracle::to_mat(m));
    if (k > 0) {
      CHECK(o == MatOrder::finite(k));
    } else {
      CHECK_FALSE(o.is_finite());
      CHECK((o.kind == MatOrder::Kind::parabolic) == (std::llabs(oracle::tr(m)) == 2));
    }
  }
}

TEST_CASE("abelianize reference values") {
  CHECK(abelianize(Mat2::identity()) == 0);
  CHECK(abelianize(Mat2(1, 1, 0, 1)) == 1);
  CHECK(abelianize(Mat2(0, -1, 1, 0)) == 9);
  for (long long p = -10; p <= 10; ++p)
    for (long long q = -10; q <= 10; ++q)
      if (oracle::primitive(p, q)) CHECK(abelianize(T(p, q)) == 11);
  CHECK_THROWS_AS(abelianize(Mat2(0, 1, 1, 0)), NotSL2);
}

TEST_CASE("S/T decomposition evaluates back to the matrix") {
  for (const auto& m : oracle::sl2_box(3)) {
    const Mat2 x = oracle::to_mat(m);
    CHECK(evaluate_st_word(st_decomposition(x)) == x);
  }
}

TEST_CASE("products of transvections equal to Id have length divisible by 12") {
  // Every length with a realisation among short standard products.
  Mat2 acc = Mat2::identity();
  for (int m = 1; m <= 36; ++m) {
    acc *= (m % 2 ? T(1, 0) : T(0, 1));
    CHECK(acc.is_identity() == (m % 12 == 0));
    if (acc.is_identity()) CHECK(m * 11 % 12 == 0);
  }
}

TEST_CASE("T_v^k is a transvection only for k = 1") {
  for (long long p = -5; p <= 5; ++p)
    for (long long q = -5; q <= 5; ++q) {
      if (!oracle::primitive(p, q)) continue;
      for (long long k = -10; k <= 10; ++k) {
        const auto v = transvection_vector(T(p, q).pow(k));
        CHECK(v.has_value() == (k == 1));
      }
    }
}

TEST_CASE("solve_vector_transporter") {
  const auto id = solve_vector_transporter(PrimVec(1, 0), PrimVec(1, 0));
  CHECK(id.particular == Mat2::identity());
  CHECK(id.step == T(1, 0));
  const auto rot = solve_vector_transporter(PrimVec(1, 0), PrimVec(0, 1));
  bool contains_c4 = false;
  for (long long k = -3; k <= 3; ++k) contains_c4 = contains_c4 || rot.at(k) == C4;
  CHECK(contains_c4);
  const auto f = solve_vector_transporter(PrimVec(1, 0), PrimVec(2, 1));
  for (long long k = -3; k <= 3; ++k) {
    const Mat2 d = f.at(k);
    CHECK(d.a() == 2);
    CHECK(d.c() == 1);
    CHECK(d.det() == 1);
  }
  const auto g = solve_vector_transporter(PrimVec(3, -2), PrimVec(-5, 7));
  for (long long k = -2; k <= 2; ++k) CHECK(g.at(k).apply(PrimVec(3, -2)) == PrimVec(-5, 7));
}

TEST_CASE("complete_to_sl2 and enumeration helpers") {
  for (const auto& v : primitive_vectors(6, false)) {
    const Mat2 m = complete_to_sl2(v);
    CHECK(m.det() == 1);
    CHECK(m.apply(PrimVec(1, 0)) == v);
  }
  CHECK(primitive_vectors(1, false).size() == 8);
  CHECK(primitive_vectors(1, true).size() == 4);
  CHECK(sl2_in_box(3).size() == oracle::sl2_box(3).size());
}

TEST_CASE("large entries stay exact") {
  const Mat2 big = Mat2(2, 1, 1, 1).pow(200);
  CHECK(big.det() == 1);
  CHECK(big * big.inverse() == Mat2::identity());
  CHECK_FALSE(to_int64(big.a()).has_value());
  CHECK(order_of(big) == MatOrder::hyperbolic());
}
