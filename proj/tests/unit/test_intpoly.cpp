#include <doctest.h>

#include <random>

#include "../support/oracle.hpp"
#include "monodromy/intpoly.hpp"

using namespace monodromy;

namespace {
const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

BiPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, max_deg);
  BiPoly f;
  for (int t = 0; t < 4; ++t) {
    const int i = deg(rng), j = deg(rng);
    f += BiPoly::monomial(i, j, coeff(rng));
  }
  return f;
}
}  // namespace

TEST_CASE("ring operations") {
  CHECK(norm4() * BiPoly(1) == norm4());
  CHECK((norm3() * norm3()).eval(2, 1) == 9);
  CHECK((norm4() - norm4()).is_zero());
  CHECK(norm3().str() == "x^2 - x*y + y^2");
  CHECK((X + Y).pow(2) == X * X + BiPoly(2) * X * Y + Y * Y);
  CHECK((-norm4()).eval(1, 1) == -2);
  CHECK(BiPoly().total_degree() == -1);
  CHECK(norm3().total_degree() == 2);
}

TEST_CASE("eval reference values") {
  CHECK(norm3().eval(1, 0) == 1);
  CHECK(norm3().eval(2, 1) == 3);
  CHECK(norm4().eval(1, 1) == 2);
}

TEST_CASE("substitute_linear reference values") {
  CHECK(substitute_linear(norm4(), Mat2(0, -1, 1, 0)) == norm4());
  CHECK(substitute_linear(norm3(), Mat2(1, -1, 1, 0)) == norm3());
  CHECK(substitute_linear(X, Mat2(0, 1, 1, 0)) == Y);
}

TEST_CASE("substitution is a ring automorphism and commutes with eval") {
  std::mt19937_64 rng(7);
  const std::vector<Mat2> ms = {Mat2(0, 1, 1, 0), Mat2(2, 1, 1, 1), Mat2(1, -1, 1, 0), Mat2(-1, 3, 0, -1)};
  for (int i = 0; i < 200; ++i) {
    const BiPoly f = random_poly(rng, 3), g = random_poly(rng, 3);
    const Mat2& m = ms[static_cast<std::size_t>(i) % ms.size()];
    CHECK(substitute_linear(f * g, m) == substitute_linear(f, m) * substitute_linear(g, m));
    CHECK(substitute_linear(f + g, m) == substitute_linear(f, m) + substitute_linear(g, m));
    for (long long x = -2; x <= 2; ++x) {
      for (long long y = -2; y <= 2; ++y) {
        CHECK((f * g).eval(x, y) == f.eval(x, y) * g.eval(x, y));
        CHECK((f - g).eval(x, y) == f.eval(x, y) - g.eval(x, y));
        CHECK(substitute_linear(f, m).eval(x, y) ==
              f.eval(m.a() * x + m.b() * y, m.c() * x + m.d() * y));
      }
    }
  }
}

TEST_CASE("jacobian") {
  CHECK(jacobian(norm4(), X * X * Y * Y) == BiPoly::monomial(3, 1, 4) - BiPoly::monomial(1, 3, 4));
  const BiPoly f = norm3();
  CHECK(jacobian(f, f).is_zero());
  CHECK(jacobian(f, f * f).is_zero());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const BiPoly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
    CHECK(jacobian(a, b) == -jacobian(b, a));
    CHECK(jacobian(a + c, b) == jacobian(a, b) + jacobian(c, b));
    CHECK(jacobian(BiPoly(3) * a, b) == BiPoly(3) * jacobian(a, b));
  }
  CHECK(partial(X * X * Y, Var::x) == BiPoly::monomial(1, 1, 2));
  CHECK(partial(X * X * Y, Var::y) == X * X);
}

TEST_CASE("jacobian of N3 and the sixth power sum has the factor (2x - y)(2y - x)") {
  const BiPoly j = jacobian(norm3(), sixth_power_sum());
  CHECK_FALSE(j.is_zero());
  for (long long t = -4; t <= 4; ++t) {
    CHECK(j.eval(t, 2 * t) == 0);  // on 2x - y = 0
    CHECK(j.eval(2 * t, t) == 0);  // on 2y - x = 0
  }
}

TEST_CASE("sixth_power_sum") {
  const BiPoly s6 = sixth_power_sum();
  CHECK(s6.eval(1, 0) == 2);
  CHECK(s6.eval(0, 1) == 2);
  CHECK(s6.eval(1, 1) == 2);  // (1 + w) = -w^2, so (1 + w)^6 = 1
  for (long long x = -6; x <= 6; ++x)
    for (long long y = -6; y <= 6; ++y) CHECK(s6.eval(x, y) == oracle::sixth_power_sum_complex(x, y));
  CHECK(homogeneous_part(s6, 6) == s6);
}

TEST_CASE("homogeneous_part") {
  const BiPoly n2 = norm4() * norm4();
  CHECK(homogeneous_part(n2, 4) == n2);
  CHECK(homogeneous_part(BiPoly(2) - n2, 4) == -n2);
  CHECK(homogeneous_part(norm3() + BiPoly(1), 0) == BiPoly(1));
  CHECK(homogeneous_part(norm3(), 1).is_zero());
}

TEST_CASE("UniPoly arithmetic and printing") {
  const UniPoly t = UniPoly::t();
  const UniPoly g = t * t + UniPoly::from_ints({-2, 2});
  CHECK(g.str() == "t^2 + 2*t - 2");
  CHECK(g.eval(3) == 13);
  CHECK(g.degree() == 2);
  CHECK((g - g).is_zero());
  CHECK(g.compose(norm3()).eval(2, 1) == 13);
}

TEST_CASE("express_in_norm and integer root splitting") {
  // f3 and f6 written directly as polynomials in N3.
  const UniPoly t = UniPoly::t();
  const UniPoly g3 = -((t + UniPoly::from_ints({1})) * (t * t + UniPoly::from_ints({-2, 2})));
  const UniPoly g6 = (t - UniPoly::from_ints({1})) * (t * t + UniPoly::from_ints({-2, -2}));
  const auto e3 = express_in_norm(g3.compose(norm3()), norm3());
  REQUIRE(e3.has_value());
  CHECK(*e3 == g3);
  CHECK(split_integer_roots(*e3).str("N3") == "-(N3 + 1)*(N3^2 + 2*N3 - 2)");
  const auto e6 = express_in_norm(g6.compose(norm3()), norm3());
  REQUIRE(e6.has_value());
  CHECK(split_integer_roots(*e6).str("N3") == "(N3 - 1)*(N3^2 - 2*N3 - 2)");
  CHECK(split_integer_roots(*e6).expand() == *e6);
  CHECK_FALSE(express_in_norm(X, norm3()).has_value());
  CHECK_FALSE(express_in_norm(X * X, norm4()).has_value());
  const auto c = express_in_norm(BiPoly(5), norm4());
  REQUIRE(c.has_value());
  CHECK(*c == UniPoly::from_ints({5}));
}

TEST_CASE("express_in_norm round trip on random polynomials in N") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> coeff(-9, 9);
  for (int i = 0; i < 100; ++i) {
    std::vector<BigInt> cs;
    for (int k = 0; k < 4; ++k) cs.emplace_back(coeff(rng));
    const UniPoly g(cs);
    for (const BiPoly& n : {norm3(), norm4()}) {
      const auto back = express_in_norm(g.compose(n), n);
      REQUIRE(back.has_value());
      CHECK(*back == g);
      CHECK(back->compose(n) == g.compose(n));
    }
  }
}
