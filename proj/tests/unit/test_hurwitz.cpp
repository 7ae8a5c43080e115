#include <doctest.h>

#include <random>

#include "../support/oracle.hpp"
#include "../support/properties.hpp"
#include "monodromy/classify.hpp"
#include "monodromy/hurwitz.hpp"

using namespace monodromy;

namespace {
const Mat2 C4(0, -1, 1, 0);
const Mat2 C6(1, -1, 1, 0);
Mat2 T(long long p, long long q) { return transvection(PrimVec(p, q)); }

bool conjugates(const Mat2& d, const Factorization& a, const Factorization& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (d * a[i] * d.inverse() != b[i]) return false;
  return true;
}

Factorization conjugated(const Mat2& d, const Factorization& f) {
  std::vector<Mat2> out;
  for (const auto& m : f.entries()) out.push_back(d * m * d.inverse());
  return Factorization(out, f.decoration());
}
}  // namespace

TEST_CASE("Factorization validates its invariants") {
  CHECK_THROWS_AS(Factorization({T(1, 0)}), ProductError);
  CHECK_THROWS_AS(Factorization({Mat2(0, 1, 1, 0), Mat2(0, 1, 1, 0)}), NotSL2);
  CHECK_NOTHROW(Factorization({C4, C4.inverse()}));
  CHECK_THROWS_AS(Factorization({Mat2::identity()}, Decoration::eta), ShapeError);
  CHECK_THROWS_AS(Factorization(std::vector<Mat2>{}, Decoration::tau), ShapeError);
  CHECK(parse_decoration("eta") == Decoration::eta);
  CHECK_THROWS(parse_decoration("zeta"));
}

TEST_CASE("move words") {
  const auto w = parse_moves(" s3, s1' ,s2");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Move{3, Direction::forward});
  CHECK(w[1] == Move{1, Direction::backward});
  CHECK(format_moves(w) == "s3,s1',s2");
  CHECK(parse_moves("").empty());
  CHECK_THROWS_AS(parse_moves("s0"), ParseError);
  CHECK_THROWS_AS(parse_moves("t1"), ParseError);
  CHECK_THROWS_AS(parse_moves("s1,,s2"), ParseError);
}

TEST_CASE("standard and period-3 tuples") {
  const auto s = standard_tuple(12);
  REQUIRE(s.size() == 12);
  CHECK(s[0] == Mat2(1, -1, 0, 1));
  CHECK(s[1] == Mat2(1, 0, 1, 1));
  CHECK(s[2] == s[0]);
  CHECK_THROWS_AS(standard_tuple(13), NotRealizable);
  CHECK_THROWS_AS(standard_tuple(0), NotRealizable);
  const auto s24 = standard_tuple(24);
  CHECK(s24.size() == 24);
  CHECK(oracle::iterated_order(oracle::from(s24[0] * s24[1])) == 6);

  const auto z = period3_tuple(12);
  REQUIRE(z.size() == 12);
  CHECK(z[0] == T(1, 0));
  CHECK(z[1] == T(1, 1));
  CHECK(z[2] == T(0, 1));
  CHECK(z[3] == z[0]);
  CHECK(order_of(z[0] * z[1] * z[2]) == MatOrder::finite(4));
  CHECK(order_of(s[0] * s[1]) == MatOrder::finite(6));
  CHECK_THROWS_AS(period3_tuple(6), NotRealizable);
}

TEST_CASE("hurwitz_move") {
  const auto s = standard_tuple(12);
  const auto f = hurwitz_move(s, 1, Direction::forward);
  CHECK(f[0] == Mat2(0, -1, 1, 2));
  CHECK(f[1] == s[0]);
  CHECK(hurwitz_move(f, 1, Direction::backward) == s);
  CHECK_THROWS_AS(hurwitz_move(s, 0, Direction::forward), IndexError);
  CHECK_THROWS_AS(hurwitz_move(s, 12, Direction::forward), IndexError);
  CHECK(apply_moves(s, parse_moves("s1,s1'")) == s);
  CHECK(apply_moves(s, parse_moves("s4,s7',s2,s2',s7,s4'")) == s);
}

TEST_CASE("hurwitz moves are invertible (randomised)") {
  const auto r = props::move_invertibility(1000, 17);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}

TEST_CASE("rotate") {
  const auto s = standard_tuple(12);
  const auto r = rotate(s);
  CHECK(r[0] == s[1]);
  CHECK(r[11] == s[0]);
  CHECK(rotate(s, 12) == s);
  CHECK(rotate(s, -1) == rotate(s, 11));
  const auto w = decide_sim_conjugacy(s, r);
  REQUIRE(w.found());
  CHECK((*w.conjugator == C4 || *w.conjugator == -C4));
  const auto wz = decide_sim_conjugacy(period3_tuple(12), rotate(period3_tuple(12)));
  REQUIRE(wz.found());
  CHECK(order_of(*wz.conjugator) == MatOrder::finite(6));
  CHECK_THROWS_AS(rotate(build_eta12_example()), ShapeError);
}

TEST_CASE("garside action") {
  const auto s = standard_tuple(12);
  CHECK(garside_word(12).size() == 66);
  CHECK(garside_word_alternate(12).size() == 66);
  const auto g = garside_act(s);
  CHECK(apply_moves(s, garside_word(12)) == g);
  CHECK(apply_moves(s, garside_word_alternate(12)) == g);
  const auto w = decide_sim_conjugacy(g, period3_tuple(12));
  REQUIRE(w.found());
  CHECK(conjugates(*w.conjugator, g, period3_tuple(12)));
  // The square of the half twist acts by a global conjugation.
  const auto w2 = decide_sim_conjugacy(s, garside_act(g));
  REQUIRE(w2.found());
  CHECK(conjugates(*w2.conjugator, s, garside_act(g)));
}

TEST_CASE("tau action") {
  // (L, X1, X2) with L = (X1 X2)^-1.
  const Mat2 x1 = T(1, 0), x2 = T(0, 1);
  const Factorization f({(x1 * x2).inverse(), x1, x2}, Decoration::tau);
  const auto g = tau_act(f);
  CHECK(g[0] == x1.inverse() * f[0] * x1);
  CHECK(g[1] == x2);
  CHECK(g[2] == x1);
  CHECK(g.decoration() == Decoration::tau);
  CHECK_THROWS_AS(tau_act(standard_tuple(12)), ShapeError);
  // tau^(n-1) is a global conjugation (by (X1 ... X_{n-1})^-1).
  const auto s = standard_tuple(12);
  std::vector<Mat2> entries = s.entries();
  const Factorization h(entries, Decoration::tau);
  Factorization cur = h;
  for (int i = 0; i < 11; ++i) cur = tau_act(cur);
  const auto w = decide_sim_conjugacy(h, cur);
  CHECK(w.found());
}

TEST_CASE("eta action") {
  // M_inf commuting with X1 keeps the relation.
  const Mat2 a = T(1, 0), b = T(0, 1);
  const Factorization f({(a * b * a).inverse(), a, b, a}, Decoration::eta);
  const auto g = eta_act(f);
  CHECK(g[0] == a.inverse() * f[0] * a);
  CHECK(g[1] == b);
  CHECK(g[2] == a);
  CHECK(g[3] == f[3]);
  CHECK(product(g.entries()).is_identity());
  // Closed form equals iteration.
  const auto e = build_eta12_example();
  Factorization cur = e;
  for (int s = 1; s <= 12; ++s) {
    const auto closed = eta_power_entries(e, s);
    if (product(closed).is_identity()) {
      CHECK(eta_power(e, s).entries() == closed);
    } else {
      CHECK_THROWS_AS(eta_power(e, s), ProductError);
    }
  }
  CHECK(eta_act(e) == eta_power(e, 1));
  // M_inf not commuting with X1: rejected.
  const Factorization bad({(a * b * b).inverse(), a, b, b}, Decoration::eta);
  CHECK_THROWS_AS(eta_act(bad), ProductError);
  CHECK_THROWS_AS(eta_act(standard_tuple(12)), ShapeError);
}

TEST_CASE("decide_sim_conjugacy reference values") {
  const auto s = standard_tuple(12);
  const auto self = decide_sim_conjugacy(s, s);
  REQUIRE(self.found());
  CHECK((*self.conjugator == Mat2::identity() || *self.conjugator == -Mat2::identity()));
  const auto none = decide_sim_conjugacy(s, period3_tuple(12));
  CHECK(none.status == ConjugacyWitness::Status::not_conjugate);
  CHECK(none.complete);
  CHECK_FALSE(none.conjugator.has_value());
  CHECK_THROWS_AS(decide_sim_conjugacy(s, standard_tuple(24)), ShapeError);
}

TEST_CASE("decide_sim_conjugacy handles collinear anchors and trace mismatch") {
  // All entries are powers of one transvection: only the line is an anchor.
  const std::vector<Mat2> a = {T(1, 0), T(1, 0).pow(3)};
  const Mat2 d(2, 1, 1, 1);
  const std::vector<Mat2> b = {d * a[0] * d.inverse(), d * a[1] * d.inverse()};
  const auto w = decide_sim_conjugacy(a, b);
  REQUIRE(w.found());
  CHECK(*w.conjugator * a[1] * w.conjugator->inverse() == b[1]);
  const std::vector<Mat2> c = {T(1, 0), C4};
  const std::vector<Mat2> e = {T(1, 0), C6};
  CHECK(decide_sim_conjugacy(c, e).method == ConjugacyWitness::Method::trace_mismatch);
}

TEST_CASE("decide_sim_conjugacy without transvections uses the bounded fallback") {
  const std::vector<Mat2> a = {C4, C6};
  const Mat2 d(1, 1, 0, 1);
  const std::vector<Mat2> b = {d * C4 * d.inverse(), d * C6 * d.inverse()};
  const auto w = decide_sim_conjugacy(a, b);
  REQUIRE(w.found());
  CHECK(w.method == ConjugacyWitness::Method::brute_force);
  CHECK_FALSE(w.complete);
  const std::vector<Mat2> far = {Mat2(2, 1, 1, 1).pow(6) * C4 * Mat2(2, 1, 1, 1).pow(-6), C6};
  const auto miss = decide_sim_conjugacy(a, far, ConjugacyOptions{2});
  CHECK(miss.status == ConjugacyWitness::Status::inconclusive);
}

TEST_CASE("simultaneous conjugacy witnesses compose and invert") {
  std::mt19937_64 rng(5);
  const auto box = oracle::sl2_box(2);
  const auto s = standard_tuple(12);
  for (int i = 0; i < 50; ++i) {
    const Mat2 d1 = oracle::to_mat(box[rng() % box.size()]);
    const Mat2 d2 = oracle::to_mat(box[rng() % box.size()]);
    const auto a = conjugated(d1, s);
    const auto b = conjugated(d2, a);
    const auto wab = decide_sim_conjugacy(a, b);
    const auto wba = decide_sim_conjugacy(b, a);
    const auto wsb = decide_sim_conjugacy(s, b);
    REQUIRE(wab.found());
    REQUIRE(wba.found());
    REQUIRE(wsb.found());
    CHECK(conjugates(wab.conjugator->inverse(), b, a));
    CHECK(conjugates(*wab.conjugator * d1, s, b));
    CHECK(conjugates(*wsb.conjugator, s, b));
  }
}

TEST_CASE("decide_sim_conjugacy agrees with brute force (randomised)") {
  const auto r = props::conjugacy_vs_brute_force(500, 23);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}

TEST_CASE("solve_shift_conjugator") {
  const auto w = solve_shift_conjugator(standard_tuple(12), 1);
  REQUIRE(w.found());
  CHECK(order_of(*w.conjugator) == MatOrder::finite(4));
  const auto z = solve_shift_conjugator(period3_tuple(12), 1);
  REQUIRE(z.found());
  CHECK(order_of(*z.conjugator) == MatOrder::finite(6));
  CHECK(solve_shift_conjugator(standard_tuple(12), 2).found());
}

TEST_CASE("bounded Hurwitz path search") {
  const auto s = standard_tuple(12);
  const auto target = apply_moves(s, parse_moves("s3,s5'"));
  const auto path = hurwitz_path_search(s, target, 3);
  REQUIRE(path.has_value());
  CHECK(apply_moves(s, *path) == target);
  CHECK(path->size() <= 2);
  CHECK_FALSE(hurwitz_path_search(s, period3_tuple(12), 1).has_value());
}
