#include "monodromy/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace monodromy {

namespace {

int element_order(const Mat2& m, int limit = 24) {
  Mat2 p = m;
  for (int k = 1; k <= limit; ++k) {
    if (p.is_identity()) return k;
    p *= m;
  }
  return 0;
}

std::string describe(const std::vector<Mat2>& elements) {
  const std::size_t n = elements.size();
  bool abelian = true;
  int max_order = 0;
  for (const auto& a : elements) {
    max_order = std::max(max_order, element_order(a));
    for (const auto& b : elements) abelian = abelian && a * b == b * a;
  }
  const std::string size = "(" + std::to_string(n) + ")";
  if (abelian) return (static_cast<std::size_t>(max_order) == n ? "cyclic" : "abelian") + size;
  // Non-abelian with a rotation r of index 2 and a reflection s, s r s = r^-1.
  for (const auto& r : elements) {
    if (static_cast<std::size_t>(element_order(r)) * 2 != n) continue;
    for (const auto& s : elements) {
      if (element_order(s) == 2 && s * r * s == r.inverse()) {
        bool outside = true;
        Mat2 p = r;
        for (std::size_t i = 0; i < n / 2; ++i, p *= r) outside = outside && !(p == s);
        if (outside) return "dihedral" + size;
      }
    }
  }
  return "group" + size;
}

}  // namespace

bool SymmetryGroup::contains(const Mat2& m) const {
  return std::binary_search(elements.begin(), elements.end(), m);
}

SymmetryGroup close_group(const std::vector<Mat2>& generators, std::size_t limit) {
  std::set<Mat2> seen{Mat2::identity()};
  std::vector<Mat2> frontier{Mat2::identity()};
  while (!frontier.empty()) {
    std::vector<Mat2> next;
    for (const auto& g : frontier) {
      for (const auto& h : generators) {
        Mat2 p = g * h;
        if (seen.insert(p).second) {
          if (seen.size() > limit) throw std::runtime_error("group closure exceeds limit");
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  SymmetryGroup g;
  g.generators = generators;
  g.elements.assign(seen.begin(), seen.end());
  g.structure = describe(g.elements);
  return g;
}

Commutant commutant(const Mat2& c, int box) {
  const Mat2 swap(0, 1, 1, 0);
  std::vector<Mat2> commuting;
  for (const auto& m : sl2_in_box(box)) {
    for (const Mat2& cand : {m, m * swap}) {
      if (cand * c == c * cand) commuting.push_back(cand);
    }
  }
  std::sort(commuting.begin(), commuting.end());
  commuting.erase(std::unique(commuting.begin(), commuting.end()), commuting.end());
  return {close_group(commuting), close_group({c, -Mat2::identity(), swap})};
}

bool check_invariance(const BiPoly& f, const SymmetryGroup& g) {
  return std::all_of(g.elements.begin(), g.elements.end(),
                     [&](const Mat2& m) { return substitute_linear(f, m) == f; });
}

std::string Ratio::str() const {
  return den == 1 ? to_string(num) : to_string(num) + "/" + to_string(den);
}

std::optional<Ratio> constant_ratio(const BiPoly& f, const BiPoly& g) {
  if (g.is_zero()) return std::nullopt;
  const auto& [e, gc] = *g.terms().begin();
  BigInt num = f.coeff(e.first, e.second);
  BigInt den = gc;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const BigInt d = gcd(num, den);
  if (d != 0) {
    num /= d;
    den /= d;
  }
  if (!(BiPoly(den) * f == BiPoly(num) * g)) return std::nullopt;
  return Ratio{num, den};
}

std::string to_string(GeneratorCase c) {
  return c == GeneratorCase::order4 ? "order4" : "order34_6";
}

bool GeneratorReport::structural_ok() const {
  return invariant && jacobian_nonzero && degree_ok && divisible.value_or(true);
}

GeneratorReport verify_generators(GeneratorCase which) {
  const BiPoly x = BiPoly::x(), y = BiPoly::y();
  GeneratorReport r{which, {}, {}, {}, false, {}, false, 0, 0, 0, false, {}, std::nullopt,
                    std::nullopt};
  int k = 0;
  if (which == GeneratorCase::order4) {
    k = 2;
    r.f1 = norm4();
    r.f2 = x * x * y * y;
    r.group = commutant(matrix_of(CanonicalC::c4)).extended;
    r.reference = BiPoly(2) * x.pow(3) * y - BiPoly(2) * x * y.pow(3);
  } else {
    k = 3;
    r.f1 = norm3();
    r.f2 = sixth_power_sum();
    r.group = commutant(matrix_of(CanonicalC::c6)).extended;
    r.reference = BiPoly(6) * (BiPoly(2) * x - y) * (BiPoly(2) * y - x) *
                  (y.pow(4) - BiPoly(9) * x * y.pow(3) + BiPoly(9) * x.pow(3) * y - x.pow(4));
  }
  r.invariant = check_invariance(r.f1, r.group) && check_invariance(r.f2, r.group);
  r.jacobian = jacobian(r.f1, r.f2);
  r.jacobian_nonzero = !r.jacobian.is_zero();
  r.deg1 = r.f1.total_degree();
  r.deg2 = r.f2.total_degree();
  r.expected_degree = 4 * k;
  r.degree_ok = r.deg1 * r.deg2 == r.expected_degree &&
                r.group.order() == static_cast<std::size_t>(r.expected_degree);
  r.ratio = constant_ratio(r.jacobian, r.reference);
  if (which == GeneratorCase::order34_6) {
    // Both linear forms are primitive, so by Gauss's lemma divisibility by
    // 6 (2x - y)(2y - x) means: content divisible by 6 and J(1,2) = J(2,1) = 0.
    BigInt content = 0;
    for (const auto& [e, c] : r.jacobian.terms()) content = gcd(content, c);
    r.divisible = content % 6 == 0 && r.jacobian.eval(1, 2) == 0 && r.jacobian.eval(2, 1) == 0;
  }
  return r;
}

NormHeadReport norm_head_check(CanonicalC c) {
  NormHeadReport r;
  r.c = c;
  r.k = period_of(c);
  const BiPoly f = trace_polynomial(c);
  const BiPoly n = norm_of(c);
  r.head = homogeneous_part(f, 2 * r.k);
  if (auto ratio = constant_ratio(r.head, n.pow(r.k)); ratio && ratio->den == 1) {
    r.constant = ratio->num;
  }
  r.remainder_in_norm = express_in_norm(f - r.head, n);
  return r;
}

std::vector<Discrepancy> collect_discrepancies() {
  std::vector<Discrepancy> out;
  const BiPoly f4 = trace_polynomial(CanonicalC::c4);
  const auto g4 = express_in_norm(f4, norm4());
  out.push_back({"f4 as a polynomial in N4", "-2(N4 + 1)(N4 - 1), which is 0 at (1,0)",
                 (g4 ? g4->str("N4") : std::string("not expressible")) + ", which is " +
                     to_string(f4.eval(1, 0)) + " = tr(Y1 Y2) at (1,0)"});

  const auto head = norm_head_check(CanonicalC::c4);
  out.push_back({"degree-4 part of f4", "-2 N4^2",
                 head.constant ? to_string(*head.constant) + " N4^2" : "not a multiple of N4^2"});

  for (GeneratorCase gc : {GeneratorCase::order4, GeneratorCase::order34_6}) {
    const auto rep = verify_generators(gc);
    out.push_back({"Jacobian for " + to_string(gc), rep.reference.str(),
                   rep.jacobian.str() + (rep.ratio ? " = " + rep.ratio->str() + " * reference"
                                                   : " (no constant multiple of reference)")});
  }

  const auto table = enumerate_conic_points(CanonicalC::c4);
  if (table.orbits.size() != 1) {
    std::string extra;
    for (std::size_t i = 1; i < table.orbits.size(); ++i) {
      extra += " {";
      for (std::size_t j = 0; j < table.orbits[i].members.size(); ++j) {
        extra += (j ? "," : "") + std::string("+-") + table.orbits[i].members[j].str();
      }
      extra += "} with product " + table.orbits[i].product_order.str();
    }
    out.push_back({"C4 lattice points with |f4| <= 2", "one orbit {+-(1,0),+-(0,1)}",
                   std::to_string(table.orbits.size()) + " orbits; extra:" + extra});
  }

  const auto eta = analyze_eta_fixing(build_eta12_example(), 12, 12);
  if (eta.minimal_power != 12) {
    out.push_back({"least eta power fixing the eta-12 tuple", "12 (fixed by eta^12)",
                   eta.minimal_power ? std::to_string(*eta.minimal_power) : "none up to 12"});
  }
  return out;
}

}  // namespace monodromy
