#include "monodromy/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace monodromy {

const std::array<CanonicalC, 3>& all_canonical() {
  static const std::array<CanonicalC, 3> all{CanonicalC::c3, CanonicalC::c4, CanonicalC::c6};
  return all;
}

std::string to_string(CanonicalC c) {
  switch (c) {
    case CanonicalC::c3:
      return "C3";
    case CanonicalC::c4:
      return "C4";
    case CanonicalC::c6:
      return "C6";
  }
  return "?";
}

CanonicalC parse_canonical(const std::string& s) {
  std::string t = s;
  if (!t.empty() && (t[0] == 'C' || t[0] == 'c')) t = t.substr(1);
  if (t == "3") return CanonicalC::c3;
  if (t == "4") return CanonicalC::c4;
  if (t == "6") return CanonicalC::c6;
  throw ParseError("unknown case '" + s + "' (expected 3, 4 or 6)");
}

Mat2 matrix_of(CanonicalC c) {
  switch (c) {
    case CanonicalC::c3:
      return Mat2(0, -1, 1, -1);
    case CanonicalC::c4:
      return Mat2(0, -1, 1, 0);
    case CanonicalC::c6:
      return Mat2(1, -1, 1, 0);
  }
  throw std::logic_error("bad CanonicalC");
}

int period_of(CanonicalC c) { return c == CanonicalC::c4 ? 2 : 3; }

BiPoly norm_of(CanonicalC c) { return c == CanonicalC::c4 ? norm4() : norm3(); }

// ------------------------------------------------------- trace polynomials

namespace {

struct PolyMat {
  BiPoly a, b, c, d;

  PolyMat operator*(const PolyMat& r) const {
    return {a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c, c * r.b + d * r.d};
  }
};

PolyMat symbolic_transvection() {
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  return {BiPoly(1) + x * y, -(x * x), y * y, BiPoly(1) - x * y};
}

}  // namespace

BiPoly trace_polynomial(CanonicalC c) {
  const Mat2 cm = matrix_of(c);
  const PolyMat t = symbolic_transvection();
  PolyMat acc{BiPoly(1), BiPoly(0), BiPoly(0), BiPoly(1)};
  Mat2 power = Mat2::identity();
  for (int i = 0; i < period_of(c); ++i) {
    // T_{M v} has the entries of T_v evaluated at M (x, y).
    acc = acc * PolyMat{substitute_linear(t.a, power), substitute_linear(t.b, power),
                        substitute_linear(t.c, power), substitute_linear(t.d, power)};
    power = cm * power;
  }
  return acc.a + acc.d;
}

BigInt trace_by_product(CanonicalC c, const BigInt& p, const BigInt& q) {
  const Mat2 cm = matrix_of(c);
  Mat2 acc = Mat2::identity();
  BigInt x = p, y = q;
  for (int i = 0; i < period_of(c); ++i) {
    acc *= twist_matrix(x, y);
    BigInt nx = cm.a() * x + cm.b() * y;
    BigInt ny = cm.c() * x + cm.d() * y;
    x = std::move(nx);
    y = std::move(ny);
  }
  return acc.trace();
}

std::vector<Mat2> orbit_tuple(const Mat2& c, const PrimVec& v, int n) {
  std::vector<Mat2> out;
  out.reserve(n);
  PrimVec u = v;
  for (int i = 0; i < n; ++i) {
    out.push_back(transvection(u));
    u = c.apply(u);
  }
  return out;
}

// ----------------------------------------------------------- conic points

namespace {

// Largest t >= 1 with |g(t)| <= 2. Beyond the Cauchy-type bound
// 1 + (sum |c_i| + 2) / |c_d| the leading term dominates.
BigInt norm_bound_for(const UniPoly& g) {
  if (g.degree() < 1) throw std::logic_error("trace polynomial is constant in the norm");
  BigInt total = 2;
  for (int i = 0; i < g.degree(); ++i) total += abs(g.coeffs()[i]);
  const BigInt limit = 1 + total / abs(g.coeffs().back()) + 1;
  BigInt best = 0;
  for (BigInt t = 1; t <= limit; ++t) {
    if (abs(g.eval(t)) <= 2) best = t;
  }
  return best;
}

// Largest b with every integer point of sup-norm > b having N > bound.
// Uses N >= lambda * max(|x|,|y|)^2, lambda the minimum of N on the unit
// sup-norm square (attained on an edge x = 1 or y = 1 by symmetry).
int box_for(const BiPoly& n, const BigInt& bound) {
  const BigInt a = n.coeff(2, 0), b = n.coeff(1, 1), c = n.coeff(0, 2);
  // Minimum of a + b t + c t^2 over t in [-1, 1], as a fraction num/den.
  auto edge_min = [](const BigInt& lead, const BigInt& mid, const BigInt& quad) {
    // Candidates t = -1, 1 and the vertex -mid / (2 quad).
    std::pair<BigInt, BigInt> best{lead - mid + quad, 1};
    auto consider = [&](BigInt num, BigInt den) {
      if (num * best.second < best.first * den) best = {num, den};
    };
    consider(lead + mid + quad, 1);
    if (quad > 0 && abs(mid) <= 2 * quad) consider(4 * lead * quad - mid * mid, 4 * quad);
    return best;
  };
  auto e1 = edge_min(a, b, c);
  auto e2 = edge_min(c, b, a);
  auto lam = e1.first * e2.second <= e2.first * e1.second ? e1 : e2;
  // Largest box with box^2 * lambda <= bound.
  int box = 0;
  while (BigInt(box + 1) * (box + 1) * lam.first <= bound * lam.second) ++box;
  return box;
}

}  // namespace

ConicTable enumerate_conic_points(CanonicalC c) {
  const BiPoly f = trace_polynomial(c);
  const BiPoly n = norm_of(c);
  const auto g = express_in_norm(f, n);
  if (!g) throw std::logic_error("trace polynomial is not a polynomial in the norm");

  ConicTable table;
  table.c = c;
  table.norm_bound = norm_bound_for(*g);
  table.box = box_for(n, table.norm_bound);

  std::vector<PrimVec> points;
  for (const auto& v : primitive_vectors(table.box, true)) {
    if (abs(f.eval(v.p(), v.q())) <= 2) points.push_back(v);
  }
  // Orbits start at the point of least norm, then least |q|, then largest p,
  // so (1,0) leads wherever it occurs.
  auto key = [&](const PrimVec& v) {
    return std::make_tuple(n.eval(v.p(), v.q()), abs(v.q()), BigInt(-v.p()), BigInt(-v.q()));
  };
  std::sort(points.begin(), points.end(),
            [&](const PrimVec& l, const PrimVec& r) { return key(l) < key(r); });

  const Mat2 cm = matrix_of(c);
  const int k = period_of(c);
  std::vector<bool> used(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (used[i]) continue;
    ConicOrbit orbit;
    PrimVec u = points[i];
    do {
      orbit.members.push_back(u);
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j].same_line(u)) used[j] = true;
      }
      u = cm.apply(u);
    } while (!u.same_line(points[i]));
    orbit.norm = n.eval(points[i].p(), points[i].q());
    orbit.trace = f.eval(points[i].p(), points[i].q());
    orbit.product_order = order_of(product(orbit_tuple(cm, points[i], k)));
    table.orbits.push_back(std::move(orbit));
  }
  return table;
}

// --------------------------------------------------------- classification

int tuple_period(std::span<const Mat2> xs) {
  const std::size_t n = xs.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = xs[i] == xs[(i + p) % n];
    if (ok) return static_cast<int>(p);
  }
  return static_cast<int>(n);
}

namespace {

struct Candidate {
  Mat2 c;
  PrimVec v;
  std::vector<Mat2> tuple;
};

void attach_canonical(ClassReport& report, int n) {
  const Factorization standard = standard_tuple(n);
  const Factorization period3 = period3_tuple(n);
  if (auto w = decide_sim_conjugacy(report.representative, standard); w.found()) {
    report.canonical = "standard";
    report.witness = *w.conjugator;
  } else if (auto w3 = decide_sim_conjugacy(report.representative, period3); w3.found()) {
    report.canonical = "period3";
    report.witness = *w3.conjugator;
  } else {
    report.canonical = "unmatched";
  }
}

std::vector<ClassReport> deduplicate(const std::vector<Candidate>& candidates, int n,
                                     const std::string& provenance) {
  std::vector<ClassReport> classes;
  for (const auto& cand : candidates) {
    const bool seen = std::any_of(classes.begin(), classes.end(), [&](const ClassReport& r) {
      return decide_sim_conjugacy(std::span<const Mat2>(cand.tuple),
                                  std::span<const Mat2>(r.representative.entries()))
          .found();
    });
    if (seen) continue;
    ClassReport report;
    report.representative = Factorization(cand.tuple);
    report.period = tuple_period(cand.tuple);
    report.conjugator = cand.c;
    report.seed = cand.v;
    report.provenance = provenance;
    attach_canonical(report, n);
    classes.push_back(std::move(report));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const auto& l, const auto& r) {
    return l.period < r.period;
  });
  return classes;
}

void require_positive(int n) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
}

}  // namespace

std::vector<ClassReport> classify_rotation_invariant(int n) {
  require_positive(n);
  if (n % 12 != 0) return {};
  std::vector<Candidate> candidates;
  for (CanonicalC c : all_canonical()) {
    const Mat2 cm = matrix_of(c);
    const int k = period_of(c);
    for (const auto& orbit : enumerate_conic_points(c).orbits) {
      for (const auto& v : orbit.members) {
        auto tuple = orbit_tuple(cm, v, n);
        const Mat2 block = product(std::span<const Mat2>(tuple).first(k));
        if (!block.pow(n / k).is_identity()) continue;
        candidates.push_back({cm, v, std::move(tuple)});
      }
    }
  }
  return deduplicate(candidates, n, "structured");
}

namespace {

// Direct test of the defining conditions for X_i = T_{C^{i-1} v}: the
// product is Id and C X_n C^-1 = X_1.
std::optional<std::vector<Mat2>> direct_test(const Mat2& c, const PrimVec& v, int n) {
  auto tuple = orbit_tuple(c, v, n);
  if (!product(tuple).is_identity()) return std::nullopt;
  if (!(c * tuple.back() * c.inverse() == tuple.front())) return std::nullopt;
  return tuple;
}

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += jobs) fn(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

std::vector<ClassReport> oracle_rotation_invariant(int n, int box, int jobs) {
  require_positive(n);
  const auto vectors = primitive_vectors(box, true);

  std::vector<Mat2> conjugators;
  for (CanonicalC c : all_canonical()) conjugators.push_back(matrix_of(c));
  for (const auto& c : sl2_in_box(box)) {
    if (order_of(c).is_finite()) conjugators.push_back(c);
  }

  std::vector<std::vector<Candidate>> per_c(conjugators.size());
  parallel_for(conjugators.size(), jobs, [&](std::size_t i) {
    for (const auto& v : vectors) {
      if (auto t = direct_test(conjugators[i], v, n)) {
        per_c[i].push_back({conjugators[i], v, std::move(*t)});
      }
    }
  });
  std::vector<Candidate> candidates;
  for (auto& list : per_c) {
    for (auto& cand : list) candidates.push_back(std::move(cand));
  }
  return deduplicate(candidates, n, "oracle");
}

bool same_classes(const std::vector<ClassReport>& a, const std::vector<ClassReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].period != b[i].period || a[i].canonical != b[i].canonical) return false;
    if (!decide_sim_conjugacy(a[i].representative, b[i].representative).found()) return false;
  }
  return true;
}

}  // namespace monodromy
