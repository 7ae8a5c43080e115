#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "monodromy/classify.hpp"

namespace monodromy {

namespace {

template <typename Fn>
void run_parallel(std::size_t count, int jobs, Fn&& fn) {
  jobs = std::max(1, jobs);
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += jobs) fn(i);
    });
  }
  for (auto& w : workers) w.join();
}

bool tuple_less(const DecoratedSolution& l, const DecoratedSolution& r) {
  if (l.tuple.entries() != r.tuple.entries()) return l.tuple.entries() < r.tuple.entries();
  return l.c < r.c;
}

bool all_transvections(std::initializer_list<const Mat2*> ms) {
  return std::all_of(ms.begin(), ms.end(),
                     [](const Mat2* m) { return transvection_vector(*m).has_value(); });
}

}  // namespace

// -------------------------------------------------------------- tau search

std::vector<DecoratedSolution> search_tau_fixed(int n, int box, int jobs) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const int m = n - 1;
  const auto cs = sl2_in_box(box);
  const auto vectors = primitive_vectors(box, true);

  std::mutex mu;
  std::vector<DecoratedSolution> found;
  run_parallel(cs.size(), jobs, [&](std::size_t ci) {
    const Mat2& c = cs[ci];
    const Mat2 cinv = c.inverse();
    if (m == 0) {
      // The tuple is (L) alone and a transvection is never Id.
      for (const auto& w : vectors) {
        if (transvection(w).is_identity()) {
          std::lock_guard lock(mu);
          found.push_back({c, Factorization({transvection(w)}, Decoration::tau)});
        }
      }
      return;
    }
    const Mat2 cm = c.pow(m);
    for (const auto& v : vectors) {
      // C X_m C^-1 = X_1 closes the cycle: C^m v = +-v.
      if (!cm.apply(v).same_line(v)) continue;
      const Mat2 x1 = transvection(v);
      const Mat2 x1inv = x1.inverse();
      for (const auto& w : vectors) {
        // C T_w C^-1 = T_{Cw} must equal X_1^-1 T_w X_1 = T_{X_1^-1 w}.
        if (!c.apply(w).same_line(x1inv.apply(w))) continue;
        std::vector<Mat2> entries{transvection(w)};
        for (auto& x : orbit_tuple(c, v, m)) entries.push_back(std::move(x));
        if (!product(entries).is_identity()) continue;
        const Mat2& l = entries[0];
        if (!(c * l * cinv == x1inv * l * x1)) continue;
        if (!all_transvections({&entries[0], &entries[1]})) continue;
        std::lock_guard lock(mu);
        found.push_back({c, Factorization(std::move(entries), Decoration::tau)});
      }
    }
  });
  std::sort(found.begin(), found.end(), tuple_less);
  return found;
}

// -------------------------------------------------------------- eta search

std::vector<DecoratedSolution> search_eta_fixed(int n, int box, int jobs) {
  if (n < 2) throw std::invalid_argument("the eta shape needs n >= 2");
  const int m = n - 2;
  const auto cs = sl2_in_box(box);
  const auto vectors = primitive_vectors(box, true);

  std::mutex mu;
  std::vector<DecoratedSolution> found;
  run_parallel(cs.size(), jobs, [&](std::size_t ci) {
    const Mat2& c = cs[ci];
    std::vector<PrimVec> fixed_lines;
    for (const auto& w : vectors) {
      if (c.apply(w).same_line(w)) fixed_lines.push_back(w);
    }
    if (fixed_lines.empty()) return;

    auto record = [&](std::vector<Mat2> entries) {
      std::lock_guard lock(mu);
      found.push_back({c, Factorization(std::move(entries), Decoration::eta)});
    };

    if (m == 0) {
      for (const auto& w1 : vectors) {
        for (const auto& w2 : fixed_lines) {
          if ((transvection(w1) * transvection(w2)).is_identity()) {
            record({transvection(w1), transvection(w2)});
          }
        }
      }
      return;
    }
    const Mat2 cm = c.pow(m);
    for (const auto& v : vectors) {
      if (!cm.apply(v).same_line(v)) continue;
      const Mat2 x1 = transvection(v);
      const Mat2 x1inv = x1.inverse();
      const auto xs = orbit_tuple(c, v, m);
      const Mat2 middle = product(xs);
      for (const auto& w1 : vectors) {
        if (!c.apply(w1).same_line(x1inv.apply(w1))) continue;
        const Mat2 l1 = transvection(w1);
        const Mat2 head = l1 * middle;
        for (const auto& w2 : fixed_lines) {
          const Mat2 l2 = transvection(w2);
          if (!(head * l2).is_identity()) continue;
          std::vector<Mat2> entries{l1};
          entries.insert(entries.end(), xs.begin(), xs.end());
          entries.push_back(l2);
          record(std::move(entries));
        }
      }
    }
  });
  std::sort(found.begin(), found.end(), tuple_less);
  return found;
}

// -------------------------------------------------------------- lemmas

CheckResult check_transvection_powers(int box, int kmax) {
  CheckResult r{"transvection powers", true, ""};
  long checked = 0;
  for (const auto& v : primitive_vectors(box, true)) {
    const Mat2 t = transvection(v);
    for (int k = -kmax; k <= kmax; ++k) {
      auto back = transvection_vector(t.pow(k));
      const bool expected = k == 1;
      ++checked;
      if (back.has_value() != expected || (back && !(*back == v.normalized()))) {
        r.passed = false;
        r.detail = "T_" + v.str() + "^" + std::to_string(k) + " misclassified";
        return r;
      }
    }
  }
  r.detail = std::to_string(checked) + " powers checked; only k = 1 gives a transvection";
  return r;
}

CheckResult check_pair_branch(int box) {
  CheckResult r{"two transvections never multiply to Id", true, ""};
  const auto vs = primitive_vectors(box, true);
  for (const auto& v : vs) {
    for (const auto& w : vs) {
      const Mat2 p = transvection(v) * transvection(w);
      const int ab = abelianize(p);
      if (p.is_identity() || ab != 10) {
        r.passed = false;
        r.detail = "T_" + v.str() + " T_" + w.str() + " abelianizes to " + std::to_string(ab);
        return r;
      }
    }
  }
  r.detail = "each transvection maps to 11; the pair maps to 22 = 10 != 0 mod 12 (" +
             std::to_string(vs.size() * vs.size()) + " pairs)";
  return r;
}

CheckResult check_triple_branch(int box) {
  CheckResult r{"three transvections never multiply to Id", true, ""};
  const auto vs = primitive_vectors(box, true);
  for (const auto& u : vs) {
    for (const auto& v : vs) {
      for (const auto& w : vs) {
        const Mat2 p = transvection(u) * transvection(v) * transvection(w);
        const int ab = abelianize(p);
        if (p.is_identity() || ab != 9) {
          r.passed = false;
          r.detail = "triple " + u.str() + v.str() + w.str() + " abelianizes to " +
                     std::to_string(ab);
          return r;
        }
      }
    }
  }
  r.detail = "the triple maps to 33 = 9 != 0 mod 12 (" +
             std::to_string(vs.size() * vs.size() * vs.size()) + " triples)";
  return r;
}

CheckResult check_fixed_line_trichotomy(int m, int box) {
  CheckResult r{"C^" + std::to_string(m) + " v = +-v forces C v = +-v or order 3, 4, 6", true,
                ""};
  long fixed = 0, finite = 0;
  const auto vs = primitive_vectors(box, true);
  for (const auto& c : sl2_in_box(box)) {
    const Mat2 cm = c.pow(m);
    for (const auto& v : vs) {
      if (!cm.apply(v).same_line(v)) continue;
      if (c.apply(v).same_line(v)) {
        ++fixed;
        continue;
      }
      const MatOrder o = order_of(c);
      if (!o.is_finite() || (o.k != 3 && o.k != 4 && o.k != 6)) {
        r.passed = false;
        r.detail = "C = " + c.str() + " with v = " + v.str() + " has order " + o.str();
        return r;
      }
      ++finite;
    }
  }
  r.detail = std::to_string(fixed) + " pairs with C v = +-v, " + std::to_string(finite) +
             " with C of order 3, 4 or 6";
  return r;
}

// ----------------------------------------------------------- free groups

namespace {

// Reduced words in a free group; letter g > 0 is a generator, -g its inverse.
using Word = std::vector<int>;

Word reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return reduce(out);
}

// Applies the substitution g -> image[g] letter by letter.
template <typename Image>
Word substitute(const Word& w, Image&& image) {
  Word out;
  for (int x : w) {
    const Word img = image(std::abs(x));
    const Word piece = x > 0 ? img : inverse(img);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return reduce(out);
}

constexpr int kL1 = 1;
constexpr int kL2 = 2;
constexpr int kX = 10;  // X_i is generator kX + i

Word xs(int from, int to) {
  Word w;
  for (int i = from; i <= to; ++i) w.push_back(kX + i);
  return w;
}

}  // namespace

CheckResult check_tau_conjugation_chain(int jmax) {
  CheckResult r{"C^j L C^-j = (X_1...X_j)^-1 L (X_1...X_j)", true, ""};
  // phi(X_i) = X_{i+1}, phi(L) = X_1^-1 L X_1 (no wrap needed for j < n-1).
  auto phi = [](int g) -> Word {
    if (g == kL1) return {-(kX + 1), kL1, kX + 1};
    return {g + 1};
  };
  Word image{kL1};
  for (int j = 1; j <= jmax; ++j) {
    image = substitute(image, phi);
    const Word expected = cat({inverse(xs(1, j)), Word{kL1}, xs(1, j)});
    if (image != expected) {
      r.passed = false;
      r.detail = "mismatch at j = " + std::to_string(j);
      return r;
    }
  }
  r.detail = "free-group identity verified for j = 1.." + std::to_string(jmax);
  return r;
}

bool Derivation::reached() const {
  return !contradiction.empty() &&
         std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.verified; });
}

Derivation derive_eta_contradiction(int max_len) {
  Derivation d;
  const int mmax = std::max(1, max_len - 2);
  const std::string range = "checked for n = 3.." + std::to_string(mmax + 2);

  // Relation L_1 X_1 ... X_m L_2 and the C-action on it.
  bool ok1 = true, ok2 = true, ok4 = true, ok5 = true;
  for (int m = 1; m <= mmax; ++m) {
    const Word relation = cat({Word{kL1}, xs(1, m), Word{kL2}});
    auto phi = [m](int g) -> Word {
      if (g == kL1) return {-(kX + 1), kL1, kX + 1};
      if (g == kL2) return {kL2};
      return {g - kX == m ? kX + 1 : g + 1};
    };
    const Word shifted = substitute(relation, phi);
    const Word stated = cat({Word{-(kX + 1), kL1, kX + 1}, xs(2, m), Word{kX + 1, kL2}});
    ok1 = ok1 && shifted == stated;

    // L_1 = (X_1 ... X_m L_2)^-1 from the relation itself.
    auto solve_l1 = [m](int g) -> Word {
      if (g == kL1) return inverse(cat({xs(1, m), Word{kL2}}));
      return {g};
    };
    const Word commutator = substitute(stated, solve_l1);
    ok2 = ok2 && commutator == Word{-(kX + 1), -kL2, kX + 1, kL2};

    // With L_2 = X_1 and every X_i = X_1 the relation reads L_1 X_1^{m+1}.
    auto collapse = [](int g) -> Word {
      if (g == kL1) return {kL1};
      return {kX + 1};
    };
    const Word collapsed = substitute(relation, collapse);
    Word expected{kL1};
    for (int i = 0; i < m + 1; ++i) expected.push_back(kX + 1);
    ok4 = ok4 && collapsed == expected;

    // L_1 = X_1^{-(m+1)} = X_1^{1-n}; no such power is a transvection.
    const int n = m + 2;
    for (const auto& v : primitive_vectors(2, true)) {
      ok5 = ok5 && !transvection_vector(transvection(v).pow(1 - n)).has_value();
    }
  }

  d.steps.push_back({"conjugating the relation by C gives X_1^-1 L_1 X_1 X_2 ... X_m X_1 L_2 = Id",
                     ok1, range});
  d.steps.push_back({"eliminating L_1 leaves X_1^-1 L_2^-1 X_1 L_2 = Id", ok2, range});

  bool ok3 = true;
  const auto vs = primitive_vectors(4, true);
  for (const auto& v : vs) {
    const Mat2 tv = transvection(v);
    for (const auto& w : vs) {
      const Mat2 tw = transvection(w);
      const bool commute = tv * tw == tw * tv;
      ok3 = ok3 && commute == v.same_line(w);
    }
  }
  d.steps.push_back({"L_2 commutes with X_1 = T_v, so L_2 v = +-v and L_2 = X_1", ok3,
                     "commuting transvection pairs coincide (|p|,|q| <= 4)"});
  d.steps.push_back(
      {"C L_2 C^-1 = L_2 = X_1 gives X_i = X_1 for all i, so L_1 X_1^{n-1} = Id", ok4, range});
  d.steps.push_back({"L_1 = X_1^{1-n} is a transvection only if 1 - n = 1", ok5, range});
  if (ok1 && ok2 && ok3 && ok4 && ok5) d.contradiction = "1 - n = 1 forces n = 0";
  return d;
}

// --------------------------------------------------------- explorations

Factorization build_eta12_example() {
  const Mat2 ta = transvection({1, 0});
  const Mat2 tb = transvection({0, 1});
  std::vector<Mat2> entries{ta};
  for (int i = 0; i < 11; ++i) {
    entries.push_back(tb);
    entries.push_back(ta);
  }
  entries.push_back(tb);
  return Factorization(std::move(entries), Decoration::eta);
}

EtaAnalysis analyze_eta_fixing(const Factorization& f, int max_s, int probe) {
  EtaAnalysis a;
  a.probe = probe;
  const int m = static_cast<int>(f.size()) - 2;
  auto row_for = [&](int s) {
    EtaPowerRow row{s, false, false, std::nullopt};
    const auto entries = eta_power_entries(f, s);
    row.product_ok = product(entries).is_identity();
    if (row.product_ok) {
      auto w = decide_sim_conjugacy(std::span<const Mat2>(f.entries()),
                                    std::span<const Mat2>(entries));
      row.fixed = w.found();
      row.witness = w.conjugator;
    }
    return row;
  };
  for (int s = 1; s <= max_s; ++s) {
    a.rows.push_back(row_for(s));
    if (a.rows.back().fixed && !a.minimal_power) a.minimal_power = s;
  }
  a.probe_fixed = row_for(probe).fixed;
  a.induced_order = m / std::gcd(probe, m);
  return a;
}

HalfRotationReport explore_half_rotation(int n, int box) {
  if (n <= 0 || n % 12 != 0) {
    throw NotRealizable("the half-rotation example needs 12 | n, got n = " + std::to_string(n));
  }
  HalfRotationReport rep;
  rep.n = n;
  const PrimVec alpha(1, 0), beta(0, 1);
  std::vector<PrimVec> neighbours;
  for (const auto& u : primitive_vectors(box, true)) {
    if (abs(pairing(u.p(), u.q(), alpha.p(), alpha.q())) == 1 &&
        abs(pairing(u.p(), u.q(), beta.p(), beta.q())) == 1) {
      neighbours.push_back(u);
    }
  }
  for (const auto& g : neighbours) {
    for (const auto& dl : neighbours) {
      const std::vector<Mat2> block{transvection(alpha), transvection(g), transvection(beta),
                                    transvection(beta),  transvection(dl), transvection(alpha)};
      const Mat2 p = product(block);
      if (!p.pow(n / 6).is_identity()) continue;
      rep.assignment_found = true;
      rep.gamma = g;
      rep.delta = dl;
      rep.block_product = p;
      rep.block_order = order_of(p);
      std::vector<Mat2> entries;
      for (int r = 0; r < n / 6; ++r) entries.insert(entries.end(), block.begin(), block.end());
      rep.tuple = Factorization(std::move(entries));
      for (int s = 1; s < n; ++s) {
        const bool ok = solve_shift_conjugator(*rep.tuple, s).found();
        rep.shift_found.push_back(ok);
        if (ok && !rep.minimal_shift) rep.minimal_shift = s;
      }
      if (rep.minimal_shift) rep.induced_order = n / std::gcd(n, *rep.minimal_shift);
      return rep;
    }
  }
  return rep;
}

BigInt two_vector_trace(CanonicalC c, const BigInt& p1, const BigInt& q1, const BigInt& p2,
                        const BigInt& q2) {
  const Mat2 cm = matrix_of(c);
  BigInt v1 = p1, v2 = q1, w1 = p2, w2 = q2;
  Mat2 acc = Mat2::identity();
  for (int i = 0; i < period_of(c); ++i) {
    acc *= twist_matrix(v1, v2);
    acc *= twist_matrix(w1, w2);
    BigInt nv1 = cm.a() * v1 + cm.b() * v2, nv2 = cm.c() * v1 + cm.d() * v2;
    BigInt nw1 = cm.a() * w1 + cm.b() * w2, nw2 = cm.c() * w1 + cm.d() * w2;
    v1 = std::move(nv1);
    v2 = std::move(nv2);
    w1 = std::move(nw1);
    w2 = std::move(nw2);
  }
  return acc.trace();
}

BigInt two_vector_trace(CanonicalC c, const PrimVec& v, const PrimVec& w) {
  return two_vector_trace(c, v.p(), v.q(), w.p(), w.q());
}

std::vector<SliceRow> slice_grid(CanonicalC c, const std::map<std::string, long long>& fixed,
                                 int range) {
  if (range < 0) throw std::invalid_argument("range must be non-negative");
  static const std::map<std::string, int> slot{{"p1", 0}, {"q1", 1}, {"p2", 2}, {"q2", 3},
                                               {"v1", 0}, {"v2", 1}, {"w1", 2}, {"w2", 3}};
  std::array<std::optional<long long>, 4> pinned;
  for (const auto& [name, value] : fixed) {
    auto it = slot.find(name);
    if (it == slot.end()) throw ParseError("unknown coordinate '" + name + "'");
    pinned[it->second] = value;
  }
  std::vector<SliceRow> rows;
  std::array<long long, 4> x{};
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == 4) {
      rows.push_back({x, two_vector_trace(c, x[0], x[1], x[2], x[3])});
      return;
    }
    if (pinned[i]) {
      x[i] = *pinned[i];
      self(self, i + 1);
      return;
    }
    for (long long t = -range; t <= range; ++t) {
      x[i] = t;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return rows;
}

}  // namespace monodromy
