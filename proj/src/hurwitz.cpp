#include "monodromy/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace monodromy {

std::string to_string(Decoration d) {
  switch (d) {
    case Decoration::none:
      return "none";
    case Decoration::tau:
      return "tau";
    case Decoration::eta:
      return "eta";
  }
  return "none";
}

Decoration parse_decoration(const std::string& s) {
  if (s == "none") return Decoration::none;
  if (s == "tau") return Decoration::tau;
  if (s == "eta") return Decoration::eta;
  throw ParseError("unknown decoration '" + s + "'");
}

Mat2 product(std::span<const Mat2> ms) {
  Mat2 acc = Mat2::identity();
  for (const auto& m : ms) acc *= m;
  return acc;
}

Factorization::Factorization(std::vector<Mat2> entries, Decoration decoration)
    : entries_(std::move(entries)), decoration_(decoration) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].is_sl2()) {
      throw NotSL2("entry " + std::to_string(i + 1) + " " + entries_[i].str() +
                   " does not have determinant 1");
    }
  }
  const std::size_t min_len = decoration_ == Decoration::eta ? 2
                              : decoration_ == Decoration::tau ? 1
                                                               : 0;
  if (entries_.size() < min_len) {
    throw ShapeError(to_string(decoration_) + " tuple needs at least " +
                     std::to_string(min_len) + " entries");
  }
  const Mat2 p = product(entries_);
  if (!p.is_identity()) throw ProductError("product of entries is " + p.str() + ", not Id");
}

// ------------------------------------------------------------------ words

std::vector<Move> parse_moves(const std::string& text) {
  std::vector<Move> word;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (text.find_first_not_of(" \t,") == std::string::npos) continue;
      throw ParseError("empty move in word '" + text + "'");
    }
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    Move m{0, Direction::forward};
    if (item.back() == '\'') {
      m.direction = Direction::backward;
      item.pop_back();
    }
    if (item.size() < 2 || (item[0] != 's' && item[0] != 'S') ||
        !std::all_of(item.begin() + 1, item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("malformed move '" + item + "'");
    }
    m.index = std::stoi(item.substr(1));
    if (m.index < 1) throw ParseError("move index must be positive in '" + item + "'");
    word.push_back(m);
  }
  return word;
}

std::string format_moves(const std::vector<Move>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ",";
    out += "s" + std::to_string(word[i].index);
    if (word[i].direction == Direction::backward) out += "'";
  }
  return out;
}

// -------------------------------------------------------------- examples

namespace {

void require_realizable(int n) {
  if (n <= 0 || n % 12 != 0) {
    throw NotRealizable("no transvection factorization of Id has length " + std::to_string(n) +
                        " (the abelianization forces 12 | n)");
  }
}

Factorization periodic_tuple(int n, const std::vector<Mat2>& block) {
  require_realizable(n);
  std::vector<Mat2> entries;
  entries.reserve(n);
  for (int i = 0; i < n; ++i) entries.push_back(block[i % block.size()]);
  return Factorization(std::move(entries));
}

}  // namespace

Factorization standard_tuple(int n) {
  return periodic_tuple(n, {transvection({1, 0}), transvection({0, 1})});
}

Factorization period3_tuple(int n) {
  return periodic_tuple(n, {transvection({1, 0}), transvection({1, 1}), transvection({0, 1})});
}

// ---------------------------------------------------------------- actions

namespace {

void move_in_place(std::vector<Mat2>& e, int i, Direction dir) {
  if (i < 1 || static_cast<std::size_t>(i) >= e.size()) {
    throw IndexError("move index " + std::to_string(i) + " out of range for length " +
                     std::to_string(e.size()));
  }
  Mat2& a = e[i - 1];
  Mat2& b = e[i];
  if (dir == Direction::forward) {
    Mat2 left = a * b * a.inverse();
    b = a;
    a = std::move(left);
  } else {
    Mat2 right = b.inverse() * a * b;
    a = b;
    b = std::move(right);
  }
}

}  // namespace

Factorization hurwitz_move(const Factorization& f, int i, Direction dir) {
  std::vector<Mat2> e = f.entries();
  move_in_place(e, i, dir);
  return Factorization(std::move(e), f.decoration());
}

Factorization apply_moves(const Factorization& f, const std::vector<Move>& word) {
  std::vector<Mat2> e = f.entries();
  for (const auto& m : word) move_in_place(e, m.index, m.direction);
  return Factorization(std::move(e), f.decoration());
}

Factorization rotate(const Factorization& f, int steps) {
  if (f.decoration() != Decoration::none) {
    throw ShapeError("rotate needs an undecorated tuple; use tau_act or eta_act");
  }
  std::vector<Mat2> e = f.entries();
  if (!e.empty()) {
    const long n = static_cast<long>(e.size());
    const long s = ((steps % n) + n) % n;
    std::rotate(e.begin(), e.begin() + s, e.end());
  }
  return Factorization(std::move(e));
}

std::vector<Move> garside_word(int n) {
  std::vector<Move> word;
  for (int top = n - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) word.push_back({i, Direction::forward});
  }
  return word;
}

std::vector<Move> garside_word_alternate(int n) {
  std::vector<Move> word;
  for (int top = 1; top <= n - 1; ++top) {
    for (int i = top; i >= 1; --i) word.push_back({i, Direction::forward});
  }
  return word;
}

Factorization garside_act(const Factorization& f) {
  if (f.decoration() != Decoration::none || f.size() < 2) {
    throw ShapeError("garside_act needs an undecorated tuple of length >= 2");
  }
  return apply_moves(f, garside_word(static_cast<int>(f.size())));
}

Factorization tau_act(const Factorization& f) {
  if (f.decoration() != Decoration::tau || f.size() < 2) {
    throw ShapeError("tau_act needs a tau-decorated tuple (L, X_1, ..., X_{n-1}) with n >= 2");
  }
  const auto& e = f.entries();
  const Mat2& x1 = e[1];
  std::vector<Mat2> out;
  out.reserve(e.size());
  out.push_back(x1.inverse() * e[0] * x1);
  for (std::size_t i = 2; i < e.size(); ++i) out.push_back(e[i]);
  out.push_back(x1);
  return Factorization(std::move(out), Decoration::tau);
}

std::vector<Mat2> eta_power_entries(const Factorization& f, int s) {
  if (f.decoration() != Decoration::eta || f.size() < 3) {
    throw ShapeError("eta needs an eta-decorated tuple (M_0, X_1, ..., X_m, M_inf) with m >= 1");
  }
  if (s < 0) throw IndexError("eta power must be non-negative");
  const auto& e = f.entries();
  const std::size_t m = e.size() - 2;
  Mat2 ps = Mat2::identity();
  for (int j = 0; j < s; ++j) ps *= e[1 + (j % m)];
  std::vector<Mat2> out;
  out.reserve(e.size());
  out.push_back(ps.inverse() * e[0] * ps);
  for (std::size_t j = 0; j < m; ++j) out.push_back(e[1 + ((j + s) % m)]);
  out.push_back(e.back());
  return out;
}

Factorization eta_power(const Factorization& f, int s) {
  return Factorization(eta_power_entries(f, s), Decoration::eta);
}

Factorization eta_act(const Factorization& f) { return eta_power(f, 1); }

// -------------------------------------------------------- conjugacy

std::string to_string(ConjugacyWitness::Status s) {
  switch (s) {
    case ConjugacyWitness::Status::found:
      return "found";
    case ConjugacyWitness::Status::not_conjugate:
      return "none";
    case ConjugacyWitness::Status::inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(ConjugacyWitness::Method m) {
  switch (m) {
    case ConjugacyWitness::Method::trace_mismatch:
      return "trace-mismatch";
    case ConjugacyWitness::Method::anchor_pair:
      return "anchor-pair";
    case ConjugacyWitness::Method::anchor_line:
      return "anchor-line";
    case ConjugacyWitness::Method::brute_force:
      return "brute-force";
  }
  return "?";
}

namespace {

bool conjugates_all(const Mat2& d, std::span<const Mat2> a, std::span<const Mat2> b) {
  const Mat2 dinv = d.inverse();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(d * a[i] * dinv == b[i])) return false;
  }
  return true;
}

ConjugacyWitness result(ConjugacyWitness::Method method, std::optional<Mat2> d,
                        bool complete = true) {
  ConjugacyWitness w;
  w.method = method;
  w.complete = complete;
  if (d) {
    w.status = ConjugacyWitness::Status::found;
    w.conjugator = std::move(d);
  } else {
    w.status = complete ? ConjugacyWitness::Status::not_conjugate
                        : ConjugacyWitness::Status::inconclusive;
  }
  return w;
}

// D with D u = x and D v = y, when it exists in SL2(Z).
std::optional<Mat2> solve_two_columns(const PrimVec& u, const PrimVec& v, const PrimVec& x,
                                      const PrimVec& y) {
  // D = [x | y] * [u | v]^-1, [u | v]^-1 = adj / det.
  const BigInt det = u.p() * v.q() - v.p() * u.q();
  if (det == 0) return std::nullopt;
  const BigInt n11 = x.p() * v.q() - y.p() * u.q();
  const BigInt n12 = -x.p() * v.p() + y.p() * u.p();
  const BigInt n21 = x.q() * v.q() - y.q() * u.q();
  const BigInt n22 = -x.q() * v.p() + y.q() * u.p();
  for (const BigInt* n : {&n11, &n12, &n21, &n22}) {
    if (*n % det != 0) return std::nullopt;
  }
  const BigInt a = n11 / det, b = n12 / det, c = n21 / det, d = n22 / det;
  if (a * d - b * c != 1) return std::nullopt;
  return Mat2(a, b, c, d);
}

}  // namespace

ConjugacyWitness decide_sim_conjugacy(std::span<const Mat2> a, std::span<const Mat2> b,
                                      const ConjugacyOptions& opts) {
  using Method = ConjugacyWitness::Method;
  if (a.size() != b.size()) {
    throw ShapeError("tuples have different lengths " + std::to_string(a.size()) + " and " +
                     std::to_string(b.size()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].trace() != b[i].trace() || a[i].det() != b[i].det()) {
      return result(Method::trace_mismatch, std::nullopt);
    }
  }

  std::optional<std::size_t> anchor;
  std::optional<PrimVec> va, vb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto v = transvection_vector(a[i])) {
      anchor = i;
      va = v;
      vb = transvection_vector(b[i]);
      if (!vb) return result(Method::anchor_pair, std::nullopt);
      break;
    }
  }

  if (!anchor) {
    for (const auto& d : sl2_in_box(opts.fallback_bound)) {
      if (conjugates_all(d, a, b)) return result(Method::brute_force, d, false);
    }
    return result(Method::brute_force, std::nullopt, false);
  }

  // A second transvection entry off the anchor's line pins D down completely.
  for (std::size_t j = 0; j < a.size(); ++j) {
    auto wa = transvection_vector(a[j]);
    if (!wa || wa->same_line(*va)) continue;
    auto wb = transvection_vector(b[j]);
    if (!wb) return result(Method::anchor_pair, std::nullopt);
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        const PrimVec x = s1 > 0 ? *vb : -*vb;
        const PrimVec y = s2 > 0 ? *wb : -*wb;
        auto d = solve_two_columns(*va, *wa, x, y);
        if (d && conjugates_all(*d, a, b)) return result(Method::anchor_pair, d);
      }
    }
    return result(Method::anchor_pair, std::nullopt);
  }

  // Only the line of va is known: D = D0 * T_va^k, and +-D act alike. In the
  // basis P with P e1 = va, T_va^k conjugation becomes U^m, U = [[1,1],[0,1]].
  const TransporterFamily fam = solve_vector_transporter(*va, *vb);
  const Mat2 p = complete_to_sl2(*va);
  const Mat2 pinv = p.inverse();
  const Mat2 d0inv = fam.particular.inverse();
  std::optional<BigInt> m;
  for (std::size_t j = 0; j < a.size() && !m; ++j) {
    const Mat2 src = pinv * a[j] * p;
    if (src.c() == 0) continue;
    const Mat2 dst = pinv * d0inv * b[j] * fam.particular * p;
    // (U^m M U^-m)_11 = M_11 + m M_21.
    const BigInt diff = dst.a() - src.a();
    if (diff % src.c() != 0) return result(Method::anchor_line, std::nullopt);
    m = diff / src.c();
  }
  const BigInt mm = m.value_or(0);
  // U^m = T_e1^-m, so the conjugator is D0 * T_va^-m.
  const Mat2 d = fam.particular * p * Mat2(1, mm, 0, 1) * pinv;
  if (conjugates_all(d, a, b)) return result(Method::anchor_line, d);
  return result(Method::anchor_line, std::nullopt);
}

ConjugacyWitness decide_sim_conjugacy(const Factorization& a, const Factorization& b,
                                      const ConjugacyOptions& opts) {
  return decide_sim_conjugacy(std::span<const Mat2>(a.entries()),
                              std::span<const Mat2>(b.entries()), opts);
}

ConjugacyWitness solve_shift_conjugator(const Factorization& f, int s,
                                        const ConjugacyOptions& opts) {
  if (s < 1 || static_cast<std::size_t>(s) >= f.size()) {
    throw IndexError("shift must satisfy 1 <= s < n");
  }
  return decide_sim_conjugacy(f, rotate(f, s), opts);
}

// ---------------------------------------------------------- orbit search

std::optional<std::vector<Move>> hurwitz_path_search(const Factorization& from,
                                                     const Factorization& to, int max_depth) {
  using Key = std::vector<Mat2>;
  if (from.size() != to.size()) return std::nullopt;
  if (from.entries() == to.entries()) return std::vector<Move>{};
  const int n = static_cast<int>(from.size());

  std::map<Key, std::vector<Move>> seen_from{{from.entries(), {}}};
  std::map<Key, std::vector<Move>> seen_to{{to.entries(), {}}};
  std::vector<Key> frontier_from{from.entries()};
  std::vector<Key> frontier_to{to.entries()};

  auto invert = [](std::vector<Move> w) {
    std::reverse(w.begin(), w.end());
    for (auto& m : w) {
      m.direction = m.direction == Direction::forward ? Direction::backward : Direction::forward;
    }
    return w;
  };

  auto expand = [&](std::vector<Key>& frontier, std::map<Key, std::vector<Move>>& seen,
                    const std::map<Key, std::vector<Move>>& other,
                    bool forward_side) -> std::optional<std::vector<Move>> {
    std::vector<Key> next;
    for (const auto& key : frontier) {
      const std::vector<Move> base = seen.at(key);
      for (int i = 1; i < n; ++i) {
        for (Direction dir : {Direction::forward, Direction::backward}) {
          Key k = key;
          move_in_place(k, i, dir);
          if (seen.count(k)) continue;
          std::vector<Move> w = base;
          w.push_back({i, dir});
          auto hit = other.find(k);
          if (hit != other.end()) {
            std::vector<Move> path = forward_side ? w : hit->second;
            auto tail = invert(forward_side ? hit->second : w);
            path.insert(path.end(), tail.begin(), tail.end());
            return path;
          }
          seen.emplace(k, std::move(w));
          next.push_back(std::move(k));
        }
      }
    }
    frontier = std::move(next);
    return std::nullopt;
  };

  for (int depth = 0; depth < max_depth; ++depth) {
    const bool from_side = frontier_from.size() <= frontier_to.size();
    auto found = from_side ? expand(frontier_from, seen_from, seen_to, true)
                           : expand(frontier_to, seen_to, seen_from, false);
    if (found) return found;
    if (frontier_from.empty() || frontier_to.empty()) break;
  }
  return std::nullopt;
}

}  // namespace monodromy
