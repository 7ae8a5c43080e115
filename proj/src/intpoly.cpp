#include "monodromy/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace monodromy {

namespace {

// Appends "c*mono" to a signed-sum string, handling the +-1 cases.
void append_term(std::ostringstream& os, bool first, const BigInt& coeff,
                 const std::string& mono) {
  BigInt mag = abs(coeff);
  if (first) {
    if (coeff < 0) os << "-";
  } else {
    os << (coeff < 0 ? " - " : " + ");
  }
  if (mono.empty()) {
    os << mag;
  } else if (mag == 1) {
    os << mono;
  } else {
    os << mag << "*" << mono;
  }
}

std::string power_str(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

// ----------------------------------------------------------------- BiPoly

BiPoly::BiPoly(const BigInt& c) {
  if (c != 0) terms_[{0, 0}] = c;
}

BiPoly BiPoly::monomial(int i, int j, const BigInt& coeff) {
  BiPoly out;
  out.add_term({i, j}, coeff);
  return out;
}

void BiPoly::add_term(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BigInt BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  BiPoly out;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      out.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    }
  }
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result(1);
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

BigInt BiPoly::eval(const BigInt& x, const BigInt& y) const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    total += c * boost::multiprecision::pow(x, static_cast<unsigned>(e.first)) *
             boost::multiprecision::pow(y, static_cast<unsigned>(e.second));
  }
  return total;
}

std::string BiPoly::str(const std::string& xname, const std::string& yname) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, BigInt>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    int dl = l.first.first + l.first.second;
    int dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    std::string mono = power_str(xname, e.first);
    std::string ypart = power_str(yname, e.second);
    if (!mono.empty() && !ypart.empty()) mono += "*";
    mono += ypart;
    append_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------------- operations

BiPoly substitute_linear(const BiPoly& f, const Mat2& m) {
  const BiPoly nx = BiPoly::monomial(1, 0, m.a()) + BiPoly::monomial(0, 1, m.b());
  const BiPoly ny = BiPoly::monomial(1, 0, m.c()) + BiPoly::monomial(0, 1, m.d());
  std::map<int, BiPoly> xpow, ypow;
  auto cached = [](std::map<int, BiPoly>& cache, const BiPoly& base, int e) -> const BiPoly& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    return cache.emplace(e, base.pow(static_cast<unsigned>(e))).first->second;
  };
  BiPoly out;
  for (const auto& [e, c] : f.terms()) {
    out += BiPoly(c) * cached(xpow, nx, e.first) * cached(ypow, ny, e.second);
  }
  return out;
}

BiPoly partial(const BiPoly& f, Var v) {
  BiPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (v == Var::x && e.first > 0) {
      out += BiPoly::monomial(e.first - 1, e.second, c * e.first);
    } else if (v == Var::y && e.second > 0) {
      out += BiPoly::monomial(e.first, e.second - 1, c * e.second);
    }
  }
  return out;
}

BiPoly jacobian(const BiPoly& f, const BiPoly& g) {
  return partial(f, Var::x) * partial(g, Var::y) - partial(f, Var::y) * partial(g, Var::x);
}

BiPoly homogeneous_part(const BiPoly& f, int d) {
  BiPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (e.first + e.second == d) out += BiPoly::monomial(e.first, e.second, c);
  }
  return out;
}

BiPoly norm3() {
  return BiPoly::monomial(2, 0, 1) - BiPoly::monomial(1, 1, 1) + BiPoly::monomial(0, 2, 1);
}

BiPoly norm4() { return BiPoly::monomial(2, 0, 1) + BiPoly::monomial(0, 2, 1); }

BiPoly sixth_power_sum() {
  const BiPoly trace = BiPoly(2) * BiPoly::x() - BiPoly::y();
  const BiPoly norm = norm3();
  BiPoly prev(2);
  BiPoly cur = trace;
  for (int k = 1; k < 6; ++k) {
    BiPoly next = trace * cur - norm * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::from_ints(std::initializer_list<long long> coeffs) {
  std::vector<BigInt> c;
  for (long long v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
  std::vector<BigInt> c = c_;
  for (auto& v : c) v = -v;
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c));
}

BigInt UniPoly::eval(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

BiPoly UniPoly::compose(const BiPoly& n) const {
  BiPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * n + BiPoly(*it);
  return acc;
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    append_term(os, first, c_[i], power_str(var, i));
    first = false;
  }
  return os.str();
}

// --------------------------------------------------------- norm expansion

std::optional<UniPoly> express_in_norm(const BiPoly& f, const BiPoly& n) {
  const int dn = n.total_degree();
  if (dn <= 0) return std::nullopt;
  const BiPoly top = homogeneous_part(n, dn);

  std::vector<BigInt> g;
  BiPoly rest = f;
  while (!rest.is_zero()) {
    const int d = rest.total_degree();
    if (d % dn != 0) return std::nullopt;
    const int m = d / dn;
    const BiPoly head = homogeneous_part(rest, d);
    const BiPoly top_pow = top.pow(static_cast<unsigned>(m));
    // Compare on the lexicographically largest monomial of top^m.
    const auto& [lead_exp, lead_coeff] = *top_pow.terms().rbegin();
    const BigInt h = head.coeff(lead_exp.first, lead_exp.second);
    if (h % lead_coeff != 0) return std::nullopt;
    const BigInt c = h / lead_coeff;
    if (!(head == BiPoly(c) * top_pow)) return std::nullopt;
    if (static_cast<int>(g.size()) <= m) g.resize(m + 1);
    g[m] += c;
    rest -= BiPoly(c) * n.pow(static_cast<unsigned>(m));
  }
  UniPoly result(std::move(g));
  if (!(result.compose(n) == f)) return std::nullopt;
  return result;
}

// ----------------------------------------------------------- root split

namespace {

// Synthetic division by (t - r); assumes r is a root.
UniPoly divide_linear(const UniPoly& g, const BigInt& r) {
  const auto& c = g.coeffs();
  std::vector<BigInt> q(c.size() - 1);
  BigInt carry = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i) {
    carry = c[i] + carry * r;
    q[i - 1] = carry;
  }
  return UniPoly(std::move(q));
}

std::optional<BigInt> find_integer_root(const UniPoly& g) {
  const BigInt& c0 = g.coeffs().front();
  if (c0 == 0) return BigInt(0);
  const BigInt mag = abs(c0);
  if (mag > BigInt(1'000'000'000'000LL)) return std::nullopt;
  for (BigInt d = 1; d * d <= mag; ++d) {
    if (mag % d != 0) continue;
    for (const BigInt& cand : {d, BigInt(mag / d)}) {
      if (g.eval(cand) == 0) return cand;
      if (g.eval(-cand) == 0) return BigInt(-cand);
    }
  }
  return std::nullopt;
}

}  // namespace

IntegerRootSplit split_integer_roots(const UniPoly& g) {
  IntegerRootSplit out;
  if (g.is_zero()) {
    out.content = 0;
    return out;
  }
  BigInt content = 0;
  for (const auto& c : g.coeffs()) content = gcd(content, c);
  if (g.coeffs().back() < 0) content = -content;
  std::vector<BigInt> prim;
  for (const auto& c : g.coeffs()) prim.push_back(c / content);
  UniPoly rest(std::move(prim));
  while (rest.degree() >= 1) {
    auto root = find_integer_root(rest);
    if (!root) break;
    out.roots.push_back(*root);
    rest = divide_linear(rest, *root);
  }
  std::sort(out.roots.begin(), out.roots.end(), std::greater<>());
  out.content = content;
  out.cofactor = rest;
  return out;
}

UniPoly IntegerRootSplit::expand() const {
  UniPoly acc = UniPoly(std::vector<BigInt>{content}) * cofactor;
  for (const auto& r : roots) acc = acc * UniPoly(std::vector<BigInt>{-r, 1});
  return acc;
}

std::string IntegerRootSplit::str(const std::string& var) const {
  std::ostringstream os;
  std::vector<std::string> factors;
  for (const auto& r : roots) {
    if (r == 0) {
      factors.push_back(var);
    } else {
      factors.push_back("(" + var + (r < 0 ? " + " : " - ") + to_string(abs(r)) + ")");
    }
  }
  const bool trivial_cofactor = cofactor.degree() == 0 && cofactor.coeffs()[0] == 1;
  if (!trivial_cofactor) {
    factors.push_back(cofactor.degree() >= 1 ? "(" + cofactor.str(var) + ")"
                                             : cofactor.str(var));
  }
  if (content == -1) {
    os << "-";
  } else if (content != 1) {
    os << content << "*";
  }
  if (factors.empty()) return content == 1 || content == -1 ? os.str() + "1" : to_string(content);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) os << "*";
    os << factors[i];
  }
  return os.str();
}

}  // namespace monodromy
