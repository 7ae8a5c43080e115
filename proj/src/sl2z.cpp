#include "monodromy/sl2z.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace monodromy {

// ---------------------------------------------------------------- PrimVec

PrimVec::PrimVec(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw InvalidVector("zero vector is not primitive");
  if (gcd(p_, q_) != 1) {
    throw InvalidVector("vector (" + to_string(p_) + "," + to_string(q_) +
                        ") is not primitive");
  }
}

PrimVec PrimVec::normalized() const {
  if (p_ < 0 || (p_ == 0 && q_ < 0)) return -*this;
  return *this;
}

bool PrimVec::same_line(const PrimVec& other) const {
  return normalized() == other.normalized();
}

std::string PrimVec::str() const {
  return "(" + to_string(p_) + "," + to_string(q_) + ")";
}

std::ostream& operator<<(std::ostream& os, const PrimVec& v) { return os << v.str(); }

BigInt pairing(const BigInt& x1, const BigInt& x2, const BigInt& v1, const BigInt& v2) {
  return x1 * v2 - x2 * v1;
}

// ------------------------------------------------------------------- Mat2

Mat2::Mat2(BigInt a, BigInt b, BigInt c, BigInt d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  BigInt dt = det();
  if (dt != 1 && dt != -1) {
    throw NotSL2("determinant " + to_string(dt) + " is not +-1");
  }
}

bool Mat2::is_identity() const {
  return e_[0] == 1 && e_[1] == 0 && e_[2] == 0 && e_[3] == 1;
}

Mat2 Mat2::inverse() const {
  if (det() == 1) return Mat2(e_[3], -e_[1], -e_[2], e_[0], Trusted{});
  return Mat2(-e_[3], e_[1], e_[2], -e_[0], Trusted{});
}

Mat2 Mat2::operator*(const Mat2& r) const {
  return Mat2(e_[0] * r.e_[0] + e_[1] * r.e_[2], e_[0] * r.e_[1] + e_[1] * r.e_[3],
              e_[2] * r.e_[0] + e_[3] * r.e_[2], e_[2] * r.e_[1] + e_[3] * r.e_[3],
              Trusted{});
}

Mat2 Mat2::pow(long long k) const {
  Mat2 base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  Mat2 result = identity();
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

PrimVec Mat2::apply(const PrimVec& v) const {
  return PrimVec(e_[0] * v.p_ + e_[1] * v.q_, e_[2] * v.p_ + e_[3] * v.q_,
                 PrimVec::Trusted{});
}

BigInt Mat2::max_abs_entry() const {
  BigInt m = 0;
  for (const auto& x : e_) m = std::max(m, abs(x));
  return m;
}

std::string Mat2::str() const {
  return "[[" + to_string(e_[0]) + "," + to_string(e_[1]) + "],[" + to_string(e_[2]) +
         "," + to_string(e_[3]) + "]]";
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.str(); }

std::string MatOrder::str() const {
  switch (kind) {
    case Kind::finite:
      return "Finite(" + std::to_string(k) + ")";
    case Kind::parabolic:
      return "Infinite(parabolic)";
    case Kind::hyperbolic:
      return "Infinite(hyperbolic)";
  }
  return "?";
}

// ----------------------------------------------------------- transvections

Mat2 twist_matrix(const BigInt& p, const BigInt& q) {
  BigInt pq = p * q;
  return Mat2(1 + pq, -(p * p), q * q, 1 - pq, Mat2::Trusted{});
}

Mat2 transvection(const PrimVec& v) { return twist_matrix(v.p(), v.q()); }

std::optional<PrimVec> transvection_vector(const Mat2& m) {
  // N = M - Id must be [[pq, -p^2], [q^2, -pq]] with gcd(p, q) = 1.
  BigInt n11 = m.a() - 1;
  BigInt n22 = m.d() - 1;
  if (n11 != -n22) return std::nullopt;
  auto p = exact_sqrt(-m.b());
  auto q = exact_sqrt(m.c());
  if (!p || !q) return std::nullopt;
  if (*p == 0 && *q == 0) return std::nullopt;
  BigInt qs = *q;
  if (*p * qs != n11) qs = -qs;
  if (*p * qs != n11) return std::nullopt;
  if (gcd(*p, qs) != 1) return std::nullopt;
  return PrimVec(*p, qs).normalized();
}

Mat2 conjugate(const Mat2& c, const Mat2& m) {
  if (!c.is_sl2()) throw NotSL2("conjugator must have determinant 1");
  return c * m * c.inverse();
}

// ------------------------------------------------------------------ order

MatOrder order_of(const Mat2& m) {
  if (!m.is_sl2()) throw NotSL2("order_of requires det = 1");
  const BigInt tr = m.trace();
  MatOrder result;
  if (tr == -1) {
    result = MatOrder::finite(3);
  } else if (tr == 0) {
    result = MatOrder::finite(4);
  } else if (tr == 1) {
    result = MatOrder::finite(6);
  } else if (tr == 2) {
    result = m.is_identity() ? MatOrder::finite(1) : MatOrder::parabolic();
  } else if (tr == -2) {
    result = (-m).is_identity() ? MatOrder::finite(2) : MatOrder::parabolic();
  } else {
    result = MatOrder::hyperbolic();
  }

  // Cross-check with iterated multiplication.
  Mat2 power = m;
  int first = 0;
  for (int j = 1; j <= 12; ++j) {
    if (power.is_identity()) {
      first = j;
      break;
    }
    power = power * m;
  }
  const bool consistent = result.is_finite() ? first == result.k : first == 0;
  if (!consistent) {
    throw std::logic_error("order_of: trace classification disagrees with powers for " +
                           m.str());
  }
  return result;
}

// --------------------------------------------------------- abelianization

namespace {

const Mat2& gen_s() {
  static const Mat2 s(0, -1, 1, 0);
  return s;
}

Mat2 t_power(const BigInt& k) {
  return Mat2(1, k, 0, 1);
}

}  // namespace

std::vector<StLetter> st_decomposition(const Mat2& m) {
  if (!m.is_sl2()) throw NotSL2("S/T decomposition requires det = 1");
  using Gen = StLetter::Gen;
  std::vector<StLetter> word;
  BigInt a = m.a(), b = m.b(), c = m.c(), d = m.d();
  // Invariant: m = word * [[a,b],[c,d]].
  while (c != 0) {
    BigInt k = floor_div(a, c);
    if (k != 0) {
      word.push_back({Gen::T, k});
      a -= k * c;
      b -= k * d;
    }
    // [[a,b],[c,d]] = S * [[c,d],[-a,-b]]
    word.push_back({Gen::S, 1});
    BigInt na = c, nb = d, nc = -a, nd = -b;
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
    d = std::move(nd);
  }
  if (a == 1) {
    if (b != 0) word.push_back({Gen::T, b});
  } else {
    // [[-1, b], [0, -1]] = S^2 T^-b
    word.push_back({Gen::S, 2});
    if (b != 0) word.push_back({Gen::T, -b});
  }
  return word;
}

Mat2 evaluate_st_word(const std::vector<StLetter>& word) {
  Mat2 result = Mat2::identity();
  for (const auto& letter : word) {
    if (letter.gen == StLetter::Gen::T) {
      result = result * t_power(letter.exponent);
    } else {
      long long e = floor_mod(letter.exponent, 4).convert_to<long long>();
      result = result * gen_s().pow(e);
    }
  }
  return result;
}

int abelianize(const Mat2& m) {
  BigInt total = 0;
  for (const auto& letter : st_decomposition(m)) {
    total += letter.gen == StLetter::Gen::T ? letter.exponent : BigInt(9) * letter.exponent;
  }
  return floor_mod(total, 12).convert_to<int>();
}

// ------------------------------------------------------------ transporter

Mat2 complete_to_sl2(const PrimVec& v) {
  // Extended Euclid: p*x + q*y = 1.
  BigInt old_r = v.p(), r = v.q();
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt quot = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, BigInt(old_r - quot * r));
    std::tie(old_s, s) = std::make_tuple(s, BigInt(old_s - quot * s));
    std::tie(old_t, t) = std::make_tuple(t, BigInt(old_t - quot * t));
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  // det [[p, -y], [q, x]] = p x + q y = 1
  return Mat2(v.p(), -old_t, v.q(), old_s);
}

TransporterFamily solve_vector_transporter(const PrimVec& a, const PrimVec& b) {
  Mat2 from = complete_to_sl2(a);
  Mat2 to = complete_to_sl2(b);
  return TransporterFamily{to * from.inverse(), transvection(a)};
}

// ------------------------------------------------------------ enumeration

std::vector<PrimVec> primitive_vectors(int box, bool up_to_sign) {
  std::vector<PrimVec> out;
  for (int p = -box; p <= box; ++p) {
    for (int q = -box; q <= box; ++q) {
      if (p == 0 && q == 0) continue;
      if (gcd(p, q) != 1) continue;
      PrimVec v(p, q);
      if (up_to_sign && !(v.normalized() == v)) continue;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mat2> sl2_in_box(int box) {
  std::vector<Mat2> out;
  for (int a = -box; a <= box; ++a) {
    for (int b = -box; b <= box; ++b) {
      for (int c = -box; c <= box; ++c) {
        if (a == 0) {
          if (b * c != -1) continue;
          for (int d = -box; d <= box; ++d) out.emplace_back(a, b, c, d);
        } else {
          int num = 1 + b * c;
          if (num % a != 0) continue;
          int d = num / a;
          if (d < -box || d > box) continue;
          out.emplace_back(a, b, c, d);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace monodromy
