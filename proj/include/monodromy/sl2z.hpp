#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "monodromy/bigint.hpp"
#include "monodromy/errors.hpp"

namespace monodromy {

/// Integer vector (p, q) with gcd(|p|, |q|) = 1.
class PrimVec {
 public:
  /// Throws InvalidVector for (0,0) or an imprimitive pair.
  PrimVec(BigInt p, BigInt q);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }

  PrimVec operator-() const { return PrimVec(-p_, -q_, Trusted{}); }

  /// Sign representative: first nonzero coordinate positive.
  PrimVec normalized() const;

  /// v == w or v == -w.
  bool same_line(const PrimVec& other) const;

  friend bool operator==(const PrimVec&, const PrimVec&) = default;
  friend bool operator<(const PrimVec& a, const PrimVec& b) {
    return a.p_ != b.p_ ? a.p_ < b.p_ : a.q_ < b.q_;
  }

  std::string str() const;

 private:
  struct Trusted {};
  PrimVec(BigInt p, BigInt q, Trusted) : p_(std::move(p)), q_(std::move(q)) {}
  friend class Mat2;

  BigInt p_;
  BigInt q_;
};

/// Symplectic pairing (x, v) = x1 v2 - x2 v1.
BigInt pairing(const BigInt& x1, const BigInt& x2, const BigInt& v1, const BigInt& v2);

/// 2x2 integer matrix [[a, b], [c, d]] with determinant +1 or -1.
class Mat2 {
 public:
  /// Throws NotSL2 when the determinant is not +-1.
  Mat2(BigInt a, BigInt b, BigInt c, BigInt d);

  static Mat2 identity() { return Mat2(1, 0, 0, 1, Trusted{}); }

  const BigInt& a() const { return e_[0]; }
  const BigInt& b() const { return e_[1]; }
  const BigInt& c() const { return e_[2]; }
  const BigInt& d() const { return e_[3]; }
  const std::array<BigInt, 4>& entries() const { return e_; }

  BigInt det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  BigInt trace() const { return e_[0] + e_[3]; }
  bool is_sl2() const { return det() == 1; }
  bool is_identity() const;

  Mat2 inverse() const;
  Mat2 operator-() const { return Mat2(-e_[0], -e_[1], -e_[2], -e_[3], Trusted{}); }
  Mat2 operator*(const Mat2& rhs) const;
  Mat2& operator*=(const Mat2& rhs) { return *this = *this * rhs; }

  /// M^k for any integer k (negative powers use the inverse).
  Mat2 pow(long long k) const;

  /// Image of a primitive vector; primitive again since det = +-1.
  PrimVec apply(const PrimVec& v) const;

  /// Largest absolute entry.
  BigInt max_abs_entry() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend bool operator<(const Mat2& x, const Mat2& y) { return x.e_ < y.e_; }

  std::string str() const;

 private:
  struct Trusted {};
  Mat2(BigInt a, BigInt b, BigInt c, BigInt d, Trusted)
      : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
  friend Mat2 twist_matrix(const BigInt& p, const BigInt& q);

  std::array<BigInt, 4> e_;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);
std::ostream& operator<<(std::ostream& os, const PrimVec& v);

/// Order of an SL2(Z) element.
struct MatOrder {
  enum class Kind { finite, parabolic, hyperbolic };
  Kind kind = Kind::finite;
  int k = 1;  // meaningful only for Kind::finite

  static MatOrder finite(int k) { return {Kind::finite, k}; }
  static MatOrder parabolic() { return {Kind::parabolic, 0}; }
  static MatOrder hyperbolic() { return {Kind::hyperbolic, 0}; }

  bool is_finite() const { return kind == Kind::finite; }
  friend bool operator==(const MatOrder&, const MatOrder&) = default;
  std::string str() const;
};

/// The matrix of x -> x + (x, v) v, i.e. [[1+pq, -p^2], [q^2, 1-pq]].
/// Throws InvalidVector for the zero vector; v and -v give the same matrix.
Mat2 transvection(const PrimVec& v);

/// Same formula for an arbitrary integer vector (used for real-locus slices;
/// imprimitive vectors give powers of a transvection).
Mat2 twist_matrix(const BigInt& p, const BigInt& q);

/// Recovers v from T_v, normalised so the first nonzero coordinate is
/// positive. Returns nullopt for anything that is not a single transvection.
std::optional<PrimVec> transvection_vector(const Mat2& m);

/// C M C^-1. Throws NotSL2 unless det C = 1.
Mat2 conjugate(const Mat2& c, const Mat2& m);

/// Classifies by trace and cross-checks against iterated powers.
MatOrder order_of(const Mat2& m);

/// Letters of a word in S = [[0,-1],[1,0]] and T = [[1,1],[0,1]].
struct StLetter {
  enum class Gen { S, T };
  Gen gen;
  BigInt exponent;
};

/// Word w with M = product of letters, obtained by Euclidean reduction.
std::vector<StLetter> st_decomposition(const Mat2& m);

/// Evaluates an S/T word back to a matrix.
Mat2 evaluate_st_word(const std::vector<StLetter>& word);

/// Image under SL2(Z) -> Z/12Z normalised by T -> 1 (so S -> 9).
int abelianize(const Mat2& m);

/// All D in SL2(Z) with D a = b: particular * step^k for k in Z, where
/// step = T_a generates the stabiliser of a.
struct TransporterFamily {
  Mat2 particular;
  Mat2 step;

  Mat2 at(long long k) const { return particular * step.pow(k); }
};

TransporterFamily solve_vector_transporter(const PrimVec& a, const PrimVec& b);

/// Completes a primitive vector to a det-1 matrix with first column v.
Mat2 complete_to_sl2(const PrimVec& v);

/// Primitive vectors with |p|, |q| <= box, sorted. With up_to_sign only the
/// normalised representative of each +-pair is returned.
std::vector<PrimVec> primitive_vectors(int box, bool up_to_sign);

/// Every SL2(Z) matrix with all |entries| <= box, sorted.
std::vector<Mat2> sl2_in_box(int box);

}  // namespace monodromy
