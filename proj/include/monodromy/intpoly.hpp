#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monodromy/bigint.hpp"
#include "monodromy/sl2z.hpp"

namespace monodromy {

/// Sparse polynomial in Z[x, y]. Zero coefficients are never stored, so
/// structural equality is polynomial equality.
class BiPoly {
 public:
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, BigInt>;

  BiPoly() = default;
  BiPoly(long long c) : BiPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  BiPoly(const BigInt& c);                    // NOLINT(google-explicit-constructor)

  static BiPoly x() { return monomial(1, 0, 1); }
  static BiPoly y() { return monomial(0, 1, 1); }
  static BiPoly monomial(int i, int j, const BigInt& coeff);

  const TermMap& terms() const { return terms_; }
  BigInt coeff(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs) { return *this = *this * rhs; }
  BiPoly pow(unsigned e) const;

  BigInt eval(const BigInt& x, const BigInt& y) const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Human-readable form, highest total degree first, e.g. "x^2 - x*y + y^2".
  std::string str(const std::string& xname = "x", const std::string& yname = "y") const;

 private:
  void add_term(const Exponent& e, const BigInt& c);
  TermMap terms_;
};

enum class Var { x, y };

/// f(M (x, y)^T): x -> a x + b y, y -> c x + d y.
BiPoly substitute_linear(const BiPoly& f, const Mat2& m);

BiPoly partial(const BiPoly& f, Var v);

/// df/dx dg/dy - df/dy dg/dx.
BiPoly jacobian(const BiPoly& f, const BiPoly& g);

/// Sum of the degree-d monomials of f.
BiPoly homogeneous_part(const BiPoly& f, int d);

/// x^2 - x y + y^2, the norm of x + y w on Z[w], w a primitive cube root of 1.
BiPoly norm3();
/// x^2 + y^2, the norm of x + y i on Z[i].
BiPoly norm4();

/// (x + y w)^6 + (x + y w-bar)^6 via s_{n+1} = (2x - y) s_n - N3 s_{n-1}.
BiPoly sixth_power_sum();

/// Dense univariate polynomial; coefficient i multiplies t^i. The leading
/// coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> coeffs);
  static UniPoly from_ints(std::initializer_list<long long> coeffs);
  static UniPoly t() { return from_ints({0, 1}); }

  const std::vector<BigInt>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;

  BigInt eval(const BigInt& t) const;
  /// g(N) as a bivariate polynomial.
  BiPoly compose(const BiPoly& n) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// g with f = g(N), found by graded leading-term division; nullopt when f is
/// not a polynomial in N. The identity is re-verified by expansion.
std::optional<UniPoly> express_in_norm(const BiPoly& f, const BiPoly& n);

/// Splits off the integer roots of g: g = content * prod (t - r) * cofactor,
/// with the cofactor primitive with positive leading coefficient.
struct IntegerRootSplit {
  BigInt content;
  std::vector<BigInt> roots;
  UniPoly cofactor;

  UniPoly expand() const;
  /// e.g. "-(N+1)(N^2+2N-2)".
  std::string str(const std::string& var) const;
};

IntegerRootSplit split_integer_roots(const UniPoly& g);

}  // namespace monodromy
