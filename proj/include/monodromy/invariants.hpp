#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monodromy/classify.hpp"
#include "monodromy/intpoly.hpp"
#include "monodromy/sl2z.hpp"

namespace monodromy {

/// Finite subgroup of GL2(Z) given by generators and its full element list.
struct SymmetryGroup {
  std::vector<Mat2> generators;
  std::vector<Mat2> elements;  // sorted
  /// "cyclic(4)", "dihedral(8)", "abelian(4)" or "group(n)".
  std::string structure;

  std::size_t order() const { return elements.size(); }
  bool contains(const Mat2& m) const;
};

/// Closes the generators under multiplication. Throws std::runtime_error if
/// the closure exceeds `limit` elements (infinite group).
SymmetryGroup close_group(const std::vector<Mat2>& generators, std::size_t limit = 1000);

struct Commutant {
  /// Closure of { M : det M = +-1, |entries| <= box, M C = C M }.
  SymmetryGroup strict;
  /// <C, -Id, swap>, swap = [[0,1],[1,0]].
  SymmetryGroup extended;
};

Commutant commutant(const Mat2& c, int box = 3);

/// f(M (x, y)) = f for every M in the group.
bool check_invariance(const BiPoly& f, const SymmetryGroup& g);

/// Exact rational r = num / den with f = r * g, when one exists.
struct Ratio {
  BigInt num;
  BigInt den;
  std::string str() const;
};
std::optional<Ratio> constant_ratio(const BiPoly& f, const BiPoly& g);

enum class GeneratorCase { order34_6, order4 };
std::string to_string(GeneratorCase c);

struct GeneratorReport {
  GeneratorCase which;
  BiPoly f1, f2;
  SymmetryGroup group;
  bool invariant = false;
  BiPoly jacobian;
  bool jacobian_nonzero = false;
  int deg1 = 0, deg2 = 0, expected_degree = 0;
  bool degree_ok = false;
  /// Displayed reference Jacobian and the constant relating it, if any.
  BiPoly reference;
  std::optional<Ratio> ratio;
  /// 6 (2x - y)(2y - x) divides the Jacobian (order34_6 only).
  std::optional<bool> divisible;

  /// Invariance, nonzero Jacobian, degree product and divisibility.
  bool structural_ok() const;
};

GeneratorReport verify_generators(GeneratorCase which);

struct NormHeadReport {
  CanonicalC c;
  int k = 0;
  BiPoly head;
  std::optional<BigInt> constant;  // head = constant * N^k
  std::optional<UniPoly> remainder_in_norm;
  bool ok() const { return constant.has_value() && remainder_in_norm.has_value(); }
};

NormHeadReport norm_head_check(CanonicalC c);

/// One place where the reference text and the computation disagree.
struct Discrepancy {
  std::string item;
  std::string reference;
  std::string computed;
};

/// Recomputes every known disagreement with the reference display.
std::vector<Discrepancy> collect_discrepancies();

}  // namespace monodromy
