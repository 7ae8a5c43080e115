#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monodromy/hurwitz.hpp"
#include "monodromy/intpoly.hpp"
#include "monodromy/sl2z.hpp"

namespace monodromy {

// ------------------------------------------------------------ canonical C

enum class CanonicalC { c3, c4, c6 };

const std::array<CanonicalC, 3>& all_canonical();
std::string to_string(CanonicalC c);
/// Accepts "3", "4", "6", "C3", "c4", ...
CanonicalC parse_canonical(const std::string& s);

/// [[0,-1],[1,-1]], [[0,-1],[1,0]], [[1,-1],[1,0]].
Mat2 matrix_of(CanonicalC c);
/// Length k of the repeating block: 3, 2, 3.
int period_of(CanonicalC c);
/// N3 for C3 and C6, N4 for C4.
BiPoly norm_of(CanonicalC c);

// ------------------------------------------------------- trace polynomials

/// tr(T_v T_{Cv} ... T_{C^{k-1} v}) with v = (x, y) symbolic.
BiPoly trace_polynomial(CanonicalC c);

/// The trace of the same product at a concrete vector, by multiplication.
BigInt trace_by_product(CanonicalC c, const BigInt& p, const BigInt& q);

/// Transvection tuple (T_v, T_{Cv}, ..., T_{C^{n-1} v}).
std::vector<Mat2> orbit_tuple(const Mat2& c, const PrimVec& v, int n);

struct ConicOrbit {
  /// v, Cv, C^2 v, ... up to the first return to +-v.
  std::vector<PrimVec> members;
  BigInt norm;
  BigInt trace;
  /// Order of T_v T_{Cv} ... T_{C^{k-1} v}.
  MatOrder product_order;
};

struct ConicTable {
  CanonicalC c;
  /// Largest norm value t with |g(t)| <= 2, where f = g(N).
  BigInt norm_bound;
  /// Coordinate box implied by norm_bound.
  int box;
  std::vector<ConicOrbit> orbits;
};

/// Every primitive v with |f(v)| <= 2, grouped into orbits of v -> Cv up to
/// sign. The search box is derived from the norm expansion of f.
ConicTable enumerate_conic_points(CanonicalC c);

// --------------------------------------------------------- classification

struct ClassReport {
  int period = 0;
  Factorization representative{std::vector<Mat2>{}};
  Mat2 conjugator = Mat2::identity();
  /// D with D X_i D^-1 equal to the matching canonical tuple.
  Mat2 witness = Mat2::identity();
  /// "standard", "period3" or "unmatched".
  std::string canonical;
  /// "structured" or "oracle".
  std::string provenance;
  PrimVec seed{1, 0};
};

/// Smallest p > 0 with X_{i+p} = X_i for all i (cyclically).
int tuple_period(std::span<const Mat2> xs);

/// Structured search: conic points of each canonical C, filtered by
/// (X_1 ... X_k)^{n/k} = Id, deduplicated up to simultaneous conjugation.
/// Empty unless 12 | n. Throws std::invalid_argument for n <= 0.
std::vector<ClassReport> classify_rotation_invariant(int n);

/// Independent oracle: tests the defining conditions by direct n-fold
/// products over all primitive v in the box and C in {C3, C4, C6}, then over
/// every finite-order C in the box.
std::vector<ClassReport> oracle_rotation_invariant(int n, int box, int jobs = 1);

/// Same classes (period and canonical match, in order)?
bool same_classes(const std::vector<ClassReport>& a, const std::vector<ClassReport>& b);

// -------------------------------------------------- nonexistence searches

struct DecoratedSolution {
  Mat2 c;
  Factorization tuple;
};

/// Tuples (L, X_1, ..., X_{n-1}) with X_1 = T_v, L = T_w, C X_i C^-1 =
/// X_{i+1} (indices mod n-1), C L C^-1 = X_1^-1 L X_1 and product Id, over
/// every C in SL2(Z) with entries in the box and v, w in the box.
std::vector<DecoratedSolution> search_tau_fixed(int n, int box, int jobs = 1);

/// Tuples (L_1, X_1, ..., X_{n-2}, L_2) with X_1, L_1, L_2 transvections,
/// C X_i C^-1 = X_{i+1} (mod n-2), C L_1 C^-1 = X_1^-1 L_1 X_1,
/// C L_2 C^-1 = L_2 and product Id. Requires n >= 2.
std::vector<DecoratedSolution> search_eta_fixed(int n, int box, int jobs = 1);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// T_v^k is a transvection exactly when k = 1 (|p|,|q| <= box, |k| <= kmax).
CheckResult check_transvection_powers(int box = 5, int kmax = 10);
/// No two transvections multiply to Id: their product abelianizes to 22 = 10.
CheckResult check_pair_branch(int box = 3);
/// No three transvections multiply to Id: 33 = 9 mod 12.
CheckResult check_triple_branch(int box = 2);
/// C^m v = +-v forces C v = +-v or order(C) in {3, 4, 6}.
CheckResult check_fixed_line_trichotomy(int m, int box = 4);
/// C^j L C^-j = (X_1...X_j)^-1 L (X_1...X_j) from the tau conditions, as
/// free-group words, for j = 1..jmax.
CheckResult check_tau_conjugation_chain(int jmax = 6);

struct DerivationStep {
  std::string statement;
  bool verified = false;
  std::string detail;
};

struct Derivation {
  std::vector<DerivationStep> steps;
  /// Where the chain breaks down, e.g. "1 - n = 1 forces n = 0".
  std::string contradiction;
  bool reached() const;
};

/// Replays the forced chain L_2 = X_1, X_i = X_1, L_1 = X_1^{1-n} for the
/// eta conditions, checking each step on words and on matrices.
Derivation derive_eta_contradiction(int max_len = 12);

// --------------------------------------------------------- explorations

/// M_0 = T_a, middle (T_b T_a)^11 read as 22 letters, M_inf = T_b with
/// a = (1,0), b = (0,1).
Factorization build_eta12_example();

struct EtaPowerRow {
  int s;
  bool product_ok;
  bool fixed;
  std::optional<Mat2> witness;
};

struct EtaAnalysis {
  std::vector<EtaPowerRow> rows;
  std::optional<int> minimal_power;
  /// Order of the shift by `probe` on Z/mZ, m = number of middle letters.
  int probe = 12;
  int induced_order = 0;
  bool probe_fixed = false;
};

EtaAnalysis analyze_eta_fixing(const Factorization& f, int max_s = 12, int probe = 12);

struct HalfRotationReport {
  int n = 0;
  bool assignment_found = false;
  PrimVec gamma{1, 1};
  PrimVec delta{1, -1};
  Mat2 block_product = Mat2::identity();
  MatOrder block_order;
  std::optional<Factorization> tuple;
  /// found flag for each shift s = 1..n-1.
  std::vector<bool> shift_found;
  std::optional<int> minimal_shift;
  int induced_order = 0;
};

/// Farey neighbours gamma, delta of a = (1,0), b = (0,1) (within `box`) such
/// that the block (T_a T_g T_b)(T_b T_d T_a) has (n/6)-th power Id.
HalfRotationReport explore_half_rotation(int n, int box = 2);

/// tr prod_{i<k} T_{C^i v} T_{C^i w}; arbitrary integer vectors allowed.
BigInt two_vector_trace(CanonicalC c, const BigInt& p1, const BigInt& q1, const BigInt& p2,
                        const BigInt& q2);
BigInt two_vector_trace(CanonicalC c, const PrimVec& v, const PrimVec& w);

struct SliceRow {
  std::array<long long, 4> coords;  // p1, q1, p2, q2
  BigInt g;
};

/// Evaluates two_vector_trace on the grid [-range, range] for every free
/// coordinate; `fixed` maps coordinate names (p1, q1, p2, q2 or v1, v2, w1,
/// w2) to values. Rows are in lexicographic order of (p1, q1, p2, q2).
std::vector<SliceRow> slice_grid(CanonicalC c, const std::map<std::string, long long>& fixed,
                                 int range);

}  // namespace monodromy
