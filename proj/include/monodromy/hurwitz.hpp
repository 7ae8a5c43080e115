#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monodromy/sl2z.hpp"

namespace monodromy {

/// Marks which entries of a tuple are boundary letters.
///   none: (X_1, ..., X_n)
///   tau:  (L, X_1, ..., X_{n-1})
///   eta:  (M_0, X_1, ..., X_{n-2}, M_inf)
enum class Decoration { none, tau, eta };

std::string to_string(Decoration d);
Decoration parse_decoration(const std::string& s);

/// Ordered tuple of SL2(Z) matrices whose left-to-right product is Id.
/// The constructor is the only way in, so every instance is valid.
class Factorization {
 public:
  /// Throws NotSL2 for an entry with det != 1, ProductError when the product
  /// is not Id, and ShapeError when a decorated tuple is too short.
  explicit Factorization(std::vector<Mat2> entries, Decoration decoration = Decoration::none);

  const std::vector<Mat2>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Mat2& operator[](std::size_t i) const { return entries_[i]; }
  Decoration decoration() const { return decoration_; }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<Mat2> entries_;
  Decoration decoration_;
};

/// Left-to-right product of a list of matrices (Id for the empty list).
Mat2 product(std::span<const Mat2> ms);

enum class Direction { forward, backward };

/// sigma_i (forward) or its inverse (backward); index is 1-based.
struct Move {
  int index;
  Direction direction = Direction::forward;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Parses "s3,s1',s2" (a trailing ' marks the inverse move). Whitespace
/// around items is ignored; the empty string is the empty word.
std::vector<Move> parse_moves(const std::string& text);
std::string format_moves(const std::vector<Move>& word);

/// (Y1, Y2, Y1, Y2, ...) with Y1 = T_(1,0), Y2 = T_(0,1).
/// Throws NotRealizable unless n > 0 and 12 divides n.
Factorization standard_tuple(int n);

/// (Z1, Z2, Z3, Z1, ...) with Z1 = T_(1,0), Z2 = T_(1,1), Z3 = T_(0,1).
Factorization period3_tuple(int n);

/// Forward: (.., A, B, ..) -> (.., A B A^-1, A, ..) at positions i, i+1.
/// Backward is the inverse. Throws IndexError unless 1 <= i < size.
Factorization hurwitz_move(const Factorization& f, int i, Direction dir);

/// Applies the word letter by letter, first letter first.
Factorization apply_moves(const Factorization& f, const std::vector<Move>& word);

/// Cyclic shift (X_1, ..., X_n) -> (X_2, ..., X_n, X_1). Decorated tuples
/// are rejected with ShapeError.
Factorization rotate(const Factorization& f, int steps = 1);

/// (s1 s2 ... s_{n-1})(s1 ... s_{n-2}) ... (s1 s2) s1, as forward moves.
std::vector<Move> garside_word(int n);
/// The same braid written s1 (s2 s1) (s3 s2 s1) ... (s_{n-1} ... s1).
std::vector<Move> garside_word_alternate(int n);

/// Applies garside_word(n). Requires an undecorated tuple of length >= 2.
Factorization garside_act(const Factorization& f);

/// (L, X_1, ..., X_{n-1}) -> (X_1^-1 L X_1, X_2, ..., X_{n-1}, X_1).
Factorization tau_act(const Factorization& f);

/// (M_0, X_1, ..., X_m, M_inf) -> (X_1^-1 M_0 X_1, X_2, ..., X_m, X_1, M_inf).
/// The image is a factorization only when M_inf commutes with X_1; otherwise
/// ProductError is thrown.
Factorization eta_act(const Factorization& f);

/// Entries of eta^s(f) in closed form: M_0 is conjugated by P_s = X_1...X_s
/// (indices mod m), the X-block is shifted by s and M_inf is kept. No product
/// check is made, so this is defined for every s >= 0.
std::vector<Mat2> eta_power_entries(const Factorization& f, int s);

/// eta_power_entries wrapped as a Factorization (ProductError if broken).
Factorization eta_power(const Factorization& f, int s);

struct ConjugacyWitness {
  enum class Status { found, not_conjugate, inconclusive };
  enum class Method { trace_mismatch, anchor_pair, anchor_line, brute_force };

  Status status = Status::not_conjugate;
  std::optional<Mat2> conjugator;
  /// False only when the bounded brute-force fallback was used.
  bool complete = true;
  Method method = Method::trace_mismatch;

  bool found() const { return status == Status::found; }
};

std::string to_string(ConjugacyWitness::Status s);
std::string to_string(ConjugacyWitness::Method m);

struct ConjugacyOptions {
  /// Entry bound for the brute-force fallback (tuples without transvections).
  int fallback_bound = 6;
};

/// Decides whether some D in SL2(Z) has D A_i D^-1 = B_i for every i.
/// Throws ShapeError on a length mismatch.
ConjugacyWitness decide_sim_conjugacy(std::span<const Mat2> a, std::span<const Mat2> b,
                                      const ConjugacyOptions& opts = {});
ConjugacyWitness decide_sim_conjugacy(const Factorization& a, const Factorization& b,
                                      const ConjugacyOptions& opts = {});

/// decide_sim_conjugacy(f, rotate(f, s)), i.e. C with C X_i C^-1 = X_{i+s}.
ConjugacyWitness solve_shift_conjugator(const Factorization& f, int s,
                                        const ConjugacyOptions& opts = {});

/// Bounded bidirectional breadth-first search for a Hurwitz word taking
/// `from` to `to` exactly (no conjugation). Returns the word on success.
std::optional<std::vector<Move>> hurwitz_path_search(const Factorization& from,
                                                     const Factorization& to, int max_depth);

}  // namespace monodromy
