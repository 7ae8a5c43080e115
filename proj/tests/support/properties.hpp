#pragma once

#include <cstdint>
#include <string>

namespace props {

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  int positives = 0;  // cases where the checked relation holds (conjugacy suite)
  std::string first_failure;
};

// Randomized suites shared by the unit tests and the acceptance binary.
// Each is deterministic for a given seed.
Outcome conjugation_identity(int cases, std::uint64_t seed);
Outcome abelianization_homomorphism(int cases, std::uint64_t seed);
Outcome move_invertibility(int cases, std::uint64_t seed);
Outcome conjugacy_vs_brute_force(int cases, std::uint64_t seed);

}  // namespace props
