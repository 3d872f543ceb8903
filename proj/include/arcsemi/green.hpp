#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arcsemi/semigroup.hpp"

namespace arcsemi {

struct GreenStructure {
  std::vector<std::int32_t> r_class, l_class, h_class, j_class;  // per element
  int n_r = 0, n_l = 0, n_h = 0, n_j = 0;
  std::vector<char> regular;           // per element
  std::vector<std::int32_t> idempotents;
};

GreenStructure green_structure(const SemigroupTable& s);

// Brute-force property flags of an explicitly enumerated semigroup.
struct OracleReport {
  std::size_t size = 0;
  bool band = false;
  bool commutative = false;
  bool semilattice = false;
  bool regular = false;
  bool completely_regular = false;
  bool inverse = false;
  bool h_trivial = false, r_trivial = false, l_trivial = false, j_trivial = false;
  bool aperiodic = false;
  std::vector<std::int32_t> left_zeros, right_zeros;
  std::optional<std::int32_t> zero;
  bool left_zero_semigroup = false, right_zero_semigroup = false;
  bool simple = false, rectangular_band = false, zero_simple = false;
  bool has_left_zero() const { return !left_zeros.empty(); }
  bool has_right_zero() const { return !right_zeros.empty(); }
  bool trivial() const { return size == 1; }
  bool group = false;  // single H-class
};

OracleReport probe(const SemigroupTable& s, const GreenStructure& g);
OracleReport probe(const SemigroupTable& s);

// Smallest congruence containing (a, b) is universal.
bool principal_congruence_universal(const SemigroupTable& s, int a, int b);

// Every principal congruence is universal, checked pair by pair.
bool all_principal_congruences_universal(const SemigroupTable& s);

// Finite congruence-free test.  |S| <= 2 is always congruence-free; larger
// semigroups must be 0-simple or a group before the pair sweep confirms.
bool is_congruence_free(const SemigroupTable& s);

inline constexpr std::size_t kCongruenceCap = 5000;

}  // namespace arcsemi
