#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcsemi/digraph.hpp"

namespace arcsemi {

enum class Verdict : unsigned char { True, False, NotApplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "not-applicable";
  }
}

// One classified property: the verdict, the digraph-side rule that decided
// it, and a short witness (offending cycle, sink, terminal components, ...).
struct Finding {
  Verdict verdict = Verdict::NotApplicable;
  std::string rule;
  std::string witness;

  bool is(bool b) const { return verdict == (b ? Verdict::True : Verdict::False); }
  bool applicable() const { return verdict != Verdict::NotApplicable; }
};

Finding make_finding(bool value, std::string rule, std::string witness = "");

struct GreensTrivialityReport {
  Finding h_trivial, r_trivial, l_trivial, j_trivial;
};

// H-trivial: every strong component closes to a path.  R-trivial: acyclic.
// L-trivial: out-degrees <= 1 and no cycle longer than 2.  J-trivial: both.
GreensTrivialityReport greens_triviality(const Digraph& d);

struct RegularityReport {
  Finding band, completely_regular, inverse, commutative, semilattice;
  Finding regular;  // decided for acyclic digraphs only
};

RegularityReport regularity_family(const Digraph& d);

struct ZeroReport {
  Finding has_left_zero, has_right_zero, has_zero;  // connected digraphs only
  Finding left_zero_semigroup, right_zero_semigroup;
};

ZeroReport zero_family(const Digraph& d);

struct SimplicityReport {
  Finding trivial, group;
  Finding simple, rectangular_band;  // connected digraphs only
  Finding zero_simple, congruence_free;
};

SimplicityReport simplicity_family(const Digraph& d);

// Number of elements when every non-trivial component is a fan.
std::optional<unsigned long long> predicted_size(const Digraph& d);

struct PropertyReport {
  GreensTrivialityReport greens;
  RegularityReport regularity;
  ZeroReport zeros;
  SimplicityReport simplicity;
  std::optional<unsigned long long> size_if_fans;
};

PropertyReport classify(const Digraph& d);

// Stable field order for serialization and comparison loops.
std::vector<std::pair<std::string, const Finding*>> flattened(const PropertyReport& r);

// True when D contains a cycle of length >= 3 (2-cycles allowed).
bool has_long_cycle(const Digraph& d);

}  // namespace arcsemi
