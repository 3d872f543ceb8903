#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "arcsemi/digraph.hpp"
#include "arcsemi/transformation.hpp"

namespace arcsemi {

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

// Default cap, overridable through ARCSEMI_ELEMENT_CAP.
std::size_t resolved_element_cap();

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(std::size_t partial)
      : std::runtime_error("element cap exceeded after " +
                           std::to_string(partial) + " elements"),
        partial_count(partial) {}
  std::size_t partial_count;
};

// Breadth-first closure of the arc transformations of a digraph under
// right multiplication, with full left/right Cayley structure.
struct SemigroupTable {
  int degree = 0;
  std::vector<VertexPair> generator_arcs;          // lexicographic order
  std::vector<Transformation> generators;
  std::vector<Transformation> elements;            // BFS order, generators first
  std::vector<std::int32_t> word_parent;           // -1 for generators
  std::vector<std::int32_t> word_gen;              // appended generator index
  std::vector<std::int32_t> right_cayley;          // [x * gens + g] = index of x * gen_g
  std::vector<std::int32_t> left_cayley;           // [x * gens + g] = index of gen_g * x

  std::size_t size() const { return elements.size(); }
  int generator_count() const { return static_cast<int>(generators.size()); }
  int right(int x, int g) const { return right_cayley[x * generator_count() + g]; }
  int left(int x, int g) const { return left_cayley[x * generator_count() + g]; }
  int index_of(const Transformation& t) const;
  int product(int x, int y) const;                 // index of elements[x] * elements[y]
  std::vector<int> word_of(int x) const;           // generator indices, in order
  std::string export_elements() const;             // one "word : images" line per element

  std::unordered_map<Transformation, std::int32_t, TransformationHash> index;
};

// Pre: d has at least one arc.  Throws CapExceeded past element_cap.
SemigroupTable generate(const Digraph& d, std::size_t element_cap = kDefaultElementCap);

std::size_t semigroup_size(const Digraph& d, std::size_t element_cap = kDefaultElementCap);

// Maximum longest_cycle over the elements of <D>.  Stops early once the
// value cannot grow (degree - 1 is an upper bound for arc-generated maps).
int l_brute(const Digraph& d, std::size_t element_cap = kDefaultElementCap);

// True iff l(D) > k; enumeration stops at the first witness.
bool l_exceeds(const Digraph& d, int k, std::size_t element_cap = kDefaultElementCap);

}  // namespace arcsemi
