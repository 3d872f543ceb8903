#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "arcsemi/digraph.hpp"

namespace arcsemi {

// Adjacency bitmask with bit (u-1)*n + (v-1) per arc; defined for n <= 8.
std::uint64_t adjacency_mask(const Digraph& d);
Digraph digraph_from_mask(int n, std::uint64_t mask);

// Lexicographically minimal adjacency mask over all vertex permutations.
std::uint64_t canonical_form(const Digraph& d);  // n <= 8

bool is_isomorphic(const Digraph& a, const Digraph& b);  // n <= 8

// Streams all 2^{n(n-1)} labelled digraphs in mask order, or one canonical
// representative per isomorphism class.  n <= 5.
void for_each_digraph(int n, bool up_to_iso,
                      const std::function<void(const Digraph&)>& fn);
std::vector<Digraph> all_digraphs(int n, bool up_to_iso);

// Connected graphs on n vertices, one per isomorphism class, deterministic
// order.  Practical for n <= 7.
std::vector<Graph> connected_graphs_up_to_iso(int n);

}  // namespace arcsemi
