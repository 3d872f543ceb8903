#pragma once

#include <vector>

#include "arcsemi/digraph.hpp"

namespace arcsemi {

struct SccPartition {
  std::vector<int> component_of;              // 1..n -> component id
  std::vector<std::vector<int>> components;   // sorted vertex lists, ordered by smallest vertex
};

SccPartition strong_components(const Digraph& d);

// Induced subdigraph on the given vertices, relabelled to 1..k in the sorted
// order of the vertex list.
Digraph induced_subdigraph(const Digraph& d, const std::vector<int>& vertices);

// D plus the arc (b, a) for every arc (a, b) lying on a cycle of D.
Digraph closure(const Digraph& d);

struct Condensation {
  SccPartition scc;
  Digraph quotient;                    // vertex i+1 stands for scc.components[i]
  std::vector<int> terminal_components;  // component ids that are sinks of the quotient
};

Condensation condensation_and_terminals(const Digraph& d);

Graph underlying_graph(const Digraph& d);
std::vector<std::vector<int>> weak_components(const Digraph& d);
bool is_weakly_connected(const Digraph& d);

enum class Bipartiteness { NotBipartite, BipartiteEven, OddBipartite };

struct BipartiteWitness {
  Bipartiteness kind;
  std::vector<int> side;  // per vertex 0/1 when bipartite, empty otherwise
};

BipartiteWitness bipartite_test(const Graph& g);  // pre: g connected

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // sorted vertex sets
  std::vector<int> cut_vertices;         // sorted
};

BlockDecomposition blocks(const Graph& g);  // pre: g connected
bool is_nonseparable(const Graph& g);       // one block covering all vertices; K_2 counts

struct Branch {
  std::vector<int> vertices;  // path order, lexicographically smaller orientation
  bool terminal;              // an attachment side is a single degree-1 vertex
  int length() const { return static_cast<int>(vertices.size()); }
};

// All maximal paths of degree-2 vertices.  Pre: g connected and not a cycle
// graph (throws "no branch decomposition" on cycles).
std::vector<Branch> branches(const Graph& g);
Branch longest_branch(const Graph& g);  // ties: lexicographically smallest vertex list

Graph delete_vertex(const Graph& g, int v);          // relabels to 1..n-1
Graph delete_edge(const Graph& g, int u, int v);
Graph contract_edge(const Graph& g, int u, int v);   // merges v into u, relabels

}  // namespace arcsemi
