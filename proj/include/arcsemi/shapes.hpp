#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcsemi/digraph.hpp"

namespace arcsemi {

// Fan is produced only by shape_of_digraph / fan_sink; recognize_shape works
// on graphs and never returns it.
enum class ShapeTag { Path, CycleGraph, Fan, Qn, Rn, K2, Complete, Star, Other };

std::string to_string(ShapeTag tag);

struct Shape {
  ShapeTag tag = ShapeTag::Other;
  int n = 0;
  int arms = 0;  // K_{arms,1} when tag == Star
};

// Pre: g connected.  Coincidences are resolved by priority: the 2-vertex
// graph is K2; Q3 = K3 and R4 = K_{3,1} report Qn / Rn.
Shape recognize_shape(const Graph& g);

// Sink of the fan when d is one (the 1-fan is a single vertex, no arcs).
std::optional<int> fan_sink(const Digraph& d);

struct DirectedBipartition {
  bool bipartite = false;
  std::vector<int> side;  // per vertex: 1 (sources and isolated) or 2 (targets)
};

// True iff no vertex has both an incoming and an outgoing arc.
DirectedBipartition directed_bipartition(const Digraph& d);

// Graph families.
Graph path_graph(int n);
Graph cycle_graph(int n);     // n >= 3
Graph complete_graph(int n);
Graph star_graph(int arms);   // K_{arms,1}; centre is vertex arms+1
Graph q_graph(int n);         // path 1..n plus edge {n-2, n}; n >= 3
Graph r_graph(int n);         // q_graph minus edge {n-1, n}; n >= 4
Graph bull_graph();           // triangle {3,4,5} with horns 1-3 and 2-4
Graph e_graph();              // path 1..5 with pendant 6 at vertex 3
Graph theta0_graph();         // hexagon 1..6 plus centre 7 adjacent to 1 and 4

// Digraph families.
Digraph fan_digraph(int n);   // arcs (i, n); n >= 1
Digraph oneway_path(int n);   // arcs (i, i+1)

// L and R joined by a path with path_len vertices; the attachment vertices
// must not have degree 1 (a one-vertex side attaches at its only vertex).
Graph oplus_join(const Graph& left, int attach_left, int path_len,
                 const Graph& right, int attach_right);

const std::vector<Digraph>& zero_simple_catalog();      // the two 3-vertex digraphs
const std::vector<Digraph>& congruence_free_catalog();  // the five digraphs

}  // namespace arcsemi
