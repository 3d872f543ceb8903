#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcsemi {

using VertexPair = std::pair<int, int>;

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

// Loop-free digraph on vertices 1..n.  Arcs have set semantics and are kept
// as sorted out- and in-adjacency lists.  Immutable after construction.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, std::span<const VertexPair> arc_list);
  Digraph(int n, std::initializer_list<VertexPair> arc_list)
      : Digraph(n, std::span<const VertexPair>(arc_list.begin(), arc_list.size())) {}

  int vertex_count() const { return n_; }
  int arc_count() const { return arc_count_; }
  bool has_arc(int u, int v) const;
  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
  bool is_sink(int v) const { return out_[v].empty(); }
  bool is_isolated(int v) const { return out_[v].empty() && in_[v].empty(); }

  // All arcs in lexicographic order.
  std::vector<VertexPair> arcs() const;

  bool is_symmetric() const;

  bool operator==(const Digraph& other) const;

 private:
  int n_ = 0;
  int arc_count_ = 0;
  std::vector<std::vector<int>> out_;  // index 0 unused
  std::vector<std::vector<int>> in_;
};

// Symmetric digraph; edges reported as unordered pairs {u, v}, u < v.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Digraph d);  // throws if d is not symmetric
  static Graph from_edges(int n, std::span<const VertexPair> edges);
  static Graph from_edges(int n, std::initializer_list<VertexPair> edges) {
    return from_edges(n, std::span<const VertexPair>(edges.begin(), edges.size()));
  }

  const Digraph& digraph() const { return d_; }
  int vertex_count() const { return d_.vertex_count(); }
  int edge_count() const { return d_.arc_count() / 2; }
  bool has_edge(int u, int v) const { return d_.has_arc(u, v); }
  const std::vector<int>& neighbours(int v) const { return d_.out(v); }
  int degree(int v) const { return d_.out_degree(v); }
  std::vector<VertexPair> edges() const;

  bool operator==(const Graph& other) const { return d_ == other.d_; }

 private:
  Digraph d_;
};

// Edge-list text format: '#' comment lines, first data line "n", then one
// "u v" arc per line.
Digraph parse_digraph(std::string_view text);
std::string write_digraph(const Digraph& d);

}  // namespace arcsemi
