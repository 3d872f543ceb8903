#include "arcsemi/shapes.hpp"

#include <algorithm>

#include "arcsemi/decompose.hpp"

namespace arcsemi {

std::string to_string(ShapeTag tag) {
  switch (tag) {
    case ShapeTag::Path: return "path";
    case ShapeTag::CycleGraph: return "cycle";
    case ShapeTag::Fan: return "fan";
    case ShapeTag::Qn: return "Qn";
    case ShapeTag::Rn: return "Rn";
    case ShapeTag::K2: return "K2";
    case ShapeTag::Complete: return "complete";
    case ShapeTag::Star: return "star";
    case ShapeTag::Other: return "other";
  }
  return "other";
}

namespace {

bool degrees_are_path(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 2) return true;
  int ones = 0;
  for (int v = 1; v <= n; ++v) {
    int d = g.degree(v);
    if (d == 1)
      ++ones;
    else if (d != 2)
      return false;
  }
  return ones == 2;
}

bool is_q_graph(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3) return false;
  if (n == 3) return g.edge_count() == 3;  // Q3 = K3
  if (g.edge_count() != n) return false;
  int leaf = 0, three = 0;
  for (int v = 1; v <= n; ++v) {
    int d = g.degree(v);
    if (d == 1) {
      ++leaf;
    } else if (d == 3) {
      ++three;
    } else if (d != 2) {
      return false;
    }
  }
  if (leaf != 1 || three != 1) return false;
  // The unique cycle must be a triangle through the degree-3 vertex.
  for (int v = 1; v <= n; ++v) {
    if (g.degree(v) != 3) continue;
    const auto& nb = g.neighbours(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (g.has_edge(nb[i], nb[j])) return true;
    return false;
  }
  return false;
}

bool is_r_graph(const Graph& g) {
  int n = g.vertex_count();
  if (n < 4) return false;
  if (g.edge_count() != n - 1) return false;  // tree
  int leaf = 0, three = 0, centre = 0;
  for (int v = 1; v <= n; ++v) {
    int d = g.degree(v);
    if (d == 1) {
      ++leaf;
    } else if (d == 3) {
      ++three;
      centre = v;
    } else if (d != 2) {
      return false;
    }
  }
  if (leaf != 3 || three != 1) return false;
  int adjacent_leaves = 0;
  for (int w : g.neighbours(centre))
    if (g.degree(w) == 1) ++adjacent_leaves;
  return adjacent_leaves >= 2;  // R4 = K_{3,1} has all three
}

}  // namespace

Shape recognize_shape(const Graph& g) {
  int n = g.vertex_count();
  if (weak_components(g.digraph()).size() > 1)
    throw std::invalid_argument("recognize_shape requires a connected graph");
  if (n <= 1) return {ShapeTag::Path, n, 0};
  if (n == 2) return {ShapeTag::K2, 2, 0};
  if (is_q_graph(g)) return {ShapeTag::Qn, n, 0};
  if (is_r_graph(g)) return {ShapeTag::Rn, n, 0};
  if (degrees_are_path(g)) return {ShapeTag::Path, n, 0};
  bool all2 = true, complete = true;
  for (int v = 1; v <= n; ++v) {
    if (g.degree(v) != 2) all2 = false;
    if (g.degree(v) != n - 1) complete = false;
  }
  if (all2) return {ShapeTag::CycleGraph, n, 0};
  if (complete) return {ShapeTag::Complete, n, 0};
  int leaves = 0, centre = 0;
  for (int v = 1; v <= n; ++v) {
    if (g.degree(v) == 1)
      ++leaves;
    else
      centre = v;
  }
  if (leaves == n - 1 && centre != 0 && g.degree(centre) == n - 1)
    return {ShapeTag::Star, n, n - 1};
  return {ShapeTag::Other, n, 0};
}

std::optional<int> fan_sink(const Digraph& d) {
  int n = d.vertex_count();
  if (n == 1) return 1;  // the 1-fan
  int sink = 0;
  for (int v = 1; v <= n; ++v) {
    if (d.out_degree(v) == 0) {
      if (sink != 0) return std::nullopt;
      sink = v;
    } else if (d.out_degree(v) != 1) {
      return std::nullopt;
    }
  }
  if (sink == 0) return std::nullopt;
  for (int v = 1; v <= n; ++v)
    if (v != sink && d.out(v)[0] != sink) return std::nullopt;
  if (d.in_degree(sink) != n - 1) return std::nullopt;
  return sink;
}

DirectedBipartition directed_bipartition(const Digraph& d) {
  int n = d.vertex_count();
  DirectedBipartition result;
  result.side.assign(n + 1, 1);
  for (int v = 1; v <= n; ++v) {
    if (d.in_degree(v) > 0 && d.out_degree(v) > 0) return {false, {}};
    if (d.in_degree(v) > 0) result.side[v] = 2;
  }
  result.bipartite = true;
  return result;
}

Graph path_graph(int n) {
  std::vector<VertexPair> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
  std::vector<VertexPair> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  std::vector<VertexPair> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int arms) {
  if (arms < 1) throw std::invalid_argument("star graph needs arms >= 1");
  std::vector<VertexPair> edges;
  for (int i = 1; i <= arms; ++i) edges.emplace_back(i, arms + 1);
  return Graph::from_edges(arms + 1, edges);
}

Graph q_graph(int n) {
  if (n < 3) throw std::invalid_argument("Q_n needs n >= 3");
  std::vector<VertexPair> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 2, n);
  return Graph::from_edges(n, edges);
}

Graph r_graph(int n) {
  if (n < 4) throw std::invalid_argument("R_n needs n >= 4");
  std::vector<VertexPair> edges;
  for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 2, n);
  return Graph::from_edges(n, edges);
}

Graph bull_graph() {
  return Graph::from_edges(5, {{1, 3}, {2, 4}, {3, 4}, {4, 5}, {3, 5}});
}

Graph e_graph() {
  return Graph::from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}});
}

Graph theta0_graph() {
  return Graph::from_edges(
      7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {7, 1}, {7, 4}});
}

Digraph fan_digraph(int n) {
  if (n < 1) throw std::invalid_argument("fan needs n >= 1");
  std::vector<VertexPair> arcs;
  for (int i = 1; i < n; ++i) arcs.emplace_back(i, n);
  return Digraph(n, arcs);
}

Digraph oneway_path(int n) {
  std::vector<VertexPair> arcs;
  for (int i = 1; i < n; ++i) arcs.emplace_back(i, i + 1);
  return Digraph(n, arcs);
}

Graph oplus_join(const Graph& left, int attach_left, int path_len,
                 const Graph& right, int attach_right) {
  int m = left.vertex_count(), s = right.vertex_count();
  if (path_len < 1) throw std::invalid_argument("oplus needs a non-empty path");
  if (attach_left < 1 || attach_left > m || attach_right < 1 || attach_right > s)
    throw std::invalid_argument("oplus attachment vertex out of range");
  if (left.degree(attach_left) == 1 || right.degree(attach_right) == 1)
    throw std::invalid_argument("oplus attachment vertex must not have degree 1");
  std::vector<VertexPair> edges = left.edges();
  for (int i = 1; i < path_len; ++i) edges.emplace_back(m + i, m + i + 1);
  int off = m + path_len;
  for (auto [u, v] : right.edges()) edges.emplace_back(u + off, v + off);
  edges.emplace_back(attach_left, m + 1);
  edges.emplace_back(m + path_len, attach_right + off);
  return Graph::from_edges(m + path_len + s, edges);
}

const std::vector<Digraph>& zero_simple_catalog() {
  static const std::vector<Digraph> catalog = {
      Digraph(3, {{2, 3}, {3, 2}, {3, 1}}),
      Digraph(3, {{2, 1}, {2, 3}, {3, 2}, {3, 1}}),
  };
  return catalog;
}

const std::vector<Digraph>& congruence_free_catalog() {
  static const std::vector<Digraph> catalog = {
      Digraph(2, {{1, 2}}),
      Digraph(2, {{1, 2}, {2, 1}}),
      Digraph(3, {{2, 1}, {2, 3}}),
      Digraph(3, {{2, 3}, {3, 2}, {3, 1}}),
      Digraph(3, {{2, 1}, {2, 3}, {3, 2}, {3, 1}}),
  };
  return catalog;
}

}  // namespace arcsemi
