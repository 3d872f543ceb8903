#include "arcsemi/decompose.hpp"

#include <algorithm>
#include <numeric>

namespace arcsemi {

namespace {

// Iterative Tarjan; recursion would overflow on path-like inputs at n ~ 10^6.
struct TarjanState {
  const Digraph& d;
  std::vector<int> index, low, comp;
  std::vector<int> stack;
  std::vector<char> on_stack;
  int next_index = 0;
  int next_comp = 0;

  explicit TarjanState(const Digraph& d)
      : d(d),
        index(d.vertex_count() + 1, -1),
        low(d.vertex_count() + 1, 0),
        comp(d.vertex_count() + 1, -1),
        on_stack(d.vertex_count() + 1, 0) {}

  void run(int root) {
    struct Frame {
      int v;
      std::size_t next_arc;
    };
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, i] = frames.back();
      const auto& succ = d.out(v);
      if (i < succ.size()) {
        int w = succ[i++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
        int done = v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[done]);
      }
    }
  }
};

}  // namespace

SccPartition strong_components(const Digraph& d) {
  int n = d.vertex_count();
  TarjanState t(d);
  for (int v = 1; v <= n; ++v)
    if (t.index[v] < 0) t.run(v);

  // Renumber components by smallest contained vertex.
  std::vector<std::vector<int>> raw(t.next_comp);
  for (int v = 1; v <= n; ++v) raw[t.comp[v]].push_back(v);
  for (auto& c : raw) std::sort(c.begin(), c.end());
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  SccPartition p;
  p.components = std::move(raw);
  p.component_of.assign(n + 1, -1);
  for (std::size_t i = 0; i < p.components.size(); ++i)
    for (int v : p.components[i]) p.component_of[v] = static_cast<int>(i);
  return p;
}

Digraph induced_subdigraph(const Digraph& d, const std::vector<int>& vertices) {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> relabel(d.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    relabel[sorted[i]] = static_cast<int>(i) + 1;
  std::vector<VertexPair> arcs;
  for (int u : sorted)
    for (int v : d.out(u))
      if (v <= d.vertex_count() && relabel[v] > 0)
        arcs.emplace_back(relabel[u], relabel[v]);
  return Digraph(static_cast<int>(sorted.size()), arcs);
}

Digraph closure(const Digraph& d) {
  // An arc (a, b) lies on a cycle iff a and b share a strong component.
  auto scc = strong_components(d);
  std::vector<VertexPair> arcs = d.arcs();
  for (auto [a, b] : d.arcs())
    if (scc.component_of[a] == scc.component_of[b]) arcs.emplace_back(b, a);
  return Digraph(d.vertex_count(), arcs);
}

Condensation condensation_and_terminals(const Digraph& d) {
  Condensation c;
  c.scc = strong_components(d);
  int k = static_cast<int>(c.scc.components.size());
  std::vector<VertexPair> qarcs;
  for (int u = 1; u <= d.vertex_count(); ++u)
    for (int v : d.out(u)) {
      int cu = c.scc.component_of[u], cv = c.scc.component_of[v];
      if (cu != cv) qarcs.emplace_back(cu + 1, cv + 1);
    }
  c.quotient = Digraph(k, qarcs);
  for (int i = 0; i < k; ++i)
    if (c.quotient.is_sink(i + 1)) c.terminal_components.push_back(i);
  return c;
}

Graph underlying_graph(const Digraph& d) {
  std::vector<VertexPair> arcs;
  arcs.reserve(d.arc_count() * 2);
  for (auto [u, v] : d.arcs()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Graph(Digraph(d.vertex_count(), arcs));
}

std::vector<std::vector<int>> weak_components(const Digraph& d) {
  int n = d.vertex_count();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto [u, v] : d.arcs()) {
    int ru = find(u), rv = find(v);
    if (ru != rv) parent[ru] = rv;
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> id(n + 1, -1);
  for (int v = 1; v <= n; ++v) {
    int r = find(v);
    if (id[r] < 0) {
      id[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[id[r]].push_back(v);
  }
  return comps;
}

bool is_weakly_connected(const Digraph& d) {
  return weak_components(d).size() <= 1;
}

BipartiteWitness bipartite_test(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> side(n + 1, -1);
  std::vector<int> queue;
  queue.reserve(n);
  side[1] = 0;
  queue.push_back(1);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.neighbours(v)) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        queue.push_back(w);
      } else if (side[w] == side[v]) {
        return {Bipartiteness::NotBipartite, {}};
      }
    }
  }
  if (static_cast<int>(queue.size()) != n)
    throw std::invalid_argument("bipartite_test requires a connected graph");
  return {n % 2 == 1 ? Bipartiteness::OddBipartite : Bipartiteness::BipartiteEven,
          std::move(side)};
}

BlockDecomposition blocks(const Graph& g) {
  int n = g.vertex_count();
  BlockDecomposition result;
  if (n == 0) return result;
  if (n == 1) {
    result.blocks.push_back({1});
    return result;
  }

  std::vector<int> index(n + 1, -1), low(n + 1, 0), parent(n + 1, 0);
  std::vector<char> is_cut(n + 1, 0);
  std::vector<VertexPair> edge_stack;
  int next_index = 0;
  int visited = 0;

  auto pop_block = [&](VertexPair until) {
    std::vector<int> verts;
    while (true) {
      VertexPair e = edge_stack.back();
      edge_stack.pop_back();
      verts.push_back(e.first);
      verts.push_back(e.second);
      if (e == until) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    result.blocks.push_back(std::move(verts));
  };

  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> frames{{1, 0}};
  index[1] = low[1] = next_index++;
  ++visited;

  while (!frames.empty()) {
    auto& f = frames.back();
    int v = f.v;
    const auto& adj = g.neighbours(v);
    if (f.next < adj.size()) {
      int w = adj[f.next++];
      if (index[w] < 0) {
        parent[w] = v;
        index[w] = low[w] = next_index++;
        ++visited;
        edge_stack.emplace_back(v, w);
        frames.push_back({w, 0});
      } else if (w != parent[v] && index[w] < index[v]) {
        edge_stack.emplace_back(v, w);
        low[v] = std::min(low[v], index[w]);
      }
    } else {
      int done = v;
      frames.pop_back();
      if (frames.empty()) break;
      int u = frames.back().v;
      low[u] = std::min(low[u], low[done]);
      if (low[done] >= index[u]) {
        pop_block({u, done});
        if (u != 1) is_cut[u] = 1;
      }
    }
  }
  if (visited != n)
    throw std::invalid_argument("blocks requires a connected graph");
  int root_children = 0;
  for (int v = 2; v <= n; ++v)
    if (parent[v] == 1) ++root_children;
  if (root_children >= 2) is_cut[1] = 1;
  for (int v = 1; v <= n; ++v)
    if (is_cut[v]) result.cut_vertices.push_back(v);
  std::sort(result.blocks.begin(), result.blocks.end());
  return result;
}

bool is_nonseparable(const Graph& g) {
  auto b = blocks(g);
  return b.blocks.size() == 1 &&
         static_cast<int>(b.blocks.front().size()) == g.vertex_count();
}

std::vector<Branch> branches(const Graph& g) {
  int n = g.vertex_count();
  bool all_degree2 = n >= 3;
  for (int v = 1; v <= n && all_degree2; ++v)
    if (g.degree(v) != 2) all_degree2 = false;
  if (all_degree2)
    throw std::invalid_argument("no branch decomposition");

  std::vector<char> in_branch(n + 1, 0), used(n + 1, 0);
  for (int v = 1; v <= n; ++v) in_branch[v] = g.degree(v) == 2;

  std::vector<Branch> result;
  std::vector<int> path;
  for (int v = 1; v <= n; ++v) {
    if (!in_branch[v] || used[v]) continue;
    used[v] = 1;
    // Extend both ways; a maximal degree-2 path cannot close into a cycle
    // unless the whole graph is one, which was rejected above.
    auto extend = [&](int start) {
      std::vector<int> ext;
      int cur = start;
      while (true) {
        int next = 0;
        for (int w : g.neighbours(cur))
          if (in_branch[w] && !used[w]) {
            next = w;
            break;
          }
        if (next == 0) break;
        used[next] = 1;
        ext.push_back(next);
        cur = next;
      }
      return ext;
    };
    auto back = extend(v);
    auto front = extend(v);
    path.clear();
    path.reserve(front.size() + back.size() + 1);
    path.insert(path.end(), front.rbegin(), front.rend());
    path.push_back(v);
    path.insert(path.end(), back.begin(), back.end());
    std::vector<int> rev(path.rbegin(), path.rend());
    if (rev < path) path = std::move(rev);

    // The endpoints' non-branch neighbours are the attachment vertices.
    auto attachment = [&](int endpoint, int inside_neighbour) {
      for (int w : g.neighbours(endpoint))
        if (w != inside_neighbour && !in_branch[w]) return w;
      return 0;
    };
    bool terminal = false;
    if (path.size() == 1) {
      for (int w : g.neighbours(path[0]))
        if (g.degree(w) == 1) terminal = true;
    } else {
      int a = attachment(path.front(), path[1]);
      int b = attachment(path.back(), path[path.size() - 2]);
      if ((a != 0 && g.degree(a) == 1) || (b != 0 && g.degree(b) == 1))
        terminal = true;
    }
    result.push_back({path, terminal});
  }
  std::sort(result.begin(), result.end(), [](const Branch& a, const Branch& b) {
    return a.vertices < b.vertices;
  });
  return result;
}

Branch longest_branch(const Graph& g) {
  auto all = branches(g);
  if (all.empty()) throw std::invalid_argument("graph has no branch");
  const Branch* best = &all.front();
  for (const auto& b : all) {
    if (b.length() > best->length() ||
        (b.length() == best->length() && b.vertices < best->vertices))
      best = &b;
  }
  return *best;
}

Graph delete_vertex(const Graph& g, int v) {
  int n = g.vertex_count();
  if (v < 1 || v > n) throw std::invalid_argument("no such vertex");
  std::vector<VertexPair> edges;
  auto relabel = [&](int w) { return w > v ? w - 1 : w; };
  for (auto [a, b] : g.edges())
    if (a != v && b != v) edges.emplace_back(relabel(a), relabel(b));
  return Graph::from_edges(n - 1, edges);
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("no such edge");
  std::vector<VertexPair> edges;
  for (auto [a, b] : g.edges())
    if (!(a == std::min(u, v) && b == std::max(u, v)))
      edges.emplace_back(a, b);
  return Graph::from_edges(g.vertex_count(), edges);
}

Graph contract_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("no such edge");
  int n = g.vertex_count();
  auto relabel = [&](int w) {
    if (w == v) w = u;
    return w > v ? w - 1 : w;
  };
  std::vector<VertexPair> edges;
  for (auto [a, b] : g.edges()) {
    int x = relabel(a), y = relabel(b);
    if (x != y) edges.emplace_back(x, y);
  }
  return Graph::from_edges(n - 1, edges);
}

}  // namespace arcsemi
