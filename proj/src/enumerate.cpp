#include "arcsemi/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace arcsemi {

namespace {

void check_mask_degree(int n) {
  if (n < 0 || n > 8)
    throw std::invalid_argument("adjacency masks support n <= 8 only");
}

std::uint64_t permuted_mask(std::uint64_t mask, int n, const std::array<int, 8>& perm) {
  std::uint64_t out = 0;
  while (mask) {
    int bit = std::countr_zero(mask);
    mask &= mask - 1;
    int u = bit / n, v = bit % n;
    out |= std::uint64_t{1} << (perm[u] * n + perm[v]);
  }
  return out;
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::array<int, 8> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  do {
    fn(perm);
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
}

}  // namespace

std::uint64_t adjacency_mask(const Digraph& d) {
  int n = d.vertex_count();
  check_mask_degree(n);
  std::uint64_t mask = 0;
  for (auto [u, v] : d.arcs())
    mask |= std::uint64_t{1} << ((u - 1) * n + (v - 1));
  return mask;
}

Digraph digraph_from_mask(int n, std::uint64_t mask) {
  check_mask_degree(n);
  std::vector<VertexPair> arcs;
  while (mask) {
    int bit = std::countr_zero(mask);
    mask &= mask - 1;
    arcs.emplace_back(bit / n + 1, bit % n + 1);
  }
  return Digraph(n, arcs);
}

std::uint64_t canonical_form(const Digraph& d) {
  int n = d.vertex_count();
  std::uint64_t mask = adjacency_mask(d);
  std::uint64_t best = mask;
  for_each_permutation(n, [&](const std::array<int, 8>& perm) {
    best = std::min(best, permuted_mask(mask, n, perm));
  });
  return best;
}

bool is_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.arc_count() != b.arc_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

void for_each_digraph(int n, bool up_to_iso,
                      const std::function<void(const Digraph&)>& fn) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("digraph enumeration supports 1 <= n <= 5");
  int bits = n * n;
  std::uint64_t diag = 0;
  for (int v = 0; v < n; ++v) diag |= std::uint64_t{1} << (v * n + v);

  // Iterate over loop-free masks by skipping diagonal bits.
  std::vector<int> positions;
  for (int b = 0; b < bits; ++b)
    if (!(diag >> b & 1)) positions.push_back(b);
  std::uint64_t total = std::uint64_t{1} << positions.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    std::uint64_t mask = 0;
    std::uint64_t rest = m;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      mask |= std::uint64_t{1} << positions[i];
    }
    if (up_to_iso) {
      bool canonical = true;
      for_each_permutation(n, [&](const std::array<int, 8>& perm) {
        if (canonical && permuted_mask(mask, n, perm) < mask) canonical = false;
      });
      if (!canonical) continue;
    }
    fn(digraph_from_mask(n, mask));
  }
}

std::vector<Digraph> all_digraphs(int n, bool up_to_iso) {
  std::vector<Digraph> result;
  for_each_digraph(n, up_to_iso, [&](const Digraph& d) { result.push_back(d); });
  return result;
}

namespace {

// Backtracking isomorphism for small graphs given as neighbour bitmasks.
bool graph_iso_backtrack(int n, const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b,
                         const std::vector<int>& deg_a,
                         const std::vector<int>& deg_b) {
  std::vector<int> map_ab(n, -1), map_ba(n, -1);
  struct Frame {
    int u;
    int candidate;
  };
  std::vector<Frame> stack{{0, -1}};
  while (!stack.empty()) {
    auto& f = stack.back();
    int u = f.u;
    bool advanced = false;
    for (int v = f.candidate + 1; v < n; ++v) {
      if (map_ba[v] != -1 || deg_a[u] != deg_b[v]) continue;
      // Consistency with already-mapped vertices.
      bool ok = true;
      for (int w = 0; w < u; ++w) {
        bool e1 = a[u] >> w & 1;
        bool e2 = b[v] >> map_ab[w] & 1;
        if (e1 != e2) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      f.candidate = v;
      map_ab[u] = v;
      map_ba[v] = u;
      if (u + 1 == n) return true;
      stack.push_back({u + 1, -1});
      advanced = true;
      break;
    }
    if (!advanced) {
      stack.pop_back();
      if (!stack.empty()) {
        int prev = stack.back().u;
        map_ba[map_ab[prev]] = -1;
        map_ab[prev] = -1;
      }
    }
  }
  return false;
}

struct GraphKey {
  int edges;
  std::vector<int> degree_seq;
  std::vector<int> triangle_seq;
  auto operator<=>(const GraphKey&) const = default;
};

GraphKey invariant_key(int n, const std::vector<std::uint32_t>& adj) {
  GraphKey key;
  key.edges = 0;
  key.degree_seq.resize(n);
  key.triangle_seq.resize(n);
  for (int v = 0; v < n; ++v) {
    key.degree_seq[v] = std::popcount(adj[v]);
    key.edges += key.degree_seq[v];
    int t = 0;
    std::uint32_t rest = adj[v];
    while (rest) {
      int w = std::countr_zero(rest);
      rest &= rest - 1;
      t += std::popcount(adj[v] & adj[w]);
    }
    key.triangle_seq[v] = t;
  }
  key.edges /= 2;
  std::sort(key.degree_seq.begin(), key.degree_seq.end());
  std::sort(key.triangle_seq.begin(), key.triangle_seq.end());
  return key;
}

}  // namespace

std::vector<Graph> connected_graphs_up_to_iso(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("connected graph enumeration supports n <= 8");
  if (n == 1) return {Graph::from_edges(1, std::vector<VertexPair>{})};

  std::vector<VertexPair> positions;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) positions.emplace_back(u, v);
  std::uint64_t total = std::uint64_t{1} << positions.size();

  struct Rep {
    std::vector<std::uint32_t> adj;
    std::vector<int> deg;
    std::uint64_t mask;
  };
  std::map<GraphKey, std::vector<Rep>> buckets;
  std::vector<std::uint64_t> reps;

  std::vector<std::uint32_t> adj(n);
  for (std::uint64_t m = 0; m < total; ++m) {
    std::fill(adj.begin(), adj.end(), 0);
    std::uint64_t rest = m;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      auto [u, v] = positions[i];
      adj[u] |= 1u << v;
      adj[v] |= 1u << u;
    }
    // Connectivity by bitmask flood fill.
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= adj[v];
      }
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen != (1u << n) - 1) continue;

    GraphKey key = invariant_key(n, adj);
    auto& bucket = buckets[key];
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = std::popcount(adj[v]);
    bool known = false;
    for (const auto& rep : bucket) {
      if (graph_iso_backtrack(n, adj, rep.adj, deg, rep.deg)) {
        known = true;
        break;
      }
    }
    if (!known) {
      bucket.push_back({adj, deg, m});
      reps.push_back(m);
    }
  }

  std::sort(reps.begin(), reps.end());
  std::vector<Graph> result;
  result.reserve(reps.size());
  for (std::uint64_t m : reps) {
    std::vector<VertexPair> edges;
    std::uint64_t rest = m;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      edges.emplace_back(positions[i].first + 1, positions[i].second + 1);
    }
    result.push_back(Graph::from_edges(n, edges));
  }
  return result;
}

}  // namespace arcsemi
