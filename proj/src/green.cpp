#include "arcsemi/green.hpp"

#include <algorithm>
#include <numeric>

namespace arcsemi {

namespace {

// Iterative Tarjan over a Cayley graph: successors of x are table[x*gens+g].
std::vector<std::int32_t> cayley_scc(std::size_t count, int gens,
                                     const std::int32_t* edges1,
                                     const std::int32_t* edges2, int& classes) {
  std::vector<std::int32_t> index(count, -1), low(count, 0), comp(count, -1);
  std::vector<std::int32_t> stack;
  std::vector<char> on_stack(count, 0);
  int next_index = 0;
  classes = 0;
  int total_gens = gens * (edges2 ? 2 : 1);
  auto succ = [&](std::int32_t v, int i) {
    return i < gens ? edges1[v * gens + i] : edges2[v * gens + (i - gens)];
  };

  struct Frame {
    std::int32_t v;
    int next;
  };
  std::vector<Frame> frames;
  for (std::size_t root = 0; root < count; ++root) {
    if (index[root] >= 0) continue;
    frames.push_back({static_cast<std::int32_t>(root), 0});
    index[root] = low[root] = next_index++;
    stack.push_back(static_cast<std::int32_t>(root));
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& f = frames.back();
      if (f.next < total_gens) {
        std::int32_t w = succ(f.v, f.next++);
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        std::int32_t v = f.v;
        if (low[v] == index[v]) {
          while (true) {
            std::int32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = classes;
            if (w == v) break;
          }
          ++classes;
        }
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return comp;
}

}  // namespace

GreenStructure green_structure(const SemigroupTable& s) {
  GreenStructure g;
  std::size_t m = s.size();
  int gens = s.generator_count();
  g.r_class = cayley_scc(m, gens, s.right_cayley.data(), nullptr, g.n_r);
  g.l_class = cayley_scc(m, gens, s.left_cayley.data(), nullptr, g.n_l);
  g.j_class = cayley_scc(m, gens, s.right_cayley.data(), s.left_cayley.data(), g.n_j);

  g.h_class.assign(m, -1);
  std::unordered_map<std::int64_t, std::int32_t> h_ids;
  h_ids.reserve(m * 2);
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t key = static_cast<std::int64_t>(g.r_class[i]) * g.n_l + g.l_class[i];
    auto [it, inserted] = h_ids.emplace(key, static_cast<std::int32_t>(h_ids.size()));
    g.h_class[i] = it->second;
  }
  g.n_h = static_cast<int>(h_ids.size());

  for (std::size_t i = 0; i < m; ++i) {
    if (s.product(static_cast<int>(i), static_cast<int>(i)) == static_cast<int>(i))
      g.idempotents.push_back(static_cast<std::int32_t>(i));
  }
  // x is regular iff its R-class contains an idempotent.
  std::vector<char> r_has_idem(g.n_r, 0);
  for (auto e : g.idempotents) r_has_idem[g.r_class[e]] = 1;
  g.regular.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) g.regular[i] = r_has_idem[g.r_class[i]];
  return g;
}

OracleReport probe(const SemigroupTable& s, const GreenStructure& g) {
  OracleReport r;
  std::size_t m = s.size();
  int gens = s.generator_count();
  r.size = m;
  r.band = g.idempotents.size() == m;
  r.commutative = true;
  for (int a = 0; a < gens && r.commutative; ++a)
    for (int b = a + 1; b < gens && r.commutative; ++b) {
      int ga = s.index_of(s.generators[a]);
      int gb = s.index_of(s.generators[b]);
      if (s.right(ga, b) != s.right(gb, a)) r.commutative = false;
    }
  r.semilattice = r.band && r.commutative;
  r.regular = std::all_of(g.regular.begin(), g.regular.end(), [](char c) { return c != 0; });
  r.completely_regular = true;
  for (std::size_t i = 0; i < m && r.completely_regular; ++i) {
    int sq = s.product(static_cast<int>(i), static_cast<int>(i));
    if (g.j_class[sq] != g.j_class[i]) r.completely_regular = false;
  }
  r.inverse = r.regular;
  for (std::size_t a = 0; a < g.idempotents.size() && r.inverse; ++a)
    for (std::size_t b = a + 1; b < g.idempotents.size() && r.inverse; ++b) {
      int e = g.idempotents[a], f = g.idempotents[b];
      if (s.product(e, f) != s.product(f, e)) r.inverse = false;
    }
  r.h_trivial = g.n_h == static_cast<int>(m);
  r.r_trivial = g.n_r == static_cast<int>(m);
  r.l_trivial = g.n_l == static_cast<int>(m);
  r.j_trivial = g.n_j == static_cast<int>(m);
  // Aperiodic: subgroup H-classes (those with an idempotent) are trivial.
  std::vector<std::int32_t> h_size(g.n_h, 0);
  for (std::size_t i = 0; i < m; ++i) ++h_size[g.h_class[i]];
  r.aperiodic = true;
  for (auto e : g.idempotents)
    if (h_size[g.h_class[e]] > 1) r.aperiodic = false;
  r.group = g.n_h == 1;

  for (std::size_t i = 0; i < m; ++i) {
    bool left_zero = true, right_zero = true;
    for (int gidx = 0; gidx < gens; ++gidx) {
      if (s.right(static_cast<int>(i), gidx) != static_cast<int>(i)) left_zero = false;
      if (s.left(static_cast<int>(i), gidx) != static_cast<int>(i)) right_zero = false;
    }
    if (left_zero) r.left_zeros.push_back(static_cast<std::int32_t>(i));
    if (right_zero) r.right_zeros.push_back(static_cast<std::int32_t>(i));
  }
  for (auto z : r.left_zeros)
    if (std::find(r.right_zeros.begin(), r.right_zeros.end(), z) != r.right_zeros.end())
      r.zero = z;
  r.left_zero_semigroup = r.left_zeros.size() == m;
  r.right_zero_semigroup = r.right_zeros.size() == m;
  r.simple = g.n_j == 1;
  r.rectangular_band = r.simple && r.band;
  r.zero_simple = false;
  if (r.zero && m > 1 && g.n_j == 2) {
    int zi = *r.zero;
    bool zero_class_trivial = true;
    for (std::size_t i = 0; i < m; ++i)
      if (g.j_class[i] == g.j_class[zi] && static_cast<int>(i) != zi)
        zero_class_trivial = false;
    bool s2_nonzero = false;
    for (std::size_t i = 0; i < m && !s2_nonzero; ++i)
      for (int gidx = 0; gidx < gens; ++gidx)
        if (s.right(static_cast<int>(i), gidx) != zi) {
          s2_nonzero = true;
          break;
        }
    r.zero_simple = zero_class_trivial && s2_nonzero;
  }
  return r;
}

OracleReport probe(const SemigroupTable& s) { return probe(s, green_structure(s)); }

bool principal_congruence_universal(const SemigroupTable& s, int a, int b) {
  std::size_t m = s.size();
  int gens = s.generator_count();
  std::vector<std::int32_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t classes = m;
  std::vector<std::pair<std::int32_t, std::int32_t>> work;
  auto merge = [&](std::int32_t x, std::int32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    parent[x] = y;
    --classes;
    work.emplace_back(x, y);
  };
  merge(a, b);
  while (!work.empty() && classes > 1) {
    auto [x, y] = work.back();
    work.pop_back();
    for (int g = 0; g < gens; ++g) {
      merge(s.right(x, g), s.right(y, g));
      merge(s.left(x, g), s.left(y, g));
    }
  }
  return classes == 1;
}

bool all_principal_congruences_universal(const SemigroupTable& s) {
  std::size_t m = s.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!principal_congruence_universal(s, static_cast<int>(a), static_cast<int>(b)))
        return false;
  return true;
}

bool is_congruence_free(const SemigroupTable& s) {
  if (s.size() > kCongruenceCap) throw CapExceeded(s.size());
  if (s.size() <= 2) return true;
  // A finite congruence-free semigroup of size > 2 is 0-simple or a simple
  // group; anything else has a proper Rees or subgroup congruence.
  auto g = green_structure(s);
  auto report = probe(s, g);
  if (!report.zero_simple && !report.group) return false;
  return all_principal_congruences_universal(s);
}

}  // namespace arcsemi
