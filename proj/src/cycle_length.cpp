#include "arcsemi/cycle_length.hpp"

#include <algorithm>

#include "arcsemi/decompose.hpp"
#include "arcsemi/shapes.hpp"

namespace arcsemi {

LExtreme classify_l_extremes(const Graph& g) {
  Shape shape = recognize_shape(g);  // validates connectedness
  if (shape.tag == ShapeTag::Path || shape.tag == ShapeTag::K2)
    return LExtreme::One;  // K2 = P2, and l(K2) = 1 = n - 1 either way
  if (shape.tag == ShapeTag::Qn || shape.tag == ShapeTag::Rn) return LExtreme::Two;
  if (is_nonseparable(g)) {
    auto bip = bipartite_test(g);
    return bip.kind == Bipartiteness::OddBipartite ? LExtreme::NMinusTwo
                                                   : LExtreme::NMinusOne;
  }
  return LExtreme::Unclassified;
}

int oplus_l(int m, int s, int q) {
  if (m < 1 || s < m || q < s)
    throw std::invalid_argument("oplus_l requires q >= s >= m >= 1");
  if (m == 2 || s == 2)
    throw std::invalid_argument("oplus_l requires m, s != 2");
  if (m == 1 && s == 1) return 1;
  if (m == 1) return s - 1;
  return m + s - 3;
}

int l_of(const Digraph& d, std::size_t element_cap) {
  if (d.arc_count() == 0)
    throw std::invalid_argument("l_of requires at least one arc");
  Digraph closed = closure(d);
  auto scc = strong_components(closed);
  int best = 1;
  for (const auto& comp : scc.components) {
    if (comp.size() < 2) continue;  // trivial components contribute 1
    Digraph sub = induced_subdigraph(closed, comp);
    Graph g(sub);  // strong components of a closed digraph are graphs
    int m = g.vertex_count();
    int value;
    switch (classify_l_extremes(g)) {
      case LExtreme::One: value = 1; break;
      case LExtreme::Two: value = 2; break;
      case LExtreme::NMinusOne: value = m - 1; break;
      case LExtreme::NMinusTwo: value = m - 2; break;
      default: value = l_brute(sub, element_cap); break;
    }
    best = std::max(best, value);
  }
  return best;
}

std::string_view step_name(DecisionStep s) {
  switch (s) {
    case DecisionStep::Brute: return "brute";
    case DecisionStep::Path: return "path";
    case DecisionStep::Degree: return "degree";
    case DecisionStep::DegreeTwoCount: return "degree2count";
    case DecisionStep::Block: return "block";
    case DecisionStep::BranchNo: return "branch-no";
    case DecisionStep::BranchYes: return "branch-yes";
  }
  return "brute";
}

namespace {

bool graph_is_path(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 2) return true;
  int ones = 0;
  for (int v = 1; v <= n; ++v) {
    int deg = g.degree(v);
    if (deg == 1)
      ++ones;
    else if (deg != 2)
      return false;
  }
  return ones == 2;
}

}  // namespace

LDecision decide_l_leq_k(const Graph& g, int k, std::size_t element_cap) {
  if (k < 1) throw std::invalid_argument("decide_l_leq_k requires k >= 1");
  if (!is_weakly_connected(g.digraph()))
    throw std::invalid_argument("decide_l_leq_k requires a connected graph");

  LDecision d;
  d.k = k;
  d.n = g.vertex_count();

  if (k == 1) {
    // l(G) = 1 exactly for paths.
    d.yes = graph_is_path(g);
    d.step = DecisionStep::Path;
    return d;
  }

  long long brute_limit =
      static_cast<long long>(k + 2) * (k + 1) * (2 * k - 1);
  if (d.n <= brute_limit) {
    d.yes = !l_exceeds(g.digraph(), k, element_cap);
    d.step = DecisionStep::Brute;
    return d;
  }

  if (graph_is_path(g)) {
    d.yes = true;
    d.step = DecisionStep::Path;
    return d;
  }

  d.max_degree = 0;
  d.vertices_not_degree2 = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    d.max_degree = std::max(d.max_degree, g.degree(v));
    if (g.degree(v) != 2) ++d.vertices_not_degree2;
  }
  if (d.max_degree >= k + 2) {
    d.yes = false;
    d.step = DecisionStep::Degree;
    return d;
  }
  if (d.vertices_not_degree2 >= 4LL * k - 1) {
    d.yes = false;
    d.step = DecisionStep::DegreeTwoCount;
    return d;
  }

  auto decomposition = blocks(g);
  d.largest_block = 0;
  for (const auto& block : decomposition.blocks)
    d.largest_block = std::max(d.largest_block, static_cast<long long>(block.size()));
  if (d.largest_block >= k + 3) {
    d.yes = false;
    d.step = DecisionStep::Block;
    return d;
  }

  // Here G = L +_q R around its longest branch; earlier steps guarantee a
  // branch exists and does not sit inside a non-separable block.
  auto all = branches(g);
  if (all.empty()) {
    d.oracle_fallback = true;
    d.yes = !l_exceeds(g.digraph(), k, element_cap);
    d.step = DecisionStep::Brute;
    return d;
  }
  const Branch* best = &all.front();
  for (const auto& b : all)
    if (b.length() > best->length() ||
        (b.length() == best->length() && b.vertices < best->vertices))
      best = &b;
  d.branch_length = best->length();
  d.branch_terminal = best->terminal;
  d.branch_first = best->vertices.front();
  d.branch_last = best->vertices.back();
  long long limit = best->terminal ? d.n - k - 3 : d.n - k - 4;
  if (d.branch_length <= limit) {
    d.yes = false;
    d.step = DecisionStep::BranchNo;
  } else {
    d.yes = true;
    d.step = DecisionStep::BranchYes;
  }
  return d;
}

bool verify_decision(const Graph& g, int k, std::size_t element_cap) {
  LDecision fast = decide_l_leq_k(g, k, element_cap);
  bool oracle = !l_exceeds(g.digraph(), k, element_cap);
  return fast.yes == oracle;
}

}  // namespace arcsemi
