#pragma once

#include <string_view>

#include "arcsemi/digraph.hpp"
#include "arcsemi/semigroup.hpp"

namespace arcsemi {

enum class LExtreme { One, Two, NMinusOne, NMinusTwo, Unclassified };

// Exact l(G) classes for connected graphs: paths have l = 1, Q_n / R_n have
// l = 2, K_2 and non-separable non-odd-bipartite graphs have l = n - 1, and
// non-separable odd-bipartite graphs have l = n - 2.
LExtreme classify_l_extremes(const Graph& g);

// l(L +_q R) for q >= s >= m >= 1 with m, s != 2.
int oplus_l(int m, int s, int q);

// l(D): closure, split into strong components, shape shortcuts per
// component, oracle fallback for unclassified components.
int l_of(const Digraph& d, std::size_t element_cap = kDefaultElementCap);

enum class DecisionStep { Brute, Path, Degree, DegreeTwoCount, Block, BranchNo, BranchYes };

std::string_view step_name(DecisionStep s);

struct LDecision {
  bool yes = false;
  DecisionStep step = DecisionStep::Brute;
  int k = 0;
  long long n = 0;
  int max_degree = -1;
  long long vertices_not_degree2 = -1;
  long long largest_block = -1;
  long long branch_length = -1;
  bool branch_terminal = false;
  int branch_first = 0, branch_last = 0;  // endpoints of the chosen branch
  bool oracle_fallback = false;           // set when step 6 had no branch to use
};

// Decides l(G) <= k for a connected graph in linear time for fixed k.
LDecision decide_l_leq_k(const Graph& g, int k, std::size_t element_cap = kDefaultElementCap);

// True when the decision agrees with the brute-force oracle.
bool verify_decision(const Graph& g, int k, std::size_t element_cap = kDefaultElementCap);

}  // namespace arcsemi
