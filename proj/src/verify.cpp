#include "arcsemi/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "arcsemi/cycle_length.hpp"
#include "arcsemi/decompose.hpp"
#include "arcsemi/enumerate.hpp"
#include "arcsemi/green.hpp"
#include "arcsemi/report.hpp"
#include "arcsemi/shapes.hpp"

namespace arcsemi {

void SweepResult::merge(const SweepResult& other) {
  checks += other.checks;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::uint64_t split_mix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Digraph random_digraph(int n, std::uint64_t& state) {
  while (true) {
    std::vector<VertexPair> arcs;
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v) {
        if (u == v) continue;
        if (split_mix(state) % 100 < 35) arcs.emplace_back(u, v);
      }
    if (!arcs.empty()) return Digraph(n, arcs);
  }
}

Graph random_connected_graph(int n, std::uint64_t& state) {
  while (true) {
    std::vector<VertexPair> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (split_mix(state) % 100 < 45) edges.emplace_back(u, v);
    if (edges.empty()) continue;
    Graph g = Graph::from_edges(n, edges);
    if (is_weakly_connected(g.digraph())) return g;
  }
}

void parallel_chunks(long long count, int threads,
                     const std::function<void(long long, long long, int)>& run) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 1 || count < 64) {
    run(0, count, 0);
    return;
  }
  threads = std::min<long long>(threads, count);
  std::vector<std::thread> pool;
  long long chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    long long begin = t * chunk;
    long long end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end, t] { run(begin, end, t); });
  }
  for (auto& th : pool) th.join();
}

namespace {

// All loop-free arc slots of an n-vertex digraph, in lexicographic order.
std::vector<VertexPair> arc_slots(int n) {
  std::vector<VertexPair> slots;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (u != v) slots.emplace_back(u, v);
  return slots;
}

Digraph digraph_from_arc_bits(int n, const std::vector<VertexPair>& slots,
                              std::uint64_t bits) {
  std::vector<VertexPair> arcs;
  while (bits) {
    int i = std::countr_zero(bits);
    bits &= bits - 1;
    arcs.push_back(slots[i]);
  }
  return Digraph(n, arcs);
}

SweepResult compare_with_oracle(const Digraph& d, const ClassifyFn& fn, std::size_t cap) {
  SweepResult res;
  PropertyReport report = fn(d);
  OracleSection section;
  try {
    SemigroupTable table = generate(d, cap);
    section.size = table.size();
    section.report = probe(table);
    section.congruence_free = is_congruence_free(table);
  } catch (const CapExceeded& e) {
    res.failures.push_back("oracle capped at " + std::to_string(e.partial_count) +
                           " on " + write_digraph(d));
    return res;
  }
  auto bad = oracle_disagreements(d, report, section);
  ++res.checks;
  for (auto& b : bad) res.failures.push_back(b + " on digraph:\n" + write_digraph(d));
  return res;
}

}  // namespace

SweepResult classifier_oracle_exhaustive(int n, const ClassifyFn& fn,
                                         std::size_t cap, int threads) {
  auto slots = arc_slots(n);
  long long total = 1LL << slots.size();
  SweepResult res;
  std::mutex m;
  parallel_chunks(total, threads, [&](long long begin, long long end, int) {
    SweepResult local;
    for (long long bits = begin; bits < end; ++bits) {
      if (bits == 0) continue;  // empty semigroup is out of scope
      Digraph d = digraph_from_arc_bits(n, slots, static_cast<std::uint64_t>(bits));
      local.merge(compare_with_oracle(d, fn, cap));
      if (local.failures.size() > 20) break;  // enough counterexamples
    }
    std::lock_guard<std::mutex> lock(m);
    res.merge(local);
  });
  std::sort(res.failures.begin(), res.failures.end());
  return res;
}

SweepResult classifier_oracle_random(int n, int count, std::uint64_t seed,
                                     const ClassifyFn& fn, std::size_t cap) {
  SweepResult res;
  std::uint64_t state = seed ^ 0xa5a5a5a5a5a5a5a5ULL;
  for (int i = 0; i < count; ++i) {
    Digraph d = random_digraph(n, state);
    res.merge(compare_with_oracle(d, fn, cap));
  }
  return res;
}

SweepResult l_agreement_exhaustive(int n_max, std::size_t cap, int threads) {
  SweepResult res;
  for (int n = 2; n <= std::min(n_max, 4); ++n) {
    auto slots = arc_slots(n);
    long long total = 1LL << slots.size();
    std::mutex m;
    parallel_chunks(total, threads, [&](long long begin, long long end, int) {
      SweepResult local;
      for (long long bits = begin; bits < end; ++bits) {
        if (bits == 0) continue;
        Digraph d = digraph_from_arc_bits(n, slots, static_cast<std::uint64_t>(bits));
        int fast = l_of(d, cap);
        int brute = l_brute(d, cap);
        ++local.checks;
        if (fast != brute)
          local.failures.push_back("l_of=" + std::to_string(fast) + " l_brute=" +
                                   std::to_string(brute) + " on:\n" + write_digraph(d));
      }
      std::lock_guard<std::mutex> lock(m);
      res.merge(local);
    });
  }

  if (n_max >= 5) {
    // One oracle run per isomorphism class; every labelled digraph is then
    // checked against its class value (l_of is evaluated on each labelling).
    const int n = 5;
    auto slots = arc_slots(n);
    long long total = 1LL << slots.size();
    std::unordered_map<std::uint64_t, int> class_l;
    std::mutex m;
    parallel_chunks(total, threads, [&](long long begin, long long end, int) {
      SweepResult local;
      std::unordered_map<std::uint64_t, int> local_class;
      std::vector<std::pair<std::uint64_t, Digraph>> pending;
      for (long long bits = begin; bits < end; ++bits) {
        if (bits == 0) continue;
        Digraph d = digraph_from_arc_bits(n, slots, static_cast<std::uint64_t>(bits));
        std::uint64_t canon = canonical_form(d);
        int fast = l_of(d, cap);
        ++local.checks;
        auto it = local_class.find(canon);
        if (it == local_class.end()) {
          int brute = l_brute(d, cap);
          it = local_class.emplace(canon, brute).first;
        }
        if (fast != it->second)
          local.failures.push_back("l_of=" + std::to_string(fast) + " class l=" +
                                   std::to_string(it->second) + " on:\n" +
                                   write_digraph(d));
      }
      std::lock_guard<std::mutex> lock(m);
      res.merge(local);
      for (auto& [c, v] : local_class) {
        auto [it, inserted] = class_l.emplace(c, v);
        if (!inserted && it->second != v)
          res.failures.push_back("class value mismatch across labellings, canon=" +
                                 std::to_string(c));
      }
    });
  }
  std::sort(res.failures.begin(), res.failures.end());
  return res;
}

SweepResult decide_agreement_small(int n_max, int k_max, std::size_t cap, int threads) {
  SweepResult res;
  std::mutex m;
  for (int n = 1; n <= n_max; ++n) {
    auto graphs = connected_graphs_up_to_iso(n);
    parallel_chunks(static_cast<long long>(graphs.size()), threads,
                    [&](long long begin, long long end, int) {
                      SweepResult local;
                      for (long long i = begin; i < end; ++i) {
                        const Graph& g = graphs[static_cast<std::size_t>(i)];
                        if (g.edge_count() == 0) continue;
                        int l = l_brute(g.digraph(), cap);
                        for (int k = 1; k <= k_max; ++k) {
                          LDecision d = decide_l_leq_k(g, k, cap);
                          ++local.checks;
                          if (d.yes != (l <= k))
                            local.failures.push_back(
                                "decide(k=" + std::to_string(k) + ")=" +
                                (d.yes ? "yes" : "no") + " but l=" + std::to_string(l) +
                                " on:\n" + write_digraph(g.digraph()));
                        }
                      }
                      std::lock_guard<std::mutex> lock(m);
                      res.merge(local);
                    });
  }
  std::sort(res.failures.begin(), res.failures.end());
  return res;
}

SweepResult decide_agreement_constructed(int k_max, std::size_t cap) {
  SweepResult res;
  auto expect = [&](const Graph& g, int known_l, const std::string& name) {
    for (int k = 1; k <= k_max; ++k) {
      LDecision d = decide_l_leq_k(g, k, cap);
      ++res.checks;
      if (d.yes != (known_l <= k))
        res.failures.push_back(name + ": decide(k=" + std::to_string(k) + ")=" +
                               (d.yes ? "yes" : "no") + " but l=" +
                               std::to_string(known_l));
    }
  };
  for (int n = 10; n <= 200; n += 19) {
    expect(path_graph(n), 1, "P_" + std::to_string(n));
    expect(q_graph(n), 2, "Q_" + std::to_string(n));
    expect(r_graph(n), 2, "R_" + std::to_string(n));
  }
  // L +_q R instances with l from the closed form.
  struct Side {
    const char* name;
    Graph g;
    int attach;
  };
  std::vector<Side> sides = {
      {"K1", path_graph(1), 1},
      {"K3", complete_graph(3), 1},
      {"K31", star_graph(3), 4},
      {"C4", cycle_graph(4), 1},
      {"K4", complete_graph(4), 1},
  };
  for (const auto& left : sides) {
    for (const auto& right : sides) {
      int m = left.g.vertex_count(), s = right.g.vertex_count();
      if (m > s) continue;
      for (int q : {std::max(s, 40), 120, 180}) {
        Graph g = oplus_join(left.g, left.attach, q, right.g, right.attach);
        if (g.vertex_count() > 200) continue;
        expect(g, oplus_l(m, s, q),
               std::string(left.name) + "+" + std::to_string(q) + "+" + right.name);
      }
    }
  }
  return res;
}

namespace {

SweepResult check_lemmas(const Digraph& d, std::size_t cap, std::uint64_t& state) {
  SweepResult res;
  if (d.arc_count() == 0) return res;
  int n = d.vertex_count();

  SemigroupTable table;
  try {
    table = generate(d, cap);
  } catch (const CapExceeded&) {
    return res;  // out of oracle range; nothing to check here
  }
  auto scc = strong_components(d);
  auto green = green_structure(table);

  // Reverse arcs of cycles exist and are R-related to the forward arcs.
  for (auto [a, b] : d.arcs()) {
    if (scc.component_of[a] != scc.component_of[b]) continue;
    ++res.checks;
    int fwd = table.index_of(Transformation::arc(a, b, n));
    int rev = table.index_of(Transformation::arc(b, a, n));
    if (rev < 0)
      res.failures.push_back("missing reverse arc (" + std::to_string(b) + "->" +
                             std::to_string(a) + ") in:\n" + write_digraph(d));
    else if (green.r_class[fwd] != green.r_class[rev])
      res.failures.push_back("arc and reverse not R-related on:\n" + write_digraph(d));
  }

  // Strongly connected digraphs contain every constant map.
  if (scc.components.size() == 1 && n >= 2) {
    for (int target = 1; target <= n; ++target) {
      std::vector<std::uint8_t> img(n, static_cast<std::uint8_t>(target));
      ++res.checks;
      if (table.index_of(Transformation::from_images(img)) < 0)
        res.failures.push_back("missing constant map to " + std::to_string(target) +
                               " in:\n" + write_digraph(d));
    }
  }

  // Connected digraphs have a map into the terminal components.
  if (is_weakly_connected(d)) {
    auto cond = condensation_and_terminals(d);
    std::vector<char> terminal(n + 1, 0);
    for (int t : cond.terminal_components)
      for (int v : cond.scc.components[t]) terminal[v] = 1;
    bool found = false;
    for (const auto& el : table.elements) {
      bool all = true;
      for (int v = 1; v <= n && all; ++v)
        if (!terminal[el.apply(v)]) all = false;
      if (all) {
        found = true;
        break;
      }
    }
    ++res.checks;
    if (!found)
      res.failures.push_back("no element maps into the terminal components of:\n" +
                             write_digraph(d));
  }

  // Direct product law over non-trivial components.
  {
    unsigned long long product = 1;
    bool capped = false;
    for (const auto& comp : weak_components(d)) {
      if (comp.size() < 2) continue;
      try {
        product *= semigroup_size(induced_subdigraph(d, comp), cap) + 1;
      } catch (const CapExceeded&) {
        capped = true;
      }
    }
    if (!capped) {
      ++res.checks;
      if (product - 1 != table.size())
        res.failures.push_back("component size law: product-1=" +
                               std::to_string(product - 1) + " size=" +
                               std::to_string(table.size()) + " on:\n" +
                               write_digraph(d));
    }
  }

  // Graph-only lemmas on the underlying graph when symmetric and connected.
  if (d.is_symmetric() && is_weakly_connected(d) && n >= 2) {
    Graph g(d);
    int l = l_brute(d, cap);
    int max_deg = 0, not2 = 0;
    for (int v = 1; v <= n; ++v) {
      max_deg = std::max(max_deg, g.degree(v));
      if (g.degree(v) != 2) ++not2;
    }
    ++res.checks;
    if (l < max_deg - 1)
      res.failures.push_back("degree bound violated on:\n" + write_digraph(d));
    ++res.checks;
    if (4 * (l - 1) < not2 - 2)
      res.failures.push_back("degree-2 count bound violated on:\n" + write_digraph(d));

    // Spanning tree leaves: l >= leaves - 1.
    {
      std::vector<int> parent(n + 1, 0), order{1};
      std::vector<char> seen(n + 1, 0);
      seen[1] = 1;
      for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[static_cast<std::size_t>(head)];
        for (int w : g.neighbours(v))
          if (!seen[w]) {
            seen[w] = 1;
            parent[w] = v;
            order.push_back(w);
          }
      }
      std::vector<int> tree_deg(n + 1, 0);
      for (int v = 2; v <= n; ++v) {
        ++tree_deg[v];
        ++tree_deg[parent[v]];
      }
      int leaves = 0;
      for (int v = 1; v <= n; ++v)
        if (tree_deg[v] == 1) ++leaves;
      ++res.checks;
      if (l < leaves - 1)
        res.failures.push_back("spanning-tree leaf bound violated on:\n" +
                               write_digraph(d));
    }

    // Random minors never increase l.
    if (n <= 6) {
      Graph h = g;
      for (int step = 0; step < 3 && h.vertex_count() >= 2; ++step) {
        auto edges = h.edges();
        std::uint64_t pick = split_mix(state);
        if (edges.empty()) break;
        auto [u, v] = edges[pick % edges.size()];
        int op = static_cast<int>(split_mix(state) % 3);
        Graph next = h;
        if (op == 0)
          next = contract_edge(h, u, v);
        else if (op == 1)
          next = delete_edge(h, u, v);
        else
          next = delete_vertex(h, static_cast<int>(1 + split_mix(state) % h.vertex_count()));
        if (next.edge_count() == 0) break;
        ++res.checks;
        if (l_brute(next.digraph(), cap) > l)
          res.failures.push_back("minor increased l on:\n" + write_digraph(d));
        h = next;
      }
    }
  }
  return res;
}

}  // namespace

SweepResult lemma_exhaustive(int n_max, std::size_t cap, int threads) {
  SweepResult res;
  std::mutex m;
  for (int n = 2; n <= n_max; ++n) {
    auto slots = arc_slots(n);
    long long total = 1LL << slots.size();
    parallel_chunks(total, threads, [&](long long begin, long long end, int) {
      SweepResult local;
      std::uint64_t state = 0x5eed0000 + static_cast<std::uint64_t>(begin);
      for (long long bits = begin; bits < end; ++bits) {
        if (bits == 0) continue;
        Digraph d = digraph_from_arc_bits(n, slots, static_cast<std::uint64_t>(bits));
        local.merge(check_lemmas(d, cap, state));
      }
      std::lock_guard<std::mutex> lock(m);
      res.merge(local);
    });
  }
  std::sort(res.failures.begin(), res.failures.end());
  return res;
}

SweepResult lemma_random(int n, int count, std::uint64_t seed, std::size_t cap) {
  SweepResult res;
  std::uint64_t state = seed ^ 0x517e57ab1e5eedULL;
  for (int i = 0; i < count; ++i) {
    Digraph d = random_digraph(n, state);
    res.merge(check_lemmas(d, cap, state));
    // Also exercise the graph-only lemmas via a random connected graph.
    Graph g = random_connected_graph(n, state);
    res.merge(check_lemmas(g.digraph(), cap, state));
  }
  return res;
}

SweepResult relabel_invariance(int n, int count, std::uint64_t seed) {
  SweepResult res;
  std::uint64_t state = seed ^ 0x9e1ab1eULL;
  for (int i = 0; i < count; ++i) {
    Digraph d = random_digraph(n, state);
    std::vector<int> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 0);
    for (int v = n; v >= 2; --v)
      std::swap(perm[v], perm[1 + split_mix(state) % v]);
    std::vector<VertexPair> arcs;
    for (auto [u, v] : d.arcs()) arcs.emplace_back(perm[u], perm[v]);
    Digraph relabelled(n, arcs);

    auto a = flattened(classify(d));
    auto b = flattened(classify(relabelled));
    ++res.checks;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j].second->verdict != b[j].second->verdict) {
        res.failures.push_back("relabelling changed " + a[j].first + " on:\n" +
                               write_digraph(d));
        break;
      }
    if (d.arc_count() > 0) {
      ++res.checks;
      if (l_of(d) != l_of(relabelled))
        res.failures.push_back("relabelling changed l on:\n" + write_digraph(d));
    }
  }
  return res;
}

SweepResult closure_stability_exhaustive(int n_max) {
  SweepResult res;
  for (int n = 2; n <= n_max; ++n) {
    auto slots = arc_slots(n);
    long long total = 1LL << slots.size();
    for (long long bits = 1; bits < total; ++bits) {
      Digraph d = digraph_from_arc_bits(n, slots, static_cast<std::uint64_t>(bits));
      Digraph closed = closure(d);
      auto a = flattened(classify(d));
      auto b = flattened(classify(closed));
      ++res.checks;
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].first == "l_trivial") continue;  // stated on D itself
        if (a[j].second->verdict != b[j].second->verdict) {
          res.failures.push_back("closure changed " + a[j].first + " on:\n" +
                                 write_digraph(d));
          break;
        }
      }
    }
  }
  return res;
}

SweepResult run_all_verification(const VerifyOptions& options, std::ostream& log) {
  SweepResult res;
  auto step = [&](const std::string& name, SweepResult r) {
    log << name << ": " << (r.ok() ? "ok" : "FAIL") << " (" << r.checks << " checks";
    if (!r.ok()) log << ", " << r.failures.size() << " failures";
    log << ")\n";
    if (!r.ok())
      for (std::size_t i = 0; i < std::min<std::size_t>(3, r.failures.size()); ++i)
        log << "  " << r.failures[i] << "\n";
    res.merge(r);
  };

  for (int n = 2; n <= std::min(options.n_max, 4); ++n)
    step("classifier-vs-oracle n=" + std::to_string(n),
         classifier_oracle_exhaustive(n, [](const Digraph& d) { return classify(d); },
                                      options.element_cap, options.threads));
  if (options.n_max >= 5)
    step("classifier-vs-oracle random n=5",
         classifier_oracle_random(5, options.random_count, options.seed,
                                  [](const Digraph& d) { return classify(d); },
                                  options.element_cap));
  step("l-agreement",
       l_agreement_exhaustive(std::min(options.n_max, 5), options.element_cap,
                              options.threads));
  step("decide-vs-oracle",
       decide_agreement_small(std::min(options.n_max + 2, 7), options.k_max,
                              options.element_cap, options.threads));
  step("decide-constructed", decide_agreement_constructed(options.k_max, options.element_cap));
  step("lemmas exhaustive", lemma_exhaustive(std::min(options.n_max, 4),
                                             options.element_cap, options.threads));
  for (int n = 5; n <= 6; ++n)
    step("lemmas random n=" + std::to_string(n),
         lemma_random(n, options.random_count, options.seed, options.element_cap));
  step("relabel-invariance", relabel_invariance(5, options.random_count / 5 + 20, options.seed));
  step("closure-stability", closure_stability_exhaustive(std::min(options.n_max, 4)));
  return res;
}

}  // namespace arcsemi
