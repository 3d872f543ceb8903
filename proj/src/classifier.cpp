#include "arcsemi/classifier.hpp"

#include <algorithm>

#include "arcsemi/decompose.hpp"
#include "arcsemi/enumerate.hpp"
#include "arcsemi/shapes.hpp"

namespace arcsemi {

Finding make_finding(bool value, std::string rule, std::string witness) {
  return {value ? Verdict::True : Verdict::False, std::move(rule), std::move(witness)};
}

namespace {

Finding not_applicable(std::string rule) {
  return {Verdict::NotApplicable, std::move(rule), ""};
}

std::string vertex_list(const std::vector<int>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

bool underlying_is_path(const Digraph& component) {
  // Connected induced subdigraph; path test on the underlying graph.
  Graph g = underlying_graph(component);
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

int max_out_degree(const Digraph& d) {
  int best = 0;
  for (int v = 1; v <= d.vertex_count(); ++v)
    best = std::max(best, d.out_degree(v));
  return best;
}

}  // namespace

bool has_long_cycle(const Digraph& d) {
  // A cycle of length >= 3 exists iff some strong component either has an
  // unpaired arc (its return path closes a longer cycle) or is symmetric
  // with more edges than a tree allows.
  auto scc = strong_components(d);
  for (const auto& comp : scc.components) {
    if (comp.size() < 2) continue;
    int id = scc.component_of[comp.front()];
    int internal_arcs = 0;
    for (int u : comp)
      for (int v : d.out(u))
        if (scc.component_of[v] == id) {
          ++internal_arcs;
          if (!d.has_arc(v, u)) return true;
        }
    if (internal_arcs / 2 > static_cast<int>(comp.size()) - 1) return true;
  }
  return false;
}

GreensTrivialityReport greens_triviality(const Digraph& d) {
  GreensTrivialityReport rep;
  auto scc = strong_components(d);
  bool acyclic = true;
  std::string cyc_witness;
  bool all_paths = true;
  std::string path_witness;
  for (const auto& comp : scc.components) {
    if (comp.size() < 2) continue;
    if (acyclic) {
      acyclic = false;
      cyc_witness = "strong component " + vertex_list(comp);
    }
    if (all_paths && !underlying_is_path(induced_subdigraph(d, comp))) {
      all_paths = false;
      path_witness = "strong component " + vertex_list(comp) + " is not a path";
    }
  }
  rep.h_trivial = make_finding(all_paths, "scc-paths", path_witness);
  rep.r_trivial = make_finding(acyclic, "acyclic", cyc_witness);

  int maxout = max_out_degree(d);
  bool long_cycle = has_long_cycle(d);
  std::string l_witness;
  if (maxout > 1) l_witness = "out-degree " + std::to_string(maxout);
  else if (long_cycle) l_witness = "cycle of length > 2";
  rep.l_trivial =
      make_finding(maxout <= 1 && !long_cycle, "out-degree-1-and-no-long-cycle", l_witness);
  rep.j_trivial = make_finding(acyclic && maxout <= 1, "acyclic-and-out-degree-1",
                               acyclic ? l_witness : cyc_witness);
  return rep;
}

RegularityReport regularity_family(const Digraph& d) {
  RegularityReport rep;
  if (d.arc_count() == 0) {
    rep.band = rep.completely_regular = rep.inverse = rep.commutative =
        rep.semilattice = rep.regular = not_applicable("empty-semigroup");
    return rep;
  }
  auto comps = weak_components(d);
  bool band = true;
  std::string band_witness;
  bool fans = true;
  std::string fan_witness;
  for (const auto& comp : comps) {
    if (comp.size() < 2) continue;
    Digraph sub = induced_subdigraph(d, comp);
    if (band && comp.size() >= 3 && !directed_bipartition(sub).bipartite) {
      band = false;
      band_witness = "component " + vertex_list(comp) + " is not directed-bipartite";
    }
    if (fans) {
      auto sink = fan_sink(sub);
      if (!sink) {
        fans = false;
        fan_witness = "component " + vertex_list(comp) + " is not a fan";
      } else if (fan_witness.empty()) {
        fan_witness = "fan sink " + std::to_string(comp[*sink - 1]);
      }
    }
  }
  rep.band = make_finding(band, "directed-bipartite-components", band_witness);
  rep.completely_regular = rep.band;
  rep.inverse = make_finding(fans, "fan-components", fans ? fan_witness : fan_witness);
  rep.commutative = rep.inverse;
  rep.semilattice = rep.inverse;
  bool acyclic = true;
  for (const auto& comp : strong_components(d).components)
    if (comp.size() >= 2) acyclic = false;
  if (acyclic)
    rep.regular = make_finding(band, "acyclic-regular-iff-band", band_witness);
  else
    rep.regular = not_applicable("non-acyclic-regularity-needs-oracle");
  return rep;
}

ZeroReport zero_family(const Digraph& d) {
  ZeroReport rep;
  if (d.arc_count() == 0) {
    rep.has_left_zero = rep.has_right_zero = rep.has_zero =
        rep.left_zero_semigroup = rep.right_zero_semigroup =
            not_applicable("empty-semigroup");
    return rep;
  }
  auto comps = weak_components(d);
  if (comps.size() == 1) {
    auto cond = condensation_and_terminals(d);
    std::vector<int> terminal_sizes;
    std::string terminals;
    bool all_trivial = true;
    for (int t : cond.terminal_components) {
      const auto& comp = cond.scc.components[t];
      if (comp.size() > 1) all_trivial = false;
      terminals += (terminals.empty() ? "" : " ") + vertex_list(comp);
    }
    int count = static_cast<int>(cond.terminal_components.size());
    rep.has_left_zero = make_finding(all_trivial, "trivial-terminal-components",
                                     "terminals: " + terminals);
    rep.has_right_zero = make_finding(count == 1, "unique-terminal-component",
                                      "terminals: " + terminals);
    rep.has_zero = make_finding(count == 1 && all_trivial, "unique-trivial-terminal",
                                count == 1 && all_trivial
                                    ? "zero is the constant map to " +
                                          vertex_list(cond.scc.components[cond.terminal_components[0]])
                                    : "terminals: " + terminals);
  } else {
    rep.has_left_zero = rep.has_right_zero = rep.has_zero = not_applicable("disconnected");
  }

  const std::vector<int>* nontrivial = nullptr;
  bool unique = true;
  for (const auto& comp : comps) {
    if (comp.size() < 2) continue;
    if (nontrivial) unique = false;
    if (!nontrivial) nontrivial = &comp;
  }
  bool lzs = false, rzs = false;
  std::string lzs_witness, rzs_witness;
  if (nontrivial && unique) {
    Digraph sub = induced_subdigraph(d, *nontrivial);
    int source = 0;
    bool single_source = true;
    for (auto [a, b] : sub.arcs()) {
      if (source == 0) source = a;
      if (a != source) single_source = false;
    }
    lzs = single_source;
    if (lzs) lzs_witness = "all arcs leave " + std::to_string((*nontrivial)[source - 1]);
    rzs = nontrivial->size() == 2;
    if (rzs) rzs_witness = "component " + vertex_list(*nontrivial);
  }
  rep.left_zero_semigroup = make_finding(lzs, "single-source-component", lzs_witness);
  rep.right_zero_semigroup = make_finding(rzs, "two-vertex-component", rzs_witness);
  return rep;
}

SimplicityReport simplicity_family(const Digraph& d) {
  SimplicityReport rep;
  if (d.arc_count() == 0) {
    rep.trivial = rep.group = rep.simple = rep.rectangular_band = rep.zero_simple =
        rep.congruence_free = not_applicable("empty-semigroup");
    return rep;
  }
  bool one_arc = d.arc_count() == 1;
  rep.trivial = make_finding(one_arc, "single-arc");
  rep.group = rep.trivial;

  auto comps = weak_components(d);
  ZeroReport zeros = zero_family(d);
  if (comps.size() == 1) {
    bool val = zeros.left_zero_semigroup.is(true) || zeros.right_zero_semigroup.is(true);
    rep.simple = make_finding(val, "left-or-right-zero-semigroup");
    rep.rectangular_band = rep.simple;
  } else {
    rep.simple = rep.rectangular_band = not_applicable("disconnected");
  }

  const std::vector<int>* nontrivial = nullptr;
  bool unique = true;
  for (const auto& comp : comps) {
    if (comp.size() < 2) continue;
    if (nontrivial) unique = false;
    if (!nontrivial) nontrivial = &comp;
  }
  bool zs = false, cf = false;
  std::string zs_witness, cf_witness;
  if (nontrivial && unique && nontrivial->size() <= 3) {
    Digraph sub = induced_subdigraph(d, *nontrivial);
    const auto& zcat = zero_simple_catalog();
    for (std::size_t i = 0; i < zcat.size(); ++i)
      if (is_isomorphic(sub, zcat[i])) {
        zs = true;
        zs_witness = "catalog digraph " + std::to_string(i + 1);
      }
    const auto& ccat = congruence_free_catalog();
    for (std::size_t i = 0; i < ccat.size(); ++i)
      if (is_isomorphic(sub, ccat[i])) {
        cf = true;
        cf_witness = "catalog digraph " + std::to_string(i + 1);
      }
  }
  rep.zero_simple = make_finding(zs, "three-vertex-catalog", zs_witness);
  rep.congruence_free = make_finding(cf, "small-component-catalog", cf_witness);
  return rep;
}

std::optional<unsigned long long> predicted_size(const Digraph& d) {
  if (d.arc_count() == 0) return std::nullopt;
  unsigned long long product = 1;
  for (const auto& comp : weak_components(d)) {
    if (comp.size() < 2) continue;
    if (!fan_sink(induced_subdigraph(d, comp))) return std::nullopt;
    product <<= comp.size() - 1;
  }
  return product - 1;
}

PropertyReport classify(const Digraph& d) {
  PropertyReport r;
  r.greens = greens_triviality(d);
  r.regularity = regularity_family(d);
  r.zeros = zero_family(d);
  r.simplicity = simplicity_family(d);
  r.size_if_fans = predicted_size(d);
  return r;
}

std::vector<std::pair<std::string, const Finding*>> flattened(const PropertyReport& r) {
  return {
      {"h_trivial", &r.greens.h_trivial},
      {"r_trivial", &r.greens.r_trivial},
      {"l_trivial", &r.greens.l_trivial},
      {"j_trivial", &r.greens.j_trivial},
      {"band", &r.regularity.band},
      {"completely_regular", &r.regularity.completely_regular},
      {"inverse", &r.regularity.inverse},
      {"commutative", &r.regularity.commutative},
      {"semilattice", &r.regularity.semilattice},
      {"regular", &r.regularity.regular},
      {"has_left_zero", &r.zeros.has_left_zero},
      {"has_right_zero", &r.zeros.has_right_zero},
      {"has_zero", &r.zeros.has_zero},
      {"left_zero_semigroup", &r.zeros.left_zero_semigroup},
      {"right_zero_semigroup", &r.zeros.right_zero_semigroup},
      {"trivial", &r.simplicity.trivial},
      {"group", &r.simplicity.group},
      {"simple", &r.simplicity.simple},
      {"rectangular_band", &r.simplicity.rectangular_band},
      {"zero_simple", &r.simplicity.zero_simple},
      {"congruence_free", &r.simplicity.congruence_free},
  };
}

}  // namespace arcsemi
