#include "arcsemi/report.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "arcsemi/decompose.hpp"
#include "arcsemi/enumerate.hpp"

namespace arcsemi {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

Json finding_json(const Finding& f) {
  Json j;
  j["verdict"] = to_string(f.verdict);
  j["rule"] = f.rule;
  if (!f.witness.empty()) j["witness"] = f.witness;
  return j;
}

}  // namespace

Json to_json(const PropertyReport& r) {
  Json j;
  for (const auto& [name, finding] : flattened(r)) j[name] = finding_json(*finding);
  if (r.size_if_fans) j["predicted_size"] = *r.size_if_fans;
  return j;
}

std::vector<std::string> oracle_disagreements(const Digraph& d, const PropertyReport& report,
                                              const OracleSection& oracle) {
  std::vector<std::string> out;
  if (oracle.capped) return out;
  const OracleReport& o = oracle.report;
  auto check = [&](const char* name, const Finding& f, bool oracle_value) {
    if (!f.applicable()) return;
    if (f.is(oracle_value)) return;
    out.push_back(std::string(name) + ": classifier " + to_string(f.verdict) +
                  ", oracle " + (oracle_value ? "true" : "false"));
  };
  check("h_trivial", report.greens.h_trivial, o.h_trivial);
  check("r_trivial", report.greens.r_trivial, o.r_trivial);
  check("l_trivial", report.greens.l_trivial, o.l_trivial);
  check("j_trivial", report.greens.j_trivial, o.j_trivial);
  check("band", report.regularity.band, o.band);
  check("completely_regular", report.regularity.completely_regular, o.completely_regular);
  check("inverse", report.regularity.inverse, o.inverse);
  check("commutative", report.regularity.commutative, o.commutative);
  check("semilattice", report.regularity.semilattice, o.semilattice);
  check("regular", report.regularity.regular, o.regular);
  check("has_left_zero", report.zeros.has_left_zero, o.has_left_zero());
  check("has_right_zero", report.zeros.has_right_zero, o.has_right_zero());
  check("has_zero", report.zeros.has_zero, o.zero.has_value());
  check("left_zero_semigroup", report.zeros.left_zero_semigroup, o.left_zero_semigroup);
  check("right_zero_semigroup", report.zeros.right_zero_semigroup, o.right_zero_semigroup);
  check("trivial", report.simplicity.trivial, o.trivial());
  check("group", report.simplicity.group, o.group);
  check("simple", report.simplicity.simple, o.simple);
  check("rectangular_band", report.simplicity.rectangular_band, o.rectangular_band);
  check("zero_simple", report.simplicity.zero_simple, o.zero_simple);
  if (oracle.congruence_free)
    check("congruence_free", report.simplicity.congruence_free, *oracle.congruence_free);
  if (report.size_if_fans && *report.size_if_fans != oracle.size)
    out.push_back("predicted_size: classifier " + std::to_string(*report.size_if_fans) +
                  ", oracle " + std::to_string(oracle.size));
  (void)d;
  return out;
}

AnalysisDocument analyze(const Digraph& d, bool run_oracle, std::size_t element_cap) {
  AnalysisDocument doc;
  doc.input = d;

  auto t0 = std::chrono::steady_clock::now();
  Digraph closed = closure(d);
  doc.closure_arcs_added = closed.arc_count() - d.arc_count();
  doc.components = weak_components(d);
  auto cond = condensation_and_terminals(d);
  doc.strong_comps = cond.scc.components;
  for (int t : cond.terminal_components) doc.terminals.push_back(cond.scc.components[t]);
  doc.timings_ms.emplace_back("decompose", ms_since(t0));

  t0 = std::chrono::steady_clock::now();
  doc.classifier = classify(d);
  doc.timings_ms.emplace_back("classify", ms_since(t0));

  if (d.arc_count() > 0) {
    t0 = std::chrono::steady_clock::now();
    try {
      doc.l_value = l_of(d, element_cap);
    } catch (const CapExceeded&) {
      doc.l_value.reset();
    }
    doc.timings_ms.emplace_back("l", ms_since(t0));
  }

  if (run_oracle && d.arc_count() > 0) {
    t0 = std::chrono::steady_clock::now();
    OracleSection section;
    try {
      SemigroupTable table = generate(d, element_cap);
      section.size = table.size();
      section.report = probe(table);
      try {
        section.congruence_free = is_congruence_free(table);
      } catch (const CapExceeded&) {
        section.congruence_free.reset();
      }
    } catch (const CapExceeded& e) {
      section.capped = true;
      section.partial_count = e.partial_count;
    }
    doc.oracle = std::move(section);
    doc.timings_ms.emplace_back("oracle", ms_since(t0));
    if (!doc.oracle->capped)
      doc.disagreements = oracle_disagreements(d, doc.classifier, *doc.oracle);
  }
  return doc;
}

namespace {

Json vertex_sets_json(const std::vector<std::vector<int>>& sets) {
  Json j = Json::array();
  for (const auto& s : sets) j.push_back(s);
  return j;
}

}  // namespace

Json to_json(const AnalysisDocument& doc) {
  Json j;
  j["digraph"]["n"] = doc.input.vertex_count();
  Json arcs = Json::array();
  for (auto [u, v] : doc.input.arcs()) arcs.push_back(Json::array({u, v}));
  j["digraph"]["arcs"] = arcs;
  j["closure_arcs_added"] = doc.closure_arcs_added;
  j["components"] = vertex_sets_json(doc.components);
  j["strong_components"] = vertex_sets_json(doc.strong_comps);
  j["terminal_components"] = vertex_sets_json(doc.terminals);
  j["classifier"] = to_json(doc.classifier);
  if (doc.oracle) {
    Json o;
    if (doc.oracle->capped) {
      o["capped"] = true;
      o["partial_count"] = doc.oracle->partial_count;
    } else {
      const OracleReport& r = doc.oracle->report;
      o["size"] = doc.oracle->size;
      o["band"] = r.band;
      o["commutative"] = r.commutative;
      o["semilattice"] = r.semilattice;
      o["regular"] = r.regular;
      o["completely_regular"] = r.completely_regular;
      o["inverse"] = r.inverse;
      o["h_trivial"] = r.h_trivial;
      o["r_trivial"] = r.r_trivial;
      o["l_trivial"] = r.l_trivial;
      o["j_trivial"] = r.j_trivial;
      o["aperiodic"] = r.aperiodic;
      o["left_zeros"] = r.left_zeros.size();
      o["right_zeros"] = r.right_zeros.size();
      o["has_zero"] = r.zero.has_value();
      o["left_zero_semigroup"] = r.left_zero_semigroup;
      o["right_zero_semigroup"] = r.right_zero_semigroup;
      o["simple"] = r.simple;
      o["rectangular_band"] = r.rectangular_band;
      o["zero_simple"] = r.zero_simple;
      o["group"] = r.group;
      o["trivial"] = r.trivial();
      if (doc.oracle->congruence_free)
        o["congruence_free"] = *doc.oracle->congruence_free;
    }
    j["oracle"] = o;
  }
  if (doc.l_value) j["l"] = *doc.l_value;
  Json timings;
  for (const auto& [phase, ms] : doc.timings_ms) timings[phase] = ms;
  j["timings_ms"] = timings;
  j["disagreements"] = doc.disagreements;
  return j;
}

Json to_json(const LDecision& d) {
  Json j;
  j["k"] = d.k;
  j["n"] = d.n;
  j["verdict"] = d.yes ? "yes" : "no";
  j["step"] = std::string(step_name(d.step));
  if (d.max_degree >= 0) j["max_degree"] = d.max_degree;
  if (d.vertices_not_degree2 >= 0) j["vertices_not_degree2"] = d.vertices_not_degree2;
  if (d.largest_block >= 0) j["largest_block"] = d.largest_block;
  if (d.branch_length >= 0) {
    j["branch_length"] = d.branch_length;
    j["branch_terminal"] = d.branch_terminal;
    j["branch_endpoints"] = Json::array({d.branch_first, d.branch_last});
  }
  if (d.oracle_fallback) j["oracle_fallback"] = true;
  return j;
}

CensusTable census(int n, bool up_to_iso, const std::string& only,
                   std::size_t element_cap) {
  CensusTable table;
  table.n = n;
  table.up_to_iso = up_to_iso;

  PropertyReport sample = classify(Digraph(2, {{1, 2}}));
  std::vector<std::string> names;
  for (const auto& [name, f] : flattened(sample)) {
    if (!only.empty() && name != only) continue;
    names.push_back(name);
  }
  if (names.empty() && !only.empty())
    throw std::invalid_argument("unknown property: " + only);
  table.rows.resize(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) table.rows[i].property = names[i];

  std::set<unsigned long long> inverse_sizes;
  bool count_inverse_classes =
      only.empty() || only == "inverse";

  for_each_digraph(n, up_to_iso, [&](const Digraph& d) {
    if (d.arc_count() == 0) {
      ++table.skipped_empty;
      return;
    }
    ++table.digraphs;
    PropertyReport report = classify(d);
    std::optional<OracleSection> oracle;
    auto oracle_value = [&](const std::string& name) -> std::optional<bool> {
      if (!oracle) {
        OracleSection section;
        try {
          SemigroupTable t = generate(d, element_cap);
          section.size = t.size();
          section.report = probe(t);
          try {
            section.congruence_free = is_congruence_free(t);
          } catch (const CapExceeded&) {
          }
        } catch (const CapExceeded& e) {
          section.capped = true;
          section.partial_count = e.partial_count;
        }
        oracle = std::move(section);
      }
      if (oracle->capped) return std::nullopt;
      const OracleReport& o = oracle->report;
      if (name == "has_left_zero") return o.has_left_zero();
      if (name == "has_right_zero") return o.has_right_zero();
      if (name == "has_zero") return o.zero.has_value();
      if (name == "simple") return o.simple;
      if (name == "rectangular_band") return o.rectangular_band;
      if (name == "regular") return o.regular;
      if (name == "congruence_free") return oracle->congruence_free;
      return std::nullopt;
    };

    auto flat = flattened(report);
    for (std::size_t i = 0; i < names.size(); ++i) {
      const Finding* f = nullptr;
      for (const auto& [name, finding] : flat)
        if (name == names[i]) f = finding;
      bool value = false;
      if (f->applicable()) {
        value = f->is(true);
      } else {
        // Regularity of non-acyclic digraphs needs a per-digraph oracle run;
        // only pay for it when that row was asked for explicitly.
        std::optional<bool> v;
        if (names[i] != "regular" || !only.empty()) v = oracle_value(names[i]);
        if (!v) {
          ++table.rows[i].not_applicable;
          continue;
        }
        value = *v;
      }
      if (value) ++table.rows[i].satisfied;
    }

    if (count_inverse_classes && report.regularity.inverse.is(true)) {
      // All inverse <D> here are free semilattices; 2^(n - #components) - 1.
      if (report.size_if_fans) inverse_sizes.insert(*report.size_if_fans);
    }
  });
  table.inverse_semigroup_classes = static_cast<long long>(inverse_sizes.size());
  return table;
}

Json to_json(const CensusTable& t) {
  Json j;
  j["n"] = t.n;
  j["up_to_iso"] = t.up_to_iso;
  j["digraphs"] = t.digraphs;
  j["skipped_empty"] = t.skipped_empty;
  Json rows;
  for (const auto& row : t.rows) {
    Json r;
    r["satisfied"] = row.satisfied;
    if (row.not_applicable) r["not_applicable"] = row.not_applicable;
    rows[row.property] = r;
  }
  j["properties"] = rows;
  j["inverse_semigroup_classes"] = t.inverse_semigroup_classes;
  return j;
}

}  // namespace arcsemi
