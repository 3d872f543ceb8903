#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arcsemi/classifier.hpp"
#include "arcsemi/cycle_length.hpp"
#include "arcsemi/digraph.hpp"
#include "arcsemi/green.hpp"

namespace arcsemi {

using Json = nlohmann::ordered_json;

struct OracleSection {
  bool capped = false;
  std::size_t partial_count = 0;          // when capped
  std::size_t size = 0;
  OracleReport report;
  std::optional<bool> congruence_free;    // absent past the congruence cap
};

struct AnalysisDocument {
  Digraph input;
  int closure_arcs_added = 0;
  std::vector<std::vector<int>> components;
  std::vector<std::vector<int>> strong_comps;
  std::vector<std::vector<int>> terminals;
  PropertyReport classifier;
  std::optional<OracleSection> oracle;
  std::optional<int> l_value;             // absent when the oracle fallback capped
  std::vector<std::pair<std::string, double>> timings_ms;
  std::vector<std::string> disagreements;
};

AnalysisDocument analyze(const Digraph& d, bool run_oracle, std::size_t element_cap);

// Classifier flags vs oracle probe on the same digraph, applicable flags only.
std::vector<std::string> oracle_disagreements(const Digraph& d, const PropertyReport& report,
                                              const OracleSection& oracle);

Json to_json(const PropertyReport& r);
Json to_json(const AnalysisDocument& doc);
Json to_json(const LDecision& d);

struct CensusRow {
  std::string property;
  long long satisfied = 0;
  long long not_applicable = 0;
};

struct CensusTable {
  int n = 0;
  bool up_to_iso = false;
  long long digraphs = 0;       // enumerated digraphs with at least one arc
  long long skipped_empty = 0;  // arc-less digraphs (empty semigroup)
  std::vector<CensusRow> rows;
  // Distinct isomorphism classes of <D> among the inverse instances; the
  // free-semilattice degree, hence the size, pins the class.
  long long inverse_semigroup_classes = 0;
};

// Counts digraphs whose semigroup has each property.  Classifier verdicts
// where applicable; small-component oracle fallback for the connectivity
// gated flags.  `only` restricts to one property name (empty = all).
CensusTable census(int n, bool up_to_iso, const std::string& only,
                   std::size_t element_cap);

Json to_json(const CensusTable& t);

}  // namespace arcsemi
