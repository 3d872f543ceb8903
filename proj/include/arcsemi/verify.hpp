#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "arcsemi/classifier.hpp"
#include "arcsemi/digraph.hpp"
#include "arcsemi/semigroup.hpp"

namespace arcsemi {

struct SweepResult {
  long long checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void merge(const SweepResult& other);
};

using ClassifyFn = std::function<PropertyReport(const Digraph&)>;

// Classifier flags vs oracle probe on every labelled digraph with >= 1 arc.
// The classifier is injectable so the harness itself can be tested.
SweepResult classifier_oracle_exhaustive(int n, const ClassifyFn& fn,
                                         std::size_t cap, int threads);
SweepResult classifier_oracle_random(int n, int count, std::uint64_t seed,
                                     const ClassifyFn& fn, std::size_t cap);

// l_of vs l_brute: exhaustive labelled digraphs for n <= 4; at n = 5 the
// oracle runs once per isomorphism class and every labelled digraph is
// checked against its class value.
SweepResult l_agreement_exhaustive(int n_max, std::size_t cap, int threads);

// decide_l_leq_k vs the oracle over connected graphs up to isomorphism.
SweepResult decide_agreement_small(int n_max, int k_max, std::size_t cap, int threads);
// ... and over constructed Q_n / R_n / oplus instances with known l.
SweepResult decide_agreement_constructed(int k_max, std::size_t cap);

// Structural lemma suite (R-related reverse arcs, terminal lemmas, direct
// product law, minor monotonicity, degree bounds).
SweepResult lemma_exhaustive(int n_max, std::size_t cap, int threads);
SweepResult lemma_random(int n, int count, std::uint64_t seed, std::size_t cap);

// Classifier verdicts survive vertex relabelling and closure.
SweepResult relabel_invariance(int n, int count, std::uint64_t seed);
SweepResult closure_stability_exhaustive(int n_max);

struct VerifyOptions {
  int n_max = 4;
  int k_max = 3;
  std::uint64_t seed = 1;
  std::size_t element_cap = kDefaultElementCap;
  int threads = 0;  // 0 = hardware concurrency
  int random_count = 500;
};

SweepResult run_all_verification(const VerifyOptions& options, std::ostream& log);

// Deterministic seeded digraph (arc probability ~ 0.35, at least one arc).
Digraph random_digraph(int n, std::uint64_t& state);
Graph random_connected_graph(int n, std::uint64_t& state);
std::uint64_t split_mix(std::uint64_t& state);

void parallel_chunks(long long count, int threads,
                     const std::function<void(long long, long long, int)>& run);

}  // namespace arcsemi
