#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arcsemi/cycle_length.hpp"
#include "arcsemi/decompose.hpp"
#include "arcsemi/enumerate.hpp"
#include "arcsemi/green.hpp"
#include "arcsemi/report.hpp"
#include "arcsemi/shapes.hpp"
#include "arcsemi/verify.hpp"

namespace {

using namespace arcsemi;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDisagreement = 2;

Digraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_digraph(buf.str());
}

Graph load_graph(const std::string& path) {
  Digraph d = load_digraph(path);
  if (!d.is_symmetric())
    throw std::runtime_error(path + ": expected a graph (symmetric arcs)");
  return Graph(d);
}

void print_analysis_text(const AnalysisDocument& doc, std::ostream& os) {
  os << "vertices: " << doc.input.vertex_count()
     << "  arcs: " << doc.input.arc_count()
     << "  closure adds: " << doc.closure_arcs_added << "\n";
  os << "components: " << doc.components.size()
     << "  strong components: " << doc.strong_comps.size()
     << "  terminal components: " << doc.terminals.size() << "\n";
  if (doc.l_value) os << "l: " << *doc.l_value << "\n";
  os << "classifier:\n";
  for (const auto& [name, f] : flattened(doc.classifier)) {
    os << "  " << name << ": " << to_string(f->verdict) << "  [" << f->rule << "]";
    if (!f->witness.empty()) os << "  " << f->witness;
    os << "\n";
  }
  if (doc.classifier.size_if_fans)
    os << "  predicted_size: " << *doc.classifier.size_if_fans << "\n";
  if (doc.oracle) {
    if (doc.oracle->capped) {
      os << "oracle: aborted at element cap (" << doc.oracle->partial_count
         << " elements enumerated; property verdicts unavailable)\n";
    } else {
      os << "oracle: |<D>| = " << doc.oracle->size << "\n";
    }
  }
  if (!doc.disagreements.empty()) {
    os << "DISAGREEMENTS:\n";
    for (const auto& d : doc.disagreements) os << "  " << d << "\n";
  }
}

Graph build_family(const std::string& family, long long n) {
  if (family == "path") return path_graph(static_cast<int>(n));
  if (family == "cycle") return cycle_graph(static_cast<int>(n));
  if (family == "complete") return complete_graph(static_cast<int>(n));
  if (family == "star") return star_graph(static_cast<int>(n));
  if (family == "qn") return q_graph(static_cast<int>(n));
  if (family == "rn") return r_graph(static_cast<int>(n));
  if (family == "bull") return bull_graph();
  if (family == "egraph") return e_graph();
  if (family == "theta0") return theta0_graph();
  throw std::runtime_error("unknown graph family: " + family);
}

Digraph build_digraph_family(const std::string& family, long long n) {
  if (family == "fan") return fan_digraph(static_cast<int>(n));
  if (family == "oneway") return oneway_path(static_cast<int>(n));
  if (family == "zero-simple-1") return zero_simple_catalog()[0];
  if (family == "zero-simple-2") return zero_simple_catalog()[1];
  if (family.rfind("congruence-free-", 0) == 0) {
    int idx = std::stoi(family.substr(16)) - 1;
    return congruence_free_catalog().at(static_cast<std::size_t>(idx));
  }
  return build_family(family, n).digraph();
}

int run(int argc, char** argv) {
  CLI::App app{"arc-generated transformation semigroup analyzer"};
  app.require_subcommand(1);
  std::size_t cap = resolved_element_cap();
  app.add_option("--cap", cap, "oracle element cap");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "classify a digraph file");
  std::string analyze_path;
  bool analyze_oracle = false, analyze_json = false;
  analyze_cmd->add_option("file", analyze_path)->required();
  analyze_cmd->add_flag("--oracle", analyze_oracle, "also enumerate <D>");
  analyze_cmd->add_flag("--json", analyze_json);

  // l
  auto* l_cmd = app.add_subcommand("l", "compute l(D)");
  std::string l_path;
  bool l_brute_flag = false;
  l_cmd->add_option("file", l_path)->required();
  l_cmd->add_flag("--brute", l_brute_flag, "force the enumeration oracle");

  // decide
  auto* decide_cmd = app.add_subcommand("decide", "decide l(G) <= k in linear time");
  std::string decide_path;
  int decide_k = 1;
  bool decide_json = false;
  decide_cmd->add_option("file", decide_path)->required();
  decide_cmd->add_option("k", decide_k)->required();
  decide_cmd->add_flag("--json", decide_json);

  // census
  auto* census_cmd = app.add_subcommand("census", "count digraphs per property");
  int census_n = 3;
  bool census_iso = false;
  std::string census_property;
  bool census_json = false;
  census_cmd->add_option("n", census_n)->required();
  census_cmd->add_flag("--up-to-iso", census_iso);
  census_cmd->add_option("--property", census_property);
  census_cmd->add_flag("--json", census_json);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the verification sweeps");
  VerifyOptions vopts;
  vopts.element_cap = cap;
  verify_cmd->add_option("--n-max", vopts.n_max);
  verify_cmd->add_option("--k-max", vopts.k_max);
  verify_cmd->add_option("--seed", vopts.seed);
  verify_cmd->add_option("--threads", vopts.threads);
  verify_cmd->add_option("--random-count", vopts.random_count);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "time decide_l_leq_k on a family");
  std::string bench_family = "qn";
  std::vector<long long> bench_sizes;
  int bench_k = 2;
  bench_cmd->add_option("family", bench_family);
  bench_cmd->add_option("--sizes", bench_sizes)->delimiter(',');
  bench_cmd->add_option("--k", bench_k);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "write a zoo digraph as an edge list");
  std::string gen_family;
  long long gen_n = 0;
  std::string gen_out;
  gen_cmd->add_option("family", gen_family)->required();
  gen_cmd->add_option("n", gen_n);
  gen_cmd->add_option("--out", gen_out);

  CLI11_PARSE(app, argc, argv);

  if (*analyze_cmd) {
    AnalysisDocument doc = analyze(load_digraph(analyze_path), analyze_oracle, cap);
    if (analyze_json)
      std::cout << to_json(doc).dump(2) << "\n";
    else
      print_analysis_text(doc, std::cout);
    return doc.disagreements.empty() ? kExitOk : kExitDisagreement;
  }
  if (*l_cmd) {
    Digraph d = load_digraph(l_path);
    int value = l_brute_flag ? l_brute(d, cap) : l_of(d, cap);
    std::cout << value << "\n";
    return kExitOk;
  }
  if (*decide_cmd) {
    LDecision dec = decide_l_leq_k(load_graph(decide_path), decide_k, cap);
    if (decide_json)
      std::cout << to_json(dec).dump(2) << "\n";
    else
      std::cout << (dec.yes ? "yes" : "no") << " (step " << step_name(dec.step)
                << ")\n";
    return kExitOk;
  }
  if (*census_cmd) {
    CensusTable t = census(census_n, census_iso, census_property, cap);
    if (census_json) {
      std::cout << to_json(t).dump(2) << "\n";
    } else {
      std::cout << "digraphs with >= 1 arc: " << t.digraphs << "\n";
      for (const auto& row : t.rows) {
        std::cout << "  " << row.property << ": " << row.satisfied;
        if (row.not_applicable) std::cout << " (+" << row.not_applicable << " n/a)";
        std::cout << "\n";
      }
      std::cout << "  inverse semigroup classes: " << t.inverse_semigroup_classes
                << "\n";
    }
    return kExitOk;
  }
  if (*verify_cmd) {
    std::cout << "seed: " << vopts.seed << "\n";
    SweepResult res = run_all_verification(vopts, std::cout);
    std::cout << (res.ok() ? "PASS" : "FAIL") << " (" << res.checks << " checks, "
              << res.failures.size() << " failures)\n";
    return res.ok() ? kExitOk : kExitDisagreement;
  }
  if (*bench_cmd) {
    if (bench_sizes.empty()) bench_sizes = {1000, 10000, 100000, 1000000};
    std::cout << "family=" << bench_family << " k=" << bench_k << "\n";
    std::cout << "n,ms,ms_per_kilovertex\n";
    for (long long n : bench_sizes) {
      Graph g = build_family(bench_family, n);
      double best = 1e18;
      for (int rep = 0; rep < 3; ++rep) {
        auto t0 = std::chrono::steady_clock::now();
        LDecision dec = decide_l_leq_k(g, bench_k, cap);
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        best = std::min(best, ms);
        if (rep == 0 && dec.step == DecisionStep::Brute)
          std::cout << "# n=" << n << " fell below the brute-force threshold\n";
      }
      std::cout << n << "," << best << "," << best * 1000.0 / static_cast<double>(n)
                << "\n";
    }
    return kExitOk;
  }
  if (*gen_cmd) {
    Digraph d = build_digraph_family(gen_family, gen_n);
    std::string text = write_digraph(d);
    if (gen_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(gen_out);
      out << text;
    }
    return kExitOk;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const arcsemi::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
