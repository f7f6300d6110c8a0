#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage
// error, 3 resource guard tripped. Payloads go to `out`, diagnostics to `err`.

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "n2closure/n2closure.hpp"

namespace n2c::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kUsage = 2, kResource = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

inline VertexId lookup(const Graph& g, const std::string& label) {
  auto id = g.find(label);
  if (!id) throw DomainError("unknown vertex label '" + label + "'");
  return *id;
}

inline std::vector<VertexId> lookup_all(const Graph& g,
                                        const std::string& labels) {
  std::vector<VertexId> out;
  for (const auto& l : split_commas(labels)) out.push_back(lookup(g, l));
  return out;
}

inline std::string join_labels(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s) {
    if (!first) out += ",";
    out += g.label(v);
    first = false;
  }
  return out + "}";
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write '" + path + "'");
  f << text;
}

// --- classify --------------------------------------------------------------

struct ClassifyArgs {
  std::string input;
  std::string vertex;
  bool all = false;
  bool as_json = false;
};

inline int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const Graph g = read_edge_list_file(a.input).graph;
  std::vector<EligibilityReport> reports;
  if (!a.vertex.empty()) {
    reports.push_back(classify_vertex(g, lookup(g, a.vertex)));
  } else {
    reports = classify_all(g);
  }
  if (a.as_json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(g, r));
    out << arr.dump(2) << '\n';
    return kOk;
  }
  out << std::left << std::setw(10) << "vertex" << std::setw(11)
      << "simplicial" << std::setw(16) << "class" << std::setw(20)
      << "N(class)" << std::setw(7) << "sigma" << std::setw(6) << "chi2"
      << std::setw(6) << "N" << "N2" << '\n';
  for (const auto& r : reports) {
    out << std::setw(10) << g.label(r.vertex) << std::setw(11)
        << (r.simplicial ? "yes" : "no") << std::setw(16)
        << join_labels(g, r.class_bar_x) << std::setw(20)
        << join_labels(g, r.neighborhood_of_class) << std::setw(7)
        << r.sigma_of_neighborhood << std::setw(6) << r.chi2 << std::setw(6)
        << (r.n_eligible ? "yes" : "no") << (r.n2_eligible ? "yes" : "no")
        << '\n';
  }
  return kOk;
}

// --- close -------------------------------------------------------------------

struct CloseArgs {
  std::string input;
  std::string strategy = "min-id";
  bool baseline_n = false;
  std::string trace_path;
  std::string dot_path;
};

inline int cmd_close(const CloseArgs& a, std::ostream& out) {
  const Graph g = read_edge_list_file(a.input).graph;
  ChoiceStrategy strategy;
  try {
    strategy = parse_strategy(a.strategy);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const ClosureTrace trace =
      a.baseline_n ? n_closure(g) : n2_closure(g, strategy);
  if (!a.trace_path.empty()) {
    write_file(a.trace_path, to_json(trace).dump(2) + "\n");
  }
  if (!a.dot_path.empty()) {
    write_file(a.dot_path, to_dot(trace.initial, trace.final_graph));
  }
  out << "closure: " << (a.baseline_n ? "N" : "N2 (" + to_string(strategy) + ")")
      << '\n';
  out << "steps: " << trace.steps.size() << '\n';
  out << "initial edges: " << trace.initial.edge_count() << '\n';
  out << "final edges: " << trace.final_graph.edge_count() << '\n';
  return kOk;
}

// --- pullback ----------------------------------------------------------------

struct PullbackArgs {
  std::string input;
  std::string vertex;
  std::string cycle;
  bool trace = false;
};

inline int cmd_pullback(const PullbackArgs& a, std::ostream& out) {
  const Graph g = read_edge_list_file(a.input).graph;
  const VertexId x = lookup(g, a.vertex);
  const CompletionContext ctx(g, x);
  ctx.require_n2_eligible();
  const Cycle c{lookup_all(g, a.cycle)};
  validate(ctx.graph_x(), c);
  std::vector<PullBackStep> steps;
  const Cycle result = pull_back_cycle(ctx, c, &steps);
  if (a.trace) {
    for (const auto& s : steps) out << to_json(g, s).dump() << '\n';
    json tail = json::array();
    for (VertexId v : result.vertices) tail.push_back(g.label(v));
    out << json{{"cycle", tail}}.dump() << '\n';
  } else {
    out << cycle_labels(g, result) << '\n';
  }
  return kOk;
}

// --- classify-path -----------------------------------------------------------

struct ClassifyPathArgs {
  std::string input;
  std::string path;
  std::string xs;
  std::string ys;
};

inline int cmd_classify_path(const ClassifyPathArgs& a, std::ostream& out) {
  const Graph g = read_edge_list_file(a.input).graph;
  const Path p{lookup_all(g, a.path)};
  const VertexSet xs(lookup_all(g, a.xs));
  const VertexSet ys(lookup_all(g, a.ys));
  const auto c = classify_path(g, p, xs, ys);
  out << "rung: " << to_string(c.rung) << '\n';
  if (c.witness) {
    out << "witness: " << g.label(c.witness->first) << ","
        << g.label(c.witness->second) << '\n';
  }
  const auto b = check_counting_bounds(p, xs, ys);
  out << "sigma_P(Y): " << path_sigma(p, ys) << '\n';
  out << "bound1: " << (b.bound1_holds ? "holds" : "fails") << '\n';
  out << "bound2: "
      << (b.bound2_applicable ? (b.bound2_holds ? "holds" : "fails")
                              : "n/a")
      << '\n';
  return kOk;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::size_t samples = 100;
  std::size_t max_n = 10;
  std::uint64_t seed = 0;
};

inline constexpr double kVerifyDensities[] = {0.25, 0.4, 0.6};

// Checks one instance; returns an empty string on success.
inline std::string verify_instance(const Graph& g, std::uint64_t seed) {
  const auto c0 = circumference(g);
  for (VertexId x : n2_eligible_set(g)) {
    const CompletionContext ctx(g, x);
    const auto cx = circumference(ctx.graph_x());
    if (cx.circumference != c0.circumference) {
      return "completion at '" + g.label(x) + "' changed circumference " +
             std::to_string(c0.circumference) + " -> " +
             std::to_string(cx.circumference);
    }
    if (cx.witness) {
      const Cycle back = pull_back_cycle(ctx, *cx.witness);
      if (back.vertex_set() != cx.witness->vertex_set()) {
        return "pull-back at '" + g.label(x) + "' changed the vertex set";
      }
    }
  }
  for (const auto& s :
       {ChoiceStrategy::min_id(), ChoiceStrategy::max_class(),
        ChoiceStrategy::n_first(), ChoiceStrategy::seeded_random(seed)}) {
    const auto t = n2_closure(g, s);
    if (!n2_eligible_set(t.final_graph).empty()) {
      return "closure (" + to_string(s) + ") left an N2-eligible vertex";
    }
    const auto cf = circumference(t.final_graph);
    if (cf.circumference != c0.circumference) {
      return "closure (" + to_string(s) + ") changed circumference";
    }
    if (cf.hamiltonian != c0.hamiltonian) {
      return "closure (" + to_string(s) + ") changed Hamiltonicity";
    }
  }
  return {};
}

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.max_n > OracleLimits{}.max_vertices) {
    throw ResourceError("--max-n " + std::to_string(a.max_n) +
                        " exceeds the oracle guard of " +
                        std::to_string(OracleLimits{}.max_vertices));
  }
  if (a.max_n < 4) throw UsageError("--max-n must be at least 4");
  std::size_t passed = 0;
  for (std::size_t i = 0; i < a.samples; ++i) {
    const std::uint64_t s = mix64(a.seed ^ mix64(i));
    const std::size_t n = 4 + s % (a.max_n - 3);
    const double p = kVerifyDensities[i % 3];
    const Graph g = random_connected_graph(n, p, s);
    const std::string failure = verify_instance(g, a.seed);
    if (!failure.empty()) {
      out << passed << "/" << a.samples << " passed\n";
      out << "# first failure (sample " << i << "): " << failure << '\n';
      write_edge_list(out, g);
      return kDomain;
    }
    ++passed;
  }
  out << passed << "/" << a.samples << " passed\n";
  return kOk;
}

// --- search ------------------------------------------------------------------

struct SearchArgs {
  std::size_t nk = 0;
  bool divergent = false;
  std::size_t max_n = 8;
  std::size_t budget = 100'000;
  std::uint64_t seed = 0;
};

inline int cmd_search(const SearchArgs& a, std::ostream& out) {
  if ((a.nk != 0) == a.divergent) {
    throw UsageError("exactly one of --nk or --divergent is required");
  }
  if (a.nk != 0 && a.nk < 3) {
    throw UsageError("--nk " + std::to_string(a.nk) +
                     ": no witness can exist for k <= 2");
  }
  SearchOptions opt;
  opt.sample_budget = a.budget;
  opt.seed = a.seed;
  SearchStats stats;
  auto bounds = [&] {
    std::ostringstream s;
    s << "# searched " << stats.graphs_examined << " graphs; exhaustive n <= "
      << stats.exhaustive_up_to << ", sampled " << a.budget
      << " per n up to " << a.max_n << " (seed " << a.seed << ")\n";
    return s.str();
  };
  if (a.divergent) {
    const auto w = find_divergent_closures(a.max_n, opt, &stats);
    if (!w) {
      out << "none found within budget\n" << bounds();
      return kOk;
    }
    out << "# divergent closures: " << to_string(w->first) << " vs "
        << to_string(w->second) << '\n';
    out << "# only in first: " << edges_json(w->graph, w->diff.only_in_first).dump()
        << '\n';
    out << "# only in second: "
        << edges_json(w->graph, w->diff.only_in_second).dump() << '\n';
    write_edge_list(out, w->graph);
    return kOk;
  }
  const auto w = find_nk_counterexample(a.nk, a.max_n, opt, &stats);
  if (!w) {
    out << "none found within budget\n" << bounds();
    return kOk;
  }
  out << "# N" << a.nk << "-eligible, not N2-eligible; circumference "
      << w->circumference_before << " -> " << w->circumference_after << '\n';
  write_edge_list(out, w->graph, w->vertex);
  return kOk;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"N2-closure toolkit: local completion, closures, cycle "
               "pull-back and exact oracles"};
  app.require_subcommand(1);

  detail::ClassifyArgs classify;
  auto* c1 = app.add_subcommand("classify", "eligibility report per vertex");
  c1->add_option("input", classify.input, "edge-list file")->required();
  auto* vopt = c1->add_option("--vertex", classify.vertex, "single vertex");
  c1->add_flag("--all", classify.all, "every vertex (default)")->excludes(vopt);
  c1->add_flag("--json", classify.as_json, "JSON output");

  detail::CloseArgs close;
  auto* c2 = app.add_subcommand("close", "compute the N2-closure");
  c2->add_option("input", close.input, "edge-list file")->required();
  c2->add_option("--strategy", close.strategy,
                 "min-id | max-class | n-first | random:<seed>");
  c2->add_flag("--baseline-n", close.baseline_n, "N-closure instead");
  c2->add_option("--trace", close.trace_path, "write JSON trace");
  c2->add_option("--dot", close.dot_path, "write DOT rendering");

  detail::PullbackArgs pull;
  auto* c3 = app.add_subcommand("pullback", "pull a cycle of G_x back into G");
  c3->add_option("input", pull.input, "edge-list file")->required();
  c3->add_option("--vertex", pull.vertex, "completed vertex x")->required();
  c3->add_option("--cycle", pull.cycle, "comma-separated labels")->required();
  c3->add_flag("--trace", pull.trace, "JSON-lines iteration log");

  detail::VerifyArgs verify;
  auto* c4 = app.add_subcommand("verify", "randomised preservation checks");
  c4->add_option("--samples", verify.samples, "number of random graphs");
  c4->add_option("--max-n", verify.max_n, "largest vertex count");
  c4->add_option("--seed", verify.seed, "random seed")->required();

  detail::SearchArgs search;
  auto* c5 = app.add_subcommand("search", "witness searches");
  auto* nk = c5->add_option("--nk", search.nk, "Nk counterexample, k >= 3");
  c5->add_flag("--divergent", search.divergent, "strategy-dependent closures")
      ->excludes(nk);
  c5->add_option("--max-n", search.max_n, "largest vertex count (<= 9)");
  c5->add_option("--budget", search.budget, "samples per n above 7");
  c5->add_option("--seed", search.seed, "random seed")->required();

  detail::ClassifyPathArgs cpath;
  auto* c6 = app.add_subcommand("classify-path",
                                "place (P, X, Y) on the alternating ladder");
  c6->add_option("input", cpath.input, "edge-list file")->required();
  c6->add_option("--path", cpath.path, "comma-separated labels")->required();
  c6->add_option("--x", cpath.xs, "comma-separated labels of X");
  c6->add_option("--y", cpath.ys, "comma-separated labels of Y")->required();

  std::vector<const char*> argv;
  argv.push_back("n2closure");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*c1) return detail::cmd_classify(classify, out);
    if (*c2) return detail::cmd_close(close, out);
    if (*c3) return detail::cmd_pullback(pull, out);
    if (*c4) return detail::cmd_verify(verify, out);
    if (*c5) return detail::cmd_search(search, out);
    if (*c6) return detail::cmd_classify_path(cpath, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource guard: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace n2c::cli
