#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "n2closure/eligibility.hpp"
#include "n2closure/error.hpp"
#include "n2closure/graph.hpp"

namespace n2c {

// Choice function used to pick the next vertex to complete.
struct ChoiceStrategy {
  enum class Kind { MinId, MaxClass, NFirst, SeededRandom };

  Kind kind = Kind::MinId;
  std::uint64_t seed = 0;

  static ChoiceStrategy min_id() { return {Kind::MinId, 0}; }
  static ChoiceStrategy max_class() { return {Kind::MaxClass, 0}; }
  static ChoiceStrategy n_first() { return {Kind::NFirst, 0}; }
  static ChoiceStrategy seeded_random(std::uint64_t s) {
    return {Kind::SeededRandom, s};
  }

  friend bool operator==(const ChoiceStrategy&, const ChoiceStrategy&) = default;
};

inline std::string to_string(const ChoiceStrategy& s) {
  switch (s.kind) {
    case ChoiceStrategy::Kind::MinId: return "min-id";
    case ChoiceStrategy::Kind::MaxClass: return "max-class";
    case ChoiceStrategy::Kind::NFirst: return "n-first";
    case ChoiceStrategy::Kind::SeededRandom:
      return "random:" + std::to_string(s.seed);
  }
  return "?";
}

// Accepts the CLI spellings: min-id, max-class, n-first, random:<seed>.
inline ChoiceStrategy parse_strategy(const std::string& text) {
  if (text == "min-id") return ChoiceStrategy::min_id();
  if (text == "max-class") return ChoiceStrategy::max_class();
  if (text == "n-first") return ChoiceStrategy::n_first();
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    const std::string digits = text.substr(prefix.size());
    if (std::all_of(digits.begin(), digits.end(),
                    [](char ch) { return ch >= '0' && ch <= '9'; })) {
      return ChoiceStrategy::seeded_random(std::stoull(digits));
    }
  }
  throw DomainError("unknown strategy '" + text + "'");
}

struct CompletionStep {
  VertexId chosen = 0;
  VertexSet eligible_set_before;
  std::vector<Edge> added;
  bool n_eligible_flag = false;
};

struct ClosureTrace {
  Graph initial;
  std::vector<CompletionStep> steps;
  Graph final_graph;
};

struct ClosureComparison {
  bool equal = true;
  std::vector<Edge> only_in_first;
  std::vector<Edge> only_in_second;
};

// splitmix64 finaliser.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace detail {

// Picks from `candidates` (all eligible, ascending ids).
inline VertexId choose(const ChoiceStrategy& s,
                       const std::vector<EligibilityReport>& reports,
                       const std::vector<VertexId>& candidates,
                       std::size_t step_index) {
  assert(!candidates.empty());
  switch (s.kind) {
    case ChoiceStrategy::Kind::MinId:
      return candidates.front();
    case ChoiceStrategy::Kind::MaxClass: {
      VertexId best = candidates.front();
      for (VertexId v : candidates) {
        if (reports[v].class_bar_x.size() > reports[best].class_bar_x.size()) {
          best = v;
        }
      }
      return best;
    }
    case ChoiceStrategy::Kind::NFirst: {
      for (VertexId v : candidates) {
        if (reports[v].n_eligible) return v;
      }
      return candidates.front();
    }
    case ChoiceStrategy::Kind::SeededRandom: {
      // Pure function of (seed, step index, eligible set).
      std::uint64_t h = mix64(s.seed ^ mix64(step_index));
      for (VertexId v : candidates) h = mix64(h ^ v);
      return candidates[h % candidates.size()];
    }
  }
  return candidates.front();
}

template <typename Eligible>
ClosureTrace run_closure(const Graph& g, const ChoiceStrategy& strategy,
                         Eligible&& eligible) {
  require_connected(g);
  ClosureTrace trace;
  trace.initial = g;
  Graph cur = g;
  for (std::size_t step = 0;; ++step) {
    const auto reports = classify_all(cur);
    std::vector<VertexId> candidates;
    for (const auto& r : reports) {
      if (eligible(r)) candidates.push_back(r.vertex);
    }
    if (candidates.empty()) break;
    const VertexId x = choose(strategy, reports, candidates, step);
    CompletionResult done = local_completion(cur, x);
    if (done.added_edges.empty()) {
      throw Error("eligible vertex with empty completion set");
    }
    CompletionStep rec;
    rec.chosen = x;
    rec.eligible_set_before = VertexSet::from_sorted(std::move(candidates));
    rec.added = std::move(done.added_edges);
    rec.n_eligible_flag = reports[x].n_eligible;
    trace.steps.push_back(std::move(rec));
    cur = std::move(done.graph_x);
  }
  trace.final_graph = std::move(cur);
  return trace;
}

}  // namespace detail

inline VertexSet n2_eligible_set(const Graph& g) {
  std::vector<VertexId> out;
  for (const auto& r : classify_all(g)) {
    if (r.n2_eligible) out.push_back(r.vertex);
  }
  return VertexSet::from_sorted(std::move(out));
}

inline VertexSet n_eligible_set(const Graph& g) {
  std::vector<VertexId> out;
  for (const auto& r : classify_all(g)) {
    if (r.n_eligible) out.push_back(r.vertex);
  }
  return VertexSet::from_sorted(std::move(out));
}

// Repeated local completion at strategy-chosen N2-eligible vertices until
// none is left. Eligibility is recomputed from scratch after every step.
inline ClosureTrace n2_closure(const Graph& g, const ChoiceStrategy& strategy) {
  return detail::run_closure(
      g, strategy, [](const EligibilityReport& r) { return r.n2_eligible; });
}

// Baseline: local completion at N-eligible vertices (smallest id first)
// until none is left.
inline ClosureTrace n_closure(const Graph& g) {
  return detail::run_closure(
      g, ChoiceStrategy::min_id(),
      [](const EligibilityReport& r) { return r.n_eligible; });
}

inline ClosureComparison compare_closures(const Graph& g,
                                          const ChoiceStrategy& s1,
                                          const ChoiceStrategy& s2) {
  const auto a = n2_closure(g, s1).final_graph.edges();
  const auto b = n2_closure(g, s2).final_graph.edges();
  ClosureComparison r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(r.only_in_first));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                      std::back_inserter(r.only_in_second));
  r.equal = r.only_in_first.empty() && r.only_in_second.empty();
  return r;
}

}  // namespace n2c
