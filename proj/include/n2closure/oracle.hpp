#pragma once

// Exact ground truth for small graphs: longest cycle, Hamiltonian cycle,
// seeded random graphs and exhaustive witness searches.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "n2closure/closure.hpp"
#include "n2closure/eligibility.hpp"
#include "n2closure/error.hpp"
#include "n2closure/graph.hpp"

namespace n2c {

struct OracleResult {
  std::size_t circumference = 0;  // 0 when the graph is acyclic
  std::optional<Cycle> witness;
  bool hamiltonian = false;
};

struct OracleLimits {
  std::size_t max_vertices = 16;
  std::uint64_t node_limit = 200'000'000;
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(VertexId v) { return Mask{1} << v; }

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (VertexId w : g.neighbors(v)) adj[v] |= bit(w);
  }
  return adj;
}

// Longest-cycle DFS. Every cycle is found from its smallest vertex s, over
// simple paths inside {v > s}; a branch is cut when the vertices still
// reachable from its tip cannot beat the best cycle found so far.
class LongestCycleSearch {
 public:
  LongestCycleSearch(const Graph& g, std::uint64_t node_limit)
      : n_(g.vertex_count()), adj_(adjacency_masks(g)), limit_(node_limit) {
    order_.resize(n_);
    for (VertexId v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
      return std::popcount(adj_[a]) < std::popcount(adj_[b]);
    });
  }

  OracleResult run() {
    for (VertexId s = 0; s < n_; ++s) {
      if (n_ - s <= best_.size()) break;
      start_ = s;
      allowed_ = 0;
      for (VertexId v = s + 1; v < n_; ++v) allowed_ |= bit(v);
      path_.assign(1, s);
      extend(s, bit(s));
      if (best_.size() == n_) break;
    }
    OracleResult r;
    r.circumference = best_.size();
    if (!best_.empty()) r.witness = Cycle{best_};
    r.hamiltonian = n_ >= 3 && best_.size() == n_;
    return r;
  }

 private:
  Mask reachable(VertexId from, Mask free) const {
    Mask seen = 0;
    Mask frontier = adj_[from] & free;
    while (frontier) {
      seen |= frontier;
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) {
        next |= adj_[std::countr_zero(f)];
      }
      frontier = next & free & ~seen;
    }
    return seen;
  }

  void extend(VertexId tip, Mask visited) {
    if (++nodes_ > limit_) {
      throw ResourceError("longest-cycle search exceeded node budget");
    }
    if (path_.size() >= 3 && (adj_[tip] & bit(start_)) &&
        path_.size() > best_.size()) {
      best_ = path_;
    }
    const Mask free = allowed_ & ~visited;
    const Mask reach = reachable(tip, free);
    if (!(reach & adj_[start_])) return;
    if (path_.size() + static_cast<std::size_t>(std::popcount(reach)) <=
        best_.size()) {
      return;
    }
    const Mask next = adj_[tip] & free;
    for (VertexId v : order_) {
      if (!(next & bit(v))) continue;
      path_.push_back(v);
      extend(v, visited | bit(v));
      path_.pop_back();
      if (best_.size() == n_ - start_) return;
    }
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::vector<VertexId> order_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  VertexId start_ = 0;
  Mask allowed_ = 0;
  std::vector<VertexId> path_;
  std::vector<VertexId> best_;
};

}  // namespace detail

inline OracleResult circumference(const Graph& g, OracleLimits limits = {}) {
  if (g.vertex_count() > limits.max_vertices || g.vertex_count() > 64) {
    throw ResourceError("circumference oracle limited to " +
                        std::to_string(std::min<std::size_t>(
                            limits.max_vertices, 64)) +
                        " vertices, graph has " +
                        std::to_string(g.vertex_count()));
  }
  OracleResult r = detail::LongestCycleSearch(g, limits.node_limit).run();
  if (r.witness) validate(g, *r.witness);
  return r;
}

inline constexpr std::size_t kHamiltonianMaxVertices = 20;

// Held-Karp style reachability over (visited set, endpoint), anchored at 0.
inline std::optional<Cycle> hamiltonian_cycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kHamiltonianMaxVertices) {
    throw ResourceError("Hamiltonian DP limited to " +
                        std::to_string(kHamiltonianMaxVertices) + " vertices");
  }
  if (n < 3) return std::nullopt;
  const auto adj = detail::adjacency_masks(g);
  using Mask = detail::Mask;
  // dp[m] = endpoints v such that some path from 0 covers exactly
  // {0} u (m << 1) and ends at v. Index m drops vertex 0's bit.
  const std::size_t states = std::size_t{1} << (n - 1);
  std::vector<std::uint32_t> dp(states, 0);
  dp[0] = 1u;  // the trivial path "0"
  for (std::size_t m = 0; m < states; ++m) {
    const std::uint32_t ends = dp[m];
    if (!ends) continue;
    const Mask full = (Mask{m} << 1) | 1u;
    for (std::uint32_t e = ends; e; e &= e - 1) {
      const auto v = static_cast<VertexId>(std::countr_zero(e));
      for (Mask nb = adj[v] & ~full; nb; nb &= nb - 1) {
        const auto w = static_cast<VertexId>(std::countr_zero(nb));
        dp[m | (std::size_t{1} << (w - 1))] |= 1u << w;
      }
    }
  }
  const std::size_t all = states - 1;
  std::uint32_t closing = dp[all] & static_cast<std::uint32_t>(adj[0]);
  if (!closing) return std::nullopt;

  std::vector<VertexId> rev;
  auto cur = static_cast<VertexId>(std::countr_zero(closing));
  std::size_t m = all;
  while (cur != 0) {
    rev.push_back(cur);
    const std::size_t prev_m = m & ~(std::size_t{1} << (cur - 1));
    const std::uint32_t cand =
        dp[prev_m] & static_cast<std::uint32_t>(adj[cur]);
    cur = static_cast<VertexId>(std::countr_zero(cand));
    m = prev_m;
  }
  Cycle c;
  c.vertices.push_back(0);
  c.vertices.insert(c.vertices.end(), rev.rbegin(), rev.rend());
  validate(g, c);
  return c;
}

// G(n, p): pairs (i, j), i < j, in lexicographic order; pair is an edge iff
// the next mt19937_64 output, read as a 53-bit fraction, is below p.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 gen(seed);
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      if (u < p) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

// First connected G(n, p) sample among seeds derived from `seed`.
inline Graph random_connected_graph(std::size_t n, double p,
                                    std::uint64_t seed,
                                    std::size_t max_attempts = 10'000) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g = random_graph(n, p, mix64(seed + attempt));
    if (is_connected(g)) return g;
  }
  throw ResourceError("no connected sample within attempt budget");
}

// Graph on n vertices whose edge set is the bitmask over pairs (i, j),
// i < j, in lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j, ++k) {
      if ((mask >> k) & 1u) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

struct SearchOptions {
  std::size_t exhaustive_max_n = 7;    // enumerate every labelled graph
  std::size_t sample_budget = 100'000; // random graphs per larger n
  std::uint64_t seed = 0;
};

struct SearchStats {
  std::uint64_t graphs_examined = 0;
  std::size_t exhaustive_up_to = 0;
  std::size_t sampled_up_to = 0;
};

struct NkWitness {
  Graph graph;
  VertexId vertex = 0;
  std::size_t circumference_before = 0;
  std::size_t circumference_after = 0;
};

struct DivergenceWitness {
  Graph graph;
  ChoiceStrategy first;
  ChoiceStrategy second;
  ClosureComparison diff;
};

namespace detail {

// Bitmask view of a small graph for fast filtering.
struct SmallGraph {
  std::size_t n = 0;
  std::vector<Mask> closed;  // N[v]

  static SmallGraph from_mask(std::size_t n, std::uint64_t mask) {
    SmallGraph s;
    s.n = n;
    s.closed.assign(n, 0);
    for (VertexId v = 0; v < n; ++v) s.closed[v] = bit(v);
    std::size_t k = 0;
    for (VertexId i = 0; i < n; ++i) {
      for (VertexId j = i + 1; j < n; ++j, ++k) {
        if ((mask >> k) & 1u) {
          s.closed[i] |= bit(j);
          s.closed[j] |= bit(i);
        }
      }
    }
    return s;
  }

  bool connected() const {
    Mask seen = 1;
    Mask frontier = 1;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= closed[std::countr_zero(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    return std::popcount(seen) == static_cast<int>(n);
  }

  bool clique(Mask m) const {
    for (Mask f = m; f; f &= f - 1) {
      if ((closed[std::countr_zero(f)] & m) != m) return false;
    }
    return true;
  }

  Mask cls(VertexId v) const {
    Mask out = 0;
    for (Mask f = closed[v]; f; f &= f - 1) {
      const auto w = std::countr_zero(f);
      if (closed[w] == closed[v]) out |= bit(static_cast<VertexId>(w));
    }
    return out;
  }

  std::size_t sigma(Mask m) const {
    std::size_t twice = 0;
    for (Mask f = m; f; f &= f - 1) {
      twice += static_cast<std::size_t>(
          std::popcount(closed[std::countr_zero(f)] & m) - 1);
    }
    return twice / 2;
  }

  // (n2_eligible, nk_eligible) for vertex v.
  std::pair<bool, bool> eligibility(VertexId v, std::size_t k) const {
    if (clique(closed[v])) return {false, false};
    const Mask c = cls(v);
    const Mask nb = closed[v] & ~c;
    const std::size_t s = sigma(nb);
    const auto csize = static_cast<std::size_t>(std::popcount(c));
    const auto nsize = static_cast<std::size_t>(std::popcount(nb));
    return {csize + std::min<std::size_t>(s, 2) >= nsize,
            csize + std::min(s, k) >= nsize};
  }
};

inline std::uint64_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Calls visit(n, mask) over every labelled graph for n <= exhaustive_max_n
// (ascending mask), then over `sample_budget` random masks per larger n.
// Stops as soon as visit returns true.
template <typename Visit>
bool enumerate_graphs(std::size_t n_max, const SearchOptions& opt,
                      SearchStats& stats, Visit&& visit) {
  for (std::size_t n = 3; n <= n_max; ++n) {
    const std::uint64_t pairs = pair_count(n);
    if (n <= opt.exhaustive_max_n) {
      const std::uint64_t total = std::uint64_t{1} << pairs;
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        ++stats.graphs_examined;
        if (visit(n, mask)) return true;
      }
      stats.exhaustive_up_to = n;
    } else {
      std::mt19937_64 gen(mix64(opt.seed ^ (n * 0x100000001b3ULL)));
      const double densities[] = {0.3, 0.4, 0.5, 0.6, 0.7};
      for (std::size_t s = 0; s < opt.sample_budget; ++s) {
        const double p = densities[s % 5];
        std::uint64_t mask = 0;
        for (std::uint64_t k = 0; k < pairs; ++k) {
          const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
          if (u < p) mask |= std::uint64_t{1} << k;
        }
        ++stats.graphs_examined;
        if (visit(n, mask)) return true;
      }
      stats.sampled_up_to = n;
    }
  }
  return false;
}

}  // namespace detail

inline constexpr std::size_t kSearchMaxVertices = 9;

// Looks for a connected graph with a vertex x that is Nk- but not
// N2-eligible and whose local completion raises the circumference.
inline std::optional<NkWitness> find_nk_counterexample(
    std::size_t k, std::size_t n_max, SearchOptions opt = {},
    SearchStats* stats_out = nullptr) {
  if (k < 3) {
    throw PreconditionError(
        "Nk counterexample search needs k >= 3; N2 completions preserve "
        "circumference");
  }
  if (n_max > kSearchMaxVertices) {
    throw ResourceError("witness search limited to n <= " +
                        std::to_string(kSearchMaxVertices));
  }
  SearchStats stats;
  std::optional<NkWitness> found;
  detail::enumerate_graphs(n_max, opt, stats, [&](std::size_t n,
                                                  std::uint64_t mask) {
    const auto sg = detail::SmallGraph::from_mask(n, mask);
    if (!sg.connected()) return false;
    std::optional<Graph> g;
    std::size_t before = 0;
    for (VertexId v = 0; v < n; ++v) {
      const auto [n2, nk] = sg.eligibility(v, k);
      if (!nk || n2) continue;
      if (!g) {
        g = graph_from_mask(n, mask);
        before = circumference(*g).circumference;
        if (before == n) return false;  // already Hamiltonian
      }
      const auto report = classify_vertex(*g, v);
      if (!report.nk_eligible(k) || report.n2_eligible) {
        throw Error("eligibility filter disagrees with classify_vertex");
      }
      const std::size_t after =
          circumference(local_completion(*g, v).graph_x).circumference;
      if (after > before) {
        found = NkWitness{*g, v, before, after};
        return true;
      }
    }
    return false;
  });
  if (stats_out) *stats_out = stats;
  return found;
}

// Strategies compared against MIN_ID when hunting for divergent closures.
inline std::vector<ChoiceStrategy> divergence_strategies() {
  return {ChoiceStrategy::max_class(), ChoiceStrategy::n_first(),
          ChoiceStrategy::seeded_random(1), ChoiceStrategy::seeded_random(2),
          ChoiceStrategy::seeded_random(3)};
}

// Looks for a connected graph whose N2-closure depends on the strategy.
inline std::optional<DivergenceWitness> find_divergent_closures(
    std::size_t n_max, SearchOptions opt = {},
    SearchStats* stats_out = nullptr) {
  if (n_max > kSearchMaxVertices) {
    throw ResourceError("witness search limited to n <= " +
                        std::to_string(kSearchMaxVertices));
  }
  SearchStats stats;
  std::optional<DivergenceWitness> found;
  const auto others = divergence_strategies();
  detail::enumerate_graphs(n_max, opt, stats, [&](std::size_t n,
                                                  std::uint64_t mask) {
    const auto sg = detail::SmallGraph::from_mask(n, mask);
    if (!sg.connected()) return false;
    // A choice only matters with two eligible, non-equivalent vertices.
    detail::Mask classes_seen = 0;
    int distinct = 0;
    for (VertexId v = 0; v < n && distinct < 2; ++v) {
      if (classes_seen & detail::bit(v)) continue;
      if (sg.eligibility(v, 2).first) {
        classes_seen |= sg.cls(v);
        ++distinct;
      }
    }
    if (distinct < 2) return false;
    const Graph g = graph_from_mask(n, mask);
    const auto base = ChoiceStrategy::min_id();
    for (const auto& other : others) {
      auto diff = compare_closures(g, base, other);
      if (!diff.equal) {
        found = DivergenceWitness{g, base, other, std::move(diff)};
        return true;
      }
    }
    return false;
  });
  if (stats_out) *stats_out = stats;
  return found;
}

}  // namespace n2c
