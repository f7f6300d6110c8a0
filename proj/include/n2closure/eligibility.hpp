#pragma once

#include <cassert>
#include <map>
#include <vector>

#include "n2closure/error.hpp"
#include "n2closure/graph.hpp"

namespace n2c {

struct EligibilityReport {
  VertexId vertex = 0;
  bool simplicial = false;
  VertexSet class_bar_x;           // neighbourhood-equivalence class of x
  VertexSet neighborhood_of_class; // N(class)
  std::size_t sigma_of_neighborhood = 0;
  int chi2 = 0;
  bool n_eligible = false;
  bool n2_eligible = false;

  // Nk-eligibility for an arbitrary weight cap k >= 1.
  bool nk_eligible(std::size_t k) const {
    const std::size_t chi = std::min(sigma_of_neighborhood, k);
    return !simplicial &&
           class_bar_x.size() + chi >= neighborhood_of_class.size();
  }

  friend bool operator==(const EligibilityReport&,
                         const EligibilityReport&) = default;
};

struct CompletionResult {
  Graph graph_x;
  std::vector<Edge> added_edges;  // B_x, sorted
};

namespace detail {

inline EligibilityReport make_report(const Graph& g, VertexId x,
                                     VertexSet cls, VertexSet nbrs) {
  EligibilityReport r;
  r.vertex = x;
  r.simplicial = is_simplicial(g, x);
  r.class_bar_x = std::move(cls);
  r.neighborhood_of_class = std::move(nbrs);
  r.sigma_of_neighborhood = sigma(g, r.neighborhood_of_class);
  r.chi2 = static_cast<int>(std::min<std::size_t>(r.sigma_of_neighborhood, 2));
  const std::size_t cls_size = r.class_bar_x.size();
  const std::size_t nb_size = r.neighborhood_of_class.size();
  r.n_eligible = !r.simplicial && cls_size >= nb_size;
  r.n2_eligible =
      !r.simplicial && cls_size + static_cast<std::size_t>(r.chi2) >= nb_size;
  return r;
}

}  // namespace detail

inline EligibilityReport classify_vertex(const Graph& g, VertexId x) {
  VertexSet cls = equivalence_class(g, x);
  VertexSet nbrs = open_neighborhood_of_set(g, cls);
  return detail::make_report(g, x, std::move(cls), std::move(nbrs));
}

// chi_k(x) = min(sigma(N(class of x)), k)
inline std::size_t chi_k(const Graph& g, VertexId x, std::size_t k) {
  if (k == 0) throw DomainError("chi_k requires k >= 1");
  const VertexSet cls = equivalence_class(g, x);
  return std::min(sigma(g, open_neighborhood_of_set(g, cls)), k);
}

inline bool nk_eligible(const Graph& g, VertexId x, std::size_t k) {
  if (k == 0) throw DomainError("Nk-eligibility requires k >= 1");
  return classify_vertex(g, x).nk_eligible(k);
}

// Reports for every vertex. Classes are computed once per distinct N[.].
inline std::vector<EligibilityReport> classify_all(const Graph& g) {
  std::vector<VertexSet> closed;
  closed.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    closed.push_back(closed_neighborhood(g, v));
  }
  std::map<VertexSet, std::vector<VertexId>> members;
  for (VertexId v = 0; v < g.vertex_count(); ++v) members[closed[v]].push_back(v);

  std::vector<EligibilityReport> out;
  out.reserve(g.vertex_count());
  std::map<VertexSet, std::pair<VertexSet, VertexSet>> cache;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto it = cache.find(closed[v]);
    if (it == cache.end()) {
      VertexSet cls = VertexSet::from_sorted(members[closed[v]]);
      VertexSet nbrs = set_difference(closed[v], cls);
      it = cache.emplace(closed[v], std::make_pair(cls, nbrs)).first;
    }
    out.push_back(detail::make_report(g, v, it->second.first, it->second.second));
  }
  return out;
}

// B_x: non-adjacent pairs inside N[x].
inline std::vector<Edge> completion_edges(const Graph& g, VertexId x) {
  const VertexSet closed = closed_neighborhood(g, x);
  std::vector<Edge> out;
  auto ids = closed.ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!g.adjacent(ids[i], ids[j])) out.push_back({ids[i], ids[j]});
    }
  }
#ifndef NDEBUG
  // Same set from the N(class) characterisation.
  const VertexSet nbrs = open_neighborhood_of_set(g, equivalence_class(g, x));
  std::vector<Edge> alt;
  auto nids = nbrs.ids();
  for (std::size_t i = 0; i < nids.size(); ++i) {
    for (std::size_t j = i + 1; j < nids.size(); ++j) {
      if (!g.adjacent(nids[i], nids[j])) alt.push_back({nids[i], nids[j]});
    }
  }
  assert(alt == out);
#endif
  return out;
}

inline CompletionResult local_completion(const Graph& g, VertexId x) {
  g.check_vertex(x);
  CompletionResult r;
  r.added_edges = completion_edges(g, x);
  r.graph_x = g.with_edges(r.added_edges);
  return r;
}

}  // namespace n2c
