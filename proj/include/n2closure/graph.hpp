#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "n2closure/error.hpp"

namespace n2c {

using VertexId = std::uint32_t;

// Undirected edge, always stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  using const_iterator = std::vector<VertexId>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids) : ids_(ids) { normalize(); }
  explicit VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    normalize();
  }

  // Caller guarantees `ids` is already sorted and unique.
  static VertexSet from_sorted(std::vector<VertexId> ids) {
    VertexSet s;
    s.ids_ = std::move(ids);
    return s;
  }

  bool contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  const_iterator begin() const noexcept { return ids_.begin(); }
  const_iterator end() const noexcept { return ids_.end(); }
  VertexId front() const { return ids_.front(); }
  VertexId back() const { return ids_.back(); }
  std::span<const VertexId> ids() const noexcept { return ids_; }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
  }
  bool intersects(const VertexSet& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
      if (*a == *b) return true;
      if (*a < *b) {
        ++a;
      } else {
        ++b;
      }
    }
    return false;
  }

  friend VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<VertexId> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    return from_sorted(std::move(out));
  }
  friend VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<VertexId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return from_sorted(std::move(out));
  }
  friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<VertexId> ids_;
};

// Simple undirected graph over dense ids 0..n-1. Immutable once built.
//
// Adjacency is held twice: sorted neighbour lists for iteration and a
// packed bit matrix for O(1) adjacency tests.
class Graph {
 public:
  Graph() = default;

  // Throws DomainError on self-loops, duplicate edges or ids >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {}) {
    Graph g;
    g.init(n, std::move(labels));
    for (const Edge& raw : edges) {
      if (raw.u == raw.v) {
        throw DomainError("self-loop at vertex " + std::to_string(raw.u));
      }
      const Edge e = make_edge(raw.u, raw.v);
      if (e.v >= n) {
        throw DomainError("edge endpoint " + std::to_string(e.v) +
                          " out of range");
      }
      if (g.adjacent(e.u, e.v)) {
        throw DomainError("duplicate edge " + std::to_string(e.u) + "-" +
                          std::to_string(e.v));
      }
      g.set_bit(e.u, e.v);
      g.set_bit(e.v, e.u);
      g.adj_[e.u].push_back(e.v);
      g.adj_[e.v].push_back(e.u);
      ++g.edge_count_;
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges,
                          std::vector<std::string> labels = {}) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()),
                      std::move(labels));
  }

  static Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return from_edges(n, edges);
  }

  // New graph with the same vertices and labels plus `extra` edges, which
  // must all be non-edges of this graph.
  Graph with_edges(std::span<const Edge> extra) const {
    std::vector<Edge> all = edges();
    all.insert(all.end(), extra.begin(), extra.end());
    return from_edges(vertex_count(), all, labels_);
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool contains(VertexId v) const noexcept { return v < adj_.size(); }

  void check_vertex(VertexId v) const {
    if (!contains(v)) {
      throw DomainError("vertex id " + std::to_string(v) +
                        " out of range (n = " +
                        std::to_string(vertex_count()) + ")");
    }
  }

  bool adjacent(VertexId a, VertexId b) const noexcept {
    if (!contains(a) || !contains(b)) return false;
    return (bits_[a * words_ + b / 64] >> (b % 64)) & 1u;
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
  }
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  const std::string& label(VertexId v) const {
    check_vertex(v);
    return labels_[v];
  }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<VertexId> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // All edges, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adj_.size(); ++u) {
      for (VertexId v : adj_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_ && a.labels_ == b.labels_;
  }

 private:
  void init(std::size_t n, std::vector<std::string> labels) {
    if (labels.empty()) {
      labels.reserve(n);
      for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != n) {
      throw DomainError("label table size does not match vertex count");
    }
    labels_ = std::move(labels);
    for (VertexId i = 0; i < n; ++i) {
      if (!index_.emplace(labels_[i], i).second) {
        throw DomainError("duplicate vertex label '" + labels_[i] + "'");
      }
    }
    adj_.assign(n, {});
    words_ = (n + 63) / 64;
    bits_.assign(n * words_, 0);
  }

  void set_bit(VertexId a, VertexId b) {
    bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  }

  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
};

// Vertex sequence with no repetition whose consecutive vertices are adjacent
// in the graph it was validated against.
struct Path {
  std::vector<VertexId> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  VertexSet vertex_set() const { return VertexSet(vertices); }
  Path reversed() const {
    return Path{{vertices.rbegin(), vertices.rend()}};
  }

  friend bool operator==(const Path&, const Path&) = default;
};

// Cycle x0 .. xk, stored without repeating x0; the closing edge xk x0 is
// implicit.
struct Cycle {
  std::vector<VertexId> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  VertexSet vertex_set() const { return VertexSet(vertices); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      out.push_back(
          make_edge(vertices[i], vertices[(i + 1) % vertices.size()]));
    }
    return out;
  }

  // Rotation starting at the smallest id, oriented towards the smaller of
  // its two cycle neighbours.
  Cycle canonical() const {
    if (vertices.empty()) return *this;
    const auto n = vertices.size();
    const auto start = static_cast<std::size_t>(
        std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
    const bool forward =
        vertices[(start + 1) % n] <= vertices[(start + n - 1) % n];
    Cycle out;
    out.vertices.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      out.vertices.push_back(
          forward ? vertices[(start + k) % n] : vertices[(start + n - k) % n]);
    }
    return out;
  }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline bool has_repeats(std::span<const VertexId> seq) {
  std::vector<VertexId> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

inline void validate(const Graph& g, const Path& p) {
  if (p.vertices.empty()) throw DomainError("path is empty");
  for (VertexId v : p.vertices) g.check_vertex(v);
  if (has_repeats(p.vertices)) throw DomainError("path repeats a vertex");
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.adjacent(p.vertices[i], p.vertices[i + 1])) {
      throw DomainError("path uses non-edge " + g.label(p.vertices[i]) + "-" +
                        g.label(p.vertices[i + 1]));
    }
  }
}

inline void validate(const Graph& g, const Cycle& c) {
  if (c.length() < 3) throw DomainError("cycle has fewer than 3 vertices");
  for (VertexId v : c.vertices) g.check_vertex(v);
  if (has_repeats(c.vertices)) throw DomainError("cycle repeats a vertex");
  for (const Edge& e : c.edges()) {
    if (!g.adjacent(e.u, e.v)) {
      throw DomainError("cycle uses non-edge " + g.label(e.u) + "-" +
                        g.label(e.v));
    }
  }
}

inline bool is_path_in(const Graph& g, const Path& p) {
  try {
    validate(g, p);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

inline bool is_cycle_in(const Graph& g, const Cycle& c) {
  try {
    validate(g, c);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

inline void check_vertices(const Graph& g, const VertexSet& xs) {
  if (!xs.empty()) g.check_vertex(xs.back());
}

// --- neighbourhood primitives ----------------------------------------------

inline VertexSet closed_neighborhood(const Graph& g, VertexId x) {
  auto nbrs = g.neighbors(x);
  std::vector<VertexId> out;
  out.reserve(nbrs.size() + 1);
  auto pos = std::lower_bound(nbrs.begin(), nbrs.end(), x);
  out.insert(out.end(), nbrs.begin(), pos);
  out.push_back(x);
  out.insert(out.end(), pos, nbrs.end());
  return VertexSet::from_sorted(std::move(out));
}

inline VertexSet open_neighborhood(const Graph& g, VertexId x) {
  auto nbrs = g.neighbors(x);
  return VertexSet::from_sorted({nbrs.begin(), nbrs.end()});
}

// N(X) = N[X] \ X
inline VertexSet open_neighborhood_of_set(const Graph& g, const VertexSet& xs) {
  check_vertices(g, xs);
  std::vector<VertexId> out;
  for (VertexId x : xs) {
    for (VertexId y : g.neighbors(x)) {
      if (!xs.contains(y)) out.push_back(y);
    }
  }
  return VertexSet(std::move(out));
}

inline bool same_closed_neighborhood(const Graph& g, VertexId a, VertexId b) {
  if (a == b) return true;
  if (!g.adjacent(a, b)) return false;
  auto na = g.neighbors(a);
  auto nb = g.neighbors(b);
  if (na.size() != nb.size()) return false;
  // N[a] = N[b] with a~b  <=>  N(a) \ {b} = N(b) \ {a}
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < na.size() || j < nb.size()) {
    if (i < na.size() && na[i] == b) {
      ++i;
      continue;
    }
    if (j < nb.size() && nb[j] == a) {
      ++j;
      continue;
    }
    if (i == na.size() || j == nb.size() || na[i] != nb[j]) return false;
    ++i;
    ++j;
  }
  return true;
}

// The neighbourhood-equivalence class of x: all y with N[y] = N[x].
inline VertexSet equivalence_class(const Graph& g, VertexId x) {
  g.check_vertex(x);
  std::vector<VertexId> out;
  if (g.degree(x) == 0) {
    // Isolated vertices share N[.] only with themselves.
    out.push_back(x);
    return VertexSet::from_sorted(std::move(out));
  }
  for (VertexId y : closed_neighborhood(g, x)) {
    if (same_closed_neighborhood(g, x, y)) out.push_back(y);
  }
  return VertexSet::from_sorted(std::move(out));
}

inline bool is_clique(const Graph& g, const VertexSet& xs) {
  check_vertices(g, xs);
  auto ids = xs.ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!g.adjacent(ids[i], ids[j])) return false;
    }
  }
  return true;
}

inline bool is_simplicial(const Graph& g, VertexId x) {
  return is_clique(g, closed_neighborhood(g, x));
}

// sigma(X) = |E(X)|
inline std::size_t sigma(const Graph& g, const VertexSet& xs) {
  check_vertices(g, xs);
  std::size_t count = 0;
  auto ids = xs.ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (g.adjacent(ids[i], ids[j])) ++count;
    }
  }
  return count;
}

// sigma_P(Y): consecutive pairs of p with both ends in ys.
inline std::size_t path_sigma(const Path& p, const VertexSet& ys) {
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (ys.contains(p.vertices[i]) && ys.contains(p.vertices[i + 1])) ++count;
  }
  return count;
}

inline VertexSet simplicial_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (is_simplicial(g, v)) out.push_back(v);
  }
  return VertexSet::from_sorted(std::move(out));
}

// --- connectivity -----------------------------------------------------------

// Component index per vertex, numbered in order of smallest member.
inline std::vector<std::size_t> component_ids(const Graph& g) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.vertex_count(), unset);
  std::size_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != unset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (comp[w] == unset) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline bool is_connected(const Graph& g) {
  auto comp = component_ids(g);
  return std::all_of(comp.begin(), comp.end(),
                     [](std::size_t c) { return c == 0; });
}

// Throws DisconnectedError naming one vertex from each of two components.
inline void require_connected(const Graph& g) {
  auto comp = component_ids(g);
  for (VertexId v = 0; v < comp.size(); ++v) {
    if (comp[v] != 0) {
      throw DisconnectedError("graph is disconnected: '" + g.label(0) +
                                  "' and '" + g.label(v) +
                                  "' lie in different components",
                              0, v);
    }
  }
}

}  // namespace n2c
