#pragma once

// Classification of (P, X, Y) triples on the pseudo / semi / alternating
// ladder, with the counting bounds that hold for semi-alternating paths.
//
// For a path P with both endpoints in Y and disjoint X, Y inside V(P):
//   pseudo-alternating   P(X) within X u Y
//   semi-alternating     P(X) within Y
//   alternating          P(X) within Y and P(Y) within X
// where P(v) is the set of path-neighbours (predecessor/successor) of v.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "n2closure/error.hpp"
#include "n2closure/graph.hpp"

namespace n2c {

enum class Rung { NotPseudo, ProperPseudo, ProperSemi, Alternating };

constexpr std::string_view to_string(Rung r) {
  switch (r) {
    case Rung::NotPseudo: return "NOT_PSEUDO";
    case Rung::ProperPseudo: return "PROPER_PSEUDO";
    case Rung::ProperSemi: return "PROPER_SEMI";
    case Rung::Alternating: return "ALTERNATING";
  }
  return "?";
}

struct PathClassification {
  Rung rung = Rung::NotPseudo;
  // NotPseudo: (offending vertex, its bad path-neighbour), or (endpoint,
  //   endpoint) when an endpoint is outside Y.
  // ProperPseudo: a consecutive X pair.
  // ProperSemi: (y, path-neighbour of y outside X).
  std::optional<std::pair<VertexId, VertexId>> witness;

  bool pseudo() const { return rung != Rung::NotPseudo; }
  bool semi() const {
    return rung == Rung::ProperSemi || rung == Rung::Alternating;
  }
  bool alternating() const { return rung == Rung::Alternating; }
};

struct AlternatingDecomposition {
  std::vector<VertexId> y_order;
  std::vector<VertexId> x_order;

  Path interleave() const {
    Path p;
    for (std::size_t i = 0; i < y_order.size(); ++i) {
      p.vertices.push_back(y_order[i]);
      if (i < x_order.size()) p.vertices.push_back(x_order[i]);
    }
    return p;
  }
};

struct CountingBounds {
  bool semi = false;
  bool bound1_holds = false;       // |X| < |Y| - sigma_P(Y)
  bool bound2_applicable = false;  // semi and V(P) \ (X u Y) non-empty
  bool bound2_holds = false;       // |X| < |Y| - 1
};

namespace detail {

// Ladder position from the vertex sequence alone; no adjacency checks.
// Assumes xs and ys are disjoint.
inline PathClassification classify_sequence(const Path& p, const VertexSet& xs,
                                            const VertexSet& ys) {
  PathClassification out;
  const auto& seq = p.vertices;
  if (seq.empty()) return out;
  for (VertexId end : {p.front(), p.back()}) {
    if (!ys.contains(end)) {
      out.witness = std::make_pair(end, end);
      return out;
    }
  }
  const VertexSet vp = p.vertex_set();
  if (!xs.is_subset_of(vp) || !ys.is_subset_of(vp)) {
    out.witness = std::make_pair(p.front(), p.back());
    return out;
  }

  std::optional<std::pair<VertexId, VertexId>> xx;  // consecutive X pair
  std::optional<std::pair<VertexId, VertexId>> ynx; // y next to non-X
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const VertexId a = seq[i];
    const VertexId b = seq[i + 1];
    const bool ax = xs.contains(a);
    const bool bx = xs.contains(b);
    const bool ay = ys.contains(a);
    const bool by = ys.contains(b);
    if (ax && !bx && !by) {
      out.witness = std::make_pair(a, b);
      return out;
    }
    if (bx && !ax && !ay) {
      out.witness = std::make_pair(b, a);
      return out;
    }
    if (ax && bx && !xx) xx = std::make_pair(a, b);
    if (!ynx) {
      if (ay && !bx) {
        ynx = std::make_pair(a, b);
      } else if (by && !ax) {
        ynx = std::make_pair(b, a);
      }
    }
  }
  if (xx) {
    out.rung = Rung::ProperPseudo;
    out.witness = xx;
  } else if (ynx) {
    out.rung = Rung::ProperSemi;
    out.witness = ynx;
  } else {
    out.rung = Rung::Alternating;
  }
  return out;
}

}  // namespace detail

// Throws DomainError if xs and ys intersect, if either leaves V(p), or if p
// is not a path of g. Endpoint violations are reported as NotPseudo.
inline PathClassification classify_path(const Graph& g, const Path& p,
                                        const VertexSet& xs,
                                        const VertexSet& ys) {
  validate(g, p);
  if (xs.intersects(ys)) throw DomainError("X and Y are not disjoint");
  const VertexSet vp = p.vertex_set();
  if (!xs.is_subset_of(vp)) throw DomainError("X is not contained in V(P)");
  if (!ys.is_subset_of(vp)) throw DomainError("Y is not contained in V(P)");
  return detail::classify_sequence(p, xs, ys);
}

inline AlternatingDecomposition alternating_decomposition(const Path& p,
                                                          const VertexSet& xs,
                                                          const VertexSet& ys) {
  if (xs.intersects(ys) ||
      !detail::classify_sequence(p, xs, ys).alternating()) {
    throw PreconditionError("path is not YX-alternating");
  }
  AlternatingDecomposition d;
  for (std::size_t i = 0; i < p.size(); ++i) {
    (i % 2 == 0 ? d.y_order : d.x_order).push_back(p.vertices[i]);
  }
  if (d.y_order.size() != ys.size() || d.x_order.size() != xs.size()) {
    throw PreconditionError("alternating path does not cover X u Y");
  }
  return d;
}

inline CountingBounds check_counting_bounds(const Path& p, const VertexSet& xs,
                                            const VertexSet& ys) {
  CountingBounds r;
  r.semi = !xs.intersects(ys) && detail::classify_sequence(p, xs, ys).semi();
  const auto nx = static_cast<long long>(xs.size());
  const auto ny = static_cast<long long>(ys.size());
  const auto sp = static_cast<long long>(path_sigma(p, ys));
  r.bound1_holds = nx < ny - sp;
  const VertexSet vp = p.vertex_set();
  r.bound2_applicable =
      r.semi && vp.size() > set_union(xs, ys).size();
  r.bound2_holds = nx < ny - 1;
  return r;
}

}  // namespace n2c
