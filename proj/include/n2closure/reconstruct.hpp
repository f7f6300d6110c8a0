#pragma once

// Pulling cycles of a local completion G_x back into G.
//
// Every construction here takes a path P of G_x whose endpoints lie in
// Y = V(P) n N(class(x)) and rewires it into a cycle on V(P) (or, when no
// rewiring exists, a strictly longer cycle of G_x) using only edges of P,
// edges between Y and class(x), and at most two further edges of G inside
// N(class(x)). All outputs are re-validated against adjacency before being
// returned.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "n2closure/eligibility.hpp"
#include "n2closure/error.hpp"
#include "n2closure/graph.hpp"
#include "n2closure/paths.hpp"

namespace n2c {

enum class OutcomeKind { Reduced, Extended, Done };

constexpr std::string_view to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Reduced: return "REDUCED";
    case OutcomeKind::Extended: return "EXTENDED";
    case OutcomeKind::Done: return "DONE";
  }
  return "?";
}

struct PullBackOutcome {
  OutcomeKind kind = OutcomeKind::Done;
  Cycle cycle;
};

// One iteration of the pull-back loop.
struct PullBackStep {
  Edge chosen;                 // the B_x edge yz that was eliminated
  std::optional<Rung> rung;    // classification of P = y ... z, if built
  std::string resolver;
  OutcomeKind kind = OutcomeKind::Done;
  std::size_t cycle_length = 0;
  std::size_t completion_edges_left = 0;
};

// Everything derived from (G, x) that the constructions need.
class CompletionContext {
 public:
  CompletionContext(Graph g, VertexId x)
      : graph_(std::move(g)), x_(x), report_(classify_vertex(graph_, x)) {
    auto completion = local_completion(graph_, x);
    graph_x_ = std::move(completion.graph_x);
    added_ = std::move(completion.added_edges);
  }

  const Graph& graph() const noexcept { return graph_; }
  const Graph& graph_x() const noexcept { return graph_x_; }
  VertexId vertex() const noexcept { return x_; }
  const EligibilityReport& report() const noexcept { return report_; }
  const VertexSet& cls() const noexcept { return report_.class_bar_x; }
  const VertexSet& nbrs() const noexcept {
    return report_.neighborhood_of_class;
  }
  const std::vector<Edge>& added_edges() const noexcept { return added_; }

  bool is_added(Edge e) const {
    return std::binary_search(added_.begin(), added_.end(), e);
  }

  std::size_t added_on(const Cycle& c) const {
    auto es = c.edges();
    return static_cast<std::size_t>(std::count_if(
        es.begin(), es.end(), [&](const Edge& e) { return is_added(e); }));
  }

  VertexSet y_of(const Path& p) const {
    return set_intersection(p.vertex_set(), nbrs());
  }

  void require_n2_eligible() const {
    if (!report_.n2_eligible) {
      throw DomainError("vertex '" + graph_.label(x_) +
                        "' is not N2-eligible");
    }
  }

 private:
  Graph graph_;
  VertexId x_;
  EligibilityReport report_;
  Graph graph_x_;
  std::vector<Edge> added_;
};

namespace detail {

inline std::vector<Edge> path_edges(const Path& p) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    out.push_back(make_edge(p.vertices[i], p.vertices[i + 1]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool contains_edge(const std::vector<Edge>& sorted, Edge e) {
  return std::binary_search(sorted.begin(), sorted.end(), e);
}

// Appends p[from..to] in either direction, inclusive.
inline void append_range(std::vector<VertexId>& out, const Path& p,
                         std::size_t from, std::size_t to) {
  if (from <= to) {
    for (std::size_t i = from; i <= to; ++i) out.push_back(p.vertices[i]);
  } else {
    for (std::size_t i = from + 1; i-- > to;) out.push_back(p.vertices[i]);
  }
}

// Output must be a cycle of G_x on exactly V(p) whose edges are either
// edges of p or edges of G.
inline void check_rewiring(const CompletionContext& ctx, const Path& p,
                           const Cycle& c, std::string_view who) {
  if (!is_cycle_in(ctx.graph_x(), c)) {
    throw Error(std::string(who) + ": produced an invalid cycle");
  }
  if (c.vertex_set() != p.vertex_set()) {
    throw Error(std::string(who) + ": cycle does not cover V(P)");
  }
  const auto pe = path_edges(p);
  for (const Edge& e : c.edges()) {
    if (!contains_edge(pe, e) && !ctx.graph().adjacent(e.u, e.v)) {
      throw Error(std::string(who) + ": introduced a completion edge");
    }
  }
}

inline PathClassification classify_against_class(const CompletionContext& ctx,
                                                  const Path& p,
                                                  const VertexSet& ys) {
  if (!ctx.cls().is_subset_of(p.vertex_set())) {
    throw PreconditionError("path does not contain the whole class of x");
  }
  return classify_path(ctx.graph_x(), p, ctx.cls(), ys);
}

inline OutcomeKind settle(const CompletionContext& ctx, const Cycle& c) {
  return ctx.added_on(c) == 0 ? OutcomeKind::Done : OutcomeKind::Reduced;
}

}  // namespace detail

// Splices an alternating path p (Y = V(p) n N(class), X = class) with a path
// q joining two vertices of Y outside p into one cycle on V(p) u V(q).
inline Cycle splice_alternating(const CompletionContext& ctx, const Path& p,
                                const Path& q) {
  const Graph& gx = ctx.graph_x();
  validate(gx, p);
  validate(gx, q);
  const VertexSet ys = ctx.y_of(p);
  if (!detail::classify_against_class(ctx, p, ys).alternating()) {
    throw PreconditionError("splice: p is not Y-class alternating");
  }
  if (q.size() < 2 || q.front() == q.back()) {
    throw PreconditionError("splice: q needs two distinct endpoints");
  }
  if (!ys.contains(q.front()) || !ys.contains(q.back())) {
    throw PreconditionError("splice: an endpoint of q is not in Y");
  }
  for (std::size_t i = 1; i + 1 < q.size(); ++i) {
    if (ys.contains(q.vertices[i]) || p.vertex_set().contains(q.vertices[i])) {
      throw PreconditionError("splice: q meets p outside its endpoints");
    }
  }

  // p = y0 x0 y1 x1 ... y_n, so y_k sits at index 2k.
  auto index_of = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::find(p.vertices.begin(), p.vertices.end(), v) -
        p.vertices.begin());
  };
  Path qq = q;
  if (index_of(qq.front()) > index_of(qq.back())) qq = q.reversed();
  const std::size_t pi = index_of(qq.front());
  const std::size_t pj = index_of(qq.back());
  const std::size_t last = p.size() - 1;

  Cycle c;
  auto& out = c.vertices;
  detail::append_range(out, p, 0, pi);                        // y0 ->P y_i
  out.insert(out.end(), qq.vertices.begin() + 1, qq.vertices.end());  // ->Q y_j
  if (pj == last) {
    detail::append_range(out, p, last - 1, pi + 1);            // <-P x_i
  } else {
    detail::append_range(out, p, pj - 1, pi + 1);              // <-P x_i
    detail::append_range(out, p, last, pj + 1);                // y_n <-P x_j
  }

  validate(gx, c);
  if (c.vertex_set() != set_union(p.vertex_set(), q.vertex_set())) {
    throw Error("splice: cycle does not cover V(P) u V(Q)");
  }
  const auto pe = detail::path_edges(p);
  const auto qe = detail::path_edges(q);
  for (const Edge& e : c.edges()) {
    const bool y_to_class = (ys.contains(e.u) && ctx.cls().contains(e.v)) ||
                            (ys.contains(e.v) && ctx.cls().contains(e.u));
    if (!detail::contains_edge(pe, e) && !detail::contains_edge(qe, e) &&
        !y_to_class) {
      throw Error("splice: cycle uses an edge outside E(P) u [Y,X] u E(Q)");
    }
  }
  return c;
}

inline Cycle splice_alternating(const Graph& g, VertexId x, const Path& p,
                                const Path& q) {
  return splice_alternating(CompletionContext(g, x), p, q);
}

// p has a consecutive pair (u, v) inside the class; returns
// y ->P u z <-P v y, which lies on V(p).
inline Cycle resolve_proper_pseudo(const CompletionContext& ctx, const Path& p) {
  validate(ctx.graph_x(), p);
  const VertexSet ys = ctx.y_of(p);
  if (!ys.contains(p.front()) || !ys.contains(p.back())) {
    throw PreconditionError("proper pseudo: endpoints of p must lie in Y");
  }
  const auto cls = detail::classify_against_class(ctx, p, ys);
  if (cls.rung != Rung::ProperPseudo) {
    throw PreconditionError(
        "proper pseudo: no consecutive pair of class vertices on p (rung " +
        std::string(to_string(cls.rung)) + ")");
  }
  std::size_t ui = 0;
  while (!(ctx.cls().contains(p.vertices[ui]) &&
           ctx.cls().contains(p.vertices[ui + 1]))) {
    ++ui;
  }
  Cycle c;
  detail::append_range(c.vertices, p, 0, ui);
  detail::append_range(c.vertices, p, p.size() - 1, ui + 1);
  detail::check_rewiring(ctx, p, c, "proper pseudo");
  return c;
}

inline Cycle resolve_proper_pseudo(const Graph& g, VertexId x, const Path& p) {
  return resolve_proper_pseudo(CompletionContext(g, x), p);
}

// p is proper semi-alternating. N2-eligibility then forces |class| = |Y|-2,
// chi2 = 2 and Y = N(class); p splits as an alternating prefix ending at
// y_i, a stretch free of Y and class vertices, and an alternating suffix
// starting at y_{i+1}. One edge uv of G inside Y (uv not on p, uv not
// y_i y_{i+1}) is enough to close a cycle on V(p).
inline Cycle resolve_proper_semi(const CompletionContext& ctx, const Path& p) {
  ctx.require_n2_eligible();
  validate(ctx.graph_x(), p);
  const VertexSet ys = ctx.y_of(p);
  const VertexSet& xs = ctx.cls();
  const auto cls = detail::classify_against_class(ctx, p, ys);
  if (cls.rung != Rung::ProperSemi) {
    throw PreconditionError("proper semi: path is " +
                            std::string(to_string(cls.rung)));
  }
  if (xs.size() + 2 != ys.size()) {
    throw PreconditionError("proper semi: |class| != |Y| - 2");
  }
  if (ctx.report().chi2 != 2) {
    throw PreconditionError("proper semi: chi2 != 2");
  }
  if (ys != ctx.nbrs()) {
    throw PreconditionError("proper semi: Y != N(class)");
  }

  const std::size_t last = p.size() - 1;
  auto in_class = [&](std::size_t pos) {
    return xs.contains(p.vertices[pos]);
  };
  std::vector<std::size_t> ypos;  // positions of y_1 .. y_n along p
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (ys.contains(p.vertices[k])) ypos.push_back(k);
  }
  const std::size_t n = ypos.size();

  std::size_t i = 0;  // first y_i whose successor is not in the class
  while (i + 1 < n && in_class(ypos[i] + 1)) ++i;
  if (i + 1 >= n) throw PreconditionError("proper semi: no break in p");

  const auto pe = detail::path_edges(p);
  const Edge forbidden = make_edge(p.vertices[ypos[i]], p.vertices[ypos[i + 1]]);
  std::optional<Edge> uv;
  for (const Edge& e : ctx.graph().edges()) {
    if (ys.contains(e.u) && ys.contains(e.v) && !detail::contains_edge(pe, e) &&
        e != forbidden) {
      uv = e;
      break;
    }
  }
  if (!uv) {
    throw PreconditionError("proper semi: no usable edge inside Y");
  }

  std::size_t pk = 0;
  std::size_t pl = 0;
  {
    auto pos = [&](VertexId v) {
      return static_cast<std::size_t>(
          std::find(p.vertices.begin(), p.vertices.end(), v) -
          p.vertices.begin());
    };
    pk = std::min(pos(uv->u), pos(uv->v));
    pl = std::max(pos(uv->u), pos(uv->v));
  }

  Cycle c;
  auto& out = c.vertices;
  if (pk == ypos[i]) {
    if (pk == 0) {
      // y_1 y_l ->P y_n y_l^- <-P y_1
      out.push_back(p.vertices[0]);
      detail::append_range(out, p, pl, last);
      detail::append_range(out, p, pl - 1, 1);
    } else {
      // y_1 y_l^- <-P y_k y_l ->P y_n y_k^- <-P y_1
      out.push_back(p.vertices[0]);
      detail::append_range(out, p, pl - 1, pk);
      detail::append_range(out, p, pl, last);
      detail::append_range(out, p, pk - 1, 1);
    }
  } else if (in_class(pl - 1)) {
    // y_1 ->P y_k y_l ->P y_n y_k^+ ->P y_l^- y_1
    detail::append_range(out, p, 0, pk);
    detail::append_range(out, p, pl, last);
    detail::append_range(out, p, pk + 1, pl - 1);
  } else if (pl < last && in_class(pl + 1)) {
    // y_1 ->P y_k y_l <-P y_k^+ y_n <-P y_l^+ y_1
    detail::append_range(out, p, 0, pk);
    detail::append_range(out, p, pl, pk + 1);
    detail::append_range(out, p, last, pl + 1);
  } else {
    // y_l = y_n = y_{i+1}: y_1 ->P y_k y_n <-P y_k^+ y_1
    detail::append_range(out, p, 0, pk);
    detail::append_range(out, p, last, pk + 1);
  }
  detail::check_rewiring(ctx, p, c, "proper semi");
  return c;
}

inline Cycle resolve_proper_semi(const Graph& g, VertexId x, const Path& p) {
  return resolve_proper_semi(CompletionContext(g, x), p);
}

// p is alternating and c is a cycle of G_x on V(p). Either an edge of G
// inside Y closes p into a cycle on V(p) (Done / Reduced), or a vertex
// v of N(class) off p with two G-neighbours u, v' in Y yields a cycle on
// V(p) + v (Extended).
inline PullBackOutcome resolve_alternating(const CompletionContext& ctx,
                                           const Path& p, const Cycle& c) {
  ctx.require_n2_eligible();
  validate(ctx.graph_x(), p);
  validate(ctx.graph_x(), c);
  if (c.vertex_set() != p.vertex_set()) {
    throw DomainError("alternating: V(c) != V(p)");
  }
  const VertexSet ys = ctx.y_of(p);
  if (!detail::classify_against_class(ctx, p, ys).alternating()) {
    throw PreconditionError("alternating: p is not Y-class alternating");
  }
  const Graph& g = ctx.graph();

  for (const Edge& e : g.edges()) {
    if (ys.contains(e.u) && ys.contains(e.v)) {
      Cycle out = splice_alternating(ctx, p, Path{{e.u, e.v}});
      detail::check_rewiring(ctx, p, out, "alternating");
      return {detail::settle(ctx, out), std::move(out)};
    }
  }

  const VertexSet vp = p.vertex_set();
  for (VertexId v : ctx.nbrs()) {
    if (vp.contains(v)) continue;
    std::vector<VertexId> hits;
    for (VertexId w : g.neighbors(v)) {
      if (ys.contains(w)) hits.push_back(w);
    }
    if (hits.size() >= 2) {
      Cycle out = splice_alternating(ctx, p, Path{{hits[0], v, hits[1]}});
      return {OutcomeKind::Extended, std::move(out)};
    }
  }
  throw PreconditionError(
      "alternating: no edge of G inside Y and no extension through N(class)");
}

inline PullBackOutcome resolve_alternating(const Graph& g, VertexId x,
                                           const Path& p, const Cycle& c) {
  return resolve_alternating(CompletionContext(g, x), p, c);
}

// Converts a cycle of G_x into a cycle of G on at least the same vertices.
// Each iteration removes the smallest completion edge yz from the cycle;
// the number of completion edges on the cycle strictly decreases, so the
// loop runs at most |B_x| times. When c is a longest cycle of G_x the
// result has exactly V(c).
inline Cycle pull_back_cycle(const CompletionContext& ctx, const Cycle& c,
                             std::vector<PullBackStep>* trace = nullptr) {
  ctx.require_n2_eligible();
  validate(ctx.graph_x(), c);
  const Graph& gx = ctx.graph_x();

  Cycle cur = c;
  std::size_t budget = ctx.added_edges().size() + 1;
  for (;;) {
    std::optional<Edge> yz;
    std::size_t on_cycle = 0;
    for (const Edge& e : cur.edges()) {
      if (!ctx.is_added(e)) continue;
      ++on_cycle;
      if (!yz || e < *yz) yz = e;
    }
    if (!yz) break;
    if (budget-- == 0) throw Error("pull-back failed to make progress");

    PullBackStep step;
    step.chosen = *yz;
    const auto n = cur.length();
    const auto at = static_cast<std::size_t>(
        std::find(cur.vertices.begin(), cur.vertices.end(), yz->u) -
        cur.vertices.begin());
    const bool z_after = cur.vertices[(at + 1) % n] == yz->v;

    const VertexSet missing = set_difference(ctx.cls(), cur.vertex_set());
    if (!missing.empty()) {
      // y and z are both adjacent (in G) to every class vertex, so a missing
      // one can be threaded between them.
      Cycle next;
      for (std::size_t k = 0; k < n; ++k) {
        next.vertices.push_back(cur.vertices[k]);
        if ((z_after && k == at) || (!z_after && k == (at + n - 1) % n)) {
          next.vertices.push_back(missing.front());
        }
      }
      cur = std::move(next);
      step.resolver = "insert-class-vertex";
      step.kind = OutcomeKind::Extended;
    } else {
      // P = y ->C z, avoiding the edge yz.
      Path p;
      for (std::size_t k = 0; k < n; ++k) {
        p.vertices.push_back(
            z_after ? cur.vertices[(at + n - k) % n] : cur.vertices[(at + k) % n]);
      }
      const VertexSet ys = ctx.y_of(p);
      const auto cls = classify_path(gx, p, ctx.cls(), ys);
      step.rung = cls.rung;
      switch (cls.rung) {
        case Rung::NotPseudo:
          throw Error("pull-back: P(class) escapes class u Y");
        case Rung::ProperPseudo:
          cur = resolve_proper_pseudo(ctx, p);
          step.resolver = "proper-pseudo";
          step.kind = detail::settle(ctx, cur);
          break;
        case Rung::ProperSemi:
          cur = resolve_proper_semi(ctx, p);
          step.resolver = "proper-semi";
          step.kind = detail::settle(ctx, cur);
          break;
        case Rung::Alternating: {
          auto outcome = resolve_alternating(ctx, p, cur);
          cur = std::move(outcome.cycle);
          step.resolver = "alternating";
          step.kind = outcome.kind;
          break;
        }
      }
    }
    validate(gx, cur);
    step.cycle_length = cur.length();
    step.completion_edges_left = ctx.added_on(cur);
    if (step.completion_edges_left >= on_cycle) {
      throw Error("pull-back: completion edge count did not decrease");
    }
    if (trace) trace->push_back(step);
  }
  validate(ctx.graph(), cur);
  return cur;
}

inline Cycle pull_back_cycle(const Graph& g, VertexId x, const Cycle& c,
                             std::vector<PullBackStep>* trace = nullptr) {
  g.check_vertex(x);
  return pull_back_cycle(CompletionContext(g, x), c, trace);
}

}  // namespace n2c
