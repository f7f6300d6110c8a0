#pragma once

// JSON and DOT renderings. JSON objects use sorted keys, so output is
// byte-stable for a given input.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "n2closure/closure.hpp"
#include "n2closure/eligibility.hpp"
#include "n2closure/graph.hpp"
#include "n2closure/reconstruct.hpp"

namespace n2c {

using json = nlohmann::json;

inline json labels_json(const Graph& g, const VertexSet& s) {
  json out = json::array();
  for (VertexId v : s) out.push_back(g.label(v));
  return out;
}

inline json edges_json(const Graph& g, const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({g.label(e.u), g.label(e.v)});
  return out;
}

inline json to_json(const Graph& g, const EligibilityReport& r) {
  return {
      {"vertex", g.label(r.vertex)},
      {"simplicial", r.simplicial},
      {"class", labels_json(g, r.class_bar_x)},
      {"neighborhood_of_class", labels_json(g, r.neighborhood_of_class)},
      {"sigma_of_neighborhood", r.sigma_of_neighborhood},
      {"chi2", r.chi2},
      {"n_eligible", r.n_eligible},
      {"n2_eligible", r.n2_eligible},
  };
}

inline json to_json(const ClosureTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({
        {"chosen_label", t.initial.label(s.chosen)},
        {"added_edges", edges_json(t.initial, s.added)},
        {"n_eligible", s.n_eligible_flag},
    });
  }
  return {
      {"initial_edges", edges_json(t.initial, t.initial.edges())},
      {"steps", std::move(steps)},
      {"final_edges", edges_json(t.final_graph, t.final_graph.edges())},
  };
}

inline json to_json(const Graph& g, const PullBackStep& s) {
  return {
      {"chosen_edge", {g.label(s.chosen.u), g.label(s.chosen.v)}},
      {"rung", s.rung ? json(std::string(to_string(*s.rung))) : json(nullptr)},
      {"resolver", s.resolver},
      {"outcome", std::string(to_string(s.kind))},
      {"cycle_length", s.cycle_length},
      {"completion_edges_left", s.completion_edges_left},
  };
}

inline std::string cycle_labels(const Graph& g, const Cycle& c) {
  std::string out;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) out += ',';
    out += g.label(c.vertices[i]);
  }
  return out;
}

namespace detail {

inline std::string dot_id(const std::string& label) {
  std::string out = "\"";
  for (char ch : label) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + '"';
}

}  // namespace detail

// Edges of `closed` missing from `original` are dashed; vertices simplicial
// in `closed` get a double border.
inline void write_dot(std::ostream& out, const Graph& original,
                      const Graph& closed) {
  out << "graph closure {\n";
  out << "  node [shape=circle];\n";
  for (VertexId v = 0; v < closed.vertex_count(); ++v) {
    out << "  " << detail::dot_id(closed.label(v));
    if (is_simplicial(closed, v)) out << " [peripheries=2]";
    out << ";\n";
  }
  for (const Edge& e : closed.edges()) {
    out << "  " << detail::dot_id(closed.label(e.u)) << " -- "
        << detail::dot_id(closed.label(e.v));
    if (!original.adjacent(e.u, e.v)) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
}

inline std::string to_dot(const Graph& original, const Graph& closed) {
  std::ostringstream out;
  write_dot(out, original, closed);
  return out.str();
}

}  // namespace n2c
