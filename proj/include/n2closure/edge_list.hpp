#pragma once

// Plain-text edge-list format:
//
//   # comment
//   a b            one edge per line, two whitespace-separated labels
//   vertex c       declares a (possibly isolated) vertex
//
// Labels are interned to ids in order of first occurrence. A comment of
// the form `# witness-vertex <label>` marks a distinguished vertex.

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "n2closure/error.hpp"
#include "n2closure/graph.hpp"

namespace n2c {

struct EdgeListDocument {
  Graph graph;
  std::optional<std::string> witness_vertex;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace detail

inline EdgeListDocument parse_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::optional<std::string> witness;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] =
        ids.emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks[0].front() == '#') {
      auto body = detail::split_ws(line.substr(line.find('#') + 1));
      if (body.size() == 2 && body[0] == "witness-vertex") witness = body[1];
      continue;
    }
    if (toks[0] == "vertex") {
      if (toks.size() != 2) {
        throw ParseError(lineno, "expected 'vertex <label>'");
      }
      intern(toks[1]);
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError(lineno, "expected two labels, found " +
                                   std::to_string(toks.size()) + " tokens");
    }
    if (toks[0] == toks[1]) {
      throw ParseError(lineno, "self-loop at '" + toks[0] + "'");
    }
    const VertexId a = intern(toks[0]);
    const VertexId b = intern(toks[1]);
    const Edge e = make_edge(a, b);
    if (!seen.insert(e).second) {
      throw ParseError(lineno,
                       "duplicate edge '" + toks[0] + "' '" + toks[1] + "'");
    }
    edges.push_back(e);
  }

  EdgeListDocument doc;
  const std::size_t n = labels.size();
  doc.graph = Graph::from_edges(n, edges, std::move(labels));
  if (witness && !doc.graph.find(*witness)) {
    throw ParseError(lineno, "witness vertex '" + *witness + "' not in graph");
  }
  doc.witness_vertex = std::move(witness);
  return doc;
}

inline EdgeListDocument parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline EdgeListDocument read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

// Every vertex is declared up front so ids survive a round trip.
inline void write_edge_list(std::ostream& out, const Graph& g,
                            std::optional<VertexId> witness = std::nullopt) {
  out << "# n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
  if (witness) out << "# witness-vertex " << g.label(*witness) << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "vertex " << g.label(v) << '\n';
  }
  for (const Edge& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  }
}

inline std::string to_edge_list(const Graph& g,
                                std::optional<VertexId> witness = std::nullopt) {
  std::ostringstream out;
  write_edge_list(out, g, witness);
  return out.str();
}

}  // namespace n2c
