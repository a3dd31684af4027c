#pragma once

#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spined/errors.hpp"
#include "spined/graph.hpp"
#include "spined/hypergraph.hpp"
#include "spined/laws.hpp"

namespace spined {

enum class GraphFormat { EdgeList, Dimacs, Json };
enum class HypergraphFormat { Text, Json };

namespace detail {

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty() && current.back() == '\r') current.pop_back();
  if (!current.empty()) lines.push_back(std::move(current));
  return lines;
}

inline bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == '#';
  }
  return true;
}

inline void skip_spaces(const std::string& line, std::size_t& cursor) {
  while (cursor < line.size() && (line[cursor] == ' ' || line[cursor] == '\t'))
    ++cursor;
}

inline std::size_t parse_nat(const std::string& line, std::size_t line_no,
                             std::size_t& cursor, const char* what) {
  skip_spaces(line, cursor);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(line.data() + cursor,
                                         line.data() + line.size(), value);
  if (ec != std::errc() || ptr == line.data() + cursor)
    throw ParseError(std::string("expected ") + what, line_no, cursor + 1);
  cursor = static_cast<std::size_t>(ptr - line.data());
  return value;
}

inline std::string parse_word(const std::string& line, std::size_t line_no,
                              std::size_t& cursor, const char* what) {
  skip_spaces(line, cursor);
  std::size_t end = cursor;
  while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
  if (end == cursor)
    throw ParseError(std::string("expected ") + what, line_no, cursor + 1);
  std::string word = line.substr(cursor, end - cursor);
  cursor = end;
  return word;
}

inline void expect_line_end(const std::string& line, std::size_t line_no,
                            std::size_t cursor) {
  skip_spaces(line, cursor);
  if (cursor != line.size())
    throw ParseError("unexpected trailing content", line_no, cursor + 1);
}

inline void check_vertex_range(std::size_t v, std::size_t n) {
  if (v >= n)
    throw RangeError("vertex " + std::to_string(v) + " out of range for " +
                     std::to_string(n) + " vertices");
}

inline std::pair<std::size_t, std::size_t> line_col_at(const std::string& text,
                                                       std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline nlohmann::json parse_json_document(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col_at(text, e.byte);
    throw ParseError("invalid JSON", line, col);
  }
}

inline std::size_t json_nat(const nlohmann::json& j, const char* what) {
  if (!j.is_number_unsigned())
    throw ParseError(std::string(what) + " must be a nonnegative integer", 1, 1);
  return j.get<std::size_t>();
}

}  // namespace detail

// Edge-list format: first significant line is the vertex count, each
// further line is "u v" with 0-based endpoints. Blank lines and lines
// whose first nonblank character is '#' are ignored.
inline SimpleGraph parse_edge_list(const std::string& text) {
  const auto lines = detail::split_lines(text);
  bool have_count = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (detail::is_blank_or_comment(line)) continue;
    const std::size_t line_no = i + 1;
    std::size_t cursor = 0;
    if (!have_count) {
      n = detail::parse_nat(line, line_no, cursor, "vertex count");
      detail::expect_line_end(line, line_no, cursor);
      have_count = true;
      continue;
    }
    const std::size_t u = detail::parse_nat(line, line_no, cursor, "endpoint");
    const std::size_t v = detail::parse_nat(line, line_no, cursor, "endpoint");
    detail::expect_line_end(line, line_no, cursor);
    detail::check_vertex_range(u, n);
    detail::check_vertex_range(v, n);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_count)
    throw ParseError("missing vertex-count line", lines.size() + 1, 1);
  return SimpleGraph(n, std::move(edges));
}

inline std::string emit_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

// DIMACS col format: "c" comment lines, one "p edge n m" header, then
// m lines "e u v" with 1-based endpoints.
inline SimpleGraph parse_dimacs(const std::string& text) {
  const auto lines = detail::split_lines(text);
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const std::size_t line_no = i + 1;
    std::size_t cursor = 0;
    detail::skip_spaces(line, cursor);
    if (cursor == line.size()) continue;
    const char kind = line[cursor];
    if (kind == 'c') continue;
    ++cursor;
    if (kind == 'p') {
      if (have_header)
        throw ParseError("duplicate problem line", line_no, cursor);
      const std::string word =
          detail::parse_word(line, line_no, cursor, "problem type");
      if (word != "edge")
        throw ParseError("expected problem type 'edge'", line_no,
                         cursor - word.size() + 1);
      n = detail::parse_nat(line, line_no, cursor, "vertex count");
      m = detail::parse_nat(line, line_no, cursor, "edge count");
      detail::expect_line_end(line, line_no, cursor);
      have_header = true;
    } else if (kind == 'e') {
      if (!have_header)
        throw ParseError("edge line before problem line", line_no, 1);
      const std::size_t u = detail::parse_nat(line, line_no, cursor, "endpoint");
      const std::size_t v = detail::parse_nat(line, line_no, cursor, "endpoint");
      detail::expect_line_end(line, line_no, cursor);
      if (u < 1 || u > n || v < 1 || v > n)
        throw RangeError("DIMACS endpoint out of range 1.." + std::to_string(n));
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      throw ParseError("unrecognized line", line_no, cursor);
    }
  }
  if (!have_header)
    throw ParseError("missing problem line", lines.size() + 1, 1);
  if (edges.size() != m)
    throw ParseError("problem line declares " + std::to_string(m) +
                         " edges but " + std::to_string(edges.size()) +
                         " were given",
                     lines.size() + 1, 1);
  return SimpleGraph(n, std::move(edges));
}

inline std::string emit_dimacs(const SimpleGraph& g) {
  std::ostringstream os;
  os << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) os << "e " << u + 1 << " " << v + 1 << "\n";
  return os.str();
}

// JSON format: { "vertices": n, "edges": [[u, v], ...] }.
inline SimpleGraph parse_graph_json(const std::string& text) {
  const nlohmann::json j = detail::parse_json_document(text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ParseError("expected an object with 'vertices' and 'edges'", 1, 1);
  const std::size_t n = detail::json_nat(j["vertices"], "'vertices'");
  std::vector<Edge> edges;
  if (!j["edges"].is_array())
    throw ParseError("'edges' must be an array", 1, 1);
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("each edge must be a pair", 1, 1);
    const std::size_t u = detail::json_nat(e[0], "edge endpoint");
    const std::size_t v = detail::json_nat(e[1], "edge endpoint");
    detail::check_vertex_range(u, n);
    detail::check_vertex_range(v, n);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return SimpleGraph(n, std::move(edges));
}

inline std::string emit_graph_json(const SimpleGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump(2) + "\n";
}

inline SimpleGraph parse_graph(const std::string& text, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList: return parse_edge_list(text);
    case GraphFormat::Dimacs: return parse_dimacs(text);
    case GraphFormat::Json: return parse_graph_json(text);
  }
  throw PreconditionViolation("unknown graph format");
}

inline std::string emit_graph(const SimpleGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList: return emit_edge_list(g);
    case GraphFormat::Dimacs: return emit_dimacs(g);
    case GraphFormat::Json: return emit_graph_json(g);
  }
  throw PreconditionViolation("unknown graph format");
}

// Hypergraph text format: first significant line is the vertex count,
// each further line lists one hyperedge's vertices. Blank lines and
// '#' comments are ignored.
inline Hypergraph parse_hypergraph_text(const std::string& text) {
  const auto lines = detail::split_lines(text);
  bool have_count = false;
  std::size_t n = 0;
  std::vector<std::vector<Vertex>> hyperedges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (detail::is_blank_or_comment(line)) continue;
    const std::size_t line_no = i + 1;
    std::size_t cursor = 0;
    if (!have_count) {
      n = detail::parse_nat(line, line_no, cursor, "vertex count");
      detail::expect_line_end(line, line_no, cursor);
      have_count = true;
      continue;
    }
    std::vector<Vertex> edge;
    while (true) {
      detail::skip_spaces(line, cursor);
      if (cursor == line.size()) break;
      const std::size_t v = detail::parse_nat(line, line_no, cursor, "vertex");
      detail::check_vertex_range(v, n);
      edge.push_back(static_cast<Vertex>(v));
    }
    hyperedges.push_back(std::move(edge));
  }
  if (!have_count)
    throw ParseError("missing vertex-count line", lines.size() + 1, 1);
  return Hypergraph(n, std::move(hyperedges));
}

inline std::string emit_hypergraph_text(const Hypergraph& h) {
  std::ostringstream os;
  os << h.vertex_count() << "\n";
  for (const auto& e : h.hyperedges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) os << " ";
      os << e[i];
    }
    os << "\n";
  }
  return os.str();
}

// JSON format: { "vertices": n, "hyperedges": [[...], ...] }.
inline Hypergraph parse_hypergraph_json(const std::string& text) {
  const nlohmann::json j = detail::parse_json_document(text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("hyperedges"))
    throw ParseError("expected an object with 'vertices' and 'hyperedges'", 1,
                     1);
  const std::size_t n = detail::json_nat(j["vertices"], "'vertices'");
  if (!j["hyperedges"].is_array())
    throw ParseError("'hyperedges' must be an array", 1, 1);
  std::vector<std::vector<Vertex>> hyperedges;
  for (const auto& e : j["hyperedges"]) {
    if (!e.is_array())
      throw ParseError("each hyperedge must be an array", 1, 1);
    std::vector<Vertex> edge;
    for (const auto& v : e) {
      const std::size_t value = detail::json_nat(v, "hyperedge vertex");
      detail::check_vertex_range(value, n);
      edge.push_back(static_cast<Vertex>(value));
    }
    hyperedges.push_back(std::move(edge));
  }
  return Hypergraph(n, std::move(hyperedges));
}

inline std::string emit_hypergraph_json(const Hypergraph& h) {
  nlohmann::json j;
  j["vertices"] = h.vertex_count();
  j["hyperedges"] = nlohmann::json::array();
  for (const auto& e : h.hyperedges()) j["hyperedges"].push_back(e);
  return j.dump(2) + "\n";
}

inline Hypergraph parse_hypergraph(const std::string& text,
                                   HypergraphFormat format) {
  switch (format) {
    case HypergraphFormat::Text: return parse_hypergraph_text(text);
    case HypergraphFormat::Json: return parse_hypergraph_json(text);
  }
  throw PreconditionViolation("unknown hypergraph format");
}

inline std::string emit_hypergraph(const Hypergraph& h,
                                   HypergraphFormat format) {
  switch (format) {
    case HypergraphFormat::Text: return emit_hypergraph_text(h);
    case HypergraphFormat::Json: return emit_hypergraph_json(h);
  }
  throw PreconditionViolation("unknown hypergraph format");
}

// The fixed law-report document shape.
inline nlohmann::json law_report_to_json(const LawReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"case", f.case_label}, {"detail", f.detail}});
  return {{"law", report.law},
          {"population_size", report.population_size},
          {"failures", failures},
          {"enumeration_bound", report.enumeration_bound}};
}

}  // namespace spined
