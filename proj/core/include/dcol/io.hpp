#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcol/colouring.hpp"
#include "dcol/graph.hpp"

namespace dcol {

enum class GraphFormat { EdgeList, Graph6, Dimacs };

// "edge-list", "graph6", "dimacs"; nullopt otherwise.
std::optional<GraphFormat> format_from_name(const std::string& name);
std::string format_name(GraphFormat f);
// By extension: .g6, .col/.dimacs, anything else is an edge list.
GraphFormat format_from_path(const std::string& path);
// Sniffs the first meaningful line of the text.
GraphFormat detect_format(const std::string& text);

struct GraphRead {
  Graph graph;
  std::size_t duplicates = 0;  // parallel edges collapsed
};

// Malformed lines and loops throw ParseError with the 1-based line number.
// Edge lists are 0-indexed "u v" pairs; a line with one id declares a vertex.
GraphRead read_graph(std::istream& in, GraphFormat f);
GraphRead read_graph_text(const std::string& text, std::optional<GraphFormat> f = std::nullopt);
GraphRead read_graph_file(const std::string& path, std::optional<GraphFormat> f = std::nullopt);

void write_graph(std::ostream& out, const Graph& g, GraphFormat f);
std::string graph_text(const Graph& g, GraphFormat f);

std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& s);

// "vertex colour" lines, '#' starts a comment. Vertices not listed stay uncoloured.
Colouring read_colouring(std::istream& in, int n);
Colouring read_colouring_file(const std::string& path, int n);
void write_colouring(std::ostream& out, const Colouring& chi);

// Key-value text with keys in insertion order.
class Report {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
  void add(const std::string& key, int value) { add(key, std::to_string(value)); }
  void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
  void add(const std::string& key, const std::vector<int>& values);
  void append(const Report& other);

  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }
  std::optional<std::string> get(const std::string& key) const;
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// vertices, edges, colours, defect, clustering, all_paths, class_sizes.
Report colouring_report(const Graph& g, const Colouring& chi, const Certificate& cert);
Report colouring_report(const Graph& g, const Colouring& chi);

// Undirected DOT; vertices carry a colour attribute when chi is given.
void write_dot(std::ostream& out, const Graph& g, const Colouring* chi = nullptr);

}  // namespace dcol
