#include "dcol/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "dcol/errors.hpp"

namespace dcol {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view strip_comment(std::string_view s, char mark) {
  auto p = s.find(mark);
  return p == std::string_view::npos ? s : s.substr(0, p);
}

long long parse_int(std::string_view tok, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

int vertex_id(std::string_view tok, int line, long long limit) {
  long long v = parse_int(tok, line);
  if (v < 0 || v >= limit) throw ParseError(line, "vertex " + std::string(tok) + " out of range");
  return static_cast<int>(v);
}

constexpr long long kMaxVertices = 1LL << 26;

GraphRead read_edge_list(std::istream& in) {
  GraphBuilder b;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = split_ws(strip_comment(raw, '#'));
    if (toks.empty()) continue;
    if (toks.size() == 1) {
      int v = vertex_id(toks[0], line, kMaxVertices);
      while (b.n() <= v) b.add_vertex();
      continue;
    }
    if (toks.size() != 2) throw ParseError(line, "expected 'u v'");
    int u = vertex_id(toks[0], line, kMaxVertices), v = vertex_id(toks[1], line, kMaxVertices);
    if (u == v) throw ParseError(line, "loop at vertex " + std::to_string(u));
    b.add_edge(u, v);
  }
  Graph g = b.build();
  return {std::move(g), b.duplicates()};
}

GraphRead read_dimacs(std::istream& in) {
  std::optional<long long> n;
  GraphBuilder b;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = split_ws(raw);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n) throw ParseError(line, "second problem line");
      if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
        throw ParseError(line, "expected 'p edge n m'");
      n = parse_int(toks[2], line);
      parse_int(toks[3], line);
      if (*n < 0 || *n > kMaxVertices) throw ParseError(line, "bad vertex count");
      b = GraphBuilder(static_cast<int>(*n));
    } else if (toks[0] == "e") {
      if (!n) throw ParseError(line, "edge before problem line");
      if (toks.size() != 3) throw ParseError(line, "expected 'e u v'");
      int u = vertex_id(toks[1], line, *n + 1), v = vertex_id(toks[2], line, *n + 1);
      if (u == 0 || v == 0) throw ParseError(line, "DIMACS vertices are 1-indexed");
      if (u == v) throw ParseError(line, "loop at vertex " + std::to_string(u));
      b.add_edge(u - 1, v - 1);
    } else {
      throw ParseError(line, "unknown line type '" + std::string(toks[0]) + "'");
    }
  }
  if (!n) throw ParseError(line, "missing problem line");
  Graph g = b.build();
  return {std::move(g), b.duplicates()};
}

GraphRead read_graph6(std::istream& in) {
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = split_ws(raw);
    if (toks.empty()) continue;
    std::string s(toks[0]);
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (toks.size() != 1) throw ParseError(line, "graph6 line contains whitespace");
    Graph g;
    try {
      g = decode_graph6(s);
    } catch (const ParseError&) {
      throw;
    } catch (const InvalidInput& e) {
      throw ParseError(line, e.what());
    }
    // One graph per stream; trailing blank lines are fine.
    while (std::getline(in, raw)) {
      ++line;
      if (!split_ws(raw).empty()) throw ParseError(line, "more than one graph6 record");
    }
    return {std::move(g), 0};
  }
  throw ParseError(line, "empty graph6 input");
}

}  // namespace

std::optional<GraphFormat> format_from_name(const std::string& name) {
  if (name == "edge-list" || name == "edgelist" || name == "el") return GraphFormat::EdgeList;
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "dimacs" || name == "col") return GraphFormat::Dimacs;
  return std::nullopt;
}

std::string format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::EdgeList: return "edge-list";
    case GraphFormat::Graph6: return "graph6";
    case GraphFormat::Dimacs: return "dimacs";
  }
  return "edge-list";
}

GraphFormat format_from_path(const std::string& path) {
  auto ends = [&](const std::string& suf) {
    return path.size() >= suf.size() && path.compare(path.size() - suf.size(), suf.size(), suf) == 0;
  };
  if (ends(".g6")) return GraphFormat::Graph6;
  if (ends(".col") || ends(".dimacs")) return GraphFormat::Dimacs;
  return GraphFormat::EdgeList;
}

GraphFormat detect_format(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    auto toks = split_ws(raw);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "c" || toks[0] == "p" || toks[0] == "e") return GraphFormat::Dimacs;
    if (toks.size() == 1 && (toks[0].rfind(">>graph6<<", 0) == 0 ||
                             std::any_of(toks[0].begin(), toks[0].end(), [](char ch) { return ch < '0' || ch > '9'; })))
      return GraphFormat::Graph6;
    return GraphFormat::EdgeList;
  }
  return GraphFormat::EdgeList;
}

GraphRead read_graph(std::istream& in, GraphFormat f) {
  switch (f) {
    case GraphFormat::EdgeList: return read_edge_list(in);
    case GraphFormat::Graph6: return read_graph6(in);
    case GraphFormat::Dimacs: return read_dimacs(in);
  }
  return read_edge_list(in);
}

GraphRead read_graph_text(const std::string& text, std::optional<GraphFormat> f) {
  std::istringstream in(text);
  return read_graph(in, f ? *f : detect_format(text));
}

GraphRead read_graph_file(const std::string& path, std::optional<GraphFormat> f) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_graph(in, f ? *f : format_from_path(path));
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat f) {
  switch (f) {
    case GraphFormat::EdgeList: {
      std::vector<char> touched(g.n(), 0);
      for (auto [u, v] : g.edges()) touched[u] = touched[v] = 1;
      for (int v = 0; v < g.n(); ++v)
        if (!touched[v]) out << v << '\n';
      for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
      break;
    }
    case GraphFormat::Graph6:
      out << encode_graph6(g) << '\n';
      break;
    case GraphFormat::Dimacs:
      out << "p edge " << g.n() << ' ' << g.m() << '\n';
      for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
      break;
  }
}

std::string graph_text(const Graph& g, GraphFormat f) {
  std::ostringstream out;
  write_graph(out, g, f);
  return out.str();
}

std::string encode_graph6(const Graph& g) {
  long long n = g.n();
  std::string s;
  auto put6 = [&](long long x, int groups) {
    for (int i = groups - 1; i >= 0; --i) s += static_cast<char>(63 + ((x >> (6 * i)) & 63));
  };
  if (n < 63) {
    put6(n, 1);
  } else if (n <= 258047) {
    s += '~';
    put6(n, 3);
  } else {
    s += "~~";
    put6(n, 6);
  }
  // Bit j(j-1)/2 + i holds the pair i < j; six bits per byte, high bit first.
  std::size_t head = s.size();
  s.append(static_cast<std::size_t>((n * (n - 1) / 2 + 5) / 6), '\0');
  for (auto [i, j] : g.edges()) {
    long long bit = static_cast<long long>(j) * (j - 1) / 2 + i;
    s[head + bit / 6] = static_cast<char>(s[head + bit / 6] | (1 << (5 - bit % 6)));
  }
  for (std::size_t k = head; k < s.size(); ++k) s[k] = static_cast<char>(s[k] + 63);
  return s;
}

Graph decode_graph6(const std::string& s) {
  std::size_t pos = 0;
  auto take6 = [&]() -> int {
    if (pos >= s.size()) throw InvalidInput("graph6 record truncated");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw InvalidInput("graph6 byte out of range");
    return c - 63;
  };
  long long n = 0;
  int groups = 1;
  if (!s.empty() && s[0] == '~') {
    ++pos;
    groups = 3;
    if (s.size() > 1 && s[1] == '~') {
      ++pos;
      groups = 6;
    }
  }
  for (int i = 0; i < groups; ++i) n = (n << 6) | take6();
  if (n > kMaxVertices) throw InvalidInput("graph6 vertex count too large");
  long long need = (n * (n - 1) / 2 + 5) / 6;
  if (static_cast<long long>(s.size() - pos) != need)
    throw InvalidInput("graph6 record has " + std::to_string(s.size() - pos) + " data bytes, expected " +
                       std::to_string(need));
  std::vector<Edge> es;
  int acc = 0, left = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (left == 0) {
        acc = take6();
        left = 6;
      }
      if ((acc >> --left) & 1) es.emplace_back(i, j);
    }
  return Graph(static_cast<int>(n), es);
}

Colouring read_colouring(std::istream& in, int n) {
  Colouring chi(n);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = split_ws(strip_comment(raw, '#'));
    if (toks.empty()) continue;
    if (toks.size() != 2) throw ParseError(line, "expected 'vertex colour'");
    int v = vertex_id(toks[0], line, n);
    long long c = parse_int(toks[1], line);
    if (c < 0 || c > 1'000'000'000) throw ParseError(line, "colour out of range");
    if (chi[v] != kUncoloured) throw ParseError(line, "vertex " + std::to_string(v) + " coloured twice");
    chi[v] = static_cast<int>(c);
  }
  return chi;
}

Colouring read_colouring_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_colouring(in, n);
}

void write_colouring(std::ostream& out, const Colouring& chi) {
  for (int v = 0; v < chi.n(); ++v)
    if (chi[v] != kUncoloured) out << v << ' ' << chi[v] << '\n';
}

void Report::add(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_)
    if (k == key) {
      v = value;
      return;
    }
  entries_.emplace_back(key, value);
}

void Report::add(const std::string& key, const std::vector<int>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
  add(key, s);
}

void Report::append(const Report& other) {
  for (const auto& [k, v] : other.entries_) add(k, v);
}

std::optional<std::string> Report::get(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return std::nullopt;
}

std::string Report::str() const {
  std::string s;
  for (const auto& [k, v] : entries_) s += k + ": " + v + "\n";
  return s;
}

Report colouring_report(const Graph& g, const Colouring& chi, const Certificate& cert) {
  (void)chi;
  Report r;
  r.add("vertices", g.n());
  r.add("edges", static_cast<long long>(g.m()));
  r.add("colours", cert.k);
  r.add("defect", cert.defect);
  r.add("clustering", cert.clustering);
  r.add("all_paths", cert.all_paths);
  r.add("class_sizes", cert.class_sizes);
  return r;
}

Report colouring_report(const Graph& g, const Colouring& chi) { return colouring_report(g, chi, audit(g, chi)); }

void write_dot(std::ostream& out, const Graph& g, const Colouring* chi) {
  static const char* palette[] = {"red", "blue", "green", "orange", "purple", "cyan",
                                  "magenta", "yellow", "brown", "gray", "pink", "olive"};
  out << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) {
    out << "  " << v;
    if (chi && (*chi)[v] != kUncoloured) {
      int c = (*chi)[v];
      out << " [colour=" << c << ", style=filled, fillcolor=" << palette[c % 12] << "]";
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace dcol
