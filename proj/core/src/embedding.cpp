#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/graph_traits.hpp>

#include "dcol/errors.hpp"
#include "dcol/graph.hpp"

namespace dcol {

std::vector<std::vector<int>> Embedding::faces() const {
  const int n = graph.n();
  if (static_cast<int>(rotation.size()) != n) throw InvalidInput("rotation size differs from graph");
  // Position of each neighbour in the rotation of v.
  std::vector<std::map<int, int>> pos(n);
  for (int v = 0; v < n; ++v) {
    if (rotation[v].size() != graph.neighbours(v).size()) throw InvalidInput("rotation does not match adjacency");
    for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i) {
      if (!graph.adjacent(v, rotation[v][i])) throw InvalidInput("rotation lists a non-neighbour");
      pos[v][rotation[v][i]] = i;
    }
  }
  std::map<Edge, char> used;
  std::vector<std::vector<int>> out;
  for (int u = 0; u < n; ++u)
    for (int v : rotation[u]) {
      if (used[{u, v}]) continue;
      std::vector<int> walk;
      int a = u, b = v;
      while (!used[{a, b}]) {
        used[{a, b}] = 1;
        walk.push_back(a);
        // Next dart: successor of a in the rotation at b.
        const auto& rb = rotation[b];
        int i = pos[b][a];
        int c = rb[(i + 1) % rb.size()];
        a = b;
        b = c;
      }
      out.push_back(std::move(walk));
    }
  return out;
}

bool Embedding::is_plane() const {
  long long n = graph.n(), m = static_cast<long long>(graph.m());
  long long isolated = 0;
  for (int v = 0; v < graph.n(); ++v) isolated += graph.degree(v) == 0;
  long long comps = static_cast<long long>(connected_components(graph).size());
  long long f = static_cast<long long>(faces().size());
  // Each component with an edge satisfies n - m + f = 2 on the sphere.
  return (n - isolated) - m + f == 2 * (comps - isolated);
}

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

}  // namespace

std::optional<Embedding> planar_embedding(const Graph& g) {
  BoostGraph bg(g.n());
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  auto eidx = boost::get(boost::edge_index, bg);
  int id = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(eidx, *it, id++);
  using EdgeT = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeT>> emb(g.n());
  bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                    boost::boyer_myrvold_params::embedding = &emb[0]);
  if (g.n() == 0) return Embedding{g, {}};
  if (!planar) return std::nullopt;
  Embedding out{g, std::vector<std::vector<int>>(g.n())};
  for (int v = 0; v < g.n(); ++v)
    for (const auto& e : emb[v]) {
      int a = static_cast<int>(boost::source(e, bg)), b = static_cast<int>(boost::target(e, bg));
      out.rotation[v].push_back(a == v ? b : a);
    }
  return out;
}

namespace {

using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
using BoostEmbedding = std::vector<std::vector<EdgeDesc>>;

void reindex(BoostGraph& bg) {
  auto eidx = boost::get(boost::edge_index, bg);
  int id = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(eidx, *it, id++);
}

bool embed(BoostGraph& bg, BoostEmbedding& emb) {
  reindex(bg);
  emb.assign(boost::num_vertices(bg), {});
  return boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                             boost::boyer_myrvold_params::embedding = &emb[0]);
}

}  // namespace

std::optional<Embedding> maximal_planar_supergraph(const Graph& g) {
  const int n = g.n();
  if (n <= 3) {
    Graph k = complete_graph(n);
    Embedding e{k, std::vector<std::vector<int>>(n)};
    for (int v = 0; v < n; ++v) e.rotation[v] = k.neighbours(v);
    return e;
  }
  BoostGraph bg(n);
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  reindex(bg);
  boost::make_connected(bg);
  BoostEmbedding emb;
  if (!embed(bg, emb)) return std::nullopt;
  boost::make_biconnected_planar(bg, &emb[0]);
  if (!embed(bg, emb)) return std::nullopt;
  boost::make_maximal_planar(bg, &emb[0]);
  if (!embed(bg, emb)) return std::nullopt;
  std::vector<Edge> es;
  for (auto [it, end] = boost::edges(bg); it != end; ++it)
    es.emplace_back(static_cast<int>(boost::source(*it, bg)), static_cast<int>(boost::target(*it, bg)));
  Embedding out{Graph(n, es), std::vector<std::vector<int>>(n)};
  for (int v = 0; v < n; ++v)
    for (const auto& e : emb[v]) {
      int a = static_cast<int>(boost::source(e, bg)), b = static_cast<int>(boost::target(e, bg));
      out.rotation[v].push_back(a == v ? b : a);
    }
  return out;
}

bool is_planar(const Graph& g) { return planar_embedding(g).has_value(); }

bool is_outerplanar(const Graph& g) {
  // G is outerplanar iff G plus an apex joined to every vertex is planar.
  auto es = g.edges();
  for (int v = 0; v < g.n(); ++v) es.emplace_back(v, g.n());
  return is_planar(Graph(g.n() + 1, es));
}

int girth(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.n(); ++s) {
    std::vector<int> dist(g.n(), -1), parent(g.n(), -1), queue{s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      if (best && 2 * dist[v] + 1 >= best) break;
      for (int w : g.neighbours(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (w != parent[v]) {
          int len = dist[v] + dist[w] + 1;
          if (!best || len < best) best = len;
        }
      }
    }
  }
  return best;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw InvalidInput("relabel: permutation size mismatch");
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
  return Graph(g.n(), es);
}

}  // namespace dcol
