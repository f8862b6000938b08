#include "dcol/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "dcol/errors.hpp"
#include "dcol/flow.hpp"

namespace dcol {

Graph::Graph(int n) : adj_(n < 0 ? 0 : n) {
  if (n < 0) throw InvalidInput("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (!contains(u) || !contains(v))
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  m_ = 0;
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    m_ += a.size();
  }
  m_ /= 2;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int d = static_cast<int>(adj_[0].size());
  for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return d;
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<int>& vs) const {
  std::vector<int> pos(n(), -1);
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
    if (!contains(vs[i])) throw InvalidInput("vertex " + std::to_string(vs[i]) + " out of range");
    if (pos[vs[i]] >= 0) throw InvalidInput("repeated vertex " + std::to_string(vs[i]));
    pos[vs[i]] = i;
  }
  std::vector<Edge> es;
  for (int i = 0; i < static_cast<int>(vs.size()); ++i)
    for (int w : adj_[vs[i]])
      if (pos[w] > i) es.emplace_back(i, pos[w]);
  Graph h(static_cast<int>(vs.size()), es);
  if (!labels_.empty()) {
    std::vector<std::string> ls;
    for (int v : vs) ls.push_back(labels_[v]);
    h.labels_ = std::move(ls);
  }
  return h;
}

Graph Graph::without_edges(const std::vector<Edge>& es) const {
  std::set<Edge> drop;
  for (auto [u, v] : es) drop.insert({std::min(u, v), std::max(u, v)});
  std::vector<Edge> keep;
  for (auto e : edges())
    if (!drop.count(e)) keep.push_back(e);
  Graph h(n(), keep);
  h.labels_ = labels_;
  return h;
}

Graph Graph::with_edges(const std::vector<Edge>& es) const {
  auto all = edges();
  all.insert(all.end(), es.begin(), es.end());
  Graph h(n(), all);
  h.labels_ = labels_;
  return h;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && static_cast<int>(labels.size()) != n())
    throw InvalidInput("label count does not match vertex count");
  Graph h = *this;
  h.labels_ = std::move(labels);
  return h;
}

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0) throw InvalidInput("negative vertex id");
  n_ = std::max({n_, u + 1, v + 1});
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

Graph GraphBuilder::build() const {
  std::vector<Edge> es = edges_;
  std::sort(es.begin(), es.end());
  auto last = std::unique(es.begin(), es.end());
  duplicates_ = static_cast<std::size_t>(es.end() - last);
  es.erase(last, es.end());
  return Graph(n_, es);
}

std::vector<int> Layering::layer_index(int n) const {
  std::vector<int> idx(n, -1);
  for (int i = 0; i < static_cast<int>(layers.size()); ++i)
    for (int v : layers[i]) idx[v] = i;
  return idx;
}

bool Layering::spans_ok(const Graph& g) const {
  auto idx = layer_index(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (idx[v] < 0) return false;
  for (auto [u, v] : g.edges())
    if (std::abs(idx[u] - idx[v]) > 1) return false;
  return true;
}

void PlaneTriangulation::validate() const {
  const int n = graph.n();
  if (outer.size() < 3) throw InvalidInput("outer cycle has fewer than 3 vertices");
  std::map<Edge, int> count;
  auto key = [](int a, int b) { return Edge{std::min(a, b), std::max(a, b)}; };
  for (const auto& f : faces) {
    for (int i = 0; i < 3; ++i) {
      int a = f[i], b = f[(i + 1) % 3];
      if (!graph.contains(a) || a == b || !graph.adjacent(a, b))
        throw InvalidInput("face side " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
      ++count[key(a, b)];
    }
  }
  for (std::size_t i = 0; i < outer.size(); ++i) {
    int a = outer[i], b = outer[(i + 1) % outer.size()];
    if (!graph.contains(a) || !graph.adjacent(a, b))
      throw InvalidInput("outer side " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
    ++count[key(a, b)];
  }
  for (auto e : graph.edges()) {
    auto it = count.find(e);
    int c = it == count.end() ? 0 : it->second;
    if (c != 2)
      throw InvalidInput("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + " lies on " +
                         std::to_string(c) + " faces");
  }
  long long f = static_cast<long long>(faces.size()) + 1;
  if (n - static_cast<long long>(graph.m()) + f != 2) throw InvalidInput("Euler's formula fails");
}

void TPartition::validate(const Graph& host) const {
  if (static_cast<int>(bags.size()) != tree.n()) throw InvalidInput("bag count differs from tree size");
  if (tree.n() > 0 && (!is_connected(tree) || tree.m() + 1 != static_cast<std::size_t>(tree.n())))
    throw InvalidInput("T-partition index graph is not a tree");
  std::vector<int> seen(host.n(), 0);
  for (const auto& b : bags)
    for (int v : b) {
      if (!host.contains(v)) throw InvalidInput("bag vertex out of range");
      ++seen[v];
    }
  for (int v = 0; v < host.n(); ++v)
    if (seen[v] != 1) throw InvalidInput("vertex " + std::to_string(v) + " is not in exactly one bag");
}

std::vector<int> TPartition::bag_of(int n) const {
  std::vector<int> out(n, -1);
  for (int x = 0; x < static_cast<int>(bags.size()); ++x)
    for (int v : bags[x]) out[v] = x;
  return out;
}

std::vector<std::pair<Edge, int>> TPartition::edge_crossings(const Graph& host) const {
  const int t = tree.n();
  std::vector<std::pair<Edge, int>> out;
  if (t == 0) return out;
  std::vector<int> parent(t, -1), depth(t, 0), order{0};
  std::vector<char> seen(t, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int y : tree.neighbours(order[i]))
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        depth[y] = depth[order[i]] + 1;
        order.push_back(y);
      }
  // Count per child node: edges crossing (child, parent).
  std::vector<int> cross(t, 0);
  auto bag = bag_of(host.n());
  for (auto [u, v] : host.edges()) {
    int a = bag[u], b = bag[v];
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      ++cross[a];
      a = parent[a];
    }
  }
  for (auto [x, y] : tree.edges()) {
    int child = parent[x] == y ? x : y;
    out.push_back({{x, y}, cross[child]});
  }
  return out;
}

int TPartition::adhesion(const Graph& host) const {
  int a = 0;
  for (auto& [e, c] : edge_crossings(host)) a = std::max(a, c);
  return a;
}

std::vector<int> bfs_distances(const Graph& g, int r) {
  std::vector<int> dist(g.n(), -1);
  std::queue<int> q;
  dist[r] = 0;
  q.push(r);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbours(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

Layering bfs_layering(const Graph& g, int r) {
  if (!g.contains(r)) throw InvalidInput("root " + std::to_string(r) + " not in graph");
  auto dist = bfs_distances(g, r);
  Layering L;
  L.source = r;
  for (int v = 0; v < g.n(); ++v) {
    if (dist[v] < 0)
      throw HypothesisViolation("graph is disconnected: vertex " + std::to_string(v) + " unreached from " +
                                    std::to_string(r),
                                {v});
    if (dist[v] >= static_cast<int>(L.layers.size())) L.layers.resize(dist[v] + 1);
    L.layers[dist[v]].push_back(v);
  }
  return L;
}

std::vector<std::vector<int>> components_of(const Graph& g, const std::vector<char>& alive) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s] || !alive[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.neighbours(comp[i]))
        if (alive[w] && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  return components_of(g, std::vector<char>(g.n(), 1));
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_connected_subset(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) return false;
  std::vector<char> in(g.n(), 0);
  for (int v : s) in[v] = 1;
  return components_of(g, in).size() == 1;
}

bool is_forest(const Graph& g) {
  return g.m() + connected_components(g).size() == static_cast<std::size_t>(g.n());
}

namespace {

// max over nonempty S of q*e(S) - p*|S| > 0 ? returns such S (maximiser) or empty.
std::vector<int> denser_than(const Graph& g, std::int64_t p, std::int64_t q) {
  const int n = g.n();
  const std::int64_t m = static_cast<std::int64_t>(g.m());
  FlowNetwork net(n + 2);
  const int s = n, t = n + 1;
  for (int v = 0; v < n; ++v) {
    net.add_arc(s, v, q * m);
    net.add_arc(v, t, q * m + 2 * p - q * g.degree(v));
  }
  for (auto [u, v] : g.edges()) net.add_edge(u, v, q);
  std::int64_t cut = net.max_flow(s, t);
  if (cut >= q * m * n) return {};
  auto side = net.source_side(s);
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (side[v]) out.push_back(v);
  return out;
}

std::int64_t inner_edges(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in(g.n(), 0);
  for (int v : s) in[v] = 1;
  std::int64_t e = 0;
  for (int v : s)
    for (int w : g.neighbours(v))
      if (in[w] && v < w) ++e;
  return e;
}

}  // namespace

std::pair<Rational, std::vector<int>> densest_subgraph(const Graph& g) {
  const int n = g.n();
  if (n == 0) return {Rational(0), {}};
  std::vector<int> best(n);
  std::iota(best.begin(), best.end(), 0);
  Rational lambda(static_cast<std::int64_t>(g.m()), n);
  // Dinkelbach iteration: each round strictly increases lambda.
  for (;;) {
    auto s = denser_than(g, lambda.numerator(), lambda.denominator());
    if (s.empty()) break;
    Rational next(inner_edges(g, s), static_cast<std::int64_t>(s.size()));
    if (next <= lambda) break;
    lambda = next;
    best = std::move(s);
  }
  return {lambda, best};
}

Rational mad_exact(const Graph& g) { return 2 * densest_subgraph(g).first; }

Rational mad_enumerate(const Graph& g) {
  const int n = g.n();
  if (n > 20) throw CapExceeded("mad_enumerate", n, 20);
  Rational best(0);
  std::vector<std::uint32_t> nb(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbours(v)) nb[v] |= 1u << w;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::int64_t deg = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) deg += __builtin_popcount(nb[v] & mask);
    Rational r(deg, __builtin_popcount(mask));
    if (r > best) best = r;
  }
  return best;
}

BlockDecomposition blocks_and_cutvertices(const Graph& g) {
  const int n = g.n();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<Edge> estack;
  int timer = 0;
  struct Frame {
    int v, parent;
    std::size_t i;
    int children;
  };
  for (int r = 0; r < n; ++r) {
    if (disc[r] >= 0) continue;
    if (g.degree(r) == 0) {
      disc[r] = timer++;
      out.blocks.push_back({r});
      out.block_edges.push_back({});
      continue;
    }
    std::vector<Frame> st{{r, -1, 0, 0}};
    disc[r] = low[r] = timer++;
    while (!st.empty()) {
      Frame& f = st.back();
      const auto& nb = g.neighbours(f.v);
      if (f.i < nb.size()) {
        int w = nb[f.i++];
        if (disc[w] < 0) {
          estack.emplace_back(f.v, w);
          ++f.children;
          disc[w] = low[w] = timer++;
          st.push_back({w, f.v, 0, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          estack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      st.pop_back();
      if (st.empty()) {
        if (done.children > 1) is_cut[done.v] = 1;
        break;
      }
      Frame& par = st.back();
      low[par.v] = std::min(low[par.v], low[done.v]);
      if (low[done.v] >= disc[par.v]) {
        if (par.parent >= 0) is_cut[par.v] = 1;
        std::vector<Edge> es;
        std::set<int> vs;
        for (;;) {
          Edge e = estack.back();
          estack.pop_back();
          es.push_back({std::min(e.first, e.second), std::max(e.first, e.second)});
          vs.insert(e.first);
          vs.insert(e.second);
          if (e.first == par.v && e.second == done.v) break;
        }
        std::sort(es.begin(), es.end());
        out.blocks.emplace_back(vs.begin(), vs.end());
        out.block_edges.push_back(std::move(es));
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

Contraction contract_set(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) throw InvalidInput("contract_set: empty set");
  for (int v : s)
    if (!g.contains(v)) throw InvalidInput("contract_set: vertex " + std::to_string(v) + " out of range");
  if (!is_connected_subset(g, s)) throw InvalidInput("contract_set: G[S] is not connected");
  std::vector<char> in(g.n(), 0);
  for (int v : s) in[v] = 1;
  const int rep = *std::min_element(s.begin(), s.end());
  Contraction c;
  c.map.assign(g.n(), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (in[v] && v != rep) continue;
    c.map[v] = next++;
  }
  for (int v : s) c.map[v] = c.map[rep];
  c.merged = c.map[rep];
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) {
    int a = c.map[u], b = c.map[v];
    if (a != b) es.emplace_back(a, b);
  }
  c.graph = Graph(next, es);
  return c;
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

Graph grid_graph(int rows, int cols) {
  std::vector<Edge> es;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) es.emplace_back(v, v + 1);
      if (r + 1 < rows) es.emplace_back(v, v + cols);
    }
  return Graph(rows * cols, es);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return Graph(a + b, es);
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), es);
}

}  // namespace dcol
