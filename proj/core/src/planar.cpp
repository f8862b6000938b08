#include "dcol/planar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "dcol/errors.hpp"
#include "dcol/oracle.hpp"

namespace dcol {

Colouring outerplanar_two_colour(const Graph& g) {
  Colouring chi(g.n());
  std::vector<int> layer(g.n(), -1), root(g.n(), -1);
  for (int r = 0; r < g.n(); ++r) {
    if (layer[r] >= 0) continue;
    std::vector<int> queue{r};
    layer[r] = 0;
    root[r] = r;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int w : g.neighbours(queue[i]))
        if (layer[w] < 0) {
          layer[w] = layer[queue[i]] + 1;
          root[w] = r;
          queue.push_back(w);
        }
  }
  for (int v = 0; v < g.n(); ++v) chi[v] = layer[v] % 2;
  auto cert = audit(g, chi);
  if (cert.all_paths) return chi;
  // A bad monochromatic component lies inside one layer of one BFS tree.
  for (const auto& comp : cert.components) {
    if (comp.size() < 3) continue;
    Graph sub = g.induced(comp);
    if (sub.max_degree() <= 2 && sub.m() + 1 == comp.size()) continue;
    int v = comp.front();
    throw HypothesisViolation("outerplanarity hypothesis violated: layer " + std::to_string(layer[v]) +
                                  " of the BFS layering from " + std::to_string(root[v]) +
                                  " contains a monochromatic component that is not a path",
                              comp);
  }
  throw HypothesisViolation("outerplanarity hypothesis violated");
}

namespace {

// Poh's recursion on a simple planar graph with a designated edge v1v2.
Colouring poh_rec(const Graph& g, int v1, int v2) {
  const int n = g.n();
  Colouring chi(n);
  if (n <= 4) {
    if (n == 0) return chi;
    if (v1 < 0) {
      v1 = 0;
      v2 = n > 1 ? 1 : -1;
    }
    for (int v = 0; v < n; ++v) chi[v] = 2;
    chi[v1] = 0;
    if (v2 >= 0) chi[v2] = 1;
    return chi;
  }
  auto emb = maximal_planar_supergraph(g);
  if (!emb) throw InvalidInput("poh_three_colour: input graph is not planar");
  const Graph& t = emb->graph;
  if (v1 < 0) {
    v1 = 0;
    v2 = t.neighbours(0).front();
  }
  if (!t.adjacent(v1, v2)) throw InvalidInput("poh_three_colour: designated pair is not an edge");

  // Faces v1 a v2 and v1 b v2 flank v2 in the rotation at v1.
  const auto& r1 = emb->rotation[v1];
  int i2 = static_cast<int>(std::find(r1.begin(), r1.end(), v2) - r1.begin());
  int deg1 = static_cast<int>(r1.size());
  int a = r1[(i2 + 1) % deg1], b = r1[(i2 + deg1 - 1) % deg1];

  // G' = T - v1v2 + x with x adjacent to v1, v2, a, b.
  const int x = n;
  std::vector<Edge> es;
  for (auto e : t.edges())
    if (!(e == Edge{std::min(v1, v2), std::max(v1, v2)})) es.push_back(e);
  for (int w : {v1, v2, a, b}) es.emplace_back(w, x);
  Graph gp(n + 1, es);
  std::vector<std::vector<int>> rot(emb->rotation);
  rot.emplace_back();
  std::replace(rot[v1].begin(), rot[v1].end(), v2, x);
  std::replace(rot[v2].begin(), rot[v2].end(), v1, x);
  for (int w : {a, b}) {
    auto& r = rot[w];
    int p = static_cast<int>(std::find(r.begin(), r.end(), v1) - r.begin());
    int q = static_cast<int>(std::find(r.begin(), r.end(), v2) - r.begin());
    int len = static_cast<int>(r.size());
    int at = ((p + 1) % len == q) ? q : p;  // insert between the consecutive pair
    r.insert(r.begin() + at, x);
  }
  Embedding gpe{gp, rot};
  gpe.rotation[x] = {v1, a, v2, b};
  if (!gpe.is_plane()) gpe.rotation[x] = {v1, b, v2, a};
  if (!gpe.is_plane()) throw Error("poh_three_colour: failed to embed the apex vertex");

  // C = x plus a shortest a-b path avoiding v1, v2, x (smallest-id parents).
  std::vector<int> parent(n + 1, -2), queue{a};
  parent[a] = -1;
  for (std::size_t i = 0; i < queue.size() && parent[b] == -2; ++i)
    for (int w : gp.neighbours(queue[i])) {
      if (w == v1 || w == v2 || w == x || parent[w] != -2) continue;
      parent[w] = queue[i];
      queue.push_back(w);
    }
  if (parent[b] == -2) throw Error("poh_three_colour: no cycle through a-x-b");
  std::vector<int> cyc{x};
  {
    std::vector<int> path;
    for (int v = b; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());  // a ... b
    cyc.insert(cyc.end(), path.begin(), path.end());
  }
  const int len = static_cast<int>(cyc.size());
  std::vector<char> on_c(n + 1, 0);
  for (int v : cyc) on_c[v] = 1;

  // Side of each neighbour hanging off C, read from the rotations.
  std::vector<int> side(n + 1, -1);
  for (int j = 0; j < len; ++j) {
    int c = cyc[j], prev = cyc[(j + len - 1) % len], next = cyc[(j + 1) % len];
    const auto& r = gpe.rotation[c];
    int deg = static_cast<int>(r.size());
    int s = static_cast<int>(std::find(r.begin(), r.end(), next) - r.begin());
    int cur = 0;
    for (int step = 1; step < deg; ++step) {
      int w = r[(s + step) % deg];
      if (w == prev) {
        cur = 1;
        continue;
      }
      if (on_c[w]) continue;
      if (side[w] >= 0 && side[w] != cur) throw Error("poh_three_colour: inconsistent sides of C");
      side[w] = cur;
    }
  }
  // Spread sides over the components of G' - C.
  std::vector<char> alive(n + 1, 1);
  for (int v : cyc) alive[v] = 0;
  for (const auto& comp : components_of(gp, alive)) {
    int s = -1;
    for (int v : comp)
      if (side[v] >= 0) s = side[v];
    if (s < 0) throw Error("poh_three_colour: component detached from C");
    for (int v : comp) side[v] = s;
  }
  if (side[v1] == side[v2]) throw Error("poh_three_colour: C does not separate v1 and v2");

  Colouring sub[2];
  std::vector<int> local[2];
  int xi[2];
  for (int i = 0; i < 2; ++i) {
    int want = side[i == 0 ? v1 : v2];
    std::vector<int>& vs = local[i];
    for (int v = 0; v < n; ++v)
      if (!on_c[v] && side[v] == want) vs.push_back(v);
    std::vector<int> pos(n + 1, -1);
    for (int k = 0; k < static_cast<int>(vs.size()); ++k) pos[vs[k]] = k;
    xi[i] = static_cast<int>(vs.size());
    for (int v : cyc) pos[v] = xi[i];
    std::vector<Edge> les;
    for (auto [u, w] : gp.edges()) {
      if (pos[u] < 0 || pos[w] < 0 || pos[u] == pos[w]) continue;
      les.emplace_back(pos[u], pos[w]);
    }
    Graph gi(xi[i] + 1, les);
    int vi = pos[i == 0 ? v1 : v2];
    sub[i] = poh_rec(gi, vi, xi[i]);
  }
  // Permute the second colouring: x2 -> colour of x1, v2 -> the third colour.
  int X = sub[0][xi[0]], V = sub[0][static_cast<int>(std::find(local[0].begin(), local[0].end(), v1) - local[0].begin())];
  int T = 3 - X - V;
  int x2 = sub[1][xi[1]];
  int v2c = sub[1][static_cast<int>(std::find(local[1].begin(), local[1].end(), v2) - local[1].begin())];
  int perm[3];
  perm[x2] = X;
  perm[v2c] = T;
  perm[3 - x2 - v2c] = V;
  for (int k = 0; k < static_cast<int>(local[0].size()); ++k) chi[local[0][k]] = sub[0][k];
  for (int k = 0; k < static_cast<int>(local[1].size()); ++k) chi[local[1][k]] = perm[sub[1][k]];
  for (int v : cyc)
    if (v != x) chi[v] = X;
  return chi;
}

}  // namespace

Colouring poh_three_colour_graph(const Graph& g, int v1, int v2) {
  if ((v1 < 0) != (v2 < 0)) throw InvalidInput("poh_three_colour: give both ends of the edge or neither");
  if (v1 >= 0 && (!g.contains(v1) || !g.contains(v2) || !g.adjacent(v1, v2)))
    throw InvalidInput("poh_three_colour: designated pair is not an edge");
  return poh_rec(g, v1, v2);
}

Colouring poh_three_colour(const PlaneTriangulation& t, int v1, int v2) {
  t.validate();
  return poh_three_colour_graph(t.graph, v1, v2);
}

Colouring poh_three_colour(const PlaneTriangulation& t) {
  t.validate();
  return poh_three_colour_graph(t.graph, t.outer[0], t.outer[1]);
}

int genus_defect_bound(int g) {
  if (g < 0) throw InvalidInput("genus must be non-negative");
  long long six = 6LL * g;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(six)));
  while (r * r < six) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= six) --r;
  return static_cast<int>(std::max<long long>(12, r + 7));
}

Colouring genus_three_colour(const Graph& g, int genus) {
  const int d = genus_defect_bound(genus);
  const int n = g.n();
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = {g.neighbours(v).begin(), g.neighbours(v).end()};
  std::vector<char> alive(n, 1);
  struct Step {
    int v;       // deleted vertex, or -1
    Edge e;      // deleted edge when v < 0
  };
  std::vector<Step> steps;
  Colouring chi(n);
  for (;;) {
    int low = -1;
    for (int v = 0; v < n && low < 0; ++v)
      if (alive[v] && adj[v].size() <= 2) low = v;
    if (low >= 0) {
      for (int w : adj[low]) adj[w].erase(low);
      steps.push_back({low, {}});
      alive[low] = 0;
      continue;
    }
    bool removed = false;
    for (int v = 0; v < n && !removed; ++v) {
      if (!alive[v] || static_cast<int>(adj[v].size()) > d) continue;
      for (int w : adj[v])
        if (static_cast<int>(adj[w].size()) <= d) {
          adj[v].erase(w);
          adj[w].erase(v);
          steps.push_back({-1, {v, w}});
          removed = true;
          break;
        }
    }
    if (removed) continue;
    std::vector<int> A, B;
    for (int v = 0; v < n; ++v)
      if (alive[v]) (static_cast<int>(adj[v].size()) <= d ? A : B).push_back(v);
    long long lhs = static_cast<long long>(d - 11) * static_cast<long long>(B.size());
    long long rhs = std::max(12LL * (genus - 2), 0LL);
    if (lhs > rhs)
      throw HypothesisViolation("genus hypothesis violated: (d-11)|B| = " + std::to_string(lhs) +
                                    " exceeds max{12(g-2),0} = " + std::to_string(rhs),
                                B);
    for (int v : A) chi[v] = 0;
    std::size_t red = (B.size() + 1) / 2;
    for (std::size_t i = 0; i < B.size(); ++i) chi[B[i]] = i < red ? 1 : 2;
    break;
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->v < 0) {
      adj[it->e.first].insert(it->e.second);
      adj[it->e.second].insert(it->e.first);
      continue;
    }
    int v = it->v;
    alive[v] = 1;
    for (int w : g.neighbours(v))
      if (alive[w]) {
        adj[v].insert(w);
        adj[w].insert(v);
      }
    bool used[3] = {false, false, false};
    for (int w : adj[v]) used[chi[w]] = true;
    int c = 0;
    while (used[c]) ++c;
    chi[v] = c;
  }
  return chi;
}

GaleWitness gale_extract(const HexBoard& board, const Colouring& chi) {
  const Graph& g = board.tri.graph;
  const int n = g.n();
  if (chi.n() != n) throw InvalidInput("gale_extract: colouring size differs from graph");
  for (int c : chi.colour)
    if (c != 0 && c != 1) throw InvalidInput("gale_extract: colouring must use colours 0 and 1");
  // New vertices w, x, y, z on arcs 0, 1, 2, 3.
  const int W = n, X = n + 1, Y = n + 2, Z = n + 3;
  std::vector<int> col(chi.colour);
  col.push_back(0);
  col.push_back(1);
  col.push_back(0);
  col.push_back(1);
  std::vector<std::array<int, 3>> faces(board.tri.faces.begin(), board.tri.faces.end());
  const int apex[4] = {W, X, Y, Z};
  std::vector<std::vector<int>> arcs;
  for (int i = 0; i < 4; ++i) {
    arcs.push_back(board.arc(i));
    const auto& arc = arcs.back();
    for (std::size_t j = 0; j + 1 < arc.size(); ++j) faces.push_back({arc[j], arc[j + 1], apex[i]});
  }
  const int a = board.corners[0], b = board.corners[1], c = board.corners[2], d = board.corners[3];
  std::vector<int> special;
  special.push_back(static_cast<int>(faces.size()));
  faces.push_back({a, W, Z});
  special.push_back(static_cast<int>(faces.size()));
  faces.push_back({b, X, W});
  special.push_back(static_cast<int>(faces.size()));
  faces.push_back({c, X, Y});
  special.push_back(static_cast<int>(faces.size()));
  faces.push_back({d, Y, Z});

  // Dual adjacency across bichromatic edges.
  std::map<Edge, std::vector<int>> on;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (int j = 0; j < 3; ++j) {
      int u = faces[f][j], v = faces[f][(j + 1) % 3];
      on[{std::min(u, v), std::max(u, v)}].push_back(f);
    }
  std::vector<std::vector<int>> h(faces.size());
  for (const auto& [e, fs] : on) {
    if (fs.size() != 2 || col[e.first] == col[e.second]) continue;
    h[fs[0]].push_back(fs[1]);
    h[fs[1]].push_back(fs[0]);
  }
  GaleWitness out;
  out.special_faces = special;
  for (const auto& nb : h) out.dual_degrees.push_back(static_cast<int>(nb.size()));
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    bool sp = std::find(special.begin(), special.end(), f) != special.end();
    int deg = out.dual_degrees[f];
    if (sp ? deg != 1 : (deg != 0 && deg != 2)) throw Error("gale_extract: dual degree invariant fails");
  }
  // Walk the dual path from A.
  std::vector<int> route{special[0]};
  int prev = -1, cur = special[0];
  while (true) {
    int next = -1;
    for (int f : h[cur])
      if (f != prev) next = f;
    if (next < 0) break;
    prev = cur;
    cur = next;
    route.push_back(cur);
    if (h[cur].size() == 1) break;
  }
  int end = cur;
  // A pairs with B (colour 1 walk from z to x) or D (colour 0 walk from w to y).
  int colour, from_arc, to_arc;
  if (end == special[1]) {
    colour = 1;
    from_arc = 3;
    to_arc = 1;
  } else if (end == special[3]) {
    colour = 0;
    from_arc = 0;
    to_arc = 2;
  } else {
    throw Error("gale_extract: dual path from A ends at C");
  }
  // Each crossed edge has one end of the walk colour; consecutive ends share a face.
  std::vector<int> walk;
  for (std::size_t i = 0; i + 1 < route.size(); ++i) {
    const auto& f = faces[route[i]];
    const auto& g2 = faces[route[i + 1]];
    for (int j = 0; j < 3; ++j) {
      int u = f[j], v = f[(j + 1) % 3];
      if (col[u] == col[v]) continue;
      bool shared = std::count(g2.begin(), g2.end(), u) && std::count(g2.begin(), g2.end(), v);
      if (!shared) continue;
      int end_v = col[u] == colour ? u : v;
      if (walk.empty() || walk.back() != end_v) walk.push_back(end_v);
      break;
    }
  }
  std::vector<char> in_from(n + 4, 0), in_to(n + 4, 0);
  for (int v : arcs[from_arc]) in_from[v] = 1;
  for (int v : arcs[to_arc]) in_to[v] = 1;
  int last_from = -1;
  for (int i = 0; i < static_cast<int>(walk.size()); ++i) {
    if (walk[i] < n && in_from[walk[i]]) last_from = i;
    if (walk[i] < n && in_to[walk[i]] && last_from >= 0) {
      std::vector<int> seg(walk.begin() + last_from, walk.begin() + i + 1);
      // Shortcut repeated vertices.
      std::vector<int> path;
      std::map<int, std::size_t> at;
      for (int v : seg) {
        auto it = at.find(v);
        if (it != at.end()) {
          for (std::size_t k = it->second + 1; k < path.size(); ++k) at.erase(path[k]);
          path.resize(it->second + 1);
          continue;
        }
        at[v] = path.size();
        path.push_back(v);
      }
      out.path = path;
      out.colour = colour;
      out.from_arc = from_arc;
      out.to_arc = to_arc;
      return out;
    }
  }
  throw Error("gale_extract: walk does not connect the arcs");
}

Graph fig4_search(int max_vertices) {
  if (max_vertices > 8) throw CapExceeded("fig4_search", max_vertices, 8);
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int P = static_cast<int>(pairs.size());
    int max_m = n >= 2 ? std::min(P, 2 * n - 3) : 0;
    for (int m = 0; m <= max_m; ++m) {
      std::vector<int> idx(m);
      std::iota(idx.begin(), idx.end(), 0);
      for (;;) {
        std::vector<Edge> es;
        for (int i : idx) es.push_back(pairs[i]);
        Graph g(n, es);
        if (!find_colouring_defect(g, 2, 1) && is_outerplanar(g)) return g;
        int i = m - 1;
        while (i >= 0 && idx[i] == P - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  throw CapExceeded("fig4_search: no witness", max_vertices, max_vertices);
}

}  // namespace dcol
