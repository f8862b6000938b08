#include "dcol/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "dcol/errors.hpp"
#include "dcol/oracle.hpp"
#include "dcol/planar.hpp"

namespace dcol {

namespace {

// Appends S(h,d) rooted at the next free id; returns the root.
int append_standard_defect(int h, int d, int& next, std::vector<Edge>& es) {
  int root = next++;
  if (h == 0) return root;
  for (int i = 0; i <= d; ++i) append_standard_defect(h - 1, d, next, es);
  for (int w = root + 1; w < next; ++w) es.emplace_back(root, w);
  return root;
}

int append_standard_cluster(int h, int c, int& next, std::vector<Edge>& es) {
  int start = next;
  if (h == 1) {
    next += c + 1;
    for (int i = start; i + 1 < next; ++i) es.emplace_back(i, i + 1);
    return start;
  }
  int root = next++;
  for (int i = 0; i < c; ++i) append_standard_cluster(h - 1, c, next, es);
  for (int w = root + 1; w < next; ++w) es.emplace_back(root, w);
  return root;
}

Graph disjoint_copies_with_apex(const Graph& g, int copies) {
  std::vector<Edge> es;
  const int n = g.n();
  for (int i = 0; i < copies; ++i) {
    for (auto [u, v] : g.edges()) es.emplace_back(1 + i * n + u, 1 + i * n + v);
  }
  for (int w = 1; w <= copies * n; ++w) es.emplace_back(0, w);
  return Graph(1 + copies * n, es);
}

}  // namespace

Graph standard_defect(int h, int d) {
  if (h < 0 || d < 0) throw InvalidInput("standard_defect needs h >= 0 and d >= 0");
  std::vector<Edge> es;
  int next = 0;
  append_standard_defect(h, d, next, es);
  return Graph(next, es);
}

Graph standard_cluster(int h, int c) {
  if (h < 1 || c < 1) throw InvalidInput("standard_cluster needs h >= 1 and c >= 1");
  std::vector<Edge> es;
  int next = 0;
  append_standard_cluster(h, c, next, es);
  return Graph(next, es);
}

Embedding standard_cluster_two_embedding(int c) {
  Graph g = standard_cluster(2, c);
  Embedding emb{g, std::vector<std::vector<int>>(g.n())};
  // The c paths are fanned around the root in order.
  for (int v = 1; v < g.n(); ++v) emb.rotation[0].push_back(v);
  for (int i = 0; i < c; ++i) {
    int first = 1 + i * (c + 1), last = first + c;
    for (int v = first; v <= last; ++v) {
      auto& r = emb.rotation[v];
      if (v < last) r.push_back(v + 1);
      r.push_back(0);
      if (v > first) r.push_back(v - 1);
    }
  }
  return emb;
}

Graph kst_star(int s, int t) {
  if (s < 1 || t < 1) throw InvalidInput("kst_star needs s, t >= 1");
  std::vector<Edge> es;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j) es.emplace_back(i, s + j);
  int next = s + t;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      es.emplace_back(i, next);
      es.emplace_back(j, next);
      ++next;
    }
  return Graph(next, es);
}

std::vector<int> HexBoard::arc(int i) const {
  const auto& o = tri.outer;
  int from = static_cast<int>(std::find(o.begin(), o.end(), corners[i]) - o.begin());
  int to = corners[(i + 1) % 4];
  std::vector<int> out;
  for (int p = from;; p = (p + 1) % static_cast<int>(o.size())) {
    out.push_back(o[p]);
    if (o[p] == to) break;
  }
  return out;
}

HexBoard hex_grid(int k) {
  if (k < 2) throw InvalidInput("hex_grid needs k >= 2");
  const int m = k + 1;
  auto id = [m](int i, int j) { return i * m + j; };
  std::vector<Edge> es;
  std::vector<std::array<int, 3>> faces;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (j + 1 < m) es.emplace_back(id(i, j), id(i, j + 1));
      if (i + 1 < m) es.emplace_back(id(i, j), id(i + 1, j));
      if (i + 1 < m && j + 1 < m) {
        es.emplace_back(id(i, j), id(i + 1, j + 1));
        faces.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
        faces.push_back({id(i, j), id(i + 1, j + 1), id(i + 1, j)});
      }
    }
  std::vector<int> outer;
  for (int j = 0; j < m; ++j) outer.push_back(id(0, j));
  for (int i = 1; i < m; ++i) outer.push_back(id(i, m - 1));
  for (int j = m - 2; j >= 0; --j) outer.push_back(id(m - 1, j));
  for (int i = m - 2; i >= 1; --i) outer.push_back(id(i, 0));
  HexBoard b{{Graph(m * m, es), faces, outer}, {id(0, 0), id(0, m - 1), id(m - 1, m - 1), id(m - 1, 0)}, k};
  return b;
}

Graph fan_gadget() {
  // Apex 0 over the path 1..6.
  std::vector<Edge> es;
  for (int v = 1; v <= 6; ++v) es.emplace_back(0, v);
  for (int v = 1; v < 6; ++v) es.emplace_back(v, v + 1);
  return Graph(7, es);
}

Graph outerplanar_gadget() {
  Graph g = fan_gadget();
  if (!find_colouring_defect(g, 2, 1) && is_outerplanar(g)) return g;
  return fig4_search();
}

ListGadget kkn_gadget(int s, int d) {
  if (s < 1 || d < 0) throw InvalidInput("kkn_gadget needs s >= 1 and d >= 0");
  long long vectors = 1;
  for (int i = 0; i < s; ++i) vectors *= s;
  long long t = (static_cast<long long>(d) * s + 1) * vectors;
  if (t > 100000) throw CapExceeded("kkn_gadget", static_cast<int>(std::min<long long>(t, 1 << 30)), 100000);
  ListGadget out;
  out.s = s;
  out.t = static_cast<int>(t);
  std::vector<std::vector<int>> lists;
  // X_i = {i*s, ..., i*s + s - 1}
  for (int i = 0; i < s; ++i) {
    std::vector<int> x(s);
    std::iota(x.begin(), x.end(), i * s);
    lists.push_back(x);
  }
  std::vector<int> digits(s, 0);
  for (long long v = 0; v < vectors; ++v) {
    std::vector<int> l;
    for (int i = 0; i < s; ++i) l.push_back(i * s + digits[i]);
    for (int rep = 0; rep < d * s + 1; ++rep) lists.push_back(l);
    for (int i = 0; i < s && ++digits[i] == s; ++i) digits[i] = 0;
  }
  out.graph = complete_bipartite(s, out.t);
  out.lists = ListAssignment(std::move(lists));
  return out;
}

std::vector<std::vector<int>> cliques_of_size(const Graph& g, int q) {
  std::vector<std::vector<int>> out;
  if (q <= 0) return out;
  std::vector<int> cur;
  std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& cand) {
    if (static_cast<int>(cur.size()) == q) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      int v = cand[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
      if (static_cast<int>(cur.size() + 1 + next.size()) < q) continue;
      cur.push_back(v);
      rec(next);
      cur.pop_back();
    }
  };
  std::vector<int> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  rec(all);
  return out;
}

Graph xkc_family(int k, int c, const std::string& recipe, int cap) {
  if (k < 1 || c < 1) throw InvalidInput("xkc_family needs k >= 1 and c >= 1");
  if (recipe.empty()) throw InvalidInput("xkc_family: empty recipe");
  Graph g;
  if (recipe[0] == 'P')
    g = path_graph(c + 1);
  else if (recipe[0] == 'K')
    g = star_graph(c);
  else
    throw InvalidInput("xkc_family: recipe must start with P or K");
  // The level of the family the current graph belongs to.
  std::vector<std::pair<int, Graph>> history{{1, g}};
  int level = 1;
  for (std::size_t i = 1; i < recipe.size(); ++i) {
    char op = recipe[i];
    if (op == '\'') {
      if (1LL + static_cast<long long>(c) * g.n() > cap) throw CapExceeded("xkc_family", 1 + c * g.n(), cap);
      g = disjoint_copies_with_apex(g, c);
      ++level;
    } else if (op == '+' || op == '#') {
      int target = level + (op == '+' ? 1 : 2);
      int q = op == '+' ? target : target - 1;
      int add = op == '+' ? target * (c - 1) + 1 : (c * c - 1) * (target - 1) + (c + 1);
      auto cl = cliques_of_size(g, q);
      long long size = g.n() + static_cast<long long>(cl.size()) * add;
      if (size > cap) throw CapExceeded("xkc_family", static_cast<int>(std::min<long long>(size, 1 << 30)), cap);
      auto es = g.edges();
      int next = g.n();
      for (const auto& D : cl) {
        for (int j = 0; j < add; ++j) {
          for (int w : D) es.emplace_back(w, next + j);
          if (op == '#' && j + 1 < add) es.emplace_back(next + j, next + j + 1);
        }
        next += add;
      }
      g = Graph(next, es);
      level = target;
    } else {
      throw InvalidInput(std::string("xkc_family: unknown operation '") + op + "'");
    }
  }
  if (level != k)
    throw InvalidInput("xkc_family: recipe reaches level " + std::to_string(level) + ", not " + std::to_string(k));
  return g;
}

Graph gk_circumference_gadget(int k, int c, int cap) {
  if (k < 2 || c < 1) throw InvalidInput("gk_circumference_gadget needs k >= 2 and c >= 1");
  Graph g = path_graph(c + 1);
  for (int level = 3; level <= k; ++level) {
    long long size = (c + 1) + static_cast<long long>(c) * (2 * c - 1) * g.n();
    if (size > cap)
      throw CapExceeded("gk_circumference_gadget", static_cast<int>(std::min<long long>(size, 1 << 30)), cap);
    std::vector<Edge> es;
    for (int i = 0; i < c; ++i) es.emplace_back(i, i + 1);
    int next = c + 1;
    for (int i = 0; i < c; ++i)
      for (int copy = 0; copy < 2 * c - 1; ++copy) {
        for (auto [u, v] : g.edges()) es.emplace_back(next + u, next + v);
        for (int w = 0; w < g.n(); ++w) {
          es.emplace_back(i, next + w);
          es.emplace_back(i + 1, next + w);
        }
        next += g.n();
      }
    g = Graph(next, es);
  }
  return g;
}

namespace {

Embedding embed_or_throw(const Graph& g) {
  auto e = planar_embedding(g);
  if (!e) throw Error("witness part is not planar");
  return *e;
}

}  // namespace

ThicknessWitness thickness_gadget(int n) {
  if (n < 3) throw InvalidInput("thickness_gadget needs n >= 3");
  std::vector<Edge> all, first, second;
  int next = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      all.emplace_back(u, next);
      all.emplace_back(next, v);
      first.emplace_back(u, next);
      second.emplace_back(next, v);
      ++next;
    }
  ThicknessWitness w;
  w.graph = Graph(next, all);
  w.parts.push_back(embed_or_throw(Graph(next, first)));
  w.parts.push_back(embed_or_throw(Graph(next, second)));
  return w;
}

ThicknessWitness standard_thickness_witness(int k, int d) {
  if (k < 1 || d < 0) throw InvalidInput("standard_thickness_witness needs k >= 1 and d >= 0");
  Graph g = standard_defect(2 * k, d);
  // Depth of each vertex in the underlying (d+1)-ary tree.
  std::vector<int> depth(g.n(), 0);
  std::function<int(int, int)> walk = [&](int root, int h) -> int {
    int next = root + 1;
    if (h == 0) return next;
    for (int i = 0; i <= d; ++i) {
      depth[next] = depth[root] + 1;
      next = walk(next, h - 1);
    }
    return next;
  };
  walk(0, 2 * k);
  std::vector<std::vector<Edge>> parts(k);
  for (auto [u, v] : g.edges()) {
    int anc = depth[u] < depth[v] ? u : v;
    parts[k - 1 - depth[anc] / 2].push_back({u, v});
  }
  ThicknessWitness w;
  w.graph = g;
  for (auto& p : parts) w.parts.push_back(embed_or_throw(Graph(g.n(), p)));
  return w;
}

bool is_thickness_witness(const ThicknessWitness& w) {
  std::set<Edge> seen;
  for (const auto& p : w.parts) {
    if (p.graph.n() != w.graph.n() || !p.is_plane()) return false;
    for (auto e : p.graph.edges())
      if (!seen.insert(e).second) return false;
  }
  auto es = w.graph.edges();
  return seen == std::set<Edge>(es.begin(), es.end());
}

namespace {

// Number of edges lying on a cycle of length at most g.
int short_cycle_edges(const Graph& g, int maxlen) {
  int bad = 0;
  for (auto [u, v] : g.edges()) {
    std::vector<int> dist(g.n(), -1), queue{u};
    dist[u] = 0;
    bool hit = false;
    for (std::size_t i = 0; i < queue.size() && !hit; ++i) {
      int x = queue[i];
      if (dist[x] >= maxlen - 1) continue;
      for (int y : g.neighbours(x)) {
        if (x == u && y == v) continue;
        if (dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        if (y == v) {
          hit = true;
          break;
        }
        queue.push_back(y);
      }
    }
    bad += hit;
  }
  return bad;
}

std::optional<std::vector<Edge>> random_pairing(int n, int r, std::mt19937_64& rng) {
  std::vector<int> points;
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < r; ++i) points.push_back(v);
  std::shuffle(points.begin(), points.end(), rng);
  std::set<Edge> es;
  for (std::size_t i = 0; i < points.size(); i += 2) {
    int a = points[i], b = points[i + 1];
    if (a == b) return std::nullopt;
    if (!es.insert({std::min(a, b), std::max(a, b)}).second) return std::nullopt;
  }
  return std::vector<Edge>(es.begin(), es.end());
}

}  // namespace

Graph high_girth_regular(int r, int g, std::uint64_t seed, int n) {
  if (r < 2 || g < 2) throw InvalidInput("high_girth_regular needs r >= 2 and g >= 2");
  if (n <= 0) {
    // Twice the Moore bound for girth g+1.
    long long moore = 1, layer = r;
    int radius = g / 2;
    for (int i = 1; i <= radius; ++i) {
      moore += (g % 2 == 0 && i == radius) ? layer / r : layer;
      layer *= (r - 1);
    }
    if (g % 2 == 0) moore = std::max<long long>(moore, 2);
    n = static_cast<int>(std::max<long long>(2 * moore, r + 1));
  }
  if ((static_cast<long long>(n) * r) % 2) ++n;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::optional<std::vector<Edge>> es;
    for (int tries = 0; tries < 10000 && !es; ++tries) es = random_pairing(n, r, rng);
    if (!es) continue;
    Graph cur(n, *es);
    int score = short_cycle_edges(cur, g);
    for (int step = 0; step < 20000 && score > 0; ++step) {
      auto edges = cur.edges();
      std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
      Edge e1 = edges[pick(rng)], e2 = edges[pick(rng)];
      auto [a, b] = e1;
      auto [c, d] = e2;
      if (a == c || a == d || b == c || b == d) continue;
      if (rng() & 1) std::swap(c, d);
      if (cur.adjacent(a, c) || cur.adjacent(b, d)) continue;
      Graph next = cur.without_edges({e1, e2}).with_edges({{a, c}, {b, d}});
      int s = short_cycle_edges(next, g);
      if (s <= score) {
        cur = std::move(next);
        score = s;
      }
    }
    if (score == 0 && (girth(cur) == 0 || girth(cur) > g)) return cur;
  }
  throw Error("high_girth_regular: retry budget exhausted for r=" + std::to_string(r) + ", g=" + std::to_string(g));
}

Graph line_graph(const Graph& g) {
  auto es = g.edges();
  std::vector<std::vector<int>> inc(g.n());
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    inc[es[i].first].push_back(i);
    inc[es[i].second].push_back(i);
  }
  std::vector<Edge> out;
  for (const auto& l : inc)
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j) out.emplace_back(l[i], l[j]);
  return Graph(static_cast<int>(es.size()), out);
}

namespace {

PlaneTriangulation relabelled(const PlaneTriangulation& t, std::mt19937_64& rng) {
  std::vector<int> perm(t.graph.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  PlaneTriangulation out;
  out.graph = relabel(t.graph, perm);
  for (auto f : t.faces) out.faces.push_back({perm[f[0]], perm[f[1]], perm[f[2]]});
  for (int v : t.outer) out.outer.push_back(perm[v]);
  return out;
}

}  // namespace

PlaneTriangulation random_maximal_outerplanar(int n, std::uint64_t seed) {
  if (n < 3) throw InvalidInput("random_maximal_outerplanar needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Edge> es{{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::array<int, 3>> faces{{0, 1, 2}};
  std::vector<int> outer{0, 1, 2};
  for (int w = 3; w < n; ++w) {
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, outer.size() - 1)(rng);
    int u = outer[i], v = outer[(i + 1) % outer.size()];
    es.emplace_back(u, w);
    es.emplace_back(v, w);
    faces.push_back({u, v, w});
    outer.insert(outer.begin() + static_cast<long>(i) + 1, w);
  }
  return relabelled({Graph(n, es), faces, outer}, rng);
}

PlaneTriangulation random_plane_triangulation(int n, std::uint64_t seed) {
  if (n < 3) throw InvalidInput("random_plane_triangulation needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<std::set<int>> adj(n);
  auto link = [&](int a, int b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  link(0, 1);
  link(1, 2);
  link(0, 2);
  std::vector<std::array<int, 3>> faces{{0, 1, 2}};
  for (int w = 3; w < n; ++w) {
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng);
    auto [a, b, c] = faces[i];
    link(a, w);
    link(b, w);
    link(c, w);
    faces[i] = {a, b, w};
    faces.push_back({b, c, w});
    faces.push_back({c, a, w});
  }
  // Random flips of inner edges to leave the stacked shape.
  auto key = [](int a, int b) { return Edge{std::min(a, b), std::max(a, b)}; };
  std::map<Edge, std::vector<int>> on;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i)
    for (int j = 0; j < 3; ++j) on[key(faces[i][j], faces[i][(j + 1) % 3])].push_back(i);
  std::set<Edge> outer_edges{key(0, 1), key(1, 2), key(0, 2)};
  for (int step = 0; step < 4 * n; ++step) {
    auto it = on.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, on.size() - 1)(rng));
    Edge e = it->first;
    if (outer_edges.count(e) || it->second.size() != 2) continue;
    auto [a, b] = e;
    int f1 = it->second[0], f2 = it->second[1];
    auto third = [&](int f) {
      for (int x : faces[f])
        if (x != a && x != b) return x;
      return -1;
    };
    int c = third(f1), d = third(f2);
    if (adj[c].count(d) || adj[a].size() <= 3 || adj[b].size() <= 3) continue;
    adj[a].erase(b);
    adj[b].erase(a);
    link(c, d);
    auto drop = [&](Edge k, int f) {
      auto& v = on[k];
      v.erase(std::find(v.begin(), v.end(), f));
    };
    // f1 = (a,b,c) becomes (a,c,d); f2 = (a,b,d) becomes (b,c,d).
    drop(key(b, c), f1);
    drop(key(a, d), f2);
    on.erase(e);
    faces[f1] = {a, c, d};
    faces[f2] = {b, c, d};
    on[key(a, d)].push_back(f1);
    on[key(b, c)].push_back(f2);
    on[key(c, d)] = {f1, f2};
  }
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v)
    for (int w : adj[v])
      if (v < w) es.emplace_back(v, w);
  // The initial triangle bounds the outer face; drop it from the inner list.
  PlaneTriangulation t{Graph(n, es), {}, {0, 1, 2}};
  for (auto f : faces) {
    auto s = f;
    std::sort(s.begin(), s.end());
    if (!(s[0] == 0 && s[1] == 1 && s[2] == 2)) t.faces.push_back(f);
  }
  if (n == 3) t.faces = {{0, 1, 2}};
  return relabelled(t, rng);
}

Graph random_planar(int n, double keep, std::uint64_t seed) {
  auto t = random_plane_triangulation(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::bernoulli_distribution coin(keep);
  std::vector<Edge> es;
  for (auto e : t.graph.edges())
    if (coin(rng)) es.push_back(e);
  return Graph(n, es);
}

Graph random_bounded_degree(int n, int max_degree, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> deg(n, 0);
  std::set<Edge> es;
  long long target = static_cast<long long>(density * n * max_degree / 2);
  for (long long tries = 0; tries < 20 * target + 100 && static_cast<long long>(es.size()) < target; ++tries) {
    int a = pick(rng), b = pick(rng);
    if (a == b || deg[a] >= max_degree || deg[b] >= max_degree) continue;
    if (!es.insert({std::min(a, b), std::max(a, b)}).second) continue;
    ++deg[a];
    ++deg[b];
  }
  return Graph(n, std::vector<Edge>(es.begin(), es.end()));
}

Graph random_subcubic(int n, std::uint64_t seed) { return random_bounded_degree(n, 3, 0.9, seed); }

}  // namespace dcol
