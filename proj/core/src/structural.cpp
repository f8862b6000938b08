#include "dcol/structural.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "dcol/flow.hpp"

namespace dcol {

namespace {

std::vector<int> flatten_edges(const std::vector<Edge>& es) {
  std::vector<int> out;
  for (auto [u, v] : es) {
    out.push_back(u);
    out.push_back(v);
  }
  return out;
}

FlowNetwork unit_network(const Graph& g, int extra = 0) {
  FlowNetwork net(g.n() + extra);
  for (auto [u, v] : g.edges()) net.add_edge(u, v, 1);
  return net;
}

// Gusfield's cut tree for any graph; components hang off vertex 0 with weight 0.
GomoryHuTree gusfield(const Graph& g) {
  const int n = g.n();
  GomoryHuTree t;
  t.parent.assign(n, 0);
  t.weight.assign(n, 0);
  if (n == 0) return t;
  FlowNetwork net = unit_network(g);
  for (int s = 1; s < n; ++s) {
    int sink = t.parent[s];
    net.reset();
    std::int64_t f = net.max_flow(s, sink);
    auto side = net.source_side(s);
    t.weight[s] = f;
    for (int i = 0; i < n; ++i)
      if (i != s && side[i] && t.parent[i] == sink) t.parent[i] = s;
    if (side[t.parent[sink]]) {
      t.parent[s] = t.parent[sink];
      t.parent[sink] = s;
      t.weight[s] = t.weight[sink];
      t.weight[sink] = f;
    }
  }
  t.parent[0] = -1;
  t.weight[0] = 0;
  return t;
}

std::vector<int> depths(const GomoryHuTree& t) {
  std::vector<int> d(t.n(), -1);
  for (int v = 0; v < t.n(); ++v) {
    std::vector<int> chain;
    int x = v;
    while (x >= 0 && d[x] < 0) {
      chain.push_back(x);
      x = t.parent[x];
    }
    int base = x < 0 ? -1 : d[x];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) d[*it] = ++base;
  }
  return d;
}

// Drops the loops of a walk so that it becomes a path with the same ends.
std::vector<int> shortcut(const std::vector<int>& walk) {
  std::vector<int> out;
  std::map<int, std::size_t> at;
  for (int v : walk) {
    auto it = at.find(v);
    if (it != at.end()) {
      for (std::size_t i = it->second + 1; i < out.size(); ++i) at.erase(out[i]);
      out.resize(it->second + 1);
      continue;
    }
    at[v] = out.size();
    out.push_back(v);
  }
  return out;
}

// The path packing from a component of the cut forest with t vertices.
ImmersionCertificate pack_paths(const Graph& g, std::vector<int> branch) {
  const int t = static_cast<int>(branch.size());
  const int n = g.n(), w = n;
  const int x = branch[0];
  FlowNetwork net(n + 1);
  std::map<int, Edge> arc_edge;
  for (auto [u, v] : g.edges()) arc_edge[net.add_edge(u, v, 1)] = {u, v};
  for (int i = 1; i < t; ++i) net.add_arc(branch[i], w, t - 1);
  std::int64_t f = net.max_flow(x, w);
  if (f < static_cast<std::int64_t>(t - 1) * (t - 1))
    throw Error("immersion_tpartition: path packing found only " + std::to_string(f) + " paths");
  // Unit flow arcs, oriented; w is entered from each branch vertex t-1 times.
  std::vector<std::vector<int>> out(n + 1);
  for (auto& [id, e] : arc_edge) {
    std::int64_t fl = net.flow_on(id);
    if (fl > 0) out[e.first].push_back(e.second);
    if (fl < 0) out[e.second].push_back(e.first);
  }
  for (int i = 1; i < t; ++i)
    for (int j = 1; j < t; ++j) out[branch[i]].push_back(w);
  std::vector<int> index(n, -1);
  for (int i = 1; i < t; ++i) index[branch[i]] = i;
  std::vector<std::vector<std::vector<int>>> ending(t);
  for (int p = 0; p < (t - 1) * (t - 1); ++p) {
    std::vector<int> walk{x};
    int cur = x;
    while (cur != w) {
      if (out[cur].empty()) throw Error("immersion_tpartition: flow decomposition stalled");
      int next = out[cur].back();
      out[cur].pop_back();
      cur = next;
      if (cur != w) walk.push_back(cur);
    }
    walk = shortcut(walk);
    ending[index[walk.back()]].push_back(walk);
  }
  // paths[i][j] for j in 1..t-1: x to branch[i]; P_{i,i} joins branch[i] and x.
  ImmersionCertificate c;
  c.branch = branch;
  for (int i = 1; i < t; ++i)
    if (static_cast<int>(ending[i].size()) != t - 1) throw Error("immersion_tpartition: unbalanced path packing");
  auto path_to = [&](int i, int j) -> const std::vector<int>& { return ending[i][j - 1]; };
  for (int a = 0; a < t; ++a)
    for (int b = a + 1; b < t; ++b) {
      std::vector<int> walk;
      if (a == 0) {
        walk = path_to(b, b);
      } else {
        const auto& pa = path_to(a, b);
        const auto& pb = path_to(b, a);
        walk.assign(pa.rbegin(), pa.rend());
        walk.insert(walk.end(), pb.begin() + 1, pb.end());
      }
      c.paths.push_back(shortcut(walk));
    }
  return c;
}

}  // namespace

std::int64_t min_edge_cut(const Graph& g, int s, int t) {
  if (!g.contains(s) || !g.contains(t) || s == t) throw InvalidInput("min_edge_cut: need two distinct vertices");
  FlowNetwork net = unit_network(g);
  return net.max_flow(s, t);
}

Graph GomoryHuTree::tree() const {
  std::vector<Edge> es;
  for (int v = 0; v < n(); ++v)
    if (parent[v] >= 0) es.emplace_back(v, parent[v]);
  return Graph(n(), es);
}

std::vector<std::tuple<int, int, std::int64_t>> GomoryHuTree::edges() const {
  std::vector<std::tuple<int, int, std::int64_t>> out;
  for (int v = 0; v < n(); ++v)
    if (parent[v] >= 0) out.emplace_back(v, parent[v], weight[v]);
  return out;
}

std::int64_t GomoryHuTree::min_cut(int u, int v) const {
  auto d = depths(*this);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  while (u != v) {
    if (d[u] < d[v]) std::swap(u, v);
    best = std::min(best, weight[u]);
    u = parent[u];
  }
  return best;
}

std::vector<int> GomoryHuTree::side(int v) const {
  std::vector<std::vector<int>> kids(n());
  for (int x = 0; x < n(); ++x)
    if (parent[x] >= 0) kids[parent[x]].push_back(x);
  std::vector<int> out{v};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int c : kids[out[i]]) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

GomoryHuTree gomory_hu(const Graph& g) {
  if (!is_connected(g)) throw InvalidInput("gomory_hu: graph is disconnected");
  return gusfield(g);
}

bool is_immersion_certificate(const Graph& g, const ImmersionCertificate& c) {
  const int t = static_cast<int>(c.branch.size());
  if (static_cast<int>(c.paths.size()) != t * (t - 1) / 2) return false;
  std::set<int> br;
  for (int v : c.branch) {
    if (!g.contains(v)) return false;
    br.insert(v);
  }
  if (static_cast<int>(br.size()) != t) return false;
  std::set<Edge> used;
  std::size_t p = 0;
  for (int a = 0; a < t; ++a)
    for (int b = a + 1; b < t; ++b, ++p) {
      const auto& path = c.paths[p];
      if (path.size() < 2 || path.front() != c.branch[a] || path.back() != c.branch[b]) return false;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int u = path[i], v = path[i + 1];
        if (!g.contains(u) || !g.contains(v) || !g.adjacent(u, v)) return false;
        if (!used.insert({std::min(u, v), std::max(u, v)}).second) return false;
      }
    }
  return true;
}

TPartition immersion_tpartition(const Graph& g, int t) {
  if (t < 2) throw InvalidInput("immersion_tpartition: t must be at least 2");
  const int n = g.n();
  TPartition out;
  if (n == 0) return out;
  const std::int64_t tau = static_cast<std::int64_t>(t - 1) * (t - 1);
  GomoryHuTree f = gusfield(g);
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  for (int v = 0; v < n; ++v)
    if (f.parent[v] >= 0 && f.weight[v] >= tau) root[find(v)] = find(f.parent[v]);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> bags;
  for (auto& [r, vs] : groups) bags.push_back(vs);
  std::sort(bags.begin(), bags.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (const auto& b : bags)
    if (static_cast<int>(b.size()) >= t) throw ImmersionFound(pack_paths(g, {b.begin(), b.begin() + t}));
  std::vector<int> node(n);
  for (int i = 0; i < static_cast<int>(bags.size()); ++i)
    for (int v : bags[i]) node[v] = i;
  std::vector<Edge> tes;
  for (int v = 0; v < n; ++v)
    if (f.parent[v] >= 0 && node[v] != node[f.parent[v]]) tes.emplace_back(node[v], node[f.parent[v]]);
  out.tree = Graph(static_cast<int>(bags.size()), tes);
  out.bags = std::move(bags);
  out.validate(g);
  if (out.adhesion(g) >= tau) throw Error("immersion_tpartition: adhesion recount exceeds the cut tree weights");
  return out;
}

Colouring tpartition_two_colour(const Graph& g, const TPartition& tp, int k) {
  if (k < 0) throw InvalidInput("tpartition_two_colour: k must be non-negative");
  tp.validate(g);
  const int n = g.n();
  std::vector<int> node(n, -1);
  for (int x = 0; x < static_cast<int>(tp.bags.size()); ++x) {
    if (tp.bags[x].size() > 1) throw InvalidInput("tpartition_two_colour: bags must hold at most one vertex");
    for (int v : tp.bags[x]) node[v] = x;
  }
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = {g.neighbours(v).begin(), g.neighbours(v).end()};
  std::vector<char> alive(n, 1);
  int left = n;
  struct Op {
    int v;       // removed vertex, or -1 for an edge
    int nbr;     // its neighbour at removal, or -1
  };
  std::vector<Op> ops;
  auto small = [&](int v) { return static_cast<int>(adj[v].size()) <= k; };
  for (;;) {
    if (left <= 2) break;
    int low = -1;
    for (int v = 0; v < n && low < 0; ++v)
      if (alive[v] && adj[v].size() <= 1) low = v;
    if (low >= 0) {
      int nb = adj[low].empty() ? -1 : *adj[low].begin();
      if (nb >= 0) adj[nb].erase(low);
      adj[low].clear();
      alive[low] = 0;
      --left;
      ops.push_back({low, nb});
      continue;
    }
    bool cut = false;
    for (int v = 0; v < n && !cut; ++v) {
      if (!alive[v] || !small(v)) continue;
      for (int w : adj[v])
        if (w > v && small(w)) {
          adj[v].erase(w);
          adj[w].erase(v);
          cut = true;
          break;
        }
    }
    if (cut) continue;
    std::vector<int> large;
    for (int v = 0; v < n; ++v)
      if (alive[v] && !small(v)) large.push_back(v);
    if (large.empty()) break;
    // Leaf u of the subtree X spanned by the large vertices.
    const Graph& tree = tp.tree;
    const int tn = tree.n();
    std::vector<char> is_large(tn, 0);
    for (int v : large) is_large[node[v]] = 1;
    int r = node[large.front()];
    std::vector<int> parent(tn, -1), order{r};
    std::vector<char> seen(tn, 0);
    seen[r] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int y : tree.neighbours(order[i]))
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = order[i];
          order.push_back(y);
        }
    std::vector<char> in_x(tn, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (is_large[*it]) in_x[*it] = 1;
      else
        for (int y : tree.neighbours(*it))
          if (parent[y] == *it && in_x[y]) in_x[*it] = 1;
    int u = -1, xdeg_u = 0;
    for (int x = 0; x < tn && u < 0; ++x) {
      if (!in_x[x]) continue;
      int d = 0;
      for (int y : tree.neighbours(x)) d += in_x[y];
      if (d <= 1) {
        u = x;
        xdeg_u = d;
      }
    }
    int v = -1;
    for (int y : tree.neighbours(u))
      if (xdeg_u == 0 || in_x[y]) {
        v = y;
        break;
      }
    // Side of u in T - uv.
    std::vector<char> side(tn, 0);
    std::vector<int> st{u};
    side[u] = 1;
    while (!st.empty()) {
      int a = st.back();
      st.pop_back();
      for (int b : tree.neighbours(a))
        if (!side[b] && !(a == u && b == v)) {
          side[b] = 1;
          st.push_back(b);
        }
    }
    std::vector<Edge> crossing;
    for (int a = 0; a < n; ++a)
      if (alive[a])
        for (int b : adj[a])
          if (a < b && side[node[a]] != side[node[b]]) crossing.emplace_back(a, b);
    if (static_cast<int>(crossing.size()) <= k) throw Error("tpartition_two_colour: reduction stalled");
    throw HypothesisViolation("adhesion hypothesis violated: tree edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " is crossed by " + std::to_string(crossing.size()) + " > " + std::to_string(k) +
                                  " edges",
                              flatten_edges(crossing));
  }
  Colouring chi(n, 0);
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (alive[v]) rest.push_back(v);
  if (rest.size() == 2 && adj[rest[0]].count(rest[1])) chi[rest[1]] = 1;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) chi[it->v] = it->nbr < 0 ? 0 : 1 - chi[it->nbr];
  if (audit(g, chi).defect > k) throw Error("tpartition_two_colour: audit found defect above k");
  return chi;
}

Colouring immersion_two_colour(const Graph& g, int t) {
  TPartition tp = immersion_tpartition(g, t);
  const int n = g.n();
  if (n == 0) return Colouring(0);
  auto bag = tp.bag_of(n);
  std::vector<Edge> qe;
  for (auto [u, v] : g.edges())
    if (bag[u] != bag[v]) qe.emplace_back(bag[u], bag[v]);
  Graph q(tp.tree.n(), qe);
  TPartition qt;
  qt.tree = tp.tree;
  for (int x = 0; x < q.n(); ++x) qt.bags.push_back({x});
  Colouring cq = tpartition_two_colour(q, qt, (t - 1) * (t - 1) - 1);
  Colouring chi(n);
  for (int v = 0; v < n; ++v) chi[v] = cq[bag[v]];
  std::int64_t cube = static_cast<std::int64_t>(t - 1) * (t - 1) * (t - 1);
  if (audit(g, chi).defect >= cube) throw Error("immersion_two_colour: audit found defect at least (t-1)^3");
  return chi;
}

ConnectedSubgraph minimal_connected_subgraph(const Graph& g, const std::vector<int>& a_in) {
  if (a_in.empty()) throw InvalidInput("minimal_connected_subgraph: A is empty");
  std::vector<int> a = a_in;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  for (int v : a)
    if (!g.contains(v)) throw InvalidInput("minimal_connected_subgraph: vertex out of range");
  const int n = g.n(), k = static_cast<int>(a.size());
  // Union of BFS-tree paths to a[0].
  std::vector<int> parent(n, -2);
  std::vector<int> order{a[0]};
  parent[a[0]] = -1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : g.neighbours(order[i]))
      if (parent[w] == -2) {
        parent[w] = order[i];
        order.push_back(w);
      }
  std::vector<char> in(n, 0), in_a(n, 0);
  for (int v : a) {
    if (parent[v] == -2) throw InvalidInput("minimal_connected_subgraph: A is not within one component");
    in_a[v] = 1;
    for (int x = v; x >= 0 && !in[x]; x = parent[x]) in[x] = 1;
  }
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> set;
    for (int v = 0; v < n; ++v)
      if (in[v]) set.push_back(v);
    for (int v : set) {
      if (in_a[v]) continue;
      std::vector<int> rest;
      for (int x : set)
        if (x != v && in[x]) rest.push_back(x);
      if (is_connected_subset(g, rest)) {
        in[v] = 0;
        changed = true;
      }
    }
  }
  ConnectedSubgraph out;
  for (int v = 0; v < n; ++v)
    if (in[v]) out.vertices.push_back(v);
  Graph h = g.induced(out.vertices);
  if (h.max_degree() > k) throw Error("minimal_connected_subgraph: maximum degree exceeds |A|");
  // Peel leaf blocks whose non-cut vertices lie in A.
  const int hn = h.n();
  std::vector<int> local(n, -1);
  for (int i = 0; i < hn; ++i) local[out.vertices[i]] = i;
  std::vector<char> cur(hn, 1), cur_a(hn, 0);
  for (int v : a) cur_a[local[v]] = 1;
  struct Peel {
    std::vector<int> leaf;
    int cut;
  };
  std::vector<Peel> peels;
  for (;;) {
    std::vector<int> vs, as;
    for (int i = 0; i < hn; ++i)
      if (cur[i]) {
        vs.push_back(i);
        if (cur_a[i]) as.push_back(i);
      }
    if (vs.size() == as.size()) break;
    Graph sub = h.induced(vs);
    auto bd = blocks_and_cutvertices(sub);
    std::set<int> cuts(bd.cut_vertices.begin(), bd.cut_vertices.end());
    int best = -1;
    std::size_t best_size = 0;
    int best_cut = -1;
    for (int b = 0; b < static_cast<int>(bd.blocks.size()); ++b) {
      int c = -1, count = 0;
      for (int x : bd.blocks[b])
        if (cuts.count(x)) {
          c = x;
          ++count;
        }
      if (count != 1) continue;
      std::size_t sz = bd.blocks[b].size() - 1;
      if (best < 0 || sz < best_size) {
        best = b;
        best_size = sz;
        best_cut = c;
      }
    }
    if (best < 0) throw Error("minimal_connected_subgraph: no leaf block to peel");
    Peel p;
    p.cut = vs[best_cut];
    for (int x : bd.blocks[best])
      if (x != best_cut) {
        int y = vs[x];
        if (!cur_a[y]) throw Error("minimal_connected_subgraph: leaf block leaves A");
        p.leaf.push_back(y);
        cur[y] = 0;
        cur_a[y] = 0;
      }
    cur_a[p.cut] = 1;
    peels.push_back(std::move(p));
  }
  std::vector<int> col(hn, -1);
  {
    std::vector<int> base;
    for (int i = 0; i < hn; ++i)
      if (cur[i]) base.push_back(i);
    std::size_t half = (base.size() + 1) / 2;
    for (std::size_t i = 0; i < base.size(); ++i) col[base[i]] = i < half ? 0 : 1;
  }
  for (auto it = peels.rbegin(); it != peels.rend(); ++it)
    for (int y : it->leaf) col[y] = 1 - col[it->cut];
  out.colour = col;
  if (audit(h, Colouring(col)).clustering > (k + 1) / 2)
    throw Error("minimal_connected_subgraph: audit found clustering above ceil(k/2)");
  return out;
}

VdhwResult vdhw_colour(const Graph& g, int t) {
  if (t < 4) throw InvalidInput("vdhw_colour: t must be at least 4");
  const int n = g.n();
  VdhwResult r;
  r.part.assign(n, -1);
  std::vector<std::vector<int>> parts;
  std::vector<int> bit(n, 0), part_colour;
  std::set<std::pair<int, int>> part_adj;
  auto adjacent_parts = [&](const std::vector<int>& c) {
    std::set<int> out;
    for (int v : c)
      for (int w : g.neighbours(v))
        if (r.part[w] >= 0) out.insert(r.part[w]);
    return std::vector<int>(out.begin(), out.end());
  };
  auto pairwise = [&](const std::vector<int>& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = i + 1; j < q.size(); ++j)
        if (!part_adj.count({q[i], q[j]})) return false;
    return true;
  };
  auto unassigned = [&] {
    std::vector<char> alive(n, 0);
    for (int v = 0; v < n; ++v) alive[v] = r.part[v] < 0;
    auto comps = components_of(g, alive);
    for (auto& c : comps) std::sort(c.begin(), c.end());
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
  };
  auto witness = [&](const std::vector<int>& q, const std::vector<int>& c) {
    MinorModel m;
    for (int i = 0; i < t - 1; ++i) m.push_back(parts[q[i]]);
    m.push_back(c);
    if (!is_minor_model(g, complete_graph(t), m)) throw Error("vdhw_colour: minor witness failed verification");
    throw MinorFound("minor hypothesis violated: graph contains a K_" + std::to_string(t) + " minor", m);
  };
  auto add_part = [&](std::vector<int> vs, const std::vector<int>& bits) {
    int id = static_cast<int>(parts.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      r.part[vs[i]] = id;
      bit[vs[i]] = bits[i];
    }
    std::set<int> used;
    for (int v : vs)
      for (int w : g.neighbours(v))
        if (r.part[w] >= 0 && r.part[w] != id) {
          int p = r.part[w];
          part_adj.insert({p, id});
          part_adj.insert({id, p});
          used.insert(part_colour[p]);
        }
    int c = 0;
    while (used.count(c)) ++c;
    if (c > t - 2) throw Error("vdhw_colour: no free part colour");
    part_colour.push_back(c);
    parts.push_back(std::move(vs));
  };
  for (;;) {
    auto comps = unassigned();
    if (comps.empty()) break;
    // Property (2) for every residual component.
    for (const auto& c : comps) {
      auto q = adjacent_parts(c);
      if (static_cast<int>(q.size()) > t - 2) {
        if (pairwise(q)) witness(q, c);
        throw Error("vdhw_colour: residual component meets non-adjacent parts");
      }
      if (!pairwise(q)) throw Error("vdhw_colour: residual component meets non-adjacent parts");
    }
    const auto& c = comps.front();
    auto q = adjacent_parts(c);
    if (q.empty()) {
      add_part({c.front()}, {0});
      continue;
    }
    std::vector<int> anchors;
    for (int p : q)
      for (int v : c) {
        bool hit = false;
        for (int w : g.neighbours(v))
          if (r.part[w] == p) hit = true;
        if (hit) {
          anchors.push_back(v);
          break;
        }
      }
    Graph sub = g.induced(c);
    std::vector<int> local(n, -1);
    for (int i = 0; i < static_cast<int>(c.size()); ++i) local[c[i]] = i;
    std::vector<int> la;
    for (int v : anchors) la.push_back(local[v]);
    auto h = minimal_connected_subgraph(sub, la);
    std::vector<int> vs;
    for (int x : h.vertices) vs.push_back(c[x]);
    add_part(vs, h.colour);
  }
  r.parts = static_cast<int>(parts.size());
  r.defect_variant = Colouring(n);
  r.cluster_variant = Colouring(n);
  for (int v = 0; v < n; ++v) {
    int pc = part_colour[r.part[v]];
    r.defect_variant[v] = pc;
    r.cluster_variant[v] = 2 * pc + bit[v];
  }
  auto a = audit(g, r.defect_variant);
  auto b = audit(g, r.cluster_variant);
  if (a.defect > t - 2 || r.defect_variant.num_colours() > t - 1)
    throw Error("vdhw_colour: audit failed for the defect variant");
  if (b.clustering > (t - 1) / 2 || r.cluster_variant.num_colours() > 2 * t - 2)
    throw Error("vdhw_colour: audit failed for the cluster variant");
  return r;
}

int circumference_colour_budget(int k) {
  if (k < 2) throw InvalidInput("circumference_colour: k must be at least 2");
  std::int64_t cube = static_cast<std::int64_t>(k) * k * k;
  int b = 0;
  while ((std::int64_t{1} << (b + 1)) <= cube) ++b;
  return b;
}

namespace {

struct CircumferenceRec {
  const OracleLimits& lim;
  std::vector<int>& col;  // global colouring

  // h: local graph, id: local -> global, pre: local precoloured vertices.
  void run(const Graph& h, const std::vector<int>& id, int k, const std::vector<int>& pre,
           const std::vector<int>& palette) {
    const int n = h.n();
    if (n == 0) return;
    std::set<int> pre_colours;
    std::vector<char> is_pre(n, 0);
    for (int v : pre) {
      is_pre[v] = 1;
      pre_colours.insert(col[id[v]]);
    }
    auto fresh = [&](const std::set<int>& avoid) {
      for (int c : palette)
        if (!avoid.count(c)) return c;
      throw Error("circumference_colour: palette exhausted");
    };
    if (n <= std::max(2, k)) {
      // Small instance: one colour outside C.
      int c = fresh(pre_colours);
      for (int v = 0; v < n; ++v)
        if (!is_pre[v]) col[id[v]] = c;
      return;
    }
    if (is_forest(h)) {
      int a = pre.empty() ? palette.front() : col[id[pre[0]]];
      int b = (pre.size() == 2 && col[id[pre[1]]] != a) ? col[id[pre[1]]] : fresh({a});
      std::vector<int> dist(n, -1), queue;
      for (int v : pre) {
        dist[v] = 0;
        queue.push_back(v);
      }
      if (pre.size() == 2 && col[id[pre[0]]] != col[id[pre[1]]]) dist[pre[1]] = 1;
      for (int s = -1; s < n; ++s) {
        if (s >= 0) {
          if (dist[s] >= 0) continue;
          dist[s] = 0;
          queue.push_back(s);
        }
        for (std::size_t i = 0; i < queue.size(); ++i)
          for (int w : h.neighbours(queue[i]))
            if (dist[w] < 0) {
              dist[w] = dist[queue[i]] + 1;
              queue.push_back(w);
            }
        queue.clear();
      }
      for (int v = 0; v < n; ++v)
        if (!is_pre[v]) col[id[v]] = dist[v] % 2 == 0 ? a : b;
      return;
    }
    std::vector<int> sep = separation(h);
    if (sep.size() != 1 || sep[0] != -1) {
      split(h, id, k, pre, palette, sep);
      return;
    }
    // 3-connected: remove a longest cycle together with C.
    int kk = circumference(h, lim);
    if (kk > k) {
      auto cyc = find_cycle_longer_than(h, k, lim);
      std::vector<int> w;
      if (cyc)
        for (int v : *cyc) w.push_back(id[v]);
      throw HypothesisViolation("circumference hypothesis violated: cycle of length " + std::to_string(kk), w);
    }
    auto q = find_cycle_of_length(h, kk, lim);
    if (!q) throw Error("circumference_colour: cycle search disagrees with circumference");
    std::vector<char> in_s(n, 0);
    for (int v : *q) in_s[v] = 1;
    for (int v : pre) in_s[v] = 1;
    int c = fresh(pre_colours);
    std::vector<int> rest;
    for (int v = 0; v < n; ++v) {
      if (in_s[v] && !is_pre[v]) col[id[v]] = c;
      if (!in_s[v]) rest.push_back(v);
    }
    if (rest.empty()) return;
    std::vector<int> sub_palette;
    for (int x : palette)
      if (x != c && !pre_colours.count(x)) sub_palette.push_back(x);
    int k2 = kk / 2;
    if (static_cast<int>(sub_palette.size()) < circumference_colour_budget(k2))
      throw Error("circumference_colour: palette too small for the recursion");
    std::vector<int> rid;
    for (int v : rest) rid.push_back(id[v]);
    run(h.induced(rest), rid, k2, {}, sub_palette);
  }

  // Smallest separator of size at most 2, or {-1} when h is 3-connected.
  static std::vector<int> separation(const Graph& h) {
    if (!is_connected(h)) return {};
    auto bd = blocks_and_cutvertices(h);
    if (!bd.cut_vertices.empty()) return {bd.cut_vertices.front()};
    const int n = h.n();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        std::vector<char> alive(n, 1);
        alive[a] = alive[b] = 0;
        if (components_of(h, alive).size() > 1) return {a, b};
      }
    return {-1};
  }

  void split(const Graph& h, const std::vector<int>& id, int k, const std::vector<int>& pre,
             const std::vector<int>& palette, const std::vector<int>& s) {
    const int n = h.n();
    std::vector<char> alive(n, 1), in_pre(n, 0);
    for (int v : s) alive[v] = 0;
    for (int v : pre) in_pre[v] = 1;
    auto comps = components_of(h, alive);
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    const std::vector<int>* side2 = nullptr;
    for (const auto& c : comps) {
      bool meets = false;
      for (int v : c) meets = meets || in_pre[v];
      if (!meets) {
        side2 = &c;
        break;
      }
    }
    if (!side2) throw Error("circumference_colour: every side meets C");
    std::vector<char> in2(n, 0);
    for (int v : *side2) in2[v] = 1;
    std::vector<int> v1, v2;
    for (int v = 0; v < n; ++v) {
      if (!in2[v]) v1.push_back(v);
      if (in2[v] || !alive[v]) v2.push_back(v);
    }
    if (static_cast<int>(v1.size()) >= n || static_cast<int>(v2.size()) >= n)
      throw Error("circumference_colour: separation does not shrink the instance");
    auto piece = [&](const std::vector<int>& vs, std::vector<int>& gid, std::vector<int>& loc) {
      loc.assign(n, -1);
      for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
        loc[vs[i]] = i;
        gid.push_back(id[vs[i]]);
      }
      std::vector<Edge> es;
      for (auto [a, b] : h.edges())
        if (loc[a] >= 0 && loc[b] >= 0) es.emplace_back(loc[a], loc[b]);
      if (s.size() == 2) es.emplace_back(loc[s[0]], loc[s[1]]);
      return Graph(static_cast<int>(vs.size()), es);
    };
    std::vector<int> g1id, l1, g2id, l2;
    Graph h1 = piece(v1, g1id, l1);
    Graph h2 = piece(v2, g2id, l2);
    std::vector<int> p1, p2;
    for (int v : pre) p1.push_back(l1[v]);
    for (int v : s) p2.push_back(l2[v]);
    run(h1, g1id, k, p1, palette);
    run(h2, g2id, k, p2, palette);
  }
};

}  // namespace

Colouring circumference_colour(const Graph& g, int k, const OracleLimits& lim) {
  int budget = circumference_colour_budget(k);
  const int n = g.n();
  if (n == 0) return Colouring(0);
  int c = circumference(g, lim);
  if (c > k) {
    auto cyc = find_cycle_longer_than(g, k, lim);
    throw HypothesisViolation("circumference hypothesis violated: cycle of length " + std::to_string(c),
                              cyc ? *cyc : std::vector<int>{});
  }
  std::vector<int> col(n, kUncoloured);
  std::vector<int> palette(budget), id(n);
  std::iota(palette.begin(), palette.end(), 0);
  std::iota(id.begin(), id.end(), 0);
  CircumferenceRec rec{lim, col};
  rec.run(g, id, k, {}, palette);
  Colouring chi(col);
  auto cert = audit(g, chi);
  if (cert.clustering > k || chi.num_colours() > budget)
    throw Error("circumference_colour: audit found clustering or colour count above bound");
  return chi;
}

Defect2Result defect2_to_cluster(const Graph& g, const Colouring& chi, int delta, const Defect2Options& opt) {
  const int n = g.n();
  if (chi.n() != n) throw InvalidInput("defect2_to_cluster: colouring size differs from graph");
  if (!chi.uncoloured().empty()) throw InvalidInput("defect2_to_cluster: colouring has gaps");
  if (delta < g.max_degree()) throw InvalidInput("defect2_to_cluster: delta below the maximum degree");
  if (opt.segment_factor < 1) throw InvalidInput("defect2_to_cluster: segment factor must be positive");
  auto cert = audit(g, chi);
  if (cert.defect > 2) throw InvalidInput("defect2_to_cluster: input defect exceeds 2");
  Defect2Result r;
  r.colouring = chi;
  if (n == 0 || delta == 0) return r;
  const int len = opt.segment_factor * delta;
  for (const auto& comp : cert.components) {
    if (static_cast<int>(comp.size()) <= len) continue;
    std::set<int> in(comp.begin(), comp.end());
    auto mono = [&](int v) {
      std::vector<int> out;
      for (int w : g.neighbours(v))
        if (in.count(w)) out.push_back(w);
      return out;
    };
    int start = comp.front();
    for (int v : comp)
      if (mono(v).size() <= 1) {
        start = v;
        break;
      }
    std::vector<int> walk{start};
    int prev = -1, cur = start;
    for (;;) {
      int next = -1;
      for (int w : mono(cur))
        if (w != prev && w != start) {
          next = w;
          break;
        }
      if (next < 0) break;
      prev = cur;
      cur = next;
      walk.push_back(cur);
    }
    if (walk.size() != comp.size()) throw Error("defect2_to_cluster: component is not a path or cycle");
    for (std::size_t i = 0; i + len <= walk.size(); i += len)
      r.segments.emplace_back(walk.begin() + i, walk.begin() + i + len);
  }
  int top = 0;
  for (int v = 0; v < n; ++v) top = std::max(top, chi[v] + 1);
  if (r.segments.empty()) return r;
  const int m = static_cast<int>(r.segments.size());
  std::vector<int> seg_of(n, -1);
  for (int i = 0; i < m; ++i)
    for (int v : r.segments[i]) seg_of[v] = i;
  const std::int64_t budget = 64LL * n;
  for (int attempt = 0; attempt <= opt.max_reseeds; ++attempt) {
    std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(attempt));
    std::uniform_int_distribution<int> pick(0, len - 1);
    std::vector<int> chosen(m);
    for (int i = 0; i < m; ++i) chosen[i] = r.segments[i][pick(rng)];
    std::vector<char> on(n, 0);
    for (int v : chosen) on[v] = 1;
    std::int64_t spent = 0;
    bool done = false;
    while (spent <= budget) {
      int bad = -1, other = -1;
      for (int i = 0; i < m && bad < 0; ++i)
        for (int w : g.neighbours(chosen[i]))
          if (on[w]) {
            bad = i;
            other = seg_of[w];
            break;
          }
      if (bad < 0) {
        done = true;
        break;
      }
      for (int i : {bad, other}) {
        on[chosen[i]] = 0;
        chosen[i] = r.segments[i][pick(rng)];
        on[chosen[i]] = 1;
      }
      ++spent;
    }
    r.resamples += spent;
    if (!done) {
      ++r.reseeds;
      continue;
    }
    r.transversal = chosen;
    for (int v : chosen) r.colouring[v] = top;
    auto out = audit(g, r.colouring);
    if (out.clustering > 3 * len) throw Error("defect2_to_cluster: audit found clustering above 3 segment lengths");
    return r;
  }
  throw Error("defect2_to_cluster: resampling budget exhausted after " + std::to_string(opt.max_reseeds + 1) +
              " seeds");
}

}  // namespace dcol
