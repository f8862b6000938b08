#include "dcol/separator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "dcol/errors.hpp"
#include "dcol/oracle.hpp"

namespace dcol {

namespace {

using boost::multiprecision::cpp_int;

std::vector<int> centroid_separator(const Graph& g) {
  auto comps = connected_components(g);
  const int n = g.n();
  auto big = std::max_element(comps.begin(), comps.end(),
                              [](const auto& a, const auto& b) { return a.size() < b.size(); });
  if (big == comps.end() || 2 * big->size() <= static_cast<std::size_t>(n)) return {};
  const int size = static_cast<int>(big->size());
  // Subtree sizes from the smallest vertex of the component.
  std::vector<int> parent(n, -1), order, sub(n, 1);
  std::vector<char> seen(n, 0);
  order.push_back(big->front());
  seen[big->front()] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : g.neighbours(order[i]))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[i];
        order.push_back(w);
      }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];
  int best = -1;
  for (int v : order) {
    int worst = size - sub[v];
    for (int w : g.neighbours(v))
      if (parent[w] == v) worst = std::max(worst, sub[w]);
    if (2 * worst <= size && (best < 0 || v < best)) best = v;
  }
  return {best};
}

bool balanced(const Graph& g, const std::vector<int>& s) {
  std::vector<char> alive(g.n(), 1);
  for (int v : s) alive[v] = 0;
  for (const auto& c : components_of(g, alive))
    if (2 * c.size() > static_cast<std::size_t>(g.n())) return false;
  return true;
}

bool within_declared(const SeparatorOracle& o, std::size_t s, int n) {
  if (o.c_squared && o.beta == 0.5) {
    Rational lhs(static_cast<std::int64_t>(s * s));
    return lhs <= *o.c_squared * Rational(n);
  }
  return static_cast<double>(s) <= o.c * std::pow(static_cast<double>(n), 1.0 - o.beta) + 1e-9;
}

std::vector<int> level_separator(const Graph& g) {
  auto comps = connected_components(g);
  const int n = g.n();
  auto big = std::max_element(comps.begin(), comps.end(),
                              [](const auto& a, const auto& b) { return a.size() < b.size(); });
  if (big == comps.end() || 2 * big->size() <= static_cast<std::size_t>(n)) return {};
  auto dist0 = bfs_distances(g, big->front());
  int far = big->front();
  for (int v : *big)
    if (dist0[v] > dist0[far]) far = v;
  std::vector<int> best;
  bool found = false;
  for (int r : {far, big->front()}) {
    auto layering = bfs_layering(g, r);
    for (const auto& level : layering.layers) {
      if (found && level.size() >= best.size()) continue;
      std::vector<int> s(level.begin(), level.end());
      std::sort(s.begin(), s.end());
      if (balanced(g, s)) {
        best = s;
        found = true;
      }
    }
  }
  return best;
}

// Vertices of the tree path u..lca(u,v)..v.
std::vector<int> tree_cycle(int u, int v, const std::vector<int>& parent, const std::vector<int>& depth) {
  std::vector<int> a, b;
  while (depth[u] > depth[v]) a.push_back(u), u = parent[u];
  while (depth[v] > depth[u]) b.push_back(v), v = parent[v];
  while (u != v) a.push_back(u), b.push_back(v), u = parent[u], v = parent[v];
  a.push_back(u);
  a.insert(a.end(), b.rbegin(), b.rend());
  return a;
}

int largest_without(const Graph& h, const std::vector<int>& cut) {
  std::vector<char> alive(h.n(), 1);
  for (int v : cut) alive[v] = 0;
  int best = 0;
  for (const auto& c : components_of(h, alive)) best = std::max(best, static_cast<int>(c.size()));
  return best;
}

// Fundamental cycles and levels of a BFS tree of the largest component,
// added greedily until every component has at most n/2 vertices. In planar
// inputs the tree is taken in a triangulated supergraph, so each cycle is a
// closed curve. Useful where the diameter is small and single levels are wide.
std::vector<int> cycle_separator(const Graph& g, std::size_t budget) {
  const int n = g.n();
  std::vector<char> in_s(n, 0);
  std::vector<int> s;
  while (s.size() <= budget) {
    auto comps = components_of(g, [&] {
      std::vector<char> alive(n, 1);
      for (int v : s) alive[v] = 0;
      return alive;
    }());
    auto big = std::max_element(comps.begin(), comps.end(),
                                [](const auto& a, const auto& b) { return a.size() < b.size(); });
    if (big == comps.end() || 2 * big->size() <= static_cast<std::size_t>(n)) break;
    std::vector<int> ids = *big;
    std::sort(ids.begin(), ids.end());
    Graph h = g.induced(ids);
    Graph frame = h;
    if (auto tri = maximal_planar_supergraph(h)) frame = tri->graph;
    // Root in the middle of a double sweep keeps the tree shallow.
    auto d0 = bfs_distances(frame, 0);
    int a = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto da = bfs_distances(frame, a);
    int b = static_cast<int>(std::max_element(da.begin(), da.end()) - da.begin());
    auto db = bfs_distances(frame, b);
    int root = a;
    for (int v = 0; v < h.n(); ++v)
      if (da[v] + db[v] == da[b] && 2 * da[v] <= da[b] + 1 && da[v] > da[root]) root = v;
    std::vector<int> parent(h.n(), -1), depth(h.n(), -1), order{root};
    depth[root] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int w : frame.neighbours(order[i]))
        if (depth[w] < 0) {
          depth[w] = depth[order[i]] + 1;
          parent[w] = order[i];
          order.push_back(w);
        }
    std::vector<std::vector<int>> cands;
    for (auto [u, v] : frame.edges())
      if (parent[u] != v && parent[v] != u) cands.push_back(tree_cycle(u, v, parent, depth));
    for (const auto& level : bfs_layering(frame, root).layers) cands.push_back(level);
    std::stable_sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    // First candidate that finishes the job, else the best shrinkage of the
    // large component per separator vertex.
    const std::vector<int>* pick = nullptr;
    double pick_rate = 0;
    const std::size_t room = budget - s.size();
    for (const auto& c : cands) {
      if (c.size() > room) break;
      int lg = largest_without(h, c);
      if (2 * lg <= n) {
        pick = &c;
        break;
      }
      double rate = static_cast<double>(h.n() - lg) / static_cast<double>(c.size());
      if (rate > pick_rate) pick = &c, pick_rate = rate;
    }
    if (!pick) break;
    for (int v : *pick)
      if (!in_s[ids[v]]) in_s[ids[v]] = 1, s.push_back(ids[v]);
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::int64_t ceil_double(double x) { return static_cast<std::int64_t>(std::ceil(x - 1e-9)); }

}  // namespace

std::int64_t ceil_times_three_plus_two_sqrt2(const Rational& a) {
  if (a <= 0) throw InvalidInput("ceil_times_three_plus_two_sqrt2: need a positive rational");
  // N >= a(3 + 2 sqrt 2)  iff  N q - 3 p >= 0 and (N q - 3 p)^2 >= 8 p^2.
  const cpp_int p = a.numerator(), q = a.denominator();
  auto ok = [&](std::int64_t n) {
    cpp_int x = cpp_int(n) * q - 3 * p;
    return x >= 0 && x * x >= 8 * p * p;
  };
  double guess = boost::rational_cast<double>(a) * (3.0 + 2.0 * std::sqrt(2.0));
  std::int64_t n = static_cast<std::int64_t>(std::ceil(guess));
  while (n > 0 && ok(n - 1)) --n;
  while (!ok(n)) ++n;
  return n;
}

SeparatorOracle exact_separator_oracle(double c, double beta, int cap) {
  SeparatorOracle o;
  o.c = c;
  o.beta = beta;
  o.name = "exact";
  o.find = [cap](const Graph& g) {
    if (is_forest(g)) return centroid_separator(g);
    OracleLimits lim;
    lim.separator_cap = cap;
    return min_balanced_separator(g, lim);
  };
  return o;
}

namespace {

std::function<std::vector<int>(const Graph&)> level_find(const SeparatorOracle& declared, int exact_cap) {
  auto d = std::make_shared<SeparatorOracle>(declared);
  return [d, exact_cap](const Graph& g) {
    if (is_forest(g)) return centroid_separator(g);
    auto s = level_separator(g);
    if (!within_declared(*d, s.size(), g.n())) {
      double cap = d->c * std::pow(static_cast<double>(g.n()), 1.0 - d->beta);
      auto t = cycle_separator(g, static_cast<std::size_t>(std::max(cap, 1.0)));
      if ((s.empty() || t.size() < s.size()) && balanced(g, t)) s = t;
    }
    if (!within_declared(*d, s.size(), g.n()) && g.n() <= exact_cap) {
      OracleLimits lim;
      lim.separator_cap = exact_cap;
      return min_balanced_separator(g, lim);
    }
    return s;
  };
}

SeparatorOracle with_sqrt_constant(std::int64_t c2, const std::string& name, int exact_cap) {
  SeparatorOracle o;
  o.c = std::sqrt(static_cast<double>(c2));
  o.beta = 0.5;
  o.c_squared = Rational(c2);
  o.name = name;
  o.find = level_find(o, exact_cap);
  return o;
}

}  // namespace

SeparatorOracle bfs_level_oracle(double c, double beta, int exact_cap) {
  SeparatorOracle o;
  o.c = c;
  o.beta = beta;
  o.name = "bfs-level";
  o.find = level_find(o, exact_cap);
  return o;
}

SeparatorOracle genus_oracle(int g, int exact_cap) {
  if (g < 0) throw InvalidInput("genus_oracle: negative genus");
  return with_sqrt_constant(4 * (2 * static_cast<std::int64_t>(g) + 3), "genus-" + std::to_string(g), exact_cap);
}

SeparatorOracle minor_oracle(int t, int exact_cap) {
  if (t < 1) throw InvalidInput("minor_oracle: t must be positive");
  std::int64_t t3 = static_cast<std::int64_t>(t) * t * t;
  return with_sqrt_constant(t3, "minor-K" + std::to_string(t), exact_cap);
}

double fragment_bound(const SeparatorOracle& o, int n, int p) {
  double tb = std::pow(2.0, o.beta);
  return o.c * tb * n / ((tb - 1.0) * std::pow(static_cast<double>(p), o.beta));
}

std::int64_t fragment_epsilon_p(const SeparatorOracle& o, const Rational& eps) {
  if (eps <= 0) throw InvalidInput("fragment_epsilon: epsilon must be positive");
  if (o.c_squared && o.beta == 0.5)
    return ceil_times_three_plus_two_sqrt2(Rational(2) * *o.c_squared / (eps * eps));
  double e = boost::rational_cast<double>(eps);
  return ceil_double(2.0 * std::pow(o.c / (e * (std::pow(2.0, o.beta) - 1.0)), 1.0 / o.beta));
}

std::int64_t separator_island_bound(const SeparatorOracle& o, int k, const Rational& alpha) {
  if (k < 0 || alpha <= 0) throw InvalidInput("separator_island: need k >= 0 and alpha > 0");
  return fragment_epsilon_p(o, alpha / Rational(k + 1));
}

std::vector<int> fragment(const Graph& g, const SeparatorOracle& o, std::int64_t p) {
  if (p < 1) throw InvalidInput("fragment: p must be at least 1");
  if (!o.find) throw InvalidInput("fragment: oracle has no search function");
  const int n = g.n();
  std::vector<char> alive(n, 1);
  std::vector<std::vector<int>> work;
  for (auto& c : connected_components(g))
    if (static_cast<std::int64_t>(c.size()) > p) work.push_back(std::move(c));
  while (!work.empty()) {
    std::vector<int> x = std::move(work.back());
    work.pop_back();
    Graph h = g.induced(x);
    std::vector<int> s = o.find(h);
    std::vector<char> in(h.n(), 0);
    for (int v : s) {
      if (!h.contains(v) || in[v])
        throw HypothesisViolation("separator oracle " + o.name + " returned an invalid vertex set", x);
      in[v] = 1;
    }
    if (!within_declared(o, s.size(), h.n()))
      throw HypothesisViolation("separator oracle " + o.name + " returned " + std::to_string(s.size()) +
                                    " vertices on a " + std::to_string(h.n()) + "-vertex subgraph, above its declared bound",
                                x);
    std::vector<char> rest(h.n(), 1);
    for (int v : s) rest[v] = 0;
    auto comps = components_of(h, rest);
    for (const auto& c : comps)
      if (2 * c.size() > x.size())
        throw HypothesisViolation("separator oracle " + o.name + " returned an unbalanced set on a " +
                                      std::to_string(h.n()) + "-vertex subgraph",
                                  x);
    for (int v : s) alive[x[v]] = 0;
    for (const auto& c : comps)
      if (static_cast<std::int64_t>(c.size()) > p) {
        std::vector<int> y;
        y.reserve(c.size());
        for (int v : c) y.push_back(x[v]);
        work.push_back(std::move(y));
      }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (!alive[v]) out.push_back(v);
  return out;
}

Fragmentation fragment_epsilon(const Graph& g, const SeparatorOracle& o, const Rational& eps) {
  Fragmentation f;
  f.p = fragment_epsilon_p(o, eps);
  f.s = fragment(g, o, f.p);
  if (Rational(static_cast<std::int64_t>(f.s.size())) > eps * Rational(g.n()))
    throw Error("fragment_epsilon: separator exceeds epsilon n");
  return f;
}

std::vector<int> separator_island(const Graph& g, const SeparatorOracle& o, int k, const Rational& alpha) {
  if (k < 0 || alpha <= 0) throw InvalidInput("separator_island: need k >= 0 and alpha > 0");
  const int n = g.n();
  if (n == 0) throw InvalidInput("separator_island: empty graph");
  Rational m(static_cast<std::int64_t>(g.m()));
  if (!(m < (Rational(k + 1) - alpha) * Rational(n))) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    throw HypothesisViolation("sparsity hypothesis violated: " + std::to_string(g.m()) + " edges on " +
                                  std::to_string(n) + " vertices is not below (k+1-alpha)|V|",
                              all);
  }
  Fragmentation f = fragment_epsilon(g, o, alpha / Rational(k + 1));
  std::vector<char> alive(n, 1);
  for (int v : f.s) alive[v] = 0;
  auto comps = components_of(g, alive);
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (auto& comp : comps) {
    std::int64_t e = 0;
    std::vector<char> in(n, 0);
    for (int v : comp) in[v] = 1;
    for (int v : comp)
      for (int w : g.neighbours(v)) e += (!in[w] || v < w) ? 1 : 0;
    if (e >= static_cast<std::int64_t>(k + 1) * static_cast<std::int64_t>(comp.size())) continue;
    // Peel vertices with at least k+1 neighbours outside.
    std::vector<int> out_deg(n, 0);
    std::vector<int> queue;
    for (int v : comp) {
      for (int w : g.neighbours(v)) out_deg[v] += !in[w];
      if (out_deg[v] > k) queue.push_back(v);
    }
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      if (!in[v]) continue;
      in[v] = 0;
      for (int w : g.neighbours(v))
        if (in[w] && ++out_deg[w] == k + 1) queue.push_back(w);
    }
    std::vector<int> island;
    for (int v : comp)
      if (in[v]) island.push_back(v);
    std::sort(island.begin(), island.end());
    if (island.empty()) throw Error("separator_island: peeling emptied the chosen component");
    if (static_cast<std::int64_t>(island.size()) > f.p) throw Error("separator_island: island exceeds its bound");
    return island;
  }
  throw Error("separator_island: no sparse component after fragmentation");
}

std::int64_t island_loop_bound(const IslandLoop& spec, const SeparatorOracle& o) {
  std::int64_t b = separator_island_bound(o, spec.k, spec.alpha);
  return std::max(spec.small_cap + 1, b);
}

Colouring island_loop_colour(const Graph& g, const ListAssignment& lists, const IslandLoop& spec,
                             const SeparatorOracle& o) {
  const int n = g.n();
  const std::string who = spec.hypothesis.empty() ? std::string("island loop") : spec.hypothesis;
  if (lists.n() != n) throw InvalidInput(who + ": list assignment size differs from graph");
  if (n > 0 && lists.min_size() < spec.k + 1)
    throw InvalidInput(who + ": lists need at least " + std::to_string(spec.k + 1) + " colours");
  std::vector<int> rest(n);
  for (int v = 0; v < n; ++v) rest[v] = v;
  std::vector<std::vector<int>> islands;
  while (static_cast<std::int64_t>(rest.size()) > spec.small_n) {
    Graph h = g.induced(rest);
    Rational m(static_cast<std::int64_t>(h.m()));
    if (!(m < spec.density_a * Rational(h.n() + spec.density_b)))
      throw HypothesisViolation(who + " hypothesis violated: " + std::to_string(h.m()) + " edges on " +
                                    std::to_string(h.n()) + " vertices",
                                rest);
    std::vector<int> s = separator_island(h, o, spec.k, spec.alpha);
    std::vector<char> in(h.n(), 0);
    for (int x : s) in[x] = 1;
    std::vector<int> global, keep;
    for (int i = 0; i < h.n(); ++i) (in[i] ? global : keep).push_back(rest[i]);
    islands.push_back(std::move(global));
    rest = std::move(keep);
  }
  Colouring chi(n);
  // Small branch: each vertex takes its least used colour so far.
  std::map<int, std::int64_t> uses;
  for (int v : rest) {
    int best = lists[v].front();
    for (int c : lists[v])
      if (uses[c] < uses[best]) best = c;
    chi[v] = best;
    ++uses[best];
  }
  std::vector<int> island_of(n, -1);
  for (std::size_t i = 0; i < islands.size(); ++i)
    for (int v : islands[i]) island_of[v] = static_cast<int>(i);
  for (std::size_t i = islands.size(); i-- > 0;) {
    for (int v : islands[i]) {
      std::set<int> outside, all;
      for (int w : g.neighbours(v)) {
        if (chi[w] == kUncoloured) continue;
        all.insert(chi[w]);
        if (island_of[w] != static_cast<int>(i)) outside.insert(chi[w]);
      }
      int pick = kUncoloured;
      for (int c : lists[v])
        if (!all.count(c)) {
          pick = c;
          break;
        }
      if (pick == kUncoloured)
        for (int c : lists[v])
          if (!outside.count(c)) {
            pick = c;
            break;
          }
      chi[v] = pick;
    }
  }
  Certificate cert = audit(g, chi);
  std::int64_t bound = island_loop_bound(spec, o);
  if (cert.clustering > bound)
    throw Error(who + ": audit found clustering " + std::to_string(cert.clustering) + " above " + std::to_string(bound));
  return chi;
}

IslandLoop surface_four_spec(int genus) {
  if (genus < 0) throw InvalidInput("surface_four_colour: negative genus");
  IslandLoop s;
  s.k = 3;
  s.alpha = Rational(1999, 2000);
  s.density_a = 3;
  s.density_b = genus;
  s.small_n = 6000LL * genus;
  s.small_cap = s.small_n > 0 ? (s.small_n - 1) / 4 : 0;
  s.hypothesis = "Euler genus " + std::to_string(genus);
  return s;
}

Colouring surface_four_colour(const Graph& g, const ListAssignment& lists, int genus, const SeparatorOracle& o) {
  IslandLoop s = surface_four_spec(genus);
  Colouring chi = island_loop_colour(g, lists, s, o);
  std::int64_t cap = 1500LL * (genus + 2);
  if (audit(g, chi).clustering > cap) throw Error("surface_four_colour: clustering above 1500(g+2)");
  return chi;
}

IslandLoop surface_three_spec(int genus, int girth) {
  if (genus < 0) throw InvalidInput("surface_three_colour: negative genus");
  IslandLoop s;
  s.density_b = genus;
  if (girth >= 5) {
    // |E| < 5/3 (|V| + g); 2 lists.
    s.k = 1;
    s.alpha = Rational(1, 6);
    s.density_a = Rational(5, 3);
    s.small_n = 10LL * genus;
  } else if (girth == 4) {
    // |E| < 2 (|V| + g); 3 lists.
    s.k = 2;
    s.alpha = Rational(1, 2);
    s.density_a = 2;
    s.small_n = 4LL * genus;
  } else {
    throw InvalidInput("surface_three_colour: girth must be at least 4");
  }
  s.small_cap = s.small_n > 0 ? (s.small_n - 1) / (s.k + 1) : 0;
  s.hypothesis = "Euler genus " + std::to_string(genus) + " with girth " + std::to_string(girth);
  return s;
}

Colouring surface_three_colour(const Graph& g, const ListAssignment& lists, int genus, int girth,
                               const SeparatorOracle& o) {
  int actual = dcol::girth(g);
  if (actual != 0 && actual < girth)
    throw HypothesisViolation("girth hypothesis violated: graph has a cycle of length " + std::to_string(actual));
  return island_loop_colour(g, lists, surface_three_spec(genus, girth), o);
}

IslandLoop minor_free_spec(int t) {
  if (t < 3 || t > 9) throw InvalidInput("minor_free_colour: t must lie in [3, 9]");
  IslandLoop s;
  s.k = t - 2;
  s.alpha = 1;
  s.density_a = t - 2;
  s.density_b = 0;
  s.hypothesis = "K_" + std::to_string(t) + "-minor-free";
  return s;
}

std::int64_t minor_clustering_bound(int t) {
  std::int64_t t3 = static_cast<std::int64_t>(t) * t * t;
  // 2 (5 t^(3/2) / (sqrt2 - 1))^2 = 50 t^3 (3 + 2 sqrt 2)
  return ceil_times_three_plus_two_sqrt2(Rational(50 * t3));
}

Colouring minor_free_colour(const Graph& g, const ListAssignment& lists, int t, const SeparatorOracle& o) {
  return island_loop_colour(g, lists, minor_free_spec(t), o);
}

}  // namespace dcol
