// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "dcol/colouring.hpp"
#include "dcol/constructions.hpp"
#include "dcol/errors.hpp"
#include "dcol/graph.hpp"
#include "dcol/greedy.hpp"
#include "dcol/oracle.hpp"
#include "dcol/planar.hpp"
#include "dcol/separator.hpp"
#include "dcol/structural.hpp"

using namespace dcol;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  int failures = 0;
  void fail(const std::string& why) {
    if (failures++ < 3) detail += (detail.empty() ? "" : "; ") + why;
    pass = false;
  }
};

// Independent audit: monochromatic components by BFS.
struct Audit {
  int colours = 0, defect = 0, clustering = 0;
  bool all_paths = true;
  bool complete = true;
};

Audit audit_by_hand(const Graph& g, const Colouring& chi) {
  Audit a;
  std::set<int> used;
  for (int v = 0; v < g.n(); ++v) {
    if (chi[v] < 0) a.complete = false;
    used.insert(chi[v]);
  }
  a.colours = static_cast<int>(used.size());
  std::vector<int> comp(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> q{s};
    comp[s] = s;
    long long edges2 = 0;
    int maxdeg = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      int v = q[i], deg = 0;
      for (int w : g.neighbours(v))
        if (chi[w] == chi[v]) {
          ++deg;
          if (comp[w] < 0) {
            comp[w] = s;
            q.push_back(w);
          }
        }
      edges2 += deg;
      maxdeg = std::max(maxdeg, deg);
    }
    a.defect = std::max(a.defect, maxdeg);
    a.clustering = std::max(a.clustering, static_cast<int>(q.size()));
    if (maxdeg > 2 || edges2 / 2 != static_cast<long long>(q.size()) - 1) a.all_paths = false;
  }
  return a;
}

bool respects(const Colouring& chi, const ListAssignment& L) {
  for (int v = 0; v < chi.n(); ++v)
    if (!std::binary_search(L[v].begin(), L[v].end(), chi[v])) return false;
  return true;
}

ListAssignment random_lists(int n, int size, int palette, std::mt19937_64& rng) {
  std::vector<std::vector<int>> ls(n);
  std::vector<int> all(palette);
  for (auto& l : ls) {
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    l.assign(all.begin(), all.begin() + size);
    std::sort(l.begin(), l.end());
  }
  return ListAssignment(ls);
}

std::vector<std::vector<int>> components_without(const Graph& g, const std::vector<int>& s) {
  std::vector<char> gone(g.n(), 0);
  for (int v : s) gone[v] = 1;
  std::vector<int> seen(g.n(), 0);
  std::vector<std::vector<int>> out;
  for (int r = 0; r < g.n(); ++r) {
    if (gone[r] || seen[r]) continue;
    std::vector<int> q{r};
    seen[r] = 1;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (int w : g.neighbours(q[i]))
        if (!gone[w] && !seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    out.push_back(q);
  }
  return out;
}

// Simple path with at least len edges inside one colour class.
bool mono_path_at_least(const Graph& g, const Colouring& chi, int len) {
  std::vector<char> on(g.n(), 0);
  std::function<bool(int, int)> dfs = [&](int v, int depth) {
    if (depth >= len) return true;
    on[v] = 1;
    for (int w : g.neighbours(v))
      if (!on[w] && chi[w] == chi[v] && dfs(w, depth + 1)) {
        on[v] = 0;
        return true;
      }
    on[v] = 0;
    return false;
  };
  for (int v = 0; v < g.n(); ++v)
    if (dfs(v, 0)) return true;
  return false;
}

long boost_min_cut(const Graph& g, int s, int t) {
  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using Net = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS, boost::no_property,
      boost::property<boost::edge_capacity_t, long,
                      boost::property<boost::edge_residual_capacity_t, long,
                                      boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
  Net net(g.n());
  auto cap = boost::get(boost::edge_capacity, net);
  auto rev = boost::get(boost::edge_reverse, net);
  auto arc = [&](int u, int v) {
    auto e = boost::add_edge(u, v, net).first;
    auto r = boost::add_edge(v, u, net).first;
    cap[e] = 1;
    cap[r] = 0;
    rev[e] = r;
    rev[r] = e;
  };
  for (auto [u, v] : g.edges()) {
    arc(u, v);
    arc(v, u);
  }
  return boost::push_relabel_max_flow(net, s, t);
}

Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.emplace_back(static_cast<int>(rng() % v), v);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

// Blocks of at most max_block vertices glued at single vertices, so every
// cycle has at most max_block vertices.
Graph random_block_tree(int n_target, int max_block, std::mt19937_64& rng) {
  std::vector<Edge> es;
  int n = 1;
  while (n < n_target) {
    int size = std::min<int>(std::uniform_int_distribution<int>(2, max_block)(rng), n_target - n + 1);
    int glue = static_cast<int>(rng() % n);
    std::vector<int> vs{glue};
    for (int i = 1; i < size; ++i) vs.push_back(n++);
    for (int i = 1; i < size; ++i) es.emplace_back(vs[i - 1], vs[i]);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < size; ++i)
      for (int j = i + 2; j < size; ++j)
        if (coin(rng)) es.emplace_back(vs[i], vs[j]);
  }
  return Graph(n, es);
}

int ilog2_floor(long long x) {
  int b = 0;
  while ((2LL << b) <= x) ++b;
  return b;
}

// p >= a/b * (3 + 2 sqrt 2), exactly, for p, a, b >= 0.
bool at_least_three_plus_two_sqrt2(long long p, long long a, long long b) {
  __int128 lhs = static_cast<__int128>(p) * b - static_cast<__int128>(3) * a;
  return lhs >= 0 && lhs * lhs >= static_cast<__int128>(8) * a * a;
}

// ----------------------------------------------------------------------------

Outcome standard_examples() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  OracleLimits lim;
  lim.colour_cap = 64;
  int largest = 0;
  for (int h = 0; h <= 3; ++h) {
    for (int d : {1, 2}) {
      Graph g = standard_defect(h, d);
      largest = std::max(largest, g.n());
      int k = min_colours_defect(g, d, lim);
      if (k != h + 1) o.fail("S(" + std::to_string(h) + "," + std::to_string(d) + ") needs " + std::to_string(k));
    }
    // The clustered family starts at S(1,c) = P_{c+1}.
    for (int c : {2, 3}) {
      if (h == 0) continue;
      Graph g = standard_cluster(h, c);
      largest = std::max(largest, g.n());
      int k = min_colours_clustering(g, c, lim);
      if (k != h + 1) o.fail("clustered S(" + std::to_string(h) + "," + std::to_string(c) + ") needs " + std::to_string(k));
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 300) o.fail("took " + std::to_string(secs) + " s");
  o.detail = o.detail.empty() ? "14 instances exact, up to " + std::to_string(largest) + " vertices" : o.detail;
  return o;
}

Outcome outerplanar() {
  Outcome o;
  for (int i = 0; i < 200; ++i) {
    int n = 3 + (i * 37) % 198;
    auto t = random_maximal_outerplanar(n, 1000 + i);
    auto a = audit_by_hand(t.graph, outerplanar_two_colour(t.graph));
    if (!a.complete || a.colours != 2 || !a.all_paths || a.defect > 2)
      o.fail("n=" + std::to_string(n) + " seed " + std::to_string(1000 + i));
  }
  if (o.pass) o.detail = "200 graphs, 3 <= n <= 200";
  return o;
}

Outcome poh() {
  Outcome o;
  for (int i = 0; i < 100; ++i) {
    int n = 4 + (i * 53) % 297;
    auto t = random_plane_triangulation(n, 2000 + i);
    auto a = audit_by_hand(t.graph, poh_three_colour(t));
    if (!a.complete || a.colours > 3 || !a.all_paths) o.fail("n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "100 triangulations, 4 <= n <= 300";
  return o;
}

Outcome hex() {
  Outcome o;
  long long checked = 0;
  for (int k : {2, 3}) {
    HexBoard b = hex_grid(k);
    const Graph& g = b.tri.graph;
    const int n = g.n();
    if (n > 20) {
      o.fail("hex_grid(" + std::to_string(k) + ") has " + std::to_string(n) + " vertices");
      continue;
    }
    std::vector<std::vector<int>> arcs;
    for (int i = 0; i < 4; ++i) arcs.push_back(b.arc(i));
    for (long long mask = 0; mask < (1LL << n); ++mask) {
      Colouring chi(n);
      for (int v = 0; v < n; ++v) chi[v] = static_cast<int>((mask >> v) & 1);
      ++checked;
      if (!mono_path_at_least(g, chi, k)) o.fail("no monochromatic path, mask " + std::to_string(mask));
      auto w = gale_extract(b, chi);
      bool ok = !w.path.empty() && (w.from_arc + 2) % 4 == w.to_arc;
      std::set<int> distinct(w.path.begin(), w.path.end());
      ok = ok && distinct.size() == w.path.size();
      for (std::size_t i = 0; ok && i + 1 < w.path.size(); ++i) ok = g.adjacent(w.path[i], w.path[i + 1]);
      for (int v : w.path) ok = ok && chi[v] == w.colour;
      ok = ok && std::count(arcs[w.from_arc].begin(), arcs[w.from_arc].end(), w.path.front()) &&
           std::count(arcs[w.to_arc].begin(), arcs[w.to_arc].end(), w.path.back());
      for (int f = 0; ok && f < static_cast<int>(w.dual_degrees.size()); ++f) {
        bool special = std::count(w.special_faces.begin(), w.special_faces.end(), f) > 0;
        ok = special ? w.dual_degrees[f] == 1 : (w.dual_degrees[f] == 0 || w.dual_degrees[f] == 2);
      }
      if (!ok) o.fail("invalid witness, k=" + std::to_string(k) + " mask " + std::to_string(mask));
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " colourings";
  return o;
}

Outcome lovasz() {
  Outcome o;
  for (int i = 0; i < 500; ++i) {
    int cap = 3 + i % 10;
    int d = 1 + i % 3;
    Graph g = random_bounded_degree(30 + (i * 7) % 170, cap, 0.5 + 0.1 * (i % 5), 3000 + i);
    int delta = g.max_degree();
    auto r = lovasz_defective(g, d);
    auto a = audit_by_hand(g, r.colouring);
    int want = delta / (d + 1) + 1;
    bool ids = std::all_of(r.colouring.colour.begin(), r.colouring.colour.end(),
                           [&](int c) { return c >= 0 && c < want; });
    if (delta > 12 || r.k != want || !ids || a.defect > d || r.iterations > static_cast<long long>(g.m()))
      o.fail("instance " + std::to_string(i));
  }
  if (o.pass) o.detail = "500 graphs, d in {1,2,3}";
  return o;
}

Outcome fragmentation() {
  Outcome o;
  int runs = 0;
  auto check_fragment = [&](const Graph& g, const SeparatorOracle& orc, std::int64_t p, const std::string& tag) {
    ++runs;
    auto s = fragment(g, orc, p);
    double bound = orc.c * std::pow(2.0, orc.beta) * g.n() / ((std::pow(2.0, orc.beta) - 1) * std::pow(double(p), orc.beta));
    if (s.size() > bound + 1e-9) o.fail(tag + ": |S|=" + std::to_string(s.size()));
    for (const auto& comp : components_without(g, s))
      if (static_cast<std::int64_t>(comp.size()) > p) o.fail(tag + ": component " + std::to_string(comp.size()));
  };
  auto check_eps = [&](const Graph& g, const SeparatorOracle& orc, Rational eps, const std::string& tag) {
    ++runs;
    auto f = fragment_epsilon(g, orc, eps);
    // p = ceil(2 c^2 (3 + 2 sqrt 2) / eps^2) when beta = 1/2.
    Rational a = 2 * *orc.c_squared / (eps * eps);
    if (!at_least_three_plus_two_sqrt2(f.p, a.numerator(), a.denominator()) ||
        at_least_three_plus_two_sqrt2(f.p - 1, a.numerator(), a.denominator()))
      o.fail(tag + ": p=" + std::to_string(f.p));
    if (Rational(static_cast<std::int64_t>(f.s.size())) > eps * g.n()) o.fail(tag + ": |S|=" + std::to_string(f.s.size()));
    for (const auto& comp : components_without(g, f.s))
      if (static_cast<std::int64_t>(comp.size()) > f.p) o.fail(tag + ": component " + std::to_string(comp.size()));
  };
  auto planar = genus_oracle(0);
  auto outer = minor_oracle(4);
  for (int i = 0; i < 200; ++i) {
    std::string tag = "instance " + std::to_string(i);
    try {
      switch (i % 4) {
        case 0: {
          Graph g = random_planar(60 + (i * 13) % 340, 0.5 + 0.005 * (i % 80), 4000 + i);
          check_fragment(g, planar, 8 + i % 40, tag);
          break;
        }
        case 1: {
          Graph g = random_plane_triangulation(50 + (i * 11) % 350, 4000 + i).graph;
          check_eps(g, planar, Rational(1, 1 + i % 2), tag);
          break;
        }
        case 2: {
          Graph g = grid_graph(4 + i % 17, 5 + (i * 3) % 15);
          check_fragment(g, planar, 6 + i % 25, tag);
          break;
        }
        default: {
          Graph g = random_maximal_outerplanar(40 + (i * 17) % 260, 4000 + i).graph;
          check_fragment(g, outer, 5 + i % 30, tag);
          break;
        }
      }
    } catch (const HypothesisViolation& e) {
      o.fail(tag + ": " + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(runs) + " runs";
  return o;
}

Outcome islands() {
  Outcome o;
  std::mt19937_64 rng(5000);
  const long long c5 = static_cast<long long>(std::ceil(6250.0L * (3.0L + 2.0L * std::sqrt(2.0L))));
  int max4 = 0, max5 = 0;
  auto so = genus_oracle(0);
  auto mo = minor_oracle(5);
  for (int i = 0; i < 100; ++i) {
    int n = 20 + (i * 29) % 381;
    Graph g = random_planar(n, 0.5 + 0.005 * i, 5000 + i);
    auto lists = random_lists(n, 4, 4 + i % 5, rng);
    std::string tag = "n=" + std::to_string(n);
    try {
      Colouring a = surface_four_colour(g, lists, 0, so);
      auto au = audit_by_hand(g, a);
      max4 = std::max(max4, au.clustering);
      if (!au.complete || !respects(a, lists) || au.clustering > 3000) o.fail("surface " + tag);
      Colouring b = minor_free_colour(g, lists, 5, mo);
      auto bu = audit_by_hand(g, b);
      max5 = std::max(max5, bu.clustering);
      if (!bu.complete || !respects(b, lists) || bu.clustering > c5) o.fail("minor " + tag);
    } catch (const Error& e) {
      o.fail(tag + ": " + e.what());
    }
  }
  if (o.pass)
    o.detail = "max clustering " + std::to_string(max4) + " <= 3000 and " + std::to_string(max5) + " <= " + std::to_string(c5);
  return o;
}

Outcome gomory_hu_exact() {
  Outcome o;
  std::mt19937_64 rng(6000);
  long long pairs = 0;
  for (int i = 0; i < 50; ++i) {
    int n = 2 + i % 24;
    Graph g = random_connected(n, 0.1 + 0.01 * (i % 30), rng);
    auto t = gomory_hu(g);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++pairs)
        if (t.min_cut(u, v) != boost_min_cut(g, u, v)) o.fail("graph " + std::to_string(i));
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

bool certificate_by_hand(const Graph& g, const ImmersionCertificate& c, int t) {
  if (static_cast<int>(c.branch.size()) != t || static_cast<int>(c.paths.size()) != t * (t - 1) / 2) return false;
  if (std::set<int>(c.branch.begin(), c.branch.end()).size() != c.branch.size()) return false;
  std::set<std::pair<int, int>> used;
  std::size_t p = 0;
  for (int a = 0; a < t; ++a)
    for (int b = a + 1; b < t; ++b, ++p) {
      const auto& path = c.paths[p];
      if (path.size() < 2) return false;
      if (std::minmax(path.front(), path.back()) != std::minmax(c.branch[a], c.branch[b])) return false;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.adjacent(path[i], path[i + 1])) return false;
        if (!used.insert(std::minmax(path[i], path[i + 1])).second) return false;
      }
    }
  return true;
}

Outcome immersion() {
  Outcome o;
  int coloured = 0, certified = 0, worst = 0;
  for (int i = 0; i < 100; ++i) {
    Graph g = random_subcubic(20 + (i * 7) % 181, 7000 + i);
    try {
      auto chi = immersion_two_colour(g, 5);
      auto a = audit_by_hand(g, chi);
      worst = std::max(worst, a.defect);
      if (!a.complete || a.colours > 2 || a.defect >= 64) o.fail("graph " + std::to_string(i));
      ++coloured;
    } catch (const ImmersionFound& e) {
      if (certificate_by_hand(g, e.certificate(), 5)) ++certified;
      else o.fail("bad certificate, graph " + std::to_string(i));
    }
  }
  if (o.pass)
    o.detail = std::to_string(coloured) + " coloured (max defect " + std::to_string(worst) + "), " +
               std::to_string(certified) + " certified";
  return o;
}

Outcome vdhw() {
  Outcome o;
  for (int i = 0; i < 100; ++i) {
    int n = 20 + (i * 31) % 381;
    Graph g = random_planar(n, 0.4 + 0.006 * i, 8000 + i);
    try {
      auto r = vdhw_colour(g, 5);
      auto a = audit_by_hand(g, r.defect_variant);
      auto b = audit_by_hand(g, r.cluster_variant);
      if (!a.complete || a.colours > 4 || a.defect > 3) o.fail("defect variant n=" + std::to_string(n));
      if (!b.complete || b.colours > 8 || b.clustering > 2) o.fail("cluster variant n=" + std::to_string(n));
    } catch (const Error& e) {
      o.fail(std::string("n=") + std::to_string(n) + ": " + e.what());
    }
  }
  if (o.pass) o.detail = "100 planar graphs";
  return o;
}

Outcome kkn() {
  Outcome o;
  OracleLimits lim;
  lim.list_cap = 40;
  for (auto [s, d] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}}) {
    auto gad = kkn_gadget(s, d);
    if (list_colourable_with_defect(gad.graph, gad.lists, d, lim))
      o.fail("(" + std::to_string(s) + "," + std::to_string(d) + ") colourable");
  }
  if (o.pass) o.detail = "3 gadgets not colourable";
  return o;
}

Outcome ctd() {
  Outcome o;
  for (int k = 1; k <= 15; ++k) {
    int want = 0;  // ceil(log2(k+1))
    while ((1 << want) < k + 1) ++want;
    if (connected_tree_depth(path_graph(k)) != want) o.fail("P_" + std::to_string(k));
  }
  for (int k = 2; k <= 14; ++k)
    if (connected_tree_depth(cycle_graph(k + 1)) != 2 + ilog2_floor(k)) o.fail("C_" + std::to_string(k + 1));
  if (o.pass) o.detail = "P_1..P_15, C_3..C_15";
  return o;
}

Outcome circumference_engine() {
  Outcome o;
  std::mt19937_64 rng(9000);
  for (int i = 0; i < 50; ++i) {
    int k = 2 + i % 7;
    int n = 10 + (i * 11) % 31;
    Graph g = random_block_tree(n, k, rng);
    int circ = circumference(g);
    if (circ > k) {
      o.fail("generator produced circumference " + std::to_string(circ));
      continue;
    }
    auto chi = circumference_colour(g, k);
    auto a = audit_by_hand(g, chi);
    int budget = 0;  // floor(3 log2 k) = largest b with 2^b <= k^3
    while ((1LL << (budget + 1)) <= 1LL * k * k * k) ++budget;
    if (!a.complete || a.colours > budget || a.clustering > k)
      o.fail("k=" + std::to_string(k) + " n=" + std::to_string(g.n()));
  }
  if (o.pass) o.detail = "50 graphs, 2 <= k <= 8";
  return o;
}

Outcome defect2() {
  Outcome o;
  for (int i = 0; i < 50; ++i) {
    Graph g = random_bounded_degree(60 + (i * 23) % 400, 3 + i % 8, 0.8, 10000 + i);
    int delta = g.max_degree();
    auto base = lovasz_defective(g, 2);
    int k = base.k;
    Defect2Options opt;
    opt.seed = 10000 + i;
    auto r = defect2_to_cluster(g, base.colouring, delta, opt);
    auto a = audit_by_hand(g, r.colouring);
    bool ok = a.complete && a.colours <= k + 1 && a.clustering <= 24 * delta && delta <= 10;
    for (int c : r.colouring.colour) ok = ok && c >= 0 && c <= k;
    ok = ok && r.transversal.size() == r.segments.size();
    for (std::size_t s = 0; ok && s < r.transversal.size(); ++s)
      ok = std::count(r.segments[s].begin(), r.segments[s].end(), r.transversal[s]) == 1;
    for (std::size_t x = 0; ok && x < r.transversal.size(); ++x)
      for (std::size_t y = x + 1; ok && y < r.transversal.size(); ++y) ok = !g.adjacent(r.transversal[x], r.transversal[y]);
    if (!ok) o.fail("instance " + std::to_string(i));
  }
  if (o.pass) o.detail = "50 conversions";
  return o;
}

Outcome calculators() {
  Outcome o;
  // s, t, mad, nabla, hand-evaluated bound.
  struct Oow {
    int s, t;
    Rational mad, nabla;
    long long want;
  };
  std::vector<Oow> oow{
      {1, 5, Rational(3), Rational(2), 4},          // t-1
      {1, 9, Rational(5), Rational(1), 8},          // t-1
      {2, 3, Rational(2), Rational(0), 2},          // (mad-2) = 0 -> mad
      {2, 3, Rational(4), Rational(3), 13},         // 0.5*2*3*3 + 4
      {2, 2, Rational(9, 2), Rational(5, 2), 10},   // 0.5*2.5*2.5*2 + 4.5 = 10.75
      {3, 2, Rational(6), Rational(4), 30},         // 3*(C(4,2)*1 + 2) + 6
      {3, 3, Rational(5), Rational(3), 20},         // 2*(3*2 + 1.5) + 5
      {4, 2, Rational(6), Rational(5), 31},         // 2*(10*1 + 2.5) + 6
      {3, 1, Rational(4), Rational(2), 5},          // 1*(1*0 + 1) + 4
      {5, 3, Rational(7), Rational(4), 15},         // 2*(1*2 + 2) + 7
      {1, 1, Rational(0), Rational(0), 0},
  };
  for (const auto& r : oow)
    if (oow_light_bound(r.s, r.t, r.mad, r.nabla) != r.want) o.fail("oow s=" + std::to_string(r.s));
  // m, k = floor(m/2)+1, d = ceil(m^2/(4k-2m) + m/2).
  struct Mad {
    Rational m;
    int k, d;
  };
  std::vector<Mad> mad{{Rational(4), 3, 6},   {Rational(2), 2, 2},     {Rational(6), 4, 12},  {Rational(1), 1, 1},
                       {Rational(3), 2, 6},   {Rational(5), 3, 15},    {Rational(8), 5, 20},  {Rational(7, 2), 2, 14},
                       {Rational(12), 7, 42}, {Rational(10), 6, 30},   {Rational(1, 2), 1, 1}};
  for (const auto& r : mad) {
    auto p = mad_defect_params(r.m);
    if (p.k != r.k || p.d != r.d || Rational(1, p.k) + Rational(1, p.d) > 2 / r.m)
      o.fail("mad m=" + std::to_string(boost::rational_cast<double>(r.m)));
  }
  // ell = 2kg + 8k^2 + 2k + 1.
  struct Thick {
    int g, k;
    long long want;
  };
  std::vector<Thick> thick{{0, 1, 11}, {0, 2, 37}, {1, 1, 13},  {5, 1, 21},  {2, 2, 45},  {0, 3, 79},
                           {3, 3, 97}, {10, 1, 31}, {10, 5, 311}, {1, 4, 145}, {4, 2, 53}};
  for (const auto& r : thick)
    if (thickness_light_bound(r.g, r.k) != r.want) o.fail("thickness g=" + std::to_string(r.g));
  if (thickness_light_bound(0, 2) - 1 != 36) o.fail("defect entry at g=0, k=2");
  if (o.pass) o.detail = "11 + 11 + 11 cases";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion all[] = {
      {"standard-example lower bounds", standard_examples},
      {"outerplanar 2-colouring", outerplanar},
      {"Poh 3-colouring", poh},
      {"hex exhaustive", hex},
      {"Lovasz recolouring", lovasz},
      {"fragmentation bounds", fragmentation},
      {"island clustering", islands},
      {"Gomory-Hu exactness", gomory_hu_exact},
      {"immersion colouring", immersion},
      {"vdHW colourings", vdhw},
      {"Kkn gadgets", kkn},
      {"connected tree-depth formulas", ctd},
      {"circumference colouring", circumference_engine},
      {"defect-2 to clustered", defect2},
      {"parameter calculators", calculators},
  };
  int failed = 0, idx = 0;
  for (const auto& c : all) {
    ++idx;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("criterion %2d %s: %s (%s; %.2f s)\n", idx, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", idx - failed, idx);
  return failed == 0 ? 0 : 1;
}
