#include <algorithm>
#include <cmath>
#include <random>

#include "brute.hpp"
#include "dcol/constructions.hpp"
#include "dcol/errors.hpp"
#include "dcol/oracle.hpp"
#include "dcol/separator.hpp"
#include "doctest.h"

using namespace dcol;

namespace {

// Middle vertex of the largest path component, in walk order.
SeparatorOracle middle_vertex_oracle() {
  SeparatorOracle o;
  o.c = 1.0;
  o.beta = 0.5;
  o.c_squared = Rational(1);
  o.name = "middle";
  o.find = [](const Graph& h) -> std::vector<int> {
    if (2 * static_cast<std::size_t>(h.n()) <= 1) return {};
    int start = 0;
    for (int v = 0; v < h.n(); ++v)
      if (h.degree(v) <= 1) {
        start = v;
        break;
      }
    std::vector<int> walk{start};
    int prev = -1, cur = start;
    for (;;) {
      int next = -1;
      for (int w : h.neighbours(cur))
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      walk.push_back(cur);
    }
    return {walk[walk.size() / 2]};
  };
  return o;
}

// Smallest N with N >= p + q sqrt 2, by integer arithmetic on squares.
long long ceil_p_plus_q_sqrt2(long long p, long long q) {
  long long n = p;
  while ((n - p) * (n - p) < 2 * q * q) ++n;
  return n;
}

void check_island(const Graph& g, const std::vector<int>& island, int k) {
  REQUIRE_FALSE(island.empty());
  std::vector<char> in(g.n(), 0);
  for (int v : island) in[v] = 1;
  for (int v : island) {
    int outside = 0;
    for (int w : g.neighbours(v)) outside += !in[w];
    CHECK(outside <= k);
  }
}

void check_fragment(const Graph& g, const SeparatorOracle& o, int p, const std::vector<int>& s) {
  std::vector<char> alive(g.n(), 1);
  for (int v : s) alive[v] = 0;
  for (const auto& c : components_of(g, alive)) CHECK(static_cast<int>(c.size()) <= p);
  CHECK(static_cast<double>(s.size()) <= fragment_bound(o, g.n(), p) + 1e-9);
}

}  // namespace

TEST_CASE("closed-form constants") {
  // p for c = 2, beta = 1/2, eps = 1/10: 2 (20/(sqrt2-1))^2 = 2400 + 1600 sqrt 2.
  SeparatorOracle two = exact_separator_oracle(2.0, 0.5);
  two.c_squared = Rational(4);
  CHECK(fragment_epsilon_p(two, Rational(1, 10)) == 4663);
  CHECK(ceil_p_plus_q_sqrt2(2400, 1600) == 4663);
  // c_5 = 50 * 125 * (3 + 2 sqrt 2) = 18750 + 12500 sqrt 2.
  CHECK(minor_clustering_bound(5) == 36428);
  for (int t = 3; t <= 9; ++t) {
    long long t3 = 1LL * t * t * t;
    CHECK(minor_clustering_bound(t) == ceil_p_plus_q_sqrt2(150 * t3, 100 * t3));
    double approx = 2.0 * std::pow(5.0 * std::pow(t, 1.5) / (std::sqrt(2.0) - 1.0), 2.0);
    CHECK(std::abs(minor_clustering_bound(t) - approx) < 1.0);
  }
  // Planar island, k = 3, alpha = 1/2: ceil(2 (8c/(sqrt2-1))^2) with c^2 = 12.
  CHECK(separator_island_bound(genus_oracle(0), 3, Rational(1, 2)) == ceil_p_plus_q_sqrt2(3 * 1536, 2 * 1536));
  // Surface loop at g = 0 stays under 3000.
  auto s0 = surface_four_spec(0);
  std::int64_t b0 = island_loop_bound(s0, genus_oracle(0));
  double approx0 = 2.0 * std::pow(4.0 * 2.0 * std::sqrt(3.0) / (0.9995 * (std::sqrt(2.0) - 1.0)), 2.0);
  CHECK(std::abs(b0 - approx0) < 1.0);
  CHECK(b0 <= 3000);
  for (int g = 0; g <= 20; ++g) CHECK(island_loop_bound(surface_four_spec(g), genus_oracle(g)) <= 1500 * (g + 2));
  // The island bound sits under c_t for t <= 6.
  for (int t = 3; t <= 6; ++t)
    CHECK(island_loop_bound(minor_free_spec(t), minor_oracle(t)) <= minor_clustering_bound(t));
  CHECK(ceil_times_three_plus_two_sqrt2(Rational(1)) == 6);
  CHECK(ceil_times_three_plus_two_sqrt2(Rational(1, 2)) == 3);
}

TEST_CASE("fragment: trivial and path cases") {
  auto mid = middle_vertex_oracle();
  CHECK(fragment(path_graph(30), mid, 30).empty());
  Graph p100 = path_graph(100);
  auto s = fragment(p100, mid, 10);
  check_fragment(p100, mid, 10, s);
  auto f = fragment_epsilon(path_graph(400), mid, Rational(1, 20));
  CHECK(f.s.size() * 20 <= 400);
  auto one = fragment_epsilon(path_graph(50), mid, Rational(1));
  CHECK(one.s.size() <= 50);
}

TEST_CASE("fragment: grid with the level oracle") {
  auto o = genus_oracle(0);
  Graph grid = grid_graph(20, 20);
  auto s = fragment(grid, o, 16);
  check_fragment(grid, o, 16, s);
  auto f = fragment_epsilon(grid_graph(60, 60), o, Rational(9, 10));
  CHECK(10 * f.s.size() <= 9 * 3600);
}

TEST_CASE("fragment rejects oracles that break their declaration") {
  SeparatorOracle bad = middle_vertex_oracle();
  bad.find = [](const Graph& h) { return std::vector<int>{0}; };
  try {
    fragment(path_graph(20), bad, 5);
    FAIL("expected a violation");
  } catch (const HypothesisViolation& e) {
    CHECK(e.witness().size() == 20);
  }
  SeparatorOracle big = middle_vertex_oracle();
  big.find = [](const Graph& h) {
    std::vector<int> s;
    for (int v = 0; v < h.n(); v += 2) s.push_back(v);
    return s;
  };
  CHECK_THROWS_AS(fragment(path_graph(20), big, 5), HypothesisViolation);
}

TEST_CASE("builtin oracles") {
  auto exact = exact_separator_oracle(1.0, 0.5);
  CHECK(exact.find(path_graph(9)).size() == 1);
  std::mt19937_64 rng(71);
  for (int t = 0; t < 20; ++t) {
    int n = 5 + t * 7;
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    Graph tree(n, es);
    auto s = exact.find(tree);
    REQUIRE(s.size() == 1);
    CHECK(is_balanced_separator(tree, s));
    CHECK(bfs_level_oracle(1.0, 0.5).find(tree) == s);
  }
  Graph grid = grid_graph(15, 15);
  auto s = genus_oracle(0).find(grid);
  CHECK(is_balanced_separator(grid, s));
  CHECK(s.size() * s.size() <= 12 * 225);
  CHECK(genus_oracle(0).find(Graph(10)).empty());
}

TEST_CASE("planar oracle meets its declaration where BFS levels are wide") {
  // Random triangulations have small diameter, so their middle levels are large.
  for (int seed = 0; seed < 6; ++seed) {
    Graph g = random_plane_triangulation(300 + 20 * seed, seed).graph;
    auto s = genus_oracle(0).find(g);
    CHECK(is_balanced_separator(g, s));
    CHECK(s.size() * s.size() <= 12 * static_cast<std::size_t>(g.n()));
    Graph h = random_planar(336, 0.86, 4152 + seed);
    auto o = genus_oracle(0);
    check_fragment(h, o, 20, fragment(h, o, 20));
  }
}

TEST_CASE("separator_island") {
  auto mid = middle_vertex_oracle();
  Graph p = path_graph(200);
  auto island = separator_island(p, mid, 1, Rational(1));
  check_island(p, island, 1);
  CHECK(static_cast<std::int64_t>(island.size()) <= separator_island_bound(mid, 1, Rational(1)));
  CHECK(separator_island_bound(mid, 1, Rational(1)) < 200);

  CHECK_THROWS_AS(separator_island(complete_graph(3), exact_separator_oracle(1.0, 0.5), 1, Rational(1)),
                  HypothesisViolation);

  std::mt19937_64 rng(73);
  for (int t = 0; t < 20; ++t) {
    int k = 1 + t % 3, n = 25;
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v)
      for (int j = 0; j < std::min(v, k); ++j) es.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    Graph g(n, es);
    auto is = separator_island(g, exact_separator_oracle(5.0, 0.5), k, Rational(1, 2));
    check_island(g, is, k);
  }
  for (int t = 0; t < 10; ++t) {
    Graph g = random_planar(120, 0.9, 100 + t);
    auto o = genus_oracle(0);
    auto is = separator_island(g, o, 3, Rational(1, 2));
    check_island(g, is, 3);
    CHECK(static_cast<std::int64_t>(is.size()) <= separator_island_bound(o, 3, Rational(1, 2)));
  }
}

TEST_CASE("surface_four_colour on planar graphs") {
  CHECK(surface_four_colour(Graph(), ListAssignment(), 0, genus_oracle(0)).n() == 0);
  std::mt19937_64 rng(79);
  for (int t = 0; t < 10; ++t) {
    Graph g = random_planar(300, 0.95, 200 + t);
    std::vector<std::vector<int>> ls(g.n());
    for (auto& l : ls) {
      std::vector<int> pool{0, 1, 2, 3, 4, 5, 6};
      std::shuffle(pool.begin(), pool.end(), rng);
      l.assign(pool.begin(), pool.begin() + 4);
      std::sort(l.begin(), l.end());
    }
    ListAssignment lists(ls);
    auto chi = surface_four_colour(g, lists, 0, genus_oracle(0));
    CHECK(respects_lists(chi, lists));
    CHECK(audit(g, chi).clustering <= 3000);
  }
  // Genus hypothesis: K_8 has 28 edges, not below 3(8 + 1).
  CHECK_NOTHROW(surface_four_colour(complete_graph(8), ListAssignment::uniform(8, 4), 1, exact_separator_oracle(9.0, 0.5)));
  CHECK_THROWS_AS(surface_four_colour(complete_graph(12), ListAssignment::uniform(12, 4), 0, genus_oracle(0)),
                  HypothesisViolation);
}

TEST_CASE("surface_three_colour") {
  Graph g = grid_graph(12, 12);
  auto chi = surface_three_colour(g, ListAssignment::uniform(g.n(), 3), 0, 4, genus_oracle(0));
  CHECK(audit(g, chi).clustering <= island_loop_bound(surface_three_spec(0, 4), genus_oracle(0)));
  Graph c = cycle_graph(40);
  auto chi2 = surface_three_colour(c, ListAssignment::uniform(40, 2), 0, 5, genus_oracle(0));
  CHECK(chi2.num_colours() <= 2);
  CHECK_THROWS_AS(surface_three_colour(complete_graph(4), ListAssignment::uniform(4, 3), 0, 4, genus_oracle(0)),
                  HypothesisViolation);
}

TEST_CASE("minor_free_colour") {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 10; ++t) {
    int n = 50 + 10 * t;
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v)
      if (v % 7) es.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    Graph forest(n, es);
    std::vector<std::vector<int>> ls(n);
    for (int v = 0; v < n; ++v) ls[v] = {v % 3, 3 + v % 2};
    ListAssignment lists(ls);
    auto chi = minor_free_colour(forest, lists, 3, minor_oracle(3));
    CHECK(respects_lists(chi, lists));
    CHECK(audit(forest, chi).clustering <= minor_clustering_bound(3));
  }
  for (int t = 0; t < 10; ++t) {
    Graph g = random_planar(200, 0.9, 300 + t);
    auto chi = minor_free_colour(g, ListAssignment::uniform(g.n(), 4), 5, minor_oracle(5));
    CHECK(audit(g, chi).clustering <= minor_clustering_bound(5));
  }
  Graph s = standard_defect(3, 2);
  auto chi = minor_free_colour(s, ListAssignment::uniform(s.n(), 4), 5, minor_oracle(5));
  CHECK(chi.num_colours() <= 4);
  OracleLimits lim;
  lim.colour_cap = 40;
  CHECK(min_colours_clustering(s, 3, lim) == 4);
  CHECK_THROWS_AS(minor_free_colour(complete_graph(5), ListAssignment::uniform(5, 2), 3, minor_oracle(3)),
                  HypothesisViolation);
  CHECK_THROWS_AS(minor_free_spec(10), InvalidInput);
}
