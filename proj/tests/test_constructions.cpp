#include <doctest.h>

#include <algorithm>
#include <set>

#include "brute.hpp"
#include "dcol/constructions.hpp"
#include "dcol/errors.hpp"
#include "dcol/oracle.hpp"

using namespace dcol;

TEST_CASE("standard_defect sizes") {
  CHECK(standard_defect(0, 3).n() == 1);
  CHECK(standard_defect(0, 3).m() == 0);
  CHECK(standard_defect(1, 2) == star_graph(3));
  CHECK(standard_defect(2, 2).n() == 13);
  for (int d = 1; d <= 3; ++d)
    for (int h = 0; h <= 3; ++h) {
      Graph s = standard_defect(h, d);
      long long p = 1;
      for (int i = 0; i <= h; ++i) p *= d + 1;
      CHECK(s.n() == (p - 1) / d);
      // The root is dominant; removing it leaves d+1 copies.
      if (h >= 1) {
        CHECK(s.degree(0) == s.n() - 1);
        std::vector<char> alive(s.n(), 1);
        alive[0] = 0;
        CHECK(static_cast<int>(components_of(s, alive).size()) == d + 1);
      }
    }
}

TEST_CASE("standard_defect is the closure of a tree of depth h+1") {
  for (int h = 0; h <= 2; ++h) CHECK(connected_tree_depth(standard_defect(h, 1)) == h + 1);
  CHECK(connected_tree_depth(standard_defect(2, 2)) == 3);
}

TEST_CASE("standard_defect has no long cycles") {
  for (int h = 1; h <= 3; ++h) {
    Graph s = standard_defect(h, 1);
    CHECK(circumference(s) < (1 << h) + 1);
    CHECK(brute::circumference(s) == circumference(s));
  }
}

TEST_CASE("standard_cluster") {
  CHECK(standard_cluster(1, 3) == path_graph(4));
  Graph s = standard_cluster(2, 2);
  CHECK(s.n() == 7);
  CHECK(s.m() == 2 * 2 + 6);
  for (int c = 1; c <= 5; ++c) {
    Graph t = standard_cluster(2, c);
    CHECK(is_outerplanar(t));
    Embedding e = standard_cluster_two_embedding(c);
    CHECK(e.graph == t);
    CHECK(e.is_plane());
    bool outer = false;
    for (const auto& f : e.faces()) {
      std::set<int> vs(f.begin(), f.end());
      outer = outer || static_cast<int>(vs.size()) == t.n();
    }
    CHECK(outer);
  }
}

TEST_CASE("kst_star") {
  CHECK(kst_star(1, 4) == complete_bipartite(1, 4));
  CHECK(kst_star(2, 2).n() == 5);
  CHECK(kst_star(7, 13).n() == 41);
  CHECK(kst_star(3, 2).m() == 6 + 6);
}

TEST_CASE("hex_grid") {
  for (int k = 2; k <= 10; ++k) {
    HexBoard b = hex_grid(k);
    CHECK_NOTHROW(b.tri.validate());
    CHECK(b.tri.graph.max_degree() <= 6);
    for (int i = 0; i < 2; ++i) {
      auto from = b.arc(i), to = b.arc(i + 2);
      int best = 1 << 30;
      for (int s : from) {
        auto dist = bfs_distances(b.tri.graph, s);
        for (int t : to) best = std::min(best, dist[t]);
      }
      CHECK(best >= k);
    }
    // Arcs cover the outer cycle.
    std::set<int> seen;
    for (int i = 0; i < 4; ++i)
      for (int v : b.arc(i)) seen.insert(v);
    CHECK(seen.size() == b.tri.outer.size());
  }
}

TEST_CASE("outerplanar gadget") {
  Graph g = outerplanar_gadget();
  CHECK(min_colours_defect(g, 1) == 3);
  CHECK_FALSE(has_minor(g, complete_graph(4)));
  CHECK_FALSE(has_minor(g, complete_bipartite(2, 3)));
  CHECK(find_colouring_defect(g, 2, 2).has_value());
  CHECK(brute::min_colours(g, [](int d, int) { return d <= 1; }) == 3);
}

TEST_CASE("kkn_gadget") {
  auto a = kkn_gadget(1, 0);
  CHECK(a.graph == complete_bipartite(1, 1));
  CHECK_FALSE(list_colourable_with_defect(a.graph, a.lists, 0));
  auto b = kkn_gadget(2, 1);
  CHECK(b.t == 12);
  CHECK(b.graph.n() == 14);
  CHECK(b.lists.min_size() == 2);
  for (const auto& l : b.lists.lists) CHECK(l.size() == 2);
  CHECK_FALSE(list_colourable_with_defect(b.graph, b.lists, 1));
  // Relaxing the defect admits a colouring.
  CHECK(list_colourable_with_defect(b.graph, b.lists, 12).has_value());
}

TEST_CASE("xkc_family") {
  CHECK(xkc_family(1, 3, "P") == path_graph(4));
  CHECK(xkc_family(1, 3, "K") == star_graph(3));
  Graph g = xkc_family(2, 2, "K'");
  CHECK(g.n() == 7);
  CHECK_FALSE(find_colouring_clustering(g, 2, 2).has_value());
  // Every clustering-2 colouring of the k=2 member has a rainbow triangle.
  int rainbow_free = 0;
  std::vector<int> col(g.n(), 0);
  auto tri = cliques_of_size(g, 3);
  for (;;) {
    if (brute::measure(g, col).second <= 2) {
      bool rainbow = false;
      for (const auto& t : tri) {
        std::set<int> cs{col[t[0]], col[t[1]], col[t[2]]};
        rainbow = rainbow || cs.size() == 3;
      }
      rainbow_free += !rainbow;
    }
    int i = 0;
    while (i < g.n() && ++col[i] == 3) col[i++] = 0;
    if (i == g.n()) break;
  }
  CHECK(rainbow_free == 0);
  CHECK_FALSE(find_colouring_clustering(xkc_family(2, 2, "P+"), 2, 2).has_value());
  CHECK_THROWS_AS(xkc_family(3, 3, "P'''", 50), CapExceeded);
  CHECK_THROWS_AS(xkc_family(2, 2, "P"), InvalidInput);
}

TEST_CASE("gk_circumference_gadget") {
  CHECK(gk_circumference_gadget(2, 3) == path_graph(4));
  Graph g = gk_circumference_gadget(3, 2);
  CHECK(g.n() == 3 + 2 * 3 * 3);
  CHECK_FALSE(find_colouring_clustering(g, 3, 2).has_value());
  OracleLimits lim;
  lim.minor_pattern_cap = 13;
  CHECK_FALSE(has_minor(g, standard_defect(2, 2), lim));
  CHECK_THROWS_AS(gk_circumference_gadget(6, 4, 100), CapExceeded);
}

TEST_CASE("thickness witnesses") {
  auto w = thickness_gadget(4);
  CHECK(w.graph.n() == 10);
  CHECK(w.graph.m() == 12);
  CHECK(w.parts.size() == 2);
  CHECK(is_thickness_witness(w));
  for (const auto& p : w.parts) {
    CHECK_FALSE(has_minor(p.graph, complete_graph(5)));
    CHECK_FALSE(has_minor(p.graph, complete_bipartite(3, 3)));
  }
  for (int k = 1; k <= 2; ++k) {
    auto s = standard_thickness_witness(k, 2);
    CHECK(s.graph == standard_defect(2 * k, 2));
    CHECK(static_cast<int>(s.parts.size()) == k);
    CHECK(is_thickness_witness(s));
  }
}

TEST_CASE("high girth regular and line graphs") {
  Graph g = high_girth_regular(3, 4);
  CHECK(g.min_degree() == 3);
  CHECK(g.max_degree() == 3);
  CHECK(girth(g) >= 5);
  Graph h = high_girth_regular(3, 3, 7);
  CHECK(girth(h) >= 4);
  Graph l = line_graph(g);
  CHECK(l.n() == g.m());
  CHECK(l.min_degree() == 4);
  CHECK(l.max_degree() == 4);
  CHECK(line_graph(petersen_graph()).m() == 15 * 4 / 2);
}

TEST_CASE("random generators") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto o = random_maximal_outerplanar(12, seed);
    CHECK_NOTHROW(o.validate());
    CHECK(o.graph.m() == 2 * 12 - 3);
    CHECK(is_outerplanar(o.graph));
    auto t = random_plane_triangulation(30, seed);
    CHECK_NOTHROW(t.validate());
    CHECK(t.graph.m() == 3 * 30 - 6);
    CHECK(is_planar(random_planar(40, 0.6, seed)));
    CHECK(random_bounded_degree(40, 5, 0.8, seed).max_degree() <= 5);
    CHECK(random_subcubic(30, seed).max_degree() <= 3);
  }
  CHECK(random_plane_triangulation(25, 3).graph == random_plane_triangulation(25, 3).graph);
}

TEST_CASE("cliques_of_size") {
  CHECK(cliques_of_size(complete_graph(5), 3).size() == 10);
  CHECK(cliques_of_size(cycle_graph(5), 3).empty());
  CHECK(cliques_of_size(petersen_graph(), 2).size() == 15);
}

TEST_CASE("standard examples meet their lower bounds") {
  OracleLimits lim;
  lim.colour_cap = 64;
  for (int h = 0; h <= 3; ++h) {
    for (int d = 1; d <= 2; ++d) CHECK(min_colours_defect(standard_defect(h, d), d, lim) == h + 1);
    if (h >= 1)
      for (int c = 2; c <= 3; ++c) CHECK(min_colours_clustering(standard_cluster(h, c), c, lim) == h + 1);
  }
}
