#include <random>
#include <set>

#include "brute.hpp"
#include "dcol/errors.hpp"
#include "dcol/graph.hpp"
#include "doctest.h"

using namespace dcol;

TEST_CASE("graph stores sorted simple adjacency") {
  Graph g(4, {{0, 1}, {1, 0}, {2, 1}, {3, 0}});
  CHECK(g.m() == 3);
  CHECK(g.neighbours(1) == std::vector<int>{0, 2});
  CHECK(g.adjacent(0, 3));
  CHECK_FALSE(g.adjacent(2, 3));
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidInput);
}

TEST_CASE("builder counts duplicates") {
  GraphBuilder b;
  b.add_edge(0, 1);
  b.add_edge(1, 0);
  b.add_edge(1, 2);
  Graph g = b.build();
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(b.duplicates() == 1);
}

TEST_CASE("bfs layering") {
  auto single = bfs_layering(Graph(1), 0);
  CHECK(single.layers.size() == 1);

  auto p = bfs_layering(path_graph(3), 0);
  REQUIRE(p.layers.size() == 3);
  CHECK(p.layers[2] == std::vector<int>{2});

  auto grid = bfs_layering(grid_graph(5, 5), 0);
  std::vector<std::size_t> sizes;
  for (auto& l : grid.layers) sizes.push_back(l.size());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3, 4, 5, 4, 3, 2, 1});
  CHECK(grid.spans_ok(grid_graph(5, 5)));

  Graph split(3, {{0, 1}});
  try {
    bfs_layering(split, 0);
    FAIL("expected an error");
  } catch (const HypothesisViolation& e) {
    CHECK(e.witness() == std::vector<int>{2});
    CHECK(std::string(e.what()).find("vertex 2") != std::string::npos);
  }
}

TEST_CASE("bfs layering spans edges on random connected graphs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Graph g = brute::random_connected(30, 0.08, rng);
    auto L = bfs_layering(g, t % 30);
    CHECK(L.spans_ok(g));
  }
}

TEST_CASE("mad exact values") {
  CHECK(mad_exact(Graph()) == Rational(0));
  CHECK(mad_exact(Graph(5)) == Rational(0));
  CHECK(mad_exact(complete_graph(4)) == Rational(3));
  for (int n = 2; n < 9; ++n) CHECK(mad_exact(path_graph(n)) == Rational(2 * (n - 1), n));
  // K4 plus a pendant path: the K4 is densest.
  Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(mad_exact(g) == Rational(3));
}

TEST_CASE("mad agrees with subset enumeration") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 80; ++t) {
    int n = 1 + t % 12;
    Graph g = brute::random_graph(n, 0.15 + 0.01 * (t % 60), rng);
    auto [num, den] = brute::mad(g);
    Rational m = mad_exact(g);
    CHECK(m == Rational(num, den));
    CHECK(m == mad_enumerate(g));
    CHECK(m >= Rational(2 * static_cast<std::int64_t>(g.m()), n));
  }
}

TEST_CASE("blocks and cut vertices") {
  auto tri = blocks_and_cutvertices(complete_graph(3));
  CHECK(tri.blocks.size() == 1);
  CHECK(tri.cut_vertices.empty());

  Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  auto bt = blocks_and_cutvertices(bowtie);
  CHECK(bt.blocks.size() == 2);
  CHECK(bt.cut_vertices == std::vector<int>{2});
}

TEST_CASE("blocks partition edges and match brute-force cut vertices") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    Graph g = brute::random_graph(30, 0.04 + 0.002 * t, rng);
    auto bd = blocks_and_cutvertices(g);
    std::size_t total = 0;
    std::set<Edge> seen;
    for (auto& es : bd.block_edges) {
      total += es.size();
      for (auto e : es) seen.insert(e);
    }
    CHECK(total == g.m());
    CHECK(seen.size() == g.m());

    std::vector<int> cuts;
    std::vector<char> alive(g.n(), 1);
    int base = brute::components(g, alive);
    for (int v = 0; v < g.n(); ++v) {
      alive[v] = 0;
      if (brute::components(g, alive) > base - (g.degree(v) == 0 ? 1 : 0)) cuts.push_back(v);
      alive[v] = 1;
    }
    CHECK(bd.cut_vertices == cuts);

    // Each block with at least 3 vertices survives deletion of any one vertex.
    for (auto& b : bd.blocks) {
      if (b.size() < 3) continue;
      Graph sub = g.induced(b);
      for (int v = 0; v < sub.n(); ++v) {
        std::vector<char> al(sub.n(), 1);
        al[v] = 0;
        CHECK(brute::components(sub, al) == 1);
      }
    }
    // Distinct blocks share at most one vertex.
    for (std::size_t i = 0; i < bd.blocks.size(); ++i)
      for (std::size_t j = i + 1; j < bd.blocks.size(); ++j) {
        std::vector<int> common;
        std::set_intersection(bd.blocks[i].begin(), bd.blocks[i].end(), bd.blocks[j].begin(), bd.blocks[j].end(),
                              std::back_inserter(common));
        CHECK(common.size() <= 1);
      }
  }
}

TEST_CASE("contract_set") {
  Graph c4 = cycle_graph(4);
  auto id = contract_set(c4, {2});
  CHECK(id.graph == c4);

  auto tri = contract_set(c4, {0, 1});
  CHECK(tri.graph.n() == 3);
  CHECK(tri.graph == complete_graph(3));

  Graph grid = grid_graph(4, 4);
  auto row = contract_set(grid, {0, 1, 2, 3});
  CHECK(row.graph.n() == 13);
  int hub = row.merged;
  CHECK(row.graph.degree(hub) == 4);
  for (int c = 0; c < 4; ++c) CHECK(row.graph.adjacent(hub, row.map[4 + c]));
  CHECK(row.graph.m() == grid.m() - 3);

  CHECK_THROWS_AS(contract_set(grid, {0, 2}), InvalidInput);
}

TEST_CASE("contract_set preserves counts on random connected sets") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    Graph g = brute::random_connected(20, 0.1, rng);
    auto L = bfs_layering(g, 0);
    std::vector<int> s;
    for (std::size_t i = 0; i < L.layers.size() && i < 2; ++i) s.insert(s.end(), L.layers[i].begin(), L.layers[i].end());
    auto c = contract_set(g, s);
    CHECK(c.graph.n() == g.n() - static_cast<int>(s.size()) + 1);
    for (int v = 0; v < c.graph.n(); ++v) CHECK_FALSE(c.graph.adjacent(v, v));
  }
}

TEST_CASE("plane triangulation validation") {
  PlaneTriangulation k4{complete_graph(4), {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}}, {0, 1, 2}};
  CHECK_NOTHROW(k4.validate());
  PlaneTriangulation broken = k4;
  broken.faces.pop_back();
  CHECK_THROWS_AS(broken.validate(), InvalidInput);
}

TEST_CASE("t-partition adhesion") {
  // Path 0-1-2-3 split into bags {0,1},{2},{3} on a path tree.
  TPartition tp{path_graph(3), {{0, 1}, {2}, {3}}};
  Graph host(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 3}});
  CHECK_NOTHROW(tp.validate(host));
  auto cross = tp.edge_crossings(host);
  REQUIRE(cross.size() == 2);
  CHECK(cross[0].second == 3);
  CHECK(cross[1].second == 2);
  CHECK(tp.adhesion(host) == 3);
}
