#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "brute.hpp"
#include "dcol/errors.hpp"
#include "dcol/oracle.hpp"
#include "dcol/planar.hpp"

using namespace dcol;

namespace {

void check_paths(const Graph& g, const Colouring& chi, int k) {
  auto cert = audit(g, chi);
  CHECK(chi.uncoloured().empty());
  CHECK(cert.k <= k);
  CHECK(cert.all_paths);
  CHECK(cert.defect <= 2);
  CHECK(brute::measure(g, chi.colour).first == cert.defect);
}

}  // namespace

TEST_CASE("outerplanar two colour") {
  check_paths(cycle_graph(6), outerplanar_two_colour(cycle_graph(6)), 2);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto t = random_maximal_outerplanar(50, seed);
    check_paths(t.graph, outerplanar_two_colour(t.graph), 2);
  }
  CHECK_THROWS_AS(outerplanar_two_colour(complete_graph(4)), HypothesisViolation);
  try {
    outerplanar_two_colour(complete_graph(4));
  } catch (const HypothesisViolation& e) {
    CHECK(std::string(e.what()).find("outerplanarity hypothesis violated") != std::string::npos);
  }
}

TEST_CASE("poh three colour") {
  auto k4 = random_plane_triangulation(4, 1);
  check_paths(k4.graph, poh_three_colour(k4), 3);
  Graph oct(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
  auto c = poh_three_colour_graph(oct, 0, 1);
  check_paths(oct, c, 3);
  CHECK(c[0] != c[1]);
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto t = random_plane_triangulation(60, seed);
    auto chi = poh_three_colour(t);
    check_paths(t.graph, chi, 3);
    CHECK(chi[t.outer[0]] != chi[t.outer[1]]);
  }
  auto big = random_plane_triangulation(200, 99);
  check_paths(big.graph, poh_three_colour(big), 3);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = random_planar(40, 0.5, seed);
    check_paths(g, poh_three_colour_graph(g), 3);
  }
  CHECK_THROWS_AS(poh_three_colour_graph(complete_graph(5)), InvalidInput);
}

TEST_CASE("genus three colour") {
  CHECK(genus_defect_bound(0) == 12);
  CHECK(genus_defect_bound(6) == 13);
  CHECK(genus_defect_bound(100) == 32);
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    Graph g = random_planar(30, 0.8, seed);
    auto cert = audit(g, genus_three_colour(g, 0));
    CHECK(cert.k <= 3);
    CHECK(cert.defect <= 12);
  }
  Graph tree = path_graph(9);
  auto cert = audit(tree, genus_three_colour(tree, 0));
  CHECK(cert.defect == 0);
  // K_15 is far from planar; the counting bound catches it.
  CHECK_THROWS_AS(genus_three_colour(complete_graph(15), 0), HypothesisViolation);
  Graph k8 = complete_graph(8);
  CHECK(audit(k8, genus_three_colour(k8, 2)).defect <= 12);
}

TEST_CASE("gale extraction") {
  auto check = [](const HexBoard& b, const Colouring& chi) {
    auto w = gale_extract(b, chi);
    for (int f = 0; f < static_cast<int>(w.dual_degrees.size()); ++f) {
      bool sp = std::find(w.special_faces.begin(), w.special_faces.end(), f) != w.special_faces.end();
      if (sp)
        CHECK(w.dual_degrees[f] == 1);
      else
        CHECK((w.dual_degrees[f] == 0 || w.dual_degrees[f] == 2));
    }
    const Graph& g = b.tri.graph;
    REQUIRE(!w.path.empty());
    std::set<int> distinct(w.path.begin(), w.path.end());
    CHECK(distinct.size() == w.path.size());
    for (std::size_t i = 0; i + 1 < w.path.size(); ++i) CHECK(g.adjacent(w.path[i], w.path[i + 1]));
    for (int v : w.path) CHECK(chi[v] == w.colour);
    auto from = b.arc(w.from_arc), to = b.arc(w.to_arc);
    CHECK(std::find(from.begin(), from.end(), w.path.front()) != from.end());
    CHECK(std::find(to.begin(), to.end(), w.path.back()) != to.end());
    CHECK((w.from_arc + 2) % 4 == w.to_arc);
    return w;
  };
  HexBoard b3 = hex_grid(3);
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    Colouring chi(b3.tri.graph.n());
    for (auto& c : chi.colour) c = static_cast<int>(rng() & 1);
    auto w = check(b3, chi);
    CHECK(w.path.size() >= 4);  // length at least k = 3
  }
  check(b3, Colouring(b3.tri.graph.n(), 0));
  check(b3, Colouring(b3.tri.graph.n(), 1));
  HexBoard b2 = hex_grid(2);
  const int n = b2.tri.graph.n();
  REQUIRE(n <= 16);
  for (int mask = 0; mask < (1 << n); ++mask) {
    Colouring chi(n);
    for (int v = 0; v < n; ++v) chi[v] = (mask >> v) & 1;
    check(b2, chi);
  }
  CHECK_THROWS_AS(gale_extract(b2, Colouring(n, 2)), InvalidInput);
}

TEST_CASE("fig4 search") {
  Graph g = fig4_search();
  CHECK_FALSE(find_colouring_defect(g, 2, 1).has_value());
  CHECK_FALSE(has_minor(g, complete_graph(4)));
  CHECK_FALSE(has_minor(g, complete_bipartite(2, 3)));
  CHECK(find_colouring_defect(g, 3, 1).has_value());
  CHECK(g.n() <= fan_gadget().n());
  CHECK_THROWS_AS(fig4_search(9), CapExceeded);
}
