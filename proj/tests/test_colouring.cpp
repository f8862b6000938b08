#include <algorithm>
#include <numeric>
#include <random>

#include "brute.hpp"
#include "dcol/colouring.hpp"
#include "dcol/errors.hpp"
#include "doctest.h"

using namespace dcol;

TEST_CASE("audit basics") {
  auto c4 = audit(cycle_graph(4), Colouring({0, 1, 0, 1}));
  CHECK(c4.k == 2);
  CHECK(c4.defect == 0);
  CHECK(c4.clustering == 1);

  auto p5 = audit(path_graph(5), Colouring(5, 0));
  CHECK(p5.defect == 2);
  CHECK(p5.clustering == 5);
  CHECK(p5.all_paths);

  auto tri = audit(complete_graph(3), Colouring(3, 0));
  CHECK_FALSE(tri.all_paths);
  auto claw = audit(star_graph(3), Colouring(4, 0));
  CHECK_FALSE(claw.all_paths);
}

TEST_CASE("audit rejects partial colourings") {
  Colouring chi(4, 0);
  chi[1] = kUncoloured;
  chi[3] = kUncoloured;
  try {
    audit(path_graph(4), chi);
    FAIL("expected an error");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()) == "uncoloured vertices: 1 3");
  }
}

TEST_CASE("audit matches brute force and is label invariant") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    Graph g = brute::random_graph(25, 0.12, rng);
    Colouring chi(g.n());
    for (auto& c : chi.colour) c = static_cast<int>(rng() % 3);
    auto cert = audit(g, chi);
    auto [d, c] = brute::measure(g, chi.colour);
    CHECK(cert.defect == d);
    CHECK(cert.clustering == c);
    CHECK(cert.defect <= cert.clustering - 1);
    std::size_t covered = 0;
    for (auto& comp : cert.components) covered += comp.size();
    CHECK(covered == static_cast<std::size_t>(g.n()));

    std::vector<int> perm{2, 0, 1};
    Colouring re(g.n());
    for (int v = 0; v < g.n(); ++v) re[v] = perm[chi[v]];
    auto cert2 = audit(g, re);
    CHECK(cert2.defect == cert.defect);
    CHECK(cert2.clustering == cert.clustering);
    CHECK(cert2.all_paths == cert.all_paths);
    CHECK(audit(g, chi).components == cert.components);
  }
}

TEST_CASE("respects_lists") {
  ListAssignment L({{0}, {1}, {2}});
  CHECK(respects_lists(Colouring({0, 1, 2}), L).ok);
  auto bad = respects_lists(Colouring({0, 2, 2}), L);
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness == 1);
  CHECK_THROWS_AS(ListAssignment({{0}, {}}), InvalidInput);
}

TEST_CASE("product colouring") {
  Graph g = complete_graph(4);
  Colouring one(4, 0);
  Colouring prod = product_colouring(g, one, [](const Graph& h) {
    Colouring c(h.n());
    std::iota(c.colour.begin(), c.colour.end(), 0);
    return c;
  });
  CHECK(audit(g, prod).defect == 0);
  CHECK(prod.num_colours() == 4);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    Graph h = brute::random_graph(20, 0.2, rng);
    Colouring chi1(h.n());
    for (auto& c : chi1.colour) c = static_cast<int>(rng() % 3);
    int worst = 0;
    auto classes = chi1.classes();
    std::vector<Colouring> inner;
    for (auto& cls : classes) {
      Graph sub = h.induced(cls);
      Colouring c(sub.n());
      for (auto& x : c.colour) x = static_cast<int>(rng() % 2);
      if (sub.n()) worst = std::max(worst, audit(sub, c).clustering);
      inner.push_back(c);
    }
    Colouring p = product_colouring(chi1, classes, inner);
    CHECK(p.num_colours() <= 6);
    CHECK(audit(h, p).clustering <= worst);
  }

  std::vector<std::vector<int>> wrong{{0, 1}};
  CHECK_THROWS_AS(product_colouring(Colouring(std::vector<int>{0, 1}), wrong, {Colouring(2, 0)}), InvalidInput);
}
