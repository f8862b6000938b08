#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dcol/colouring.hpp"
#include "dcol/graph.hpp"

namespace dcol {

// Balanced separators with a declared size bound c*n^(1-beta). Engines check
// every returned set against the declaration.
struct SeparatorOracle {
  double c = 1.0;
  double beta = 0.5;
  std::optional<Rational> c_squared;  // exact c^2, used when beta = 1/2
  std::function<std::vector<int>(const Graph&)> find;
  std::string name;
};

// min_balanced_separator below the cap; centroids for forests.
SeparatorOracle exact_separator_oracle(double c, double beta, int cap = 30);
// Smallest balanced BFS level from a double-sweep root; centroids for
// forests; falls back to the exact search under the cap when the level is
// larger than declared.
SeparatorOracle bfs_level_oracle(double c, double beta, int exact_cap = 30);
// Declared constants from the literature: c = 2 sqrt(2g+3) for Euler genus g,
// c = t^(3/2) for K_t-minor-free graphs; both with beta = 1/2.
SeparatorOracle genus_oracle(int g, int exact_cap = 30);
SeparatorOracle minor_oracle(int t, int exact_cap = 30);

// Smallest integer N >= a * (3 + 2 sqrt 2), exactly.
std::int64_t ceil_times_three_plus_two_sqrt2(const Rational& a);

// |S| bound c 2^b n / ((2^b - 1) p^b) for fragment().
double fragment_bound(const SeparatorOracle& o, int n, int p);
// Component bound ceil(2 (c/(eps(2^b-1)))^(1/b)).
std::int64_t fragment_epsilon_p(const SeparatorOracle& o, const Rational& eps);
// Island size bound ceil(2 (c(k+1)/(alpha(2^b-1)))^(1/b)).
std::int64_t separator_island_bound(const SeparatorOracle& o, int k, const Rational& alpha);

// Repeated balanced separation until every component of G - S has at most p
// vertices. Throws HypothesisViolation (witness: the component) when the
// oracle returns an unbalanced or oversized set.
std::vector<int> fragment(const Graph& g, const SeparatorOracle& o, std::int64_t p);
struct Fragmentation {
  std::vector<int> s;
  std::int64_t p = 0;
};
Fragmentation fragment_epsilon(const Graph& g, const SeparatorOracle& o, const Rational& eps);

// A k-island of size at most separator_island_bound. The edge hypothesis
// |E| < (k+1-alpha)|V| is checked first.
std::vector<int> separator_island(const Graph& g, const SeparatorOracle& o, int k, const Rational& alpha);

// Island loop shared by the colourers below.
struct IslandLoop {
  int k = 0;                         // lists have k+1 colours
  Rational alpha{1};
  Rational density_a{1};             // hypothesis |E| < a (|V| + b)
  std::int64_t density_b = 0;
  std::int64_t small_n = 0;          // colour-counting branch for n <= small_n
  std::int64_t small_cap = 0;        // a colour used at most this often exists
  std::string hypothesis;            // named in violation reports
};
// Clustering guaranteed by the loop: max{small_cap + 1, island bound}.
std::int64_t island_loop_bound(const IslandLoop& spec, const SeparatorOracle& o);
Colouring island_loop_colour(const Graph& g, const ListAssignment& lists, const IslandLoop& spec,
                             const SeparatorOracle& o);

// 4-list colouring with clustering 1500(g+2) for Euler genus g.
Colouring surface_four_colour(const Graph& g, const ListAssignment& lists, int genus, const SeparatorOracle& o);
IslandLoop surface_four_spec(int genus);

// Girth >= 4: 3 lists; girth >= 5: 2 lists; clustering island_loop_bound.
IslandLoop surface_three_spec(int genus, int girth);
Colouring surface_three_colour(const Graph& g, const ListAssignment& lists, int genus, int girth,
                               const SeparatorOracle& o);

// (t-1)-list colouring of K_t-minor-free graphs, 3 <= t <= 9.
Colouring minor_free_colour(const Graph& g, const ListAssignment& lists, int t, const SeparatorOracle& o);
IslandLoop minor_free_spec(int t);
// c_t = ceil(2 (5 t^(3/2) / (sqrt 2 - 1))^2) as stated for the theorem.
std::int64_t minor_clustering_bound(int t);

}  // namespace dcol
