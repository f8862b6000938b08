#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "dcol/colouring.hpp"
#include "dcol/graph.hpp"

namespace dcol {

// Every subgraph must have a vertex of degree <= k or an ell-light edge.
// Returns an L-colouring with defect <= ell - k. On failure throws
// HypothesisViolation whose witness is the stuck subgraph's edge list,
// flattened as pairs.
Colouring light_edge_colour(const Graph& g, const ListAssignment& lists, int k, int ell);

// Returns a k-island of the given graph, in its local ids; empty means none.
using IslandFinder = std::function<std::vector<int>(const Graph&)>;

struct IslandColouring {
  Colouring colouring;
  std::vector<int> island;  // peel index of each vertex
  int max_island = 0;
};
// Peels islands and colours them in reverse. Throws HypothesisViolation if
// the finder returns a non-island (witness: the offending vertex) or none.
IslandColouring island_colour(const Graph& g, const ListAssignment& lists, int k, const IslandFinder& finder);
// Singleton islands: the lowest vertex of degree <= k.
IslandFinder degenerate_islands(int k);

struct LovaszResult {
  Colouring colouring;
  int k = 0;
  int iterations = 0;
  std::vector<std::int64_t> bichromatic;  // bichromatic edge count before each move and at the end
};
// floor(D/(d+1))+1 colours with defect <= d, from the all-zero start.
LovaszResult lovasz_defective(const Graph& g, int d);

// Layer peeling for graphs without a tree subgraph on n vertices with radius r.
// Throws HypothesisViolation (witness: the high-degree vertex and its last-layer neighbours).
Colouring tree_subgraph_peel(const Graph& g, int n, int r);

// (6k+1)-list colouring with clustering max{g,1}.
Colouring thickness_peel(const Graph& g, const ListAssignment& lists, int k, int genus);

std::int64_t oow_light_bound(int s, int t, const Rational& mad, const Rational& nabla);

struct MadParams {
  int k = 0;
  int d = 0;
};
// k = floor(m/2)+1, d = ceil(m^2/(4k-2m) + m/2); checks 1/k + 1/d <= 2/m.
MadParams mad_defect_params(const Rational& m);

std::int64_t thickness_light_bound(int g, int k);
struct LightEdgeConditions {
  bool degree_range = false;  // 6k >= delta >= 2k+1
  bool linear = false;        // (delta-2k) l > 4k delta
  bool quadratic = false;     // (delta-2k) l^2 - ((4k-1)delta + 2k(g-1)) l - 4k(g-1)delta > 0
  bool all() const { return degree_range && linear && quadratic; }
};
LightEdgeConditions light_edge_conditions(int g, int k, int delta, std::int64_t ell);

using ColourEngine = std::function<Colouring(const Graph&)>;
// Declared behaviour of a base engine: Delta/x + y colours, clustering alpha*Delta.
struct EngineContract {
  Rational x{1}, y{1}, alpha{1};
};
struct EpsilonParams {
  int d = 0;
  Rational c{0};
};
EpsilonParams epsilon_params(const EngineContract& contract, const Rational& eps);
// Audits every base call against its contract and throws Error on a breach.
ColourEngine epsilon_compose(ColourEngine base, EngineContract contract, Rational eps);

// Largest average degree of H with the 1-subdivision of H in g. n <= 10.
Rational nabla_exhaustive(const Graph& g);

}  // namespace dcol
