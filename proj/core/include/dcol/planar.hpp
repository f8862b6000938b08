#pragma once

#include <vector>

#include "dcol/colouring.hpp"
#include "dcol/constructions.hpp"
#include "dcol/graph.hpp"

namespace dcol {

// BFS-layer parity colouring. Throws HypothesisViolation naming the first
// layer whose colour class is not a union of paths.
Colouring outerplanar_two_colour(const Graph& g);

// 3-colouring in which every monochromatic component is a path, and v1, v2
// (an edge of the triangulation) are properly coloured.
Colouring poh_three_colour(const PlaneTriangulation& t);
Colouring poh_three_colour(const PlaneTriangulation& t, int v1, int v2);
// Same recursion on any planar graph; throws InvalidInput if g is not planar.
Colouring poh_three_colour_graph(const Graph& g, int v1 = -1, int v2 = -1);

// Defect bound used by genus_three_colour.
int genus_defect_bound(int g);
// 3-colouring with defect at most genus_defect_bound(g). Throws
// HypothesisViolation (witness: the high-degree set B) when the counting
// bound (d-11)|B| <= max{12(g-2),0} fails at the base of the recursion.
Colouring genus_three_colour(const Graph& g, int genus);

struct GaleWitness {
  std::vector<int> path;  // monochromatic path in G
  int colour = 0;
  int from_arc = 0, to_arc = 0;  // arc indices as in HexBoard::arc
  // Degree of every internal face of the augmented graph in the dual H.
  std::vector<int> dual_degrees;
  std::vector<int> special_faces;  // indices into dual_degrees for A, B, C, D
};
// Requires a 0/1 colouring. The returned path joins arcs 3 and 1 or arcs 0 and 2.
GaleWitness gale_extract(const HexBoard& board, const Colouring& chi);

// Smallest outerplanar graph (vertices, then edges, then lexicographic edge
// set) with no 2-colouring of defect 1.
Graph fig4_search(int max_vertices = 8);

}  // namespace dcol
