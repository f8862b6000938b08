#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dcol/colouring.hpp"
#include "dcol/graph.hpp"

namespace dcol {

// S(h,d): one vertex for h = 0, otherwise d+1 copies of S(h-1,d) plus a
// dominant vertex. Vertex 0 is the dominant vertex.
Graph standard_defect(int h, int d);
// S̄(h,c): the path on c+1 vertices for h = 1, otherwise c copies of
// S̄(h-1,c) plus a dominant vertex.
Graph standard_cluster(int h, int c);
// Outerplanar embedding of S̄(2,c): rotation system whose outer face meets every vertex.
Embedding standard_cluster_two_embedding(int c);

// K_{s,t} plus one vertex adjacent to each pair of the s-side.
Graph kst_star(int s, int t);

// Rhombus of the triangular lattice. Corners a,b,c,d split the outer cycle
// into four arcs; opposite arcs are at distance at least k.
struct HexBoard {
  PlaneTriangulation tri;
  std::array<int, 4> corners;  // a, b, c, d in outer-cycle order
  int k = 0;

  // Vertices of arc i, from corners[i] to corners[(i+1)%4] inclusive.
  std::vector<int> arc(int i) const;
};
HexBoard hex_grid(int k);

// Fan of triangles that is not 2-colourable with defect 1, certified by
// the exact oracle; falls back to fig4_search() if certification fails.
Graph outerplanar_gadget();
Graph fan_gadget();

struct ListGadget {
  Graph graph;
  ListAssignment lists;
  int s = 0, t = 0;
};
// K_{s,t} with t = (ds+1)s^s and the list assignment that defeats
// s-choosability with defect d.
ListGadget kkn_gadget(int s, int d);

// A member of X_{k,c}. The recipe starts with a base, 'P' (path P_{c+1})
// or 'K' (star K_{1,c}), followed by operations: '\'' (c copies plus a
// dominant vertex, level +1), '+' (stable sets on level-cliques, level +1),
// '#' (paths on cliques, level +2). The final level must equal k.
Graph xkc_family(int k, int c, const std::string& recipe, int cap = 400);

// G_k from the circumference lower bound: G_2 = P_{c+1}; G_k is a path
// v_1..v_{c+1} with 2c-1 copies of G_{k-1} complete to each {v_i, v_{i+1}}.
Graph gk_circumference_gadget(int k, int c, int cap = 2000);

struct ThicknessWitness {
  Graph graph;
  std::vector<Embedding> parts;  // plane parts on the same vertex set, edge-disjoint, covering E(graph)
};
// 1-subdivision of K_n split into two plane parts.
ThicknessWitness thickness_gadget(int n);
// S(2k,d) split into k plane parts following the standard recursion.
ThicknessWitness standard_thickness_witness(int k, int d);
bool is_thickness_witness(const ThicknessWitness& w);

// Random r-regular graph with girth > g, refined by edge swaps.
// Throws Error when the retry budget runs out.
Graph high_girth_regular(int r, int g, std::uint64_t seed = 0x5eed, int n = 0);
Graph line_graph(const Graph& g);

// Seeded random instances with embeddings.
PlaneTriangulation random_maximal_outerplanar(int n, std::uint64_t seed);
PlaneTriangulation random_plane_triangulation(int n, std::uint64_t seed);
Graph random_planar(int n, double keep, std::uint64_t seed);
Graph random_bounded_degree(int n, int max_degree, double density, std::uint64_t seed);
Graph random_subcubic(int n, std::uint64_t seed);

// All cliques of exactly size q, each sorted, in lexicographic order.
std::vector<std::vector<int>> cliques_of_size(const Graph& g, int q);

}  // namespace dcol
