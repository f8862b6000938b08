#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "dcol/colouring.hpp"
#include "dcol/errors.hpp"
#include "dcol/graph.hpp"
#include "dcol/oracle.hpp"

namespace dcol {

// Minimum number of edges whose removal separates s from t.
std::int64_t min_edge_cut(const Graph& g, int s, int t);

// Cut tree rooted at 0: for every tree edge (v, parent[v]) the vertices on
// v's side form a minimum cut of the given weight.
struct GomoryHuTree {
  std::vector<int> parent;
  std::vector<std::int64_t> weight;  // weight[v] labels the edge to parent[v]

  int n() const noexcept { return static_cast<int>(parent.size()); }
  Graph tree() const;
  std::vector<std::tuple<int, int, std::int64_t>> edges() const;
  // Smallest weight on the tree path between u and v.
  std::int64_t min_cut(int u, int v) const;
  // Vertices on v's side of the edge (v, parent[v]).
  std::vector<int> side(int v) const;
};

// Gusfield's n-1 max-flow construction. Throws InvalidInput when g is disconnected.
GomoryHuTree gomory_hu(const Graph& g);

// K_t immersion: branch vertices and one path per pair (a, b), a < b, listed
// in lexicographic pair order; paths are pairwise edge-disjoint.
struct ImmersionCertificate {
  std::vector<int> branch;
  std::vector<std::vector<int>> paths;
};
bool is_immersion_certificate(const Graph& g, const ImmersionCertificate& c);

class ImmersionFound : public HypothesisViolation {
 public:
  explicit ImmersionFound(ImmersionCertificate c)
      : HypothesisViolation("immersion hypothesis violated: graph contains K_" + std::to_string(c.branch.size()) +
                                " as an immersion",
                            c.branch),
        certificate_(std::move(c)) {}
  const ImmersionCertificate& certificate() const noexcept { return certificate_; }

 private:
  ImmersionCertificate certificate_;
};

// Bags of at most t-1 vertices with adhesion below (t-1)^2, from the cut
// tree. A larger bag yields an ImmersionFound.
TPartition immersion_tpartition(const Graph& g, int t);

// 2-colouring with defect k when every bag holds at most one vertex and the
// adhesion is at most k. Throws HypothesisViolation (witness: the crossing
// edges, flattened) when the reductions expose a tree edge crossed by more
// than k edges.
Colouring tpartition_two_colour(const Graph& g, const TPartition& t, int k);

// 2-colouring with defect below (t-1)^3 for graphs without a K_t immersion.
Colouring immersion_two_colour(const Graph& g, int t);

// Minimal induced connected subgraph containing a, with a 2-colouring of
// clustering ceil(|a|/2). colour is aligned with vertices (sorted).
struct ConnectedSubgraph {
  std::vector<int> vertices;
  std::vector<int> colour;
};
ConnectedSubgraph minimal_connected_subgraph(const Graph& g, const std::vector<int>& a);

class MinorFound : public HypothesisViolation {
 public:
  MinorFound(const std::string& what, MinorModel model)
      : HypothesisViolation(what, flatten(model)), model_(std::move(model)) {}
  const MinorModel& model() const noexcept { return model_; }

 private:
  static std::vector<int> flatten(const MinorModel& m) {
    std::vector<int> out;
    for (const auto& b : m) out.insert(out.end(), b.begin(), b.end());
    return out;
  }
  MinorModel model_;
};

struct VdhwResult {
  Colouring defect_variant;   // t-1 colours, defect t-2
  Colouring cluster_variant;  // 2t-2 colours, clustering ceil((t-2)/2)
  std::vector<int> part;      // part index of every vertex, in creation order
  int parts = 0;
};
// Throws MinorFound with t branch sets when the decomposition meets K_t.
VdhwResult vdhw_colour(const Graph& g, int t);

// floor(3 log2 k).
int circumference_colour_budget(int k);
// Clustering k with at most floor(3 log2 k) colours. Throws
// HypothesisViolation (witness: the cycle) when a cycle longer than k exists.
Colouring circumference_colour(const Graph& g, int k, const OracleLimits& lim = {});

struct Defect2Options {
  int segment_factor = 8;  // segments of segment_factor * delta vertices
  std::uint64_t seed = 1;
  int max_reseeds = 16;
};
struct Defect2Result {
  Colouring colouring;
  std::vector<std::vector<int>> segments;  // full segments
  std::vector<int> transversal;            // one vertex per segment, independent
  std::int64_t resamples = 0;
  int reseeds = 0;
};
// (k+1)-colouring with clustering 3 * segment_factor * delta from a
// k-colouring with defect at most 2.
Defect2Result defect2_to_cluster(const Graph& g, const Colouring& chi, int delta, const Defect2Options& opt = {});

}  // namespace dcol
