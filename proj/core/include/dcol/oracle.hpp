#pragma once

#include <optional>
#include <vector>

#include "dcol/colouring.hpp"
#include "dcol/graph.hpp"

namespace dcol {

// Size caps for the exhaustive searches. Every oracle throws CapExceeded
// above its cap instead of approximating.
struct OracleLimits {
  int colour_cap = 24;
  int list_cap = 24;
  int minor_host_cap = 40;
  int minor_pattern_cap = 8;
  int ctd_cap = 16;
  int circumference_cap = 60;
  int separator_cap = 30;
  unsigned threads = 1;
};

// k-colouring with every monochromatic degree at most d, first in search order.
std::optional<Colouring> find_colouring_defect(const Graph& g, int k, int d, const OracleLimits& lim = {});
// k-colouring with every monochromatic component of size at most c.
std::optional<Colouring> find_colouring_clustering(const Graph& g, int k, int c, const OracleLimits& lim = {});

int min_colours_defect(const Graph& g, int d, const OracleLimits& lim = {});
int min_colours_clustering(const Graph& g, int c, const OracleLimits& lim = {});

// Witness colouring when G is L-colourable with defect d.
std::optional<Colouring> list_colourable_with_defect(const Graph& g, const ListAssignment& lists, int d,
                                                     const OracleLimits& lim = {});

// Branch sets of an H-model in G, indexed by the vertices of H.
using MinorModel = std::vector<std::vector<int>>;
std::optional<MinorModel> find_minor(const Graph& g, const Graph& h, const OracleLimits& lim = {});
bool has_minor(const Graph& g, const Graph& h, const OracleLimits& lim = {});
// Checks disjointness, connectivity and required adjacencies of a model.
bool is_minor_model(const Graph& g, const Graph& h, const MinorModel& model);

int tree_depth(const Graph& h, const OracleLimits& lim = {});
int connected_tree_depth(const Graph& h, const OracleLimits& lim = {});

// Longest cycle length; 2 for forests.
int circumference(const Graph& g, const OracleLimits& lim = {});
// Some cycle with exactly len vertices, as a vertex sequence.
std::optional<std::vector<int>> find_cycle_of_length(const Graph& g, int len, const OracleLimits& lim = {});
// Some cycle with more than len vertices.
std::optional<std::vector<int>> find_cycle_longer_than(const Graph& g, int len, const OracleLimits& lim = {});

// Smallest S with every component of G-S of size at most n/2; lexicographically least among minima.
std::vector<int> min_balanced_separator(const Graph& g, const OracleLimits& lim = {});
bool is_balanced_separator(const Graph& g, const std::vector<int>& s);

}  // namespace dcol
