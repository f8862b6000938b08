#pragma once

#include <cstdint>
#include <vector>

namespace dcol {

// Dinic max-flow on a directed network with 64-bit capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n);
  int add_arc(int u, int v, std::int64_t cap);
  // Undirected edge: capacity cap in both directions. Returns arc id.
  int add_edge(int u, int v, std::int64_t cap);
  std::int64_t max_flow(int s, int t);
  // After max_flow: vertices reachable from s in the residual network.
  std::vector<char> source_side(int s) const;
  std::int64_t flow_on(int arc) const;
  int arc_head(int arc) const { return arcs_[arc].to; }
  int arc_tail(int arc) const { return arcs_[arc ^ 1].to; }
  int size() const noexcept { return static_cast<int>(head_.size()); }
  const std::vector<int>& out_arcs(int v) const { return head_[v]; }
  void reset();

 private:
  struct Arc {
    int to;
    std::int64_t cap;
    std::int64_t orig;
  };
  bool bfs(int s, int t);
  std::int64_t dfs(int v, int t, std::int64_t f);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> head_;
  std::vector<int> level_, it_;
};

}  // namespace dcol
