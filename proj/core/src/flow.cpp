#include "dcol/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace dcol {

FlowNetwork::FlowNetwork(int n) : head_(n), level_(n), it_(n) {}

int FlowNetwork::add_arc(int u, int v, std::int64_t cap) {
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({v, cap, cap});
  arcs_.push_back({u, 0, 0});
  head_[u].push_back(id);
  head_[v].push_back(id + 1);
  return id;
}

int FlowNetwork::add_edge(int u, int v, std::int64_t cap) {
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({v, cap, cap});
  arcs_.push_back({u, cap, cap});
  head_[u].push_back(id);
  head_[v].push_back(id + 1);
  return id;
}

void FlowNetwork::reset() {
  for (auto& a : arcs_) a.cap = a.orig;
}

bool FlowNetwork::bfs(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int id : head_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t FlowNetwork::dfs(int v, int t, std::int64_t f) {
  if (v == t) return f;
  for (int& i = it_[v]; i < static_cast<int>(head_[v].size()); ++i) {
    int id = head_[v][i];
    Arc& a = arcs_[id];
    if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
      std::int64_t d = dfs(a.to, t, std::min(f, a.cap));
      if (d > 0) {
        a.cap -= d;
        arcs_[id ^ 1].cap += d;
        return d;
      }
    }
  }
  return 0;
}

std::int64_t FlowNetwork::max_flow(int s, int t) {
  if (s == t) return 0;
  std::int64_t total = 0;
  while (bfs(s, t)) {
    std::fill(it_.begin(), it_.end(), 0);
    while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) total += f;
  }
  return total;
}

std::vector<char> FlowNetwork::source_side(int s) const {
  std::vector<char> seen(head_.size(), 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int id : head_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

std::int64_t FlowNetwork::flow_on(int arc) const { return arcs_[arc].orig - arcs_[arc].cap; }

}  // namespace dcol
