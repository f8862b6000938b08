#include "dcol/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "dcol/errors.hpp"

namespace dcol {

namespace {

// ---------------------------------------------------------------------------
// Colouring search

enum class Measure { Defect, Clustering };

std::vector<int> search_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> order, back(n, 0);
  std::vector<char> placed(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best < 0 || back[v] > back[best] || (back[v] == back[best] && g.degree(v) > g.degree(best))) best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (int w : g.neighbours(best)) ++back[w];
  }
  return order;
}

class ColourSearch {
 public:
  ColourSearch(const Graph& g, int k, Measure measure, int bound, const ListAssignment* lists)
      : g_(g), k_(k), measure_(measure), bound_(bound), lists_(lists), order_(search_order(g)),
        col_(g.n()), mono_(g.n(), 0) {}

  // Candidate colours for position i given the highest colour used so far.
  std::vector<int> candidates(int i, int top) const {
    int v = order_[i];
    std::vector<int> out;
    if (lists_) {
      for (int c : (*lists_)[v]) out.push_back(c);
    } else {
      for (int c = 0; c < k_ && c <= top + 1; ++c) out.push_back(c);
    }
    return out;
  }

  bool fits(int v, int c) const {
    if (measure_ == Measure::Defect) {
      int cnt = 0;
      for (int w : g_.neighbours(v))
        if (col_[w] == c) {
          if (++cnt > bound_ || mono_[w] + 1 > bound_) return false;
        }
      return true;
    }
    // Size of the component v would join.
    int size = 1;
    std::vector<int> stack;
    std::vector<char>& seen = seen_;
    seen.assign(g_.n(), 0);
    seen[v] = 1;
    stack.push_back(v);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int w : g_.neighbours(x))
        if (!seen[w] && col_[w] == c) {
          seen[w] = 1;
          if (++size > bound_) return false;
          stack.push_back(w);
        }
    }
    return true;
  }

  void assign(int v, int c) {
    col_[v] = c;
    if (measure_ == Measure::Defect)
      for (int w : g_.neighbours(v))
        if (col_[w] == c && w != v) {
          ++mono_[w];
          ++mono_[v];
        }
  }

  void unassign(int v) {
    int c = col_[v];
    if (measure_ == Measure::Defect)
      for (int w : g_.neighbours(v))
        if (col_[w] == c && w != v) {
          --mono_[w];
          --mono_[v];
        }
    col_[v] = kUncoloured;
  }

  bool dfs(int i, int top, const std::atomic<bool>* stop) {
    if (i == g_.n()) return true;
    if (stop && stop->load(std::memory_order_relaxed)) return false;
    // Whether the rest can be completed depends only on the coloured
    // vertices next to it, so failed states are remembered.
    std::string key = state_key(i);
    if (failed_.count(key)) return false;
    int v = order_[i];
    for (int c : candidates(i, top)) {
      if (!fits(v, c)) continue;
      assign(v, c);
      if (dfs(i + 1, std::max(top, c), stop)) return true;
      unassign(v);
    }
    if (failed_.size() < kMemoCap) failed_.insert(std::move(key));
    return false;
  }

  // Depth plus every coloured vertex with an uncoloured neighbour: its colour
  // (canonically relabelled without lists) and its monochromatic degree, or
  // its cluster and the cluster's size.
  std::string state_key(int i) const {
    const int n = g_.n();
    std::vector<std::int32_t> key{i};
    std::vector<int> relabel(lists_ ? 0 : k_, -1);
    int next = 0;
    std::vector<int> cluster(measure_ == Measure::Clustering ? n : 0, -1);
    std::vector<int> cluster_size;
    for (int j = 0; j < i; ++j) {
      int v = order_[j];
      bool edge = false;
      for (int w : g_.neighbours(v))
        if (col_[w] == kUncoloured) {
          edge = true;
          break;
        }
      if (!edge) continue;
      int c = col_[v];
      if (!lists_) {
        if (relabel[c] < 0) relabel[c] = next++;
        c = relabel[c];
      }
      key.push_back(v);
      key.push_back(c);
      if (measure_ == Measure::Defect) {
        key.push_back(mono_[v]);
        continue;
      }
      if (cluster[v] < 0) {
        int id = static_cast<int>(cluster_size.size());
        int size = 0;
        std::vector<int> stack{v};
        cluster[v] = id;
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          ++size;
          for (int w : g_.neighbours(x))
            if (cluster[w] < 0 && col_[w] == col_[v]) {
              cluster[w] = id;
              stack.push_back(w);
            }
        }
        cluster_size.push_back(size);
      }
      key.push_back(cluster[v]);
      key.push_back(cluster_size[cluster[v]]);
    }
    return std::string(reinterpret_cast<const char*>(key.data()), key.size() * sizeof(std::int32_t));
  }

  // All feasible assignments of the first depth positions, in search order.
  void prefixes(int i, int depth, int top, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (i == depth || i == g_.n()) {
      out.push_back(cur);
      return;
    }
    int v = order_[i];
    for (int c : candidates(i, top)) {
      if (!fits(v, c)) continue;
      assign(v, c);
      cur.push_back(c);
      prefixes(i + 1, depth, std::max(top, c), cur, out);
      cur.pop_back();
      unassign(v);
    }
  }

  bool run_from(const std::vector<int>& prefix, const std::atomic<bool>* stop) {
    int top = -1;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      assign(order_[i], prefix[i]);
      top = std::max(top, prefix[i]);
    }
    return dfs(static_cast<int>(prefix.size()), top, stop);
  }

  const Colouring& colouring() const { return col_; }

 private:
  const Graph& g_;
  int k_;
  Measure measure_;
  int bound_;
  const ListAssignment* lists_;
  std::vector<int> order_;
  Colouring col_;
  std::vector<int> mono_;
  mutable std::vector<char> seen_;
  static constexpr std::size_t kMemoCap = 4'000'000;
  std::unordered_set<std::string> failed_;
};

std::optional<Colouring> colour_search(const Graph& g, int k, Measure measure, int bound,
                                       const ListAssignment* lists, unsigned threads) {
  if (g.n() == 0) return Colouring(0);
  if (k <= 0 && !lists) return std::nullopt;
  if (threads <= 1) {
    ColourSearch s(g, k, measure, bound, lists);
    if (s.dfs(0, -1, nullptr)) return s.colouring();
    return std::nullopt;
  }
  std::vector<std::vector<int>> pre;
  {
    ColourSearch s(g, k, measure, bound, lists);
    std::vector<int> cur;
    int depth = 1;
    while (depth < g.n()) {
      pre.clear();
      s.prefixes(0, depth, -1, cur, pre);
      if (pre.size() >= 8 * threads || pre.empty()) break;
      ++depth;
    }
    if (pre.empty()) return std::nullopt;
  }
  // Earliest successful prefix wins, which matches the sequential answer.
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> found{pre.size()};
  std::vector<std::optional<Colouring>> results(pre.size());
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= pre.size() || i > found.load()) return;
      ColourSearch s(g, k, measure, bound, lists);
      std::atomic<bool> never{false};
      if (s.run_from(pre[i], &never)) {
        results[i] = s.colouring();
        std::size_t cur = found.load();
        while (i < cur && !found.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& r : results)
    if (r) return r;
  return std::nullopt;
}

void check_cap(const char* what, int size, int cap) {
  if (size > cap) throw CapExceeded(what, size, cap);
}

// ---------------------------------------------------------------------------
// Minor search

using Mask = std::uint64_t;

bool is_k_connected_small(const Graph& h, int k) {
  // Brute force over vertex sets of size < k.
  const int n = h.n();
  if (n <= k) return false;
  std::vector<int> idx;
  std::function<bool(int)> rec = [&](int start) -> bool {
    std::vector<char> alive(n, 1);
    for (int v : idx) alive[v] = 0;
    if (components_of(h, alive).size() != 1) return false;
    if (static_cast<int>(idx.size()) == k - 1) return true;
    for (int v = start; v < n; ++v) {
      idx.push_back(v);
      bool ok = rec(v + 1);
      idx.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(0);
}

struct Pattern {
  Graph h;
  int min_degree;
  bool connected;
  bool two_connected;
  bool three_connected;
  bool complete;
};

// Does the quotient (adjacency masks over parts) contain h as a spanning subgraph?
std::optional<std::vector<int>> embed_spanning(const Pattern& p, const std::vector<Mask>& q) {
  const int k = p.h.n();
  std::vector<int> phi(k, -1);
  Mask used = 0;
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == k) return true;
    for (int part = 0; part < k; ++part) {
      if (used >> part & 1) continue;
      if (std::popcount(q[part]) < p.h.degree(i)) continue;
      bool ok = true;
      for (int j : p.h.neighbours(i))
        if (j < i && !(q[part] >> phi[j] & 1)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      phi[i] = part;
      used |= Mask(1) << part;
      if (rec(i + 1)) return true;
      used &= ~(Mask(1) << part);
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return phi;
}

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, const Pattern& p, bool allow_unused)
      : g_(g), p_(p), k_(p.h.n()), allow_unused_(allow_unused), nb_(g.n(), 0) {
    unassigned_ = g.n() == 64 ? ~Mask(0) : ((Mask(1) << g.n()) - 1);
    for (int v = 0; v < g.n(); ++v)
      for (int w : g.neighbours(v)) nb_[v] |= Mask(1) << w;
    // BFS order from vertex 0 within each component.
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::size_t start = order_.size();
      order_.push_back(s);
      for (std::size_t i = start; i < order_.size(); ++i)
        for (int w : g.neighbours(order_[i]))
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
          }
    }
    parts_.assign(k_, 0);
    for (int x = 0; x < k_; ++x) degrees_.push_back(p.h.degree(x));
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
  }

  // Every branch set must meet this mask.
  void set_roots(Mask roots) { roots_ = roots; }

  std::optional<MinorModel> run() {
    if (!dfs(0, 0)) return std::nullopt;
    return model_;
  }

 private:
  Mask reach(Mask from, Mask within) const {
    Mask seen = from & (~from + 1);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= nb_[std::countr_zero(f)];
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  Mask neighbourhood(Mask s) const {
    Mask out = 0;
    for (Mask f = s; f; f &= f - 1) out |= nb_[std::countr_zero(f)];
    return out & ~s;
  }

  bool viable(int used) const {
    std::vector<Mask> nbh(used);
    std::vector<char> open(used);
    for (int p = 0; p < used; ++p) {
      Mask part = parts_[p];
      nbh[p] = neighbourhood(part);
      open[p] = (nbh[p] & unassigned_) != 0;
      if (!open[p] && !(part & roots_)) return false;
      // Every piece of the part must still be able to grow.
      Mask rest = part;
      int pieces = 0;
      while (rest) {
        Mask piece = reach(rest, part);
        rest &= ~piece;
        ++pieces;
        if (!(neighbourhood(piece) & unassigned_) && (pieces > 1 || rest)) return false;
      }
    }
    // Upper bounds on final quotient degrees must dominate the pattern's degrees.
    std::vector<int> ub(k_, k_ - 1);
    for (int p = 0; p < used; ++p) {
      int deg = 0;
      for (int q = 0; q < used; ++q) {
        if (q == p) continue;
        if (nbh[p] & parts_[q])
          ++deg;
        else if (open[p] && open[q])
          ++deg;
        else if (p_.complete && !open[p] && !open[q])
          return false;
      }
      ub[p] = deg + (open[p] ? k_ - used : 0);
      if (ub[p] < p_.min_degree) return false;
    }
    std::sort(ub.begin(), ub.end(), std::greater<>());
    for (int i = 0; i < k_; ++i)
      if (ub[i] < degrees_[i]) return false;
    return true;
  }

  bool dfs(int i, int used) {
    const int n = g_.n();
    if (n - i < k_ - used) return false;
    if (i == n) return leaf();
    int v = order_[i];
    Mask bit = Mask(1) << v;
    unassigned_ &= ~bit;
    bool ok = false;
    int limit = std::min(used, k_ - 1);
    for (int lab = 0; lab <= limit && !ok; ++lab) {
      parts_[lab] |= bit;
      int now = std::max(used, lab + 1);
      ok = viable(now) && dfs(i + 1, now);
      if (!ok) parts_[lab] &= ~bit;
    }
    if (!ok && allow_unused_) ok = viable(used) && dfs(i + 1, used);
    unassigned_ |= bit;
    return ok;
  }

  bool leaf() {
    for (int p = 0; p < k_; ++p)
      if (!parts_[p] || !(parts_[p] & roots_) || reach(parts_[p], parts_[p]) != parts_[p]) return false;
    std::vector<Mask> q(k_, 0);
    for (int p = 0; p < k_; ++p) {
      Mask nbh = neighbourhood(parts_[p]);
      for (int r = 0; r < k_; ++r)
        if (r != p && (nbh & parts_[r])) q[p] |= Mask(1) << r;
    }
    auto phi = embed_spanning(p_, q);
    if (!phi) return false;
    model_.assign(k_, {});
    for (int x = 0; x < k_; ++x)
      for (Mask f = parts_[(*phi)[x]]; f; f &= f - 1) model_[x].push_back(std::countr_zero(f));
    return true;
  }

  const Graph& g_;
  const Pattern& p_;
  int k_;
  bool allow_unused_;
  std::vector<Mask> nb_;
  std::vector<int> order_;
  std::vector<Mask> parts_;
  std::vector<int> degrees_;  // pattern degrees, descending
  Mask unassigned_ = 0;
  Mask roots_ = ~Mask(0);
  MinorModel model_;
};

Pattern make_pattern(const Graph& h) {
  return Pattern{h,
                 h.min_degree(),
                 is_connected(h),
                 h.n() >= 3 && is_k_connected_small(h, 2),
                 h.n() >= 4 && is_k_connected_small(h, 3),
                 h.m() * 2 == static_cast<std::size_t>(h.n()) * (h.n() - 1)};
}

// H has a dominant vertex r: pick the connected branch set J of r, then find
// H - r in G - J with every branch set meeting N(J). Components of H - r are
// distributed over components of G - J.
std::optional<MinorModel> dominant_rule(const Graph& g, const Graph& h, int r) {
  const int n = g.n(), k = h.n();
  std::vector<int> others;
  for (int x = 0; x < k; ++x)
    if (x != r) others.push_back(x);
  Graph hr = h.induced(others);
  auto hcomps = connected_components(hr);
  std::sort(hcomps.begin(), hcomps.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  const int t = static_cast<int>(hcomps.size());
  std::vector<Mask> nb(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbours(v)) nb[v] |= Mask(1) << w;
  auto neighbourhood = [&](Mask s) {
    Mask out = 0;
    for (Mask f = s; f; f &= f - 1) out |= nb[std::countr_zero(f)];
    return out & ~s;
  };

  // Local models keyed by (component, roots, chosen pattern components).
  using Local = std::optional<std::vector<std::pair<int, std::vector<int>>>>;
  std::map<std::tuple<Mask, Mask, unsigned>, Local> memo;
  auto host = [&](Mask comp, Mask roots, unsigned which) -> const Local& {
    auto key = std::make_tuple(comp, roots & comp, which);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<int> hs;
    for (int j = 0; j < t; ++j)
      if (which >> j & 1) hs.insert(hs.end(), hcomps[j].begin(), hcomps[j].end());
    Local out;
    if (std::popcount(comp) >= static_cast<int>(hs.size()) &&
        std::popcount(comp & roots) >= static_cast<int>(hs.size())) {
      std::vector<int> vs;
      Mask local_roots = 0;
      for (Mask f = comp; f; f &= f - 1) {
        int v = std::countr_zero(f);
        if (roots >> v & 1) local_roots |= Mask(1) << vs.size();
        vs.push_back(v);
      }
      Graph gc = g.induced(vs);
      Pattern pc = make_pattern(hr.induced(hs));
      PartitionSearch ps(gc, pc, !pc.connected);
      ps.set_roots(local_roots);
      if (auto m = ps.run()) {
        out.emplace();
        for (std::size_t x = 0; x < hs.size(); ++x) {
          std::vector<int> bs;
          for (int v : (*m)[x]) bs.push_back(vs[v]);
          out->emplace_back(hs[x], bs);
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };

  const Mask all = n == 64 ? ~Mask(0) : ((Mask(1) << n) - 1);
  std::optional<MinorModel> found;
  auto try_set = [&](Mask j) {
    Mask roots = neighbourhood(j);
    if (std::popcount(roots) < k - 1) return false;
    std::vector<Mask> comps;
    Mask rest = all & ~j;
    while (rest) {
      Mask seen = rest & (~rest + 1), frontier = seen;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
        next &= rest & ~seen;
        seen |= next;
        frontier = next;
      }
      comps.push_back(seen);
      rest &= ~seen;
    }
    std::vector<unsigned> chosen(comps.size(), 0);
    std::function<bool(int)> assign = [&](int i) -> bool {
      if (i == t) return true;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        chosen[c] |= 1u << i;
        if (host(comps[c], roots, chosen[c]) && assign(i + 1)) return true;
        chosen[c] &= ~(1u << i);
      }
      return false;
    };
    if (!assign(0)) return false;
    MinorModel m(k);
    for (Mask f = j; f; f &= f - 1) m[r].push_back(std::countr_zero(f));
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (!chosen[c]) continue;
      for (const auto& [x, bs] : *host(comps[c], roots, chosen[c])) m[others[x]] = bs;
    }
    for (auto& bs : m) std::sort(bs.begin(), bs.end());
    found = std::move(m);
    return true;
  };

  // Each connected set once: grow from its least vertex, banning popped candidates.
  const int max_size = n - (k - 1);
  std::function<bool(Mask, Mask, Mask)> grow = [&](Mask j, Mask cand, Mask banned) -> bool {
    if (try_set(j)) return true;
    if (std::popcount(j) >= max_size) return false;
    while (cand) {
      Mask u = cand & (~cand + 1);
      cand &= ~u;
      banned |= u;
      Mask next = (cand | nb[std::countr_zero(u)]) & ~banned & ~j;
      if (grow(j | u, next, banned)) return true;
    }
    return false;
  };
  Mask banned = 0;
  for (int v = 0; v < n; ++v) {
    Mask bit = Mask(1) << v;
    banned |= bit;
    if (grow(bit, nb[v] & ~banned, banned)) return found;
  }
  return std::nullopt;
}

MinorModel lift(const MinorModel& m, const std::vector<std::vector<int>>& groups) {
  MinorModel out(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (int v : m[x]) out[x].insert(out[x].end(), groups[v].begin(), groups[v].end());
    std::sort(out[x].begin(), out[x].end());
  }
  return out;
}

std::vector<std::vector<int>> singleton_groups(const std::vector<int>& vs) {
  std::vector<std::vector<int>> g;
  for (int v : vs) g.push_back({v});
  return g;
}

std::optional<std::vector<int>> path_avoiding(const Graph& g, int a, int b, const std::vector<char>& allowed) {
  std::vector<int> parent(g.n(), -2);
  std::vector<int> queue{a};
  parent[a] = -1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (int w : g.neighbours(v)) {
      if (parent[w] != -2 || (w != b && !allowed[w])) continue;
      parent[w] = v;
      if (w == b) {
        std::vector<int> path;
        for (int x = b; x != -1; x = parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

std::optional<MinorModel> minor_rec(const Graph& g, const Pattern& p) {
  const Graph& h = p.h;
  if (h.n() == 0) return MinorModel{};
  if (g.n() < h.n() || g.m() < h.m()) return std::nullopt;

  // Local reductions that never change the answer for this pattern.
  if (p.min_degree >= 1) {
    std::vector<std::set<int>> adj(g.n());
    for (int v = 0; v < g.n(); ++v) adj[v] = {g.neighbours(v).begin(), g.neighbours(v).end()};
    std::vector<std::vector<int>> groups(g.n());
    for (int v = 0; v < g.n(); ++v) groups[v] = {v};
    std::vector<char> alive(g.n(), 1);
    bool changed = false, again = true;
    while (again) {
      again = false;
      for (int v = 0; v < g.n(); ++v) {
        if (!alive[v]) continue;
        int d = static_cast<int>(adj[v].size());
        bool drop = d == 0 || (d == 1 && p.min_degree >= 2);
        if (drop) {
          for (int w : adj[v]) adj[w].erase(v);
          adj[v].clear();
          alive[v] = 0;
          changed = again = true;
        } else if (d == 2 && p.min_degree >= 3) {
          int a = *adj[v].begin(), b = *adj[v].rbegin();
          adj[a].erase(v);
          adj[b].erase(v);
          adj[a].insert(b);
          adj[b].insert(a);
          adj[v].clear();
          alive[v] = 0;
          groups[a].insert(groups[a].end(), groups[v].begin(), groups[v].end());
          changed = again = true;
        }
      }
    }
    if (changed) {
      std::vector<int> keep, pos(g.n(), -1);
      for (int v = 0; v < g.n(); ++v)
        if (alive[v]) {
          pos[v] = static_cast<int>(keep.size());
          keep.push_back(v);
        }
      std::vector<Edge> es;
      for (int v : keep)
        for (int w : adj[v])
          if (v < w) es.emplace_back(pos[v], pos[w]);
      Graph r(static_cast<int>(keep.size()), es);
      auto m = minor_rec(r, p);
      if (!m) return std::nullopt;
      std::vector<std::vector<int>> gs;
      for (int v : keep) gs.push_back(groups[v]);
      return lift(*m, gs);
    }
  }

  if (p.connected) {
    auto comps = connected_components(g);
    if (comps.size() > 1) {
      for (const auto& c : comps) {
        if (static_cast<int>(c.size()) < h.n()) continue;
        if (auto m = minor_rec(g.induced(c), p)) return lift(*m, singleton_groups(c));
      }
      return std::nullopt;
    }
  }

  if (p.two_connected) {
    auto bd = blocks_and_cutvertices(g);
    if (bd.blocks.size() > 1) {
      for (const auto& b : bd.blocks) {
        if (static_cast<int>(b.size()) < h.n()) continue;
        if (auto m = minor_rec(g.induced(b), p)) return lift(*m, singleton_groups(b));
      }
      return std::nullopt;
    }
  }

  if (p.three_connected && g.n() > h.n() && g.n() >= 4) {
    for (int a = 0; a < g.n(); ++a)
      for (int b = a + 1; b < g.n(); ++b) {
        std::vector<char> alive(g.n(), 1);
        alive[a] = alive[b] = 0;
        auto comps = components_of(g, alive);
        if (comps.size() < 2) continue;
        for (std::size_t i = 0; i < comps.size(); ++i) {
          if (static_cast<int>(comps[i].size()) + 2 < h.n()) continue;
          std::vector<int> vs = comps[i];
          vs.push_back(a);
          vs.push_back(b);
          std::sort(vs.begin(), vs.end());
          Graph piece = g.induced(vs);
          int la = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), a) - vs.begin());
          int lb = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), b) - vs.begin());
          piece = piece.with_edges({{la, lb}});
          auto m = minor_rec(piece, p);
          if (!m) continue;
          MinorModel out = lift(*m, singleton_groups(vs));
          if (!g.adjacent(a, b)) {
            // Realise the virtual edge by a path through another side.
            std::vector<char> other(g.n(), 0);
            for (int v : comps[i == 0 ? 1 : 0]) other[v] = 1;
            auto path = path_avoiding(g, a, b, other);
            int owner = -1;
            for (std::size_t x = 0; x < out.size(); ++x)
              if (std::binary_search(out[x].begin(), out[x].end(), a)) owner = static_cast<int>(x);
            bool b_used = false;
            for (auto& bs : out) b_used = b_used || std::binary_search(bs.begin(), bs.end(), b);
            if (path && owner >= 0 && b_used) {
              for (std::size_t j = 1; j + 1 < path->size(); ++j) out[owner].push_back((*path)[j]);
              std::sort(out[owner].begin(), out[owner].end());
            }
          }
          return out;
        }
        return std::nullopt;
      }
  }

  if (g.n() > 64) throw CapExceeded("has_minor", g.n(), 64);
  if (!p.complete && h.n() >= 2) {
    for (int r = 0; r < h.n(); ++r)
      if (h.degree(r) == h.n() - 1) return dominant_rule(g, h, r);
  }
  PartitionSearch ps(g, p, !(p.connected && is_connected(g)));
  return ps.run();
}

// ---------------------------------------------------------------------------
// Cycles

struct CycleSearch {
  const Graph& g;
  int s = 0;
  std::vector<char> on;
  std::vector<int> path;
  int best = 0;
  std::vector<int> best_cycle;
  int exact = -1;  // stop at a cycle with exactly this length
  int above = -1;  // stop at a cycle longer than this
  bool done = false;

  explicit CycleSearch(const Graph& g_) : g(g_), on(g_.n(), 0) {}

  int reachable_bound(int from) const {
    std::vector<char> seen(g.n(), 0);
    std::vector<int> st{from};
    seen[from] = 1;
    int count = 0;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : g.neighbours(v))
        if (w > s && !on[w] && !seen[w]) {
          seen[w] = 1;
          ++count;
          st.push_back(w);
        }
    }
    return count;
  }

  void extend(int v) {
    if (done) return;
    int len = static_cast<int>(path.size());
    if (len >= 3 && g.adjacent(v, s)) {
      if (exact < 0 && len > best) {
        best = len;
        best_cycle = path;
        if (above >= 0 && len > above) {
          done = true;
          return;
        }
      }
      if (exact == len) {
        best = len;
        best_cycle = path;
        done = true;
        return;
      }
    }
    if (exact >= 0 && len >= exact) return;
    if (exact < 0 && len + reachable_bound(v) <= best) return;
    for (int w : g.neighbours(v)) {
      if (w <= s || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      extend(w);
      path.pop_back();
      on[w] = 0;
      if (done) return;
    }
  }

  void run() {
    for (s = 0; s < g.n() && !done; ++s) {
      if (exact < 0 && g.n() - s <= best) break;
      on[s] = 1;
      path = {s};
      extend(s);
      on[s] = 0;
    }
  }
};

// Runs the cycle search per block, mapping cycles back to host ids.
std::optional<std::vector<int>> cycle_by_blocks(const Graph& g, int exact, int above, int* longest) {
  auto bd = blocks_and_cutvertices(g);
  int best = 0;
  std::vector<int> best_cycle;
  for (const auto& b : bd.blocks) {
    if (b.size() < 3) continue;
    if (exact >= 0 && static_cast<int>(b.size()) < exact) continue;
    if (above >= 0 && static_cast<int>(b.size()) <= above) continue;
    if (exact < 0 && above < 0 && static_cast<int>(b.size()) <= best) continue;
    Graph sub = g.induced(b);
    CycleSearch cs(sub);
    cs.exact = exact;
    cs.above = above;
    cs.run();
    if (cs.best > best) {
      best = cs.best;
      best_cycle.clear();
      for (int v : cs.best_cycle) best_cycle.push_back(b[v]);
      if (exact >= 0 || (above >= 0 && best > above)) break;
    }
  }
  if (longest) *longest = best;
  if (best_cycle.empty()) return std::nullopt;
  if (exact >= 0 && best != exact) return std::nullopt;
  if (above >= 0 && best <= above) return std::nullopt;
  return best_cycle;
}

}  // namespace

std::optional<Colouring> find_colouring_defect(const Graph& g, int k, int d, const OracleLimits& lim) {
  check_cap("min_colours_defect", g.n(), lim.colour_cap);
  if (d < 0) throw InvalidInput("defect must be non-negative");
  return colour_search(g, k, Measure::Defect, d, nullptr, lim.threads);
}

std::optional<Colouring> find_colouring_clustering(const Graph& g, int k, int c, const OracleLimits& lim) {
  check_cap("min_colours_clustering", g.n(), lim.colour_cap);
  if (c < 1) throw InvalidInput("clustering must be at least 1");
  return colour_search(g, k, Measure::Clustering, c, nullptr, lim.threads);
}

int min_colours_defect(const Graph& g, int d, const OracleLimits& lim) {
  check_cap("min_colours_defect", g.n(), lim.colour_cap);
  if (d < 0) throw InvalidInput("defect must be non-negative");
  if (g.n() == 0) return 0;
  for (int k = 1;; ++k)
    if (colour_search(g, k, Measure::Defect, d, nullptr, lim.threads)) return k;
}

int min_colours_clustering(const Graph& g, int c, const OracleLimits& lim) {
  check_cap("min_colours_clustering", g.n(), lim.colour_cap);
  if (c < 1) throw InvalidInput("clustering must be at least 1");
  if (g.n() == 0) return 0;
  for (int k = 1;; ++k)
    if (colour_search(g, k, Measure::Clustering, c, nullptr, lim.threads)) return k;
}

std::optional<Colouring> list_colourable_with_defect(const Graph& g, const ListAssignment& lists, int d,
                                                     const OracleLimits& lim) {
  check_cap("list_colourable_with_defect", g.n(), lim.list_cap);
  if (lists.n() != g.n()) throw InvalidInput("list assignment size differs from graph");
  if (d < 0) throw InvalidInput("defect must be non-negative");
  return colour_search(g, 0, Measure::Defect, d, &lists, lim.threads);
}

std::optional<MinorModel> find_minor(const Graph& g, const Graph& h, const OracleLimits& lim) {
  check_cap("has_minor pattern", h.n(), lim.minor_pattern_cap);
  check_cap("has_minor host", g.n(), lim.minor_host_cap);
  Pattern p = make_pattern(h);
  if (h.n() == 0) return MinorModel{};
  return minor_rec(g, p);
}

bool has_minor(const Graph& g, const Graph& h, const OracleLimits& lim) { return find_minor(g, h, lim).has_value(); }

bool is_minor_model(const Graph& g, const Graph& h, const MinorModel& model) {
  if (static_cast<int>(model.size()) != h.n()) return false;
  std::vector<int> owner(g.n(), -1);
  for (int x = 0; x < h.n(); ++x) {
    if (model[x].empty()) return false;
    for (int v : model[x]) {
      if (!g.contains(v) || owner[v] >= 0) return false;
      owner[v] = x;
    }
    if (!is_connected_subset(g, model[x])) return false;
  }
  for (auto [x, y] : h.edges()) {
    bool touch = false;
    for (int v : model[x]) {
      for (int w : g.neighbours(v))
        if (owner[w] == y) {
          touch = true;
          break;
        }
      if (touch) break;
    }
    if (!touch) return false;
  }
  return true;
}

namespace {

struct DepthTable {
  const Graph& h;
  std::vector<std::uint32_t> nb;
  std::vector<std::int8_t> memo;

  explicit DepthTable(const Graph& g) : h(g), nb(g.n(), 0), memo(std::size_t(1) << g.n(), -1) {
    for (int v = 0; v < g.n(); ++v)
      for (int w : g.neighbours(v)) nb[v] |= 1u << w;
  }

  std::uint32_t component(std::uint32_t s) const {
    std::uint32_t seen = s & (~s + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  // Tree-depth of H[s].
  int td(std::uint32_t s) {
    if (!s) return 0;
    if (memo[s] >= 0) return memo[s];
    std::uint32_t c = component(s);
    int r;
    if (c != s) {
      r = std::max(td(c), td(s & ~c));
    } else {
      r = std::numeric_limits<int>::max();
      for (std::uint32_t f = s; f; f &= f - 1) r = std::min(r, 1 + td(s & ~(f & (~f + 1))));
    }
    memo[s] = static_cast<std::int8_t>(r);
    return r;
  }
};

}  // namespace

int tree_depth(const Graph& h, const OracleLimits& lim) {
  check_cap("tree_depth", h.n(), lim.ctd_cap);
  DepthTable t(h);
  return t.td(h.n() == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t(1) << h.n()) - 1));
}

int connected_tree_depth(const Graph& h, const OracleLimits& lim) {
  check_cap("connected_tree_depth", h.n(), lim.ctd_cap);
  if (h.n() == 0) return 0;
  DepthTable t(h);
  std::uint32_t all = static_cast<std::uint32_t>((std::uint64_t(1) << h.n()) - 1);
  int td = t.td(all);
  if (t.component(all) == all) return td;
  // One rooted tree: either an extra root above the forest, or a vertex of H as root.
  int best = td + 1;
  for (int v = 0; v < h.n(); ++v) best = std::min(best, 1 + t.td(all & ~(1u << v)));
  return best;
}

int circumference(const Graph& g, const OracleLimits& lim) {
  check_cap("circumference", g.n(), lim.circumference_cap);
  int longest = 0;
  cycle_by_blocks(g, -1, -1, &longest);
  return longest == 0 ? 2 : longest;
}

std::optional<std::vector<int>> find_cycle_of_length(const Graph& g, int len, const OracleLimits& lim) {
  check_cap("find_cycle_of_length", g.n(), lim.circumference_cap);
  if (len < 3) return std::nullopt;
  return cycle_by_blocks(g, len, -1, nullptr);
}

std::optional<std::vector<int>> find_cycle_longer_than(const Graph& g, int len, const OracleLimits& lim) {
  check_cap("find_cycle_longer_than", g.n(), lim.circumference_cap);
  return cycle_by_blocks(g, -1, std::max(len, 2), nullptr);
}

bool is_balanced_separator(const Graph& g, const std::vector<int>& s) {
  std::vector<char> alive(g.n(), 1);
  for (int v : s) alive[v] = 0;
  for (const auto& c : components_of(g, alive))
    if (2 * c.size() > static_cast<std::size_t>(g.n())) return false;
  return true;
}

std::vector<int> min_balanced_separator(const Graph& g, const OracleLimits& lim) {
  check_cap("min_balanced_separator", g.n(), lim.separator_cap);
  const int n = g.n();
  std::vector<int> s;
  for (int size = 0; size <= n; ++size) {
    s.resize(size);
    std::iota(s.begin(), s.end(), 0);
    for (;;) {
      if (is_balanced_separator(g, s)) return s;
      int i = size - 1;
      while (i >= 0 && s[i] == n - size + i) --i;
      if (i < 0) break;
      ++s[i];
      for (int j = i + 1; j < size; ++j) s[j] = s[j - 1] + 1;
    }
  }
  return s;
}

}  // namespace dcol
