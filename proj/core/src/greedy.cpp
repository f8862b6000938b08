#include "dcol/greedy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "dcol/errors.hpp"

namespace dcol {

namespace {

std::int64_t floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t ceil_of(const Rational& r) { return -floor_of(-r); }

void require_lists(const Graph& g, const ListAssignment& lists, int size, const char* who) {
  if (lists.n() != g.n()) throw InvalidInput(std::string(who) + ": list assignment size differs from graph");
  if (g.n() > 0 && lists.min_size() < size)
    throw InvalidInput(std::string(who) + ": lists need at least " + std::to_string(size) + " colours");
}

// Lowest colour of the list missing from the used set.
int first_free(const std::vector<int>& list, const std::set<int>& used) {
  for (int c : list)
    if (!used.count(c)) return c;
  return kUncoloured;
}

}  // namespace

Colouring light_edge_colour(const Graph& g, const ListAssignment& lists, int k, int ell) {
  if (k < 0 || ell < k) throw InvalidInput("light_edge_colour: need ell >= k >= 0");
  require_lists(g, lists, k + 1, "light_edge_colour");
  const int n = g.n();
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = {g.neighbours(v).begin(), g.neighbours(v).end()};
  std::vector<char> alive(n, 1);
  struct Op {
    int v = -1;               // removed vertex, or -1 for an edge
    std::vector<int> nbrs;    // its neighbours at removal
    Edge e{};
  };
  std::vector<Op> ops;
  int left = n;
  while (left > 0) {
    int low = -1;
    for (int v = 0; v < n && low < 0; ++v)
      if (alive[v] && static_cast<int>(adj[v].size()) <= k) low = v;
    if (low >= 0) {
      ops.push_back({low, {adj[low].begin(), adj[low].end()}, {}});
      for (int w : adj[low]) adj[w].erase(low);
      adj[low].clear();
      alive[low] = 0;
      --left;
      continue;
    }
    Edge light{-1, -1};
    for (int u = 0; u < n && light.first < 0; ++u) {
      if (!alive[u] || static_cast<int>(adj[u].size()) > ell) continue;
      for (int w : adj[u])
        if (w > u && static_cast<int>(adj[w].size()) <= ell) {
          light = {u, w};
          break;
        }
    }
    if (light.first < 0) {
      std::vector<int> witness;
      for (int u = 0; u < n; ++u)
        for (int w : adj[u])
          if (u < w) {
            witness.push_back(u);
            witness.push_back(w);
          }
      throw HypothesisViolation("light edge hypothesis violated: a subgraph on " + std::to_string(left) +
                                    " vertices has minimum degree > " + std::to_string(k) + " and no " +
                                    std::to_string(ell) + "-light edge",
                                witness);
    }
    adj[light.first].erase(light.second);
    adj[light.second].erase(light.first);
    ops.push_back({-1, {}, light});
  }

  Colouring chi(n);
  const int bound = ell - k;
  auto mono = [&](int v) {
    int c = 0;
    for (int w : adj[v]) c += chi[w] == chi[v];
    return c;
  };
  auto recolour = [&](int v) {
    std::set<int> used;
    for (int w : adj[v]) used.insert(chi[w]);
    int c = first_free(lists[v], used);
    if (c == kUncoloured) throw Error("light_edge_colour: no free colour while recolouring");
    chi[v] = c;
  };
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (it->v >= 0) {
      int v = it->v;
      std::set<int> used;
      for (int w : it->nbrs) {
        adj[v].insert(w);
        adj[w].insert(v);
        used.insert(chi[w]);
      }
      chi[v] = first_free(lists[v], used);
      continue;
    }
    auto [x, y] = it->e;
    adj[x].insert(y);
    adj[y].insert(x);
    if (chi[x] != chi[y]) continue;
    if (mono(x) > bound)
      recolour(x);
    else if (mono(y) > bound)
      recolour(y);
  }
  return chi;
}

IslandColouring island_colour(const Graph& g, const ListAssignment& lists, int k, const IslandFinder& finder) {
  if (k < 0) throw InvalidInput("island_colour: k must be non-negative");
  require_lists(g, lists, k + 1, "island_colour");
  const int n = g.n();
  IslandColouring out;
  out.colouring = Colouring(n);
  out.island.assign(n, -1);
  std::vector<int> rest(n);
  for (int v = 0; v < n; ++v) rest[v] = v;
  std::vector<std::vector<int>> islands;
  while (!rest.empty()) {
    Graph h = g.induced(rest);
    std::vector<int> s = finder(h);
    if (s.empty()) throw HypothesisViolation("island hypothesis violated: no k-island found", rest);
    std::vector<char> in(h.n(), 0);
    for (int x : s) {
      if (!h.contains(x) || in[x]) throw InvalidInput("island finder returned an invalid vertex set");
      in[x] = 1;
    }
    for (int x : s) {
      int outside = 0;
      for (int w : h.neighbours(x)) outside += !in[w];
      if (outside > k)
        throw HypothesisViolation("island finder returned a non-island: vertex " + std::to_string(rest[x]) + " has " +
                                      std::to_string(outside) + " outside neighbours",
                                  {rest[x]});
    }
    std::vector<int> global, keep;
    for (int i = 0; i < h.n(); ++i) (in[i] ? global : keep).push_back(rest[i]);
    for (int v : global) out.island[v] = static_cast<int>(islands.size());
    out.max_island = std::max(out.max_island, static_cast<int>(global.size()));
    islands.push_back(global);
    rest = keep;
  }
  for (auto it = islands.rbegin(); it != islands.rend(); ++it) {
    int id = static_cast<int>(islands.rend() - it) - 1;
    for (int v : *it) {
      std::set<int> used;
      for (int w : g.neighbours(v))
        if (out.island[w] > id) used.insert(out.colouring[w]);
      out.colouring[v] = first_free(lists[v], used);
    }
  }
  return out;
}

IslandFinder degenerate_islands(int k) {
  return [k](const Graph& h) -> std::vector<int> {
    for (int v = 0; v < h.n(); ++v)
      if (h.degree(v) <= k) return {v};
    return {};
  };
}

LovaszResult lovasz_defective(const Graph& g, int d) {
  if (d < 0) throw InvalidInput("lovasz_defective: defect must be non-negative");
  const int n = g.n();
  LovaszResult r;
  r.k = g.max_degree() / (d + 1) + 1;
  r.colouring = Colouring(n, 0);
  auto& chi = r.colouring;
  std::vector<int> same(n);
  for (int v = 0; v < n; ++v) same[v] = g.degree(v);
  std::set<int> bad;
  for (int v = 0; v < n; ++v)
    if (same[v] > d) bad.insert(v);
  std::int64_t bichromatic = 0;
  while (!bad.empty()) {
    r.bichromatic.push_back(bichromatic);
    int v = *bad.begin();
    std::vector<int> count(r.k, 0);
    for (int w : g.neighbours(v)) ++count[chi[w]];
    int best = -1;
    for (int c = 0; c < r.k; ++c)
      if (c != chi[v] && (best < 0 || count[c] < count[best])) best = c;
    if (best < 0 || count[best] > d) throw Error("lovasz_defective: no colour class with few neighbours");
    bichromatic += count[chi[v]] - count[best];
    int old = chi[v];
    chi[v] = best;
    same[v] = count[best];
    for (int w : g.neighbours(v)) {
      if (chi[w] == old) --same[w];
      if (chi[w] == best) ++same[w];
      if (same[w] > d)
        bad.insert(w);
      else
        bad.erase(w);
    }
    if (same[v] > d)
      bad.insert(v);
    else
      bad.erase(v);
    ++r.iterations;
  }
  r.bichromatic.push_back(bichromatic);
  return r;
}

Colouring tree_subgraph_peel(const Graph& g, int n, int r) {
  if (n < 2 || r < 1) throw InvalidInput("tree_subgraph_peel: need n >= 2 and r >= 1");
  const int size = g.n();
  Colouring chi(size, r - 1);
  std::vector<char> in(size, 1);
  std::vector<int> deg(size);
  for (int v = 0; v < size; ++v) deg[v] = g.degree(v);
  for (int i = 0; i + 1 < r; ++i) {
    std::vector<int> layer;
    for (int v = 0; v < size; ++v)
      if (in[v] && deg[v] <= n - 2) layer.push_back(v);
    for (int v : layer) {
      chi[v] = i;
      in[v] = 0;
    }
    for (int v : layer)
      for (int w : g.neighbours(v)) --deg[w];
  }
  for (int v = 0; v < size; ++v) {
    if (!in[v] || deg[v] <= n - 2) continue;
    std::vector<int> witness{v};
    for (int w : g.neighbours(v))
      if (in[w]) witness.push_back(w);
    throw HypothesisViolation("T-subgraph hypothesis violated: vertex " + std::to_string(v) + " has " +
                                  std::to_string(deg[v]) + " neighbours in the last layer, so the defect exceeds " +
                                  std::to_string(n - 2),
                              witness);
  }
  return chi;
}

Colouring thickness_peel(const Graph& g, const ListAssignment& lists, int k, int genus) {
  if (k < 1 || genus < 0) throw InvalidInput("thickness_peel: need k >= 1 and g >= 0");
  require_lists(g, lists, 6 * k + 1, "thickness_peel");
  const int n = g.n();
  const long long small = 6LL * k * genus;
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<std::pair<int, bool>> order;  // vertex, removed in the small phase
  for (int left = n; left > 0; --left) {
    int v = -1;
    bool is_small = left <= small;
    for (int u = 0; u < n && v < 0; ++u)
      if (alive[u] && (is_small || deg[u] <= 6 * k)) v = u;
    if (v < 0) {
      std::vector<int> rest;
      for (int u = 0; u < n; ++u)
        if (alive[u]) rest.push_back(u);
      throw HypothesisViolation("thickness hypothesis violated: " + std::to_string(left) +
                                    " vertices remain and none has degree <= " + std::to_string(6 * k),
                                rest);
    }
    alive[v] = 0;
    for (int w : g.neighbours(v)) --deg[w];
    order.emplace_back(v, is_small);
  }
  Colouring chi(n);
  std::map<int, int> used_count;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto [v, is_small] = *it;
    if (is_small) {
      for (int c : lists[v])
        if (used_count[c] <= genus - 1) {
          chi[v] = c;
          break;
        }
    } else {
      std::set<int> used;
      for (int w : g.neighbours(v))
        if (alive[w]) used.insert(chi[w]);
      chi[v] = first_free(lists[v], used);
    }
    if (chi[v] == kUncoloured) throw Error("thickness_peel: no admissible colour");
    alive[v] = 1;
    ++used_count[chi[v]];
  }
  return chi;
}

std::int64_t oow_light_bound(int s, int t, const Rational& mad, const Rational& nabla) {
  if (s < 1 || t < 1) throw InvalidInput("oow_light_bound: need s, t >= 1");
  if (mad < 0 || nabla < 0) throw InvalidInput("oow_light_bound: densities must be non-negative");
  if (s == 1) return t - 1;
  if (s == 2) return floor_of(Rational(1, 2) * (mad - 2) * nabla * t + mad);
  std::int64_t f = floor_of(nabla);
  // binom(floor(nabla), s-1)
  std::int64_t b = 1;
  for (int i = 0; i < s - 1; ++i) {
    if (f - i <= 0) {
      b = 0;
      break;
    }
    b = b * (f - i) / (i + 1);
  }
  return floor_of((mad - s) * (Rational(b) * (t - 1) + nabla / 2) + mad);
}

MadParams mad_defect_params(const Rational& m) {
  if (m <= 0) throw InvalidInput("mad_defect_params: m must be positive");
  MadParams p;
  p.k = static_cast<int>(floor_of(m / 2) + 1);
  p.d = static_cast<int>(ceil_of(m * m / (Rational(4 * p.k) - 2 * m) + m / 2));
  if (Rational(1, p.k) + Rational(1, p.d) > 2 / m) throw Error("mad_defect_params: 1/k + 1/d <= 2/m fails");
  return p;
}

std::int64_t thickness_light_bound(int g, int k) {
  if (g < 0 || k < 1) throw InvalidInput("thickness_light_bound: need g >= 0 and k >= 1");
  std::int64_t G = g, K = k;
  return 2 * K * G + 8 * K * K + 2 * K + 1;
}

LightEdgeConditions light_edge_conditions(int g, int k, int delta, std::int64_t ell) {
  LightEdgeConditions c;
  std::int64_t G = g, K = k, D = delta, L = ell;
  c.degree_range = 6 * K >= D && D >= 2 * K + 1;
  c.linear = (D - 2 * K) * L > 4 * K * D;
  c.quadratic = (D - 2 * K) * L * L - ((4 * K - 1) * D + 2 * K * (G - 1)) * L - 4 * K * (G - 1) * D > 0;
  return c;
}

EpsilonParams epsilon_params(const EngineContract& ct, const Rational& eps) {
  if (eps <= 0) throw InvalidInput("epsilon must be positive");
  if (ct.x <= 0 || ct.y <= 0 || ct.alpha <= 0) throw InvalidInput("engine contract constants must be positive");
  EpsilonParams p;
  p.d = static_cast<int>(std::max<std::int64_t>(0, ceil_of(Rational(2) / eps * (ct.x * ct.y - 1)) - 1));
  Rational ad = ct.alpha * p.d;
  p.c = std::max(ad, 2 * ad / eps);
  return p;
}

namespace {

void check_contract(const Graph& g, const Colouring& chi, const EngineContract& ct) {
  if (chi.n() != g.n() || !chi.uncoloured().empty()) throw Error("base engine returned a partial colouring");
  if (g.n() == 0) return;
  Rational delta(g.max_degree());
  auto cert = audit(g, chi);
  if (Rational(cert.k) > delta / ct.x + ct.y)
    throw Error("base engine breaks its contract: " + std::to_string(cert.k) + " colours");
  if (Rational(cert.clustering) > std::max(Rational(1), ct.alpha * delta))
    throw Error("base engine breaks its contract: clustering " + std::to_string(cert.clustering));
}

}  // namespace

ColourEngine epsilon_compose(ColourEngine base, EngineContract contract, Rational eps) {
  EpsilonParams p = epsilon_params(contract, eps);
  return [base = std::move(base), contract, p](const Graph& g) -> Colouring {
    Rational delta(g.max_degree());
    if (contract.alpha * delta <= p.c) {
      Colouring chi = base(g);
      check_contract(g, chi, contract);
      return chi;
    }
    auto split = lovasz_defective(g, p.d);
    auto classes = split.colouring.classes();
    std::vector<Colouring> inner;
    for (const auto& cls : classes) {
      Graph sub = g.induced(cls);
      Colouring chi = base(sub);
      check_contract(sub, chi, contract);
      inner.push_back(chi);
    }
    return product_colouring(split.colouring, classes, inner);
  };
}

Rational nabla_exhaustive(const Graph& g) {
  const int n = g.n();
  if (n > 10) throw CapExceeded("nabla_exhaustive", n, 10);
  Rational best(0);
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> b;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) b.push_back(v);
    if (b.size() < 2) continue;
    // Pairs of B against middle vertices outside B.
    std::vector<std::vector<int>> options;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        std::vector<int> mid;
        for (int w = 0; w < n; ++w)
          if (!(mask >> w & 1) && g.adjacent(w, b[i]) && g.adjacent(w, b[j])) mid.push_back(w);
        if (!mid.empty()) options.push_back(mid);
      }
    std::vector<int> owner(n, -1);
    int matched = 0;
    for (std::size_t p = 0; p < options.size(); ++p) {
      std::vector<char> seen(n, 0);
      std::function<bool(int)> augment = [&](int q) -> bool {
        for (int w : options[q]) {
          if (seen[w]) continue;
          seen[w] = 1;
          if (owner[w] < 0 || augment(owner[w])) {
            owner[w] = q;
            return true;
          }
        }
        return false;
      };
      matched += augment(static_cast<int>(p));
    }
    best = std::max(best, Rational(2 * matched, static_cast<std::int64_t>(b.size())));
  }
  return best;
}

}  // namespace dcol
