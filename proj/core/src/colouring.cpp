#include "dcol/colouring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "dcol/errors.hpp"

namespace dcol {

int Colouring::num_colours() const {
  std::set<int> s;
  for (int c : colour)
    if (c != kUncoloured) s.insert(c);
  return static_cast<int>(s.size());
}

std::vector<int> Colouring::uncoloured() const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (colour[v] < 0) out.push_back(v);
  return out;
}

Colouring Colouring::normalised() const {
  std::map<int, int> ids;
  Colouring out(n());
  for (int v = 0; v < n(); ++v) {
    if (colour[v] < 0) continue;
    auto [it, fresh] = ids.try_emplace(colour[v], static_cast<int>(ids.size()));
    out[v] = it->second;
  }
  return out;
}

std::vector<std::vector<int>> Colouring::classes() const {
  int top = 0;
  for (int c : colour) top = std::max(top, c + 1);
  std::vector<std::vector<int>> out(top);
  for (int v = 0; v < n(); ++v)
    if (colour[v] >= 0) out[colour[v]].push_back(v);
  return out;
}

ListAssignment::ListAssignment(std::vector<std::vector<int>> ls) : lists(std::move(ls)) {
  for (std::size_t v = 0; v < lists.size(); ++v) {
    auto& l = lists[v];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (l.empty()) throw InvalidInput("empty list at vertex " + std::to_string(v));
  }
}

ListAssignment ListAssignment::uniform(int n, int k) {
  std::vector<int> l(k);
  for (int i = 0; i < k; ++i) l[i] = i;
  return ListAssignment(std::vector<std::vector<int>>(n, l));
}

bool ListAssignment::allows(int v, int c) const {
  return std::binary_search(lists[v].begin(), lists[v].end(), c);
}

int ListAssignment::min_size() const {
  int k = lists.empty() ? 0 : static_cast<int>(lists[0].size());
  for (const auto& l : lists) k = std::min(k, static_cast<int>(l.size()));
  return k;
}

std::vector<int> mono_degrees(const Graph& g, const Colouring& chi) {
  std::vector<int> d(g.n(), 0);
  for (auto [u, v] : g.edges())
    if (chi[u] == chi[v] && chi[u] >= 0) {
      ++d[u];
      ++d[v];
    }
  return d;
}

Certificate audit(const Graph& g, const Colouring& chi) {
  if (chi.n() != g.n())
    throw InvalidInput("colouring covers " + std::to_string(chi.n()) + " vertices, graph has " +
                       std::to_string(g.n()));
  auto missing = chi.uncoloured();
  if (!missing.empty()) {
    std::string msg = "uncoloured vertices:";
    for (std::size_t i = 0; i < missing.size() && i < 20; ++i) msg += " " + std::to_string(missing[i]);
    if (missing.size() > 20) msg += " ...";
    throw InvalidInput(msg);
  }
  Certificate cert;
  cert.k = chi.num_colours();
  auto deg = mono_degrees(g, chi);
  for (int d : deg) cert.defect = std::max(cert.defect, d);
  for (const auto& cls : chi.classes()) cert.class_sizes.push_back(static_cast<int>(cls.size()));

  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    long long mono_edges = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      int v = comp[i];
      for (int w : g.neighbours(v)) {
        if (chi[w] != chi[v]) continue;
        if (v < w) ++mono_edges;
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    bool path = mono_edges + 1 == static_cast<long long>(comp.size());
    for (int v : comp) path = path && deg[v] <= 2;
    cert.all_paths = cert.all_paths && path;
    cert.clustering = std::max(cert.clustering, static_cast<int>(comp.size()));
    std::sort(comp.begin(), comp.end());
    cert.components.push_back(std::move(comp));
  }
  return cert;
}

ListCheck respects_lists(const Colouring& chi, const ListAssignment& lists) {
  if (chi.n() != lists.n()) throw InvalidInput("colouring and list assignment sizes differ");
  for (int v = 0; v < chi.n(); ++v)
    if (!lists.allows(v, chi[v])) return {false, v};
  return {true, std::nullopt};
}

Colouring product_colouring(const Colouring& chi1, const std::vector<std::vector<int>>& classes,
                            const std::vector<Colouring>& inner) {
  if (classes.size() != inner.size()) throw InvalidInput("product_colouring: class count mismatch");
  int k2 = 1;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (static_cast<int>(classes[i].size()) != inner[i].n())
      throw InvalidInput("product_colouring: class " + std::to_string(i) + " size mismatch");
    for (int c : inner[i].colour) {
      if (c < 0) throw InvalidInput("product_colouring: inner colouring is partial");
      k2 = std::max(k2, c + 1);
    }
  }
  Colouring out(chi1.n());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes[i].size(); ++j) {
      int v = classes[i][j];
      if (chi1[v] != static_cast<int>(i))
        throw InvalidInput("product_colouring: vertex " + std::to_string(v) + " not in class " + std::to_string(i));
      out[v] = chi1[v] * k2 + inner[i][static_cast<int>(j)];
    }
  if (!out.uncoloured().empty()) throw InvalidInput("product_colouring: classes do not cover all vertices");
  return out;
}

}  // namespace dcol
