#pragma once

#include <optional>
#include <vector>

#include "dcol/graph.hpp"

namespace dcol {

inline constexpr int kUncoloured = -1;

struct Colouring {
  std::vector<int> colour;  // kUncoloured marks a gap

  Colouring() = default;
  explicit Colouring(int n, int c = kUncoloured) : colour(n, c) {}
  explicit Colouring(std::vector<int> c) : colour(std::move(c)) {}

  int n() const noexcept { return static_cast<int>(colour.size()); }
  int operator[](int v) const { return colour[v]; }
  int& operator[](int v) { return colour[v]; }
  int num_colours() const;  // distinct ids in use
  std::vector<int> uncoloured() const;
  // Relabels ids to 0..k-1 in order of first appearance.
  Colouring normalised() const;
  std::vector<std::vector<int>> classes() const;
};

struct ListAssignment {
  std::vector<std::vector<int>> lists;  // sorted, nonempty

  ListAssignment() = default;
  explicit ListAssignment(std::vector<std::vector<int>> ls);
  static ListAssignment uniform(int n, int k);
  int n() const noexcept { return static_cast<int>(lists.size()); }
  const std::vector<int>& operator[](int v) const { return lists[v]; }
  bool allows(int v, int c) const;
  int min_size() const;
};

struct Certificate {
  int k = 0;
  int defect = 0;
  int clustering = 0;
  std::vector<std::vector<int>> components;  // monochromatic components, sorted
  bool all_paths = true;
  std::vector<int> class_sizes;  // indexed by colour id
};

Certificate audit(const Graph& g, const Colouring& chi);

struct ListCheck {
  bool ok = true;
  std::optional<int> witness;  // first vertex with chi(v) outside L(v)
  explicit operator bool() const { return ok; }
};
ListCheck respects_lists(const Colouring& chi, const ListAssignment& lists);

// Monochromatic degree of every vertex.
std::vector<int> mono_degrees(const Graph& g, const Colouring& chi);

// classes[i] lists the vertices of colour i of chi1 in the order used by
// inner[i], which colours the subgraph they induce.
Colouring product_colouring(const Colouring& chi1, const std::vector<std::vector<int>>& classes,
                            const std::vector<Colouring>& inner);
// Convenience: colours each class of chi1 with f(G[class]) and takes the product.
template <class F>
Colouring product_colouring(const Graph& g, const Colouring& chi1, F&& f) {
  auto classes = chi1.classes();
  std::vector<Colouring> inner;
  inner.reserve(classes.size());
  for (const auto& cls : classes) inner.push_back(f(g.induced(cls)));
  return product_colouring(chi1, classes, inner);
}

// Monotone source of fresh colour ids.
class ColourAllocator {
 public:
  explicit ColourAllocator(int start = 0) : next_(start) {}
  int fresh() { return next_++; }
  int used() const noexcept { return next_; }

 private:
  int next_;
};

}  // namespace dcol
