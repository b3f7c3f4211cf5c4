#pragma once

#include <utility>
#include <vector>

namespace pkr {

// Finite digraph on vertices 1..n; self-loops allowed. Edges are kept
// sorted and duplicate-free.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const DirectedGraph& a, const DirectedGraph& b) {
    return !(a == b);
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace pkr
