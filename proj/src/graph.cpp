#include "pkr/graph.hpp"

#include <algorithm>

#include "pkr/errors.hpp"

namespace pkr {

DirectedGraph::DirectedGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw contract_error("negative vertex count");
  for (const auto& [i, j] : edges_)
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw contract_error("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") outside vertices 1.." + std::to_string(n_));
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool DirectedGraph::has_edge(int i, int j) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

}  // namespace pkr
