#pragma once

#include <vector>

#include "pkr/graph.hpp"
#include "pkr/qbf.hpp"
#include "pkr/semantics.hpp"

namespace pkr {

struct KernelResult {
  bool exists = false;
  std::vector<int> witness;  // a kernel when exists, first in subset order
};

// Exhaustive search over all vertex subsets K: the complement H must be a
// vertex cover and every vertex of H must have an incoming edge from K.
KernelResult has_kernel(const DirectedGraph& g, const Limits& limits = {});

// Some existential assignment falsifies a matrix clause under every
// universal assignment. Brute force over all assignments.
bool qbf_valid(const QbfInstance& q, const Limits& limits = {});
bool qbf_valid(const QbfEA& q, const Limits& limits = {});

}  // namespace pkr
