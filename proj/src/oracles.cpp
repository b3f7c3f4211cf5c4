#include "pkr/oracles.hpp"

#include "pkr/errors.hpp"

namespace pkr {

KernelResult has_kernel(const DirectedGraph& g, const Limits& limits) {
  const int n = g.vertex_count();
  if (n > limits.kernel_vertices)
    throw capacity_error("graph with " + std::to_string(n) +
                         " vertices exceeds the kernel enumeration cap of " +
                         std::to_string(limits.kernel_vertices));
  // out[i], in[j]: successor/predecessor sets as bitmasks (vertex v -> bit v-1).
  std::vector<std::uint32_t> out(n, 0), in(n, 0);
  for (const auto& [i, j] : g.edges()) {
    out[i - 1] |= std::uint32_t(1) << (j - 1);
    in[j - 1] |= std::uint32_t(1) << (i - 1);
  }
  const std::uint64_t subsets = std::uint64_t(1) << n;
  for (std::uint64_t k = 0; k < subsets; ++k) {
    const auto kmask = static_cast<std::uint32_t>(k);
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      const std::uint32_t bit = std::uint32_t(1) << v;
      if (kmask & bit) {
        // H covers every edge, so no edge may run inside K.
        if (out[v] & kmask) ok = false;
      } else {
        // Every vertex of H needs an incoming edge from K.
        if (!(in[v] & kmask)) ok = false;
      }
    }
    if (ok) {
      KernelResult r;
      r.exists = true;
      for (int v = 0; v < n; ++v)
        if ((kmask >> v) & 1u) r.witness.push_back(v + 1);
      return r;
    }
  }
  return {};
}

bool qbf_valid(const QbfInstance& q, const Limits& limits) {
  const int nx = static_cast<int>(q.existential().size());
  const int ny = static_cast<int>(q.universal().size());
  if (nx + ny > limits.qbf_vars)
    throw capacity_error("QBF with " + std::to_string(nx + ny) +
                         " variables exceeds the assignment enumeration cap of " +
                         std::to_string(limits.qbf_vars));
  const Alphabet all = q.variables();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;  // (positive, negative)
  masks.reserve(q.clauses().size());
  for (const Clause& c : q.clauses()) {
    std::uint32_t pos = 0, neg = 0;
    for (const Literal& l : c.literals()) {
      const std::uint32_t bit = std::uint32_t(1) << all.index(l.atom);
      (l.positive ? pos : neg) |= bit;
    }
    masks.emplace_back(pos, neg);
  }
  const std::uint64_t x_count = std::uint64_t(1) << nx;
  const std::uint64_t y_count = std::uint64_t(1) << ny;
  for (std::uint64_t x = 0; x < x_count; ++x) {
    bool all_y = true;
    for (std::uint64_t y = 0; y < y_count && all_y; ++y) {
      const auto assign = static_cast<std::uint32_t>(x | (y << nx));
      bool some_false = false;
      for (const auto& [pos, neg] : masks) {
        // False clause: every positive atom false, every negated atom true.
        if ((assign & pos) == 0 && (assign & neg) == neg) { some_false = true; break; }
      }
      if (!some_false) all_y = false;
    }
    if (all_y) return true;
  }
  return false;
}

bool qbf_valid(const QbfEA& q, const Limits& limits) { return qbf_valid(q.instance(), limits); }

}  // namespace pkr
