#ifndef LGQ_KOSZUL_HPP
#define LGQ_KOSZUL_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "lgq/cycles.hpp"
#include "lgq/quiver.hpp"

namespace lgq {

// Shape of the graded projective resolution of the simple at a vertex:
// terms[d] lists the d-th vertices along the (at most two) full-relations
// threads leaving the base vertex, each carrying internal shift <-d>.
// A thread that runs into a full-relations cycle never terminates; the
// resolution is then reported as not finite and truncated at the
// requested depth.
struct GradedResolution {
  int base_vertex = 0;
  std::vector<std::vector<int>> terms;  // terms[d], d = 0..max_depth
  bool finite = false;

  int length() const {  // projective dimension when finite
    int last = 0;
    for (size_t d = 0; d < terms.size(); ++d)
      if (!terms[d].empty()) last = static_cast<int>(d);
    return last;
  }
};

inline GradedResolution resolution(const LocallyGentleQuiver& g, int vertex, int max_depth) {
  if (vertex < 0 || vertex >= g.n_vertices())
    throw PreconditionError("UnknownVertex: no such vertex index");
  if (max_depth < 1) throw PreconditionError("resolution: max_depth must be >= 1");

  const Quiver& q = g.quiver();
  GradedResolution res;
  res.base_vertex = vertex;
  res.terms.assign(static_cast<size_t>(max_depth) + 1, {});
  res.terms[0].push_back(vertex);

  // a terminating thread has pairwise distinct arrows, so termination
  // within max_depth >= n_arrows + 1 is exact
  bool all_terminated = true;
  for (int first : q.arrows_out_of(vertex)) {
    int cur = first;
    bool terminated = false;
    for (int d = 1; d <= max_depth; ++d) {
      res.terms[static_cast<size_t>(d)].push_back(q.arrows[static_cast<size_t>(cur)].target);
      auto next = g.forbidden_successor(cur);
      if (!next) {
        terminated = true;
        break;
      }
      cur = *next;
    }
    if (!terminated) all_terminated = false;
  }
  for (auto& t : res.terms) std::sort(t.begin(), t.end());
  res.finite = all_terminated;
  return res;
}

// Cor.: finite global dimension iff there is no cycle with full relations.
inline bool gldim_finite(const LocallyGentleQuiver& g) {
  return minimal_cycles(g).zc.empty();
}

}  // namespace lgq

#endif
