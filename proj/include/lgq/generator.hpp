#ifndef LGQ_GENERATOR_HPP
#define LGQ_GENERATOR_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lgq/quiver.hpp"

namespace lgq {

// Deterministic corpus generator for property tests. Arrows are added while
// the (G2) degree bounds permit; relations are then assigned per vertex by
// splitting the composable in/out pairs, which makes (G3)/(G5) hold by
// construction. Output is identical for identical seeds on any platform
// (raw mt19937_64 words, no std distributions).
inline LocallyGentleQuiver random_locally_gentle(int n_vertices, int max_arrows,
                                                 uint64_t seed) {
  if (n_vertices < 1) throw PreconditionError("random_locally_gentle: need n_vertices >= 1");
  std::mt19937_64 rng(seed);
  auto pick = [&rng](size_t n) { return static_cast<size_t>(rng() % n); };

  Quiver q;
  for (int v = 0; v < n_vertices; ++v) q.add_vertex("v" + std::to_string(v + 1));

  std::vector<int> outdeg(static_cast<size_t>(n_vertices), 0);
  std::vector<int> indeg(static_cast<size_t>(n_vertices), 0);
  for (int k = 0; k < max_arrows; ++k) {
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < n_vertices; ++u)
      for (int v = 0; v < n_vertices; ++v)
        if (outdeg[static_cast<size_t>(u)] < 2 && indeg[static_cast<size_t>(v)] < 2)
          candidates.emplace_back(u, v);
    if (candidates.empty()) break;
    auto [u, v] = candidates[pick(candidates.size())];
    q.add_arrow("a" + std::to_string(k + 1), u, v);
    ++outdeg[static_cast<size_t>(u)];
    ++indeg[static_cast<size_t>(v)];
  }

  for (int v = 0; v < n_vertices; ++v) {
    std::vector<int> in = q.arrows_into(v);
    std::vector<int> out = q.arrows_out_of(v);
    if (in.empty() || out.empty()) continue;
    if (in.size() == 1 && out.size() == 1) {
      if (rng() % 2 == 0) q.add_relation(in[0], out[0]);
    } else if (in.size() == 1) {
      // exactly one of the two composable pairs must be a relation
      q.add_relation(in[0], out[pick(2)]);
    } else if (out.size() == 1) {
      q.add_relation(in[pick(2)], out[0]);
    } else {
      // perfect matching of forbidden pairs, one of the two possibilities
      if (rng() % 2 == 0) {
        q.add_relation(in[0], out[0]);
        q.add_relation(in[1], out[1]);
      } else {
        q.add_relation(in[0], out[1]);
        q.add_relation(in[1], out[0]);
      }
    }
  }

  return validate(q);
}

}  // namespace lgq

#endif
