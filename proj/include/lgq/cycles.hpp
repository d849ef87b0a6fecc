#ifndef LGQ_CYCLES_HPP
#define LGQ_CYCLES_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "lgq/quiver.hpp"

namespace lgq {

enum class CycleKind {
  FullRelations,  // ZC: every consecutive product lies in the ideal
  NoRelations     // IC: no consecutive product lies in the ideal
};

// Primitive oriented cycle, canonicalized by rotating the arrow with the
// lexicographically least id to the front.
struct MinimalCycle {
  std::vector<int> arrows;
  CycleKind kind = CycleKind::FullRelations;

  int length() const { return static_cast<int>(arrows.size()); }

  Monomial weight(const WeightFunction& w) const {
    return w.path_weight(arrows.begin(), arrows.end());
  }

  bool contains(int arrow) const {
    return std::find(arrows.begin(), arrows.end(), arrow) != arrows.end();
  }

  std::string to_string(const Quiver& q) const {
    std::string out = "(";
    for (size_t i = 0; i < arrows.size(); ++i) {
      if (i) out += " ";
      out += q.arrows[static_cast<size_t>(arrows[i])].id;
    }
    return out + ")";
  }
};

struct CyclePartition {
  std::vector<MinimalCycle> zc;  // full relations
  std::vector<MinimalCycle> ic;  // no relations
};

// Every primitive cycle of each kind, once up to rotation. Following the
// (unique) forbidden resp. permitted successor from each arrow either
// terminates or returns to the start within n_arrows steps.
inline CyclePartition minimal_cycles(const LocallyGentleQuiver& g) {
  const Quiver& q = g.quiver();
  const int na = g.n_arrows();

  auto collect = [&](CycleKind kind) {
    std::vector<MinimalCycle> out;
    std::set<std::vector<int>> seen;
    for (int start = 0; start < na; ++start) {
      std::vector<int> seq;
      int cur = start;
      bool closed = false;
      for (int step = 0; step < na; ++step) {
        seq.push_back(cur);
        auto next = kind == CycleKind::FullRelations ? g.forbidden_successor(cur)
                                                     : g.permitted_successor(cur);
        if (!next) break;
        if (*next == start) {
          closed = true;
          break;
        }
        cur = *next;
      }
      if (!closed) continue;
      // canonical rotation: least arrow id first
      size_t least = 0;
      for (size_t i = 1; i < seq.size(); ++i)
        if (q.arrows[static_cast<size_t>(seq[i])].id < q.arrows[static_cast<size_t>(seq[least])].id)
          least = i;
      std::rotate(seq.begin(), seq.begin() + static_cast<long>(least), seq.end());
      if (seen.insert(seq).second) out.push_back(MinimalCycle{seq, kind});
    }
    std::sort(out.begin(), out.end(), [&](const MinimalCycle& a, const MinimalCycle& b) {
      return q.arrows[static_cast<size_t>(a.arrows[0])].id <
             q.arrows[static_cast<size_t>(b.arrows[0])].id;
    });
    return out;
  };

  CyclePartition parts;
  parts.zc = collect(CycleKind::FullRelations);
  parts.ic = collect(CycleKind::NoRelations);
  return parts;
}

// Gentle (finite-dimensional case) iff no cycle with no relations exists.
inline bool is_gentle(const LocallyGentleQuiver& g) {
  return minimal_cycles(g).ic.empty();
}

// Complement the relation set on composable pairs; vertices, arrows and
// weights stay the same. An involution on validated quivers.
inline LocallyGentleQuiver dual(const LocallyGentleQuiver& g) {
  const Quiver& q = g.quiver();
  Quiver d;
  d.vertices = q.vertices;
  d.arrows = q.arrows;
  const int na = static_cast<int>(q.arrows.size());
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b)
      if (q.arrows[a].target == q.arrows[b].source && !q.has_relation(a, b))
        d.add_relation(a, b);
  return validate(d);
}

// Critical: connected, every vertex of valency 4 (in 2, out 2), exactly one
// cycle of each kind, both running through every arrow (length 2|Q0|).
inline bool is_critical(const LocallyGentleQuiver& g) {
  const Quiver& q = g.quiver();
  const int nv = g.n_vertices();
  const int na = g.n_arrows();
  for (int v = 0; v < nv; ++v)
    if (q.arrows_out_of(v).size() != 2 || q.arrows_into(v).size() != 2) return false;

  // connectivity of the underlying undirected graph
  std::vector<bool> reach(static_cast<size_t>(nv), false);
  std::vector<int> stack{0};
  reach[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& a : q.arrows) {
      if (a.source == v && !reach[static_cast<size_t>(a.target)]) {
        reach[static_cast<size_t>(a.target)] = true;
        stack.push_back(a.target);
      }
      if (a.target == v && !reach[static_cast<size_t>(a.source)]) {
        reach[static_cast<size_t>(a.source)] = true;
        stack.push_back(a.source);
      }
    }
  }
  if (!std::all_of(reach.begin(), reach.end(), [](bool b) { return b; })) return false;

  CyclePartition parts = minimal_cycles(g);
  return parts.zc.size() == 1 && parts.ic.size() == 1 && parts.zc[0].length() == 2 * nv &&
         parts.ic[0].length() == 2 * nv && na == 2 * nv;
}

}  // namespace lgq

#endif
