#ifndef LGQ_CARTAN_HPP
#define LGQ_CARTAN_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgq/cycles.hpp"
#include "lgq/matrix.hpp"
#include "lgq/quiver.hpp"
#include "lgq/series.hpp"

namespace lgq {

// ---------------------------------------------------------------------------
// Exact weighted Cartan matrix.
//
// A nonzero path extends in at most one way (uniqueness of permitted
// successors), so the nonzero paths out of a vertex form at most two
// threads. A thread either terminates or enters a no-relations cycle C,
// after which its contributions repeat with ratio w(C); the entry is a
// polynomial prefix plus a finite window times 1/(1 - w(C)).
//
// Weights carry a sign per arrow so that C(-x) can be computed exactly for
// any monomial weights (negating indeterminates only matches per-arrow
// negation when every arrow weight has odd degree).
// ---------------------------------------------------------------------------

namespace detail {

struct SignedWeights {
  const WeightFunction* w;
  int global_sign;  // applied to every arrow weight

  SignedMonomial of(int arrow) const { return SignedMonomial{global_sign, w->of(arrow)}; }
};

inline Matrix<RationalFunction> cartan_signed(const LocallyGentleQuiver& g,
                                              const SignedWeights& sw) {
  const Quiver& q = g.quiver();
  const int nv = g.n_vertices();
  const int na = g.n_arrows();
  Matrix<RationalFunction> C(static_cast<size_t>(nv), static_cast<size_t>(nv));
  for (int i = 0; i < nv; ++i) C.at(static_cast<size_t>(i), static_cast<size_t>(i)) = 1;

  for (int start = 0; start < na; ++start) {
    const int i = q.arrows[static_cast<size_t>(start)].source;
    // walk the permitted thread from `start`; at most na steps before a
    // repeat (or termination) is certain
    std::vector<int> thread;
    std::vector<int> first_seen(static_cast<size_t>(na), -1);
    int cur = start;
    std::optional<size_t> cycle_start;
    while (true) {
      if (first_seen[static_cast<size_t>(cur)] >= 0) {
        cycle_start = static_cast<size_t>(first_seen[static_cast<size_t>(cur)]);
        break;
      }
      first_seen[static_cast<size_t>(cur)] = static_cast<int>(thread.size());
      thread.push_back(cur);
      auto next = g.permitted_successor(cur);
      if (!next) break;
      cur = *next;
    }

    // cumulative weights of the thread prefixes
    std::vector<SignedMonomial> prefix(thread.size());
    {
      SignedMonomial acc{1, Monomial::one()};
      for (size_t k = 0; k < thread.size(); ++k) {
        SignedMonomial aw = sw.of(thread[k]);
        acc.sign *= aw.sign;
        acc.m *= aw.m;
        prefix[k] = acc;
      }
    }

    std::map<int, Polynomial> finite_part, window_part;
    const size_t split = cycle_start.value_or(thread.size());
    for (size_t k = 0; k < thread.size(); ++k) {
      int target = q.arrows[static_cast<size_t>(thread[k])].target;
      auto& bucket = k < split ? finite_part[target] : window_part[target];
      bucket.add_term(prefix[k].m, Int(prefix[k].sign));
    }

    for (const auto& [v, p] : finite_part)
      C.at(static_cast<size_t>(i), static_cast<size_t>(v)) += RationalFunction(p);
    if (cycle_start) {
      SignedMonomial ratio{1, Monomial::one()};
      for (size_t k = *cycle_start; k < thread.size(); ++k) {
        SignedMonomial aw = sw.of(thread[k]);
        ratio.sign *= aw.sign;
        ratio.m *= aw.m;
      }
      for (const auto& [v, p] : window_part)
        C.at(static_cast<size_t>(i), static_cast<size_t>(v)) +=
            RationalFunction(p, {CycleFactor{ratio.m, ratio.sign}});
    }
  }
  return C;
}

}  // namespace detail

inline Matrix<RationalFunction> cartan_exact(const LocallyGentleQuiver& g,
                                             const WeightFunction& w) {
  return detail::cartan_signed(g, detail::SignedWeights{&w, +1});
}

// The same matrix with every arrow weight negated: C^w(-x).
inline Matrix<RationalFunction> cartan_exact_negated(const LocallyGentleQuiver& g,
                                                     const WeightFunction& w) {
  return detail::cartan_signed(g, detail::SignedWeights{&w, -1});
}

// ---------------------------------------------------------------------------
// Brute-force oracle: enumerate all nonzero paths of weighted degree <= N
// by breadth-first extension, with no periodicity shortcut and no rational
// arithmetic. Kept deliberately independent of cartan_exact.
// ---------------------------------------------------------------------------
inline Matrix<TruncatedSeries> cartan_series_oracle(const LocallyGentleQuiver& g,
                                                    const WeightFunction& w,
                                                    const DegreeWeights& wts, long long bound) {
  const Quiver& q = g.quiver();
  const int nv = g.n_vertices();
  for (int a = 0; a < g.n_arrows(); ++a)
    if (wts.weighted_degree(w.of(a)) <= 0)
      throw NonExpandableError("arrow weight with nonpositive weighted degree; path "
                               "enumeration would not terminate");

  Matrix<Polynomial> acc(static_cast<size_t>(nv), static_cast<size_t>(nv));
  for (int i = 0; i < nv; ++i)
    acc.at(static_cast<size_t>(i), static_cast<size_t>(i)).add_term(Monomial::one(), 1);

  struct PathState {
    int start;
    int last_arrow;
    Monomial weight;
  };
  std::deque<PathState> frontier;
  for (int a = 0; a < g.n_arrows(); ++a) {
    Monomial m = w.of(a);
    if (wts.weighted_degree(m) <= bound)
      frontier.push_back(PathState{q.arrows[static_cast<size_t>(a)].source, a, m});
  }
  while (!frontier.empty()) {
    PathState p = frontier.front();
    frontier.pop_front();
    acc.at(static_cast<size_t>(p.start),
           static_cast<size_t>(q.arrows[static_cast<size_t>(p.last_arrow)].target))
        .add_term(p.weight, 1);
    auto next = g.permitted_successor(p.last_arrow);
    if (!next) continue;
    Monomial extended = p.weight * w.of(*next);
    if (wts.weighted_degree(extended) <= bound)
      frontier.push_back(PathState{p.start, *next, extended});
  }

  Matrix<TruncatedSeries> out(static_cast<size_t>(nv), static_cast<size_t>(nv));
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j)
      out.at(static_cast<size_t>(i), static_cast<size_t>(j)) =
          TruncatedSeries(acc.at(static_cast<size_t>(i), static_cast<size_t>(j)), wts, bound);
  return out;
}

// ---------------------------------------------------------------------------
// Determinants: the combinatorial formula and the elimination cross-check.
// ---------------------------------------------------------------------------

// prod over ZC of (1 - (-1)^l(C) w(C))  /  prod over IC of (1 - w(C))
inline RationalFunction det_formula(const LocallyGentleQuiver& g, const WeightFunction& w) {
  CyclePartition parts = minimal_cycles(g);
  Polynomial num = Polynomial::one();
  for (const auto& c : parts.zc) {
    Polynomial factor = Polynomial::one();
    factor.add_term(c.weight(w), c.length() % 2 == 0 ? Int(-1) : Int(1));
    num *= factor;
  }
  std::vector<CycleFactor> den;
  den.reserve(parts.ic.size());
  for (const auto& c : parts.ic) den.push_back(CycleFactor{c.weight(w), +1});
  return RationalFunction(std::move(num), std::move(den));
}

inline RationalFunction det_elimination(const LocallyGentleQuiver& g, const WeightFunction& w) {
  return determinant(cartan_exact(g, w));
}

// ---------------------------------------------------------------------------
// Duality: C_Q^w(x) * C_{Q#}^w(-x) must be the identity matrix.
// ---------------------------------------------------------------------------
inline bool verify_duality(const LocallyGentleQuiver& g, const WeightFunction& w) {
  Matrix<RationalFunction> a = cartan_exact(g, w);
  Matrix<RationalFunction> b = cartan_exact_negated(dual(g), w);
  Matrix<RationalFunction> prod = a * b;
  const size_t n = prod.rows();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      RationalFunction expect = i == j ? RationalFunction::one() : RationalFunction::zero();
      if (!prod.at(i, j).equals(expect)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Reduction step: remove a full-relations cycle C through a once-visited
// vertex v1, merging the outgoing cycle arrow p1 with the non-cycle
// incoming arrow q1 into one arrow of weight w(q1)w(p1). Each lost cycle
// contributes an extracted determinant factor 1 - (-1)^l(C) w(C).
// ---------------------------------------------------------------------------

struct ReductionOutcome {
  LocallyGentleQuiver quiver;
  WeightFunction weights;
  std::vector<Polynomial> extracted_factors;
};

inline ReductionOutcome reduce_step(const LocallyGentleQuiver& g, const WeightFunction& w,
                                    const MinimalCycle& cycle, int v1) {
  const Quiver& q = g.quiver();
  if (cycle.kind != CycleKind::FullRelations)
    throw PreconditionError("reduce_step: cycle must have full relations");
  if (v1 < 0 || v1 >= g.n_vertices()) throw PreconditionError("reduce_step: unknown vertex");

  // v1 must be visited exactly once by C: exactly one cycle arrow leaves it
  std::vector<int> leaving;
  for (int a : cycle.arrows)
    if (q.arrows[static_cast<size_t>(a)].source == v1) leaving.push_back(a);
  if (leaving.size() != 1)
    throw PreconditionError("reduce_step: vertex '" + q.vertices[static_cast<size_t>(v1)] +
                            "' is not visited exactly once by the cycle");
  const int p1 = leaving[0];

  // incoming arrow at v1 that is not on C, if any
  std::optional<int> q1;
  for (int a : q.arrows_into(v1))
    if (!cycle.contains(a)) q1 = a;

  auto cycle_factor = [&w](const MinimalCycle& c) {
    Polynomial f = Polynomial::one();
    f.add_term(c.weight(w), c.length() % 2 == 0 ? Int(-1) : Int(1));
    return f;
  };

  std::vector<Polynomial> factors{cycle_factor(cycle)};

  Quiver reduced;
  reduced.vertices = q.vertices;
  WeightFunction rw;
  std::vector<int> new_index(q.arrows.size(), -1);
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    if (static_cast<int>(a) == p1 || (q1 && static_cast<int>(a) == *q1)) continue;
    new_index[a] = reduced.add_arrow(q.arrows[a].id, q.arrows[a].source, q.arrows[a].target);
    rw.arrow_weight.push_back(w.arrow_weight[a]);
  }

  if (q1) {
    // second full-relations cycle through v1, entered along q1
    for (const auto& c : minimal_cycles(g).zc)
      if (c.contains(*q1)) factors.push_back(cycle_factor(c));

    const Arrow& aq = q.arrows[static_cast<size_t>(*q1)];
    const Arrow& ap = q.arrows[static_cast<size_t>(p1)];
    int merged = reduced.add_arrow(aq.id + "*" + ap.id, aq.source, ap.target);
    rw.arrow_weight.push_back(w.of(*q1) * w.of(p1));

    for (const auto& [a, b] : q.relations) {
      if (a == p1 || b == p1 || a == *q1 || b == *q1) continue;
      reduced.add_relation(new_index[static_cast<size_t>(a)], new_index[static_cast<size_t>(b)]);
    }
    // transfer: r -> merged inherits r -> q1, merged -> s inherits p1 -> s;
    // a surviving (p1, q1) relation becomes (merged, merged)
    for (const auto& [a, b] : q.relations) {
      if (b == *q1 && a != p1 && a != *q1)
        reduced.add_relation(new_index[static_cast<size_t>(a)], merged);
      if (a == p1 && b != *q1 && b != p1)
        reduced.add_relation(merged, new_index[static_cast<size_t>(b)]);
      if (a == p1 && b == *q1) reduced.add_relation(merged, merged);
    }
  } else {
    // Remark: with no extra incoming arrow, just remove p1
    for (const auto& [a, b] : q.relations) {
      if (a == p1 || b == p1) continue;
      reduced.add_relation(new_index[static_cast<size_t>(a)], new_index[static_cast<size_t>(b)]);
    }
  }

  ReductionOutcome out{validate(reduced), std::move(rw), std::move(factors)};
  return out;
}

// ---------------------------------------------------------------------------
// Diagonalization consequences (gentle case): the determinant equals the
// full-relations cycle product, and at all weights 1 the integer Cartan
// matrix is unimodularly equivalent to diag(1 - (-1)^l(C)) padded with 1s.
// ---------------------------------------------------------------------------
inline bool verify_diagonalization(const LocallyGentleQuiver& g, const WeightFunction& w) {
  CyclePartition parts = minimal_cycles(g);
  if (!parts.ic.empty()) throw PreconditionError("NotGentle: quiver has a no-relations cycle");

  Polynomial expected = Polynomial::one();
  for (const auto& c : parts.zc) {
    Polynomial f = Polynomial::one();
    f.add_term(c.weight(w), c.length() % 2 == 0 ? Int(-1) : Int(1));
    expected *= f;
  }
  if (!det_elimination(g, w).equals(RationalFunction(expected))) return false;

  const size_t n = static_cast<size_t>(g.n_vertices());
  Matrix<RationalFunction> cartan = cartan_exact(g, w);
  Matrix<Int> at_one(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!cartan.at(i, j).denominator().empty())
        throw Error("gentle Cartan entry with a denominator (arithmetic bug)");
      at_one.at(i, j) = cartan.at(i, j).numerator().evaluate_all_ones();
    }

  if (parts.zc.size() > n) return false;  // cannot happen for gentle quivers
  Matrix<Int> diag(n, n);
  for (size_t i = 0; i < n; ++i) diag.at(i, i) = 1;
  for (size_t k = 0; k < parts.zc.size(); ++k)
    diag.at(k, k) = parts.zc[k].length() % 2 == 0 ? 0 : 2;

  return smith_normal_form(std::move(at_one)) == smith_normal_form(std::move(diag));
}

// ---------------------------------------------------------------------------
// Specializations: the q-Cartan determinant (all arrows weighted q) and its
// value at q = 1 for gentle quivers (0 with an even cycle, else 2^oc).
// ---------------------------------------------------------------------------
struct CorollaryReport {
  RationalFunction q_determinant;        // det of the q-Cartan matrix
  std::optional<Int> unweighted;         // gentle only
  int even_cycles = 0;
  int odd_cycles = 0;
  bool consistent = true;                // unweighted vs q_determinant at q = 1
};

inline CorollaryReport specialize_corollaries(const LocallyGentleQuiver& g, VarTable& vars) {
  CorollaryReport r;
  WeightFunction wq = uniform_weights(g.quiver(), vars.intern("q"));
  r.q_determinant = det_formula(g, wq);

  CyclePartition parts = minimal_cycles(g);
  for (const auto& c : parts.zc)
    (c.length() % 2 == 0 ? r.even_cycles : r.odd_cycles) += 1;

  if (parts.ic.empty()) {
    r.unweighted = r.even_cycles > 0 ? Int(0) : int_pow(2, r.odd_cycles);
    // gentle: the determinant is a polynomial, evaluable at q = 1
    Int at_one = r.q_determinant.numerator().evaluate_all_ones();
    for (const auto& f : r.q_determinant.denominator()) {
      // a remaining denominator would mean a non-polynomial determinant
      (void)f;
      throw Error("gentle determinant with a denominator (arithmetic bug)");
    }
    r.consistent = at_one == *r.unweighted;
  }
  return r;
}

}  // namespace lgq

#endif
