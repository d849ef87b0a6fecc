#ifndef LGQ_CONFIGURATIONS_HPP
#define LGQ_CONFIGURATIONS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lgq/bigint.hpp"
#include "lgq/cycles.hpp"
#include "lgq/polynomial.hpp"
#include "lgq/quiver.hpp"

namespace lgq {

// Secant configuration on a labelled oriented 2n-polygon: a fixed-point-free
// involution on the points (0-based internally), avoiding adjacent pairs
// modulo 2n. The secant walk is: polygon step, then slide along the secant;
// i.e. the point map is mu . gamma (gamma first).
struct SecantConfiguration {
  int n = 0;
  std::vector<int> pairing;  // pairing[i] = sigma(i), size 2n

  bool is_involution_without_fixed_points() const {
    const int m = 2 * n;
    if (static_cast<int>(pairing.size()) != m) return false;
    for (int i = 0; i < m; ++i) {
      int j = pairing[static_cast<size_t>(i)];
      if (j < 0 || j >= m || j == i || pairing[static_cast<size_t>(j)] != i) return false;
    }
    return true;
  }

  bool avoids_adjacent_pairs() const {
    const int m = 2 * n;
    for (int i = 0; i < m; ++i) {
      int j = pairing[static_cast<size_t>(i)];
      if (j == (i + 1) % m || j == (i + m - 1) % m) return false;
    }
    return true;
  }

  std::string to_string() const {  // 1-based pairs, e.g. (1 3)(2 4)
    std::string out;
    for (int i = 0; i < 2 * n; ++i) {
      int j = pairing[static_cast<size_t>(i)];
      if (j > i)
        out += "(" + std::to_string(i + 1) + " " + std::to_string(j + 1) + ")";
    }
    return out;
  }
};

// All fixed-point-free involutions on 2n points, in deterministic order
// (smallest unmatched point pairs with each larger point in turn).
inline std::vector<std::vector<int>> fixed_point_free_involutions(int n) {
  const int m = 2 * n;
  std::vector<std::vector<int>> out;
  std::vector<int> pairing(static_cast<size_t>(m), -1);
  auto rec = [&](auto&& self) -> void {
    int i = 0;
    while (i < m && pairing[static_cast<size_t>(i)] != -1) ++i;
    if (i == m) {
      out.push_back(pairing);
      return;
    }
    for (int j = i + 1; j < m; ++j) {
      if (pairing[static_cast<size_t>(j)] != -1) continue;
      pairing[static_cast<size_t>(i)] = j;
      pairing[static_cast<size_t>(j)] = i;
      self(self);
      pairing[static_cast<size_t>(i)] = -1;
      pairing[static_cast<size_t>(j)] = -1;
    }
  };
  if (n >= 1) rec(rec);
  return out;
}

// P'_n: the adjacent-pair-free subset, with a (2n-1)!! self-check on P_n.
inline std::vector<SecantConfiguration> enumerate_Pn_prime(int n) {
  if (n < 1) throw PreconditionError("enumerate_Pn_prime: need n >= 1");
  std::vector<std::vector<int>> all = fixed_point_free_involutions(n);
  if (Int(all.size()) != odd_double_factorial(n))
    throw Error("involution enumeration does not match (2n-1)!! (internal bug)");
  std::vector<SecantConfiguration> out;
  for (auto& p : all) {
    SecantConfiguration c{n, std::move(p)};
    if (c.avoids_adjacent_pairs()) out.push_back(std::move(c));
  }
  return out;
}

// number of cycles of the point map i -> mu(gamma(i))
inline int secant_walk_cycles(const std::vector<int>& mu) {
  const int m = static_cast<int>(mu.size());
  std::vector<bool> seen(static_cast<size_t>(m), false);
  int cycles = 0;
  for (int s = 0; s < m; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    ++cycles;
    int i = s;
    while (!seen[static_cast<size_t>(i)]) {
      seen[static_cast<size_t>(i)] = true;
      i = mu[static_cast<size_t>((i + 1) % m)];
    }
  }
  return cycles;
}

// closed iff the secant walk traverses all points in one cycle
inline bool is_closed(const SecantConfiguration& c) {
  return secant_walk_cycles(c.pairing) == 1;
}

inline Int count_closed(int n) {
  Int count = 0;
  for (const auto& c : enumerate_Pn_prime(n))
    if (is_closed(c)) ++count;
  return count;
}

// Harer-Zagier consequence: a_{n,1} = (2n-1)!!/(n+1) for even n, 0 for odd.
inline Int hz_a_n1(int n) {
  if (n % 2 != 0) return 0;
  Int num = odd_double_factorial(n);
  if (num % (n + 1) != 0) throw Error("(2n-1)!! not divisible by n+1 (internal bug)");
  return num / (n + 1);
}

// Full Harer-Zagier polynomial identity, brute-forced over P_n:
//   sum_k a_{n,k} x^k  =  (2n-1)!! sum_k 2^(k-1) C(n,k-1) C(x,k).
// Both sides are compared after clearing by (n+1)! (exact rational
// comparison with a common denominator).
inline bool hz_polynomial_check(int n, VarTable& vars) {
  if (n < 1) throw PreconditionError("hz_polynomial_check: need n >= 1");
  std::map<int, Int> counts;  // k -> a_{n,k}
  for (const auto& mu : fixed_point_free_involutions(n)) ++counts[secant_walk_cycles(mu)];

  const Var x = vars.intern("x");
  Polynomial lhs;
  for (const auto& [k, a] : counts) lhs.add_term(Monomial::variable(x, k), a);

  auto falling = [&](int k) {  // x(x-1)...(x-k+1)
    Polynomial p = Polynomial::one();
    for (int i = 0; i < k; ++i) {
      Polynomial lin(Monomial::variable(x), 1);
      lin.add_term(Monomial::one(), Int(-i));
      p *= lin;
    }
    return p;
  };

  const Int clear = factorial(n + 1);
  Polynomial rhs;
  const Int dfac = odd_double_factorial(n);
  for (int k = 1; k <= n + 1; ++k) {
    Int coeff = dfac * int_pow(2, k - 1) * binomial(n, k - 1) * (clear / factorial(k));
    rhs += coeff * falling(k);
  }
  return clear * lhs == rhs;
}

// ---------------------------------------------------------------------------
// Critical quiver from a closed configuration: n vertices (sigma-orbits,
// named by their smaller polygon point), the 2n polygon arrows as the
// no-relations cycle, and relations (a_{i-1}, a_{sigma(i)}) encoding
// "step, then slide along the secant" as the full-relations thread.
// ---------------------------------------------------------------------------
struct CriticalQuiver {
  LocallyGentleQuiver quiver;
  WeightFunction weights;  // generic
  VarTable vars;
};

inline CriticalQuiver critical_quiver_from(const SecantConfiguration& c) {
  if (!c.is_involution_without_fixed_points() || !c.avoids_adjacent_pairs())
    throw PreconditionError("critical_quiver_from: not a valid secant configuration");
  if (!is_closed(c)) throw PreconditionError("NotClosed: secant walk is not a single cycle");

  const int m = 2 * c.n;
  Quiver q;
  std::vector<int> label(static_cast<size_t>(m), -1);
  std::map<int, int> vertex_of_rep;
  for (int i = 0; i < m; ++i) {
    int rep = std::min(i, c.pairing[static_cast<size_t>(i)]);
    auto it = vertex_of_rep.find(rep);
    if (it == vertex_of_rep.end())
      it = vertex_of_rep.emplace(rep, q.add_vertex(std::to_string(rep + 1))).first;
    label[static_cast<size_t>(i)] = it->second;
  }
  for (int k = 0; k < m; ++k)
    q.add_arrow("a" + std::to_string(k + 1), label[static_cast<size_t>(k)],
                label[static_cast<size_t>((k + 1) % m)]);
  for (int i = 0; i < m; ++i)
    q.add_relation((i + m - 1) % m, c.pairing[static_cast<size_t>(i)]);

  CriticalQuiver out;
  out.quiver = validate(q);
  out.weights = generic_weights(out.quiver.quiver(), out.vars);
  return out;
}

// Orbit count of the closed configurations under the dihedral group of
// order 4n (rotations and reflections of the polygon labels), by
// canonical-form deduplication.
inline int count_closed_up_to_dihedral(int n) {
  const int m = 2 * n;
  std::set<std::vector<int>> canonical;
  for (const auto& c : enumerate_Pn_prime(n)) {
    if (!is_closed(c)) continue;
    std::vector<int> best;
    for (int refl = 0; refl < 2; ++refl)
      for (int rot = 0; rot < m; ++rot) {
        // g(i) = rot + i or rot - i mod m; transformed pairing g . sigma . g^-1
        std::vector<int> t(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
          int gi = refl ? (rot - i % m + 2 * m) % m : (rot + i) % m;
          int gs = refl ? (rot - c.pairing[static_cast<size_t>(i)] + 2 * m) % m
                        : (rot + c.pairing[static_cast<size_t>(i)]) % m;
          t[static_cast<size_t>(gi)] = gs;
        }
        if (best.empty() || t < best) best = std::move(t);
      }
    canonical.insert(best);
  }
  return static_cast<int>(canonical.size());
}

}  // namespace lgq

#endif
