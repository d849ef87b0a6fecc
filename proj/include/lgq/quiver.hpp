#ifndef LGQ_QUIVER_HPP
#define LGQ_QUIVER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lgq/errors.hpp"
#include "lgq/monomial.hpp"

namespace lgq {

struct Arrow {
  std::string id;
  int source = 0;  // vertex index
  int target = 0;

  bool operator==(const Arrow& o) const {
    return id == o.id && source == o.source && target == o.target;
  }
};

// Raw quiver with length-2 zero relations, stored extensionally as ordered
// arrow pairs (a, b) meaning ab lies in the ideal. Loops and parallel
// arrows are allowed.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::pair<int, int>> relations;  // arrow-index pairs, sorted unique

  int add_vertex(const std::string& name) {
    vertices.push_back(name);
    return static_cast<int>(vertices.size()) - 1;
  }

  int add_arrow(const std::string& id, int source, int target) {
    arrows.push_back(Arrow{id, source, target});
    return static_cast<int>(arrows.size()) - 1;
  }

  void add_relation(int a, int b) { relations.emplace_back(a, b); }

  std::optional<int> vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  std::optional<int> arrow_index(const std::string& id) const {
    for (size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].id == id) return static_cast<int>(i);
    return std::nullopt;
  }

  bool has_relation(int a, int b) const {
    return std::find(relations.begin(), relations.end(), std::make_pair(a, b)) !=
           relations.end();
  }

  std::vector<int> arrows_out_of(int v) const {
    std::vector<int> r;
    for (size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].source == v) r.push_back(static_cast<int>(i));
    return r;
  }

  std::vector<int> arrows_into(int v) const {
    std::vector<int> r;
    for (size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].target == v) r.push_back(static_cast<int>(i));
    return r;
  }

  bool operator==(const Quiver& o) const {
    return vertices == o.vertices && arrows == o.arrows && relations == o.relations;
  }
};

// A quiver certified against (G2)-(G5), with the successor/predecessor
// tables the axioms make unique. Immutable once built by validate().
class LocallyGentleQuiver {
 public:
  const Quiver& quiver() const { return q_; }
  int n_vertices() const { return static_cast<int>(q_.vertices.size()); }
  int n_arrows() const { return static_cast<int>(q_.arrows.size()); }

  // the unique b with ab not in I, if any
  std::optional<int> permitted_successor(int a) const { return perm_succ_[a]; }
  // the unique b with ab in I, if any
  std::optional<int> forbidden_successor(int a) const { return forb_succ_[a]; }
  std::optional<int> permitted_predecessor(int a) const { return perm_pred_[a]; }
  std::optional<int> forbidden_predecessor(int a) const { return forb_pred_[a]; }

  friend LocallyGentleQuiver validate(const Quiver& q);

 private:
  Quiver q_;
  std::vector<std::optional<int>> perm_succ_, forb_succ_, perm_pred_, forb_pred_;
};

// Check (G2), (G3), (G5) and structural well-formedness, reporting every
// violation; relations are sorted and deduplicated in the certified copy.
inline LocallyGentleQuiver validate(const Quiver& q) {
  std::vector<std::string> problems;

  if (q.vertices.empty()) problems.push_back("quiver must have at least one vertex");
  {
    std::set<std::string> seen;
    for (const auto& v : q.vertices)
      if (!seen.insert(v).second) problems.push_back("duplicate vertex id '" + v + "'");
    seen.clear();
    for (const auto& a : q.arrows)
      if (!seen.insert(a.id).second) problems.push_back("duplicate arrow id '" + a.id + "'");
  }
  const int nv = static_cast<int>(q.vertices.size());
  const int na = static_cast<int>(q.arrows.size());
  for (const auto& a : q.arrows)
    if (a.source < 0 || a.source >= nv || a.target < 0 || a.target >= nv)
      problems.push_back("arrow '" + a.id + "' has an out-of-range endpoint");
  for (const auto& [a, b] : q.relations)
    if (a < 0 || a >= na || b < 0 || b >= na)
      problems.push_back("relation refers to an unknown arrow");
  if (!problems.empty()) throw ValidationError(std::move(problems));

  // MalformedRelation: pairs must compose
  for (const auto& [a, b] : q.relations)
    if (q.arrows[a].target != q.arrows[b].source)
      problems.push_back("MalformedRelation: (" + q.arrows[a].id + ", " + q.arrows[b].id +
                         ") is not composable");

  // (G2): degree bounds
  std::vector<int> outdeg(nv, 0), indeg(nv, 0);
  for (const auto& a : q.arrows) {
    ++outdeg[a.source];
    ++indeg[a.target];
  }
  for (int v = 0; v < nv; ++v) {
    if (outdeg[v] > 2)
      problems.push_back("G2 violation at vertex '" + q.vertices[v] + "': out-degree " +
                         std::to_string(outdeg[v]));
    if (indeg[v] > 2)
      problems.push_back("G2 violation at vertex '" + q.vertices[v] + "': in-degree " +
                         std::to_string(indeg[v]));
  }

  std::vector<std::pair<int, int>> rels = q.relations;
  std::sort(rels.begin(), rels.end());
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  auto in_ideal = [&](int a, int b) {
    return std::binary_search(rels.begin(), rels.end(), std::make_pair(a, b));
  };

  // (G3)/(G5): successor and predecessor uniqueness per arrow
  std::vector<std::optional<int>> perm_succ(na), forb_succ(na), perm_pred(na), forb_pred(na);
  for (int a = 0; a < na; ++a) {
    std::vector<int> perm, forb;
    for (int b = 0; b < na; ++b) {
      if (q.arrows[a].target != q.arrows[b].source) continue;
      (in_ideal(a, b) ? forb : perm).push_back(b);
    }
    if (perm.size() > 1)
      problems.push_back("G3 violation at arrow '" + q.arrows[a].id +
                         "': more than one composable successor outside the ideal");
    if (forb.size() > 1)
      problems.push_back("G5 violation at arrow '" + q.arrows[a].id +
                         "': more than one composable successor inside the ideal");
    if (perm.size() == 1) perm_succ[a] = perm[0];
    if (forb.size() == 1) forb_succ[a] = forb[0];
  }
  for (int b = 0; b < na; ++b) {
    std::vector<int> perm, forb;
    for (int a = 0; a < na; ++a) {
      if (q.arrows[a].target != q.arrows[b].source) continue;
      (in_ideal(a, b) ? forb : perm).push_back(a);
    }
    if (perm.size() > 1)
      problems.push_back("G3 violation at arrow '" + q.arrows[b].id +
                         "': more than one composable predecessor outside the ideal");
    if (forb.size() > 1)
      problems.push_back("G5 violation at arrow '" + q.arrows[b].id +
                         "': more than one composable predecessor inside the ideal");
    if (perm.size() == 1) perm_pred[b] = perm[0];
    if (forb.size() == 1) forb_pred[b] = forb[0];
  }

  if (!problems.empty()) throw ValidationError(std::move(problems));

  LocallyGentleQuiver g;
  g.q_ = q;
  g.q_.relations = std::move(rels);
  g.perm_succ_ = std::move(perm_succ);
  g.forb_succ_ = std::move(forb_succ);
  g.perm_pred_ = std::move(perm_pred);
  g.forb_pred_ = std::move(forb_pred);
  return g;
}

// Arrow weights; every arrow carries a nonconstant monomial.
struct WeightFunction {
  std::vector<Monomial> arrow_weight;  // indexed by arrow

  const Monomial& of(int arrow) const { return arrow_weight.at(static_cast<size_t>(arrow)); }

  template <typename It>
  Monomial path_weight(It first, It last) const {
    Monomial w = Monomial::one();
    for (It it = first; it != last; ++it) w *= of(*it);
    return w;
  }
};

// The generic weight function: arrow e gets its own indeterminate x_e,
// interned in arrow declaration order.
inline WeightFunction generic_weights(const Quiver& q, VarTable& vars) {
  WeightFunction w;
  w.arrow_weight.reserve(q.arrows.size());
  for (const auto& a : q.arrows)
    w.arrow_weight.push_back(Monomial::variable(vars.intern("x_" + a.id)));
  return w;
}

// Every arrow weighted by the same indeterminate (the q-Cartan weighting).
inline WeightFunction uniform_weights(const Quiver& q, Var v) {
  WeightFunction w;
  w.arrow_weight.assign(q.arrows.size(), Monomial::variable(v));
  return w;
}

}  // namespace lgq

#endif
