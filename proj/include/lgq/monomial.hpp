#ifndef LGQ_MONOMIAL_HPP
#define LGQ_MONOMIAL_HPP

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgq/errors.hpp"

namespace lgq {

// Indeterminates are small integer ids; the id order is the declaration
// order, which fixes the graded-lex term order and all printed output.
using Var = int;

class VarTable {
 public:
  Var intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    Var v = static_cast<Var>(names_.size());
    names_.push_back(name);
    index_.emplace(name, v);
    return v;
  }

  std::optional<Var> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& name(Var v) const { return names_.at(static_cast<size_t>(v)); }
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Var> index_;
};

// Sparse power product: sorted (var, exponent) pairs, exponents > 0.
class Monomial {
 public:
  Monomial() = default;

  static Monomial one() { return Monomial(); }

  static Monomial variable(Var v, int exp = 1) {
    Monomial m;
    if (exp > 0) m.exps_.emplace_back(v, exp);
    return m;
  }

  bool is_one() const { return exps_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
  }

  int exponent(Var v) const {
    for (const auto& [w, e] : exps_)
      if (w == v) return e;
    return 0;
  }

  const std::vector<std::pair<Var, int>>& factors() const { return exps_; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.exps_.reserve(exps_.size() + o.exps_.size());
    size_t i = 0, j = 0;
    while (i < exps_.size() || j < o.exps_.size()) {
      if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first)) {
        r.exps_.push_back(exps_[i++]);
      } else if (i == exps_.size() || o.exps_[j].first < exps_[i].first) {
        r.exps_.push_back(o.exps_[j++]);
      } else {
        r.exps_.emplace_back(exps_[i].first, exps_[i].second + o.exps_[j].second);
        ++i, ++j;
      }
    }
    return r;
  }

  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }

  Monomial pow(int k) const {
    assert(k >= 0);
    Monomial r;
    for (const auto& [v, e] : exps_)
      if (e * k > 0) r.exps_.emplace_back(v, e * k);
    return r;
  }

  // true iff this | other
  bool divides(const Monomial& other) const {
    size_t j = 0;
    for (const auto& [v, e] : exps_) {
      while (j < other.exps_.size() && other.exps_[j].first < v) ++j;
      if (j == other.exps_.size() || other.exps_[j].first != v || other.exps_[j].second < e)
        return false;
    }
    return true;
  }

  // other / this; caller must ensure divisibility
  Monomial quotient_of(const Monomial& other) const {
    Monomial r;
    size_t i = 0;
    for (const auto& [v, e] : other.exps_) {
      int sub = 0;
      while (i < exps_.size() && exps_[i].first < v) ++i;
      if (i < exps_.size() && exps_[i].first == v) sub = exps_[i].second;
      assert(sub <= e);
      if (e - sub > 0) r.exps_.emplace_back(v, e - sub);
    }
    return r;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

  // Graded-lex: first by total degree, ties broken lexicographically with
  // the earliest-declared indeterminate most significant.
  static int cmp_grlex(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    size_t i = 0, j = 0;
    while (i < a.exps_.size() && j < b.exps_.size()) {
      if (a.exps_[i].first != b.exps_[j].first)
        return a.exps_[i].first < b.exps_[j].first ? 1 : -1;  // present var beats absent
      if (a.exps_[i].second != b.exps_[j].second)
        return a.exps_[i].second < b.exps_[j].second ? -1 : 1;
      ++i, ++j;
    }
    if (i < a.exps_.size()) return 1;
    if (j < b.exps_.size()) return -1;
    return 0;
  }

  bool operator<(const Monomial& o) const { return cmp_grlex(*this, o) < 0; }

  std::string to_string(const VarTable& vars) const {
    if (is_one()) return "1";
    std::string out;
    for (const auto& [v, e] : exps_) {
      if (!out.empty()) out += "*";
      out += vars.name(v);
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::vector<std::pair<Var, int>> exps_;
};

// ±monomial; the image of an indeterminate under the substitutions the
// rational-function layer supports (x -> -x, x -> q^m*t, ...).
struct SignedMonomial {
  int sign = 1;  // +1 or -1
  Monomial m;
};

// Per-indeterminate degree weighting used for series truncation.
// Unmapped indeterminates weigh 1.
class DegreeWeights {
 public:
  DegreeWeights() = default;

  static DegreeWeights uniform() { return DegreeWeights(); }

  DegreeWeights& set(Var v, int w) {
    weights_[v] = w;
    return *this;
  }

  int of(Var v) const {
    auto it = weights_.find(v);
    return it == weights_.end() ? 1 : it->second;
  }

  long long weighted_degree(const Monomial& m) const {
    long long d = 0;
    for (const auto& [v, e] : m.factors()) d += static_cast<long long>(e) * of(v);
    return d;
  }

 private:
  std::map<Var, int> weights_;
};

}  // namespace lgq

#endif
