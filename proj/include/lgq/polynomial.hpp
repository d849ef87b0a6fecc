#ifndef LGQ_POLYNOMIAL_HPP
#define LGQ_POLYNOMIAL_HPP

#include <map>
#include <set>
#include <string>
#include <utility>

#include "lgq/bigint.hpp"
#include "lgq/monomial.hpp"

namespace lgq {

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp_grlex(a, b) > 0;
  }
};

// Sparse multivariate polynomial over Z. Terms are kept in descending
// graded-lex order, so begin() is the leading term; no zero coefficients
// are stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Int, GrlexGreater>;

  Polynomial() = default;
  Polynomial(Int c) {  // NOLINT: implicit by design, mirrors ring embedding
    if (c != 0) terms_.emplace(Monomial::one(), std::move(c));
  }
  Polynomial(int c) : Polynomial(Int(c)) {}
  explicit Polynomial(const Monomial& m, Int c = 1) {
    if (c != 0) terms_.emplace(m, std::move(c));
  }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(Int(1)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  Int constant_value() const {
    Int c = 0;
    auto it = terms_.find(Monomial::one());
    if (it != terms_.end()) c = it->second;
    return c;
  }

  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  Int coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
  }
  Polynomial operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

  Polynomial pow(int k) const {
    Polynomial r = one();
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  std::set<Var> variables() const {
    std::set<Var> vs;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.factors()) vs.insert(v);
    return vs;
  }

  // Simultaneous substitution; indeterminates absent from the map stay fixed.
  Polynomial substitute(const std::map<Var, Polynomial>& images) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      Polynomial term{Int(c)};
      Monomial untouched;
      for (const auto& [v, e] : m.factors()) {
        auto it = images.find(v);
        if (it == images.end())
          untouched *= Monomial::variable(v, e);
        else
          term *= it->second.pow(e);
      }
      term *= Polynomial(untouched);
      r += term;
    }
    return r;
  }

  // Evaluate with every indeterminate set to 1.
  Int evaluate_all_ones() const {
    Int r = 0;
    for (const auto& [m, c] : terms_) r += c;
    return r;
  }

  // Exact division: on success *quotient = *this / divisor and true is
  // returned; a nonzero remainder reports false without touching *quotient.
  bool try_divide_exact(const Polynomial& divisor, Polynomial* quotient) const {
    if (divisor.is_zero()) return false;
    Polynomial q, r = *this;
    const Monomial& lead_m = divisor.terms_.begin()->first;
    const Int& lead_c = divisor.terms_.begin()->second;
    while (!r.is_zero()) {
      const Monomial& rm = r.terms_.begin()->first;
      const Int& rc = r.terms_.begin()->second;
      if (!lead_m.divides(rm) || rc % lead_c != 0) return false;
      Monomial qm = lead_m.quotient_of(rm);
      Int qc = rc / lead_c;
      q.add_term(qm, qc);
      r -= divisor * Polynomial(qm, qc);
    }
    if (quotient) *quotient = std::move(q);
    return true;
  }

  // Canonical rendering: descending graded-lex, '^' exponents, '*' products.
  std::string to_string(const VarTable& vars) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Int a = c < 0 ? Int(-c) : c;
      if (first) {
        if (c < 0) out += "-";
        first = false;
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (m.is_one()) {
        out += a.str();
      } else {
        if (a != 1) out += a.str() + "*";
        out += m.to_string(vars);
      }
    }
    return out;
  }

 private:
  TermMap terms_;
};

inline Polynomial operator*(const Int& c, const Polynomial& p) { return Polynomial(c) * p; }

}  // namespace lgq

#endif
