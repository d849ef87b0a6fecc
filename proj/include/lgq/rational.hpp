#ifndef LGQ_RATIONAL_HPP
#define LGQ_RATIONAL_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lgq/errors.hpp"
#include "lgq/polynomial.hpp"

namespace lgq {

// One denominator factor 1 - sign*m for a nonconstant monomial m.
// Every denominator the theory produces has this shape (1 - w(C) for a
// cycle C, possibly negated by a duality substitution), so no general
// multivariate gcd machinery is needed.
struct CycleFactor {
  Monomial m;
  int sign = 1;

  Polynomial to_poly() const {
    Polynomial p = Polynomial::one();
    p.add_term(m, Int(-sign));
    return p;
  }

  bool operator==(const CycleFactor& o) const { return sign == o.sign && m == o.m; }
  bool operator<(const CycleFactor& o) const {
    int c = Monomial::cmp_grlex(m, o.m);
    if (c != 0) return c < 0;
    return sign < o.sign;
  }
};

// numerator / prod of cycle factors, reduced opportunistically by exact
// division. Zero is numerator 0 with an empty denominator.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Polynomial num) : num_(std::move(num)) {}  // NOLINT
  RationalFunction(Int c) : num_(std::move(c)) {}              // NOLINT
  RationalFunction(int c) : num_(Int(c)) {}                    // NOLINT
  RationalFunction(Polynomial num, std::vector<CycleFactor> den)
      : num_(std::move(num)), den_(std::move(den)) {
    std::sort(den_.begin(), den_.end());
    normalize();
  }

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction(Polynomial::one()); }

  bool is_zero() const { return num_.is_zero(); }
  const Polynomial& numerator() const { return num_; }
  const std::vector<CycleFactor>& denominator() const { return den_; }

  Polynomial denominator_poly() const {
    Polynomial d = Polynomial::one();
    for (const auto& f : den_) d *= f.to_poly();
    return d;
  }

  RationalFunction operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // least common multiset of the two denominators
    std::vector<CycleFactor> lcm = multiset_union_max(den_, o.den_);
    Polynomial a = num_ * product(multiset_diff(lcm, den_));
    Polynomial b = o.num_ * product(multiset_diff(lcm, o.den_));
    return RationalFunction(a + b, std::move(lcm));
  }

  RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  RationalFunction operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<CycleFactor> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return RationalFunction(num_ * o.num_, std::move(den));
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  // Exact equality as rational functions, decided by cross-multiplication;
  // no assumption that either side is reduced.
  bool equals(const RationalFunction& o) const {
    return num_ * o.denominator_poly() == o.num_ * denominator_poly();
  }

  // Substitute var -> +/- monomial in numerator and denominator factors.
  // Indeterminates absent from the map stay fixed. Throws if a denominator
  // factor would lose its 1 - (+/-)monomial shape (constant image).
  RationalFunction substitute(const std::map<Var, SignedMonomial>& images) const {
    std::map<Var, Polynomial> poly_images;
    for (const auto& [v, sm] : images)
      poly_images.emplace(v, Polynomial(sm.m, Int(sm.sign)));
    Polynomial new_num = num_.substitute(poly_images);
    std::vector<CycleFactor> new_den;
    new_den.reserve(den_.size());
    for (const auto& f : den_) {
      CycleFactor g{Monomial::one(), f.sign};
      for (const auto& [v, e] : f.m.factors()) {
        auto it = images.find(v);
        if (it == images.end()) {
          g.m *= Monomial::variable(v, e);
        } else {
          g.m *= it->second.m.pow(e);
          if (e % 2 != 0) g.sign *= it->second.sign;
        }
      }
      if (g.m.is_one())
        throw Error("substitution makes a denominator factor constant");
      new_den.push_back(g);
    }
    return RationalFunction(std::move(new_num), std::move(new_den));
  }

  std::string to_string(const VarTable& vars) const {
    std::string num = num_.to_string(vars);
    if (den_.empty()) return num;
    if (num_.term_count() > 1) num = "(" + num + ")";
    std::string den;
    for (const auto& f : den_) {
      if (!den.empty()) den += "*";
      den += "(1 ";
      den += f.sign > 0 ? "- " : "+ ";
      den += f.m.to_string(vars);
      den += ")";
    }
    return num + " / " + den;
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    // cancel factors that divide the numerator exactly
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < den_.size(); ++i) {
        Polynomial q;
        if (num_.try_divide_exact(den_[i].to_poly(), &q)) {
          num_ = std::move(q);
          den_.erase(den_.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
      }
    }
  }

  static Polynomial product(const std::vector<CycleFactor>& fs) {
    Polynomial p = Polynomial::one();
    for (const auto& f : fs) p *= f.to_poly();
    return p;
  }

  // union with per-element max multiplicity (inputs sorted)
  static std::vector<CycleFactor> multiset_union_max(const std::vector<CycleFactor>& a,
                                                     const std::vector<CycleFactor>& b) {
    std::vector<CycleFactor> out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i] < b[j])) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j] < a[i]) {
        out.push_back(b[j++]);
      } else {
        out.push_back(a[i]);
        ++i, ++j;
      }
    }
    return out;
  }

  // a \ b as multisets (inputs sorted)
  static std::vector<CycleFactor> multiset_diff(const std::vector<CycleFactor>& a,
                                                const std::vector<CycleFactor>& b) {
    std::vector<CycleFactor> out;
    size_t j = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      if (j < b.size() && !(a[i] < b[j]) && !(b[j] < a[i]))
        ++j;
      else
        out.push_back(a[i]);
    }
    return out;
  }

  Polynomial num_;
  std::vector<CycleFactor> den_;  // sorted multiset
};

}  // namespace lgq

#endif
