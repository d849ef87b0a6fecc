#ifndef LGQ_SERIES_HPP
#define LGQ_SERIES_HPP

#include <string>
#include <utility>

#include "lgq/rational.hpp"

namespace lgq {

// Polynomial truncated at weighted total degree N; arithmetic stays under
// the bound. Used as the brute-force side of oracle comparisons.
class TruncatedSeries {
 public:
  TruncatedSeries() : bound_(0) {}
  TruncatedSeries(Polynomial p, DegreeWeights weights, long long bound)
      : wts_(std::move(weights)), bound_(bound) {
    poly_ = truncate(p, wts_, bound_);
  }

  const Polynomial& poly() const { return poly_; }
  long long bound() const { return bound_; }
  const DegreeWeights& weights() const { return wts_; }

  static Polynomial truncate(const Polynomial& p, const DegreeWeights& wts, long long bound) {
    Polynomial r;
    for (const auto& [m, c] : p.terms())
      if (wts.weighted_degree(m) <= bound) r.add_term(m, c);
    return r;
  }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    return TruncatedSeries(poly_ + o.poly_, wts_, std::min(bound_, o.bound_));
  }
  TruncatedSeries operator-(const TruncatedSeries& o) const {
    return TruncatedSeries(poly_ - o.poly_, wts_, std::min(bound_, o.bound_));
  }
  TruncatedSeries operator*(const TruncatedSeries& o) const {
    return TruncatedSeries(poly_ * o.poly_, wts_, std::min(bound_, o.bound_));
  }

  bool operator==(const TruncatedSeries& o) const { return poly_ == o.poly_; }
  bool operator!=(const TruncatedSeries& o) const { return poly_ != o.poly_; }

  std::string to_string(const VarTable& vars) const { return poly_.to_string(vars); }

 private:
  Polynomial poly_;
  DegreeWeights wts_;
  long long bound_;
};

// Geometric expansion of every denominator factor, exact up to weighted
// degree N. Requires each denominator monomial to have positive weighted
// degree; otherwise the series does not converge degreewise.
inline TruncatedSeries series_expand(const RationalFunction& r, const DegreeWeights& wts,
                                     long long bound) {
  Polynomial acc = TruncatedSeries::truncate(r.numerator(), wts, bound);
  for (const auto& f : r.denominator()) {
    long long d = wts.weighted_degree(f.m);
    if (d <= 0)
      throw NonExpandableError("denominator factor has weighted degree 0 and cannot be expanded");
    // acc *= 1 + s*m + (s*m)^2 + ...
    Polynomial geo;
    int sign = 1;
    Monomial power = Monomial::one();
    for (long long k = 0; k * d <= bound; ++k) {
      geo.add_term(power, Int(sign));
      power *= f.m;
      sign *= f.sign;
    }
    acc = TruncatedSeries::truncate(acc * geo, wts, bound);
  }
  return TruncatedSeries(acc, wts, bound);
}

}  // namespace lgq

#endif
