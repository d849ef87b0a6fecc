#ifndef LGQ_VERIFY_HPP
#define LGQ_VERIFY_HPP

#include <string>
#include <vector>

#include "lgq/cartan.hpp"

namespace lgq {

// One-quiver verification bundle behind the `verify` CLI subcommand:
// duality, determinant formula vs elimination, series oracle vs exact.
struct VerifyReport {
  bool duality = false;
  bool determinant = false;
  bool oracle = false;

  bool all() const { return duality && determinant && oracle; }
};

inline VerifyReport verify_quiver(const LocallyGentleQuiver& g, const WeightFunction& w,
                                  long long max_degree = 12) {
  VerifyReport r;
  r.duality = verify_duality(g, w);
  r.determinant = det_formula(g, w).equals(det_elimination(g, w));

  DegreeWeights length_weights;  // weight 1 per indeterminate: path-length degree
  Matrix<TruncatedSeries> oracle = cartan_series_oracle(g, w, length_weights, max_degree);
  Matrix<RationalFunction> exact = cartan_exact(g, w);
  r.oracle = true;
  for (size_t i = 0; i < exact.rows() && r.oracle; ++i)
    for (size_t j = 0; j < exact.cols() && r.oracle; ++j)
      if (series_expand(exact.at(i, j), length_weights, max_degree) != oracle.at(i, j))
        r.oracle = false;
  return r;
}

}  // namespace lgq

#endif
