#ifndef LGQ_BIGINT_HPP
#define LGQ_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace lgq {

// Exact integer coefficients everywhere; Bareiss intermediates and
// (2n-1)!! counts overflow 64 bits quickly.
using Int = boost::multiprecision::cpp_int;

// (2n-1)!! = 1*3*...*(2n-1)
inline Int odd_double_factorial(int n) {
  Int r = 1;
  for (int k = 3; k <= 2 * n - 1; k += 2) r *= k;
  return r;
}

inline Int factorial(int n) {
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);  // exact at every step
  }
  return r;
}

inline Int int_pow(Int base, int exp) {
  Int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace lgq

#endif
