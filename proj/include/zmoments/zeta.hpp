#pragma once

#include <vector>

#include "zmoments/bigreal.hpp"
#include "zmoments/rational.hpp"

namespace zmoments {

// Thrown when an iterative evaluation does not reach its tolerance.
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact Bernoulli numbers with B_1 = -1/2. Memoized.
Rational bernoulli(int n);

std::vector<long> primes_up_to(long n);
std::vector<int> mobius_up_to(int n);  // index 0 unused

// Formal power series helpers on coefficient vectors.
std::vector<BigReal> series_mul(const std::vector<BigReal>& a, const std::vector<BigReal>& b);
std::vector<BigReal> series_log(const std::vector<BigReal>& a);  // a[0] > 0

// Taylor coefficients a_0..a_order of zeta(x0 + s) by Euler-Maclaurin with
// s kept formal. At x0 = 1 the pole is removed: coefficients of zeta(1+s) - 1/s.
std::vector<BigReal> zeta_taylor(const BigReal& x0, int order, int digits);

// zeta^{(n)}(x), x > 1.
BigReal zeta_derivative(int n, const BigReal& x, int digits);

// zeta(1+s) = 1/s + sum (-1)^n gamma_n s^n / n!
BigReal stieltjes_gamma(int n, int digits);
// log(s zeta(1+s)) = -sum_{n>=1} (-1)^n g_n s^n / n!
BigReal stieltjes_cumulant(int n, int digits);

// Taylor coefficients in s of sum_{p > cutoff} p^{-(r+s)}, r >= 2, via the
// Mobius identity sum_m mu(m)/m log zeta_{>cutoff}(m(r+s)). For r = 1 (cutoff
// must be 0) the divergent part is regularized:
//   c_n = [s^n] ( log(s zeta(1+s)) + sum_{m>=2} mu(m)/m log zeta(m(1+s)) ).
struct PrimeZetaTaylor {
  int r = 0;
  long cutoff = 0;
  int digits = 0;
  std::vector<BigReal> values;       // c_0 .. c_{n_max}
  std::vector<BigReal> tail_bounds;  // Mobius-series truncation, per coefficient
};
PrimeZetaTaylor prime_zeta_taylor(int r, int n_max, int digits, long cutoff = 0);

// Finite part: sum_{p <= cutoff} p^{-r} (-log p)^n / n!, n = 0..n_max.
std::vector<BigReal> prime_sum_taylor(int r, int n_max, int digits, long cutoff);

}  // namespace zmoments
