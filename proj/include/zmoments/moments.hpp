#pragma once

#include <map>
#include <string>
#include <vector>

#include "zmoments/bigreal.hpp"
#include "zmoments/frobenius_schur.hpp"
#include "zmoments/partition.hpp"
#include "zmoments/symseries.hpp"
#include "zmoments/zeta.hpp"

namespace zmoments {

// f_{kappa,lambda}: coefficients of log sum_{|kappa|=|lambda|} p_kappa(X) p_lambda(Y) / (z_kappa z_lambda).
// Keys cover every pair with |kappa| = |lambda| in 1..N_max, zeros included.
using FTable = std::map<PairKey, Rational>;
const FTable& f_table(int N_max);  // memoized, thread-safe
FTable compute_f_table(int N_max);

// V^r_{mu,nu}(k) = multinomial(|mu|+|nu|; mu u nu)
//   * sum_{kappa,lambda |- r} f m_mu(kappa) m_nu(lambda) k^{l(kappa)+l(lambda)-l(mu)-l(nu)}
RatPoly V_poly(int r, const Partition& mu, const Partition& nu, const FTable& f);
RatPoly V_poly(int r, const Partition& mu, const Partition& nu);

// Same numbers from the local Euler factor: V^r_{mu,nu} = n! [Q^r a_mu b_nu] log F(Q)
// with F(Q) = sum_u h_u(Q^A) h_u(Q^{-B}) Q^u expanded in a_t = p_t(A), b_t = p_t(-B).
// Entry r-1 of the result holds V^r for every pair of total weight <= N.
std::vector<std::map<PairKey, Rational>> V_series_exact(int k, int N, int R);

// Sources for the expensive constants; the CLI swaps in a disk cache.
class ConstantsProvider {
 public:
  virtual ~ConstantsProvider() = default;
  virtual PrimeZetaTaylor prime_zeta(int r, int n_max, int digits, long cutoff) const;
  virtual FTable ftable(int N_max) const;
};

struct MomentOptions {
  int digits = 50;
  double tol = 0;          // 0: 10^-(digits+5)
  long prime_cutoff = 500;  // primes up to here enter through exact local factors; 0 = plain r-series
  int exact_v_weight = 6;  // V^r from f_table for r up to this weight
  int max_r = 400;
  const ConstantsProvider* provider = nullptr;

  double effective_tol() const;
  int working_digits(int k) const;
};

// All W_{mu,nu} with |mu| + |nu| <= N at integer k.
struct ExponentTable {
  int k = 0;
  int N = 0;
  int r_max_used = 0;
  std::map<PairKey, Estimate> W;
};
ExponentTable exponent_table(int k, int N, const MomentOptions& opts = {});
Estimate W_coeff(const Partition& mu, const Partition& nu, int k, const MomentOptions& opts = {});

// d_{kappa,lambda}: Schur (x) Schur coefficients of exp(sum W p_mu(A) p_nu(-B)).
struct DTable {
  int k = 0;
  int N = 0;
  int r_max_used = 0;
  std::map<PairKey, Estimate> d;
  Estimate at(const Partition& kappa, const Partition& lambda) const;
};
DTable d_table(int k, int N, const MomentOptions& opts = {});
DTable d_from_exponent(const ExponentTable& W);

// a_k = prod_p (1 - 1/p)^{k^2} sum_u C(u+k-1, k-1)^2 p^{-u}
Estimate a_factor(int k, int digits, long cutoff = 10000);

struct Coefficient {
  int N = 0;
  Estimate value{BigReal(Prec{64}), BigReal(Prec{64})};
  std::string note;
};
Coefficient c_coeff_from(const DTable& d, int N, int digits);
Coefficient c_coeff(int N, int k, const MomentOptions& opts = {});

struct MomentPolynomial {
  int k = 0;
  int digits = 0;
  double tol = 0;
  int r_max_used = 0;
  std::vector<Coefficient> c;  // c_0 .. c_{k^2}
};
MomentPolynomial moment_polynomial(int k, const MomentOptions& opts = {});

}  // namespace zmoments
