#pragma once

#include <map>
#include <utility>
#include <vector>

#include "zmoments/bigreal.hpp"
#include "zmoments/partition.hpp"
#include "zmoments/scalar.hpp"

namespace zmoments {

enum class Basis { Power, Schur };

using PairKey = std::pair<Partition, Partition>;

inline int weight(const PairKey& k) { return k.first.weight() + k.second.weight(); }

// Truncated series in two alphabets, sum c_{mu,nu} b_mu(A) b_nu(B), keeping
// only keys with |mu| + |nu| <= max_weight. In the power basis products
// concatenate parts slot by slot.
class PairSeries {
 public:
  PairSeries(Basis basis, int max_weight);

  Basis basis() const { return basis_; }
  int max_weight() const { return max_weight_; }
  const std::map<PairKey, Scalar>& coeffs() const { return c_; }
  size_t size() const { return c_.size(); }

  // Keys above the truncation weight are silently dropped; zeros are not stored.
  void add(const PairKey& key, const Scalar& value);
  void set(const PairKey& key, const Scalar& value);
  Scalar coeff(const PairKey& key) const;
  Scalar coeff(const Partition& mu, const Partition& nu) const { return coeff({mu, nu}); }

  PairSeries& operator+=(const PairSeries& o);
  PairSeries& operator*=(const Rational& s);
  friend PairSeries operator+(PairSeries a, const PairSeries& b) { return a += b; }
  friend PairSeries operator*(const PairSeries& a, const PairSeries& b);

 private:
  Basis basis_;
  int max_weight_;
  std::map<PairKey, Scalar> c_;
};

// exp and log of power-basis series; exp needs a zero constant term and log
// a constant term of exactly 1.
PairSeries series_exp(const PairSeries& a);
PairSeries series_log(const PairSeries& a);

// Character transitions applied to each slot.
PairSeries p_to_schur(const PairSeries& a);
PairSeries schur_to_p(const PairSeries& a);

// Monomial symmetric function m_mu at the parts of kappa.
Integer monomial_eval(const Partition& mu, const Partition& kappa);
// n! / prod parts!  (the parts must sum to n)
Integer multinomial(int n, const Partition& parts);

// Schur polynomial at distinct points via the bialternant.
BigReal schur_eval(const Partition& lambda, const std::vector<BigReal>& points);
// Determinant by Gaussian elimination with partial pivoting.
BigReal determinant(std::vector<std::vector<BigReal>> m);

// |lhs - rhs| of the Laplace-expansion identity
//   sum_{A u B = D, |A| = |B| = k} s_kappa(A) s_lambda(B) / Delta(A;B) = sign * s_mu(D)
// with (mu, sign) from sort_merge(kappa, lambda, k, k) (lhs 0 on a collision).
BigReal bump_gamburd_residual(const Partition& kappa, const Partition& lambda,
                              const std::vector<BigReal>& points);

}  // namespace zmoments
