#pragma once

#include <vector>

#include "zmoments/partition.hpp"
#include "zmoments/rational.hpp"

namespace zmoments {

// The super alphabet (x(nu); y(nu)) of shifted Frobenius coordinates.
struct SuperPoint {
  std::vector<Rational> x, y;
};
SuperPoint super_point(const Partition& nu);

// x(complement_k(nu)) written as x(k^k) with a k-independent set of entries
// removed and added (likewise for y). `square_point` has no corrections.
struct ComplementPoint {
  std::vector<Rational> removed_x, removed_y, added_x, added_y;
};
ComplementPoint complement_point(const Partition& nu);
ComplementPoint square_point();

// p_r(x; y) = sum x^r + (-1)^{r-1} sum y^r
Rational super_power_sum(int r, const SuperPoint& pt);
// Same on the complement family, as a polynomial in k.
RatPoly super_power_sum(int r, const ComplementPoint& pt);

// sum_{i=0}^{k-1} (i + 1/2)^r as a polynomial in k.
RatPoly half_integer_power_sum(int r);

// (-1)^{p-p'} e_{p-p'}(1/2, 3/2, ..., (2p-1)/2)
Rational hook_shift_coeff(int p, int p_prime);

Rational fs_hook(int p, int q, const SuperPoint& pt);
RatPoly fs_hook(int p, int q, const ComplementPoint& pt);
// Frobenius-Schur function via Giambelli over hooks.
Rational fs(const Partition& mu, const SuperPoint& pt);
RatPoly fs(const Partition& mu, const ComplementPoint& pt);

// dim(mu, nu) = dim(nu) Fs_mu(x(nu); y(nu)) / (n (n-1) ... (n-m+1))
Integer dim_fs(const Partition& mu, const Partition& nu);

// dim(lambda, complement_k(kappa)); zero when kappa does not fit in k x k.
Integer dim_complement(const Partition& kappa, const Partition& lambda, int k);

// g_k = (k^2)! / prod_{i,j<k} (i+j+1)
Integer g_factor(int k);

// dim(lambda, complement_k(kappa)) = g_k B(k) / (k^2 (k^2-1) ... (k^2-depth+1)),
// depth = |kappa| + |lambda|, deg B <= 2 depth.
struct ComplementPoly {
  RatPoly B;
  int depth = 0;
  Rational operator()(int k) const;  // the full right-hand side at integer k
};
// B is interpolated from exact dimensions and checked against the symbolic
// product Fs_lambda(complement point) * Fs_kappa(square point).
ComplementPoly dim_complement_poly(const Partition& kappa, const Partition& lambda);
// The symbolic route alone.
RatPoly complement_poly_symbolic(const Partition& kappa, const Partition& lambda);

}  // namespace zmoments
