#include "zmoments/frobenius_schur.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "zmoments/characters.hpp"
#include "zmoments/zeta.hpp"

namespace zmoments {

SuperPoint super_point(const Partition& nu) {
  ShiftedFrobenius s = shifted_frobenius(nu);
  return {s.x, s.y};
}

namespace {

std::vector<Rational> minus(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> r;
  for (const auto& v : a)
    if (std::find(b.begin(), b.end(), v) == b.end()) r.push_back(v);
  return r;
}

ComplementPoint complement_point_at(const Partition& nu, int k) {
  auto comp = complement(nu, k, k);
  if (!comp) throw std::logic_error("complement_point: witness does not fit");
  ShiftedFrobenius c = shifted_frobenius(*comp);
  ShiftedFrobenius sq = shifted_frobenius(Partition(std::vector<int>(k, k)));
  return {minus(sq.x, c.x), minus(sq.y, c.y), minus(c.x, sq.x), minus(c.y, sq.y)};
}

bool same(const ComplementPoint& a, const ComplementPoint& b) {
  return a.removed_x == b.removed_x && a.removed_y == b.removed_y && a.added_x == b.added_x &&
         a.added_y == b.added_y;
}

Rational signed_power_sum(int r, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s = 0;
  for (const auto& v : x) {
    Rational t;
    mpz_pow_ui(t.get_num_mpz_t(), v.get_num_mpz_t(), r);
    mpz_pow_ui(t.get_den_mpz_t(), v.get_den_mpz_t(), r);
    s += t;
  }
  for (const auto& v : y) {
    Rational t;
    mpz_pow_ui(t.get_num_mpz_t(), v.get_num_mpz_t(), r);
    mpz_pow_ui(t.get_den_mpz_t(), v.get_den_mpz_t(), r);
    s += (r % 2 == 1) ? t : Rational(-t);
  }
  return s;
}

}  // namespace

ComplementPoint complement_point(const Partition& nu) {
  const int witness = nu.largest() + nu.length() + 1;
  ComplementPoint a = complement_point_at(nu, witness);
  if (!same(a, complement_point_at(nu, witness + 1)))
    throw std::logic_error("complement_point: corrections not stable in k");
  return a;
}

ComplementPoint square_point() { return {}; }

Rational super_power_sum(int r, const SuperPoint& pt) {
  if (r < 1) throw std::invalid_argument("super power sum needs r >= 1");
  return signed_power_sum(r, pt.x, pt.y);
}

RatPoly half_integer_power_sum(int r) {
  if (r < 0) throw std::invalid_argument("negative exponent");
  // Faulhaber: (B_{r+1}(k + 1/2) - B_{r+1}(1/2)) / (r + 1)
  const int n = r + 1;
  std::vector<Rational> b(n + 1);
  for (int j = 0; j <= n; ++j) b[n - j] = Rational(binomial(n, j)) * bernoulli(j);
  RatPoly bern(b);
  RatPoly shifted = bern.compose(RatPoly(std::vector<Rational>{Rational(1, 2), 1}));
  RatPoly out = shifted - RatPoly(bern(Rational(1, 2)));
  out *= Rational(1, n);
  return out;
}

RatPoly super_power_sum(int r, const ComplementPoint& pt) {
  if (r < 1) throw std::invalid_argument("super power sum needs r >= 1");
  // x(k^k) = y(k^k) = {1/2, ..., k - 1/2}; the y part cancels for even r.
  RatPoly base = r % 2 == 1 ? half_integer_power_sum(r) * Rational(2) : RatPoly();
  return base - RatPoly(signed_power_sum(r, pt.removed_x, pt.removed_y)) +
         RatPoly(signed_power_sum(r, pt.added_x, pt.added_y));
}

Rational hook_shift_coeff(int p, int p_prime) {
  if (p_prime > p || p_prime < 0) return 0;
  // e_j of (1/2, ..., (2p-1)/2) via the product prod (1 + t v)
  std::vector<Rational> e{1};
  for (int i = 0; i < p; ++i) {
    Rational v(2 * i + 1, 2);
    e.push_back(0);
    for (size_t j = e.size() - 1; j >= 1; --j) e[j] += v * e[j - 1];
  }
  Rational c = e[p - p_prime];
  return (p - p_prime) % 2 ? Rational(-c) : c;
}

namespace {

// Hook super Schur s_{(a|b)} via s_lambda = sum_rho chi^lambda(rho) / z_rho p_rho.
template <class T>
T hook_schur(int a, int b, const std::vector<T>& p) {
  std::vector<int> parts{a + 1};
  for (int i = 0; i < b; ++i) parts.push_back(1);
  T total{};
  for (const auto& [rho, c] : schur_to_power(Partition(parts))) {
    T term{c};
    for (int r : rho.parts()) term *= p[r];
    total += term;
  }
  return total;
}

template <class T>
T fs_hook_impl(int p, int q, const std::vector<T>& ps) {
  T total{};
  for (int a = 0; a <= p; ++a)
    for (int b = 0; b <= q; ++b) {
      Rational c = hook_shift_coeff(p, a) * hook_shift_coeff(q, b);
      if (c == 0) continue;
      T term = hook_schur<T>(a, b, ps);
      term *= c;
      total += term;
    }
  return total;
}

template <class T>
T det(std::vector<std::vector<T>> m) {
  // Laplace expansion; Giambelli matrices are tiny (Frobenius rank).
  const size_t n = m.size();
  if (n == 0) return T{Rational(1)};
  if (n == 1) return m[0][0];
  T total{};
  for (size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    T term = m[0][c];
    term *= det(std::move(minor));
    if (c % 2) total -= term;
    else total += term;
  }
  return total;
}

template <class T>
T fs_impl(const Partition& mu, const std::function<T(int)>& power_sum) {
  Frobenius f = frobenius(mu);
  std::vector<T> ps(std::max(mu.weight(), 1) + 1);
  for (int r = 1; r <= mu.weight(); ++r) ps[r] = power_sum(r);
  const size_t d = f.arms.size();
  std::vector<std::vector<T>> m(d, std::vector<T>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) m[i][j] = fs_hook_impl<T>(f.arms[i], f.legs[j], ps);
  return det<T>(std::move(m));
}

template <class T>
std::vector<T> power_sums(int n, const std::function<T(int)>& power_sum) {
  std::vector<T> ps(n + 1);
  for (int r = 1; r <= n; ++r) ps[r] = power_sum(r);
  return ps;
}

}  // namespace

Rational fs_hook(int p, int q, const SuperPoint& pt) {
  return fs_hook_impl<Rational>(p, q, power_sums<Rational>(p + q + 1, [&](int r) { return super_power_sum(r, pt); }));
}

RatPoly fs_hook(int p, int q, const ComplementPoint& pt) {
  return fs_hook_impl<RatPoly>(p, q, power_sums<RatPoly>(p + q + 1, [&](int r) { return super_power_sum(r, pt); }));
}

Rational fs(const Partition& mu, const SuperPoint& pt) {
  return fs_impl<Rational>(mu, [&](int r) { return super_power_sum(r, pt); });
}

RatPoly fs(const Partition& mu, const ComplementPoint& pt) {
  return fs_impl<RatPoly>(mu, [&](int r) { return super_power_sum(r, pt); });
}

Integer dim_fs(const Partition& mu, const Partition& nu) {
  const int n = nu.weight(), m = mu.weight();
  if (m > n) return 0;
  Rational v = fs(mu, super_point(nu)) * Rational(dim_hook(nu));
  Integer ff = 1;
  for (int i = 0; i < m; ++i) ff *= n - i;
  v /= Rational(ff);
  if (v.get_den() != 1) throw std::logic_error("dim_fs: non-integral result");
  return v.get_num();
}

Integer dim_complement(const Partition& kappa, const Partition& lambda, int k) {
  if (k < 0) throw std::invalid_argument("dim_complement: negative k");
  auto comp = complement(kappa, k, k);
  if (!comp) return 0;
  return dim_fs(lambda, *comp);
}

Integer g_factor(int k) {
  if (k < 0) throw std::invalid_argument("g_factor: negative k");
  Integer den = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) den *= i + j + 1;
  Integer num = factorial(static_cast<unsigned long>(k) * k);
  if (num % den != 0) throw std::logic_error("g_factor: not an integer");
  return num / den;
}

namespace {

Integer falling(long n, int m) {
  Integer r = 1;
  for (int i = 0; i < m; ++i) r *= n - i;
  return r;
}

}  // namespace

Rational ComplementPoly::operator()(int k) const {
  Integer ff = falling(static_cast<long>(k) * k, depth);
  if (ff == 0) throw std::domain_error("complement polynomial: k^2 below depth");
  return Rational(g_factor(k)) * B(Rational(k)) / Rational(ff);
}

RatPoly complement_poly_symbolic(const Partition& kappa, const Partition& lambda) {
  return fs(lambda, complement_point(kappa)) * fs(kappa, square_point());
}

ComplementPoly dim_complement_poly(const Partition& kappa, const Partition& lambda) {
  ComplementPoly out;
  out.depth = kappa.weight() + lambda.weight();
  int k0 = std::max({kappa.largest(), kappa.length(), 1});
  while (static_cast<long>(k0) * k0 < out.depth) ++k0;
  const int npts = 2 * out.depth + 1;
  std::vector<Rational> xs, ys;
  for (int k = k0; k < k0 + npts + 1; ++k) {
    Integer d = dim_complement(kappa, lambda, k);
    xs.emplace_back(k);
    ys.push_back(Rational(d * falling(static_cast<long>(k) * k, out.depth)) / Rational(g_factor(k)));
  }
  // Interpolate through all but the last point, then check the last one.
  out.B = RatPoly::interpolate(std::vector<Rational>(xs.begin(), xs.end() - 1),
                               std::vector<Rational>(ys.begin(), ys.end() - 1));
  if (out.B(xs.back()) != ys.back() || out.B.degree() > 2 * out.depth)
    throw std::logic_error("dim_complement_poly: degree bound violated");
  if (!(out.B == complement_poly_symbolic(kappa, lambda)))
    throw std::logic_error("dim_complement_poly: interpolation and Faulhaber routes disagree");
  return out;
}

}  // namespace zmoments
