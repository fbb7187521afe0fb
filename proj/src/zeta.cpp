#include "zmoments/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace zmoments {

namespace {
constexpr int kGuardDigits = 10;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  static std::mutex mu;
  static std::vector<Rational> b{Rational(1)};
  std::lock_guard lock(mu);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  while (static_cast<int>(b.size()) <= n) {
    const int m = static_cast<int>(b.size());
    Rational s = 0;
    for (int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b[j];
    Rational v = -s / Rational(m + 1);
    v.canonicalize();
    b.push_back(v);
  }
  return b[n];
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (long i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::vector<int> mobius_up_to(int n) {
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  if (n >= 0) mu[0] = 0;
  for (int i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    for (int j = i; j <= n; j += i) {
      if (j > i) composite[j] = true;
      mu[j] = -mu[j];
    }
    for (long j = static_cast<long>(i) * i; j <= n; j += static_cast<long>(i) * i) mu[j] = 0;
  }
  return mu;
}

std::vector<BigReal> series_mul(const std::vector<BigReal>& a, const std::vector<BigReal>& b) {
  const size_t n = std::min(a.size(), b.size());
  std::vector<BigReal> r(n, BigReal(a[0].prec()));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<BigReal> series_log(const std::vector<BigReal>& a) {
  if (a.empty() || a[0].sign() <= 0) throw std::domain_error("series_log: leading coefficient must be positive");
  const size_t n = a.size();
  std::vector<BigReal> t(a);
  for (auto& v : t) v /= a[0];
  std::vector<BigReal> b(n, BigReal(a[0].prec()));
  b[0] = log(a[0]);
  for (size_t k = 1; k < n; ++k) {
    BigReal s(a[0].prec());
    for (size_t j = 1; j < k; ++j) s += b[j] * t[k - j] * static_cast<long>(j);
    b[k] = t[k] - s / static_cast<long>(k);
  }
  return b;
}

std::vector<BigReal> zeta_taylor(const BigReal& x0in, int order, int digits) {
  if (order < 0) throw std::invalid_argument("zeta_taylor: negative order");
  const int wd = digits + kGuardDigits;
  const Prec P = Prec::digits(wd);
  const BigReal x0 = x0in.with_prec(P);
  const BigReal one(1, P);
  if (x0 < one) throw std::domain_error("zeta_taylor: expansion point below 1");
  const bool pole = x0 == one;
  const int n = order + 1;
  std::vector<BigReal> out(n, BigReal(P));
  // 2^{-x0} below the working precision: zeta is 1 to all digits kept.
  if (x0.to_double() * std::log10(2.0) > wd + 5) {
    out[0] = one;
    return out;
  }
  const BigReal eps = ten_pow(-(wd + 2), P);

  for (long M = std::max(20, digits);; M *= 2) {
    std::vector<BigReal> acc(n, BigReal(P));
    // exp(-s log j) coefficients times j^{-x0}
    auto add_power = [&](long j, const BigReal& scale) {
      BigReal L = log_of(static_cast<unsigned long>(j), P);
      BigReal term = scale * exp(-(x0 * L));
      for (int i = 0; i < n; ++i) {
        acc[i] += term;
        term *= -L;
        term /= static_cast<long>(i + 1);
      }
    };
    for (long j = 1; j < M; ++j) add_power(j, one);
    const BigReal LM = log_of(static_cast<unsigned long>(M), P);
    std::vector<BigReal> eM(n, BigReal(P));  // exp(-s log M)
    {
      BigReal t = one;
      for (int i = 0; i < n; ++i) {
        eM[i] = t;
        t *= -LM;
        t /= static_cast<long>(i + 1);
      }
    }
    // M^{1-x-s}/(x-1+s), or (M^{-s} - 1)/s at the pole
    if (pole) {
      BigReal t = -LM;
      for (int i = 0; i < n; ++i) {
        acc[i] += t;
        t *= -LM;
        t /= static_cast<long>(i + 2);
      }
    } else {
      const BigReal a = x0 - one;
      std::vector<BigReal> inv(n, BigReal(P));
      BigReal t = one / a;
      for (int i = 0; i < n; ++i) {
        inv[i] = t;
        t /= -a;
      }
      BigReal scale = exp(-(a * LM));
      auto prod = series_mul(eM, inv);
      for (int i = 0; i < n; ++i) acc[i] += prod[i] * scale;
    }
    const BigReal MmX = exp(-(x0 * LM));  // M^{-x0}
    for (int i = 0; i < n; ++i) acc[i] += eM[i] * MmX / 2L;

    // Bernoulli corrections B_{2i}/(2i)! (x+s)_{2i-1} M^{-x-s-2i+1}
    std::vector<BigReal> poch(n, BigReal(P));
    poch[0] = x0;
    if (n > 1) poch[1] = one;
    BigReal Mpow = MmX / BigReal(M, P);  // M^{-x0-1}
    BigReal prev_size(P);
    bool converged = false;
    for (int i = 1; i < 2000; ++i) {
      if (i > 1) {
        // multiply by (x0 + 2i - 3 + s)(x0 + 2i - 2 + s)
        for (long t : {2L * i - 3, 2L * i - 2}) {
          BigReal c = x0 + BigReal(t, P);
          std::vector<BigReal> lin(n, BigReal(P));
          lin[0] = c;
          if (n > 1) lin[1] = one;
          poch = series_mul(poch, lin);
        }
        Mpow /= BigReal(M, P);
        Mpow /= BigReal(M, P);
      }
      BigReal coef(bernoulli(2 * i) / Rational(factorial(2 * i)), P);
      auto term = series_mul(poch, eM);
      BigReal size(P);
      for (int k = 0; k < n; ++k) {
        term[k] *= coef * Mpow;
        acc[k] += term[k];
        size = max_abs(size, term[k]);
      }
      if (size < eps) {
        converged = true;
        break;
      }
      if (i > 2 && size > prev_size) break;  // asymptotic series turned: enlarge M
      prev_size = size;
    }
    if (converged) {
      for (int i = 0; i < n; ++i) out[i] = acc[i];
      return out;
    }
    if (M > 1000000) throw NonConvergence("zeta_taylor: Euler-Maclaurin did not converge");
  }
}

BigReal zeta_derivative(int n, const BigReal& x, int digits) {
  if (n < 0) throw std::invalid_argument("zeta_derivative: negative order");
  if (!(x > 1.001)) throw std::domain_error("zeta_derivative: need x > 1 + 1e-3");
  auto t = zeta_taylor(x, n, digits);
  BigReal r = t[n] * BigReal(factorial(n), t[n].prec());
  return r.with_prec(Prec::digits(digits));
}

BigReal stieltjes_gamma(int n, int digits) {
  if (n < 0) throw std::invalid_argument("stieltjes_gamma: negative index");
  const Prec P = Prec::digits(digits + kGuardDigits);
  auto t = zeta_taylor(BigReal(1, P), n, digits);
  BigReal g = t[n] * BigReal(factorial(n), P);
  if (n % 2) g = -g;
  return g.with_prec(Prec::digits(digits));
}

namespace {

// Coefficients of log(s zeta(1+s)), index 0..order (index 0 is zero).
std::vector<BigReal> log_s_zeta(int order, int digits) {
  const Prec P = Prec::digits(digits + kGuardDigits);
  auto a = zeta_taylor(BigReal(1, P), order, digits);
  std::vector<BigReal> c(order + 1, BigReal(P));
  c[0] = BigReal(1, P);
  for (int i = 1; i <= order; ++i) c[i] = a[i - 1];
  return series_log(c);
}

}  // namespace

BigReal stieltjes_cumulant(int n, int digits) {
  if (n < 1) throw std::invalid_argument("stieltjes_cumulant: index starts at 1");
  auto l = log_s_zeta(n, digits);
  BigReal g = l[n] * BigReal(factorial(n), l[n].prec());
  if (n % 2 == 0) g = -g;
  return g.with_prec(Prec::digits(digits));
}

std::vector<BigReal> prime_sum_taylor(int r, int n_max, int digits, long cutoff) {
  const Prec P = Prec::digits(digits + kGuardDigits);
  std::vector<BigReal> out(n_max + 1, BigReal(P));
  for (long p : primes_up_to(cutoff)) {
    BigReal L = log_of(static_cast<unsigned long>(p), P);
    BigReal t = exp(-(L * static_cast<long>(r)));
    for (int i = 0; i <= n_max; ++i) {
      out[i] += t;
      t *= -L;
      t /= static_cast<long>(i + 1);
    }
  }
  return out;
}

PrimeZetaTaylor prime_zeta_taylor(int r, int n_max, int digits, long cutoff) {
  if (r < 1 || n_max < 0) throw std::invalid_argument("prime_zeta_taylor: need r >= 1, n_max >= 0");
  if (r == 1 && cutoff > 0) throw std::domain_error("prime_zeta_taylor: r = 1 only in regularized form");
  const int wd = digits + kGuardDigits;
  const Prec P = Prec::digits(wd);
  const int n = n_max + 1;
  PrimeZetaTaylor res;
  res.r = r;
  res.cutoff = cutoff;
  res.digits = digits;
  res.values.assign(n, BigReal(P));
  res.tail_bounds.assign(n, BigReal(P));
  if (r == 1) res.values = log_s_zeta(n_max, digits);

  const std::vector<long> small_primes = primes_up_to(cutoff);
  std::vector<BigReal> small_logs;
  small_logs.reserve(small_primes.size());
  for (long p : small_primes) small_logs.push_back(log_of(static_cast<unsigned long>(p), P));
  long q = cutoff + 1;  // smallest prime above the cutoff
  while (true) {
    bool prime = q >= 2;
    for (long d = 2; d * d <= q && prime; ++d)
      if (q % d == 0) prime = false;
    if (prime) break;
    ++q;
  }
  const double lnq = std::log(static_cast<double>(q));
  // Envelope of the m-th Mobius term: 2 q^{-mr} max_i (m log q)^i / i!, in log10.
  auto envelope = [&](int m) {
    double best = -1e300;
    double lt = 0;
    for (int i = 0; i <= n_max; ++i) {
      if (i > 0) lt += std::log10(m * lnq) - std::log10(static_cast<double>(i));
      best = std::max(best, lt);
    }
    return std::log10(2.0) - m * r * lnq / std::log(10.0) + best;
  };
  const int m_peak = static_cast<int>(n_max / (r * lnq)) + 1;
  int m_limit = m_peak + 8;
  while (envelope(m_limit) > -wd || m_limit < m_peak) ++m_limit;
  const std::vector<int> mob = mobius_up_to(m_limit + 1);

  for (int m = (r == 1 ? 2 : 1); m <= m_limit; ++m) {
    if (mob[m] == 0) continue;
    // log zeta(m r + u) with u = m s
    auto z = zeta_taylor(BigReal(static_cast<long>(m) * r, P), n_max, wd);
    std::vector<BigReal> lz = series_log(z);
    BigReal mi(1, P);
    for (int i = 0; i < n; ++i) {
      lz[i] *= mi;
      mi *= static_cast<long>(m);
    }
    // + sum_{p <= cutoff} log(1 - p^{-m(r+s)}) = - sum_j p^{-jm(r+s)} / j
    for (size_t ip = 0; ip < small_primes.size(); ++ip) {
      const double lnp = std::log(static_cast<double>(small_primes[ip]));
      const double lg = -static_cast<double>(m) * r * lnp / std::log(10.0);
      // primes are increasing, so once the leading term is negligible so is the rest
      if (lg + n_max * std::log10(m * lnp + 1.0) < -wd - 2) break;
      const BigReal& L = small_logs[ip];
      for (long j = 1;; ++j) {
        if (j * lg + n_max * std::log10(j * m * lnp + 1.0) < -wd - 2) break;
        BigReal jm_l = L * (j * m);
        BigReal t = exp(-(jm_l * static_cast<long>(r))) / j;
        for (int i = 0; i < n; ++i) {
          lz[i] -= t;
          t *= -jm_l;
          t /= static_cast<long>(i + 1);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      lz[i] /= static_cast<long>(m);
      if (mob[m] > 0) res.values[i] += lz[i];
      else res.values[i] -= lz[i];
    }
  }
  const BigReal bound = ten_pow(static_cast<long>(std::floor(envelope(m_limit + 1))) + 1, P);
  for (auto& b : res.tail_bounds) b = bound;
  return res;
}

}  // namespace zmoments
