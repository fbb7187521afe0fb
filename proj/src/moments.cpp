#include "zmoments/moments.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "zmoments/characters.hpp"

namespace zmoments {

FTable compute_f_table(int N_max) {
  if (N_max < 0) throw std::invalid_argument("f_table: negative weight");
  PairSeries s(Basis::Power, 2 * N_max);
  for (int n = 0; n <= N_max; ++n)
    for (const auto& k : partitions_of(n))
      for (const auto& l : partitions_of(n))
        s.add({k, l}, ratio(1, k.centralizer() * l.centralizer()));
  PairSeries lg = series_log(s);
  FTable out;
  for (int n = 1; n <= N_max; ++n)
    for (const auto& k : partitions_of(n))
      for (const auto& l : partitions_of(n)) out[{k, l}] = 0;
  for (const auto& [key, v] : lg.coeffs()) {
    if (key.first.weight() != key.second.weight())
      throw std::logic_error("f_table: unbalanced term in the logarithm");
    out[key] = v.rational();
  }
  return out;
}

const FTable& f_table(int N_max) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FTable>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(N_max); it != cache.end()) return *it->second;
    // a larger table already contains this one
    for (auto& [n, t] : cache)
      if (n > N_max) {
        auto sub = std::make_unique<FTable>();
        for (const auto& [k, v] : *t)
          if (k.first.weight() <= N_max) sub->emplace(k, v);
        return *cache.emplace(N_max, std::move(sub)).first->second;
      }
  }
  auto t = std::make_unique<FTable>(compute_f_table(N_max));
  std::lock_guard lock(mu);
  return *cache.emplace(N_max, std::move(t)).first->second;
}

RatPoly V_poly(int r, const Partition& mu, const Partition& nu, const FTable& f) {
  if (r < 1) throw std::invalid_argument("V_poly: r must be positive");
  const int n = mu.weight() + nu.weight();
  RatPoly total;
  for (const auto& kap : partitions_of(r)) {
    if (kap.length() < mu.length()) continue;
    Integer mk = monomial_eval(mu, kap);
    if (mk == 0) continue;
    for (const auto& lam : partitions_of(r)) {
      if (lam.length() < nu.length()) continue;
      auto it = f.find({kap, lam});
      if (it == f.end()) throw std::invalid_argument("V_poly: f table too small");
      if (it->second == 0) continue;
      Integer ml = monomial_eval(nu, lam);
      if (ml == 0) continue;
      int deg = kap.length() + lam.length() - mu.length() - nu.length();
      total += RatPoly::monomial(deg, it->second * Rational(mk * ml));
    }
  }
  return total * Rational(multinomial(n, join(mu, nu)));
}

RatPoly V_poly(int r, const Partition& mu, const Partition& nu) { return V_poly(r, mu, nu, f_table(r)); }

namespace {

// Dense numbering of all pairs of total weight <= N, (phi, phi) first.
struct PairIndex {
  struct Triple {
    int i, j, t;
  };
  int N;
  std::vector<PairKey> keys;
  std::vector<int> wt, slot1, slot2;
  std::map<PairKey, int> pos;
  std::vector<Partition> slots;  // partitions of size 0..N
  std::vector<std::vector<Triple>> products;  // i, j != 0, grouped by target weight

  explicit PairIndex(int n) : N(n), products(n + 1) {
    std::map<Partition, int> slot_pos;
    for (int a = 0; a <= N; ++a)
      for (const auto& p : partitions_of(a)) {
        slot_pos.emplace(p, static_cast<int>(slots.size()));
        slots.push_back(p);
      }
    for (int w = 0; w <= N; ++w)
      for (int a = 0; a <= w; ++a)
        for (const auto& m : partitions_of(a))
          for (const auto& v : partitions_of(w - a)) {
            pos.emplace(PairKey{m, v}, static_cast<int>(keys.size()));
            keys.push_back({m, v});
            wt.push_back(w);
            slot1.push_back(slot_pos.at(m));
            slot2.push_back(slot_pos.at(v));
          }
    for (size_t i = 1; i < keys.size(); ++i)
      for (size_t j = 1; j < keys.size() && wt[i] + wt[j] <= N; ++j) {
        int t = pos.at({join(keys[i].first, keys[j].first), join(keys[i].second, keys[j].second)});
        products[wt[t]].push_back({static_cast<int>(i), static_cast<int>(j), t});
      }
  }
  size_t size() const { return keys.size(); }
};

std::shared_ptr<const PairIndex> pair_index(int N) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const PairIndex>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[N];
  if (!slot) slot = std::make_shared<const PairIndex>(N);
  return slot;
}

// Coefficients of h_u(Q^A) in the monomials a_mu (with the L^{|mu|} stripped):
//   H_u(mu) = [tau^u] (1-tau)^{-k} prod_i C_{mu_i}(tau) / prod_t M_t!,
//   C_t(tau) = sum_j j^{t-1} tau^j / t! = tau A_{t-1}(tau) / ((1-tau)^t t!)
// with A_n the Eulerian polynomials, so H_u is a short sum of binomials.
class HTable {
 public:
  HTable(int k, const std::vector<Partition>& slots) : k_(k) {
    for (const auto& mu : slots) {
      Entry e;
      e.len = mu.length();
      e.K = k + mu.weight();
      std::vector<Integer> poly{1};
      Integer den = 1;
      for (int part : mu.parts()) {
        poly = mul(poly, eulerian(part - 1));
        den *= factorial(part);
      }
      for (int m : mu.multiplicities())
        if (m > 1) den *= factorial(m);
      e.poly = std::move(poly);
      e.den = den;
      entries_.push_back(std::move(e));
    }
  }

  Rational operator()(long u, int s) const {
    const Entry& e = entries_[s];
    if (e.K == 0) return u == 0 ? 1 : 0;
    Integer total = 0;
    for (size_t j = 0; j < e.poly.size(); ++j) {
      long top = u - e.len - static_cast<long>(j) + e.K - 1;
      if (top < e.K - 1) continue;
      total += e.poly[j] * binomial(top, e.K - 1);
    }
    return ratio(total, e.den);
  }

 private:
  struct Entry {
    int len = 0, K = 0;
    std::vector<Integer> poly;
    Integer den;
  };

  static std::vector<Integer> mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  }

  // Eulerian polynomial A_n with sum_{j>=1} j^n tau^j = tau A_n(tau) / (1-tau)^{n+1}.
  static std::vector<Integer> eulerian(int n) {
    std::vector<Integer> a{1};
    for (int m = 1; m <= n; ++m) {
      std::vector<Integer> b(m, 0);
      for (int i = 0; i < m; ++i) {
        if (i < static_cast<int>(a.size())) b[i] += a[i] * (i + 1);
        if (i >= 1 && i - 1 < static_cast<int>(a.size())) b[i] += a[i - 1] * (m - i);
      }
      a = std::move(b);
    }
    return a;
  }

  int k_;
  std::vector<Entry> entries_;
};

template <class T>
T convert(const Rational& q, const T& zero);
template <>
Rational convert(const Rational& q, const Rational&) {
  return q;
}
template <>
BigReal convert(const Rational& q, const BigReal& zero) {
  return BigReal(q, zero.prec());
}

// out += a * b over the dense index (all products, including the (phi,phi) slot).
template <class T>
void full_product_acc(const PairIndex& I, const std::vector<T>& a, const std::vector<T>& b, std::vector<T>& out,
                      long scale) {
  const size_t n = I.size();
  for (size_t t = 0; t < n; ++t) {
    T x = a[0] * b[t];
    if (t != 0) x += a[t] * b[0];
    x *= scale;
    out[t] += x;
  }
  for (int w = 2; w <= I.N; ++w)
    for (const auto& tr : I.products[w]) {
      T x = a[tr.i] * b[tr.j];
      x *= scale;
      out[tr.t] += x;
    }
}

// log F in the Q-grading: r G_r = r F_r - sum_{j<r} j G_j F_{r-j}.
template <class T>
class QLog {
 public:
  QLog(const PairIndex& I, const HTable& H, T zero) : I_(I), H_(H), zero_(std::move(zero)) {
    F_.push_back(row(0));
  }

  const std::vector<T>& G(int r) {
    while (static_cast<int>(G_.size()) < r) {
      const int q = static_cast<int>(G_.size()) + 1;
      while (static_cast<int>(F_.size()) <= q) F_.push_back(row(static_cast<long>(F_.size())));
      std::vector<T> acc(I_.size(), zero_);
      for (size_t t = 0; t < I_.size(); ++t) {
        acc[t] = F_[q][t];
        acc[t] *= static_cast<long>(q);
      }
      for (int j = 1; j < q; ++j) full_product_acc(I_, G_[j - 1], F_[q - j], acc, -j);
      for (auto& v : acc) v /= static_cast<long>(q);
      G_.push_back(std::move(acc));
    }
    return G_[r - 1];
  }

 private:
  std::vector<T> row(long u) const {
    std::vector<T> f(I_.size(), zero_);
    for (size_t t = 0; t < I_.size(); ++t) {
      Rational v = H_(u, I_.slot1[t]) * H_(u, I_.slot2[t]);
      if (v != 0) f[t] = convert<T>(v, zero_);
    }
    return f;
  }

  const PairIndex& I_;
  const HTable& H_;
  T zero_;
  std::vector<std::vector<T>> F_, G_;
};

// Weight-graded log of a dense series with F[0] = 1.
std::vector<BigReal> weight_log(const PairIndex& I, const std::vector<BigReal>& F) {
  const Prec P = F[0].prec();
  std::vector<BigReal> G(I.size(), BigReal(P));
  std::vector<BigReal> acc(I.size(), BigReal(P));
  for (size_t t = 1; t < I.size(); ++t) acc[t] = F[t] * static_cast<long>(I.wt[t]);
  for (int w = 1; w <= I.N; ++w) {
    for (const auto& tr : I.products[w]) acc[tr.t] -= G[tr.i] * F[tr.j] * static_cast<long>(I.wt[tr.i]);
    for (size_t t = 1; t < I.size(); ++t)
      if (I.wt[t] == w) G[t] = acc[t] / static_cast<long>(w);
  }
  return G;
}

double log10_abs(const BigReal& x) { return x.log10_abs(); }

}  // namespace

std::vector<std::map<PairKey, Rational>> V_series_exact(int k, int N, int R) {
  if (k < 0 || N < 0 || R < 1) throw std::invalid_argument("V_series_exact: bad arguments");
  auto I = pair_index(N);
  HTable H(k, I->slots);
  QLog<Rational> q(*I, H, Rational(0));
  std::vector<std::map<PairKey, Rational>> out;
  for (int r = 1; r <= R; ++r) {
    const auto& g = q.G(r);
    std::map<PairKey, Rational> m;
    for (size_t t = 0; t < I->size(); ++t)
      if (g[t] != 0) m.emplace(I->keys[t], g[t] * Rational(factorial(I->wt[t])));
    out.push_back(std::move(m));
  }
  return out;
}

PrimeZetaTaylor ConstantsProvider::prime_zeta(int r, int n_max, int digits, long cutoff) const {
  return prime_zeta_taylor(r, n_max, digits, cutoff);
}

FTable ConstantsProvider::ftable(int N_max) const { return f_table(N_max); }

double MomentOptions::effective_tol() const { return tol > 0 ? tol : std::pow(10.0, -(digits + 5)); }

int MomentOptions::working_digits(int k) const { return digits + 25 + 4 * k; }

ExponentTable exponent_table(int k, int N, const MomentOptions& opts) {
  if (k < 0 || N < 0) throw std::invalid_argument("exponent_table: k and N must be non-negative");
  if (opts.digits < 1) throw std::invalid_argument("digits must be positive");
  const ConstantsProvider default_provider;
  const ConstantsProvider& prov = opts.provider ? *opts.provider : default_provider;
  const int Dw = opts.working_digits(k);
  const Prec P = Prec::digits(Dw);
  const double tol = opts.effective_tol();
  const BigReal zero(P);

  auto I = pair_index(N);
  const size_t n_keys = I->size();
  HTable H(k, I->slots);
  QLog<BigReal> qlog(*I, H, zero);
  std::vector<BigReal> nfact;
  for (int w = 0; w <= N; ++w) nfact.emplace_back(factorial(w), P);

  std::vector<BigReal> W(n_keys, zero), err(n_keys, zero);
  const BigReal rounding = ten_pow(-(Dw - 10), P);

  // r = 1 over all primes (regularized).
  const std::vector<BigReal>& G1 = qlog.G(1);
  {
    PrimeZetaTaylor c1 = prov.prime_zeta(1, N, Dw, 0);
    for (size_t t = 0; t < n_keys; ++t) {
      W[t] = nfact[I->wt[t]] * G1[t] * c1.values[I->wt[t]];
      err[t] += abs(nfact[I->wt[t]] * G1[t]) * c1.tail_bounds[I->wt[t]];
    }
  }

  // Primes up to the cutoff: exact local factors minus their r = 1 part.
  if (opts.prime_cutoff > 0) {
    std::vector<std::vector<BigReal>> Hb;  // Hb[u][slot]
    auto H_row = [&](long u) -> const std::vector<BigReal>& {
      while (static_cast<long>(Hb.size()) <= u) {
        long v = static_cast<long>(Hb.size());
        std::vector<BigReal> row;
        for (size_t s = 0; s < I->slots.size(); ++s) row.emplace_back(H(v, static_cast<int>(s)), P);
        Hb.push_back(std::move(row));
      }
      return Hb[u];
    };
    const BigReal eps = ten_pow(-(Dw + 5), P);
    for (long p : primes_up_to(opts.prime_cutoff)) {
      const BigReal Q = BigReal(1, P) / BigReal(p, P);
      std::vector<BigReal> F(n_keys, zero);
      BigReal Qu(1, P);
      BigReal prev(P);
      for (long u = 0;; ++u) {
        const auto& h = H_row(u);
        BigReal biggest(P);
        for (size_t t = 0; t < n_keys; ++t) {
          BigReal term = h[I->slot1[t]] * h[I->slot2[t]] * Qu;
          F[t] += term;
          biggest = max_abs(biggest, term);
        }
        if (u > 2 * (k + N) + 4 && biggest < eps * F[0] && biggest <= prev) break;
        prev = biggest;
        Qu *= Q;
      }
      BigReal logF0 = log(F[0]);
      for (size_t t = 1; t < n_keys; ++t) F[t] /= F[0];
      F[0] = BigReal(1, P);
      std::vector<BigReal> g = weight_log(*I, F);
      g[0] = logF0;
      const BigReal L = -log_of(static_cast<unsigned long>(p), P);
      std::vector<BigReal> Lpow{BigReal(1, P)};
      for (int w = 1; w <= N; ++w) Lpow.push_back(Lpow.back() * L);
      for (size_t t = 0; t < n_keys; ++t) {
        // the per-prime Taylor coefficient L^n/n! cancels the n! carried by V
        BigReal local = g[t] - G1[t] * Q;
        W[t] += Lpow[I->wt[t]] * local;
      }
    }
  }

  // Remaining primes, r >= 2: sum_r V^r c^{(r, > cutoff)}_n.
  std::vector<BigReal> partial_abs(n_keys, zero);
  std::vector<std::vector<BigReal>> last_terms;
  std::vector<double> S;  // max |term| per r
  int r_used = 1;
  FTable ft;
  const int exact_w = std::min(opts.exact_v_weight, 12);
  if (exact_w >= 2) ft = prov.ftable(exact_w);
  for (int r = 2;; ++r) {
    if (r > opts.max_r) throw NonConvergence("W: r-series did not converge within max_r terms");
    const std::vector<BigReal>& Gr = qlog.G(r);
    PrimeZetaTaylor cr = prov.prime_zeta(r, N, Dw, opts.prime_cutoff);
    std::vector<BigReal> terms(n_keys, zero);
    double Smax = -1e300;
    for (size_t t = 0; t < n_keys; ++t) {
      BigReal V = nfact[I->wt[t]] * Gr[t];
      if (r <= exact_w) {
        // cross-check against the f-table route
        const auto& key = I->keys[t];
        Rational vf = V_poly(r, key.first, key.second, ft)(Rational(k));
        BigReal diff = abs(V - BigReal(vf, P));
        if (diff > rounding * (abs(V) + BigReal(1, P)) * BigReal(1000000L, P))
          throw std::logic_error("V^r: f-table and local-factor routes disagree");
        V = BigReal(vf, P);
      }
      terms[t] = V * cr.values[I->wt[t]];
      W[t] += terms[t];
      err[t] += abs(V) * cr.tail_bounds[I->wt[t]];
      Smax = std::max(Smax, log10_abs(terms[t]));
    }
    S.push_back(Smax);
    last_terms.push_back(std::move(terms));
    if (last_terms.size() > 3) last_terms.erase(last_terms.begin());
    r_used = r;
    if (last_terms.size() < 3 || r < 5) continue;
    // ratio estimate from the decay of the largest term over three steps
    double q = 0;
    const size_t m = S.size();
    if (S[m - 1] > -1e299 && S[m - 4] > -1e299) q = std::pow(10.0, (S[m - 1] - S[m - 4]) / 3.0);
    if (q >= 0.9) {
      if (r > 40) throw NonConvergence("W: r-series is not contracting (ratio " + std::to_string(q) + ")");
      continue;
    }
    bool done = true;
    const BigReal tol_r = BigReal::from_double(tol, P);
    std::vector<BigReal> env(n_keys, zero);
    const BigReal qq = BigReal::from_double(q / (1 - q), P);
    for (size_t t = 0; t < n_keys && done; ++t) {
      BigReal scale = max_abs(W[t], BigReal(1, P)) * tol_r;
      for (const auto& lt : last_terms)
        if (abs(lt[t]) > scale) done = false;
      env[t] = max_abs(last_terms[2][t], last_terms[1][t]) * qq;
      if (env[t] > scale) done = false;
    }
    if (done) {
      for (size_t t = 0; t < n_keys; ++t) err[t] += env[t];
      break;
    }
  }

  ExponentTable out;
  out.k = k;
  out.N = N;
  out.r_max_used = r_used;
  for (size_t t = 0; t < n_keys; ++t) {
    err[t] += rounding * max_abs(W[t], BigReal(1, P));
    out.W.emplace(I->keys[t], Estimate{W[t], err[t]});
  }
  return out;
}

Estimate W_coeff(const Partition& mu, const Partition& nu, int k, const MomentOptions& opts) {
  ExponentTable t = exponent_table(k, mu.weight() + nu.weight(), opts);
  return t.W.at({mu, nu});
}

Estimate DTable::at(const Partition& kappa, const Partition& lambda) const {
  auto it = d.find({kappa, lambda});
  if (it != d.end()) return it->second;
  Prec p = d.empty() ? Prec::digits(20) : d.begin()->second.value.prec();
  return Estimate{BigReal(p), BigReal(p)};
}

DTable d_from_exponent(const ExponentTable& W) {
  const PairKey one{};
  const Estimate& w0 = W.W.at(one);
  const Prec P = w0.value.prec();
  PairSeries A(Basis::Power, W.N), Aabs(Basis::Power, W.N), Aup(Basis::Power, W.N);
  for (const auto& [key, e] : W.W) {
    if (key == one) continue;
    A.set(key, e.value);
    Aabs.set(key, abs(e.value));
    Aup.set(key, abs(e.value) + e.error);
  }
  const BigReal scale = exp(w0.value);
  const BigReal scale_err = exp(w0.value + w0.error) - scale;
  PairSeries E = series_exp(A);
  PairSeries Eabs = series_exp(Aabs);
  PairSeries Eup = series_exp(Aup);

  DTable out;
  out.k = W.k;
  out.N = W.N;
  out.r_max_used = W.r_max_used;
  // value: characters applied to scale * E; error: |characters| applied to the majorant gap
  std::map<PairKey, BigReal> val, err;
  for (const auto& [key, v] : Eup.coeffs()) {
    const BigReal ev = E.coeff(key).to_real(P);
    const BigReal gap = (v.to_real(P) - Eabs.coeff(key).to_real(P)) * (scale + scale_err) + abs(ev) * scale_err;
    const auto& t1 = character_table(key.first.weight());
    const auto& t2 = character_table(key.second.weight());
    int j1 = t1.index_of(key.first), j2 = t2.index_of(key.second);
    for (size_t i1 = 0; i1 < t1.partitions().size(); ++i1) {
      long c1 = static_cast<long>(t1.at(static_cast<int>(i1), j1));
      if (c1 == 0) continue;
      for (size_t i2 = 0; i2 < t2.partitions().size(); ++i2) {
        long c2 = static_cast<long>(t2.at(static_cast<int>(i2), j2));
        if (c2 == 0) continue;
        PairKey dk{t1.partitions()[i1], t2.partitions()[i2]};
        auto [vi, vnew] = val.try_emplace(dk, BigReal(P));
        vi->second += ev * (c1 * c2);
        auto [ei, enew] = err.try_emplace(dk, BigReal(P));
        ei->second += gap * std::abs(c1 * c2);
      }
    }
  }
  for (auto& [key, v] : val) {
    BigReal value = v * scale;
    out.d.emplace(key, Estimate{value, err.at(key)});
  }
  return out;
}

DTable d_table(int k, int N, const MomentOptions& opts) {
  if (N > k * k) throw std::invalid_argument("d_table: weight above k^2");
  return d_from_exponent(exponent_table(k, N, opts));
}

Estimate a_factor(int k, int digits, long cutoff) {
  if (k < 0) throw std::invalid_argument("a_factor: negative k");
  const int Dw = digits + 20;
  const Prec P = Prec::digits(Dw);
  if (k <= 1) return Estimate{BigReal(1, P).with_prec(Prec::digits(digits)), BigReal(Prec::digits(digits))};
  const BigReal eps = ten_pow(-(Dw + 3), P);
  BigReal logsum(P);
  for (long p : primes_up_to(cutoff)) {
    const BigReal Q = BigReal(1, P) / BigReal(p, P);
    BigReal s(P), Qu(1, P);
    for (long u = 0;; ++u) {
      BigReal b(binomial(u + k - 1, k - 1), P);
      BigReal term = b * b * Qu;
      s += term;
      if (u > 2 * k && term < eps * s) break;
      Qu *= Q;
    }
    logsum += log(s) + log(BigReal(1, P) - Q) * static_cast<long>(k * k);
  }
  // log of (1-Q)^{(k-1)^2} sum_j C(k-1,j)^2 Q^j, exactly, term by term.
  std::vector<Rational> poly(1, 1);
  for (int i = 0; i < (k - 1) * (k - 1); ++i) {
    poly.push_back(0);
    for (size_t j = poly.size() - 1; j >= 1; --j) poly[j] -= poly[j - 1];
  }
  {
    std::vector<Rational> hyp;
    for (int j = 0; j < k; ++j) hyp.emplace_back(binomial(k - 1, j) * binomial(k - 1, j));
    std::vector<Rational> prod(poly.size() + hyp.size() - 1, 0);
    for (size_t i = 0; i < poly.size(); ++i)
      for (size_t j = 0; j < hyp.size(); ++j) prod[i + j] += poly[i] * hyp[j];
    poly = std::move(prod);
  }
  long q = cutoff + 1;
  for (;; ++q) {
    bool prime = q >= 2;
    for (long d = 2; d * d <= q && prime; ++d)
      if (q % d == 0) prime = false;
    if (prime) break;
  }
  std::vector<Rational> e(1, 0);  // log coefficients, e[0] = 0
  auto coeff = [&](size_t j) { return j < poly.size() ? poly[j] : Rational(0); };
  BigReal tail(P), tail_err(P);
  int small_run = 0;
  for (int j = 1; j < 2000; ++j) {
    Rational s = 0;
    for (int i = 1; i < j; ++i) s += Rational(i) * e[i] * coeff(j - i);
    e.push_back(coeff(j) - s / Rational(j));
    if (j < 2 || e[j] == 0) continue;
    BigReal bound = abs(BigReal(e[j], P)) * pow(BigReal(q, P), -j) * 2L;
    if (bound < eps) {
      if (++small_run >= 3) {
        tail_err = bound * 4L;
        break;
      }
      continue;
    }
    small_run = 0;
    PrimeZetaTaylor pz = prime_zeta_taylor(j, 0, Dw, cutoff);
    tail += BigReal(e[j], P) * pz.values[0];
    tail_err += abs(BigReal(e[j], P)) * pz.tail_bounds[0];
  }
  BigReal a = exp(logsum + tail);
  BigReal err = a * (tail_err + ten_pow(-(Dw - 5), P));
  const Prec out = Prec::digits(digits);
  err = max_abs(err, a * ten_pow(-digits, P));
  return Estimate{a.with_prec(out), err.with_prec(out)};
}

Coefficient c_coeff_from(const DTable& d, int N, int digits) {
  const int k = d.k;
  const Prec out = Prec::digits(digits);
  Coefficient c;
  c.N = N;
  if (N > k * k) {
    c.value = Estimate{BigReal(out), BigReal(out)};
    c.note = "N exceeds k^2; the coefficient vanishes";
    return c;
  }
  if (N > d.N) throw std::invalid_argument("c_coeff: d table does not reach weight N");
  const Prec P = d.d.empty() ? out : d.d.begin()->second.value.prec();
  BigReal sum(P), err(P);
  for (const auto& [key, e] : d.d) {
    if (weight(key) != N) continue;
    Integer dim = dim_complement(key.first, key.second, k);
    if (dim == 0) continue;
    BigReal D(dim, P);
    sum += e.value * D;
    err += e.error * abs(D);
  }
  BigReal f(factorial(static_cast<unsigned long>(k * k - N)), P);
  sum /= f;
  err /= f;
  err = max_abs(err, abs(sum) * ten_pow(-digits, P));
  c.value = Estimate{sum.with_prec(out), err.with_prec(out)};
  return c;
}

Coefficient c_coeff(int N, int k, const MomentOptions& opts) {
  if (k < 0 || N < 0) throw std::invalid_argument("c_coeff: k and N must be non-negative");
  if (N > k * k) {
    DTable empty;
    empty.k = k;
    return c_coeff_from(empty, N, opts.digits);
  }
  return c_coeff_from(d_table(k, N, opts), N, opts.digits);
}

MomentPolynomial moment_polynomial(int k, const MomentOptions& opts) {
  if (k < 0) throw std::invalid_argument("moment_polynomial: negative k");
  MomentPolynomial mp;
  mp.k = k;
  mp.digits = opts.digits;
  mp.tol = opts.effective_tol();
  DTable d = d_table(k, k * k, opts);
  mp.r_max_used = d.r_max_used;
  for (int N = 0; N <= k * k; ++N) mp.c.push_back(c_coeff_from(d, N, opts.digits));
  return mp;
}

}  // namespace zmoments
