#include "zmoments/symseries.hpp"

#include <stdexcept>

#include "zmoments/characters.hpp"

namespace zmoments {

PairSeries::PairSeries(Basis basis, int max_weight) : basis_(basis), max_weight_(max_weight) {
  if (max_weight < 0) throw std::invalid_argument("negative truncation weight");
}

void PairSeries::add(const PairKey& key, const Scalar& value) {
  if (weight(key) > max_weight_ || value.is_zero()) return;
  auto [it, inserted] = c_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) c_.erase(it);
  }
}

void PairSeries::set(const PairKey& key, const Scalar& value) {
  if (weight(key) > max_weight_) return;
  if (value.is_zero()) c_.erase(key);
  else c_.insert_or_assign(key, value);
}

Scalar PairSeries::coeff(const PairKey& key) const {
  auto it = c_.find(key);
  return it == c_.end() ? Scalar() : it->second;
}

PairSeries& PairSeries::operator+=(const PairSeries& o) {
  if (o.basis_ != basis_) throw std::invalid_argument("adding series in different bases");
  for (const auto& [k, v] : o.c_) add(k, v);
  return *this;
}

PairSeries& PairSeries::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [k, v] : c_) v *= s;
  return *this;
}

namespace {

using Graded = std::vector<std::vector<std::pair<PairKey, Scalar>>>;

Graded graded(const PairSeries& a) {
  Graded g(a.max_weight() + 1);
  for (const auto& [k, v] : a.coeffs()) g[weight(k)].emplace_back(k, v);
  return g;
}

void require_power(const PairSeries& a, const char* what) {
  if (a.basis() != Basis::Power) throw std::invalid_argument(std::string(what) + " needs the power basis");
}

// acc += s * x * y over the weight-w products of components x, y.
void accumulate(std::map<PairKey, Scalar>& acc, const std::vector<std::pair<PairKey, Scalar>>& x,
                const std::vector<std::pair<PairKey, Scalar>>& y, const Rational& s) {
  for (const auto& [kx, vx] : x) {
    Scalar sx = vx * s;
    for (const auto& [ky, vy] : y) {
      PairKey k{join(kx.first, ky.first), join(kx.second, ky.second)};
      auto [it, inserted] = acc.try_emplace(std::move(k), sx * vy);
      if (!inserted) it->second += sx * vy;
    }
  }
}

}  // namespace

PairSeries operator*(const PairSeries& a, const PairSeries& b) {
  require_power(a, "product");
  require_power(b, "product");
  PairSeries r(Basis::Power, std::min(a.max_weight(), b.max_weight()));
  for (const auto& [ka, va] : a.coeffs())
    for (const auto& [kb, vb] : b.coeffs()) {
      if (weight(ka) + weight(kb) > r.max_weight()) continue;
      r.add({join(ka.first, kb.first), join(ka.second, kb.second)}, va * vb);
    }
  return r;
}

// Graded recurrences with respect to total weight w (Euler operator):
//   exp:  w E_w = sum_{j=1}^{w} j A_j E_{w-j}
//   log:  w G_w = w B_w - sum_{j=1}^{w-1} j G_j B_{w-j},  a = 1 + B
PairSeries series_exp(const PairSeries& a) {
  require_power(a, "series_exp");
  const PairKey one{};
  if (!a.coeff(one).is_zero()) throw std::domain_error("series_exp: nonzero constant term");
  const int W = a.max_weight();
  Graded A = graded(a);
  Graded E(W + 1);
  E[0].emplace_back(one, Scalar(1));
  for (int w = 1; w <= W; ++w) {
    std::map<PairKey, Scalar> acc;
    for (int j = 1; j <= w; ++j)
      if (!A[j].empty() && !E[w - j].empty()) accumulate(acc, A[j], E[w - j], ratio(j, w));
    for (auto& [k, v] : acc)
      if (!v.is_zero()) E[w].emplace_back(k, std::move(v));
  }
  PairSeries r(Basis::Power, W);
  for (const auto& comp : E)
    for (const auto& [k, v] : comp) r.set(k, v);
  return r;
}

PairSeries series_log(const PairSeries& a) {
  require_power(a, "series_log");
  const PairKey one{};
  if (!(a.coeff(one) == Scalar(1))) throw std::domain_error("series_log: constant term must be 1");
  const int W = a.max_weight();
  Graded B = graded(a);
  B[0].clear();
  Graded G(W + 1);
  for (int w = 1; w <= W; ++w) {
    std::map<PairKey, Scalar> acc;
    for (const auto& [k, v] : B[w]) acc.emplace(k, v);
    for (int j = 1; j < w; ++j)
      if (!G[j].empty() && !B[w - j].empty()) accumulate(acc, G[j], B[w - j], ratio(-j, w));
    for (auto& [k, v] : acc)
      if (!v.is_zero()) G[w].emplace_back(k, std::move(v));
  }
  PairSeries r(Basis::Power, W);
  for (const auto& comp : G)
    for (const auto& [k, v] : comp) r.set(k, v);
  return r;
}

PairSeries p_to_schur(const PairSeries& a) {
  require_power(a, "p_to_schur");
  PairSeries r(Basis::Schur, a.max_weight());
  for (const auto& [k, v] : a.coeffs()) {
    const auto& t1 = character_table(k.first.weight());
    const auto& t2 = character_table(k.second.weight());
    int j1 = t1.index_of(k.first), j2 = t2.index_of(k.second);
    for (size_t i1 = 0; i1 < t1.partitions().size(); ++i1) {
      long c1 = static_cast<long>(t1.at(static_cast<int>(i1), j1));
      if (c1 == 0) continue;
      for (size_t i2 = 0; i2 < t2.partitions().size(); ++i2) {
        long c2 = static_cast<long>(t2.at(static_cast<int>(i2), j2));
        if (c2 == 0) continue;
        r.add({t1.partitions()[i1], t2.partitions()[i2]}, v * Rational(Integer(c1) * c2));
      }
    }
  }
  return r;
}

PairSeries schur_to_p(const PairSeries& a) {
  if (a.basis() != Basis::Schur) throw std::invalid_argument("schur_to_p needs the Schur basis");
  PairSeries r(Basis::Power, a.max_weight());
  for (const auto& [k, v] : a.coeffs()) {
    auto e1 = schur_to_power(k.first);
    auto e2 = schur_to_power(k.second);
    for (const auto& [m1, q1] : e1)
      for (const auto& [m2, q2] : e2) r.add({m1, m2}, v * Rational(q1 * q2));
  }
  return r;
}

Integer monomial_eval(const Partition& mu, const Partition& kappa) {
  if (mu.length() > kappa.length()) return 0;
  // Distinct values of mu with multiplicities; a DP over positions of kappa
  // assigns each position either nothing or one still-unused value.
  std::vector<int> vals, mult;
  for (int p : mu.parts()) {
    if (!vals.empty() && vals.back() == p) ++mult.back();
    else {
      vals.push_back(p);
      mult.push_back(1);
    }
  }
  std::map<std::vector<int>, Integer> cur{{mult, 1}};
  for (int x : kappa.parts()) {
    std::map<std::vector<int>, Integer> next;
    for (const auto& [rem, c] : cur) {
      next[rem] += c;
      for (size_t v = 0; v < vals.size(); ++v) {
        if (rem[v] == 0) continue;
        std::vector<int> r2(rem);
        --r2[v];
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(vals[v]));
        next[r2] += c * pw;
      }
    }
    cur = std::move(next);
  }
  auto it = cur.find(std::vector<int>(vals.size(), 0));
  return it == cur.end() ? Integer(0) : it->second;
}

Integer multinomial(int n, const Partition& parts) {
  if (parts.weight() != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  Integer r = factorial(n);
  for (int p : parts.parts()) r /= factorial(p);
  return r;
}

BigReal determinant(std::vector<std::vector<BigReal>> m) {
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  Prec p = m[0][0].prec();
  BigReal det(1, p);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < n; ++r)
      if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
    if (m[piv][c].is_zero()) return BigReal(p);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      BigReal f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

BigReal schur_eval(const Partition& lambda, const std::vector<BigReal>& points) {
  const int n = static_cast<int>(points.size());
  if (n == 0) throw std::invalid_argument("schur_eval: no points");
  Prec p = points[0].prec();
  if (lambda.length() > n) return BigReal(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[i] == points[j]) throw std::domain_error("schur_eval: coincident points");
  std::vector<std::vector<BigReal>> num(n, std::vector<BigReal>(n, BigReal(p)));
  BigReal vandermonde(1, p);
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= n; ++j) num[i][j - 1] = pow(points[i], lambda.part(j) + n - j);
    for (int j = i + 1; j < n; ++j) vandermonde *= points[i] - points[j];
  }
  return determinant(std::move(num)) / vandermonde;
}

BigReal bump_gamburd_residual(const Partition& kappa, const Partition& lambda,
                              const std::vector<BigReal>& points) {
  const int n = static_cast<int>(points.size());
  if (n % 2 != 0 || n == 0) throw std::invalid_argument("bump_gamburd_residual: need 2k points");
  const int k = n / 2;
  Prec p = points[0].prec();
  // a partition longer than its block has a vanishing Schur function there
  BigReal lhs(p);
  if (kappa.length() <= k && lambda.length() <= k) {
    SortMerge sm = sort_merge(kappa, lambda, k, k);
    if (!sm.zero) lhs = schur_eval(sm.mu, points) * static_cast<long>(sm.sign);
  }
  BigReal rhs(p);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<BigReal> A, B;
    for (int i = 0; i < n; ++i) (mask >> i & 1u ? A : B).push_back(points[i]);
    BigReal delta(1, p);
    for (const auto& a : A)
      for (const auto& b : B) delta *= a - b;
    rhs += schur_eval(kappa, A) * schur_eval(lambda, B) / delta;
  }
  return abs(lhs - rhs);
}

}  // namespace zmoments
