#include "zmoments/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace zmoments {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
  while (!p_.empty() && p_.back() == 0) p_.pop_back();
  for (size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && p_[i] > p_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    weight_ += p_[i];
  }
}

Partition Partition::from_multiset(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> t(largest(), 0);
  for (int r : p_)
    for (int j = 0; j < r; ++j) ++t[j];
  return Partition(std::move(t));
}

bool Partition::contains(const Partition& o) const {
  if (o.length() > length()) return false;
  for (int i = 0; i < o.length(); ++i)
    if (o.p_[i] > p_[i]) return false;
  return true;
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(largest() + 1, 0);
  for (int r : p_) ++m[r];
  return m;
}

Integer Partition::centralizer() const {
  Integer z = 1;
  auto m = multiplicities();
  for (size_t j = 1; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), j, m[j]);
    z *= pw * factorial(m[j]);
  }
  return z;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < p_.size(); ++i) s += (i ? "," : "") + std::to_string(p_[i]);
  return s + ")";
}

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> v;
  v.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(v), std::greater<>());
  return Partition(std::move(v));
}

namespace {

void generate(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> cur;
  generate(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

long partition_count(int n) { return static_cast<long>(partitions_of(n).size()); }

Frobenius frobenius(const Partition& lambda) {
  Frobenius f;
  Partition t = lambda.conjugate();
  for (int i = 1; i <= lambda.length() && lambda.part(i) >= i; ++i) {
    f.arms.push_back(lambda.part(i) - i);
    f.legs.push_back(t.part(i) - i);
  }
  return f;
}

ShiftedFrobenius shifted_frobenius(const Partition& lambda) {
  Frobenius f = frobenius(lambda);
  ShiftedFrobenius s;
  for (int a : f.arms) s.x.push_back(Rational(2 * a + 1, 2));
  for (int b : f.legs) s.y.push_back(Rational(2 * b + 1, 2));
  return s;
}

std::optional<Partition> complement(const Partition& lambda, int K, int L) {
  if (K < 0 || L < 0) throw std::invalid_argument("complement: negative rectangle");
  if (lambda.length() > K || lambda.largest() > L) return std::nullopt;
  std::vector<int> t(K);
  for (int i = 0; i < K; ++i) t[i] = L - lambda.part(K - i);
  return Partition(std::move(t)).conjugate();
}

SortMerge sort_merge(const Partition& kappa, const Partition& lambda, int K, int L) {
  if (kappa.length() > K || lambda.length() > L)
    throw std::invalid_argument("sort_merge: partition longer than its block");
  std::vector<int> e;
  e.reserve(K + L);
  for (int i = 1; i <= K; ++i) e.push_back(kappa.part(i) + K - i);
  for (int i = 1; i <= L; ++i) e.push_back(lambda.part(i) + L - i);
  SortMerge r;
  // sign of the permutation sorting e into decreasing order = (-1)^{inversions}
  long inversions = 0;
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = i + 1; j < e.size(); ++j) {
      if (e[i] == e[j]) {
        r.zero = true;
        r.sign = 0;
        return r;
      }
      if (e[i] < e[j]) ++inversions;
    }
  r.sign = inversions % 2 ? -1 : 1;
  std::sort(e.begin(), e.end(), std::greater<>());
  const int n = K + L;
  for (int i = 0; i < n; ++i) e[i] -= n - 1 - i;
  r.mu = Partition(std::move(e));
  return r;
}

namespace {

Integer dim_paths_rec(const Partition& kappa, const Partition& lambda,
                      std::map<Partition, Integer>& memo) {
  if (lambda.weight() == kappa.weight()) return lambda == kappa ? 1 : 0;
  if (!lambda.contains(kappa)) return 0;
  auto it = memo.find(lambda);
  if (it != memo.end()) return it->second;
  Integer total = 0;
  std::vector<int> p = lambda.parts();
  for (size_t i = 0; i < p.size(); ++i) {
    bool corner = (i + 1 == p.size()) || p[i + 1] < p[i];
    if (!corner) continue;
    --p[i];
    total += dim_paths_rec(kappa, Partition(p), memo);
    ++p[i];
  }
  memo.emplace(lambda, total);
  return total;
}

}  // namespace

Integer dim_paths(const Partition& kappa, const Partition& lambda) {
  static std::mutex mu;
  static std::map<std::pair<Partition, Partition>, Integer> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({kappa, lambda});
    if (it != cache.end()) return it->second;
  }
  std::map<Partition, Integer> memo;
  Integer d = dim_paths_rec(kappa, lambda, memo);
  std::lock_guard lock(mu);
  cache.emplace(std::make_pair(kappa, lambda), d);
  return d;
}

Integer dim_hook(const Partition& lambda) {
  Partition t = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) hooks *= lambda.part(i) - j + t.part(j) - i + 1;
  return factorial(lambda.weight()) / hooks;
}

Integer dim_skew_det(const Partition& kappa, const Partition& lambda) {
  const int n = lambda.length();
  if (kappa.weight() > lambda.weight() || kappa.length() > n) return 0;
  if (n == 0) return 1;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int m = lambda.part(i) - kappa.part(j) - i + j;
      a[i - 1][j - 1] = m < 0 ? Rational(0) : Rational(1, factorial(m));
    }
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  Rational d = det * Rational(factorial(lambda.weight() - kappa.weight()));
  if (d.get_den() != 1) throw std::logic_error("dim_skew_det: non-integral determinant");
  return d.get_num();
}

}  // namespace zmoments
