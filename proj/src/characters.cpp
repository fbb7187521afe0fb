#include "zmoments/characters.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace zmoments {

namespace {

using Memo = std::map<std::pair<Partition, Partition>, std::int64_t>;

// Beta set of lambda with `len` beads, decreasing.
std::vector<int> beta_set(const Partition& lambda, int len) {
  std::vector<int> b(len);
  for (int i = 1; i <= len; ++i) b[i - 1] = lambda.part(i) + len - i;
  return b;
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  const int len = static_cast<int>(b.size());
  for (int i = 0; i < len; ++i) b[i] -= len - 1 - i;
  return Partition(std::move(b));
}

std::int64_t mn(const Partition& lambda, const Partition& mu, Memo& memo) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = mu.largest();
  Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  std::vector<int> beta = beta_set(lambda, lambda.length());
  std::int64_t total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> nb(beta);
    nb[i] = target;
    std::int64_t c = mn(from_beta(std::move(nb)), rest, memo);
    total += between % 2 ? -c : c;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("mn_character: weights differ");
  Memo memo;
  return mn(lambda, mu, memo);
}

CharacterTable::CharacterTable(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("character table of negative size");
  const auto& ps = partitions_of(n);
  for (size_t i = 0; i < ps.size(); ++i) index_.emplace(ps[i], static_cast<int>(i));
  Memo memo;
  v_.assign(ps.size(), std::vector<std::int64_t>(ps.size()));
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = 0; j < ps.size(); ++j) v_[i][j] = mn(ps[i], ps[j], memo);
}

CharacterTable::CharacterTable(int n, std::vector<std::vector<std::int64_t>> values)
    : n_(n), v_(std::move(values)) {
  const auto& ps = partitions_of(n);
  if (v_.size() != ps.size()) throw std::invalid_argument("character table: wrong row count");
  for (const auto& row : v_)
    if (row.size() != ps.size()) throw std::invalid_argument("character table: wrong column count");
  for (size_t i = 0; i < ps.size(); ++i) index_.emplace(ps[i], static_cast<int>(i));
}

int CharacterTable::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("partition " + p.to_string() + " not of size " + std::to_string(n_));
  return it->second;
}

std::int64_t CharacterTable::operator()(const Partition& lambda, const Partition& mu) const {
  return v_[index_of(lambda)][index_of(mu)];
}

const CharacterTable& character_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto t = std::make_unique<CharacterTable>(n);
  std::lock_guard lock(mu);
  return *cache.emplace(n, std::move(t)).first->second;
}

std::map<Partition, Rational> power_to_schur(const std::map<Partition, Rational>& p_coeffs) {
  std::map<Partition, Rational> out;
  for (const auto& [mu, c] : p_coeffs) {
    if (c == 0) continue;
    const auto& t = character_table(mu.weight());
    int j = t.index_of(mu);
    for (size_t i = 0; i < t.partitions().size(); ++i)
      if (t.at(static_cast<int>(i), j) != 0)
        out[t.partitions()[i]] += c * Rational(static_cast<long>(t.at(static_cast<int>(i), j)));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<Partition, Rational> schur_to_power(const Partition& lambda) {
  const auto& t = character_table(lambda.weight());
  int i = t.index_of(lambda);
  std::map<Partition, Rational> out;
  for (size_t j = 0; j < t.partitions().size(); ++j) {
    std::int64_t c = t.at(i, static_cast<int>(j));
    if (c == 0) continue;
    const Partition& mu = t.partitions()[j];
    out.emplace(mu, ratio(static_cast<long>(c), mu.centralizer()));
  }
  for (auto& [mu, q] : out) q.canonicalize();
  return out;
}

}  // namespace zmoments
