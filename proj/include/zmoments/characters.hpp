#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zmoments/partition.hpp"

namespace zmoments {

// Irreducible characters of S_n. Values fit in 64 bits for n <= 30.
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int size() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_of(n_); }
  int index_of(const Partition& p) const;
  // chi^lambda evaluated on the class of cycle type mu.
  std::int64_t operator()(const Partition& lambda, const Partition& mu) const;
  std::int64_t at(int lambda_index, int mu_index) const { return v_[lambda_index][mu_index]; }
  const std::vector<std::vector<std::int64_t>>& values() const { return v_; }

  // Construct from stored values (cache loading); shape is checked.
  CharacterTable(int n, std::vector<std::vector<std::int64_t>> values);

 private:
  int n_;
  std::map<Partition, int> index_;
  std::vector<std::vector<std::int64_t>> v_;
};

// Memoized, thread-safe.
const CharacterTable& character_table(int n);

// Murnaghan-Nakayama rule, independent of the table cache.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

// Single-alphabet transitions.
// p_mu = sum_lambda chi^lambda(mu) s_lambda
std::map<Partition, Rational> power_to_schur(const std::map<Partition, Rational>& p_coeffs);
// s_lambda = sum_mu chi^lambda(mu) / z_mu p_mu
std::map<Partition, Rational> schur_to_power(const Partition& lambda);

}  // namespace zmoments
