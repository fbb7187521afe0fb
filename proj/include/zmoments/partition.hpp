#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "zmoments/rational.hpp"

namespace zmoments {

// Weakly decreasing sequence of positive integers. Trailing zeros are dropped
// on construction; anything negative or increasing is rejected.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Sorts an arbitrary multiset of non-negative parts.
  static Partition from_multiset(std::vector<int> parts);

  const std::vector<int>& parts() const { return p_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(p_.size()); }
  bool empty() const { return p_.empty(); }
  // 1-based part, zero past the end.
  int part(int i) const { return i >= 1 && i <= length() ? p_[i - 1] : 0; }
  int largest() const { return p_.empty() ? 0 : p_.front(); }

  Partition conjugate() const;
  bool contains(const Partition& o) const;  // Young diagram inclusion
  // m_j: number of parts equal to j, for j = 0..largest (index 0 unused).
  std::vector<int> multiplicities() const;
  Integer centralizer() const;  // z_lambda = prod j^{m_j} m_j!

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.p_ <=> b.p_;
  }

 private:
  std::vector<int> p_;
  int weight_ = 0;
};

// Parts of a and b merged into one partition (power-sum multiplication).
Partition join(const Partition& a, const Partition& b);

// All partitions of n, in reverse lexicographic order: (n), (n-1,1), ...
const std::vector<Partition>& partitions_of(int n);
// Number of partitions of n.
long partition_count(int n);

// (p_1..p_d | q_1..q_d), with p_i = lambda_i - i and q_i = lambda^t_i - i.
struct Frobenius {
  std::vector<int> arms, legs;
};
Frobenius frobenius(const Partition& lambda);

// x_i = p_i + 1/2, y_i = q_i + 1/2.
struct ShiftedFrobenius {
  std::vector<Rational> x, y;
};
ShiftedFrobenius shifted_frobenius(const Partition& lambda);

// Complement of lambda inside the K x L rectangle: the partition whose
// transpose is (L - lambda_K, ..., L - lambda_1). Empty if lambda does not fit.
std::optional<Partition> complement(const Partition& lambda, int K, int L);

// Sorting of (kappa + rho_K) concatenated with (lambda + rho_L).
// `zero` is set when two entries coincide; otherwise mu + rho_{K+L} is the
// decreasing rearrangement and `sign` the sign of the sorting permutation.
struct SortMerge {
  bool zero = false;
  int sign = 1;
  Partition mu;
};
SortMerge sort_merge(const Partition& kappa, const Partition& lambda, int K, int L);

// Number of standard skew tableaux of shape lambda / kappa.
Integer dim_paths(const Partition& kappa, const Partition& lambda);  // Young lattice paths
Integer dim_hook(const Partition& lambda);                           // hook length formula
Integer dim_skew_det(const Partition& kappa, const Partition& lambda);  // factorial determinant

}  // namespace zmoments
