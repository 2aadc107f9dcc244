#pragma once

#include <string>
#include <vector>

#include "stablerep/common.hpp"
#include "stablerep/ivpoly.hpp"

namespace stablerep {

// Weakly decreasing sequence of positive integers; empty = the zero partition.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition parse(const std::string& text);  // "a,b,c", "" = empty

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const {  // 1-based, 0 beyond the end
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Finite sequence of nonnegative integers.
using Composition = std::vector<int>;

enum class Order { LessEq, Greater, Incomparable };

// (n - |lambda|, lambda_1, ..., lambda_k); requires n - |lambda| >= lambda_1.
Partition pad(const Partition& lambda, int n);

// Dominance comparison of partitions of equal size.
Order dominance_leq(const Partition& lambda, const Partition& mu);

// Stable order: decided by dominance of pads at a fixed large witness level.
// The empty partition is the unique minimal element.
Order stable_leq(const Partition& lambda, const Partition& mu);

bool is_p_regular(const Partition& lambda, Prime p);

Partition conjugate(const Partition& lambda);

// |lambda|! / prod lambda_i!  (dimension of the permutation module)
BigInt perm_module_dim(const Partition& lambda);

// Partition from unordered nonnegative entries; zeros dropped.
Partition sorted_partition(std::vector<int> entries);

// All partitions of n, for small n.
std::vector<Partition> partitions_of(int n);

}  // namespace stablerep
