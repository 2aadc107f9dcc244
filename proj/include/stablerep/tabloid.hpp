#pragma once

#include <cstdint>
#include <vector>

#include "stablerep/partition.hpp"

namespace stablerep {

// Relative position of a pair of set-partitions: counts[i][j] = number of
// boxes in row i (shape block i) labeled j+1 (type block j+1).
// Row sums are the shape parts, column sums the type parts.
struct Tabloid {
  Partition shape;
  Partition type;
  std::vector<std::vector<int>> counts;

  void validate() const;

  friend bool operator==(const Tabloid& a, const Tabloid& b) {
    return a.shape == b.shape && a.type == b.type && a.counts == b.counts;
  }
};

// Tabloid of shape mu(n), type lambda(n) with the (determined) first row
// dropped: len(mu) rows, len(lambda)+1 columns, column 0 = label 1.
// Row sums are mu_i; for j >= 1 the column-j sum is at most lambda_j.
struct StableTabloid {
  Partition shape;  // mu
  Partition type;   // lambda
  std::vector<std::vector<int>> counts;

  void validate() const;

  // t_{i,i+1} = mu_i; requires shape == type
  static StableTabloid identity(const Partition& mu);

  friend bool operator==(const StableTabloid& a, const StableTabloid& b) {
    return a.shape == b.shape && a.type == b.type && a.counts == b.counts;
  }
  friend bool operator<(const StableTabloid& a, const StableTabloid& b);
};

// All stable tabloids of shape mu and type lambda, in lexicographic order
// on the flattened counts matrix.
std::vector<StableTabloid> enumerate_stable(const Partition& mu, const Partition& lambda);

// Smallest n at which instantiate is defined.
int instantiation_threshold(const Partition& mu, const Partition& lambda);

// Full tabloid of shape mu(n), type lambda(n) whose rows 2.. carry tau.
Tabloid instantiate(const StableTabloid& tau, int n);

// Inverse of instantiate: drop the first row.
StableTabloid de_instantiate(const Tabloid& full);

// Stable tabloid with shape and type exchanged; commutes with matrix
// transposition of the instantiations.  Involution.
StableTabloid transpose_dual(const StableTabloid& tau);

}  // namespace stablerep
