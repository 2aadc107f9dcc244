#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "stablerep/gfp.hpp"
#include "stablerep/partition.hpp"
#include "stablerep/tabloid.hpp"

namespace stablerep {

// Ordered set-partition of [n] with block sizes lambda_i, stored as the
// label vector pos -> block (1-based labels).
using Labels = std::vector<std::uint8_t>;

// Basis of M(lambda) on ordered set-partitions, in lexicographic label order.
// Index 0 is the canonical element whose blocks are consecutive intervals.
class PermBasis {
public:
  explicit PermBasis(const Partition& shape);

  const Partition& shape() const { return shape_; }
  int n() const { return n_; }
  std::int64_t dim() const { return dim_; }

  Labels labels_of(std::int64_t index) const;
  std::int64_t index_of(const Labels& labels) const;
  Labels canonical() const;  // labels_of(0)

  // Basis permutation induced by the transposition (1 2).
  std::vector<std::int64_t> transposition_perm() const;
  // Basis permutation induced by the n-cycle (1 2 ... n).
  std::vector<std::int64_t> cycle_perm() const;

private:
  Partition shape_;
  int n_ = 0;
  std::int64_t dim_ = 1;
};

// Relative-position tabloid of a pair of set-partitions of [n].
Tabloid relative_position(const Partition& shape_a, const Labels& a,
                          const Partition& shape_b, const Labels& b);

// Sparse matrix over Z, stored per column as sorted (row, value) pairs.
struct SparseMatZ {
  std::int64_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> col;

  SparseMatZ() = default;
  SparseMatZ(std::int64_t rows, std::int64_t cols)
      : rows(rows), cols(cols), col(static_cast<std::size_t>(cols)) {}

  SparseMatZ transpose() const;
  SparseMatZ operator*(const SparseMatZ& o) const;  // this * o
  FpMat to_dense_mod(Prime p) const;

  friend bool operator==(const SparseMatZ& a, const SparseMatZ& b) {
    return a.rows == b.rows && a.cols == b.cols && a.col == b.col;
  }
};

// h^tau realized on set-partition bases.  Columns are indexed by the source
// basis (shape mu(n)), rows by the target basis (shape lambda(n)).
struct ConcreteMap {
  Partition source_shape;  // padded, of n
  Partition target_shape;  // padded, of n
  int n = 0;
  std::int64_t modulus = 0;  // 0 = integers
  SparseMatZ mat;
};

ConcreteMap build_cl_matrix(const Tabloid& tau);
ConcreteMap build_cl_matrix(const Tabloid& tau, Prime p);

// Map sending each basis element to its image under the basis permutation.
ConcreteMap generator_action(const Partition& shape, const std::vector<std::int64_t>& perm);

// True when m commutes with the actions of (1 2) and (1 2 ... n).
bool is_equivariant(const ConcreteMap& m);

// Coefficients c_tau with m = sum c_tau h^tau, read off one source column and
// verified by reconstructing the whole matrix.  Throws if m is not in the
// span (not equivariant).
std::map<StableTabloid, std::int64_t> express_in_cl_basis(const ConcreteMap& m);

// All structure constants of one composable triple at level n:
// counts[a][b][t] is the coefficient of h^taus[t] in h^betas[b] . h^alphas[a].
struct TripleTable {
  Partition mu, lambda, nu;
  int n = 0;
  std::vector<StableTabloid> alphas;  // shape mu,    type lambda
  std::vector<StableTabloid> betas;   // shape lambda, type nu
  std::vector<StableTabloid> taus;    // shape mu,    type nu
  std::vector<std::int64_t> counts;   // [a * B * T + b * T + t]

  std::int64_t count(std::size_t a, std::size_t b, std::size_t t) const {
    return counts[(a * betas.size() + b) * taus.size() + t];
  }
};

TripleTable structure_table(const Partition& mu, const Partition& lambda,
                            const Partition& nu, int n);

// Columns of every h^tau at the canonical source element, as sorted lists of
// target basis indices, aligned with enumerate_stable(mu, lambda).
std::vector<std::vector<std::int64_t>> cl_columns_at_canonical(const Partition& mu,
                                                               const Partition& lambda,
                                                               int n);

// Coefficients of h^beta . h^alpha in the Carter-Lusztig basis at level n.
std::map<StableTabloid, std::int64_t> structure_constants_concrete(
    const StableTabloid& alpha, const StableTabloid& beta, int n);

// Contingency matrices with the given margins (all entries >= 0).
std::vector<std::vector<std::vector<int>>> enumerate_matrices(
    const std::vector<int>& rowsums, const std::vector<int>& colsums);

// M(lambda_padded) (x) M(mu_padded) as a multiset of padded partitions.
std::vector<Partition> tensor_decompose_concrete(const Partition& lambda_padded,
                                                 const Partition& mu_padded);

// Restriction of M(lambda(n)) to S_ell x S_{n-ell} as pairs of partitions.
std::vector<std::pair<Partition, Partition>> restrict_decompose(const Partition& lambda,
                                                                int ell, int n);

// Induction of M(mu) (x) M(lambda(n)) to level n + |mu|.
Partition induce(const Partition& mu, const Partition& lambda, int n);

// Subquotient of a permutation module presented by a concrete map.
struct SubquotientDesc {
  enum class Kind { Cokernel, Kernel };
  Kind kind = Kind::Cokernel;
  ConcreteMap map;

  static SubquotientDesc cokernel(ConcreteMap m) { return {Kind::Cokernel, std::move(m)}; }
  static SubquotientDesc kernel(ConcreteMap m) { return {Kind::Kernel, std::move(m)}; }
  // The whole module M(shape), as the cokernel of the zero map from M((n)).
  static SubquotientDesc whole(const Partition& padded_shape);
};

std::int64_t subquotient_dim(const SubquotientDesc& desc, Prime p);

// Dimension of the invariant space of the subquotient under (1 2) and
// (1 2 ... n); quotients are handled through their orthogonal realization
// as the kernel of the transposed map.
std::int64_t invariants_dim(const SubquotientDesc& desc, Prime p);

}  // namespace stablerep
