#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "stablerep/gfp.hpp"
#include "stablerep/partition.hpp"
#include "stablerep/permrep.hpp"

namespace stablerep {

// Standard Young tableaux of shape lambda; tableau[i][j] holds an element of
// 0..n-1, rows and columns increasing.
std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& lambda);

// Sparse vector in a permutation-module basis: sorted (index, coefficient).
using SparseVecZ = std::vector<std::pair<std::int64_t, std::int64_t>>;

// Standard polytabloids inside M(lambda) and their Gram matrix with respect
// to the permutation-basis-orthonormal form.
struct SpechtData {
  Partition lambda;
  std::vector<std::vector<std::vector<int>>> tableaux;
  std::vector<SparseVecZ> vectors;
  std::vector<std::vector<std::int64_t>> gram;

  std::int64_t count() const { return static_cast<std::int64_t>(vectors.size()); }
};

SpechtData specht_basis(const Partition& lambda);

// rank of the Gram matrix mod p = dim D^lambda; zero exactly for p-singular lambda
std::int64_t irreducible_dim(const Partition& lambda, Prime p);

// Matrices of (1 2) and (1 2 ... n) on some module over F_p.
struct MatrixRep {
  MatrixRep(int n, Prime p, FpMat gen_transposition, FpMat gen_cycle);

  int n;
  Prime p;
  FpMat gen_transposition;
  FpMat gen_cycle;

  std::int64_t dim() const { return gen_transposition.rows(); }
};

MatrixRep perm_module_rep(const Partition& padded_shape, Prime p);
MatrixRep specht_rep(const Partition& lambda, Prime p);
// D^lambda = Specht modulo the radical of its bilinear form; lambda p-regular.
MatrixRep irreducible_rep(const Partition& lambda, Prime p);

// Isomorphism invariants: dimension and traces of a fixed list of group
// elements expressed through the generators.
using Fingerprint = std::vector<std::int64_t>;
Fingerprint fingerprint(const MatrixRep& rep);

struct ChopFactor {
  std::int64_t dim;
  Fingerprint id;

  friend bool operator<(const ChopFactor& a, const ChopFactor& b) {
    return std::tie(a.dim, a.id) < std::tie(b.dim, b.id);
  }
  friend bool operator==(const ChopFactor& a, const ChopFactor& b) {
    return a.dim == b.dim && a.id == b.id;
  }
};

// Composition factors by a randomized (Las Vegas) search: random algebra
// elements, kernel-vector spin-up, Norton's irreducibility certificate.
// The returned multiset is sorted and independent of the seed.
std::vector<ChopFactor> chop(const MatrixRep& rep, std::uint64_t seed);

// Multiplicities [S^{(n-m,m)} : D^{(n-j,j)}] for j = 0..m.
std::vector<int> two_row_decomposition(int n, int m, Prime p, std::uint64_t seed);

}  // namespace stablerep
