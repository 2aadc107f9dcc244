#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "stablerep/ivpoly.hpp"
#include "stablerep/permrep.hpp"
#include "stablerep/tabloid.hpp"

namespace stablerep {

// Formal direct sum of objects [M(lambda)].
struct StableObject {
  std::vector<Partition> summands;

  static StableObject single(Partition lambda) { return {{std::move(lambda)}}; }
  std::size_t count() const { return summands.size(); }

  friend bool operator==(const StableObject& a, const StableObject& b) {
    return a.summands == b.summands;
  }
};

// Formal sum of stable tabloids with integer-valued polynomial coefficients.
using HomEntry = std::map<StableTabloid, IvPoly>;

// Matrix of formal sums between formal direct sums; entry (i, j) goes from
// source summand i to target summand j, so its tabloids have shape
// source.summands[i] and type target.summands[j].
struct StableHom {
  StableObject source;
  StableObject target;
  std::vector<std::vector<HomEntry>> entries;  // [source idx][target idx]

  void validate() const;
  static StableHom zero(StableObject src, StableObject tgt);
  static StableHom identity(const StableObject& obj);
  // Single-term hom between single-summand objects.
  static StableHom generator(const StableTabloid& tau, IvPoly coeff = IvPoly::constant(1));
};

// Entries reduced at a p-adic point.
using HomEntryModP = std::map<StableTabloid, std::int64_t>;
struct StableHomModP {
  StableObject source;
  StableObject target;
  Prime p;
  std::vector<std::vector<HomEntryModP>> entries;
};

// Memo of validated composition polynomials, keyed by the tabloid pair.
class StructureTable {
 public:
  // Coefficients of the composition h^beta . h^alpha as polynomials in the
  // level, interpolated from consecutive concrete levels and validated at two
  // held-out levels (one retry with the sampling base doubled, then failure).
  HomEntry compose_generic(const StableTabloid& alpha, const StableTabloid& beta);

  std::size_t size() const;

 private:
  void fill_triple(const Partition& mu, const Partition& lambda, const Partition& nu);

  mutable std::mutex mutex_;
  std::map<std::pair<StableTabloid, StableTabloid>, HomEntry> cache_;
};

StructureTable& structure_cache();

HomEntry compose_generic(const StableTabloid& alpha, const StableTabloid& beta);

// Sampling base used for the triple (mu, lambda, nu).
int interpolation_base(const Partition& mu, const Partition& lambda, const Partition& nu);

// g after f (f first): source(f) -> target(g); requires target(f) = source(g).
StableHom compose(const StableHom& f, const StableHom& g);

// Transposes the matrix and every tabloid; coefficients unchanged.
StableHom dualize(const StableHom& f);

StableHom operator+(const StableHom& f, const StableHom& g);
StableHom scale(const StableHom& f, const IvPoly& c);

bool hom_equal(const StableHom& f, const StableHom& g);

// Coefficientwise reduction at a p-adic integer.  Coefficients are rebased to
// offset 0 first, so t.exp must cover digits_p of the degree bound.
StableHomModP evaluate_category(const StableHom& f, const PAdicResidue& t);
HomEntryModP evaluate_entry(const HomEntry& entry, const PAdicResidue& t);

// Mod-p composition-table comparison between levels n and m for all
// composable pairs supported on partitions of size <= r.
struct EquivalenceWitness {
  Partition mu, lambda, nu;
  StableTabloid alpha, beta, tau;
  std::int64_t value_n = 0, value_m = 0;  // mod p
};

struct EquivalenceReport {
  int r = 0;
  std::int64_t p = 2;
  int n = 0, m = 0;
  bool size_ok = false;          // n, m > 2r
  bool divisibility_ok = false;  // p^{digits_p(r)} | n - m
  bool weak_divisibility_ok = false;  // p^{ceil log_p r} | n - m
  bool agree = false;
  std::vector<EquivalenceWitness> witnesses;  // capped
};

EquivalenceReport check_perm_equivalence(int r, Prime p, int n, int m,
                                         std::size_t witness_cap = 8, int jobs = 1);

// Stable functors, computed concretely at two consecutive levels with the
// de-padded answers required to agree.
std::vector<Partition> stable_tensor(const Partition& lambda, const Partition& mu);
std::vector<std::pair<Partition, Partition>> stable_restrict(const Partition& lambda, int ell);
Partition stable_induce(const Partition& mu, const Partition& lambda);

// Drops the long first row; requires the result to pad back to the input.
Partition de_pad(const Partition& padded);

}  // namespace stablerep
