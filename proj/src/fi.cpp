#include "stablerep/fi.hpp"

#include <algorithm>
#include <limits>

namespace stablerep {

Partition Presentation::column(int d) {
  if (d < 0) throw error("column height must be nonnegative");
  return Partition(std::vector<int>(static_cast<std::size_t>(d), 1));
}

void Presentation::validate() const {
  StableObject gen_obj, rel_obj;
  for (int d : generators) gen_obj.summands.push_back(column(d));
  for (int d : relations) rel_obj.summands.push_back(column(d));
  if (!(map.source == rel_obj) || !(map.target == gen_obj))
    throw error("presentation map must go from the relations object to the generators object");
  map.validate();
}

int presentation_threshold(const Presentation& pres) {
  int t = 1;
  for (int d : pres.generators) t = std::max(t, d + 1);
  for (int d : pres.relations) t = std::max(t, d + 1);
  for (int e : pres.relations)
    for (int d : pres.generators)
      t = std::max(t, instantiation_threshold(Presentation::column(e),
                                              Presentation::column(d)));
  // coefficients must be past their sampling bases as well
  for (const auto& row : pres.map.entries)
    for (const HomEntry& entry : row)
      for (const auto& [tau, coeff] : entry)
        t = std::max<int>(t, static_cast<int>(coeff.offset()));
  return t;
}

namespace {

struct BlockSpace {
  std::vector<Partition> shapes;       // padded, level n
  std::vector<PermBasis> bases;
  std::vector<std::int64_t> offsets;   // block start in the direct sum
  std::int64_t total = 0;
};

BlockSpace make_blocks(const std::vector<int>& heights, int n) {
  BlockSpace b;
  for (int d : heights) {
    b.shapes.push_back(pad(Presentation::column(d), n));
    b.bases.emplace_back(b.shapes.back());
    b.offsets.push_back(b.total);
    b.total += b.bases.back().dim();
  }
  return b;
}

// Dense integer matrix of the instantiated presentation map at level n.
std::vector<std::vector<std::int64_t>> concrete_matrix(const Presentation& pres, int n) {
  BlockSpace gen = make_blocks(pres.generators, n);
  BlockSpace rel = make_blocks(pres.relations, n);
  std::vector<std::vector<std::int64_t>> m(
      static_cast<std::size_t>(gen.total),
      std::vector<std::int64_t>(static_cast<std::size_t>(rel.total), 0));
  for (std::size_t src = 0; src < pres.relations.size(); ++src)
    for (std::size_t tgt = 0; tgt < pres.generators.size(); ++tgt)
      for (const auto& [tau, coeff] : pres.map.entries[src][tgt]) {
        BigInt value = coeff.evaluate(n);
        if (value == 0) continue;
        if (value > std::numeric_limits<std::int64_t>::max() ||
            value < std::numeric_limits<std::int64_t>::min())
          throw error("presentation coefficient overflows at level " + std::to_string(n));
        std::int64_t c = static_cast<std::int64_t>(value);
        ConcreteMap h = build_cl_matrix(instantiate(tau, n));
        for (std::int64_t j = 0; j < h.mat.cols; ++j)
          for (const auto& [i, v] : h.mat.col[static_cast<std::size_t>(j)])
            m[static_cast<std::size_t>(gen.offsets[tgt] + i)]
             [static_cast<std::size_t>(rel.offsets[src] + j)] += c * v;
      }
  return m;
}

}  // namespace

CokerInstance instantiate_coker(const Presentation& pres, int n, Prime p) {
  pres.validate();
  if (n < presentation_threshold(pres))
    throw error("level " + std::to_string(n) + " below presentation threshold " +
                std::to_string(presentation_threshold(pres)));
  BlockSpace gen = make_blocks(pres.generators, n);
  std::vector<std::vector<std::int64_t>> mz = concrete_matrix(pres, n);
  const std::int64_t rows = gen.total;
  const std::int64_t cols = mz.empty() ? 0 : static_cast<std::int64_t>(mz[0].size());

  FpMat dense(rows, cols, p);
  for (std::int64_t i = 0; i < rows; ++i)
    for (std::int64_t j = 0; j < cols; ++j)
      dense.set(i, j, mz[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);

  CokerInstance out;
  out.dim = rows - rank(dense);

  // orthogonal model of the quotient: kernel of the transposed map
  FpMat K = nullspace(dense.transpose());
  const std::int64_t k = K.cols();
  if (k == 0) {
    out.invariants = 0;
    return out;
  }
  FpMat stacked(2 * k, k, p);
  for (int g = 0; g < 2; ++g) {
    FpMat gk(rows, k, p);
    for (std::size_t blk = 0; blk < gen.bases.size(); ++blk) {
      std::vector<std::int64_t> perm =
          g ? gen.bases[blk].cycle_perm() : gen.bases[blk].transposition_perm();
      for (std::int64_t i = 0; i < gen.bases[blk].dim(); ++i)
        for (std::int64_t j = 0; j < k; ++j)
          gk.at(gen.offsets[blk] + perm[static_cast<std::size_t>(i)], j) =
              K.at(gen.offsets[blk] + i, j);
    }
    FpMat x = solve_full_col_rank(K, gk);
    for (std::int64_t i = 0; i < k; ++i)
      for (std::int64_t j = 0; j < k; ++j)
        stacked.set(g * k + i, j, x.at(i, j) - (i == j ? 1 : 0));
  }
  out.invariants = k - rank(stacked);
  return out;
}

namespace {

// Rank over Q by fraction-free elimination.
std::int64_t rank_q(std::vector<std::vector<BigInt>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

std::int64_t instantiate_coker_dim_q(const Presentation& pres, int n) {
  pres.validate();
  if (n < presentation_threshold(pres))
    throw error("level below presentation threshold");
  BlockSpace gen = make_blocks(pres.generators, n);
  std::vector<std::vector<std::int64_t>> mz = concrete_matrix(pres, n);
  std::vector<std::vector<BigInt>> big(mz.size());
  for (std::size_t i = 0; i < mz.size(); ++i)
    big[i].assign(mz[i].begin(), mz[i].end());
  return gen.total - rank_q(std::move(big));
}

PeriodResult detect_period(const std::vector<std::int64_t>& values, Prime p) {
  const std::int64_t count = static_cast<std::int64_t>(values.size());
  if (count < 3) throw error("window too short for period detection");
  for (std::int64_t period = 1; 3 * period <= count; period *= p.value()) {
    // smallest preperiod leaving at least two full periods of matches
    for (std::int64_t q = 0; q + 3 * period <= count; ++q) {
      bool ok = true;
      for (std::int64_t i = q; i + period < count && ok; ++i)
        if (values[static_cast<std::size_t>(i)] !=
            values[static_cast<std::size_t>(i + period)])
          ok = false;
      if (ok) return {true, period, static_cast<int>(q)};
    }
  }
  return {false, 0, 0};
}

}  // namespace stablerep
