#include "stablerep/modoracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <mutex>
#include <random>
#include <tuple>

namespace stablerep {

std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& lambda) {
  const int n = lambda.size();
  const int rows = lambda.length();
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
  std::vector<int> filled(static_cast<std::size_t>(rows), 0);
  auto rec = [&](auto&& self, int e) -> void {
    if (e == n) {
      out.push_back(t);
      return;
    }
    for (int i = 0; i < rows; ++i) {
      int c = filled[static_cast<std::size_t>(i)];
      if (c >= lambda.part(i + 1)) continue;
      // column-increasing: the box above must already be filled
      if (i > 0 && filled[static_cast<std::size_t>(i - 1)] <= c) continue;
      t[static_cast<std::size_t>(i)].push_back(e);
      ++filled[static_cast<std::size_t>(i)];
      self(self, e + 1);
      --filled[static_cast<std::size_t>(i)];
      t[static_cast<std::size_t>(i)].pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

// All permutations of 0..k-1 with their signs.
std::vector<std::pair<std::vector<int>, int>> signed_permutations(int k) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
    out.emplace_back(perm, inv % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SparseVecZ polytabloid(const Partition& lambda, const std::vector<std::vector<int>>& tableau,
                       const PermBasis& basis) {
  const int n = lambda.size();
  const Partition conj = conjugate(lambda);
  const int cols = lambda.part(1);
  std::vector<std::vector<int>> columns(static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < tableau.size(); ++i)
    for (std::size_t j = 0; j < tableau[i].size(); ++j)
      columns[j].push_back(tableau[i][j]);

  std::vector<std::vector<std::pair<std::vector<int>, int>>> col_perms;
  for (int j = 0; j < cols; ++j) col_perms.push_back(signed_permutations(conj.part(j + 1)));

  std::map<std::int64_t, std::int64_t> acc;
  std::vector<std::size_t> pick(static_cast<std::size_t>(cols), 0);
  Labels labels(static_cast<std::size_t>(n));
  while (true) {
    int sign = 1;
    for (int j = 0; j < cols; ++j) {
      const auto& [perm, s] = col_perms[static_cast<std::size_t>(j)][pick[static_cast<std::size_t>(j)]];
      sign *= s;
      const auto& col = columns[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < col.size(); ++i)
        labels[static_cast<std::size_t>(col[perm[i]])] = static_cast<std::uint8_t>(i + 1);
    }
    acc[basis.index_of(labels)] += sign;
    int j = cols - 1;
    while (j >= 0 &&
           ++pick[static_cast<std::size_t>(j)] == col_perms[static_cast<std::size_t>(j)].size()) {
      pick[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  SparseVecZ v;
  for (const auto& [idx, c] : acc)
    if (c) v.emplace_back(idx, c);
  return v;
}

std::int64_t sparse_dot(const SparseVecZ& a, const SparseVecZ& b) {
  std::int64_t acc = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      ++i;
    else if (a[i].first > b[j].first)
      ++j;
    else
      acc += a[i++].second * b[j++].second;
  }
  return acc;
}

}  // namespace

SpechtData specht_basis(const Partition& lambda) {
  SpechtData data;
  data.lambda = lambda;
  data.tableaux = standard_tableaux(lambda);
  PermBasis basis(lambda);
  for (const auto& t : data.tableaux) data.vectors.push_back(polytabloid(lambda, t, basis));
  const std::size_t s = data.vectors.size();
  data.gram.assign(s, std::vector<std::int64_t>(s, 0));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j)
      data.gram[i][j] = data.gram[j][i] = sparse_dot(data.vectors[i], data.vectors[j]);
  return data;
}

std::int64_t irreducible_dim(const Partition& lambda, Prime p) {
  SpechtData data = specht_basis(lambda);
  const std::int64_t s = data.count();
  FpMat g(s, s, p);
  for (std::int64_t i = 0; i < s; ++i)
    for (std::int64_t j = 0; j < s; ++j)
      g.set(i, j, data.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return rank(std::move(g));
}

MatrixRep::MatrixRep(int n_, Prime p_, FpMat gen_t, FpMat gen_c)
    : n(n_), p(p_), gen_transposition(std::move(gen_t)), gen_cycle(std::move(gen_c)) {
  if (gen_transposition.rows() != gen_transposition.cols() ||
      gen_cycle.rows() != gen_cycle.cols() ||
      gen_transposition.rows() != gen_cycle.rows())
    throw error("generator matrices must be square of equal size");
  // generator relations, spot-checked on a few vectors
  const std::int64_t d = dim();
  std::mt19937_64 rng(0xa5a5a5a5ull + static_cast<std::uint64_t>(d));
  for (int trial = 0; trial < 3 && d > 0; ++trial) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(d));
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p.value()));
    std::vector<std::int64_t> w = gen_transposition.apply(gen_transposition.apply(v));
    if (w != v) throw error("transposition generator does not square to identity");
    w = v;
    for (int i = 0; i < n; ++i) w = gen_cycle.apply(w);
    if (w != v) throw error("cycle generator does not have order dividing n");
  }
}

MatrixRep perm_module_rep(const Partition& padded_shape, Prime p) {
  PermBasis basis(padded_shape);
  const std::int64_t d = basis.dim();
  FpMat t(d, d, p), c(d, d, p);
  std::vector<std::int64_t> tp = basis.transposition_perm();
  std::vector<std::int64_t> cp = basis.cycle_perm();
  for (std::int64_t j = 0; j < d; ++j) {
    t.at(tp[static_cast<std::size_t>(j)], j) = 1;
    c.at(cp[static_cast<std::size_t>(j)], j) = 1;
  }
  return MatrixRep(padded_shape.size(), p, std::move(t), std::move(c));
}

namespace {

FpMat specht_columns(const SpechtData& data, const PermBasis& basis, Prime p) {
  FpMat cols(basis.dim(), data.count(), p);
  for (std::int64_t j = 0; j < data.count(); ++j)
    for (const auto& [idx, c] : data.vectors[static_cast<std::size_t>(j)])
      cols.set(idx, j, c);
  return cols;
}

FpMat permuted_rows(const FpMat& m, const std::vector<std::int64_t>& perm, Prime p) {
  FpMat out(m.rows(), m.cols(), p);
  for (std::int64_t i = 0; i < m.rows(); ++i)
    for (std::int64_t j = 0; j < m.cols(); ++j)
      out.at(perm[static_cast<std::size_t>(i)], j) = m.at(i, j);
  return out;
}

}  // namespace

MatrixRep specht_rep(const Partition& lambda, Prime p) {
  SpechtData data = specht_basis(lambda);
  PermBasis basis(lambda);
  FpMat cols = specht_columns(data, basis, p);
  // both generator images in one elimination
  FpMat tp = permuted_rows(cols, basis.transposition_perm(), p);
  FpMat cp = permuted_rows(cols, basis.cycle_perm(), p);
  FpMat both(cols.rows(), 2 * cols.cols(), p);
  for (std::int64_t i = 0; i < cols.rows(); ++i)
    for (std::int64_t j = 0; j < cols.cols(); ++j) {
      both.at(i, j) = tp.at(i, j);
      both.at(i, cols.cols() + j) = cp.at(i, j);
    }
  FpMat solved = solve_full_col_rank(cols, both);
  const std::int64_t s = cols.cols();
  FpMat t(s, s, p), c(s, s, p);
  for (std::int64_t i = 0; i < s; ++i)
    for (std::int64_t j = 0; j < s; ++j) {
      t.at(i, j) = solved.at(i, j);
      c.at(i, j) = solved.at(i, s + j);
    }
  return MatrixRep(lambda.size(), p, std::move(t), std::move(c));
}

namespace {

// Action induced on the quotient by an invariant subspace (given as columns).
std::pair<FpMat, FpMat> quotient_action(const MatrixRep& rep, const FpMat& subspace) {
  const Prime p(rep.p);
  const std::int64_t d = rep.dim();
  EchelonBasis eb(d, p);
  for (std::int64_t j = 0; j < subspace.cols(); ++j) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(d));
    for (std::int64_t i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = subspace.at(i, j);
    eb.insert(std::move(v));
  }
  std::vector<std::int64_t> comp;
  {
    std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
    for (std::int64_t pc : eb.pivots) is_pivot[static_cast<std::size_t>(pc)] = true;
    for (std::int64_t i = 0; i < d; ++i)
      if (!is_pivot[static_cast<std::size_t>(i)]) comp.push_back(i);
  }
  const std::int64_t q = static_cast<std::int64_t>(comp.size());
  FpMat qt(q, q, p), qc(q, q, p);
  for (int g = 0; g < 2; ++g) {
    const FpMat& G = g ? rep.gen_cycle : rep.gen_transposition;
    FpMat& out = g ? qc : qt;
    for (std::int64_t j = 0; j < q; ++j) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(d), 0);
      e[static_cast<std::size_t>(comp[static_cast<std::size_t>(j)])] = 1;
      std::vector<std::int64_t> w = G.apply(e);
      eb.reduce(w);
      for (std::int64_t i = 0; i < q; ++i)
        out.at(i, j) = w[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] % eb.p;
    }
  }
  return {std::move(qt), std::move(qc)};
}

}  // namespace

MatrixRep irreducible_rep(const Partition& lambda, Prime p) {
  if (!is_p_regular(lambda, p))
    throw error("irreducible quotient is zero for p-singular " + lambda.to_string());
  SpechtData data = specht_basis(lambda);
  const std::int64_t s = data.count();
  FpMat g(s, s, p);
  for (std::int64_t i = 0; i < s; ++i)
    for (std::int64_t j = 0; j < s; ++j)
      g.set(i, j, data.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  FpMat radical = nullspace(g);
  MatrixRep specht = specht_rep(lambda, p);
  if (radical.cols() == 0) return specht;
  auto [qt, qc] = quotient_action(specht, radical);
  return MatrixRep(lambda.size(), p, std::move(qt), std::move(qc));
}

Fingerprint fingerprint(const MatrixRep& rep) {
  const std::int64_t p = rep.p.value();
  const FpMat& T = rep.gen_transposition;
  const FpMat& C = rep.gen_cycle;
  FpMat X = T * C;
  FpMat C2 = C * C;
  std::int64_t tr_x2 = 0, tr_tc2 = 0, tr_cx = 0;
  for (std::int64_t i = 0; i < X.rows(); ++i)
    for (std::int64_t j = 0; j < X.cols(); ++j) {
      tr_x2 = (tr_x2 + X.at(i, j) * X.at(j, i)) % p;
      tr_tc2 = (tr_tc2 + T.at(i, j) * C2.at(j, i)) % p;
      tr_cx = (tr_cx + C.at(i, j) * X.at(j, i)) % p;
    }
  return Fingerprint{rep.dim(), T.trace(), C.trace(), X.trace(), tr_x2, C2.trace(), tr_tc2, tr_cx};
}

namespace {

struct ChopContext {
  Prime p;
  std::mt19937_64 rng;
  std::vector<ChopFactor> factors;
};

std::vector<std::int64_t> column_of(const FpMat& m, std::int64_t j) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(m.rows()));
  for (std::int64_t i = 0; i < m.rows(); ++i) v[static_cast<std::size_t>(i)] = m.at(i, j);
  return v;
}

EchelonBasis spin(const std::vector<std::int64_t>& seed_vec, const FpMat& g1, const FpMat& g2,
                  Prime p) {
  EchelonBasis eb(g1.rows(), p);
  std::vector<std::vector<std::int64_t>> queue;
  if (eb.insert(seed_vec)) queue.push_back(eb.rows.back());
  while (!queue.empty()) {
    std::vector<std::int64_t> v = std::move(queue.back());
    queue.pop_back();
    for (const FpMat* g : {&g1, &g2}) {
      std::vector<std::int64_t> w = g->apply(v);
      if (eb.insert(w)) queue.push_back(eb.rows.back());
    }
  }
  return eb;
}

MatrixRep restrict_to(const MatrixRep& rep, const EchelonBasis& eb) {
  const std::int64_t k = eb.size();
  FpMat t(k, k, rep.p), c(k, k, rep.p);
  for (int g = 0; g < 2; ++g) {
    const FpMat& G = g ? rep.gen_cycle : rep.gen_transposition;
    FpMat& out = g ? c : t;
    for (std::int64_t j = 0; j < k; ++j) {
      std::vector<std::int64_t> w = G.apply(eb.rows[static_cast<std::size_t>(j)]);
      std::vector<std::int64_t> coeffs = eb.reduce(w);
      for (std::int64_t x : w)
        if (x % eb.p) throw error("restriction to a non-invariant subspace");
      for (std::int64_t i = 0; i < k; ++i) out.at(i, j) = coeffs[static_cast<std::size_t>(i)];
    }
  }
  return MatrixRep(rep.n, rep.p, std::move(t), std::move(c));
}

MatrixRep quotient_by(const MatrixRep& rep, const EchelonBasis& eb) {
  FpMat sub(rep.dim(), eb.size(), rep.p);
  for (std::int64_t j = 0; j < eb.size(); ++j)
    for (std::int64_t i = 0; i < rep.dim(); ++i)
      sub.at(i, j) = eb.rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  auto [qt, qc] = quotient_action(rep, sub);
  return MatrixRep(rep.n, rep.p, std::move(qt), std::move(qc));
}

void chop_rec(const MatrixRep& rep, ChopContext& ctx, int depth) {
  const std::int64_t d = rep.dim();
  if (d == 0) return;
  if (d == 1) {
    ctx.factors.push_back(ChopFactor{1, fingerprint(rep)});
    return;
  }
  if (depth > 64) throw error("composition series deeper than expected");
  const std::int64_t p = ctx.p.value();
  const FpMat& T = rep.gen_transposition;
  const FpMat& C = rep.gen_cycle;
  const FpMat TC = T * C;
  const FpMat CT = C * T;
  std::vector<FpMat> words;
  words.push_back(FpMat::identity(d, ctx.p));
  words.push_back(T);
  words.push_back(C);
  words.push_back(TC);
  words.push_back(CT);
  words.push_back(TC * C);
  words.push_back(CT * TC);
  words.push_back(C * TC);

  for (int attempt = 0; attempt < 50; ++attempt) {
    FpMat z(d, d, ctx.p);
    for (const FpMat& w : words) {
      std::int64_t coeff = static_cast<std::int64_t>(ctx.rng() % static_cast<std::uint64_t>(p));
      if (!coeff) continue;
      for (std::int64_t i = 0; i < d; ++i)
        for (std::int64_t j = 0; j < d; ++j)
          z.at(i, j) = (z.at(i, j) + coeff * w.at(i, j)) % p;
    }
    FpMat ker = nullspace(z);
    const std::int64_t nullity = ker.cols();
    if (nullity == 0 || nullity == d) continue;
    // small kernels keep the spin-up and enumeration work low
    if (nullity > 2 && attempt < 20) continue;

    // enumerate the kernel projectively when that is feasible
    bool full_enumeration = true;
    std::vector<std::vector<std::int64_t>> candidates;
    double proj = (std::pow(static_cast<double>(p), static_cast<double>(nullity)) - 1) / (p - 1);
    if (proj <= 1024) {
      std::vector<std::int64_t> coeffs(static_cast<std::size_t>(nullity), 0);
      while (true) {
        std::int64_t carry_pos = nullity - 1;
        while (carry_pos >= 0 && ++coeffs[static_cast<std::size_t>(carry_pos)] == p) {
          coeffs[static_cast<std::size_t>(carry_pos)] = 0;
          --carry_pos;
        }
        if (carry_pos < 0) break;
        std::int64_t lead = -1;
        for (std::int64_t i = 0; i < nullity; ++i)
          if (coeffs[static_cast<std::size_t>(i)]) {
            lead = coeffs[static_cast<std::size_t>(i)];
            break;
          }
        if (lead != 1) continue;  // one representative per line
        std::vector<std::int64_t> v(static_cast<std::size_t>(d), 0);
        for (std::int64_t i = 0; i < nullity; ++i) {
          std::int64_t cf = coeffs[static_cast<std::size_t>(i)];
          if (!cf) continue;
          for (std::int64_t r = 0; r < d; ++r)
            v[static_cast<std::size_t>(r)] =
                (v[static_cast<std::size_t>(r)] + cf * ker.at(r, i)) % p;
        }
        candidates.push_back(std::move(v));
      }
    } else {
      full_enumeration = false;
      for (std::int64_t j = 0; j < nullity; ++j) candidates.push_back(column_of(ker, j));
    }

    bool split = false;
    EchelonBasis found(d, ctx.p);
    for (const auto& v : candidates) {
      EchelonBasis span = spin(v, T, C, ctx.p);
      if (span.size() > 0 && span.size() < d) {
        found = std::move(span);
        split = true;
        break;
      }
    }
    if (split) {
      MatrixRep sub = restrict_to(rep, found);
      MatrixRep quo = quotient_by(rep, found);
      chop_rec(sub, ctx, depth + 1);
      chop_rec(quo, ctx, depth + 1);
      return;
    }
    if (!full_enumeration) continue;  // inconclusive; try another element

    // Norton: every kernel vector generates; one transpose-kernel vector must too
    FpMat zt = z.transpose();
    FpMat kert = nullspace(zt);
    FpMat Tt = T.transpose(), Ct = C.transpose();
    EchelonBasis dual = spin(column_of(kert, 0), Tt, Ct, ctx.p);
    if (dual.size() == d) {
      ctx.factors.push_back(ChopFactor{d, fingerprint(rep)});
      return;
    }
    // the annihilator of a proper dual submodule is a proper submodule
    FpMat rows_mat(dual.size(), d, ctx.p);
    for (std::int64_t i = 0; i < dual.size(); ++i)
      for (std::int64_t j = 0; j < d; ++j)
        rows_mat.at(i, j) = dual.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    FpMat ann = nullspace(rows_mat);
    EchelonBasis sub_basis(d, ctx.p);
    for (std::int64_t j = 0; j < ann.cols(); ++j) sub_basis.insert(column_of(ann, j));
    if (sub_basis.size() == 0 || sub_basis.size() == d)
      throw error("dual certificate produced a trivial subspace");
    MatrixRep sub = restrict_to(rep, sub_basis);
    MatrixRep quo = quotient_by(rep, sub_basis);
    chop_rec(sub, ctx, depth + 1);
    chop_rec(quo, ctx, depth + 1);
    return;
  }
  throw error("composition factor search did not terminate");
}

}  // namespace

std::vector<ChopFactor> chop(const MatrixRep& rep, std::uint64_t seed) {
  ChopContext ctx{rep.p, std::mt19937_64(seed ^ 0x5eed5eed5eed5eedull), {}};
  chop_rec(rep, ctx, 0);
  std::sort(ctx.factors.begin(), ctx.factors.end());
  return ctx.factors;
}

std::vector<int> two_row_decomposition(int n, int m, Prime p, std::uint64_t seed) {
  if (m < 0 || 2 * m > n) throw error("two_row_decomposition needs m <= n/2");
  std::vector<int> lam_parts;
  lam_parts.push_back(n - m);
  if (m > 0) lam_parts.push_back(m);
  Partition lambda{lam_parts};
  std::vector<ChopFactor> factors = chop(specht_rep(lambda, p), seed);

  // reference fingerprints for the possible factors; zero quotients excluded
  static std::mutex ref_mutex;
  static std::map<std::tuple<int, int, std::int64_t>, Fingerprint> ref_cache;
  std::vector<std::pair<int, Fingerprint>> refs;
  for (int j = 0; j <= m; ++j) {
    std::vector<int> parts;
    parts.push_back(n - j);
    if (j > 0) parts.push_back(j);
    Partition mu{parts};
    if (!is_p_regular(mu, p)) continue;
    std::tuple<int, int, std::int64_t> key{n, j, p.value()};
    {
      std::lock_guard<std::mutex> lock(ref_mutex);
      auto it = ref_cache.find(key);
      if (it != ref_cache.end()) {
        refs.emplace_back(j, it->second);
        continue;
      }
    }
    Fingerprint fp = fingerprint(irreducible_rep(mu, p));
    {
      std::lock_guard<std::mutex> lock(ref_mutex);
      ref_cache.emplace(key, fp);
    }
    refs.emplace_back(j, std::move(fp));
  }
  for (std::size_t a = 0; a < refs.size(); ++a)
    for (std::size_t b = a + 1; b < refs.size(); ++b)
      if (refs[a].second == refs[b].second)
        throw error("reference factors are not separated by the fingerprint");

  std::vector<int> mult(static_cast<std::size_t>(m) + 1, 0);
  for (const ChopFactor& f : factors) {
    int match = -1;
    for (const auto& [j, ref] : refs)
      if (ref == f.id) {
        match = j;
        break;
      }
    if (match < 0) throw error("composition factor matches no two-row irreducible");
    ++mult[static_cast<std::size_t>(match)];
  }
  return mult;
}

}  // namespace stablerep
