#include "stablerep/permrep.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_map>

namespace stablerep {

namespace {

std::int64_t checked_dim(const Partition& shape) {
  BigInt dim = perm_module_dim(shape);
  if (dim > basis_budget())
    throw error("basis of M(" + shape.to_string() + ") has " + dim.str() +
                " elements, over the budget of " + std::to_string(basis_budget()));
  return static_cast<std::int64_t>(dim);
}

}  // namespace

PermBasis::PermBasis(const Partition& shape) : shape_(shape), n_(shape.size()) {
  dim_ = checked_dim(shape);
}

Labels PermBasis::labels_of(std::int64_t index) const {
  if (index < 0 || index >= dim_) throw error("basis index out of range");
  std::vector<std::int64_t> remaining(static_cast<std::size_t>(shape_.length()) + 1, 0);
  for (int i = 1; i <= shape_.length(); ++i)
    remaining[static_cast<std::size_t>(i)] = shape_.part(i);
  Labels labels(static_cast<std::size_t>(n_));
  std::int64_t multinom = dim_;
  std::int64_t left = n_;
  for (int pos = 0; pos < n_; ++pos) {
    for (int v = 1; v <= shape_.length(); ++v) {
      std::int64_t m = remaining[static_cast<std::size_t>(v)];
      if (!m) continue;
      std::int64_t block = multinom * m / left;  // count with labels[pos] = v
      if (index < block) {
        labels[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(v);
        multinom = block;
        --remaining[static_cast<std::size_t>(v)];
        break;
      }
      index -= block;
    }
    --left;
  }
  return labels;
}

std::int64_t PermBasis::index_of(const Labels& labels) const {
  if (static_cast<int>(labels.size()) != n_) throw error("label vector length mismatch");
  std::vector<std::int64_t> remaining(static_cast<std::size_t>(shape_.length()) + 1, 0);
  for (int i = 1; i <= shape_.length(); ++i)
    remaining[static_cast<std::size_t>(i)] = shape_.part(i);
  std::int64_t rank = 0;
  std::int64_t multinom = dim_;
  std::int64_t left = n_;
  for (int pos = 0; pos < n_; ++pos) {
    int v = labels[static_cast<std::size_t>(pos)];
    for (int w = 1; w < v; ++w)
      if (remaining[static_cast<std::size_t>(w)])
        rank += multinom * remaining[static_cast<std::size_t>(w)] / left;
    multinom = multinom * remaining[static_cast<std::size_t>(v)] / left;
    --remaining[static_cast<std::size_t>(v)];
    --left;
  }
  return rank;
}

Labels PermBasis::canonical() const {
  Labels labels(static_cast<std::size_t>(n_));
  int pos = 0;
  for (int i = 1; i <= shape_.length(); ++i)
    for (int j = 0; j < shape_.part(i); ++j)
      labels[static_cast<std::size_t>(pos++)] = static_cast<std::uint8_t>(i);
  return labels;
}

std::vector<std::int64_t> PermBasis::transposition_perm() const {
  std::vector<std::int64_t> perm(static_cast<std::size_t>(dim_));
  for (std::int64_t i = 0; i < dim_; ++i) {
    Labels l = labels_of(i);
    if (n_ >= 2) std::swap(l[0], l[1]);
    perm[static_cast<std::size_t>(i)] = index_of(l);
  }
  return perm;
}

std::vector<std::int64_t> PermBasis::cycle_perm() const {
  std::vector<std::int64_t> perm(static_cast<std::size_t>(dim_));
  for (std::int64_t i = 0; i < dim_; ++i) {
    Labels l = labels_of(i);
    if (n_ >= 2) std::rotate(l.rbegin(), l.rbegin() + 1, l.rend());
    perm[static_cast<std::size_t>(i)] = index_of(l);
  }
  return perm;
}

Tabloid relative_position(const Partition& shape_a, const Labels& a,
                          const Partition& shape_b, const Labels& b) {
  if (a.size() != b.size()) throw error("relative position of unequal levels");
  Tabloid t;
  t.shape = shape_a;
  t.type = shape_b;
  t.counts.assign(static_cast<std::size_t>(shape_a.length()),
                  std::vector<int>(static_cast<std::size_t>(shape_b.length()), 0));
  for (std::size_t pos = 0; pos < a.size(); ++pos)
    ++t.counts[static_cast<std::size_t>(a[pos] - 1)][static_cast<std::size_t>(b[pos] - 1)];
  return t;
}

SparseMatZ SparseMatZ::transpose() const {
  SparseMatZ t(cols, rows);
  for (std::int64_t j = 0; j < cols; ++j)
    for (const auto& [i, v] : col[static_cast<std::size_t>(j)])
      t.col[static_cast<std::size_t>(i)].emplace_back(j, v);
  return t;
}

SparseMatZ SparseMatZ::operator*(const SparseMatZ& o) const {
  if (cols != o.rows) throw error("sparse product shape mismatch");
  SparseMatZ out(rows, o.cols);
  std::vector<std::int64_t> dense(static_cast<std::size_t>(rows), 0);
  std::vector<std::int64_t> touched;
  for (std::int64_t j = 0; j < o.cols; ++j) {
    touched.clear();
    for (const auto& [k, vk] : o.col[static_cast<std::size_t>(j)])
      for (const auto& [i, vi] : col[static_cast<std::size_t>(k)]) {
        if (!dense[static_cast<std::size_t>(i)]) touched.push_back(i);
        dense[static_cast<std::size_t>(i)] += vk * vi;
      }
    std::sort(touched.begin(), touched.end());
    auto& out_col = out.col[static_cast<std::size_t>(j)];
    for (std::int64_t i : touched) {
      if (dense[static_cast<std::size_t>(i)])
        out_col.emplace_back(i, dense[static_cast<std::size_t>(i)]);
      dense[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

FpMat SparseMatZ::to_dense_mod(Prime p) const {
  FpMat m(rows, cols, p);
  for (std::int64_t j = 0; j < cols; ++j)
    for (const auto& [i, v] : col[static_cast<std::size_t>(j)]) m.set(i, j, v % p.value());
  return m;
}

namespace {

// All orderings of the multiset {label j+1 with multiplicity row[j]}.
std::vector<Labels> multiset_orderings(const std::vector<int>& row) {
  Labels base;
  for (std::size_t j = 0; j < row.size(); ++j)
    for (int c = 0; c < row[j]; ++c) base.push_back(static_cast<std::uint8_t>(j + 1));
  std::vector<Labels> out;
  std::sort(base.begin(), base.end());
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

ConcreteMap build_cl_matrix_impl(const Tabloid& tau, std::int64_t modulus) {
  tau.validate();
  ConcreteMap m;
  m.source_shape = tau.shape;
  m.target_shape = tau.type;
  m.n = tau.shape.size();
  m.modulus = modulus;
  PermBasis source(tau.shape);
  PermBasis target(tau.type);
  m.mat = SparseMatZ(target.dim(), source.dim());

  const int rows = tau.shape.length();
  std::vector<std::vector<Labels>> per_block;
  std::int64_t per_column = 1;
  per_block.reserve(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    per_block.push_back(multiset_orderings(tau.counts[static_cast<std::size_t>(i)]));
    per_column *= static_cast<std::int64_t>(per_block.back().size());
  }
  if (per_column * source.dim() > 8 * basis_budget())
    throw error("Carter-Lusztig matrix would have " +
                std::to_string(per_column * source.dim()) + " entries, over budget");

  std::vector<std::vector<int>> positions(static_cast<std::size_t>(rows));
  Labels b(static_cast<std::size_t>(m.n));
  for (std::int64_t a_idx = 0; a_idx < source.dim(); ++a_idx) {
    Labels a = source.labels_of(a_idx);
    for (auto& v : positions) v.clear();
    for (int pos = 0; pos < m.n; ++pos)
      positions[static_cast<std::size_t>(a[static_cast<std::size_t>(pos)] - 1)].push_back(pos);
    auto& out_col = m.mat.col[static_cast<std::size_t>(a_idx)];
    // odometer over the per-block orderings
    std::vector<std::size_t> pick(static_cast<std::size_t>(rows), 0);
    while (true) {
      for (int i = 0; i < rows; ++i) {
        const Labels& seq = per_block[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
        const auto& ps = positions[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < ps.size(); ++k)
          b[static_cast<std::size_t>(ps[k])] = seq[k];
      }
      out_col.emplace_back(target.index_of(b), 1);
      int i = rows - 1;
      while (i >= 0 && ++pick[static_cast<std::size_t>(i)] ==
                           per_block[static_cast<std::size_t>(i)].size()) {
        pick[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
    std::sort(out_col.begin(), out_col.end());
  }
  return m;
}

}  // namespace

ConcreteMap build_cl_matrix(const Tabloid& tau) { return build_cl_matrix_impl(tau, 0); }

ConcreteMap build_cl_matrix(const Tabloid& tau, Prime p) {
  return build_cl_matrix_impl(tau, p.value());
}

ConcreteMap generator_action(const Partition& shape, const std::vector<std::int64_t>& perm) {
  ConcreteMap m;
  m.source_shape = shape;
  m.target_shape = shape;
  m.n = shape.size();
  m.mat = SparseMatZ(static_cast<std::int64_t>(perm.size()),
                     static_cast<std::int64_t>(perm.size()));
  for (std::size_t j = 0; j < perm.size(); ++j)
    m.mat.col[j].emplace_back(perm[j], 1);
  return m;
}

bool is_equivariant(const ConcreteMap& m) {
  PermBasis source(m.source_shape);
  PermBasis target(m.target_shape);
  for (int g = 0; g < 2; ++g) {
    std::vector<std::int64_t> ps = g ? source.cycle_perm() : source.transposition_perm();
    std::vector<std::int64_t> pt = g ? target.cycle_perm() : target.transposition_perm();
    for (std::int64_t j = 0; j < m.mat.cols; ++j) {
      // g . column(j) must equal column(g . j)
      std::vector<std::pair<std::int64_t, std::int64_t>> moved;
      for (const auto& [i, v] : m.mat.col[static_cast<std::size_t>(j)])
        moved.emplace_back(pt[static_cast<std::size_t>(i)], v);
      std::sort(moved.begin(), moved.end());
      if (moved != m.mat.col[static_cast<std::size_t>(ps[static_cast<std::size_t>(j)])])
        return false;
    }
  }
  return true;
}

namespace {

std::string stable_key_from_full(const std::vector<std::vector<int>>& full_counts) {
  std::string key;
  key.reserve((full_counts.size() - 1) * (full_counts.empty() ? 0 : full_counts[0].size()));
  for (std::size_t i = 1; i < full_counts.size(); ++i)
    for (int v : full_counts[i]) key.push_back(static_cast<char>(v));
  return key;
}

std::string stable_key(const StableTabloid& t) {
  std::string key;
  for (const auto& row : t.counts)
    for (int v : row) key.push_back(static_cast<char>(v));
  return key;
}

}  // namespace

std::map<StableTabloid, std::int64_t> express_in_cl_basis(const ConcreteMap& m) {
  if (m.modulus != 0) throw error("express_in_cl_basis expects an integer matrix");
  PermBasis source(m.source_shape);
  PermBasis target(m.target_shape);
  if (source.dim() * target.dim() > 8 * basis_budget())
    throw error("express_in_cl_basis: matrix too large to verify");

  std::vector<int> mu_rest(m.source_shape.parts().begin() + !m.source_shape.empty(),
                           m.source_shape.parts().end());
  std::vector<int> la_rest(m.target_shape.parts().begin() + !m.target_shape.empty(),
                           m.target_shape.parts().end());
  Partition mu(mu_rest), lambda(la_rest);

  std::vector<StableTabloid> taus = enumerate_stable(mu, lambda);
  std::unordered_map<std::string, std::size_t> tau_index;
  for (std::size_t t = 0; t < taus.size(); ++t) tau_index[stable_key(taus[t])] = t;

  std::vector<std::int64_t> column(static_cast<std::size_t>(target.dim()), 0);
  for (const auto& [i, v] : m.mat.col[0]) column[static_cast<std::size_t>(i)] = v;

  // one coefficient per relative position, constant across the orbit
  std::vector<std::int64_t> coeff(taus.size(), 0);
  std::vector<bool> seen(taus.size(), false);
  Labels a0 = source.canonical();
  for (std::int64_t r = 0; r < target.dim(); ++r) {
    Labels b = target.labels_of(r);
    Tabloid full = relative_position(m.source_shape, a0, m.target_shape, b);
    auto it = tau_index.find(stable_key_from_full(full.counts));
    if (it == tau_index.end()) throw error("relative position outside the stable set");
    std::size_t t = it->second;
    std::int64_t v = column[static_cast<std::size_t>(r)];
    if (!seen[t]) {
      coeff[t] = v;
      seen[t] = true;
    } else if (coeff[t] != v) {
      throw error("not equivariant: inconsistent coefficients within one relative position");
    }
  }

  // full reconstruction check
  for (std::int64_t j = 0; j < source.dim(); ++j) {
    Labels a = source.labels_of(j);
    std::vector<std::int64_t> expect(static_cast<std::size_t>(target.dim()), 0);
    for (std::int64_t r = 0; r < target.dim(); ++r) {
      Labels b = target.labels_of(r);
      Tabloid full = relative_position(m.source_shape, a, m.target_shape, b);
      expect[static_cast<std::size_t>(r)] = coeff[tau_index.at(stable_key_from_full(full.counts))];
    }
    std::vector<std::int64_t> actual(static_cast<std::size_t>(target.dim()), 0);
    for (const auto& [i, v] : m.mat.col[static_cast<std::size_t>(j)])
      actual[static_cast<std::size_t>(i)] = v;
    if (expect != actual) throw error("not equivariant: reconstruction mismatch");
  }

  std::map<StableTabloid, std::int64_t> out;
  for (std::size_t t = 0; t < taus.size(); ++t)
    if (seen[t] && coeff[t] != 0) out[taus[t]] = coeff[t];
  return out;
}

namespace {

struct TripleKey {
  std::string mu, lambda, nu;
  int n;
  bool operator==(const TripleKey& o) const {
    return n == o.n && mu == o.mu && lambda == o.lambda && nu == o.nu;
  }
};

struct TripleKeyHash {
  std::size_t operator()(const TripleKey& k) const {
    std::hash<std::string> h;
    return h(k.mu) ^ (h(k.lambda) << 1) ^ (h(k.nu) << 2) ^
           static_cast<std::size_t>(k.n) * 0x9e3779b97f4a7c15ull;
  }
};

std::mutex g_table_mutex;
std::unordered_map<TripleKey, std::shared_ptr<const TripleTable>, TripleKeyHash> g_table_cache;

TripleTable compute_structure_table(const Partition& mu, const Partition& lambda,
                                    const Partition& nu, int n) {
  TripleTable table;
  table.mu = mu;
  table.lambda = lambda;
  table.nu = nu;
  table.n = n;
  if (n < instantiation_threshold(mu, lambda) || n < instantiation_threshold(lambda, nu) ||
      n < instantiation_threshold(mu, nu))
    throw error("structure table level " + std::to_string(n) + " below threshold");
  table.alphas = enumerate_stable(mu, lambda);
  table.betas = enumerate_stable(lambda, nu);
  table.taus = enumerate_stable(mu, nu);

  Partition mupad = pad(mu, n), lampad = pad(lambda, n), nupad = pad(nu, n);
  PermBasis lam_basis(lampad);

  // canonical A and one representative C per tau, in relative position tau to A
  Labels a0;
  {
    PermBasis mu_basis(mupad);
    a0 = mu_basis.canonical();
  }
  std::vector<Labels> c_reps;
  for (const StableTabloid& tau : table.taus) {
    Tabloid full = instantiate(tau, n);
    Labels c(static_cast<std::size_t>(n));
    // fill A's block i (consecutive positions) with labels per row i of tau(n)
    std::size_t pos = 0;
    for (std::size_t i = 0; i < full.counts.size(); ++i)
      for (std::size_t j = 0; j < full.counts[i].size(); ++j)
        for (int ccount = 0; ccount < full.counts[i][j]; ++ccount)
          c[pos++] = static_cast<std::uint8_t>(j + 1);
    if (pos != static_cast<std::size_t>(n)) throw error("representative fill mismatch");
    c_reps.push_back(std::move(c));
  }

  std::unordered_map<std::string, std::size_t> alpha_index, beta_index;
  for (std::size_t i = 0; i < table.alphas.size(); ++i)
    alpha_index[stable_key(table.alphas[i])] = i;
  for (std::size_t i = 0; i < table.betas.size(); ++i)
    beta_index[stable_key(table.betas[i])] = i;

  const std::size_t A = table.alphas.size(), B = table.betas.size(), T = table.taus.size();
  table.counts.assign(A * B * T, 0);

  const int rows_mu = mupad.length(), cols_lam = lampad.length();
  const int rows_lam = lampad.length(), cols_nu = nupad.length();
  std::vector<int> cnt_a(static_cast<std::size_t>(rows_mu * cols_lam));
  std::vector<int> cnt_b(static_cast<std::size_t>(rows_lam * cols_nu));
  std::string key_a, key_b;

  Labels v = lam_basis.canonical();
  std::vector<std::size_t> beta_of_tau(T);
  do {
    // alpha bucket: relative position of (A, B)
    std::fill(cnt_a.begin(), cnt_a.end(), 0);
    for (int pos = 0; pos < n; ++pos)
      ++cnt_a[static_cast<std::size_t>((a0[static_cast<std::size_t>(pos)] - 1) * cols_lam +
                                       v[static_cast<std::size_t>(pos)] - 1)];
    key_a.assign(cnt_a.size() - static_cast<std::size_t>(cols_lam), 0);
    for (std::size_t i = static_cast<std::size_t>(cols_lam); i < cnt_a.size(); ++i)
      key_a[i - static_cast<std::size_t>(cols_lam)] = static_cast<char>(cnt_a[i]);
    auto ita = alpha_index.find(key_a);
    if (ita == alpha_index.end()) throw error("alpha bucket missing");
    const std::size_t ia = ita->second;

    for (std::size_t t = 0; t < T; ++t) {
      std::fill(cnt_b.begin(), cnt_b.end(), 0);
      const Labels& c = c_reps[t];
      for (int pos = 0; pos < n; ++pos)
        ++cnt_b[static_cast<std::size_t>((v[static_cast<std::size_t>(pos)] - 1) * cols_nu +
                                         c[static_cast<std::size_t>(pos)] - 1)];
      key_b.assign(cnt_b.size() - static_cast<std::size_t>(cols_nu), 0);
      for (std::size_t i = static_cast<std::size_t>(cols_nu); i < cnt_b.size(); ++i)
        key_b[i - static_cast<std::size_t>(cols_nu)] = static_cast<char>(cnt_b[i]);
      auto itb = beta_index.find(key_b);
      if (itb == beta_index.end()) throw error("beta bucket missing");
      beta_of_tau[t] = itb->second;
    }
    for (std::size_t t = 0; t < T; ++t)
      ++table.counts[(ia * B + beta_of_tau[t]) * T + t];
  } while (std::next_permutation(v.begin(), v.end()));

  return table;
}

}  // namespace

TripleTable structure_table(const Partition& mu, const Partition& lambda,
                            const Partition& nu, int n) {
  TripleKey key{mu.to_string(), lambda.to_string(), nu.to_string(), n};
  {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_table_cache.find(key);
    if (it != g_table_cache.end()) return *it->second;
  }
  auto table = std::make_shared<const TripleTable>(compute_structure_table(mu, lambda, nu, n));
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto [it, inserted] = g_table_cache.emplace(key, table);
  return *it->second;
}

std::vector<std::vector<std::int64_t>> cl_columns_at_canonical(const Partition& mu,
                                                               const Partition& lambda,
                                                               int n) {
  if (n < instantiation_threshold(mu, lambda))
    throw error("level below instantiation threshold");
  std::vector<StableTabloid> taus = enumerate_stable(mu, lambda);
  std::unordered_map<std::string, std::size_t> tau_index;
  for (std::size_t t = 0; t < taus.size(); ++t) tau_index[stable_key(taus[t])] = t;

  Partition mupad = pad(mu, n), lampad = pad(lambda, n);
  Labels a0 = PermBasis(mupad).canonical();
  PermBasis lam_basis(lampad);

  const int rows_mu = mupad.length(), cols_lam = lampad.length();
  std::vector<int> cnt(static_cast<std::size_t>(rows_mu * cols_lam));
  std::string key;
  std::vector<std::vector<std::int64_t>> columns(taus.size());
  Labels v = lam_basis.canonical();
  std::int64_t index = 0;
  do {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (int pos = 0; pos < n; ++pos)
      ++cnt[static_cast<std::size_t>((a0[static_cast<std::size_t>(pos)] - 1) * cols_lam +
                                     v[static_cast<std::size_t>(pos)] - 1)];
    key.assign(cnt.size() - static_cast<std::size_t>(cols_lam), 0);
    for (std::size_t i = static_cast<std::size_t>(cols_lam); i < cnt.size(); ++i)
      key[i - static_cast<std::size_t>(cols_lam)] = static_cast<char>(cnt[i]);
    columns[tau_index.at(key)].push_back(index);
    ++index;
  } while (std::next_permutation(v.begin(), v.end()));
  return columns;
}

std::map<StableTabloid, std::int64_t> structure_constants_concrete(
    const StableTabloid& alpha, const StableTabloid& beta, int n) {
  if (!(alpha.type == beta.shape))
    throw error("composition requires type(alpha) = shape(beta)");
  TripleTable table = structure_table(alpha.shape, alpha.type, beta.type, n);
  auto find_in = [](const std::vector<StableTabloid>& list, const StableTabloid& t) {
    auto it = std::lower_bound(list.begin(), list.end(), t);
    if (it == list.end() || !(*it == t)) throw error("tabloid not in stable enumeration");
    return static_cast<std::size_t>(it - list.begin());
  };
  std::size_t ia = find_in(table.alphas, alpha);
  std::size_t ib = find_in(table.betas, beta);
  std::map<StableTabloid, std::int64_t> out;
  for (std::size_t t = 0; t < table.taus.size(); ++t) {
    std::int64_t c = table.count(ia, ib, t);
    if (c) out[table.taus[t]] = c;
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> enumerate_matrices(
    const std::vector<int>& rowsums, const std::vector<int>& colsums) {
  std::vector<std::vector<std::vector<int>>> out;
  const std::size_t R = rowsums.size(), C = colsums.size();
  std::vector<std::vector<int>> m(R, std::vector<int>(C, 0));
  std::vector<int> colleft = colsums;
  auto rec = [&](auto&& self, std::size_t i, std::size_t j, int rowleft) -> void {
    if (i == R) {
      for (int c : colleft)
        if (c) return;
      out.push_back(m);
      return;
    }
    if (j == C) {
      if (rowleft == 0) self(self, i + 1, 0, i + 1 < R ? rowsums[i + 1] : 0);
      return;
    }
    int cap = std::min(rowleft, colleft[j]);
    for (int v = 0; v <= cap; ++v) {
      m[i][j] = v;
      colleft[j] -= v;
      self(self, i, j + 1, rowleft - v);
      colleft[j] += v;
    }
    m[i][j] = 0;
  };
  if (R == 0) {
    bool allzero = true;
    for (int c : colsums) allzero = allzero && c == 0;
    if (allzero) out.push_back(m);
    return out;
  }
  rec(rec, 0, 0, rowsums[0]);
  return out;
}

std::vector<Partition> tensor_decompose_concrete(const Partition& lambda_padded,
                                                 const Partition& mu_padded) {
  if (lambda_padded.size() != mu_padded.size())
    throw error("tensor factors must live at the same level");
  std::vector<Partition> out;
  BigInt total = 0;
  for (const auto& m : enumerate_matrices(lambda_padded.parts(), mu_padded.parts())) {
    std::vector<int> entries;
    for (const auto& row : m)
      for (int v : row) entries.push_back(v);
    Partition summand = sorted_partition(std::move(entries));
    total += perm_module_dim(summand);
    out.push_back(std::move(summand));
  }
  if (total != perm_module_dim(lambda_padded) * perm_module_dim(mu_padded))
    throw error("tensor decomposition dimension mismatch");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Partition, Partition>> restrict_decompose(const Partition& lambda,
                                                                int ell, int n) {
  if (ell < 0 || ell > n - lambda.size() - lambda.part(1))
    throw error("restriction level out of range");
  Partition lampad = pad(lambda, n);
  std::vector<std::pair<Partition, Partition>> out;
  const int len = lampad.length();
  std::vector<int> mu_tilde(static_cast<std::size_t>(len), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == len) {
      if (left) return;
      std::vector<int> nu_tilde;
      for (int k = 0; k < len; ++k)
        nu_tilde.push_back(lampad.part(k + 1) - mu_tilde[static_cast<std::size_t>(k)]);
      out.emplace_back(sorted_partition(mu_tilde), sorted_partition(nu_tilde));
      return;
    }
    for (int v = 0; v <= std::min(left, lampad.part(i + 1)); ++v) {
      mu_tilde[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
    mu_tilde[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, ell);
  std::sort(out.begin(), out.end());
  return out;
}

Partition induce(const Partition& mu, const Partition& lambda, int n) {
  Partition lampad = pad(lambda, n);
  std::vector<int> parts = lampad.parts();
  parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
  return sorted_partition(std::move(parts));
}

SubquotientDesc SubquotientDesc::whole(const Partition& padded_shape) {
  ConcreteMap zero;
  zero.source_shape = pad(Partition(), padded_shape.size());
  zero.target_shape = padded_shape;
  zero.n = padded_shape.size();
  PermBasis target(padded_shape);
  zero.mat = SparseMatZ(target.dim(), 1);
  return cokernel(std::move(zero));
}

namespace {

// Subspace realizing the subquotient: the kernel itself, or the kernel of the
// transpose for a cokernel (the orthogonal model of the quotient).
std::pair<FpMat, Partition> realize_subspace(const SubquotientDesc& desc, Prime p) {
  if (desc.kind == SubquotientDesc::Kind::Kernel)
    return {nullspace(desc.map.mat.to_dense_mod(p)), desc.map.source_shape};
  return {nullspace(desc.map.mat.transpose().to_dense_mod(p)), desc.map.target_shape};
}

}  // namespace

std::int64_t subquotient_dim(const SubquotientDesc& desc, Prime p) {
  FpMat dense = desc.map.mat.to_dense_mod(p);
  std::int64_t r = rank(dense);
  if (desc.kind == SubquotientDesc::Kind::Kernel) return dense.cols() - r;
  return dense.rows() - r;
}

std::int64_t invariants_dim(const SubquotientDesc& desc, Prime p) {
  auto [K, shape] = realize_subspace(desc, p);
  const std::int64_t k = K.cols();
  if (k == 0) return 0;
  PermBasis basis(shape);
  // restricted generator actions: solve K X = g K
  FpMat stacked(2 * k, k, p);
  for (int g = 0; g < 2; ++g) {
    std::vector<std::int64_t> perm = g ? basis.cycle_perm() : basis.transposition_perm();
    FpMat gk(K.rows(), k, p);
    for (std::int64_t i = 0; i < K.rows(); ++i)
      for (std::int64_t j = 0; j < k; ++j)
        gk.at(perm[static_cast<std::size_t>(i)], j) = K.at(i, j);
    FpMat x = solve_full_col_rank(K, gk);
    for (std::int64_t i = 0; i < k; ++i)
      for (std::int64_t j = 0; j < k; ++j)
        stacked.set(g * k + i, j, x.at(i, j) - (i == j ? 1 : 0));
  }
  return k - rank(stacked);
}

}  // namespace stablerep
