#include "stablerep/gfp.hpp"

namespace stablerep {

FpMat FpMat::identity(std::int64_t n, Prime p) {
  FpMat m(n, n, p);
  for (std::int64_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMat FpMat::transpose() const {
  FpMat t(cols_, rows_, Prime(p_));
  for (std::int64_t r = 0; r < rows_; ++r)
    for (std::int64_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

FpMat FpMat::operator*(const FpMat& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw error("matrix product shape mismatch");
  FpMat out(rows_, o.cols_, Prime(p_));
  // i-k-j order; accumulate rows with delayed reduction
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(o.cols_));
  const std::uint64_t cap = ~0ull - static_cast<std::uint64_t>(p_ - 1) * (p_ - 1);
  for (std::int64_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    std::uint64_t budget = cap;
    for (std::int64_t k = 0; k < cols_; ++k) {
      std::uint64_t f = static_cast<std::uint64_t>(at(i, k));
      if (!f) continue;
      if (budget < static_cast<std::uint64_t>(p_ - 1) * (p_ - 1)) {
        for (auto& x : acc) x %= static_cast<std::uint64_t>(p_);
        budget = cap;
      }
      const std::int64_t* orow = o.row(k);
      for (std::int64_t j = 0; j < o.cols_; ++j)
        acc[static_cast<std::size_t>(j)] += f * static_cast<std::uint64_t>(orow[j]);
      budget -= static_cast<std::uint64_t>(p_ - 1) * (p_ - 1);
    }
    std::int64_t* out_row = out.row(i);
    for (std::int64_t j = 0; j < o.cols_; ++j)
      out_row[j] = static_cast<std::int64_t>(acc[static_cast<std::size_t>(j)] %
                                             static_cast<std::uint64_t>(p_));
  }
  return out;
}

std::vector<std::int64_t> FpMat::apply(const std::vector<std::int64_t>& v) const {
  if (static_cast<std::int64_t>(v.size()) != cols_) throw error("apply size mismatch");
  std::vector<std::int64_t> out(static_cast<std::size_t>(rows_), 0);
  for (std::int64_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    const std::int64_t* r = row(i);
    for (std::int64_t j = 0; j < cols_; ++j)
      acc += static_cast<std::uint64_t>(r[j]) * static_cast<std::uint64_t>(v[static_cast<std::size_t>(j)]);
    out[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(acc % static_cast<std::uint64_t>(p_));
  }
  return out;
}

std::int64_t FpMat::trace() const {
  std::int64_t t = 0;
  for (std::int64_t i = 0; i < std::min(rows_, cols_); ++i) t = (t + at(i, i)) % p_;
  return t;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw error("not invertible");
  return t < 0 ? t + p : t;
}

namespace {

// In-place row reduction; returns pivot columns.
std::vector<std::int64_t> rref(FpMat& m) {
  const std::int64_t p = m.modulus();
  std::vector<std::int64_t> pivots;
  std::int64_t r = 0;
  for (std::int64_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::int64_t piv = -1;
    for (std::int64_t i = r; i < m.rows(); ++i)
      if (m.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (std::int64_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    std::int64_t inv = inv_mod(m.at(r, c), p);
    if (inv != 1)
      for (std::int64_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv % p;
    for (std::int64_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      std::int64_t f = m.at(i, c);
      if (!f) continue;
      std::int64_t neg = p - f;
      const std::int64_t* src = m.row(r);
      std::int64_t* dst = m.row(i);
      for (std::int64_t j = c; j < m.cols(); ++j) dst[j] = (dst[j] + neg * src[j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::int64_t rank(FpMat m) {
  return static_cast<std::int64_t>(rref(m).size());
}

FpMat nullspace(const FpMat& m) {
  FpMat r = m;
  std::vector<std::int64_t> pivots = rref(r);
  const std::int64_t p = m.modulus();
  std::vector<std::int64_t> free_cols;
  std::size_t pi = 0;
  for (std::int64_t c = 0; c < m.cols(); ++c) {
    if (pi < pivots.size() && pivots[pi] == c)
      ++pi;
    else
      free_cols.push_back(c);
  }
  FpMat ker(m.cols(), static_cast<std::int64_t>(free_cols.size()), Prime(p));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::int64_t f = free_cols[k];
    ker.at(f, static_cast<std::int64_t>(k)) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      std::int64_t v = r.at(static_cast<std::int64_t>(i), f);
      if (v) ker.at(pivots[i], static_cast<std::int64_t>(k)) = p - v;
    }
  }
  return ker;
}

FpMat solve_full_col_rank(const FpMat& m, const FpMat& b) {
  if (m.rows() != b.rows()) throw error("solve shape mismatch");
  const std::int64_t p = m.modulus();
  FpMat aug(m.rows(), m.cols() + b.cols(), Prime(p));
  for (std::int64_t i = 0; i < m.rows(); ++i) {
    for (std::int64_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    for (std::int64_t j = 0; j < b.cols(); ++j) aug.at(i, m.cols() + j) = b.at(i, j);
  }
  std::vector<std::int64_t> pivots = rref(aug);
  if (static_cast<std::int64_t>(pivots.size()) < m.cols() ||
      (!pivots.empty() && pivots.back() >= m.cols())) {
    // a pivot beyond m's columns means the system is inconsistent
    for (std::int64_t piv : pivots)
      if (piv >= m.cols()) throw error("solve: inconsistent system");
    throw error("solve: matrix does not have full column rank");
  }
  FpMat x(m.cols(), b.cols(), Prime(p));
  for (std::int64_t i = 0; i < m.cols(); ++i)
    for (std::int64_t j = 0; j < b.cols(); ++j) x.at(i, j) = aug.at(i, m.cols() + j);
  return x;
}

std::vector<std::int64_t> EchelonBasis::reduce(std::vector<std::int64_t>& v) const {
  std::vector<std::int64_t> coeffs(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::int64_t f = v[static_cast<std::size_t>(pivots[i])] % p;
    if (!f) continue;
    coeffs[i] = f;
    std::int64_t neg = p - f;
    const auto& row = rows[i];
    for (std::int64_t j = pivots[i]; j < dim; ++j)
      v[static_cast<std::size_t>(j)] =
          (v[static_cast<std::size_t>(j)] + neg * row[static_cast<std::size_t>(j)]) % p;
  }
  return coeffs;
}

bool EchelonBasis::insert(std::vector<std::int64_t> v) {
  reduce(v);
  std::int64_t pc = -1;
  for (std::int64_t j = 0; j < dim; ++j)
    if (v[static_cast<std::size_t>(j)] % p) {
      pc = j;
      break;
    }
  if (pc < 0) return false;
  std::int64_t inv = inv_mod(v[static_cast<std::size_t>(pc)] % p, p);
  for (auto& x : v) x = x % p * inv % p;
  // keep earlier rows reduced against the new one
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::int64_t f = rows[i][static_cast<std::size_t>(pc)] % p;
    if (!f) continue;
    std::int64_t neg = p - f;
    for (std::int64_t j = pc; j < dim; ++j)
      rows[i][static_cast<std::size_t>(j)] =
          (rows[i][static_cast<std::size_t>(j)] + neg * v[static_cast<std::size_t>(j)]) % p;
  }
  rows.push_back(std::move(v));
  pivots.push_back(pc);
  return true;
}

bool EchelonBasis::contains(std::vector<std::int64_t> v) const {
  reduce(v);
  for (std::int64_t x : v)
    if (x % p) return false;
  return true;
}

}  // namespace stablerep
