#pragma once

#include <cstdint>
#include <vector>

#include "stablerep/common.hpp"

namespace stablerep {

// Dense row-major matrix over F_p, entries kept in [0, p).
class FpMat {
public:
  FpMat() = default;
  FpMat(std::int64_t rows, std::int64_t cols, Prime p)
      : rows_(rows), cols_(cols), p_(p.value()),
        a_(static_cast<std::size_t>(rows * cols), 0) {}

  static FpMat identity(std::int64_t n, Prime p);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  std::int64_t modulus() const { return p_; }

  std::int64_t& at(std::int64_t r, std::int64_t c) {
    return a_[static_cast<std::size_t>(r * cols_ + c)];
  }
  std::int64_t at(std::int64_t r, std::int64_t c) const {
    return a_[static_cast<std::size_t>(r * cols_ + c)];
  }
  void set(std::int64_t r, std::int64_t c, std::int64_t v) {
    v %= p_;
    if (v < 0) v += p_;
    at(r, c) = v;
  }

  const std::int64_t* row(std::int64_t r) const { return a_.data() + r * cols_; }
  std::int64_t* row(std::int64_t r) { return a_.data() + r * cols_; }

  FpMat transpose() const;
  FpMat operator*(const FpMat& o) const;
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;
  std::int64_t trace() const;

  friend bool operator==(const FpMat& x, const FpMat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.p_ == y.p_ && x.a_ == y.a_;
  }

private:
  std::int64_t rows_ = 0, cols_ = 0, p_ = 2;
  std::vector<std::int64_t> a_;
};

std::int64_t inv_mod(std::int64_t a, std::int64_t p);

std::int64_t rank(FpMat m);

// Basis of {v : m v = 0}, as columns collected into a matrix (cols = nullity).
FpMat nullspace(const FpMat& m);

// Solves m x = b for full-column-rank m (b may have many columns).
FpMat solve_full_col_rank(const FpMat& m, const FpMat& b);

// Row-echelon basis of a set of vectors with pivot bookkeeping.
// Rows are reduced (pivot 1, zeros above and below in pivot columns).
struct EchelonBasis {
  explicit EchelonBasis(std::int64_t dim, Prime p)
      : dim(dim), p(p.value()) {}

  std::int64_t dim;
  std::int64_t p;
  std::vector<std::vector<std::int64_t>> rows;  // reduced vectors
  std::vector<std::int64_t> pivots;             // pivot column per row

  std::int64_t size() const { return static_cast<std::int64_t>(rows.size()); }
  // Reduces v against the basis in place; returns its coefficients on the rows.
  std::vector<std::int64_t> reduce(std::vector<std::int64_t>& v) const;
  // Returns true if v was independent (and inserted).
  bool insert(std::vector<std::int64_t> v);
  bool contains(std::vector<std::int64_t> v) const;
};

}  // namespace stablerep
