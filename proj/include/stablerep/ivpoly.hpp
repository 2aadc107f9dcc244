#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "stablerep/common.hpp"

namespace stablerep {

using BigInt = boost::multiprecision::cpp_int;

// Integer-valued polynomial f(x) = sum_k diffs[k] * C(x - offset, k).
// diffs are Newton forward differences of the values at offset, offset+1, ...
// Invariant: diffs.back() != 0 unless diffs is empty (the zero polynomial).
class IvPoly {
public:
  IvPoly() = default;
  IvPoly(std::int64_t offset, std::vector<BigInt> diffs);

  static IvPoly zero() { return IvPoly(); }
  static IvPoly constant(const BigInt& c);
  // C(x, k)
  static IvPoly binomial(int k);
  // Interpolates f with f(base + j) = values[j].
  static IvPoly from_values(std::int64_t base, const std::vector<BigInt>& values);

  bool is_zero() const { return diffs_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(diffs_.size()) - 1; }
  std::int64_t offset() const { return offset_; }
  const std::vector<BigInt>& diffs() const { return diffs_; }

  BigInt evaluate(const BigInt& n) const;

  // Same function, different base point.
  IvPoly rebase(std::int64_t new_offset) const;

  friend IvPoly operator+(const IvPoly& f, const IvPoly& g);
  friend IvPoly operator-(const IvPoly& f, const IvPoly& g);
  friend IvPoly operator*(const IvPoly& f, const IvPoly& g);
  IvPoly scale(const BigInt& c) const;

  // Function equality, decided by evaluation at max(deg)+1 shared points.
  bool equals(const IvPoly& g) const;

private:
  std::int64_t offset_ = 0;
  std::vector<BigInt> diffs_;
};

// C(n, k) for arbitrary integer n via the falling-factorial formula.
BigInt binomial_int(const BigInt& n, int k);

// C(n, m) mod p by Lucas' theorem.
std::int64_t binomial_mod_p(std::int64_t n, std::int64_t m, Prime p);

// Minimal T with f(n+T) = f(n) mod p for all integers n.
// Always a power of p dividing p^digits_p(deg f).
std::int64_t period_mod_p(const IvPoly& f, Prime p);

// A p-adic integer known modulo p^exp.
struct PAdicResidue {
  PAdicResidue(Prime p, int exp, std::int64_t residue);

  Prime p;
  int exp;
  std::int64_t residue;  // in [0, p^exp)
};

// Reduction of f modulo p at any integer congruent to t; requires
// t.exp >= digits_p(deg f) + digits_p(|offset|).
std::int64_t eval_at_padic(const IvPoly& f, const PAdicResidue& t);

}  // namespace stablerep
