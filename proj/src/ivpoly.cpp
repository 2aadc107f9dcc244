#include "stablerep/ivpoly.hpp"

#include <algorithm>

namespace stablerep {

namespace {

void trim(std::vector<BigInt>& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

}  // namespace

IvPoly::IvPoly(std::int64_t offset, std::vector<BigInt> diffs)
    : offset_(offset), diffs_(std::move(diffs)) {
  trim(diffs_);
  if (diffs_.empty()) offset_ = 0;
}

IvPoly IvPoly::constant(const BigInt& c) {
  if (c == 0) return IvPoly();
  return IvPoly(0, {c});
}

IvPoly IvPoly::binomial(int k) {
  std::vector<BigInt> d(k + 1, 0);
  d[k] = 1;
  return IvPoly(0, std::move(d));
}

IvPoly IvPoly::from_values(std::int64_t base, const std::vector<BigInt>& values) {
  std::vector<BigInt> row = values;
  std::vector<BigInt> diffs;
  diffs.reserve(row.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    diffs.push_back(row[0]);
    for (std::size_t i = 0; i + k + 1 < values.size(); ++i) row[i] = row[i + 1] - row[i];
  }
  return IvPoly(base, std::move(diffs));
}

BigInt binomial_int(const BigInt& n, int k) {
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;  // exact
}

BigInt IvPoly::evaluate(const BigInt& n) const {
  BigInt arg = n - offset_;
  BigInt acc = 0;
  // C(arg, k) built incrementally: C(arg, k+1) = C(arg, k) * (arg - k) / (k + 1)
  BigInt binom = 1;
  for (int k = 0; k <= degree(); ++k) {
    if (k > 0) {
      binom *= arg - (k - 1);
      binom /= k;
    }
    acc += diffs_[static_cast<std::size_t>(k)] * binom;
  }
  return acc;
}

IvPoly IvPoly::rebase(std::int64_t new_offset) const {
  if (is_zero() || new_offset == offset_) return *this;
  std::vector<BigInt> vals;
  vals.reserve(static_cast<std::size_t>(degree()) + 1);
  for (int j = 0; j <= degree(); ++j) vals.push_back(evaluate(BigInt(new_offset) + j));
  return from_values(new_offset, vals);
}

namespace {

IvPoly pointwise(const IvPoly& f, const IvPoly& g, int deg_bound,
                 BigInt (*op)(const BigInt&, const BigInt&)) {
  if (deg_bound < 0) return IvPoly();
  std::int64_t base = std::min(f.offset(), g.offset());
  std::vector<BigInt> vals;
  vals.reserve(static_cast<std::size_t>(deg_bound) + 1);
  for (int j = 0; j <= deg_bound; ++j) {
    BigInt x = BigInt(base) + j;
    vals.push_back(op(f.evaluate(x), g.evaluate(x)));
  }
  return IvPoly::from_values(base, vals);
}

}  // namespace

IvPoly operator+(const IvPoly& f, const IvPoly& g) {
  return pointwise(f, g, std::max(f.degree(), g.degree()),
                   +[](const BigInt& a, const BigInt& b) -> BigInt { return a + b; });
}

IvPoly operator-(const IvPoly& f, const IvPoly& g) {
  return pointwise(f, g, std::max(f.degree(), g.degree()),
                   +[](const BigInt& a, const BigInt& b) -> BigInt { return a - b; });
}

IvPoly operator*(const IvPoly& f, const IvPoly& g) {
  if (f.is_zero() || g.is_zero()) return IvPoly();
  return pointwise(f, g, f.degree() + g.degree(),
                   +[](const BigInt& a, const BigInt& b) -> BigInt { return a * b; });
}

IvPoly IvPoly::scale(const BigInt& c) const {
  if (c == 0) return IvPoly();
  std::vector<BigInt> d = diffs_;
  for (BigInt& x : d) x *= c;
  return IvPoly(offset_, std::move(d));
}

bool IvPoly::equals(const IvPoly& g) const {
  int d = std::max(degree(), g.degree());
  for (int j = 0; j <= d; ++j)
    if (evaluate(j) != g.evaluate(j)) return false;
  return true;
}

namespace {

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, p);
    b = mul_mod(b, b, p);
    e >>= 1;
  }
  return r;
}

// C(nd, md) mod p for 0 <= md <= nd < p
std::int64_t binom_digit(std::int64_t nd, std::int64_t md, std::int64_t p) {
  std::int64_t num = 1, den = 1;
  for (std::int64_t i = 1; i <= md; ++i) {
    num = mul_mod(num, (nd - md + i) % p, p);
    den = mul_mod(den, i, p);
  }
  return mul_mod(num, pow_mod(den, p - 2, p), p);
}

}  // namespace

std::int64_t binomial_mod_p(std::int64_t n, std::int64_t m, Prime p) {
  if (m < 0 || n < 0) throw error("binomial_mod_p expects nonnegative arguments");
  const std::int64_t pp = p.value();
  std::int64_t result = 1;
  while ((m > 0 || n > 0) && result != 0) {
    std::int64_t nd = n % pp, md = m % pp;
    if (md > nd) return 0;
    result = mul_mod(result, binom_digit(nd, md, pp), pp);
    n /= pp;
    m /= pp;
  }
  return result;
}

std::int64_t period_mod_p(const IvPoly& f, Prime p) {
  const int D = digits_p(std::max(f.degree(), 0), p);
  const std::int64_t bound = pow_i64(p.value(), D);
  // p^D is always a period, so minimality can be checked over one full window.
  for (int e = 0; e <= D; ++e) {
    std::int64_t T = pow_i64(p.value(), e);
    bool ok = true;
    for (std::int64_t n = f.offset(); n < f.offset() + bound && ok; ++n) {
      BigInt diff = f.evaluate(BigInt(n) + T) - f.evaluate(n);
      if (diff % p.value() != 0) ok = false;
    }
    if (ok) return T;
  }
  throw error("period_mod_p: internal bound violated");
}

PAdicResidue::PAdicResidue(Prime p_, int exp_, std::int64_t residue_)
    : p(p_), exp(exp_), residue(residue_) {
  if (exp < 0) throw error("p-adic exponent must be nonnegative");
  std::int64_t mod = pow_i64(p.value(), exp);
  if (residue < 0 || residue >= mod) throw error("p-adic residue out of range");
}

std::int64_t eval_at_padic(const IvPoly& f, const PAdicResidue& t) {
  const int need = digits_p(std::max(f.degree(), 0), t.p) +
                   digits_p(std::llabs(f.offset()), t.p);
  if (t.exp < need)
    throw error("eval_at_padic: t known modulo p^" + std::to_string(t.exp) +
                " but p^" + std::to_string(need) + " digits are required");
  const std::int64_t mod = pow_i64(t.p.value(), t.exp);
  // argument of the binomial basis, known modulo p^exp
  std::int64_t u = (t.residue - f.offset()) % mod;
  if (u < 0) u += mod;
  std::int64_t acc = 0;
  for (int k = 0; k <= f.degree(); ++k) {
    std::int64_t c =
        static_cast<std::int64_t>(f.diffs()[static_cast<std::size_t>(k)] % t.p.value());
    if (c < 0) c += t.p.value();
    acc = (acc + c * binomial_mod_p(u, k, t.p)) % t.p.value();
  }
  return acc;
}

}  // namespace stablerep
