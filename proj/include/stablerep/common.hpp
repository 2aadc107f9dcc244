#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stablerep {

// Raised for computational failures the caller can act on (budget, bad
// preconditions, failed validation).  Usage errors are the CLI's business.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Validated prime modulus; bounded so that (p-1)^2 sums fit 64-bit lanes.
class Prime {
public:
  explicit Prime(std::int64_t p) : p_(p) {
    if (p > 2147483647) throw error("prime modulus too large: " + std::to_string(p));
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
      throw error("not a prime: " + std::to_string(p));
  }
  std::int64_t value() const { return p_; }

  friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }

private:
  std::int64_t p_;
};

// Number of base-p digits of d; digits_p(0) = 0.
inline int digits_p(std::int64_t d, Prime p) {
  int e = 0;
  while (d > 0) {
    d /= p.value();
    ++e;
  }
  return e;
}

inline std::int64_t pow_i64(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Basis-size budget shared by all modules; STABLEREP_BUDGET overrides.
std::int64_t basis_budget();
void set_basis_budget(std::int64_t b);

}  // namespace stablerep
