#include "stablerep/common.hpp"

#include <atomic>
#include <cstdlib>

namespace stablerep {

namespace {
std::atomic<std::int64_t> g_budget{[] {
  if (const char* env = std::getenv("STABLEREP_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::int64_t>(v);
  }
  return static_cast<std::int64_t>(5000000);
}()};
}  // namespace

std::int64_t basis_budget() { return g_budget.load(); }
void set_basis_budget(std::int64_t b) { g_budget.store(b); }

}  // namespace stablerep
