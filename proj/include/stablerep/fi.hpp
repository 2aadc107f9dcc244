#pragma once

#include <cstdint>
#include <vector>

#include "stablerep/stablecat.hpp"

namespace stablerep {

// Sequence V_n presented as the cokernel of a stable map between formal sums
// of column modules [M((1^d))].
struct Presentation {
  std::vector<int> generators;  // column heights d >= 0
  std::vector<int> relations;
  StableHom map;  // relations object -> generators object

  void validate() const;
  static Partition column(int d);  // (1^d)
};

struct CokerInstance {
  std::int64_t dim = 0;
  std::int64_t invariants = 0;
};

// V_n = coker of the evaluated concrete map over F_p, with its dimension and
// the invariant dimension computed on the orthogonal model of the quotient.
CokerInstance instantiate_coker(const Presentation& pres, int n, Prime p);

// Cokernel dimension over the rationals (integer ranks), for flatness checks.
std::int64_t instantiate_coker_dim_q(const Presentation& pres, int n);

// Smallest level at which the presentation instantiates.
int presentation_threshold(const Presentation& pres);

struct PeriodResult {
  bool found = false;
  std::int64_t period = 0;
  int preperiod = 0;
};

// Smallest power of p (then smallest preperiod) consistent with the window;
// a candidate period T needs at least 2T matched positions past the
// preperiod.  Reports failure rather than guessing.
PeriodResult detect_period(const std::vector<std::int64_t>& values, Prime p);

}  // namespace stablerep
