#pragma once

#include <string>

#include "hser/repmodel.hpp"

namespace hser {

struct VerifyResult {
  bool ok = true;
  std::string message;  // first counterexample when !ok
};

// Cross-checks every enumerated spec (0 <= 2D-6 <= max_dim):
//   - engine covariant series of V+V* (L = 0, 2) against the combinatorial
//     counter up to degree `depth`, which also flags corrupted cache entries
//   - on-shell series against dimension counts where the Koszul route applies
//   - functional equation and pole orders for 1-large specs
//   - gamma_1^on = 0, the two leading-term cancellations, the closed-form
//     gamma coefficients against extraction, and the gamma_{3,2} relation
// Stops at the first violation.
VerifyResult verify_all(long max_dim, long depth);

}  // namespace hser
