#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicekit/slice_criteria.hpp"

namespace slicekit {

/// Result of one exhaustive verification sweep.
struct SweepReport {
  std::string suite;
  long long cases = 0;        // top-level cases checked
  long long comparisons = 0;  // elementary divisor-level comparisons
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

/// For every j < k and every n in [0, horizon] meeting the congruence
/// condition, smashing with S^{V_j} must shift slice categories by 2p^j.
/// Each case is checked twice: through smash_verdict, and independently
/// through the closed-form fixed dimensions 2p^{j-d} and raw ceiling
/// arithmetic.
SweepReport verify_thm43(i64 p, i64 k,
                         std::optional<i64> horizon = std::nullopt);

/// The generated partition of residues mod p^k has exactly 2^k blocks,
/// the stated representatives land in distinct blocks, and the partition
/// is stable across horizons 2p^k, 4p^k and 8p^k.
SweepReport verify_cor44(i64 p, i64 k);

/// Over C_p, smashing with S^lambda shifts by 2 exactly on the odd slices
/// 1..p-2 and the even slices 2..p-3.
SweepReport verify_thm45(i64 p);

/// Induced regular-representation spheres G_+ smash_H S^{k rho_H} have
/// connectivity at least nu_n whenever k|H| >= n.
SweepReport verify_prop210(i64 max_m = 27, i64 max_k = 6);

}  // namespace slicekit
