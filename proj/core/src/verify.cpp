#include "slicekit/verify.hpp"

#include <algorithm>
#include <sstream>

namespace slicekit {

namespace {

constexpr std::size_t kMaxFailures = 20;

void record(SweepReport& report, const std::string& message) {
  if (report.failures.size() < kMaxFailures) report.failures.push_back(message);
}

}  // namespace

std::string SweepReport::summary() const {
  std::ostringstream out;
  out << suite << ": checked " << cases << " cases (" << comparisons
      << " comparisons): " << (ok() ? "all pass" : "FAILURES");
  return out.str();
}

SweepReport verify_thm43(i64 p, i64 k, std::optional<i64> horizon) {
  SweepReport report;
  report.suite = "thm43";
  if (!is_odd_prime(p) || k < 1) {
    throw invalid_input("verify_thm43: need odd prime p and k >= 1");
  }
  const i64 span = horizon.value_or(4 * ipow(p, k));
  if (span <= 0) throw invalid_input("verify_thm43: horizon must be positive");
  for (i64 j = 0; j <= k - 1; ++j) {
    const VirtualRep rep = v_j(p, k, j);
    const i64 step = 2 * ipow(p, j);
    for (i64 n = 0; n <= span; ++n) {
      if (!vj_condition(p, k, j, n)) continue;
      ++report.cases;

      SmashVerdict verdict = smash_verdict(rep, n, step);
      if (verdict.kind != SmashKind::Equivalence) {
        record(report, "engine: j=" + std::to_string(j) +
                           " n=" + std::to_string(n) + " gave " +
                           to_string(verdict.kind));
      }

      // Independent route: closed-form fixed dimensions plus raw ceiling
      // arithmetic, no VirtualRep involved.
      for (i64 d = 0; d <= k; ++d) {
        ++report.comparisons;
        const i64 pd = ipow(p, d);
        const i64 fixed_dim = d <= j ? 2 * ipow(p, j - d) : 0;
        if (fixed_dim + ceil_div(n, pd) != ceil_div(n + step, pd)) {
          record(report, "ceiling identity: j=" + std::to_string(j) +
                             " n=" + std::to_string(n) +
                             " d=" + std::to_string(d));
        }
      }
    }
  }
  return report;
}

SweepReport verify_cor44(i64 p, i64 k) {
  SweepReport report;
  report.suite = "cor44";
  const i64 pk = ipow(p, k);
  ClassPartition partition = equivalence_classes(p, k);
  report.cases = pk;
  report.comparisons = static_cast<long long>(partition.blocks.size()) +
                       static_cast<long long>(partition.representatives.size());

  const std::size_t expected = std::size_t{1} << k;
  if (partition.blocks.size() != expected) {
    record(report, "block count " + std::to_string(partition.blocks.size()) +
                       " != 2^" + std::to_string(k));
  }
  std::vector<std::size_t> hit = partition.representative_blocks;
  std::sort(hit.begin(), hit.end());
  if (std::adjacent_find(hit.begin(), hit.end()) != hit.end()) {
    record(report, "representatives share a block");
  }

  // Edges depend on n only through n mod p^{j+1}, so the partition must be
  // horizon-independent once a full period is scanned.
  for (i64 multiple : {2, 8}) {
    ++report.comparisons;
    ClassPartition other = equivalence_classes(p, k, multiple * pk);
    if (other.blocks != partition.blocks) {
      record(report,
             "partition changed at horizon " + std::to_string(multiple) +
                 "*p^k");
    }
  }
  return report;
}

SweepReport verify_thm45(i64 p) {
  SweepReport report;
  report.suite = "thm45";
  std::vector<SmashVerdict> table = cp_pattern(p);
  for (i64 n = 1; n <= p - 1; ++n) {
    ++report.cases;
    ++report.comparisons;
    const bool odd_range = n % 2 == 1 && n <= p - 2;
    const bool even_range = n % 2 == 0 && 2 <= n && n <= p - 3;
    const SmashKind expected = odd_range || even_range
                                   ? SmashKind::Equivalence
                                   : SmashKind::NoneEstablished;
    const SmashKind got = table[static_cast<std::size_t>(n - 1)].kind;
    if (got != expected) {
      record(report, "n=" + std::to_string(n) + ": got " + to_string(got) +
                         ", expected " + to_string(expected));
    }
  }
  return report;
}

SweepReport verify_prop210(i64 max_m, i64 max_k) {
  SweepReport report;
  report.suite = "prop210";
  if (max_m < 1 || max_k < 0) {
    throw invalid_input("verify_prop210: bad sweep bounds");
  }
  for (i64 m = 1; m <= max_m; ++m) {
    CyclicGroup group(m);
    for (i64 h : group.divisors()) {
      Subgroup subgroup = group.subgroup_of_order(h);
      for (i64 k = 0; k <= max_k; ++k) {
        OrbitFunction conn = induced_sphere_connectivity(group, subgroup, k);
        for (i64 n = 0; n <= k * h; ++n) {
          ++report.cases;
          report.comparisons +=
              static_cast<long long>(group.divisors().size());
          if (!conn.dominates(nu(group, n))) {
            record(report, "m=" + std::to_string(m) +
                               " h=" + std::to_string(h) +
                               " k=" + std::to_string(k) +
                               " n=" + std::to_string(n));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace slicekit
