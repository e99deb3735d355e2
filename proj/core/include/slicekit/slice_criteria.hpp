#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicekit/rep.hpp"

namespace slicekit {

/// The slice connectivity bound nu_n: value ceil(n/d) at the orbit G/C_d.
OrbitFunction nu(const CyclicGroup& group, i64 n);

/// Advisory notes for slice indices outside the proven range (n < 0).
std::vector<std::string> range_advisories(i64 n);
std::vector<std::string> range_advisories(i64 n, i64 n_shifted);

/// Answer to "is the representation sphere S^V slice >= n": yes iff
/// dim V^{C_d} >= ceil(n/d) for every divisor d. On a negative answer the
/// least failing divisor is reported.
struct SphereVerdict {
  bool member = false;
  std::optional<i64> witness_divisor;
  std::vector<std::string> advisories;
};

SphereVerdict sphere_in_tau(const VirtualRep& rep, i64 n);

enum class SmashKind { Equivalence, MapOnly, NoneEstablished };

std::string to_string(SmashKind kind);

/// Classification of the effect of smashing with S^V on slice categories,
/// comparing dim_V + nu_n against nu_{n+k} pointwise:
///   Equivalence      equality at every divisor,
///   MapOnly          >= everywhere with strict > somewhere,
///   NoneEstablished  < at some divisor.
/// The witness is the least divisor where equality (MapOnly) or the
/// inequality (NoneEstablished) fails.
struct SmashVerdict {
  SmashKind kind = SmashKind::NoneEstablished;
  std::optional<i64> witness_divisor;
  std::vector<std::string> advisories;
};

SmashVerdict smash_verdict(const VirtualRep& rep, i64 n, i64 shift);

/// True iff dim_V vanishes at every orbit. Such suspensions are
/// auto-equivalences of every slice category and commute with the
/// formation of slices.
bool is_auto_equivalence(const VirtualRep& rep);

/// Connectivity function of the induced sphere G_+ smash_H S^{k rho_H}:
/// value k * |H| / gcd(|H|, d) at the orbit G/C_d, for k >= 0.
OrbitFunction induced_sphere_connectivity(const CyclicGroup& group,
                                          const Subgroup& subgroup, i64 k);

/// The congruence condition under which smashing with S^{V_j} shifts slice
/// categories by 2p^j: n mod p^{j+1} lies in [1, p^{j+1} - 2p^j].
bool vj_condition(i64 p, i64 k, i64 j, i64 n);

/// Partition of the residues mod p^k generated by the rho-shift and the
/// V_j-shifts, with the representatives n = sum a_i p^i, a_0 in {1,2},
/// a_i in {0,1} for i >= 1. Block count 2^k is checked, not assumed.
struct ClassPartition {
  i64 p = 0;
  i64 k = 0;
  /// Disjoint blocks covering {0, ..., p^k - 1}, each sorted ascending,
  /// ordered by smallest element.
  std::vector<std::vector<i64>> blocks;
  /// The 2^k representatives, ascending.
  std::vector<i64> representatives;
  /// Index into blocks for each representative's residue.
  std::vector<std::size_t> representative_blocks;
};

ClassPartition equivalence_classes(i64 p, i64 k,
                                   std::optional<i64> horizon = std::nullopt);

/// Smash verdicts for V = lambda, shift 2, over n = 1..p-1 (index n-1).
/// Computed via smash_verdict, never hard-coded.
std::vector<SmashVerdict> cp_pattern(i64 p);

}  // namespace slicekit
