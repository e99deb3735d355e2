#include "slicekit/slice_criteria.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "slicekit/detail/union_find.hpp"

namespace slicekit {

OrbitFunction nu(const CyclicGroup& group, i64 n) {
  std::vector<i64> values;
  values.reserve(group.divisors().size());
  for (i64 d : group.divisors()) values.push_back(ceil_div(n, d));
  return OrbitFunction(group, std::move(values));
}

std::vector<std::string> range_advisories(i64 n) {
  std::vector<std::string> notes;
  if (n < 0) notes.push_back("n<0 outside proven range");
  return notes;
}

std::vector<std::string> range_advisories(i64 n, i64 n_shifted) {
  std::vector<std::string> notes = range_advisories(n);
  if (n >= 0 && n_shifted < 0) notes.push_back("n<0 outside proven range");
  return notes;
}

SphereVerdict sphere_in_tau(const VirtualRep& rep, i64 n) {
  SphereVerdict verdict;
  verdict.advisories = range_advisories(n);
  OrbitFunction dims = dim_function(rep);
  verdict.witness_divisor = dims.first_below(nu(rep.group(), n));
  verdict.member = !verdict.witness_divisor.has_value();
  return verdict;
}

std::string to_string(SmashKind kind) {
  switch (kind) {
    case SmashKind::Equivalence:
      return "Equivalence";
    case SmashKind::MapOnly:
      return "MapOnly";
    case SmashKind::NoneEstablished:
      return "NoneEstablished";
  }
  throw internal_error("to_string: bad SmashKind");
}

SmashVerdict smash_verdict(const VirtualRep& rep, i64 n, i64 shift) {
  SmashVerdict verdict;
  verdict.advisories = range_advisories(n, n + shift);
  OrbitFunction lhs = dim_function(rep) + nu(rep.group(), n);
  OrbitFunction rhs = nu(rep.group(), n + shift);
  if (auto below = lhs.first_below(rhs)) {
    verdict.kind = SmashKind::NoneEstablished;
    verdict.witness_divisor = below;
  } else if (auto diff = lhs.first_difference(rhs)) {
    verdict.kind = SmashKind::MapOnly;
    verdict.witness_divisor = diff;
  } else {
    verdict.kind = SmashKind::Equivalence;
  }
  return verdict;
}

bool is_auto_equivalence(const VirtualRep& rep) {
  return dim_function(rep).is_zero();
}

OrbitFunction induced_sphere_connectivity(const CyclicGroup& group,
                                          const Subgroup& subgroup, i64 k) {
  if (subgroup.group() != group) {
    throw invalid_input("induced_sphere_connectivity: subgroup mismatch");
  }
  if (k < 0) {
    throw invalid_input("induced_sphere_connectivity: k must be >= 0");
  }
  const i64 h = subgroup.order();
  std::vector<i64> values;
  values.reserve(group.divisors().size());
  for (i64 d : group.divisors()) {
    // [H : H cap C_d] = |H| / gcd(|H|, d) in a cyclic group.
    values.push_back(k * (h / std::gcd(h, d)));
  }
  return OrbitFunction(group, std::move(values));
}

bool vj_condition(i64 p, i64 k, i64 j, i64 n) {
  if (!is_odd_prime(p)) {
    throw invalid_input("vj_condition: p must be an odd prime");
  }
  if (k < 1 || j < 0 || j > k - 1) {
    throw invalid_input("vj_condition: j must satisfy 0 <= j <= k-1");
  }
  if (n < 0) throw invalid_input("vj_condition: n must be >= 0");
  const i64 modulus = ipow(p, j + 1);
  const i64 r = n % modulus;
  return 1 <= r && r <= modulus - 2 * ipow(p, j);
}

ClassPartition equivalence_classes(i64 p, i64 k, std::optional<i64> horizon) {
  if (!is_odd_prime(p)) {
    throw invalid_input("equivalence_classes: p must be an odd prime");
  }
  if (k < 1) throw invalid_input("equivalence_classes: k must be >= 1");
  const i64 pk = ipow(p, k);
  if (pk > (i64{1} << 24)) {
    throw invalid_input("equivalence_classes: p^k too large");
  }
  const i64 span = horizon.value_or(4 * pk);
  if (span <= 0 || span % pk != 0) {
    throw invalid_input(
        "equivalence_classes: horizon must be a positive multiple of p^k");
  }

  // The rho-shift n ~ n + p^k is the identity on residues mod p^k; the
  // V_j-shifts n ~ n + 2p^j contribute the actual edges.
  detail::UnionFind uf(static_cast<std::size_t>(pk));
  for (i64 j = 0; j <= k - 1; ++j) {
    const i64 step = 2 * ipow(p, j);
    for (i64 n = 0; n < span; ++n) {
      if (vj_condition(p, k, j, n)) {
        uf.unite(static_cast<std::size_t>(n % pk),
                 static_cast<std::size_t>((n + step) % pk));
      }
    }
  }

  ClassPartition partition;
  partition.p = p;
  partition.k = k;

  std::map<std::size_t, std::size_t> root_to_block;
  for (i64 r = 0; r < pk; ++r) {
    std::size_t root = uf.find(static_cast<std::size_t>(r));
    auto [it, inserted] =
        root_to_block.try_emplace(root, partition.blocks.size());
    if (inserted) partition.blocks.emplace_back();
    partition.blocks[it->second].push_back(r);
  }

  for (i64 bits = 0; bits < (i64{1} << (k - 1)); ++bits) {
    for (i64 a0 : {1, 2}) {
      i64 n = a0;
      for (i64 i = 1; i <= k - 1; ++i) {
        if (bits & (i64{1} << (i - 1))) n += ipow(p, i);
      }
      partition.representatives.push_back(n);
    }
  }
  std::sort(partition.representatives.begin(),
            partition.representatives.end());

  for (i64 rep : partition.representatives) {
    std::size_t root = uf.find(static_cast<std::size_t>(rep % pk));
    partition.representative_blocks.push_back(root_to_block.at(root));
  }

  // The classification promises exactly 2^k blocks hit bijectively by the
  // representatives; verify rather than assume.
  const std::size_t expected = std::size_t{1} << k;
  if (partition.blocks.size() != expected) {
    throw internal_error("equivalence_classes: block count " +
                         std::to_string(partition.blocks.size()) +
                         " != " + std::to_string(expected));
  }
  std::vector<std::size_t> hit = partition.representative_blocks;
  std::sort(hit.begin(), hit.end());
  if (std::adjacent_find(hit.begin(), hit.end()) != hit.end()) {
    throw internal_error(
        "equivalence_classes: representatives are not in distinct blocks");
  }
  return partition;
}

std::vector<SmashVerdict> cp_pattern(i64 p) {
  if (!is_odd_prime(p)) {
    throw invalid_input("cp_pattern: p must be an odd prime");
  }
  CyclicGroup group(p);
  VirtualRep lambda = canonicalize(group, {RepTerm::lambda(1, 1)});
  std::vector<SmashVerdict> table;
  table.reserve(static_cast<std::size_t>(p - 1));
  for (i64 n = 1; n <= p - 1; ++n) {
    table.push_back(smash_verdict(lambda, n, 2));
  }
  return table;
}

}  // namespace slicekit
