#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "slicekit/mackey.hpp"
#include "slicekit/rep.hpp"
#include "slicekit/slice_criteria.hpp"
#include "slicekit/slice_formulas.hpp"

namespace slicekit {

using json = nlohmann::json;

/// {"m": int, "trivial": int, "sign": int, "lambda": [{"k","coeff"}, ...]}
json rep_to_json(const VirtualRep& rep);

/// Accepts non-canonical lambda indices; the result is canonicalized.
VirtualRep rep_from_json(const json& j);

/// [{"d": divisor, "value": int}, ...] ascending by divisor.
json orbit_values_to_json(const OrbitFunction& f);

/// Row-major nested integer arrays; entries outside 64-bit range are
/// decimal strings. [] is accepted for any matrix with zero rows or
/// columns. 'path' names the location in error messages.
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                           const std::string& path);
/// Column count inferred from the first row.
IntMatrix matrix_from_json_rows(const json& j, std::size_t rows,
                                const std::string& path);

/// {"gens": int, "rels": [[int]]}
json group_to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const json& j, const std::string& path);

/// {"p", "bottom", "top", "res", "tr", "gamma"}; map matrices are
/// target-generators x source-generators.
json mackey_to_json(const CpMackey& m);
CpMackey mackey_from_json(const json& j);

/// {"verdict": "Equivalence"|"MapOnly"|"NoneEstablished",
///  "witness_divisor": int|null, "advisory": [...]}
json smash_verdict_to_json(const SmashVerdict& verdict);

/// {"member": bool, "witness_divisor": int|null, "advisory": [...]}
json sphere_verdict_to_json(const SphereVerdict& verdict);

/// {"p","k","blocks","representatives","representative_blocks"}
json partition_to_json(const ClassPartition& partition);

/// {"n","rho","lambda","shift","functor","degree"} per the schedule schema.
json slice_description_to_json(const SliceDescription& desc);

}  // namespace slicekit
