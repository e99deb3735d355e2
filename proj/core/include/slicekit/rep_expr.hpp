#pragma once

#include <string_view>

#include "slicekit/rep.hpp"

namespace slicekit {

/// Parses integer linear combinations of the symbols
///   1 (or trivial), sign, lambda(k), rho, rhobar, Vj(p,k,j)
/// joined with + and -, with optional integer* prefixes, e.g.
/// "2*lambda(1)", "rho - 1", "3*Vj(3,2,1) + sign". Whitespace is ignored.
/// A bare integer n means n trivial summands. Vj(p,k,j) requires p^k to
/// equal the group order. The result is canonical.
VirtualRep parse_rep_expr(const CyclicGroup& group, std::string_view text);

}  // namespace slicekit
