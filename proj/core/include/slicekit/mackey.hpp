#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slicekit/abelian.hpp"

namespace slicekit {

/// A C_p Mackey functor over finitely generated abelian groups: a bottom
/// level M(G/e) with Weyl generator gamma, a top level M(G/G), restriction
/// top -> bottom and transfer bottom -> top, subject to
///   gamma^p = id,  gamma o res = res,  tr o gamma = tr,
///   res o tr = sum_{i<p} gamma^i.
class CpMackey {
 public:
  CpMackey(std::int64_t p, FgAbGroup bottom, FgAbGroup top, IntMatrix gamma,
           IntMatrix res, IntMatrix tr);

  std::int64_t p() const { return p_; }
  const FgAbGroup& bottom() const { return gamma_.source(); }
  const FgAbGroup& top() const { return res_.source(); }
  const Homomorphism& gamma() const { return gamma_; }
  const Homomorphism& res() const { return res_; }
  const Homomorphism& tr() const { return tr_; }

 private:
  std::int64_t p_;
  Homomorphism gamma_;  // bottom -> bottom
  Homomorphism res_;    // top -> bottom
  Homomorphism tr_;     // bottom -> top
};

/// Axiom check; empty result means valid. Ill-defined component maps are
/// reported separately from axiom failures, and each axiom failure names
/// the offending generator.
std::vector<std::string> validate(const CpMackey& m);

/// sum_{i=0}^{p-1} gamma^i as a map bottom -> bottom.
Homomorphism norm_map(const CpMackey& m);

/// The Burnside Mackey functor A(C_p): bottom Z, top Z^2 on [G/G], [G/e];
/// res(a, b) = a + pb, tr(c) = (0, c).
CpMackey burnside(std::int64_t p);

/// The fixed-point Mackey functor of Z: res = 1, tr = p.
CpMackey fixed_point_z(std::int64_t p);

/// Largest quotient on which the restriction is injective: the top level
/// modulo ker(res), bottom level untouched, structure maps induced.
CpMackey p_zero(const CpMackey& m);

/// Sub-Mackey functor generated by the bottom level: top replaced by the
/// image of the transfer (with injective inclusion into the old top),
/// bottom level untouched.
CpMackey e_tensor(const CpMackey& m);

/// Levelwise direct sum.
CpMackey direct_sum(const CpMackey& a, const CpMackey& b);

}  // namespace slicekit
