#pragma once

#include <map>
#include <string>
#include <vector>

#include "slicekit/cyclic.hpp"

namespace slicekit {

/// One term of a raw (possibly non-canonical) representation expression.
struct RepTerm {
  enum class Kind { Trivial, Sign, Lambda };
  Kind kind = Kind::Trivial;
  i64 index = 0;  // rotation index, Lambda terms only; any integer accepted
  i64 coeff = 0;

  static RepTerm trivial(i64 coeff) {
    return RepTerm{Kind::Trivial, 0, coeff};
  }
  static RepTerm sign(i64 coeff) { return RepTerm{Kind::Sign, 0, coeff}; }
  static RepTerm lambda(i64 index, i64 coeff) {
    return RepTerm{Kind::Lambda, index, coeff};
  }
};

/// A virtual real representation of C_m, stored as canonical multiplicities
/// of the irreducible summands: the trivial line, the sign line (even m
/// only), and the rotation planes lambda(k) for 1 <= k <= (m-1)/2.
class VirtualRep {
 public:
  explicit VirtualRep(CyclicGroup group);

  const CyclicGroup& group() const { return group_; }
  i64 trivial_coeff() const { return trivial_; }
  i64 sign_coeff() const { return sign_; }

  /// Canonical rotation index -> nonzero coefficient.
  const std::map<i64, i64>& lambda_coeffs() const { return lambda_; }

  i64 lambda_coeff(i64 k) const;

  /// trivial + sign + 2 * sum of lambda coefficients.
  i64 virtual_dim() const;

  bool is_zero() const;

  VirtualRep operator-() const;
  VirtualRep& operator+=(const VirtualRep& other);
  VirtualRep& operator-=(const VirtualRep& other);
  VirtualRep& operator*=(i64 scalar);
  friend VirtualRep operator+(VirtualRep lhs, const VirtualRep& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend VirtualRep operator-(VirtualRep lhs, const VirtualRep& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend VirtualRep operator*(i64 scalar, VirtualRep rep) {
    rep *= scalar;
    return rep;
  }

  bool operator==(const VirtualRep& other) const;
  bool operator!=(const VirtualRep& other) const { return !(*this == other); }

  /// Rendering like "2*trivial + sign - lambda(3)"; "0" for the zero rep.
  std::string to_text() const;

  friend VirtualRep canonicalize(const CyclicGroup& group,
                                 const std::vector<RepTerm>& terms);

 private:
  void drop_zeros();

  CyclicGroup group_;
  i64 trivial_ = 0;
  i64 sign_ = 0;
  std::map<i64, i64> lambda_;
};

/// Folds arbitrary integer combinations of trivial, sign and lambda(k)
/// summands into the canonical form: lambda indices into [1, (m-1)/2],
/// lambda(0 mod m) as two trivial lines, lambda(m/2) as two sign lines.
/// Throws invalid_input if a sign coefficient survives for odd m.
VirtualRep canonicalize(const CyclicGroup& group,
                        const std::vector<RepTerm>& terms);

/// dim V^H for the subgroup H of order d: the trivial line is always fixed,
/// the sign line exactly when m/d is even, and lambda(k) contributes a full
/// plane exactly when d | k (gamma^(m/d) rotates lambda(k) by 2*pi*k/d).
i64 dim_fixed(const VirtualRep& rep, const Subgroup& subgroup);

/// The function G/C_d -> dim V^{C_d} over all divisors d.
OrbitFunction dim_function(const VirtualRep& rep);

/// The regular representation: trivial + sign (even m) + all lambda(k).
/// Satisfies dim_fixed(rho, C_d) = m/d.
VirtualRep regular_rep(const CyclicGroup& group);

/// The regular representation minus one trivial summand.
VirtualRep reduced_regular(const CyclicGroup& group);

/// The C_{p^k}-representation sum_{i=0}^{j} (p^i - floor(p^{i-1})) *
/// lambda(p^{j-i}), for odd prime p and 0 <= j <= k-1. Its fixed-point
/// dimensions are 2p^{j-d} at C_{p^d} for d <= j and 0 for d > j.
VirtualRep v_j(i64 p, i64 k, i64 j);

/// True iff every coefficient is >= 0, i.e. the virtual representation is
/// an actual one.
bool is_actual(const VirtualRep& rep);

}  // namespace slicekit
