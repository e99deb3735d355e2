#pragma once

#include <string>
#include <vector>

#include "slicekit/cyclic.hpp"
#include "slicekit/mackey.hpp"

namespace slicekit {

enum class SliceCase { RhoMultiple, Odd, Even };

/// The unique decomposition of a slice index n over C_p:
///   n = m*p          (RhoMultiple)
///   n = m*p + 2k + 1 (Odd,  0 <= k <= (p-3)/2)
///   n = m*p + 2k + 2 (Even, 0 <= k <= (p-3)/2).
struct SliceIndex {
  i64 p = 0;
  i64 n = 0;
  i64 m = 0;
  SliceCase kind = SliceCase::RhoMultiple;
  i64 k = 0;  // meaningful for Odd/Even only
};

SliceIndex decompose(i64 p, i64 n);

enum class SliceFunctor { Identity, PZero, ETensor };

std::string to_string(SliceFunctor functor);

/// What the n-slice of a C_p-spectrum looks like: a suspension degree
/// m*rho + l*lambda + s and the Mackey functor operation applied to the
/// homotopy Mackey functor in that degree.
///   RhoMultiple: degree m*rho,                 identity
///   Odd(k):      degree m*rho + k*lambda + 1,  largest res-injective quotient
///   Even(k):     degree m*rho + (k+1)*lambda,  bottom-generated subfunctor
/// lambda means lambda(1); any lambda(k') with k' prime to p induces the
/// same slice categories, so the choice is a normalization.
struct SliceDescription {
  i64 p = 0;
  i64 n = 0;
  i64 rho_mult = 0;
  i64 lambda_mult = 0;
  i64 int_shift = 0;  // 0 or 1
  SliceFunctor functor = SliceFunctor::Identity;
  std::string degree_label;  // e.g. "rho+1", "-rho+2lambda", "0"

  /// Dimension of the suspension degree at the trivial subgroup; equals n.
  i64 dim_at_bottom() const { return rho_mult * p + 2 * lambda_mult + int_shift; }
  /// Fixed-point dimension of the suspension degree at C_p.
  i64 dim_at_top() const { return rho_mult + int_shift; }
};

SliceDescription slice_description(i64 p, i64 n);

/// Applies the description's Mackey operation to user-supplied homotopy
/// data (understood as the homotopy Mackey functor in the degree named by
/// the description).
CpMackey apply_slice_functor(const SliceDescription& desc, const CpMackey& m);

/// One description per n in [n_lo, n_hi].
std::vector<SliceDescription> slice_schedule(i64 p, i64 n_lo, i64 n_hi);

/// The class representative (0, 1 or 2) whose slice functor determines the
/// n-slice, and the linking suspension m*rho + k*lambda.
struct SliceLink {
  i64 class_rep = 0;
  i64 rho_mult = 0;
  i64 lambda_mult = 0;
  std::string suspension_label;
};

SliceLink slice_link(const SliceDescription& desc);

/// "m*rho + k*lambda + s" rendering, e.g. "2rho+lambda", "-rho+1", "0".
std::string degree_label(i64 rho_mult, i64 lambda_mult, i64 int_shift);

}  // namespace slicekit
