#include "slicekit/slice_formulas.hpp"

#include <sstream>

namespace slicekit {

namespace {

i64 floor_div(i64 num, i64 den) {
  i64 q = num / den;
  if (num % den != 0 && (num < 0) != (den < 0)) --q;
  return q;
}

}  // namespace

std::string degree_label(i64 rho_mult, i64 lambda_mult, i64 int_shift) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](i64 coeff, const char* symbol) {
    if (coeff == 0) return;
    if (first) {
      if (coeff < 0) out << '-';
    } else {
      out << (coeff < 0 ? '-' : '+');
    }
    i64 mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1 || *symbol == '\0') out << mag;
    out << symbol;
    first = false;
  };
  emit(rho_mult, "rho");
  emit(lambda_mult, "lambda");
  emit(int_shift, "");
  return first ? "0" : out.str();
}

SliceIndex decompose(i64 p, i64 n) {
  if (!is_odd_prime(p)) {
    throw invalid_input("decompose: p must be an odd prime");
  }
  SliceIndex index;
  index.p = p;
  index.n = n;
  index.m = floor_div(n, p);
  const i64 r = n - index.m * p;  // residue in [0, p-1]
  if (r == 0) {
    index.kind = SliceCase::RhoMultiple;
    index.k = 0;
  } else if (r % 2 == 1) {
    index.kind = SliceCase::Odd;
    index.k = (r - 1) / 2;
  } else {
    index.kind = SliceCase::Even;
    index.k = (r - 2) / 2;
  }
  return index;
}

std::string to_string(SliceFunctor functor) {
  switch (functor) {
    case SliceFunctor::Identity:
      return "Id";
    case SliceFunctor::PZero:
      return "P0";
    case SliceFunctor::ETensor:
      return "ETensor";
  }
  throw internal_error("to_string: bad SliceFunctor");
}

SliceDescription slice_description(i64 p, i64 n) {
  SliceIndex index = decompose(p, n);
  SliceDescription desc;
  desc.p = p;
  desc.n = n;
  desc.rho_mult = index.m;
  switch (index.kind) {
    case SliceCase::RhoMultiple:
      desc.lambda_mult = 0;
      desc.int_shift = 0;
      desc.functor = SliceFunctor::Identity;
      break;
    case SliceCase::Odd:
      desc.lambda_mult = index.k;
      desc.int_shift = 1;
      desc.functor = SliceFunctor::PZero;
      break;
    case SliceCase::Even:
      desc.lambda_mult = index.k + 1;
      desc.int_shift = 0;
      desc.functor = SliceFunctor::ETensor;
      break;
  }
  desc.degree_label =
      degree_label(desc.rho_mult, desc.lambda_mult, desc.int_shift);
  if (desc.dim_at_bottom() != n) {
    throw internal_error("slice_description: dimension invariant violated");
  }
  return desc;
}

CpMackey apply_slice_functor(const SliceDescription& desc, const CpMackey& m) {
  if (desc.p != m.p()) {
    throw invalid_input("apply_slice_functor: prime mismatch");
  }
  switch (desc.functor) {
    case SliceFunctor::Identity: {
      std::vector<std::string> errors = validate(m);
      if (!errors.empty()) {
        throw invalid_input("apply_slice_functor: input is not a valid "
                            "Mackey functor; " + errors.front());
      }
      return m;
    }
    case SliceFunctor::PZero:
      return p_zero(m);
    case SliceFunctor::ETensor:
      return e_tensor(m);
  }
  throw internal_error("apply_slice_functor: bad SliceFunctor");
}

std::vector<SliceDescription> slice_schedule(i64 p, i64 n_lo, i64 n_hi) {
  if (n_lo > n_hi) throw invalid_input("slice_schedule: empty range");
  std::vector<SliceDescription> rows;
  rows.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (i64 n = n_lo; n <= n_hi; ++n) rows.push_back(slice_description(p, n));
  return rows;
}

SliceLink slice_link(const SliceDescription& desc) {
  SliceLink link;
  link.rho_mult = desc.rho_mult;
  switch (desc.functor) {
    case SliceFunctor::Identity:
      link.class_rep = 0;
      link.lambda_mult = 0;
      break;
    case SliceFunctor::PZero:
      link.class_rep = 1;
      link.lambda_mult = desc.lambda_mult;
      break;
    case SliceFunctor::ETensor:
      link.class_rep = 2;
      link.lambda_mult = desc.lambda_mult - 1;
      break;
  }
  link.suspension_label = degree_label(link.rho_mult, link.lambda_mult, 0);
  return link;
}

}  // namespace slicekit
