#include "slicekit/mackey.hpp"

#include <optional>

#include "slicekit/cyclic.hpp"

namespace slicekit {

namespace {

/// First source generator on which the two maps differ, if any.
std::optional<std::size_t> first_unequal_generator(const Homomorphism& a,
                                                   const Homomorphism& b) {
  IntMatrix diff = a.matrix() - b.matrix();
  for (std::size_t j = 0; j < diff.cols(); ++j) {
    if (!a.target().in_relation_span(diff.column(j))) return j;
  }
  return std::nullopt;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix result(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) result.at(i, j) = a.at(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      result.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    }
  }
  return result;
}

}  // namespace

CpMackey::CpMackey(std::int64_t p, FgAbGroup bottom, FgAbGroup top,
                   IntMatrix gamma, IntMatrix res, IntMatrix tr)
    : p_(p),
      gamma_(bottom, bottom, std::move(gamma)),
      res_(top, bottom, std::move(res)),
      tr_(std::move(bottom), std::move(top), std::move(tr)) {
  if (!is_odd_prime(p)) {
    throw invalid_input("CpMackey: p must be an odd prime");
  }
}

std::vector<std::string> validate(const CpMackey& m) {
  std::vector<std::string> errors;
  struct Component {
    const char* name;
    const Homomorphism& map;
  };
  bool all_defined = true;
  for (const Component& c : {Component{"gamma", m.gamma()},
                             Component{"res", m.res()},
                             Component{"tr", m.tr()}}) {
    if (!c.map.is_well_defined()) {
      errors.push_back(std::string(c.name) +
                       ": matrix does not descend to the presented groups");
      all_defined = false;
    }
  }
  if (!all_defined) return errors;

  Homomorphism gamma_p = hom_power(m.gamma(), m.p());
  if (auto g = first_unequal_generator(gamma_p,
                                       Homomorphism::identity(m.bottom()))) {
    errors.push_back("gamma^p != identity at bottom generator " +
                     std::to_string(*g));
  }
  if (auto g = first_unequal_generator(compose(m.gamma(), m.res()), m.res())) {
    errors.push_back("gamma o res != res at top generator " +
                     std::to_string(*g));
  }
  if (auto g = first_unequal_generator(compose(m.tr(), m.gamma()), m.tr())) {
    errors.push_back("tr o gamma != tr at bottom generator " +
                     std::to_string(*g));
  }
  if (auto g = first_unequal_generator(compose(m.res(), m.tr()),
                                       norm_map(m))) {
    errors.push_back("res o tr != sum of gamma^i at bottom generator " +
                     std::to_string(*g));
  }
  return errors;
}

Homomorphism norm_map(const CpMackey& m) {
  IntMatrix sum(m.bottom().generators(), m.bottom().generators());
  Homomorphism power = Homomorphism::identity(m.bottom());
  for (std::int64_t i = 0; i < m.p(); ++i) {
    sum = sum + power.matrix();
    power = compose(m.gamma(), power);
  }
  return Homomorphism(m.bottom(), m.bottom(), sum);
}

CpMackey burnside(std::int64_t p) {
  if (!is_odd_prime(p)) {
    throw invalid_input("burnside: p must be an odd prime");
  }
  IntMatrix res(1, 2);
  res.at(0, 0) = 1;
  res.at(0, 1) = p;
  IntMatrix tr(2, 1);
  tr.at(1, 0) = 1;
  return CpMackey(p, FgAbGroup::free_group(1), FgAbGroup::free_group(2),
                  IntMatrix::identity(1), std::move(res), std::move(tr));
}

CpMackey fixed_point_z(std::int64_t p) {
  if (!is_odd_prime(p)) {
    throw invalid_input("fixed_point_z: p must be an odd prime");
  }
  IntMatrix tr(1, 1);
  tr.at(0, 0) = p;
  return CpMackey(p, FgAbGroup::free_group(1), FgAbGroup::free_group(1),
                  IntMatrix::identity(1), IntMatrix::identity(1),
                  std::move(tr));
}

namespace {

void require_valid(const CpMackey& m, const std::string& context) {
  std::vector<std::string> errors = validate(m);
  if (errors.empty()) return;
  std::string message = context + ": input is not a valid Mackey functor";
  for (const std::string& e : errors) message += "; " + e;
  throw invalid_input(message);
}

void check_output(const CpMackey& m, const std::string& context) {
  if (!validate(m).empty()) {
    throw internal_error(context + ": output fails validation");
  }
}

}  // namespace

CpMackey p_zero(const CpMackey& m) {
  require_valid(m, "p_zero");
  SubgroupPart ker = kernel(m.res());
  QuotientPart quot = quotient(m.top(), ker.inclusion.matrix());
  // Same matrices on the same generators; only the top presentation gains
  // the kernel generators as relations.
  CpMackey result(m.p(), m.bottom(), quot.group, m.gamma().matrix(),
                  m.res().matrix(), m.tr().matrix());
  check_output(result, "p_zero");
  if (!is_injective(result.res())) {
    throw internal_error("p_zero: restriction still has kernel");
  }
  return result;
}

CpMackey e_tensor(const CpMackey& m) {
  require_valid(m, "e_tensor");
  SubgroupPart img = image(m.tr());
  // The image is generated by the transfers of the bottom generators, so
  // the new transfer is the identity on generators and the new restriction
  // is res o tr = the norm.
  CpMackey result(m.p(), m.bottom(), img.group, m.gamma().matrix(),
                  m.res().matrix() * m.tr().matrix(),
                  IntMatrix::identity(m.bottom().generators()));
  check_output(result, "e_tensor");
  if (!is_injective(img.inclusion)) {
    throw internal_error("e_tensor: image inclusion not injective");
  }
  return result;
}

CpMackey direct_sum(const CpMackey& a, const CpMackey& b) {
  if (a.p() != b.p()) throw invalid_input("direct_sum: prime mismatch");
  FgAbGroup bottom(a.bottom().generators() + b.bottom().generators(),
                   block_diag(a.bottom().relations(), b.bottom().relations()));
  FgAbGroup top(a.top().generators() + b.top().generators(),
                block_diag(a.top().relations(), b.top().relations()));
  return CpMackey(a.p(), std::move(bottom), std::move(top),
                  block_diag(a.gamma().matrix(), b.gamma().matrix()),
                  block_diag(a.res().matrix(), b.res().matrix()),
                  block_diag(a.tr().matrix(), b.tr().matrix()));
}

}  // namespace slicekit
