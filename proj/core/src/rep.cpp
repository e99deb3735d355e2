#include "slicekit/rep.hpp"

#include <algorithm>
#include <sstream>

namespace slicekit {

VirtualRep::VirtualRep(CyclicGroup group) : group_(std::move(group)) {}

i64 VirtualRep::lambda_coeff(i64 k) const {
  auto it = lambda_.find(k);
  return it == lambda_.end() ? 0 : it->second;
}

i64 VirtualRep::virtual_dim() const {
  i64 dim = trivial_ + sign_;
  for (const auto& [k, c] : lambda_) {
    (void)k;
    dim += 2 * c;
  }
  return dim;
}

bool VirtualRep::is_zero() const {
  return trivial_ == 0 && sign_ == 0 && lambda_.empty();
}

void VirtualRep::drop_zeros() {
  for (auto it = lambda_.begin(); it != lambda_.end();) {
    it = it->second == 0 ? lambda_.erase(it) : std::next(it);
  }
}

VirtualRep VirtualRep::operator-() const {
  VirtualRep result = *this;
  result *= -1;
  return result;
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& other) {
  if (group_ != other.group_) throw invalid_input("VirtualRep: group mismatch");
  trivial_ += other.trivial_;
  sign_ += other.sign_;
  for (const auto& [k, c] : other.lambda_) lambda_[k] += c;
  drop_zeros();
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& other) {
  return *this += -other;
}

VirtualRep& VirtualRep::operator*=(i64 scalar) {
  trivial_ *= scalar;
  sign_ *= scalar;
  for (auto& [k, c] : lambda_) {
    (void)k;
    c *= scalar;
  }
  drop_zeros();
  return *this;
}

bool VirtualRep::operator==(const VirtualRep& other) const {
  return group_ == other.group_ && trivial_ == other.trivial_ &&
         sign_ == other.sign_ && lambda_ == other.lambda_;
}

std::string VirtualRep::to_text() const {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](i64 coeff, const std::string& symbol) {
    if (coeff == 0) return;
    if (first) {
      if (coeff < 0) out << '-';
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    i64 mag = std::abs(coeff);
    if (mag != 1) out << mag << '*';
    out << symbol;
    first = false;
  };
  emit(trivial_, "trivial");
  emit(sign_, "sign");
  for (const auto& [k, c] : lambda_) {
    emit(c, "lambda(" + std::to_string(k) + ")");
  }
  return first ? "0" : out.str();
}

VirtualRep canonicalize(const CyclicGroup& group,
                        const std::vector<RepTerm>& terms) {
  const i64 m = group.order();
  VirtualRep rep(group);
  for (const RepTerm& term : terms) {
    switch (term.kind) {
      case RepTerm::Kind::Trivial:
        rep.trivial_ += term.coeff;
        break;
      case RepTerm::Kind::Sign:
        rep.sign_ += term.coeff;
        break;
      case RepTerm::Kind::Lambda: {
        i64 k = term.index % m;
        if (k < 0) k += m;
        if (k == 0) {
          // lambda(0) is a trivially-rotating plane: two trivial lines.
          rep.trivial_ += 2 * term.coeff;
        } else if (2 * k == m) {
          // Rotation by pi is -1 on both axes: two sign lines.
          rep.sign_ += 2 * term.coeff;
        } else {
          if (2 * k > m) k = m - k;  // lambda(k) and lambda(m-k) agree
          rep.lambda_[k] += term.coeff;
        }
        break;
      }
    }
  }
  if (m % 2 == 1 && rep.sign_ != 0) {
    throw invalid_input(
        "canonicalize: sign coefficient must be 0 for odd order " +
        std::to_string(m));
  }
  rep.drop_zeros();
  return rep;
}

i64 dim_fixed(const VirtualRep& rep, const Subgroup& subgroup) {
  if (rep.group() != subgroup.group()) {
    throw invalid_input("dim_fixed: subgroup of a different group");
  }
  const i64 d = subgroup.order();
  i64 dim = rep.trivial_coeff();
  if (subgroup.index() % 2 == 0) dim += rep.sign_coeff();
  for (const auto& [k, c] : rep.lambda_coeffs()) {
    if (k % d == 0) dim += 2 * c;
  }
  return dim;
}

OrbitFunction dim_function(const VirtualRep& rep) {
  std::vector<i64> values;
  values.reserve(rep.group().divisors().size());
  for (i64 d : rep.group().divisors()) {
    values.push_back(dim_fixed(rep, rep.group().subgroup_of_order(d)));
  }
  return OrbitFunction(rep.group(), std::move(values));
}

VirtualRep regular_rep(const CyclicGroup& group) {
  const i64 m = group.order();
  std::vector<RepTerm> terms;
  terms.push_back(RepTerm::trivial(1));
  if (m % 2 == 0) terms.push_back(RepTerm::sign(1));
  for (i64 k = 1; 2 * k < m; ++k) terms.push_back(RepTerm::lambda(k, 1));
  return canonicalize(group, terms);
}

VirtualRep reduced_regular(const CyclicGroup& group) {
  VirtualRep rep = regular_rep(group);
  return rep - canonicalize(group, {RepTerm::trivial(1)});
}

VirtualRep v_j(i64 p, i64 k, i64 j) {
  if (!is_odd_prime(p)) throw invalid_input("v_j: p must be an odd prime");
  if (k < 1) throw invalid_input("v_j: k must be >= 1");
  if (j < 0 || j > k - 1) {
    throw invalid_input("v_j: j must satisfy 0 <= j <= k-1");
  }
  CyclicGroup group(ipow(p, k));
  std::vector<RepTerm> terms;
  for (i64 i = 0; i <= j; ++i) {
    // floor(p^{i-1}) is 0 at i = 0.
    i64 coeff = ipow(p, i) - (i == 0 ? 0 : ipow(p, i - 1));
    terms.push_back(RepTerm::lambda(ipow(p, j - i), coeff));
  }
  return canonicalize(group, terms);
}

bool is_actual(const VirtualRep& rep) {
  if (rep.trivial_coeff() < 0 || rep.sign_coeff() < 0) return false;
  return std::all_of(rep.lambda_coeffs().begin(), rep.lambda_coeffs().end(),
                     [](const auto& kc) { return kc.second >= 0; });
}

}  // namespace slicekit
