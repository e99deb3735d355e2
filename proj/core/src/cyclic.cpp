#include "slicekit/cyclic.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace slicekit {

i64 ceil_div(i64 num, i64 den) {
  // C++ division truncates toward zero, which already is the ceiling for
  // negative numerators.
  i64 q = num / den;
  if (num % den > 0) ++q;
  return q;
}

i64 ipow(i64 base, i64 exp) {
  if (exp < 0) throw invalid_input("ipow: negative exponent");
  i64 result = 1;
  for (i64 i = 0; i < exp; ++i) {
    if (base != 0 &&
        std::abs(result) > std::numeric_limits<i64>::max() / std::abs(base)) {
      throw invalid_input("ipow: overflow");
    }
    result *= base;
  }
  return result;
}

bool is_odd_prime(i64 p) {
  if (p < 3 || p % 2 == 0) return false;
  for (i64 d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

i64 p_valuation(i64 p, i64 n) {
  if (p < 2) throw invalid_input("p_valuation: p must be >= 2");
  if (n == 0) throw invalid_input("p_valuation: undefined at 0");
  if (n < 0) n = -n;
  i64 v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

CyclicGroup::CyclicGroup(i64 order) : order_(order) {
  if (order < 1) throw invalid_input("CyclicGroup: order must be >= 1");
  for (i64 d = 1; d * d <= order; ++d) {
    if (order % d == 0) {
      divisors_.push_back(d);
      if (d != order / d) divisors_.push_back(order / d);
    }
  }
  std::sort(divisors_.begin(), divisors_.end());
}

std::vector<Subgroup> CyclicGroup::subgroups() const {
  std::vector<Subgroup> result;
  result.reserve(divisors_.size());
  for (i64 d : divisors_) result.emplace_back(*this, d);
  return result;
}

Subgroup CyclicGroup::subgroup_of_order(i64 d) const {
  return Subgroup(*this, d);
}

bool CyclicGroup::is_divisor(i64 d) const {
  return d >= 1 && order_ % d == 0;
}

Subgroup::Subgroup(CyclicGroup group, i64 order)
    : group_(std::move(group)), order_(order) {
  if (!group_.is_divisor(order)) {
    throw invalid_input("Subgroup: order " + std::to_string(order) +
                        " does not divide " + std::to_string(group_.order()));
  }
}

OrbitFunction::OrbitFunction(CyclicGroup group, std::vector<i64> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.divisors().size()) {
    throw invalid_input("OrbitFunction: one value per divisor required");
  }
}

OrbitFunction OrbitFunction::constant(const CyclicGroup& group, i64 value) {
  return OrbitFunction(group,
                       std::vector<i64>(group.divisors().size(), value));
}

i64 OrbitFunction::at(i64 divisor) const {
  const auto& ds = group_.divisors();
  auto it = std::lower_bound(ds.begin(), ds.end(), divisor);
  if (it == ds.end() || *it != divisor) {
    throw invalid_input("OrbitFunction: " + std::to_string(divisor) +
                        " is not a divisor of " +
                        std::to_string(group_.order()));
  }
  return values_[static_cast<std::size_t>(it - ds.begin())];
}

bool OrbitFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](i64 v) { return v == 0; });
}

void OrbitFunction::require_same_group(const OrbitFunction& other) const {
  if (group_ != other.group_) {
    throw invalid_input("OrbitFunction: group mismatch");
  }
}

OrbitFunction& OrbitFunction::operator+=(const OrbitFunction& other) {
  require_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] += other.values_[i];
  }
  return *this;
}

bool OrbitFunction::operator==(const OrbitFunction& other) const {
  return group_ == other.group_ && values_ == other.values_;
}

std::optional<i64> OrbitFunction::first_below(
    const OrbitFunction& other) const {
  require_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < other.values_[i]) return group_.divisors()[i];
  }
  return std::nullopt;
}

std::optional<i64> OrbitFunction::first_difference(
    const OrbitFunction& other) const {
  require_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != other.values_[i]) return group_.divisors()[i];
  }
  return std::nullopt;
}

std::string OrbitFunction::to_text() const {
  std::ostringstream out;
  const auto& ds = group_.divisors();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i > 0) out << ' ';
    out << 'C' << ds[i] << ':' << values_[i];
  }
  return out.str();
}

}  // namespace slicekit
