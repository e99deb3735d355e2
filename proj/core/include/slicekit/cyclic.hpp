#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slicekit/errors.hpp"

namespace slicekit {

using i64 = std::int64_t;

/// Ceiling of num/den for den > 0, exact for negative numerators.
i64 ceil_div(i64 num, i64 den);

/// base^exp for exp >= 0; throws invalid_input on overflow.
i64 ipow(i64 base, i64 exp);

bool is_odd_prime(i64 p);

/// p-adic valuation of n != 0.
i64 p_valuation(i64 p, i64 n);

class Subgroup;

/// The cyclic group C_m. Its subgroups are in bijection with the divisors
/// of m: for each d | m there is exactly one subgroup of order d.
class CyclicGroup {
 public:
  explicit CyclicGroup(i64 order);

  i64 order() const { return order_; }

  /// Divisors of the order, ascending.
  const std::vector<i64>& divisors() const { return divisors_; }

  /// Subgroups ascending by order, one per divisor.
  std::vector<Subgroup> subgroups() const;

  Subgroup subgroup_of_order(i64 d) const;

  bool is_divisor(i64 d) const;

  bool operator==(const CyclicGroup& other) const {
    return order_ == other.order_;
  }
  bool operator!=(const CyclicGroup& other) const { return !(*this == other); }

 private:
  i64 order_;
  std::vector<i64> divisors_;
};

/// The subgroup of order d of a cyclic group, generated by gamma^(m/d).
class Subgroup {
 public:
  Subgroup(CyclicGroup group, i64 order);

  const CyclicGroup& group() const { return group_; }
  i64 order() const { return order_; }
  i64 index() const { return group_.order() / order_; }

 private:
  CyclicGroup group_;
  i64 order_;
};

/// An integer-valued function on the orbits G/C_d of a cyclic group,
/// one value per divisor d of the group order.
class OrbitFunction {
 public:
  OrbitFunction(CyclicGroup group, std::vector<i64> values);

  static OrbitFunction constant(const CyclicGroup& group, i64 value);

  const CyclicGroup& group() const { return group_; }

  /// Value at the orbit G/C_d; d must divide the group order.
  i64 at(i64 divisor) const;

  /// Values aligned with group().divisors().
  const std::vector<i64>& values() const { return values_; }

  bool is_zero() const;

  OrbitFunction& operator+=(const OrbitFunction& other);
  friend OrbitFunction operator+(OrbitFunction lhs, const OrbitFunction& rhs) {
    lhs += rhs;
    return lhs;
  }

  bool operator==(const OrbitFunction& other) const;
  bool operator!=(const OrbitFunction& other) const {
    return !(*this == other);
  }

  /// Least divisor d with this(d) < other(d), if any.
  std::optional<i64> first_below(const OrbitFunction& other) const;

  /// Least divisor d with this(d) != other(d), if any.
  std::optional<i64> first_difference(const OrbitFunction& other) const;

  /// Pointwise >= everywhere.
  bool dominates(const OrbitFunction& other) const {
    return !first_below(other).has_value();
  }

  /// Rendering of the form "C1:5 C3:2 C9:1".
  std::string to_text() const;

 private:
  void require_same_group(const OrbitFunction& other) const;

  CyclicGroup group_;
  std::vector<i64> values_;
};

}  // namespace slicekit
