#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicekit/intmat.hpp"

namespace slicekit {

/// A finitely generated abelian group presented as Z^n modulo the column
/// span of an integer relation matrix with n rows.
class FgAbGroup {
 public:
  FgAbGroup(std::size_t generators, IntMatrix relations);

  static FgAbGroup free_group(std::size_t n);
  static FgAbGroup trivial();
  /// Z/n for n >= 1; Z for n = 0.
  static FgAbGroup cyclic(const Int& n);

  std::size_t generators() const { return generators_; }
  const IntMatrix& relations() const { return relations_; }

  /// Isomorphism invariants: two groups are isomorphic iff these agree.
  struct Invariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility order

    bool operator==(const Invariants& other) const = default;
    /// "Z^2 x Z/3 x Z/6"; "0" for the trivial group.
    std::string to_text() const;
  };

  Invariants invariant_factors() const;

  bool is_trivial() const;

  /// Group order when finite.
  std::optional<Int> order() const;

  /// True iff every column of the given matrix lies in the relation span,
  /// i.e. represents the zero element.
  bool in_relation_span(const IntMatrix& columns) const;

 private:
  std::size_t generators_;
  IntMatrix relations_;
};

bool same_invariants(const FgAbGroup& a, const FgAbGroup& b);

/// A homomorphism between presented groups, given on generators by an
/// integer matrix (target generators x source generators). The matrix is
/// not checked at construction; use is_well_defined / require_well_defined.
class Homomorphism {
 public:
  Homomorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static Homomorphism identity(const FgAbGroup& g);
  static Homomorphism zero(const FgAbGroup& source, const FgAbGroup& target);

  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  /// The matrix descends to the presented quotients: it must send every
  /// source relation into the target relation span.
  bool is_well_defined() const;
  void require_well_defined(const std::string& name) const;

  /// Equality as maps: the difference vanishes in the target on every
  /// source generator.
  bool equals(const Homomorphism& other) const;

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

/// f after g.
Homomorphism compose(const Homomorphism& f, const Homomorphism& g);

/// f composed with itself exponent times (identity for exponent 0).
Homomorphism hom_power(const Homomorphism& f, long long exponent);

struct SubgroupPart {
  FgAbGroup group;
  Homomorphism inclusion;  // into the ambient group, always injective
};

struct QuotientPart {
  FgAbGroup group;
  Homomorphism projection;  // identity matrix on generators, surjective
};

/// The subgroup of the ambient group generated by the given columns,
/// presented with the induced relations and carried with its inclusion.
SubgroupPart subgroup_from_generators(const FgAbGroup& ambient,
                                      const IntMatrix& generators);

/// Kernel of f as a subgroup of the source.
SubgroupPart kernel(const Homomorphism& f);

/// Image of f as a subgroup of the target, generated by the images of the
/// source generators.
SubgroupPart image(const Homomorphism& f);

/// The ambient group with the subgroup generators adjoined as relations.
QuotientPart quotient(const FgAbGroup& group,
                      const IntMatrix& subgroup_generators);

bool is_injective(const Homomorphism& f);
bool is_surjective(const Homomorphism& f);

}  // namespace slicekit
