#include "slicekit/abelian.hpp"

#include <sstream>

namespace slicekit {

FgAbGroup::FgAbGroup(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() != generators_) {
    throw invalid_input("FgAbGroup: relation matrix needs one row per "
                        "generator");
  }
}

FgAbGroup FgAbGroup::free_group(std::size_t n) {
  return FgAbGroup(n, IntMatrix(n, 0));
}

FgAbGroup FgAbGroup::trivial() { return free_group(0); }

FgAbGroup FgAbGroup::cyclic(const Int& n) {
  if (n < 0) throw invalid_input("FgAbGroup::cyclic: n must be >= 0");
  IntMatrix rel(1, 1);
  rel.at(0, 0) = n;
  return FgAbGroup(1, n == 0 ? IntMatrix(1, 0) : rel);
}

FgAbGroup::Invariants FgAbGroup::invariant_factors() const {
  SmithResult snf = smith_normal_form(relations_);
  Invariants inv;
  inv.free_rank = generators_ - snf.rank;
  for (const Int& d : snf.nonzero_diagonal()) {
    if (d > 1) inv.torsion.push_back(d);
  }
  return inv;
}

std::string FgAbGroup::Invariants::to_text() const {
  if (free_rank == 0 && torsion.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " x ";
    first = false;
  };
  if (free_rank == 1) {
    sep();
    out << "Z";
  } else if (free_rank > 1) {
    sep();
    out << "Z^" << free_rank;
  }
  for (const Int& d : torsion) {
    sep();
    out << "Z/" << d;
  }
  return out.str();
}

bool FgAbGroup::is_trivial() const {
  Invariants inv = invariant_factors();
  return inv.free_rank == 0 && inv.torsion.empty();
}

std::optional<Int> FgAbGroup::order() const {
  Invariants inv = invariant_factors();
  if (inv.free_rank > 0) return std::nullopt;
  Int n = 1;
  for (const Int& d : inv.torsion) n *= d;
  return n;
}

bool FgAbGroup::in_relation_span(const IntMatrix& columns) const {
  if (columns.rows() != generators_) {
    throw invalid_input("in_relation_span: row count mismatch");
  }
  return solve_columns(relations_, columns).has_value();
}

bool same_invariants(const FgAbGroup& a, const FgAbGroup& b) {
  return a.invariant_factors() == b.invariant_factors();
}

Homomorphism::Homomorphism(FgAbGroup source, FgAbGroup target,
                           IntMatrix matrix)
    : source_(std::move(source)),
      target_(std::move(target)),
      matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generators() ||
      matrix_.cols() != source_.generators()) {
    throw invalid_input(
        "Homomorphism: matrix must be target generators x source "
        "generators");
  }
}

Homomorphism Homomorphism::identity(const FgAbGroup& g) {
  return Homomorphism(g, g, IntMatrix::identity(g.generators()));
}

Homomorphism Homomorphism::zero(const FgAbGroup& source,
                                const FgAbGroup& target) {
  return Homomorphism(source, target,
                      IntMatrix(target.generators(), source.generators()));
}

bool Homomorphism::is_well_defined() const {
  return target_.in_relation_span(matrix_ * source_.relations());
}

void Homomorphism::require_well_defined(const std::string& name) const {
  if (!is_well_defined()) {
    throw invalid_input(name + ": matrix does not descend to the presented "
                        "groups");
  }
}

bool Homomorphism::equals(const Homomorphism& other) const {
  if (source_.generators() != other.source_.generators() ||
      target_.generators() != other.target_.generators()) {
    return false;
  }
  return target_.in_relation_span(matrix_ - other.matrix_);
}

Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
  if (f.source().generators() != g.target().generators()) {
    throw invalid_input("compose: inner generator counts differ");
  }
  return Homomorphism(g.source(), f.target(), f.matrix() * g.matrix());
}

Homomorphism hom_power(const Homomorphism& f, long long exponent) {
  if (exponent < 0) throw invalid_input("hom_power: negative exponent");
  if (f.source().generators() != f.target().generators()) {
    throw invalid_input("hom_power: endomorphism required");
  }
  Homomorphism result = Homomorphism::identity(f.source());
  for (long long i = 0; i < exponent; ++i) result = compose(f, result);
  return result;
}

SubgroupPart subgroup_from_generators(const FgAbGroup& ambient,
                                      const IntMatrix& generators) {
  if (generators.rows() != ambient.generators()) {
    throw invalid_input("subgroup_from_generators: row count mismatch");
  }
  // A combination of the given columns vanishes in the ambient group
  // exactly when it extends to a kernel element of [generators | relations];
  // projecting those kernel elements onto the first block presents the
  // subgroup.
  IntMatrix block = generators.hstack(ambient.relations());
  IntMatrix full_kernel = integer_kernel(block);
  IntMatrix relations = full_kernel.top_rows(generators.cols());
  FgAbGroup group(generators.cols(), relations);
  return SubgroupPart{group, Homomorphism(group, ambient, generators)};
}

SubgroupPart kernel(const Homomorphism& f) {
  f.require_well_defined("kernel");
  // x maps to zero iff f(x) is a combination of target relations, i.e.
  // (x, y) is an integer kernel element of [matrix | target relations].
  IntMatrix block = f.matrix().hstack(f.target().relations());
  IntMatrix full_kernel = integer_kernel(block);
  IntMatrix generators = full_kernel.top_rows(f.source().generators());
  return subgroup_from_generators(f.source(), generators);
}

SubgroupPart image(const Homomorphism& f) {
  f.require_well_defined("image");
  return subgroup_from_generators(f.target(), f.matrix());
}

QuotientPart quotient(const FgAbGroup& group,
                      const IntMatrix& subgroup_generators) {
  if (subgroup_generators.rows() != group.generators()) {
    throw invalid_input("quotient: row count mismatch");
  }
  FgAbGroup quotient_group(group.generators(),
                           group.relations().hstack(subgroup_generators));
  return QuotientPart{
      quotient_group,
      Homomorphism(group, quotient_group,
                   IntMatrix::identity(group.generators()))};
}

bool is_injective(const Homomorphism& f) {
  return kernel(f).group.is_trivial();
}

bool is_surjective(const Homomorphism& f) {
  f.require_well_defined("is_surjective");
  return quotient(f.target(), f.matrix()).group.is_trivial();
}

}  // namespace slicekit
