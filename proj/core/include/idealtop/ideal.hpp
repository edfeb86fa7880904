#pragma once

#include <span>

#include "idealtop/maps.hpp"
#include "idealtop/subset.hpp"

namespace idealtop {

/// An ideal on {0, ..., n-1}.
///
/// On a finite ground set every family closed downward and under finite
/// unions is the power set of its union, so an ideal is stored as that
/// union (the carrier M): A belongs to the ideal iff A ⊆ M. The ideal is
/// proper iff M is not the whole set; improper ideals are allowed.
class Ideal {
 public:
  /// Throws BadMask when carrier has points outside n.
  Ideal(int n, SubsetMask carrier);

  /// The ideal {∅}.
  static Ideal trivial(int n) { return Ideal(n, SubsetMask{}); }
  /// P(X).
  static Ideal power_set(int n) { return Ideal(n, SubsetMask::full(n)); }
  /// The ideal of finite subsets. On a finite ground set that is P(X),
  /// which is improper: only the name carries over from infinite spaces.
  static Ideal finite_subsets(int n) { return power_set(n); }

  int n() const { return n_; }
  SubsetMask carrier() const { return carrier_; }
  bool contains(SubsetMask a) const { return a.subset_of(carrier_); }
  bool proper() const { return carrier_ != SubsetMask::full(n_); }

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  int n_;
  SubsetMask carrier_;
};

/// Smallest ideal containing every generator.
Ideal make_ideal(int n, std::span<const SubsetMask> generators);

bool contains(const Ideal& ideal, SubsetMask a);

/// Ideal on the codomain generated by the images of members of ideal.
Ideal image_ideal(const FiniteMap& f, const Ideal& ideal);

struct TransferConditions {
  // Preimages of codomain-small sets are domain-small.
  bool preimage_ok = false;
  // Images of domain-small sets are codomain-small.
  bool image_ok = false;
  // I is domain-small iff f[I] is codomain-small, for every I.
  bool equivalence_ok = false;

  friend bool operator==(const TransferConditions&, const TransferConditions&) = default;
};

/// Evaluates the quantifier definitions and the carrier shortcuts, and
/// throws Internal if they disagree.
TransferConditions transfer_conditions(const FiniteMap& f, const Ideal& dom, const Ideal& cod);

/// Carrier shortcuts only.
TransferConditions transfer_conditions_fast(const FiniteMap& f, SubsetMask dom_carrier, SubsetMask cod_carrier);

/// Quantifier definitions only, enumerating every member of both ideals.
TransferConditions transfer_conditions_by_definition(const FiniteMap& f, const Ideal& dom, const Ideal& cod);

}  // namespace idealtop
