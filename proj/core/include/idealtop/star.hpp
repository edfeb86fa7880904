#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "idealtop/ideal.hpp"
#include "idealtop/space.hpp"

namespace idealtop {

/// A finite topological space together with an ideal on its points.
class IdealSpace {
 public:
  /// Throws DimensionMismatch when the point counts differ.
  IdealSpace(Topology top, Ideal ideal);

  int n() const { return top_.n(); }
  const Topology& top() const { return top_; }
  const Ideal& ideal() const { return ideal_; }
  SubsetMask points() const { return top_.points(); }

  friend bool operator==(const IdealSpace&, const IdealSpace&) = default;

 private:
  Topology top_;
  Ideal ideal_;
};

/// A* = {x : A ∩ U is not small for every open U around x}.
///
/// Computed from minimal neighborhoods: U ∩ A shrinks with U, so only the
/// smallest neighborhood needs testing.
SubsetMask local_function(const IdealSpace& s, SubsetMask a);
/// A ∪ A*.
SubsetMask star_closure(const IdealSpace& s, SubsetMask a);
/// X ∖ (X ∖ A)*. The result is always open in the base topology; a
/// violation throws Internal.
SubsetMask psi(const IdealSpace& s, SubsetMask a);

/// The topology whose closed sets are those A with A* ⊆ A. Built from the
/// closed sets and re-checked against the criterion U open iff U ⊆ Ψ(U).
Topology star_topology(const IdealSpace& s);
/// Smallest topology containing Ψ(U) for every open U.
Topology psi_topology(const IdealSpace& s);

/// Every set that is locally small at each of its points is small.
bool is_compatible(const IdealSpace& s);
/// Every open cover has a finite subfamily whose uncovered remainder is
/// small. Always true on a finite space: the cover itself is finite and
/// leaves nothing uncovered. The definition is still evaluated.
bool is_ideal_compact(const IdealSpace& s);

struct LawResult {
  std::string_view name;
  bool passed = true;
  // First failing (A, B, I) in ascending order; unused slots stay empty.
  std::optional<std::array<SubsetMask, 3>> witness;
};

/// The algebraic laws of the local function:
///   monotone: A ⊆ B ⇒ A* ⊆ B*
///   closed: A* = Cl(A*) ⊆ Cl(A)
///   idempotent_bound: (A*)* ⊆ A*
///   additive: (A ∪ B)* = A* ∪ B*
///   ideal_invariant: (A ∪ I)* = A* = (A ∖ I)* for small I
struct LawReport {
  std::array<LawResult, 5> laws{};

  bool all_passed() const {
    for (const auto& l : laws)
      if (!l.passed) return false;
    return true;
  }
};

LawReport check_local_function_laws(const IdealSpace& s);

}  // namespace idealtop
