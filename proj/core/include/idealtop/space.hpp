#pragma once

#include <array>
#include <span>
#include <vector>

#include "idealtop/subset.hpp"

namespace idealtop {

/// A topology on {0, ..., n-1}, stored as its minimal-neighborhood table.
///
/// Every finite topology is Alexandrov, so the table min_nbhd[x] (the
/// smallest open set containing x) determines the open family exactly:
/// U is open iff min_nbhd[x] is inside U for every x in U. The open family
/// is materialized once at construction, ascending by mask.
class Topology {
 public:
  /// Builds from a minimal-neighborhood table. Throws NotATopology when the
  /// table is not reflexive and transitive, BadMask on stray bits.
  static Topology from_min_nbhds(int n, std::span<const SubsetMask> min_nbhd);

  int n() const { return n_; }
  SubsetMask points() const { return SubsetMask::full(n_); }
  SubsetMask min_nbhd(Point x) const { return min_nbhd_[x]; }
  std::span<const SubsetMask> min_nbhds() const { return {min_nbhd_.data(), static_cast<size_t>(n_)}; }
  /// All open sets, ascending by mask value.
  const std::vector<SubsetMask>& opens() const { return opens_; }

  bool is_open(SubsetMask a) const;
  bool is_closed(SubsetMask a) const { return is_open(a.complement(n_)); }
  SubsetMask closure(SubsetMask a) const;
  SubsetMask interior(SubsetMask a) const;
  /// Smallest open superset of a: the union of the minimal neighborhoods.
  SubsetMask open_hull(SubsetMask a) const;

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.n_ == b.n_ && a.min_nbhd_ == b.min_nbhd_;
  }

 private:
  Topology() = default;

  int n_ = 0;
  std::array<SubsetMask, kMaxPoints> min_nbhd_{};
  std::vector<SubsetMask> opens_;
};

/// Canonicalizes a family that is already a topology. Throws NotATopology
/// when the empty set or the whole space is missing, or when the family is
/// not closed under union and intersection.
Topology make_topology(int n, std::span<const SubsetMask> opens);

/// Smallest topology containing every member of family.
Topology generate_topology(int n, std::span<const SubsetMask> family);

Topology discrete_topology(int n);
Topology indiscrete_topology(int n);
/// Two points, opens {∅, {1}, {0,1}}.
Topology sierpinski();

bool is_open(const Topology& t, SubsetMask a);
SubsetMask closure(const Topology& t, SubsetMask a);
SubsetMask interior(const Topology& t, SubsetMask a);

struct SeparationProfile {
  bool t0 = false;
  bool t1 = false;
  bool hausdorff = false;
  // Point vs. disjoint closed set; no T-axiom folded in.
  bool regular = false;
};

SeparationProfile separation_profile(const Topology& t);

/// Throws BadMask unless a fits n points.
void require_fits(SubsetMask a, int n);
/// Throws BadMask (and CapExceeded above kMaxPoints) for an invalid point count.
void require_point_count(int n);

}  // namespace idealtop
