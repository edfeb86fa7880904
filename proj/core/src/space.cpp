#include "idealtop/space.hpp"

#include <algorithm>
#include <string>

#include "idealtop/error.hpp"

namespace idealtop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadMask: return "BadMask";
    case ErrorCode::BadPoint: return "BadPoint";
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::UnknownHypothesisName: return "UnknownHypothesisName";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

void require_point_count(int n) {
  if (n < 1) throw Error(ErrorCode::BadMask, "point count must be positive, got " + std::to_string(n));
  if (n > kMaxPoints)
    throw Error(ErrorCode::CapExceeded, "point count " + std::to_string(n) + " exceeds " + std::to_string(kMaxPoints));
}

void require_fits(SubsetMask a, int n) {
  if (!a.fits(n))
    throw Error(ErrorCode::BadMask, "mask " + std::to_string(a.bits()) + " has points outside 0.." + std::to_string(n - 1));
}

Topology Topology::from_min_nbhds(int n, std::span<const SubsetMask> min_nbhd) {
  require_point_count(n);
  if (static_cast<int>(min_nbhd.size()) != n)
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(n) + " minimal neighborhoods");
  Topology t;
  t.n_ = n;
  for (int x = 0; x < n; ++x) {
    require_fits(min_nbhd[x], n);
    if (!min_nbhd[x].has(x))
      throw Error(ErrorCode::NotATopology, "point " + std::to_string(x) + " missing from its own neighborhood");
    t.min_nbhd_[x] = min_nbhd[x];
  }
  for (int x = 0; x < n; ++x)
    for (Point y : min_nbhd[x].points())
      if (!min_nbhd[y].subset_of(min_nbhd[x]))
        throw Error(ErrorCode::NotATopology, "neighborhood table is not transitive at " + std::to_string(x));
  for_each_subset(n, [&](SubsetMask a) {
    if (t.is_open(a)) t.opens_.push_back(a);
  });
  return t;
}

bool Topology::is_open(SubsetMask a) const {
  for (auto b = a.bits(); b != 0; b &= b - 1)
    if (!min_nbhd_[std::countr_zero(b)].subset_of(a)) return false;
  return true;
}

SubsetMask Topology::closure(SubsetMask a) const {
  SubsetMask out;
  for (int x = 0; x < n_; ++x)
    if (min_nbhd_[x].intersects(a)) out = out.with(x);
  return out;
}

SubsetMask Topology::interior(SubsetMask a) const {
  return closure(a.complement(n_)).complement(n_);
}

SubsetMask Topology::open_hull(SubsetMask a) const {
  SubsetMask out;
  for (auto b = a.bits(); b != 0; b &= b - 1) out |= min_nbhd_[std::countr_zero(b)];
  return out;
}

namespace {

// min_nbhd[x] = intersection of the family members containing x.
std::array<SubsetMask, kMaxPoints> intersect_per_point(int n, std::span<const SubsetMask> family) {
  std::array<SubsetMask, kMaxPoints> nb{};
  for (int x = 0; x < n; ++x) {
    SubsetMask m = SubsetMask::full(n);
    for (SubsetMask u : family)
      if (u.has(x)) m &= u;
    nb[x] = m;
  }
  return nb;
}

}  // namespace

Topology make_topology(int n, std::span<const SubsetMask> opens) {
  require_point_count(n);
  std::vector<SubsetMask> family(opens.begin(), opens.end());
  for (SubsetMask u : family) require_fits(u, n);
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (family.empty() || !family.front().empty()) throw Error(ErrorCode::NotATopology, "empty set is not listed");
  if (family.back() != SubsetMask::full(n)) throw Error(ErrorCode::NotATopology, "whole space is not listed");

  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j) {
      if (!std::binary_search(family.begin(), family.end(), family[i] | family[j]))
        throw Error(ErrorCode::NotATopology, "family not closed under union");
      if (!std::binary_search(family.begin(), family.end(), family[i] & family[j]))
        throw Error(ErrorCode::NotATopology, "family not closed under intersection");
    }

  auto nb = intersect_per_point(n, family);
  Topology t = Topology::from_min_nbhds(n, std::span(nb.data(), n));
  if (t.opens() != family) throw Error(ErrorCode::Internal, "open family does not round-trip");
  return t;
}

Topology generate_topology(int n, std::span<const SubsetMask> family) {
  require_point_count(n);
  for (SubsetMask u : family) require_fits(u, n);
  // The subbase intersection per point is the minimal neighborhood of the
  // generated topology; arbitrary unions of these give every open set.
  auto nb = intersect_per_point(n, family);
  return Topology::from_min_nbhds(n, std::span(nb.data(), n));
}

Topology discrete_topology(int n) {
  std::array<SubsetMask, kMaxPoints> nb{};
  for (int x = 0; x < n; ++x) nb[x] = SubsetMask::singleton(x);
  return Topology::from_min_nbhds(n, std::span(nb.data(), n));
}

Topology indiscrete_topology(int n) {
  std::array<SubsetMask, kMaxPoints> nb{};
  for (int x = 0; x < n; ++x) nb[x] = SubsetMask::full(n);
  return Topology::from_min_nbhds(n, std::span(nb.data(), n));
}

Topology sierpinski() {
  const SubsetMask nb[] = {SubsetMask::of({0, 1}), SubsetMask::of({1})};
  return Topology::from_min_nbhds(2, nb);
}

bool is_open(const Topology& t, SubsetMask a) {
  require_fits(a, t.n());
  return t.is_open(a);
}

SubsetMask closure(const Topology& t, SubsetMask a) {
  require_fits(a, t.n());
  return t.closure(a);
}

SubsetMask interior(const Topology& t, SubsetMask a) {
  require_fits(a, t.n());
  return t.interior(a);
}

SeparationProfile separation_profile(const Topology& t) {
  const int n = t.n();
  SeparationProfile p{true, true, true, true};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool y_near_x = t.min_nbhd(x).has(y);
      const bool x_near_y = t.min_nbhd(y).has(x);
      if (y_near_x && x_near_y) p.t0 = false;
      if (y_near_x) p.t1 = false;
      if (t.min_nbhd(x).intersects(t.min_nbhd(y))) p.hausdorff = false;
    }
  // The smallest open sets around x and around F are min_nbhd[x] and the
  // open hull of F; disjoint separating opens exist iff these are disjoint.
  for (SubsetMask f : t.opens()) {
    const SubsetMask closed = f.complement(n);
    const SubsetMask hull = t.open_hull(closed);
    for (int x = 0; x < n; ++x)
      if (!closed.has(x) && t.min_nbhd(x).intersects(hull)) p.regular = false;
  }
  return p;
}

}  // namespace idealtop
