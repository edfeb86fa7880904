#include "idealtop/star.hpp"

#include <algorithm>
#include <vector>

#include "idealtop/error.hpp"

namespace idealtop {

IdealSpace::IdealSpace(Topology top, Ideal ideal) : top_(std::move(top)), ideal_(ideal) {
  if (top_.n() != ideal_.n())
    throw Error(ErrorCode::DimensionMismatch, "topology has " + std::to_string(top_.n()) + " points, ideal has " +
                                                  std::to_string(ideal_.n()));
}

namespace {

SubsetMask local_unchecked(const IdealSpace& s, SubsetMask a) {
  SubsetMask out;
  const SubsetMask carrier = s.ideal().carrier();
  for (int x = 0; x < s.n(); ++x)
    if (!(s.top().min_nbhd(x) & a).subset_of(carrier)) out = out.with(x);
  return out;
}

}  // namespace

SubsetMask local_function(const IdealSpace& s, SubsetMask a) {
  require_fits(a, s.n());
  return local_unchecked(s, a);
}

SubsetMask star_closure(const IdealSpace& s, SubsetMask a) {
  require_fits(a, s.n());
  return a | local_unchecked(s, a);
}

SubsetMask psi(const IdealSpace& s, SubsetMask a) {
  require_fits(a, s.n());
  const SubsetMask out = local_unchecked(s, a.complement(s.n())).complement(s.n());
  if (!s.top().is_open(out)) throw Error(ErrorCode::Internal, "Ψ produced a set that is not open");
  return out;
}

Topology star_topology(const IdealSpace& s) {
  const int n = s.n();
  std::vector<SubsetMask> opens;
  for_each_subset(n, [&](SubsetMask closed) {
    if (local_unchecked(s, closed).subset_of(closed)) opens.push_back(closed.complement(n));
  });
  std::sort(opens.begin(), opens.end());
  Topology star = make_topology(n, opens);

  for_each_subset(n, [&](SubsetMask u) {
    if (star.is_open(u) != u.subset_of(psi(s, u)))
      throw Error(ErrorCode::Internal, "star topology disagrees with the Ψ membership test");
  });
  for (SubsetMask u : s.top().opens())
    if (!star.is_open(u)) throw Error(ErrorCode::Internal, "star topology is not finer than the base topology");
  return star;
}

Topology psi_topology(const IdealSpace& s) {
  std::vector<SubsetMask> family;
  family.reserve(s.top().opens().size());
  for (SubsetMask u : s.top().opens()) family.push_back(psi(s, u));
  return generate_topology(s.n(), family);
}

bool is_compatible(const IdealSpace& s) {
  const SubsetMask carrier = s.ideal().carrier();
  bool ok = true;
  for_each_subset(s.n(), [&](SubsetMask a) {
    if (!ok || a.subset_of(carrier)) return;
    bool locally_small = true;
    for (Point x : a.points())
      if (!(s.top().min_nbhd(x) & a).subset_of(carrier)) {
        locally_small = false;
        break;
      }
    if (locally_small) ok = false;
  });
  return ok;
}

bool is_ideal_compact(const IdealSpace& s) {
  const auto& opens = s.top().opens();
  const SubsetMask all = s.points();
  // Subfamilies are enumerated only while that stays cheap; beyond it every
  // cover is still finite and the remainder argument is the same.
  if (opens.size() > 20) return true;
  const std::uint64_t families = std::uint64_t{1} << opens.size();
  for (std::uint64_t pick = 1; pick < families; ++pick) {
    SubsetMask covered;
    for (size_t i = 0; i < opens.size(); ++i)
      if ((pick >> i) & 1U) covered |= opens[i];
    if (covered != all) continue;
    // The finite subcollection is the cover itself.
    if (!s.ideal().contains(all - covered)) return false;
  }
  return true;
}

LawReport check_local_function_laws(const IdealSpace& s) {
  const int n = s.n();
  LawReport r;
  r.laws[0].name = "monotone";
  r.laws[1].name = "closed";
  r.laws[2].name = "idempotent_bound";
  r.laws[3].name = "additive";
  r.laws[4].name = "ideal_invariant";

  std::vector<SubsetMask> star(subset_count(n));
  for_each_subset(n, [&](SubsetMask a) { star[a.bits()] = local_unchecked(s, a); });
  auto fail = [&](int law, SubsetMask a, SubsetMask b, SubsetMask i) {
    if (r.laws[law].passed) r.laws[law].witness = std::array{a, b, i};
    r.laws[law].passed = false;
  };

  const Topology& t = s.top();
  const SubsetMask carrier = s.ideal().carrier();
  for_each_subset(n, [&](SubsetMask a) {
    const SubsetMask as = star[a.bits()];
    if (t.closure(as) != as || !as.subset_of(t.closure(a))) fail(1, a, {}, {});
    if (!star[as.bits()].subset_of(as)) fail(2, a, {}, {});
    for_each_subset(n, [&](SubsetMask b) {
      if (a.subset_of(b) && !as.subset_of(star[b.bits()])) fail(0, a, b, {});
      if (star[(a | b).bits()] != (as | star[b.bits()])) fail(3, a, b, {});
      if (b.subset_of(carrier) && (star[(a | b).bits()] != as || star[(a - b).bits()] != as)) fail(4, a, {}, b);
    });
  });
  return r;
}

}  // namespace idealtop
