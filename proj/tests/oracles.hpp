#pragma once

// Brute-force reference routes used only by tests. Nothing here calls the
// minimal-neighborhood machinery it is meant to check.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "idealtop/subset.hpp"

namespace oracle {

using idealtop::SubsetMask;
using Family = std::vector<SubsetMask>;  // sorted ascending, no duplicates

inline Family normalized(Family f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

inline bool closed_under_union_and_intersection(const Family& f) {
  for (SubsetMask a : f)
    for (SubsetMask b : f) {
      if (!std::binary_search(f.begin(), f.end(), a | b)) return false;
      if (!std::binary_search(f.begin(), f.end(), a & b)) return false;
    }
  return true;
}

/// Every topology on n points as its open family: filter all families of
/// proper nonempty subsets, adjoin ∅ and X, keep those closed under ∪ and ∩.
inline std::vector<Family> topologies_by_family_filter(int n) {
  std::vector<SubsetMask> middle;
  for (std::uint32_t b = 1; b + 1 < (1U << n); ++b) middle.emplace_back(b);
  std::vector<Family> out;
  const std::uint64_t families = std::uint64_t{1} << middle.size();
  for (std::uint64_t pick = 0; pick < families; ++pick) {
    Family f{SubsetMask{}, SubsetMask::full(n)};
    for (size_t i = 0; i < middle.size(); ++i)
      if ((pick >> i) & 1U) f.push_back(middle[i]);
    f = normalized(std::move(f));
    if (closed_under_union_and_intersection(f)) out.push_back(std::move(f));
  }
  return out;
}

/// Every family F ⊆ P(X) satisfying ∅ ∈ F, downward closure and union
/// closure.
inline std::vector<Family> ideals_by_family_filter(int n) {
  const std::uint32_t subsets = 1U << n;
  std::vector<Family> out;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  for (std::uint64_t pick = 0; pick < families; ++pick) {
    auto in = [&](SubsetMask a) { return (pick >> a.bits()) & 1U; };
    if (!in(SubsetMask{})) continue;
    bool ok = true;
    for (std::uint32_t a = 0; a < subsets && ok; ++a) {
      if (!in(SubsetMask(a))) continue;
      for (std::uint32_t b = 0; b < subsets && ok; ++b) {
        if ((b & ~a) == 0 && !in(SubsetMask(b))) ok = false;
        if (in(SubsetMask(b)) && !in(SubsetMask(a | b))) ok = false;
      }
    }
    if (!ok) continue;
    Family f;
    for (std::uint32_t a = 0; a < subsets; ++a)
      if (in(SubsetMask(a))) f.emplace_back(a);
    out.push_back(std::move(f));
  }
  return out;
}

inline bool member(const Family& f, SubsetMask a) { return std::binary_search(f.begin(), f.end(), a); }

/// Smallest family containing seed, ∅ and X, closed under ∪ and ∩, by
/// fixpoint iteration.
inline Family close_family(int n, Family seed) {
  seed.push_back(SubsetMask{});
  seed.push_back(SubsetMask::full(n));
  Family f = normalized(std::move(seed));
  bool grew = true;
  while (grew) {
    grew = false;
    Family next = f;
    for (SubsetMask a : f)
      for (SubsetMask b : f) {
        next.push_back(a | b);
        next.push_back(a & b);
      }
    next = normalized(std::move(next));
    if (next.size() != f.size()) grew = true;
    f = std::move(next);
  }
  return f;
}

/// Closure from the open family: complement of the union of opens missing A.
inline SubsetMask closure(int n, const Family& opens, SubsetMask a) {
  SubsetMask out = SubsetMask::full(n);
  for (SubsetMask u : opens)
    if (!u.intersects(a)) out = out - u;
  return out;
}

/// Local function straight from its definition: x ∈ A* iff A ∩ U is not
/// small for every open U containing x.
inline SubsetMask local_function(int n, const Family& opens, SubsetMask carrier, SubsetMask a) {
  SubsetMask out;
  for (int x = 0; x < n; ++x) {
    bool every = true;
    for (SubsetMask u : opens)
      if (u.has(x) && (u & a).subset_of(carrier)) every = false;
    if (every) out = out.with(x);
  }
  return out;
}

inline bool regular(int n, const Family& opens) {
  for (SubsetMask o : opens) {
    const SubsetMask closed = o.complement(n);
    for (int x = 0; x < n; ++x) {
      if (closed.has(x)) continue;
      bool separated = false;
      for (SubsetMask u : opens)
        for (SubsetMask v : opens)
          if (u.has(x) && closed.subset_of(v) && !u.intersects(v)) separated = true;
      if (!separated) return false;
    }
  }
  return true;
}

inline bool hausdorff(int n, const Family& opens) {
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool separated = false;
      for (SubsetMask u : opens)
        for (SubsetMask v : opens)
          if (u.has(x) && v.has(y) && !u.intersects(v)) separated = true;
      if (!separated) return false;
    }
  return true;
}

}  // namespace oracle
