#pragma once

#include "idealtop/star.hpp"
#include "idealtop/theorems.hpp"

namespace idealtop {

/// A space with one extra point appended at index seed.n().
struct PointExtension {
  IdealSpace space;
  Point added;
};

/// Appends a point z that lies in every nonempty open set: the opens are
/// {O ∪ {z} : O open in the seed} ∪ {∅}, and z joins the ideal carrier.
/// No set has z in its local function. Throws CapExceeded past kMaxPoints.
PointExtension add_open_point(const IdealSpace& seed);

/// Appends a point z whose only neighborhood is the whole space: the
/// topology is generated by the seed's opens plus the whole new space, and
/// the ideal is unchanged, so {z} is not small and z lies in A* for every
/// non-small A.
PointExtension add_generic_point(const IdealSpace& seed);

enum class CollapseVariant {
  // Neighborhoods of x0 gain z; other opens are kept.
  Cont,
  // Opens avoiding x0 are kept; z and x0 share the single neighborhood Z.
  Open,
};

struct CollapseExtension {
  IdealSpace space;
  Point added;
  Point collapsed;
};

/// Appends a twin z of x0 and removes x0 from the ideal carrier. Callers
/// extend a map by sending z where x0 goes. Throws BadPoint, CapExceeded.
CollapseExtension collapse_point(const IdealSpace& seed, Point x0, CollapseVariant variant);

/// f̃ : X -> Z with f̃(x) = f(x), where Z extends the seed's codomain.
Instance widen_codomain(const Instance& seed, const PointExtension& z);

/// Z -> Ỹ where Z = collapse_point(seed.x, x0, variant), f̃(z) = f(x0), and
/// Ỹ keeps the codomain topology with f(x0) removed from its carrier.
Instance collapse_instance(const Instance& seed, Point x0, CollapseVariant variant);

}  // namespace idealtop
