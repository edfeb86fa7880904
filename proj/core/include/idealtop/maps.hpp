#pragma once

#include <cstdint>
#include <vector>

#include "idealtop/space.hpp"

namespace idealtop {

/// A total function {0..n_dom-1} -> {0..n_cod-1} as a value table.
class FiniteMap {
 public:
  /// Throws BadPoint for out-of-range values, CapExceeded/BadMask for bad sizes.
  FiniteMap(int n_dom, int n_cod, std::vector<Point> values);

  static FiniteMap identity(int n);
  static FiniteMap constant(int n_dom, int n_cod, Point value);

  int n_dom() const { return n_dom_; }
  int n_cod() const { return n_cod_; }
  Point operator()(Point x) const { return values_[x]; }
  const std::vector<Point>& values() const { return values_; }

  SubsetMask image(SubsetMask a) const;
  SubsetMask preimage(SubsetMask b) const;
  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }

  friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

 private:
  int n_dom_;
  int n_cod_;
  std::vector<Point> values_;
};

/// g ∘ f.
FiniteMap compose(const FiniteMap& g, const FiniteMap& f);

SubsetMask image(const FiniteMap& f, SubsetMask a);
SubsetMask preimage(const FiniteMap& f, SubsetMask b);

struct MapProfile {
  bool continuous = false;
  bool open_map = false;
  bool closed_map = false;
  bool injective = false;
  bool surjective = false;
  bool bijective = false;
  bool homeomorphism = false;
};

/// The five textbook characterizations of continuity, evaluated
/// independently: pointwise neighborhoods, open preimages, closure of
/// images, closure of preimages, interior of preimages.
struct ContinuityCharacterizations {
  bool pointwise = false;
  bool open_preimages = false;
  bool image_of_closure = false;
  bool closure_of_preimage = false;
  bool interior_of_preimage = false;

  bool agree() const {
    return pointwise == open_preimages && open_preimages == image_of_closure &&
           image_of_closure == closure_of_preimage && closure_of_preimage == interior_of_preimage;
  }
};

ContinuityCharacterizations continuity_characterizations(const FiniteMap& f, const Topology& dom, const Topology& cod);

bool is_continuous(const FiniteMap& f, const Topology& dom, const Topology& cod);
bool is_open_map(const FiniteMap& f, const Topology& dom, const Topology& cod);
bool is_closed_map(const FiniteMap& f, const Topology& dom, const Topology& cod);

enum class ClassifyMode { Fast, Paranoid };

/// Continuity is decided from open preimages. In Paranoid mode all five
/// characterizations run and any disagreement throws Internal.
MapProfile classify(const FiniteMap& f, const Topology& dom, const Topology& cod,
                    ClassifyMode mode = ClassifyMode::Fast);

void require_map_dims(const FiniteMap& f, int n_dom, int n_cod);

}  // namespace idealtop
