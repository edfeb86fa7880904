#include "idealtop/ideal.hpp"

#include "idealtop/error.hpp"

namespace idealtop {

Ideal::Ideal(int n, SubsetMask carrier) : n_(n), carrier_(carrier) {
  require_point_count(n);
  require_fits(carrier, n);
}

Ideal make_ideal(int n, std::span<const SubsetMask> generators) {
  require_point_count(n);
  SubsetMask carrier;
  for (SubsetMask g : generators) {
    require_fits(g, n);
    carrier |= g;
  }
  return Ideal(n, carrier);
}

bool contains(const Ideal& ideal, SubsetMask a) {
  require_fits(a, ideal.n());
  return ideal.contains(a);
}

Ideal image_ideal(const FiniteMap& f, const Ideal& ideal) {
  if (f.n_dom() != ideal.n()) throw Error(ErrorCode::DimensionMismatch, "ideal does not live on the map's domain");
  return Ideal(f.n_cod(), f.image(ideal.carrier()));
}

TransferConditions transfer_conditions_fast(const FiniteMap& f, SubsetMask dom_carrier, SubsetMask cod_carrier) {
  TransferConditions t;
  const SubsetMask back = f.preimage(cod_carrier);
  t.preimage_ok = back.subset_of(dom_carrier);
  t.image_ok = f.image(dom_carrier).subset_of(cod_carrier);
  // dom_carrier ⊆ f⁻¹[f[dom_carrier]] always, so both directions together
  // pin the preimage of the codomain carrier to the domain carrier.
  t.equivalence_ok = back == dom_carrier;
  return t;
}

TransferConditions transfer_conditions_by_definition(const FiniteMap& f, const Ideal& dom, const Ideal& cod) {
  TransferConditions t{true, true, true};
  for_each_subset(cod.n(), [&](SubsetMask i) {
    if (cod.contains(i) && !dom.contains(f.preimage(i))) t.preimage_ok = false;
  });
  for_each_subset(dom.n(), [&](SubsetMask i) {
    const bool small_here = dom.contains(i);
    const bool small_there = cod.contains(f.image(i));
    if (small_here && !small_there) t.image_ok = false;
    if (small_here != small_there) t.equivalence_ok = false;
  });
  return t;
}

TransferConditions transfer_conditions(const FiniteMap& f, const Ideal& dom, const Ideal& cod) {
  require_map_dims(f, dom.n(), cod.n());
  const auto fast = transfer_conditions_fast(f, dom.carrier(), cod.carrier());
  const auto slow = transfer_conditions_by_definition(f, dom, cod);
  if (fast != slow) throw Error(ErrorCode::Internal, "ideal transfer shortcut disagrees with definition");
  return fast;
}

}  // namespace idealtop
