#include "idealtop/maps.hpp"

#include <string>

#include "idealtop/error.hpp"

namespace idealtop {

FiniteMap::FiniteMap(int n_dom, int n_cod, std::vector<Point> values)
    : n_dom_(n_dom), n_cod_(n_cod), values_(std::move(values)) {
  require_point_count(n_dom);
  require_point_count(n_cod);
  if (static_cast<int>(values_.size()) != n_dom)
    throw Error(ErrorCode::DimensionMismatch,
                "map has " + std::to_string(values_.size()) + " values for " + std::to_string(n_dom) + " points");
  for (Point v : values_)
    if (v < 0 || v >= n_cod) throw Error(ErrorCode::BadPoint, "map value " + std::to_string(v) + " out of range");
}

FiniteMap FiniteMap::identity(int n) {
  std::vector<Point> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return FiniteMap(n, n, std::move(v));
}

FiniteMap FiniteMap::constant(int n_dom, int n_cod, Point value) {
  return FiniteMap(n_dom, n_cod, std::vector<Point>(n_dom, value));
}

SubsetMask FiniteMap::image(SubsetMask a) const {
  SubsetMask out;
  for (auto b = a.bits(); b != 0; b &= b - 1) out = out.with(values_[std::countr_zero(b)]);
  return out;
}

SubsetMask FiniteMap::preimage(SubsetMask b) const {
  SubsetMask out;
  for (int x = 0; x < n_dom_; ++x)
    if (b.has(values_[x])) out = out.with(x);
  return out;
}

bool FiniteMap::injective() const { return image(SubsetMask::full(n_dom_)).size() == n_dom_; }

bool FiniteMap::surjective() const { return image(SubsetMask::full(n_dom_)) == SubsetMask::full(n_cod_); }

FiniteMap compose(const FiniteMap& g, const FiniteMap& f) {
  if (f.n_cod() != g.n_dom()) throw Error(ErrorCode::DimensionMismatch, "composition sizes disagree");
  std::vector<Point> v(f.n_dom());
  for (int x = 0; x < f.n_dom(); ++x) v[x] = g(f(x));
  return FiniteMap(f.n_dom(), g.n_cod(), std::move(v));
}

SubsetMask image(const FiniteMap& f, SubsetMask a) {
  require_fits(a, f.n_dom());
  return f.image(a);
}

SubsetMask preimage(const FiniteMap& f, SubsetMask b) {
  require_fits(b, f.n_cod());
  return f.preimage(b);
}

void require_map_dims(const FiniteMap& f, int n_dom, int n_cod) {
  if (f.n_dom() != n_dom || f.n_cod() != n_cod)
    throw Error(ErrorCode::DimensionMismatch, "map is " + std::to_string(f.n_dom()) + "->" + std::to_string(f.n_cod()) +
                                                  " but spaces are " + std::to_string(n_dom) + "->" +
                                                  std::to_string(n_cod));
}

bool is_continuous(const FiniteMap& f, const Topology& dom, const Topology& cod) {
  require_map_dims(f, dom.n(), cod.n());
  for (SubsetMask o : cod.opens())
    if (!dom.is_open(f.preimage(o))) return false;
  return true;
}

bool is_open_map(const FiniteMap& f, const Topology& dom, const Topology& cod) {
  require_map_dims(f, dom.n(), cod.n());
  for (SubsetMask o : dom.opens())
    if (!cod.is_open(f.image(o))) return false;
  return true;
}

bool is_closed_map(const FiniteMap& f, const Topology& dom, const Topology& cod) {
  require_map_dims(f, dom.n(), cod.n());
  for (SubsetMask o : dom.opens())
    if (!cod.is_closed(f.image(o.complement(dom.n())))) return false;
  return true;
}

ContinuityCharacterizations continuity_characterizations(const FiniteMap& f, const Topology& dom,
                                                         const Topology& cod) {
  require_map_dims(f, dom.n(), cod.n());
  ContinuityCharacterizations c;

  // For every x and every open V around f(x), some open U around x maps into V.
  c.pointwise = true;
  for (int x = 0; x < dom.n() && c.pointwise; ++x)
    for (SubsetMask v : cod.opens()) {
      if (!v.has(f(x))) continue;
      bool found = false;
      for (SubsetMask u : dom.opens())
        if (u.has(x) && f.image(u).subset_of(v)) {
          found = true;
          break;
        }
      if (!found) {
        c.pointwise = false;
        break;
      }
    }

  c.open_preimages = is_continuous(f, dom, cod);

  c.image_of_closure = true;
  for_each_subset(dom.n(), [&](SubsetMask a) {
    if (!f.image(dom.closure(a)).subset_of(cod.closure(f.image(a)))) c.image_of_closure = false;
  });

  c.closure_of_preimage = true;
  c.interior_of_preimage = true;
  for_each_subset(cod.n(), [&](SubsetMask b) {
    if (!dom.closure(f.preimage(b)).subset_of(f.preimage(cod.closure(b)))) c.closure_of_preimage = false;
    if (!f.preimage(cod.interior(b)).subset_of(dom.interior(f.preimage(b)))) c.interior_of_preimage = false;
  });
  return c;
}

MapProfile classify(const FiniteMap& f, const Topology& dom, const Topology& cod, ClassifyMode mode) {
  require_map_dims(f, dom.n(), cod.n());
  MapProfile p;
  p.continuous = is_continuous(f, dom, cod);
  if (mode == ClassifyMode::Paranoid) {
    const auto c = continuity_characterizations(f, dom, cod);
    if (!c.agree() || c.open_preimages != p.continuous)
      throw Error(ErrorCode::Internal, "continuity characterizations disagree");
  }
  p.open_map = is_open_map(f, dom, cod);
  p.closed_map = is_closed_map(f, dom, cod);
  p.injective = f.injective();
  p.surjective = f.surjective();
  p.bijective = p.injective && p.surjective;
  p.homeomorphism = p.continuous && p.open_map && p.bijective;
  return p;
}

}  // namespace idealtop
