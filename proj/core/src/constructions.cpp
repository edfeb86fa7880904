#include "idealtop/constructions.hpp"

#include <string>
#include <vector>

#include "idealtop/error.hpp"

namespace idealtop {

namespace {

int grown_size(const IdealSpace& seed) {
  const int n = seed.n() + 1;
  if (n > kMaxPoints)
    throw Error(ErrorCode::CapExceeded, "adding a point to a " + std::to_string(seed.n()) + "-point space");
  return n;
}

}  // namespace

PointExtension add_open_point(const IdealSpace& seed) {
  const int n = grown_size(seed);
  const Point z = seed.n();
  std::vector<SubsetMask> opens{SubsetMask{}};
  for (SubsetMask o : seed.top().opens()) opens.push_back(o.with(z));
  return {IdealSpace(make_topology(n, opens), Ideal(n, seed.ideal().carrier().with(z))), z};
}

PointExtension add_generic_point(const IdealSpace& seed) {
  const int n = grown_size(seed);
  std::vector<SubsetMask> family(seed.top().opens());
  family.push_back(SubsetMask::full(n));
  return {IdealSpace(generate_topology(n, family), Ideal(n, seed.ideal().carrier())), seed.n()};
}

CollapseExtension collapse_point(const IdealSpace& seed, Point x0, CollapseVariant variant) {
  if (x0 < 0 || x0 >= seed.n())
    throw Error(ErrorCode::BadPoint, "point " + std::to_string(x0) + " is not in the seed space");
  const int n = grown_size(seed);
  const Point z = seed.n();
  std::vector<SubsetMask> opens;
  for (SubsetMask o : seed.top().opens()) {
    if (!o.has(x0))
      opens.push_back(o);
    else if (variant == CollapseVariant::Cont)
      opens.push_back(o.with(z));
  }
  if (variant == CollapseVariant::Open) opens.push_back(SubsetMask::full(n));
  return {IdealSpace(make_topology(n, opens), Ideal(n, seed.ideal().carrier().without(x0))), z, x0};
}

Instance widen_codomain(const Instance& seed, const PointExtension& z) {
  if (z.space.n() != seed.y.n() + 1)
    throw Error(ErrorCode::DimensionMismatch, "extension does not grow the seed codomain by one point");
  return Instance(seed.x, z.space, FiniteMap(seed.x.n(), z.space.n(), seed.f.values()));
}

Instance collapse_instance(const Instance& seed, Point x0, CollapseVariant variant) {
  CollapseExtension z = collapse_point(seed.x, x0, variant);
  const Point y0 = seed.f(x0);
  std::vector<Point> values = seed.f.values();
  values.push_back(y0);
  IdealSpace codomain(seed.y.top(), Ideal(seed.y.n(), seed.y.ideal().carrier().without(y0)));
  FiniteMap f(z.space.n(), seed.y.n(), std::move(values));
  return Instance(std::move(z.space), std::move(codomain), std::move(f));
}

}  // namespace idealtop
