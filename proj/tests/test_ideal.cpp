#include <doctest.h>

#include "idealtop/error.hpp"
#include "idealtop/ideal.hpp"
#include "idealtop/search.hpp"
#include "oracles.hpp"

using namespace idealtop;

namespace {

SubsetMask S(std::initializer_list<Point> p) { return SubsetMask::of(p); }

}  // namespace

TEST_CASE("ideal membership and generators") {
  const SubsetMask gens[] = {S({0}), S({2})};
  const Ideal i = make_ideal(3, gens);
  CHECK(i.carrier() == S({0, 2}));
  CHECK(contains(i, S({0, 2})));
  CHECK(contains(i, S({})));
  CHECK_FALSE(contains(i, S({1})));
  CHECK(i.proper());

  CHECK(Ideal::trivial(2).carrier().empty());
  CHECK_FALSE(Ideal::power_set(2).proper());
  CHECK(make_ideal(2, {}) == Ideal::trivial(2));

  const SubsetMask bad[] = {S({3})};
  CHECK_THROWS_AS(make_ideal(3, bad), Error);
  CHECK_THROWS_AS(Ideal(2, S({2})), Error);
  CHECK_THROWS_AS(contains(i, S({5})), Error);
}

TEST_CASE("on a finite set the finite-subsets ideal is everything") {
  CHECK(Ideal::finite_subsets(3) == Ideal::power_set(3));
  CHECK_FALSE(Ideal::finite_subsets(3).proper());
}

TEST_CASE("ideal enumeration matches the family filter, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto filtered = oracle::ideals_by_family_filter(n);
    const auto ideals = enumerate_ideals(n);
    REQUIRE(filtered.size() == (std::size_t{1} << n));
    REQUIRE(ideals.size() == filtered.size());
    for (const Ideal& i : ideals) {
      oracle::Family fam;
      for_each_subset(n, [&](SubsetMask a) {
        if (i.contains(a)) fam.push_back(a);
      });
      CHECK(std::find(filtered.begin(), filtered.end(), fam) != filtered.end());
    }
  }
}

TEST_CASE("image ideal") {
  const FiniteMap f(3, 2, {0, 0, 1});
  CHECK(image_ideal(f, Ideal(3, S({0}))).carrier() == S({0}));
  CHECK(image_ideal(f, Ideal(3, S({1, 2}))).carrier() == S({0, 1}));
  CHECK(image_ideal(f, Ideal::trivial(3)) == Ideal::trivial(2));
  CHECK_THROWS_AS(image_ideal(f, Ideal::trivial(2)), Error);

  // Functorial: (g∘f)[I] = g[f[I]].
  const FiniteMap g(2, 2, {1, 1});
  for (std::uint32_t m = 0; m < 8; ++m) {
    const Ideal i(3, SubsetMask(m));
    CHECK(image_ideal(compose(g, f), i) == image_ideal(g, image_ideal(f, i)));
  }
}

TEST_CASE("transfer conditions: carrier shortcut equals the definitions, n <= 3") {
  for (int nd = 1; nd <= 3; ++nd)
    for (int nc = 1; nc <= 3; ++nc)
      for (const FiniteMap& f : enumerate_maps(nd, nc))
        for (const Ideal& i : enumerate_ideals(nd))
          for (const Ideal& j : enumerate_ideals(nc)) {
            const auto slow = transfer_conditions_by_definition(f, i, j);
            REQUIRE(slow == transfer_conditions_fast(f, i.carrier(), j.carrier()));
            REQUIRE(slow == transfer_conditions(f, i, j));
          }
}

TEST_CASE("transfer conditions on small cases") {
  const FiniteMap id = FiniteMap::identity(2);
  const auto same = transfer_conditions(id, Ideal(2, S({1})), Ideal(2, S({1})));
  CHECK((same.preimage_ok && same.image_ok && same.equivalence_ok));

  const auto bigger_cod = transfer_conditions(id, Ideal(2, S({1})), Ideal::power_set(2));
  CHECK_FALSE(bigger_cod.preimage_ok);
  CHECK(bigger_cod.image_ok);
  CHECK_FALSE(bigger_cod.equivalence_ok);

  // Preimage transfer is free when the domain ideal is everything.
  const FiniteMap swap(2, 2, {1, 0});
  CHECK(transfer_conditions(swap, Ideal::power_set(2), Ideal::trivial(2)).preimage_ok);
}
