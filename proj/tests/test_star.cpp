#include <doctest.h>

#include "idealtop/error.hpp"
#include "idealtop/search.hpp"
#include "idealtop/star.hpp"
#include "oracles.hpp"

using namespace idealtop;

namespace {

SubsetMask S(std::initializer_list<Point> p) { return SubsetMask::of(p); }

IdealSpace sierp(SubsetMask carrier) { return IdealSpace(sierpinski(), Ideal(2, carrier)); }

// Every (topology, ideal) pair on n points.
template <class Fn>
void for_each_space(int n, Fn&& fn) {
  const auto ideals = enumerate_ideals(n);
  for (const Topology& t : enumerate_topologies(n))
    for (const Ideal& i : ideals) fn(IdealSpace(t, i));
}

}  // namespace

TEST_CASE("local function examples") {
  CHECK(local_function(sierp(S({1})), S({0})) == S({0}));
  CHECK(local_function(sierp(S({1})), S({1})) == S({}));
  CHECK(local_function(sierp(S({})), S({1})) == S({0, 1}));
  for (int n = 1; n <= 3; ++n)
    for (const Topology& t : enumerate_topologies(n)) {
      const IdealSpace everything(t, Ideal::power_set(n));
      const IdealSpace nothing(t, Ideal::trivial(n));
      for_each_subset(n, [&](SubsetMask a) {
        CHECK(local_function(everything, a).empty());
        CHECK(local_function(nothing, a) == t.closure(a));
      });
      CHECK(local_function(nothing, SubsetMask{}).empty());
    }
  CHECK_THROWS_AS(local_function(sierp(S({})), S({2})), Error);
  CHECK_THROWS_AS(IdealSpace(sierpinski(), Ideal::trivial(3)), Error);
}

TEST_CASE("star closure and psi examples") {
  CHECK(star_closure(sierp(S({1})), S({1})) == S({1}));
  CHECK(star_closure(sierp(S({1})), S({0, 1})) == S({0, 1}));
  CHECK(star_closure(sierp(S({})), S({1})) == closure(sierpinski(), S({1})));
  CHECK(psi(sierp(S({})), S({1})) == S({1}));
  CHECK(psi(sierp(S({})), S({0})) == S({}));
  CHECK(psi(sierp(S({1})), S({0, 1})) == S({0, 1}));
}

TEST_CASE("star topology examples") {
  CHECK(star_topology(sierp(S({}))) == sierpinski());
  CHECK(star_topology(sierp(S({1}))) == discrete_topology(2));
  for (const Topology& t : enumerate_topologies(3))
    CHECK(star_topology(IdealSpace(t, Ideal::power_set(3))) == discrete_topology(3));
}

TEST_CASE("psi topology examples") {
  for (int n = 1; n <= 3; ++n)
    for (const Topology& t : enumerate_topologies(n)) {
      CHECK(psi_topology(IdealSpace(t, Ideal::trivial(n))) == t);
      CHECK(psi_topology(IdealSpace(t, Ideal::power_set(n))) == indiscrete_topology(n));
    }
  const IdealSpace s = sierp(S({1}));
  const SubsetMask gen[] = {psi(s, S({})), psi(s, S({1})), psi(s, S({0, 1}))};
  CHECK(psi_topology(s) == generate_topology(2, gen));
}

TEST_CASE("compatibility and ideal compactness") {
  for (int n = 1; n <= 3; ++n)
    for (const Topology& t : enumerate_topologies(n)) {
      CHECK(is_compatible(IdealSpace(t, Ideal::trivial(n))));
      CHECK(is_ideal_compact(IdealSpace(t, Ideal::trivial(n))));
    }
  for (const Ideal& i : enumerate_ideals(3)) CHECK(is_compatible(IdealSpace(discrete_topology(3), i)));
  CHECK(is_compatible(sierp(S({1}))));
  CHECK(is_ideal_compact(IdealSpace(discrete_topology(3), Ideal::trivial(3))));
}

TEST_CASE("three routes to the local function agree, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const oracle::Family& fam : oracle::topologies_by_family_filter(n)) {
      const Topology t = make_topology(n, fam);
      for (std::uint32_t m = 0; m < subset_count(n); ++m) {
        const IdealSpace s(t, Ideal(n, SubsetMask(m)));
        for_each_subset(n, [&](SubsetMask a) {
          const SubsetMask fast = local_function(s, a);
          REQUIRE(fast == oracle::local_function(n, fam, SubsetMask(m), a));
          REQUIRE(fast == t.closure(a - SubsetMask(m)));
        });
      }
    }
}

TEST_CASE("local function laws, n <= 3") {
  CHECK(check_local_function_laws(sierp(S({1}))).all_passed());
  for (int n = 1; n <= 3; ++n)
    for_each_space(n, [](const IdealSpace& s) {
      const LawReport r = check_local_function_laws(s);
      for (const LawResult& l : r.laws) {
        INFO(l.name);
        REQUIRE(l.passed);
        REQUIRE_FALSE(l.witness.has_value());
      }
    });
}

TEST_CASE("tau is coarser than tau*, and psi meets the star interior, n <= 3") {
  for (int n = 1; n <= 3; ++n)
    for_each_space(n, [n](const IdealSpace& s) {
      const Topology star = star_topology(s);
      for (SubsetMask u : s.top().opens()) REQUIRE(star.is_open(u));
      const SubsetMask x = s.points();
      for_each_subset(n, [&](SubsetMask a) {
        // Ψ(A) can stick out of A; only its trace on A is the τ*-interior.
        REQUIRE((a & psi(s, a)) == x - star_closure(s, x - a));
        REQUIRE(psi(s, a) == x - local_function(s, x - a));
        REQUIRE(star.is_open(a) == a.subset_of(psi(s, a)));
        REQUIRE(star.closure(a) == star_closure(s, a));
      });
    });
}

TEST_CASE("idealizing tau* again with the same ideal changes nothing, n <= 3") {
  for (int n = 1; n <= 3; ++n)
    for_each_space(n, [](const IdealSpace& s) {
      const Topology star = star_topology(s);
      REQUIRE(star_topology(IdealSpace(star, s.ideal())) == star);
    });
}

TEST_CASE("local function is antitone in the ideal, n <= 3") {
  for (int n = 1; n <= 3; ++n)
    for (const Topology& t : enumerate_topologies(n))
      for (std::uint32_t m1 = 0; m1 < subset_count(n); ++m1)
        for (std::uint32_t m2 = 0; m2 < subset_count(n); ++m2) {
          if ((m1 & ~m2) != 0) continue;
          const IdealSpace small(t, Ideal(n, SubsetMask(m1)));
          const IdealSpace large(t, Ideal(n, SubsetMask(m2)));
          for_each_subset(n, [&](SubsetMask a) {
            REQUIRE(local_function(large, a).subset_of(local_function(small, a)));
          });
        }
}
