#include <doctest.h>

#include <string>

#include "idealtop/constructions.hpp"
#include "idealtop/error.hpp"
#include "idealtop/theorems.hpp"
#include "instances.hpp"

using namespace idealtop;
using testing_support::for_each_instance;

namespace {

SubsetMask S(std::initializer_list<Point> p) { return SubsetMask::of(p); }

IdealSpace sierp(SubsetMask carrier) { return IdealSpace(sierpinski(), Ideal(2, carrier)); }

bool all_true(const std::vector<std::pair<std::string_view, bool>>& flags) {
  for (const auto& [name, value] : flags)
    if (!value) return false;
  return true;
}

}  // namespace

TEST_CASE("theorem registry") {
  for (TheoremId id : kAllTheorems) {
    const TheoremInfo& info = theorem_info(id);
    CHECK(info.id == id);
    CHECK(parse_theorem(info.name) == id);
    CHECK(to_string(id) == info.name);
    CHECK_FALSE(info.hypotheses.empty());
    CHECK_FALSE(info.conclusions.empty());
    CHECK(info.designated >= 0);
    CHECK(info.designated < static_cast<int>(info.conclusions.size()));
    for (std::size_t i = 0; i < info.hypotheses.size(); ++i)
      CHECK(hypothesis_index(id, info.hypotheses[i]) == static_cast<int>(i));
  }
  CHECK_THROWS_AS(parse_theorem("NOPE"), Error);
  CHECK_THROWS_AS(hypothesis_index(TheoremId::TC1, "bijective"), Error);
  CHECK(hypothesis_index(TheoremId::CONTPSI, "surjective") >= 0);
}

TEST_CASE("instance dimensions are checked") {
  CHECK_THROWS_AS(Instance(sierp(S({})), sierp(S({})), FiniteMap::identity(3)), Error);
  CHECK_NOTHROW(Instance(sierp(S({})), sierp(S({})), FiniteMap::identity(2)));
}

TEST_CASE("TC1 on the identity of the Sierpinski space") {
  const Instance inst(sierp(S({})), sierp(S({})), FiniteMap::identity(2));
  const Verdict v = check(TheoremId::TC1, inst);
  CHECK_FALSE(v.vacuous);
  CHECK(all_true(v.hypotheses));
  CHECK(all_true(v.conclusions));
  CHECK_FALSE(v.witness.has_value());
  CHECK_FALSE(v.refutes());
}

TEST_CASE("TC1 with the power-set ideal on the domain and a discontinuous map") {
  const Instance inst(sierp(SubsetMask::full(2)), sierp(S({})), FiniteMap(2, 2, {1, 0}));
  const Verdict v = check(TheoremId::TC1, inst);
  CHECK_FALSE(v.flag("continuous"));
  CHECK(v.flag("preimage_ok"));
  CHECK(v.flag("a"));
  CHECK(v.vacuous);
  CHECK_FALSE(v.refutes());
  CHECK_THROWS_AS(v.flag("nonsense"), Error);
}

TEST_CASE("CONTPSI on an added open point") {
  const Instance seed(sierp(S({})), sierp(S({})), FiniteMap::identity(2));
  const PointExtension z = add_open_point(seed.y);
  const Instance inst = widen_codomain(seed, z);
  const Verdict v = check(TheoremId::CONTPSI, inst);
  CHECK(v.flag("continuous"));
  CHECK(v.flag("injective"));
  CHECK(v.flag("preimage_ok"));
  CHECK_FALSE(v.flag("surjective"));
  CHECK_FALSE(v.flag("a"));
  REQUIRE(v.witness.has_value());
  // Least failing mask wins; A = ∅ already fails, and so does A = X.
  CHECK(v.witness->conclusion == "a");
  CHECK(v.witness->side == Side::Domain);
  CHECK(v.witness->subset == S({}));
  CHECK(v.witness->point == z.added);
  const SubsetMask x = inst.x.points();
  CHECK(psi(inst.y, inst.f.image(x)).has(z.added));
  CHECK_FALSE(inst.f.image(psi(inst.x, x)).has(z.added));
}

TEST_CASE("a closed injection that misses a point breaks conclusion b") {
  const Topology y = make_topology(2, std::vector{S({}), S({0}), S({0, 1})});
  const Instance inst(IdealSpace(discrete_topology(1), Ideal::trivial(1)), IdealSpace(y, Ideal::trivial(2)),
                      FiniteMap(1, 2, {1}));
  const Verdict v = check(TheoremId::CLOSEDSUR, inst);
  CHECK(v.hypotheses_hold());
  CHECK(v.flag("a"));
  CHECK_FALSE(v.flag("b"));
  CHECK(v.refutes());
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->side == Side::Codomain);
  CHECK(v.witness->subset == S({0}));
}

TEST_CASE("the bijective equivalence holds even when every leg fails") {
  // Identity from discrete onto Sierpinski with trivial ideals: not a star
  // homeomorphism, and neither commuting identity holds.
  const Instance inst(IdealSpace(discrete_topology(2), Ideal::trivial(2)), sierp(S({})), FiniteMap::identity(2));
  const Verdict v = check(TheoremId::HOMEO_HR, inst);
  CHECK(v.hypotheses_hold());
  CHECK(v.flag("equiv_abc"));
  CHECK_FALSE(v.refutes());
}

TEST_CASE("verdict invariants over every instance with n <= 2") {
  for_each_instance(2, [](const AnalyzedSpace& x, const AnalyzedSpace& y, const AnalyzedMap& f) {
    for (TheoremId id : kAllTheorems) {
      const Verdict v = check(id, x, y, f);
      const TheoremInfo& info = theorem_info(id);
      REQUIRE(v.theorem == id);
      REQUIRE(v.hypotheses.size() == info.hypotheses.size());
      REQUIRE(v.conclusions.size() == info.conclusions.size());
      REQUIRE(v.vacuous == !all_true(v.hypotheses));
      REQUIRE(v.witness.has_value() == !all_true(v.conclusions));
      if (v.witness) REQUIRE_FALSE(v.flag(v.witness->conclusion));

      const Evaluation e = evaluate(id, x, y, f);
      for (std::size_t i = 0; i < v.hypotheses.size(); ++i)
        REQUIRE(((e.hypotheses >> i) & 1U) == v.hypotheses[i].second);
      for (std::size_t i = 0; i < v.conclusions.size(); ++i)
        REQUIRE(((e.conclusions >> i) & 1U) == v.conclusions[i].second);
    }
  });
}

TEST_CASE("analyzed and plain entry points agree") {
  const Instance inst(sierp(S({1})), IdealSpace(discrete_topology(3), Ideal(3, S({2}))), FiniteMap(2, 3, {2, 0}));
  for (TheoremId id : kAllTheorems)
    CHECK(check(id, inst) == check(id, AnalyzedSpace(inst.x), AnalyzedSpace(inst.y), AnalyzedMap(inst.f)));
}

TEST_CASE("closed bijections satisfy both closed-map conclusions, n <= 2") {
  // With surjectivity restored the closed-map statement does hold.
  for_each_instance(2, [](const AnalyzedSpace& x, const AnalyzedSpace& y, const AnalyzedMap& f) {
    const Verdict v = check(TheoremId::CLOSEDSUR, x, y, f);
    if (v.hypotheses_hold() && f.surjective) REQUIRE(v.conclusions_hold());
  });
}

TEST_CASE("JHCOMP hypotheses force a discrete codomain") {
  for_each_instance(2, [](const AnalyzedSpace& x, const AnalyzedSpace& y, const AnalyzedMap& f) {
    const Verdict v = check(TheoremId::JHCOMP, x, y, f);
    if (v.flag("hausdorff_cod")) REQUIRE(y.space.top() == discrete_topology(y.n()));
    REQUIRE(v.flag("ideal_compact_dom"));
  });
}
