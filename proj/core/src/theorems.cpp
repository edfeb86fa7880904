#include "idealtop/theorems.hpp"

#include <stdexcept>
#include <string>

#include "idealtop/error.hpp"

namespace idealtop {

namespace {

using namespace std::string_view_literals;

constexpr std::array kContHyp = {"continuous"sv, "preimage_ok"sv};
constexpr std::array kContBijHyp = {"continuous"sv, "injective"sv, "surjective"sv, "preimage_ok"sv};
constexpr std::array kOpenHyp = {"open"sv, "image_ok"sv};
constexpr std::array kOpenBijHyp = {"open"sv, "injective"sv, "surjective"sv, "image_ok"sv};
constexpr std::array kClosedInjHyp = {"closed"sv, "injective"sv, "image_ok"sv};
constexpr std::array kHomeoCorHyp = {"homeomorphism"sv, "equivalence_ok"sv};
constexpr std::array kHomeoHrHyp = {"injective"sv, "surjective"sv, "image_ideal_eq"sv};
constexpr std::array kHr34Hyp = {"continuous_into_psi"sv, "injective"sv, "compatible_cod"sv, "preimage_ok"sv};
constexpr std::array kHr35Hyp = {"open_from_psi"sv, "injective"sv, "surjective"sv, "compatible_dom"sv,
                                 "image_ok"sv};
constexpr std::array kSamuelsHyp = {"dense_in_itself"sv, "regular_cod"sv};
constexpr std::array kJhHyp = {"injective"sv,   "surjective"sv,     "ideal_compact_dom"sv,
                               "hausdorff_cod"sv, "image_ideal_eq"sv, "star_continuous"sv};

constexpr std::array kAbEquiv = {"a"sv, "b"sv, "equiv_ab"sv};
constexpr std::array kAb = {"a"sv, "b"sv};
constexpr std::array kAbcEquiv = {"a"sv, "b"sv, "c"sv, "equiv_abc"sv};
constexpr std::array kOnlyAbcEquiv = {"equiv_abc"sv};
constexpr std::array kCorConcl = {"a"sv, "b"sv, "c"sv, "d"sv, "e"sv, "all_equiv"sv};
constexpr std::array kStarOpen = {"star_open"sv};
constexpr std::array kOnlyA = {"a"sv};
constexpr std::array kSamuelsConcl = {"continuity_equiv"sv};
constexpr std::array kJhConcl = {"star_homeomorphism"sv};

const std::array<TheoremInfo, kAllTheorems.size()> kInfo = {{
    {TheoremId::TC1, "TC1", "continuity and preimage-small transfer give f[A*] ⊆ (f[A])*", kContHyp, kAbEquiv, 0},
    {TheoremId::TC2, "TC2", "continuity and preimage-small transfer give star continuity", kContHyp, kAbcEquiv, 0},
    {TheoremId::CONTPSI, "CONTPSI", "continuous bijection gives Ψ(f[A]) ⊆ f[Ψ(A)]", kContBijHyp, kAbEquiv, 0},
    {TheoremId::TO1, "TO1", "open map and image-small transfer give f[Ψ(A)] ⊆ Ψ(f[A])", kOpenHyp, kAbEquiv, 0},
    {TheoremId::OPEN_STAR, "OPEN_STAR", "open map stays open between star topologies", kOpenHyp, kStarOpen, 0},
    {TheoremId::OPENBIJ, "OPENBIJ", "open bijection gives (f[A])* ⊆ f[A*]", kOpenBijHyp, kAbEquiv, 0},
    {TheoremId::CLOSEDSUR, "CLOSEDSUR", "closed injection gives (f[A])* ⊆ f[A*]", kClosedInjHyp, kAb, 0},
    {TheoremId::HOMEO_COR, "HOMEO_COR", "homeomorphism with ideal equivalence preserves everything", kHomeoCorHyp,
     kCorConcl, 0},
    {TheoremId::HOMEO_HR, "HOMEO_HR", "bijection with f[I] = J: star homeomorphism ⇔ f[A*] = (f[A])* ⇔ Ψ commutes",
     kHomeoHrHyp, kOnlyAbcEquiv, 0},
    {TheoremId::HR34, "HR34", "continuous injection into ⟨Ψ(σ)⟩ gives Ψ(f[A]) ⊆ f[Ψ(A)]", kHr34Hyp, kOnlyA, 0},
    {TheoremId::HR35, "HR35", "open bijection from ⟨Ψ(τ)⟩ gives f[Ψ(A)] ⊆ Ψ(f[A])", kHr35Hyp, kOnlyA, 0},
    {TheoremId::SAMUELS, "SAMUELS", "X = X* and regular codomain: τ- and τ*-continuity coincide", kSamuelsHyp,
     kSamuelsConcl, 0},
    {TheoremId::JHCOMP, "JHCOMP", "ideal-compact onto Hausdorff: star-continuous bijection is a star homeomorphism",
     kJhHyp, kJhConcl, 0},
}};

// One conclusion's truth value plus where it first fails.
struct Outcome {
  bool holds = true;
  Side side = Side::None;
  std::optional<SubsetMask> subset;
  std::optional<Point> point;
  Side point_side = Side::None;
};

Outcome flag(bool value) {
  Outcome o;
  o.holds = value;
  return o;
}

// First subset (ascending) of the given side whose violation set is
// nonempty; the violation's points live on violation_side.
template <class Pred>
Outcome forall_subsets(int n, Side side, Side violation_side, Pred&& violation) {
  const std::uint32_t total = subset_count(n);
  for (std::uint32_t b = 0; b < total; ++b) {
    const SubsetMask v = violation(SubsetMask(b));
    if (!v.empty()) return Outcome{false, side, SubsetMask(b), v.lowest(), violation_side};
  }
  return {};
}

SubsetMask symdiff(SubsetMask a, SubsetMask b) { return (a - b) | (b - a); }

Outcome continuity(const AnalyzedMap& f, const Topology& dom, const Topology& cod) {
  for (SubsetMask o : cod.opens()) {
    const SubsetMask pre = f.preimage[o.bits()];
    if (!dom.is_open(pre)) return Outcome{false, Side::Codomain, o, (pre - dom.interior(pre)).lowest(), Side::Domain};
  }
  return {};
}

Outcome openness(const AnalyzedMap& f, const Topology& dom, const Topology& cod) {
  for (SubsetMask o : dom.opens()) {
    const SubsetMask img = f.image[o.bits()];
    if (!cod.is_open(img)) return Outcome{false, Side::Domain, o, (img - cod.interior(img)).lowest(), Side::Codomain};
  }
  return {};
}

Outcome closedness(const AnalyzedMap& f, const Topology& dom, const Topology& cod) {
  for (SubsetMask o : dom.opens()) {
    const SubsetMask closed = o.complement(dom.n());
    const SubsetMask img = f.image[closed.bits()];
    if (!cod.is_closed(img))
      return Outcome{false, Side::Domain, closed, (cod.closure(img) - img).lowest(), Side::Codomain};
  }
  return {};
}

Outcome homeomorphism(const AnalyzedMap& f, const Topology& dom, const Topology& cod) {
  if (Outcome o = openness(f, dom, cod); !o.holds) return o;
  if (Outcome c = continuity(f, dom, cod); !c.holds) return c;
  return flag(f.injective && f.surjective);
}

Outcome all_equal(std::initializer_list<bool> values) {
  const bool first = *values.begin();
  for (bool v : values)
    if (v != first) return flag(false);
  return flag(true);
}

struct Run {
  std::array<bool, 8> hyp{};
  std::array<Outcome, 8> concl{};
};

class Evaluator {
 public:
  Evaluator(const AnalyzedSpace& x, const AnalyzedSpace& y, const AnalyzedMap& f) : x_(x), y_(y), f_(f) {}

  Run run(TheoremId id) const {
    switch (id) {
      case TheoremId::TC1: return tc1();
      case TheoremId::TC2: return tc2();
      case TheoremId::CONTPSI: return contpsi();
      case TheoremId::TO1: return to1();
      case TheoremId::OPEN_STAR: return open_star();
      case TheoremId::OPENBIJ: return openbij();
      case TheoremId::CLOSEDSUR: return closedsur();
      case TheoremId::HOMEO_COR: return homeo_cor();
      case TheoremId::HOMEO_HR: return homeo_hr();
      case TheoremId::HR34: return hr34();
      case TheoremId::HR35: return hr35();
      case TheoremId::SAMUELS: return samuels();
      case TheoremId::JHCOMP: return jhcomp();
    }
    throw Error(ErrorCode::UnknownTheorem, "unhandled theorem id");
  }

 private:
  SubsetMask img(SubsetMask a) const { return f_.image[a.bits()]; }
  SubsetMask pre(SubsetMask b) const { return f_.preimage[b.bits()]; }
  SubsetMask lx(SubsetMask a) const { return x_.local[a.bits()]; }
  SubsetMask ly(SubsetMask b) const { return y_.local[b.bits()]; }
  SubsetMask px(SubsetMask a) const { return x_.psi[a.bits()]; }
  SubsetMask py(SubsetMask b) const { return y_.psi[b.bits()]; }

  bool preimage_ok() const { return pre(y_.carrier()).subset_of(x_.carrier()); }
  bool image_ok() const { return img(x_.carrier()).subset_of(y_.carrier()); }
  bool equivalence_ok() const { return pre(y_.carrier()) == x_.carrier(); }
  bool image_ideal_eq() const { return img(x_.carrier()) == y_.carrier(); }
  bool continuous() const { return continuity(f_, x_.space.top(), y_.space.top()).holds; }
  bool open() const { return openness(f_, x_.space.top(), y_.space.top()).holds; }

  template <class Pred>
  Outcome over_dom(Pred&& p) const { return forall_subsets(x_.n(), Side::Domain, Side::Codomain, p); }
  template <class Pred>
  Outcome over_cod(Pred&& p) const { return forall_subsets(y_.n(), Side::Codomain, Side::Domain, p); }

  // f[A*] ⊆ (f[A])*
  Outcome star_image_into() const { return over_dom([&](SubsetMask a) { return img(lx(a)) - ly(img(a)); }); }
  // (f⁻¹[B])* ⊆ f⁻¹[B*]
  Outcome star_preimage_into() const { return over_cod([&](SubsetMask b) { return lx(pre(b)) - pre(ly(b)); }); }
  // (f[A])* ⊆ f[A*]
  Outcome star_image_onto() const { return over_dom([&](SubsetMask a) { return ly(img(a)) - img(lx(a)); }); }
  // f⁻¹[B*] ⊆ (f⁻¹[B])*
  Outcome star_preimage_onto() const { return over_cod([&](SubsetMask b) { return pre(ly(b)) - lx(pre(b)); }); }
  // Ψ(f[A]) ⊆ f[Ψ(A)]
  Outcome psi_image_into() const { return over_dom([&](SubsetMask a) { return py(img(a)) - img(px(a)); }); }
  // f⁻¹[Ψ(B)] ⊆ Ψ(f⁻¹[B])
  Outcome psi_preimage_into() const { return over_cod([&](SubsetMask b) { return pre(py(b)) - px(pre(b)); }); }
  // f[Ψ(A)] ⊆ Ψ(f[A])
  Outcome psi_image_onto() const { return over_dom([&](SubsetMask a) { return img(px(a)) - py(img(a)); }); }
  // Ψ(f⁻¹[B]) ⊆ f⁻¹[Ψ(B)]
  Outcome psi_preimage_onto() const { return over_cod([&](SubsetMask b) { return px(pre(b)) - pre(py(b)); }); }

  Run tc1() const {
    Run r;
    r.hyp = {continuous(), preimage_ok()};
    r.concl[0] = star_image_into();
    r.concl[1] = star_preimage_into();
    r.concl[2] = flag(r.concl[0].holds == r.concl[1].holds);
    return r;
  }

  Run tc2() const {
    Run r;
    r.hyp = {continuous(), preimage_ok()};
    r.concl[0] = over_dom([&](SubsetMask a) { return img(x_.star_closure(a)) - y_.star_closure(img(a)); });
    r.concl[1] = over_cod([&](SubsetMask b) { return x_.star_closure(pre(b)) - pre(y_.star_closure(b)); });
    r.concl[2] = continuity(f_, x_.star, y_.star);
    r.concl[3] = all_equal({r.concl[0].holds, r.concl[1].holds, r.concl[2].holds});
    return r;
  }

  Run contpsi() const {
    Run r;
    r.hyp = {continuous(), f_.injective, f_.surjective, preimage_ok()};
    r.concl[0] = psi_image_into();
    r.concl[1] = psi_preimage_into();
    r.concl[2] = flag(r.concl[0].holds == r.concl[1].holds);
    return r;
  }

  Run to1() const {
    Run r;
    r.hyp = {open(), image_ok()};
    r.concl[0] = psi_image_onto();
    r.concl[1] = psi_preimage_onto();
    r.concl[2] = flag(r.concl[0].holds == r.concl[1].holds);
    return r;
  }

  Run open_star() const {
    Run r;
    r.hyp = {open(), image_ok()};
    r.concl[0] = openness(f_, x_.star, y_.star);
    return r;
  }

  Run openbij() const {
    Run r;
    r.hyp = {open(), f_.injective, f_.surjective, image_ok()};
    r.concl[0] = star_image_onto();
    r.concl[1] = star_preimage_onto();
    r.concl[2] = flag(r.concl[0].holds == r.concl[1].holds);
    return r;
  }

  Run closedsur() const {
    Run r;
    r.hyp = {closedness(f_, x_.space.top(), y_.space.top()).holds, f_.injective, image_ok()};
    r.concl[0] = star_image_onto();
    r.concl[1] = star_preimage_onto();
    return r;
  }

  Run homeo_cor() const {
    Run r;
    r.hyp = {homeomorphism(f_, x_.space.top(), y_.space.top()).holds, equivalence_ok()};
    r.concl[0] = homeomorphism(f_, x_.star, y_.star);
    r.concl[1] = over_dom([&](SubsetMask a) { return symdiff(ly(img(a)), img(lx(a))); });
    r.concl[2] = over_cod([&](SubsetMask b) { return symdiff(pre(ly(b)), lx(pre(b))); });
    r.concl[3] = over_dom([&](SubsetMask a) { return symdiff(py(img(a)), img(px(a))); });
    r.concl[4] = over_cod([&](SubsetMask b) { return symdiff(pre(py(b)), px(pre(b))); });
    r.concl[5] = all_equal({r.concl[0].holds, r.concl[1].holds, r.concl[2].holds, r.concl[3].holds,
                            r.concl[4].holds});
    return r;
  }

  Run homeo_hr() const {
    Run r;
    r.hyp = {f_.injective, f_.surjective, image_ideal_eq()};
    // Only the equivalence is claimed; when it breaks, the witness is the
    // first failing leg.
    const std::array legs = {
        homeomorphism(f_, x_.star, y_.star),
        over_dom([&](SubsetMask a) { return symdiff(img(lx(a)), ly(img(a))); }),
        over_dom([&](SubsetMask a) { return symdiff(img(px(a)), py(img(a))); }),
    };
    if (all_equal({legs[0].holds, legs[1].holds, legs[2].holds}).holds) return r;
    for (const Outcome& leg : legs)
      if (!leg.holds) {
        r.concl[0] = leg;
        break;
      }
    return r;
  }

  Run hr34() const {
    Run r;
    r.hyp = {continuity(f_, x_.space.top(), y_.psi_top).holds, f_.injective, y_.compatible, preimage_ok()};
    r.concl[0] = psi_image_into();
    return r;
  }

  Run hr35() const {
    Run r;
    r.hyp = {openness(f_, x_.psi_top, y_.space.top()).holds, f_.injective, f_.surjective, x_.compatible, image_ok()};
    r.concl[0] = psi_image_onto();
    return r;
  }

  Run samuels() const {
    Run r;
    r.hyp = {x_.dense_in_itself, y_.regular};
    const bool base = continuity(f_, x_.space.top(), y_.space.top()).holds;
    const bool starred = continuity(f_, x_.star, y_.space.top()).holds;
    r.concl[0] = flag(base == starred);
    return r;
  }

  Run jhcomp() const {
    Run r;
    r.hyp = {f_.injective,   f_.surjective,    x_.ideal_compact,
             y_.hausdorff,   image_ideal_eq(), continuity(f_, x_.star, y_.space.top()).holds};
    r.concl[0] = homeomorphism(f_, x_.star, y_.star);
    return r;
  }

  const AnalyzedSpace& x_;
  const AnalyzedSpace& y_;
  const AnalyzedMap& f_;
};

void require_instance_dims(const AnalyzedSpace& x, const AnalyzedSpace& y, const AnalyzedMap& f) {
  require_map_dims(f.f, x.n(), y.n());
}

int side_rank(Side s) { return s == Side::Domain ? 0 : s == Side::Codomain ? 1 : 2; }

}  // namespace

const TheoremInfo& theorem_info(TheoremId id) {
  for (const auto& info : kInfo)
    if (info.id == id) return info;
  throw Error(ErrorCode::UnknownTheorem, "unknown theorem id");
}

std::string_view to_string(TheoremId id) { return theorem_info(id).name; }

TheoremId parse_theorem(std::string_view name) {
  for (const auto& info : kInfo)
    if (info.name == name) return info.id;
  throw Error(ErrorCode::UnknownTheorem, "no theorem named '" + std::string(name) + "'");
}

int hypothesis_index(TheoremId id, std::string_view name) {
  const auto& info = theorem_info(id);
  for (size_t i = 0; i < info.hypotheses.size(); ++i)
    if (info.hypotheses[i] == name) return static_cast<int>(i);
  throw Error(ErrorCode::UnknownHypothesisName,
              std::string(info.name) + " has no hypothesis named '" + std::string(name) + "'");
}

std::string_view to_string(Side side) {
  switch (side) {
    case Side::Domain: return "domain";
    case Side::Codomain: return "codomain";
    case Side::None: return "none";
  }
  return "none";
}

Instance::Instance(IdealSpace x_, IdealSpace y_, FiniteMap f_) : x(std::move(x_)), y(std::move(y_)), f(std::move(f_)) {
  require_map_dims(f, x.n(), y.n());
}

bool Verdict::flag(std::string_view name) const {
  for (const auto& [k, v] : hypotheses)
    if (k == name) return v;
  for (const auto& [k, v] : conclusions)
    if (k == name) return v;
  throw Error(ErrorCode::UnknownHypothesisName, "no flag named " + std::string(name));
}

AnalyzedSpace::AnalyzedSpace(IdealSpace s)
    : space(std::move(s)),
      star(star_topology(space)),
      psi_top(psi_topology(space)),
      local(subset_count(space.n())),
      psi(subset_count(space.n())),
      compatible(is_compatible(space)),
      ideal_compact(is_ideal_compact(space)) {
  for_each_subset(space.n(), [&](SubsetMask a) {
    local[a.bits()] = local_function(space, a);
    psi[a.bits()] = idealtop::psi(space, a);
  });
  dense_in_itself = local[space.points().bits()] == space.points();
  const auto sep = separation_profile(space.top());
  regular = sep.regular;
  hausdorff = sep.hausdorff;
}

AnalyzedMap::AnalyzedMap(FiniteMap map)
    : f(std::move(map)),
      image(subset_count(f.n_dom())),
      preimage(subset_count(f.n_cod())),
      injective(f.injective()),
      surjective(f.surjective()) {
  for_each_subset(f.n_dom(), [&](SubsetMask a) { image[a.bits()] = f.image(a); });
  for_each_subset(f.n_cod(), [&](SubsetMask b) { preimage[b.bits()] = f.preimage(b); });
}

Evaluation evaluate(TheoremId id, const AnalyzedSpace& x, const AnalyzedSpace& y, const AnalyzedMap& f) {
  const Run r = Evaluator(x, y, f).run(id);
  const auto& info = theorem_info(id);
  Evaluation e;
  for (size_t i = 0; i < info.hypotheses.size(); ++i)
    if (r.hyp[i]) e.hypotheses |= 1U << i;
  for (size_t i = 0; i < info.conclusions.size(); ++i)
    if (r.concl[i].holds) e.conclusions |= 1U << i;
  return e;
}

Verdict check(TheoremId id, const AnalyzedSpace& x, const AnalyzedSpace& y, const AnalyzedMap& f) {
  require_instance_dims(x, y, f);
  const Run r = Evaluator(x, y, f).run(id);
  const auto& info = theorem_info(id);
  Verdict v{id, {}, {}, false, std::nullopt};
  for (size_t i = 0; i < info.hypotheses.size(); ++i) {
    v.hypotheses.emplace_back(info.hypotheses[i], r.hyp[i]);
    if (!r.hyp[i]) v.vacuous = true;
  }
  const Outcome* best = nullptr;
  size_t best_index = 0;
  for (size_t i = 0; i < info.conclusions.size(); ++i) {
    const Outcome& o = r.concl[i];
    v.conclusions.emplace_back(info.conclusions[i], o.holds);
    if (o.holds) continue;
    const auto key = [](const Outcome& c) {
      return std::pair(side_rank(c.side), c.subset ? static_cast<std::int64_t>(c.subset->bits()) : -1);
    };
    if (best == nullptr || key(o) < key(*best)) {
      best = &o;
      best_index = i;
    }
  }
  if (best != nullptr)
    v.witness = Witness{info.conclusions[best_index], best->side, best->subset, best->point, best->point_side};
  return v;
}

Verdict check(TheoremId id, const Instance& inst) {
  return check(id, AnalyzedSpace(inst.x), AnalyzedSpace(inst.y), AnalyzedMap(inst.f));
}

}  // namespace idealtop
