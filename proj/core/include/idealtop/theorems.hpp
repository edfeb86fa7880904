#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "idealtop/maps.hpp"
#include "idealtop/star.hpp"

namespace idealtop {

enum class TheoremId {
  TC1,
  TC2,
  CONTPSI,
  TO1,
  OPEN_STAR,
  OPENBIJ,
  CLOSEDSUR,
  HOMEO_COR,
  HOMEO_HR,
  HR34,
  HR35,
  SAMUELS,
  JHCOMP,
};

inline constexpr std::array kAllTheorems = {
    TheoremId::TC1,       TheoremId::TC2,      TheoremId::CONTPSI,   TheoremId::TO1,  TheoremId::OPEN_STAR,
    TheoremId::OPENBIJ,   TheoremId::CLOSEDSUR, TheoremId::HOMEO_COR, TheoremId::HOMEO_HR, TheoremId::HR34,
    TheoremId::HR35,      TheoremId::SAMUELS,  TheoremId::JHCOMP,
};

/// Static description of one checker: flag names in evaluation order and
/// the conclusion that counterexample search targets.
struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  std::string_view summary;
  std::span<const std::string_view> hypotheses;
  std::span<const std::string_view> conclusions;
  int designated = 0;
};

const TheoremInfo& theorem_info(TheoremId id);
std::string_view to_string(TheoremId id);
/// Throws UnknownTheorem.
TheoremId parse_theorem(std::string_view name);
/// Index of a hypothesis name; throws UnknownHypothesisName.
int hypothesis_index(TheoremId id, std::string_view name);

/// Domain ideal space, codomain ideal space, and a map between them.
struct Instance {
  Instance(IdealSpace x, IdealSpace y, FiniteMap f);

  IdealSpace x;
  IdealSpace y;
  FiniteMap f;

  friend bool operator==(const Instance&, const Instance&) = default;
};

enum class Side { Domain, Codomain, None };
std::string_view to_string(Side side);

struct Witness {
  std::string_view conclusion;
  // Where subset lives. None for conclusions that quantify over nothing.
  Side side = Side::None;
  std::optional<SubsetMask> subset;
  // A point exhibiting the failure, and the space it belongs to.
  std::optional<Point> point;
  Side point_side = Side::None;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  TheoremId theorem;
  std::vector<std::pair<std::string_view, bool>> hypotheses;
  std::vector<std::pair<std::string_view, bool>> conclusions;
  bool vacuous = false;
  std::optional<Witness> witness;

  bool hypotheses_hold() const { return !vacuous; }
  bool conclusions_hold() const { return !witness.has_value(); }
  /// Hypotheses all true and some conclusion false.
  bool refutes() const { return hypotheses_hold() && !conclusions_hold(); }
  /// Throws std::out_of_range for an unknown flag name.
  bool flag(std::string_view name) const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Per-space tables reused across every instance a space takes part in.
struct AnalyzedSpace {
  explicit AnalyzedSpace(IdealSpace s);

  IdealSpace space;
  Topology star;
  Topology psi_top;
  // Indexed by subset bits.
  std::vector<SubsetMask> local;
  std::vector<SubsetMask> psi;
  bool compatible;
  bool ideal_compact;
  // X* = X.
  bool dense_in_itself;
  bool regular;
  bool hausdorff;

  int n() const { return space.n(); }
  SubsetMask carrier() const { return space.ideal().carrier(); }
  SubsetMask star_closure(SubsetMask a) const { return a | local[a.bits()]; }
};

struct AnalyzedMap {
  explicit AnalyzedMap(FiniteMap f);

  FiniteMap f;
  std::vector<SubsetMask> image;
  std::vector<SubsetMask> preimage;
  bool injective;
  bool surjective;
};

/// Hypothesis and conclusion truth values, bit i for flag i.
struct Evaluation {
  std::uint32_t hypotheses = 0;
  std::uint32_t conclusions = 0;
};

/// Flags only; no witness or names. Used by the search engine.
Evaluation evaluate(TheoremId id, const AnalyzedSpace& x, const AnalyzedSpace& y, const AnalyzedMap& f);

/// Every hypothesis and conclusion is evaluated, even when vacuous. The
/// witness is the least failing subset by mask, domain side first.
Verdict check(TheoremId id, const AnalyzedSpace& x, const AnalyzedSpace& y, const AnalyzedMap& f);
Verdict check(TheoremId id, const Instance& inst);

}  // namespace idealtop
