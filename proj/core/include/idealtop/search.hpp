#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idealtop/ideal.hpp"
#include "idealtop/maps.hpp"
#include "idealtop/space.hpp"
#include "idealtop/theorems.hpp"

namespace idealtop {

/// Largest n accepted by enumerate_topologies.
inline constexpr int kMaxEnumeratedPoints = 5;
/// Largest point count a search may visit.
inline constexpr int kMaxSearchPoints = 4;

/// Every topology on n labeled points exactly once, ordered by the
/// minimal-neighborhood table read as a tuple of masks (point 0 first).
/// Throws CapExceeded for n > kMaxEnumeratedPoints.
std::vector<Topology> enumerate_topologies(int n);

/// One ideal per carrier, ascending by carrier mask.
std::vector<Ideal> enumerate_ideals(int n);

/// All n_cod^n_dom maps, lexicographic by value table (point 0 most
/// significant).
std::vector<FiniteMap> enumerate_maps(int n_dom, int n_cod);

/// Deterministic uniform sampling instead of full enumeration.
struct Sampling {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
};

struct SearchBounds {
  int max_n_dom = 3;
  int max_n_cod = 3;
  int min_n_dom = 1;
  int min_n_cod = 1;
  // When set, only ideals whose carrier is listed (and fits) are visited.
  std::optional<std::vector<SubsetMask>> dom_carriers;
  std::optional<std::vector<SubsetMask>> cod_carriers;
  std::optional<Sampling> sampling;

  /// Full enumeration of every coordinate; only such runs certify.
  bool exhaustive() const { return !dom_carriers && !cod_carriers && !sampling; }
};

struct BlockProgress {
  std::uint64_t block = 0;
  std::uint64_t total_blocks = 0;
  int n_dom = 0;
  int n_cod = 0;
  std::uint64_t instances = 0;
  std::uint64_t counterexamples_so_far = 0;
};

struct SearchOptions {
  int workers = 1;
  // Called once per completed block, serialized, in completion order.
  std::function<void(const BlockProgress&)> progress;
};

struct SearchReport {
  TheoremId theorem;
  std::vector<std::string> dropped_hypotheses;
  SearchBounds bounds;
  std::uint64_t instances_checked = 0;
  std::uint64_t counterexamples_found = 0;
  // Canonically least counterexample.
  std::optional<Instance> counterexample;
  std::optional<Verdict> verdict;
  bool certified = false;
  std::chrono::milliseconds elapsed{0};

  /// "exhaustive", "restricted" or "sampled".
  std::string mode() const;
};

/// Visits every (T_X, M_X, T_Y, M_Y, f) within bounds and reports the
/// first instance whose hypotheses all hold and some conclusion fails.
///
/// Canonical order: domain size, codomain size, domain topology, codomain
/// topology, domain carrier, codomain carrier, map. Sampled runs use draw
/// order. The report does not depend on the worker count. Throws
/// CapExceeded for sizes outside 1..kMaxSearchPoints.
SearchReport verify_exhaustive(TheoremId id, const SearchBounds& bounds, const SearchOptions& options = {});

/// Like verify_exhaustive but the named hypotheses are not required, and
/// only the theorem's designated conclusion is targeted. Throws
/// UnknownHypothesisName.
SearchReport find_counterexample(TheoremId id, const std::vector<std::string>& dropped, const SearchBounds& bounds,
                                 const SearchOptions& options = {});

}  // namespace idealtop
