#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "konig/hypergraph.hpp"
#include "konig/properties.hpp"
#include "konig/solvers.hpp"

namespace konig {

enum class Property { konig, weak_konig, bipartite, cp };
enum class ExploreMode { exhaustive, sampled };

std::string_view to_string(Property p);
std::string_view to_string(ExploreMode m);
/// Accepts both "weak_konig" and "weak-konig".
std::optional<Property> parse_property(std::string_view name);

/// Decides one property on `h`.
Truth decide(const Hypergraph& h, Property p, const SolveOptions& options = {});

struct SubsetOutcome {
  EdgeSubset subset;
  Truth truth = Truth::indeterminate;
};

/// Whether a property survives on small edge subfamilies but not on the whole
/// family.
struct HeritabilityReport {
  Property property = Property::konig;
  std::size_t max_subset_size = 0;
  ExploreMode mode = ExploreMode::exhaustive;
  std::uint64_t subsets_checked = 0;
  bool all_small_hold = true;
  /// Least failing subset by (size, lexicographic) among those checked.
  std::optional<EdgeSubset> smallest_failing_subset;
  bool whole_holds = false;
  /// Only set in sampled mode.
  std::optional<std::uint64_t> seed;
  /// Subset checks that ran out of solver budget; when non-zero the other
  /// fields describe only the decided subsets.
  std::uint64_t indeterminate_subsets = 0;
  /// True when the whole family itself could not be decided.
  bool whole_indeterminate = false;
  /// Per-subset results in check order, when ExploreOptions::keep_outcomes.
  std::vector<SubsetOutcome> outcomes;

  bool indeterminate() const { return indeterminate_subsets > 0 || whole_indeterminate; }
};

struct ExploreOptions {
  std::size_t max_subset_size = 0;
  /// Exhaustive when the number of subsets of size <= max_subset_size is at
  /// most this, otherwise this many distinct subsets are sampled.
  std::uint64_t budget = 2'000'000;
  std::uint64_t seed = 0;
  /// Worker threads for subset checks; results do not depend on it.
  unsigned threads = 1;
  bool keep_outcomes = false;
  SolveOptions solve;
};

/// Checks `property` on edge subfamilies of size <= max_subset_size, in order
/// of size and then lexicographically, and on the whole family.
///
/// Sampling draws a size k with probability proportional to C(m, k) and then a
/// uniform k-subset, rejecting repeats, so every subset of size <= s is
/// equally likely and none is checked twice.
HeritabilityReport explore(const Hypergraph& h, Property property, const ExploreOptions& options);

/// Number of edge subsets of size <= s, saturating.
std::uint64_t count_subsets(std::size_t edge_count, std::size_t max_size);

/// Core search result; `core` is absent either because the hypergraph has no
/// obstruction or because a solve was indeterminate (see `truth`).
struct CoreResult {
  /// Truth of "an obstruction exists" on the whole hypergraph.
  Truth truth = Truth::indeterminate;
  std::optional<EdgeSubset> core;
};

// The three cores below are found by greedy single-edge deletion in index
// order. Each defining predicate is monotone under adding edges, so the result
// is 1-minimal: dropping any one edge destroys it.

/// A 1-minimal edge subset with no bipartition; absent if `h` is bipartite.
CoreResult minimal_nonbipartite_core(const Hypergraph& h, const SolveOptions& options = {});

/// A 1-minimal edge subset with no exact transversal; absent if `h` has one.
CoreResult minimal_non_cp_core(const Hypergraph& h, const SolveOptions& options = {});

/// A 1-minimal edge subset whose covering number equals that of `h`.
/// truth is `holds` on success.
CoreResult cover_critical_core(const Hypergraph& h, const SolveOptions& options = {});

}  // namespace konig
