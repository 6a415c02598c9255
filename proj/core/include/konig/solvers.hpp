#pragma once

#include <cstdint>
#include <optional>

#include "konig/hypergraph.hpp"

namespace konig {

struct SolveOptions {
  /// Search nodes allowed before a solve gives up with budget_exceeded.
  std::uint64_t node_budget = 100'000'000;
};

enum class SolveStatus {
  complete,         ///< optimum (or existence answer) proved
  budget_exceeded,  ///< node cap hit; any witness present is not proved optimal
};

struct SolveStats {
  std::uint64_t nodes_explored = 0;
  std::int64_t elapsed_ms = 0;
  bool optimum_proved = false;
};

struct MatchingResult {
  SolveStatus status = SolveStatus::complete;
  Matching matching;
  SolveStats stats;

  std::size_t size() const { return matching.size(); }
};

struct CoverResult {
  SolveStatus status = SolveStatus::complete;
  CoverSolution solution;
  SolveStats stats;
};

struct BipartitionResult {
  SolveStatus status = SolveStatus::complete;
  std::optional<Bipartition> bipartition;
  SolveStats stats;
};

struct TransversalResult {
  SolveStatus status = SolveStatus::complete;
  std::optional<ExactTransversal> transversal;
  SolveStats stats;
};

/// Maximum set packing by branch and bound over edge inclusion.
///
/// Edges are branched in index order, "take" before "skip", and the
/// incumbent is only replaced by a strictly larger packing. The returned
/// matching is therefore the first optimum met in that order. Nodes are
/// pruned when the size bound (free vertices versus the smallest remaining
/// compatible edges) cannot beat the incumbent.
MatchingResult max_matching(const Hypergraph& h, const SolveOptions& options = {});

/// Minimum hitting set by branch and bound.
///
/// Branches on the vertices of the lowest-index uncovered edge in ascending
/// order, excluding earlier siblings from later branches. The lower bound is a
/// greedy packing of uncovered edges over still-allowed vertices.
CoverResult covering_number(const Hypergraph& h, const SolveOptions& options = {});

/// Two-coloring in which every edge of size > 1 sees both colors.
///
/// Backtracks over vertices in id order (trying "in D" first) with unit
/// propagation: an edge whose vertices are all assigned to one side except
/// for one forces that last vertex onto the other side. Vertices that occur
/// in no edge of size > 1 are left outside D.
BipartitionResult bipartition(const Hypergraph& h, const SolveOptions& options = {});

/// A vertex set meeting every edge exactly once, if any.
///
/// Picks the lowest-index edge not yet hit and branches on which of its
/// vertices is chosen; a choice is rejected as soon as it would hit some edge
/// twice. Singleton edges simply force their vertex.
TransversalResult exact_transversal(const Hypergraph& h, const SolveOptions& options = {});

}  // namespace konig
