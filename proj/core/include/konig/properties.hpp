#pragma once

#include <optional>
#include <string_view>

#include "konig/hypergraph.hpp"
#include "konig/solvers.hpp"

namespace konig {

/// Tri-state decision. A solver that runs out of budget reports
/// `indeterminate`, never `fails`.
enum class Truth { holds, fails, indeterminate };

std::string_view to_string(Truth t);

struct KonigDecision {
  Truth truth = Truth::indeterminate;
  std::optional<KonigCertificate> certificate;
  SolveStats stats;
};

struct WeakKonigDecision {
  Truth truth = Truth::indeterminate;
  Matching matching;
  CoverSolution cover;
};

struct BipartiteDecision {
  Truth truth = Truth::indeterminate;
  std::optional<Bipartition> bipartition;
};

struct CpDecision {
  Truth truth = Truth::indeterminate;
  std::optional<ExactTransversal> transversal;
  /// Set when some edge has a single vertex; the choosability property is
  /// only meant for edges of size > 1, so callers may want to warn.
  bool singleton_edges = false;
};

/// Decides König's Property (strict reading) by exhaustive search.
///
/// Repeatedly takes the lowest-index edge not yet covered by a chosen
/// representative and branches over every vertex v of it and every edge e
/// containing v that is disjoint from the edges matched so far, matching e
/// with representative v. Disjointness makes the exact-one condition and
/// "cover inside the matched edges" hold automatically. A branch dies as soon
/// as some uncovered edge lies entirely inside matched edges.
KonigDecision has_konig(const Hypergraph& h, const SolveOptions& options = {});

/// Holds iff the maximum matching size equals the covering number.
WeakKonigDecision has_weak_konig(const Hypergraph& h, const SolveOptions& options = {});

BipartiteDecision is_bipartite(const Hypergraph& h, const SolveOptions& options = {});

CpDecision has_cp(const Hypergraph& h, const SolveOptions& options = {});

/// For a finite graph: if the maximum matching and minimum cover have equal
/// size, they already form a König certificate. Returns `holds` with that
/// certificate, or `fails` when the sizes differ.
/// Throws std::invalid_argument unless every edge has exactly two vertices.
KonigDecision graph_konig_upgrade(const Hypergraph& g, const SolveOptions& options = {});

/// An odd cycle of a graph as a closed vertex walk v0 v1 ... v(k-1) (the
/// closing edge v(k-1) v0 is implied), or nullopt if the graph is bipartite.
/// Throws std::invalid_argument unless every edge has exactly two vertices.
std::optional<VertexList> odd_cycle(const Hypergraph& g);

}  // namespace konig
