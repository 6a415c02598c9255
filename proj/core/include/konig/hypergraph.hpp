#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "konig/vertex_bits.hpp"

namespace konig {

using EdgeIndex = std::size_t;
using VertexList = std::vector<Vertex>;

/// Raised when a hypergraph or edge subset violates its structural invariants.
class HypergraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite hypergraph on the dense vertex set {0, ..., vertex_count - 1}.
///
/// Construction validates and canonicalizes: every edge is non-empty, its
/// vertices are sorted and in range, duplicate edges collapse to one, and the
/// edge list is ordered lexicographically by vertex list. Instances are
/// immutable afterwards, so they may be shared freely between threads.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws HypergraphError with "empty edge" or "vertex out of range".
  Hypergraph(std::size_t vertex_count, std::vector<VertexList> edges,
             std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  const std::vector<VertexList>& edges() const { return edges_; }
  const VertexList& edge(EdgeIndex i) const { return edges_[i]; }
  const VertexBits& edge_bits(EdgeIndex i) const { return bits_[i]; }

  /// Edges containing `v`, ascending.
  const std::vector<EdgeIndex>& incident(Vertex v) const { return incidence_[v]; }

  /// Vertex labels are presentation only; empty when none were supplied.
  const std::vector<std::string>& labels() const { return labels_; }

  /// True when every edge has exactly two vertices.
  bool is_graph() const;
  bool has_singleton_edge() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ &&
           a.labels_ == b.labels_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<VertexList> edges_;
  std::vector<VertexBits> bits_;
  std::vector<std::vector<EdgeIndex>> incidence_;
  std::vector<std::string> labels_;
};

/// Sorted, duplicate-free edge indices into a host hypergraph.
struct EdgeSubset {
  std::vector<EdgeIndex> indices;

  std::size_t size() const { return indices.size(); }
  bool empty() const { return indices.empty(); }

  /// Orders by size first, then lexicographically.
  friend std::strong_ordering operator<=>(const EdgeSubset& a, const EdgeSubset& b) {
    if (auto c = a.indices.size() <=> b.indices.size(); c != 0) return c;
    return a.indices <=> b.indices;
  }
  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;
};

/// Edge indices of pairwise disjoint edges.
struct Matching {
  std::vector<EdgeIndex> edges;

  std::size_t size() const { return edges.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// A vertex cover together with its size.
struct CoverSolution {
  VertexList cover;
  std::size_t nu = 0;

  friend bool operator==(const CoverSolution&, const CoverSolution&) = default;
};

/// Matching plus one representative vertex per matched edge that together
/// cover the whole hypergraph.
struct KonigCertificate {
  Matching matching;
  VertexList cover;

  friend bool operator==(const KonigCertificate&, const KonigCertificate&) = default;
};

/// The side D of a 2-coloring; its complement is implicit.
struct Bipartition {
  VertexList side;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// A vertex set meeting every edge in exactly one vertex.
struct ExactTransversal {
  VertexList choice;

  friend bool operator==(const ExactTransversal&, const ExactTransversal&) = default;
};

struct InducedHypergraph {
  Hypergraph graph;
  /// original[i] is the host index of edge i of `graph`.
  std::vector<EdgeIndex> original;
};

/// The subhypergraph (V, E') keeping only the edges listed in `subset`.
/// Throws HypergraphError on an out-of-range, duplicate or unsorted index.
InducedHypergraph induced(const Hypergraph& h, const EdgeSubset& subset);

/// Throws HypergraphError unless `subset` is sorted, unique and in range.
void validate_subset(const Hypergraph& h, const EdgeSubset& subset);

enum class Fault {
  none,
  edge_index_out_of_range,
  duplicate_edge_index,
  vertex_out_of_range,
  duplicate_vertex,
  edges_overlap,
  edge_not_covered,
  representative_count,
  cover_outside_matching,
  monochromatic_edge,
  edge_not_hit_once,
  size_mismatch,
};

std::string_view to_string(Fault fault);

/// Outcome of a certificate check. Converts to true when no fault was found.
struct Check {
  Fault fault = Fault::none;
  std::string detail;

  explicit operator bool() const { return fault == Fault::none; }
  static Check ok() { return {}; }
};

Check verify_matching(const Hypergraph& h, const Matching& m);
Check verify_cover(const Hypergraph& h, std::span<const Vertex> cover);
/// Strict reading: besides the exact-one condition on matched edges, every
/// cover vertex must lie in a matched edge.
Check verify_konig_certificate(const Hypergraph& h, const KonigCertificate& cert);
Check verify_bipartition(const Hypergraph& h, const Bipartition& b);
Check verify_exact_transversal(const Hypergraph& h, const ExactTransversal& t);

}  // namespace konig
