#include "konig/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace konig {

namespace {

std::string edge_text(const VertexList& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + "}";
}

Check fail(Fault f, std::string detail) { return Check{f, std::move(detail)}; }

// Range and duplicate check for a vertex set given in any order.
Check check_vertex_set(const Hypergraph& h, std::span<const Vertex> vs, VertexBits& out) {
  out = VertexBits(h.vertex_count());
  for (Vertex v : vs) {
    if (v >= h.vertex_count())
      return fail(Fault::vertex_out_of_range, "vertex " + std::to_string(v) + " out of range");
    if (out.test(v))
      return fail(Fault::duplicate_vertex, "vertex " + std::to_string(v) + " listed twice");
    out.set(v);
  }
  return Check::ok();
}

}  // namespace

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<VertexList> edges,
                       std::vector<std::string> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
  if (std::all_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.empty(); }))
    labels_.clear();
  if (!labels_.empty() && labels_.size() != vertex_count_)
    throw HypergraphError("label count " + std::to_string(labels_.size()) +
                          " does not match vertex count " + std::to_string(vertex_count_));
  for (auto& e : edges) {
    if (e.empty()) throw HypergraphError("empty edge");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.back() >= vertex_count_)
      throw HypergraphError("vertex " + std::to_string(e.back()) + " out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  bits_.reserve(edges_.size());
  incidence_.assign(vertex_count_, {});
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    bits_.push_back(VertexBits::of(vertex_count_, edges_[i]));
    for (Vertex v : edges_[i]) incidence_[v].push_back(i);
  }
}

bool Hypergraph::is_graph() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.size() == 2; });
}

bool Hypergraph::has_singleton_edge() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.size() == 1; });
}

void validate_subset(const Hypergraph& h, const EdgeSubset& subset) {
  for (std::size_t i = 0; i < subset.indices.size(); ++i) {
    const EdgeIndex idx = subset.indices[i];
    if (idx >= h.edge_count())
      throw HypergraphError("edge index " + std::to_string(idx) + " out of range");
    if (i > 0 && subset.indices[i - 1] >= idx)
      throw HypergraphError("edge subset must be strictly ascending");
  }
}

InducedHypergraph induced(const Hypergraph& h, const EdgeSubset& subset) {
  validate_subset(h, subset);
  std::vector<VertexList> edges;
  edges.reserve(subset.size());
  for (EdgeIndex i : subset.indices) edges.push_back(h.edge(i));
  // Ascending indices into a canonical list are already canonical, so the
  // mapping is the subset itself.
  return {Hypergraph(h.vertex_count(), std::move(edges), h.labels()), subset.indices};
}

std::string_view to_string(Fault fault) {
  switch (fault) {
    case Fault::none: return "none";
    case Fault::edge_index_out_of_range: return "edge_index_out_of_range";
    case Fault::duplicate_edge_index: return "duplicate_edge_index";
    case Fault::vertex_out_of_range: return "vertex_out_of_range";
    case Fault::duplicate_vertex: return "duplicate_vertex";
    case Fault::edges_overlap: return "edges_overlap";
    case Fault::edge_not_covered: return "edge_not_covered";
    case Fault::representative_count: return "representative_count";
    case Fault::cover_outside_matching: return "cover_outside_matching";
    case Fault::monochromatic_edge: return "monochromatic_edge";
    case Fault::edge_not_hit_once: return "edge_not_hit_once";
    case Fault::size_mismatch: return "size_mismatch";
  }
  return "unknown";
}

Check verify_matching(const Hypergraph& h, const Matching& m) {
  VertexBits used(h.vertex_count());
  std::vector<bool> seen(h.edge_count(), false);
  for (EdgeIndex i : m.edges) {
    if (i >= h.edge_count())
      return fail(Fault::edge_index_out_of_range,
                  "edge index " + std::to_string(i) + " out of range");
    if (seen[i])
      return fail(Fault::duplicate_edge_index, "edge index " + std::to_string(i) + " listed twice");
    seen[i] = true;
    if (used.intersects(h.edge_bits(i)))
      return fail(Fault::edges_overlap,
                  "edge " + std::to_string(i) + " " + edge_text(h.edge(i)) +
                      " shares a vertex with an earlier matched edge");
    used |= h.edge_bits(i);
  }
  return Check::ok();
}

Check verify_cover(const Hypergraph& h, std::span<const Vertex> cover) {
  VertexBits bits;
  if (auto c = check_vertex_set(h, cover, bits); !c) return c;
  for (EdgeIndex i = 0; i < h.edge_count(); ++i)
    if (!bits.intersects(h.edge_bits(i)))
      return fail(Fault::edge_not_covered,
                  "edge " + std::to_string(i) + " " + edge_text(h.edge(i)) + " is not covered");
  return Check::ok();
}

Check verify_konig_certificate(const Hypergraph& h, const KonigCertificate& cert) {
  if (auto c = verify_matching(h, cert.matching); !c) return c;
  if (auto c = verify_cover(h, cert.cover); !c) return c;
  const VertexBits cover = VertexBits::of(h.vertex_count(), cert.cover);
  VertexBits matched(h.vertex_count());
  for (EdgeIndex i : cert.matching.edges) {
    const std::size_t hits = cover.intersection_count(h.edge_bits(i));
    if (hits != 1)
      return fail(Fault::representative_count,
                  "matched edge " + std::to_string(i) + " " + edge_text(h.edge(i)) + " meets the cover in " +
                      std::to_string(hits) + " vertices");
    matched |= h.edge_bits(i);
  }
  if (!cover.is_subset_of(matched))
    return fail(Fault::cover_outside_matching, "cover has a vertex outside every matched edge");
  return Check::ok();
}

Check verify_bipartition(const Hypergraph& h, const Bipartition& b) {
  VertexBits side;
  if (auto c = check_vertex_set(h, b.side, side); !c) return c;
  for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    if (e.size() < 2) continue;
    const std::size_t inside = side.intersection_count(h.edge_bits(i));
    if (inside == 0 || inside == e.size())
      return fail(Fault::monochromatic_edge,
                  "edge " + std::to_string(i) + " " + edge_text(e) + " lies on one side");
  }
  return Check::ok();
}

Check verify_exact_transversal(const Hypergraph& h, const ExactTransversal& t) {
  VertexBits choice;
  if (auto c = check_vertex_set(h, t.choice, choice); !c) return c;
  for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
    const std::size_t hits = choice.intersection_count(h.edge_bits(i));
    if (hits != 1)
      return fail(Fault::edge_not_hit_once, "edge " + std::to_string(i) + " " + edge_text(h.edge(i)) +
                                                " is hit " + std::to_string(hits) + " times");
  }
  return Check::ok();
}

}  // namespace konig
