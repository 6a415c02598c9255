#include "konig/properties.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>

namespace konig {

namespace {

class KonigSearch {
 public:
  KonigSearch(const Hypergraph& h, std::uint64_t node_budget)
      : h_(h), cap_(node_budget), matched_(h.vertex_count()), reps_(h.vertex_count()) {}

  bool run() { return search(); }
  bool exceeded() const { return exceeded_; }
  std::uint64_t nodes() const { return nodes_; }

  KonigCertificate certificate() const {
    KonigCertificate cert;
    cert.matching.edges = matching_;
    std::sort(cert.matching.edges.begin(), cert.matching.edges.end());
    cert.cover = reps_.to_vector();
    return cert;
  }

 private:
  bool search() {
    if (nodes_ >= cap_) {
      exceeded_ = true;
      return false;
    }
    ++nodes_;

    EdgeIndex first = h_.edge_count();
    for (EdgeIndex i = 0; i < h_.edge_count(); ++i) {
      const VertexBits& e = h_.edge_bits(i);
      if (reps_.intersects(e)) continue;
      // Future representatives come from edges disjoint from the matched
      // ones, so an uncovered edge inside them can never be covered.
      if (e.is_subset_of(matched_)) return false;
      if (first == h_.edge_count()) first = i;
    }
    if (first == h_.edge_count()) return true;

    for (Vertex v : h_.edge(first)) {
      if (matched_.test(v)) continue;
      for (EdgeIndex e : h_.incident(v)) {
        const VertexBits& bits = h_.edge_bits(e);
        if (matched_.intersects(bits)) continue;
        matched_ |= bits;
        reps_.set(v);
        matching_.push_back(e);
        if (search()) return true;
        matching_.pop_back();
        reps_.reset(v);
        matched_.subtract(bits);
        if (exceeded_) return false;
      }
    }
    return false;
  }

  const Hypergraph& h_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  VertexBits matched_;
  VertexBits reps_;
  std::vector<EdgeIndex> matching_;
};

void require_graph(const Hypergraph& g, const char* what) {
  if (!g.is_graph())
    throw std::invalid_argument(std::string(what) + ": every edge must have exactly two vertices");
}

}  // namespace

std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::holds: return "holds";
    case Truth::fails: return "fails";
    case Truth::indeterminate: return "indeterminate";
  }
  return "unknown";
}

KonigDecision has_konig(const Hypergraph& h, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  KonigSearch search(h, options.node_budget);
  KonigDecision d;
  const bool found = search.run();
  if (found) {
    d.truth = Truth::holds;
    d.certificate = search.certificate();
  } else {
    d.truth = search.exceeded() ? Truth::indeterminate : Truth::fails;
  }
  d.stats.nodes_explored = search.nodes();
  d.stats.optimum_proved = !search.exceeded();
  d.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return d;
}

WeakKonigDecision has_weak_konig(const Hypergraph& h, const SolveOptions& options) {
  WeakKonigDecision d;
  auto m = max_matching(h, options);
  auto c = covering_number(h, options);
  d.matching = std::move(m.matching);
  d.cover = std::move(c.solution);
  if (m.status != SolveStatus::complete || c.status != SolveStatus::complete)
    d.truth = Truth::indeterminate;
  else
    d.truth = d.matching.size() == d.cover.nu ? Truth::holds : Truth::fails;
  return d;
}

BipartiteDecision is_bipartite(const Hypergraph& h, const SolveOptions& options) {
  auto r = bipartition(h, options);
  BipartiteDecision d;
  if (r.status != SolveStatus::complete) return d;
  d.truth = r.bipartition ? Truth::holds : Truth::fails;
  d.bipartition = std::move(r.bipartition);
  return d;
}

CpDecision has_cp(const Hypergraph& h, const SolveOptions& options) {
  auto r = exact_transversal(h, options);
  CpDecision d;
  d.singleton_edges = h.has_singleton_edge();
  if (r.status != SolveStatus::complete) return d;
  d.truth = r.transversal ? Truth::holds : Truth::fails;
  d.transversal = std::move(r.transversal);
  return d;
}

KonigDecision graph_konig_upgrade(const Hypergraph& g, const SolveOptions& options) {
  require_graph(g, "graph_konig_upgrade");
  KonigDecision d;
  auto m = max_matching(g, options);
  auto c = covering_number(g, options);
  d.stats.nodes_explored = m.stats.nodes_explored + c.stats.nodes_explored;
  d.stats.elapsed_ms = m.stats.elapsed_ms + c.stats.elapsed_ms;
  d.stats.optimum_proved = m.stats.optimum_proved && c.stats.optimum_proved;
  if (!d.stats.optimum_proved) return d;
  if (m.size() != c.solution.nu) {
    d.truth = Truth::fails;
    return d;
  }
  // Equal sizes: every matched edge needs its own cover vertex, so each meets
  // the cover exactly once and no cover vertex is left over.
  KonigCertificate cert{std::move(m.matching), std::move(c.solution.cover)};
  if (auto check = verify_konig_certificate(g, cert); !check)
    throw std::logic_error("graph_konig_upgrade produced an invalid certificate: " + check.detail);
  d.truth = Truth::holds;
  d.certificate = std::move(cert);
  return d;
}

std::optional<VertexList> odd_cycle(const Hypergraph& g) {
  require_graph(g, "odd_cycle");
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<std::size_t> depth(n, 0);
  std::vector<Vertex> parent(n, 0);

  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (EdgeIndex e : g.incident(u)) {
        const Vertex w = g.edge(e)[0] == u ? g.edge(e)[1] : g.edge(e)[0];
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          depth[w] = depth[u] + 1;
          parent[w] = u;
          queue.push_back(w);
          continue;
        }
        if (color[w] != color[u]) continue;

        // Same color: the two tree paths up to their meeting point plus the
        // edge u-w close an odd cycle.
        VertexList up_u{u}, up_w{w};
        Vertex a = u, b = w;
        while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
        while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
        while (a != b) {
          up_u.push_back(a = parent[a]);
          up_w.push_back(b = parent[b]);
        }
        up_w.pop_back();  // meeting point already in up_u
        VertexList cycle = std::move(up_u);
        cycle.insert(cycle.end(), up_w.rbegin(), up_w.rend());
        return cycle;
      }
    }
  }
  return std::nullopt;
}

}  // namespace konig
