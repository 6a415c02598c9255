#include "konig/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>

namespace konig {

namespace {

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t cap) : cap_(cap) {}

  /// Counts one node; false once the cap is exhausted.
  bool tick() {
    if (nodes_ >= cap_) {
      exceeded_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }
  bool exceeded() const { return exceeded_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

SolveStats finish(const NodeBudget& budget, const Stopwatch& clock) {
  return SolveStats{budget.nodes(), clock.elapsed_ms(), !budget.exceeded()};
}

SolveStatus status_of(const NodeBudget& budget) {
  return budget.exceeded() ? SolveStatus::budget_exceeded : SolveStatus::complete;
}

// ---------------------------------------------------------------------------

class PackingSearch {
 public:
  PackingSearch(const Hypergraph& h, NodeBudget& budget)
      : h_(h), budget_(budget), used_(h.vertex_count()) {}

  std::vector<EdgeIndex> run() {
    search(0);
    return best_;
  }

 private:
  // Upper bound on how many more disjoint edges fit, from edges >= next that
  // avoid the used vertices.
  std::size_t remaining_bound(EdgeIndex next) {
    sizes_.clear();
    VertexBits reach(h_.vertex_count());
    for (EdgeIndex i = next; i < h_.edge_count(); ++i) {
      if (used_.intersects(h_.edge_bits(i))) continue;
      sizes_.push_back(h_.edge(i).size());
      reach |= h_.edge_bits(i);
    }
    std::sort(sizes_.begin(), sizes_.end());
    std::size_t free = reach.count();
    std::size_t fit = 0;
    for (std::size_t s : sizes_) {
      if (s > free) break;
      free -= s;
      ++fit;
    }
    return fit;
  }

  void search(EdgeIndex next) {
    if (!budget_.tick()) return;
    if (current_.size() > best_.size()) best_ = current_;

    while (next < h_.edge_count() && used_.intersects(h_.edge_bits(next))) ++next;
    if (next == h_.edge_count()) return;
    if (current_.size() + remaining_bound(next) <= best_.size()) return;

    const VertexBits& e = h_.edge_bits(next);
    used_ |= e;
    current_.push_back(next);
    search(next + 1);
    current_.pop_back();
    used_.subtract(e);
    if (budget_.exceeded()) return;

    search(next + 1);
  }

  const Hypergraph& h_;
  NodeBudget& budget_;
  VertexBits used_;
  std::vector<EdgeIndex> current_;
  std::vector<EdgeIndex> best_;
  std::vector<std::size_t> sizes_;
};

// ---------------------------------------------------------------------------

class HittingSetSearch {
 public:
  HittingSetSearch(const Hypergraph& h, NodeBudget& budget)
      : h_(h), budget_(budget), chosen_(h.vertex_count()), banned_(h.vertex_count()) {}

  VertexList run() {
    search();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy packing of uncovered edges restricted to allowed vertices; each
  // packed edge needs its own cover vertex. Returns npos when some uncovered
  // edge has no allowed vertex left.
  std::size_t lower_bound() {
    VertexBits taken(h_.vertex_count());
    std::size_t packed = 0;
    for (EdgeIndex i = 0; i < h_.edge_count(); ++i) {
      const VertexBits& e = h_.edge_bits(i);
      if (chosen_.intersects(e)) continue;
      VertexBits allowed = e;
      allowed.subtract(banned_);
      if (allowed.none()) return kInfeasible;
      if (!allowed.intersects(taken)) {
        taken |= allowed;
        ++packed;
      }
    }
    return packed;
  }

  void search() {
    if (!budget_.tick()) return;

    EdgeIndex f = 0;
    while (f < h_.edge_count() && chosen_.intersects(h_.edge_bits(f))) ++f;
    if (f == h_.edge_count()) {
      if (current_.size() < best_size_) {
        best_ = current_;
        best_size_ = current_.size();
      }
      return;
    }
    if (current_.size() + 1 >= best_size_) return;
    const std::size_t lb = lower_bound();
    if (lb == kInfeasible || current_.size() + lb >= best_size_) return;

    VertexList banned_here;
    for (Vertex v : h_.edge(f)) {
      if (banned_.test(v)) continue;
      chosen_.set(v);
      current_.push_back(v);
      search();
      current_.pop_back();
      chosen_.reset(v);
      if (budget_.exceeded()) break;
      banned_.set(v);
      banned_here.push_back(v);
    }
    for (Vertex v : banned_here) banned_.reset(v);
  }

  static constexpr std::size_t kInfeasible = std::numeric_limits<std::size_t>::max();

  const Hypergraph& h_;
  NodeBudget& budget_;
  VertexBits chosen_;
  VertexBits banned_;
  VertexList current_;
  VertexList best_;
  std::size_t best_size_ = std::numeric_limits<std::size_t>::max();
};

// ---------------------------------------------------------------------------

class ColoringSearch {
 public:
  ColoringSearch(const Hypergraph& h, NodeBudget& budget)
      : h_(h),
        budget_(budget),
        side_(h.vertex_count(), kUnset),
        count_{std::vector<std::size_t>(h.edge_count(), 0),
               std::vector<std::size_t>(h.edge_count(), 0)},
        constrained_(h.vertex_count(), false) {
    for (EdgeIndex i = 0; i < h.edge_count(); ++i)
      if (h.edge(i).size() > 1)
        for (Vertex v : h.edge(i)) constrained_[v] = true;
  }

  std::optional<VertexList> run() {
    if (!search(0)) return std::nullopt;
    VertexList side;
    for (Vertex v = 0; v < h_.vertex_count(); ++v)
      if (side_[v] == kInside) side.push_back(v);
    return side;
  }

 private:
  static constexpr int kUnset = -1;
  static constexpr int kOutside = 0;
  static constexpr int kInside = 1;

  // Assigns v and updates edge counters; queues forced vertices. Returns false
  // on a monochromatic edge. Counters are always fully updated so undo() can
  // replay the trail.
  bool assign(Vertex v, int s) {
    if (side_[v] == s) return true;
    if (side_[v] != kUnset) return false;
    side_[v] = s;
    trail_.push_back(v);
    bool ok = true;
    for (EdgeIndex e : h_.incident(v)) {
      const std::size_t size = h_.edge(e).size();
      if (size < 2) continue;
      const std::size_t same = ++count_[s][e];
      if (same == size) {
        ok = false;
      } else if (same == size - 1 && count_[1 - s][e] == 0) {
        for (Vertex u : h_.edge(e))
          if (side_[u] == kUnset) {
            pending_.push_back({u, 1 - s});
            break;
          }
      }
    }
    return ok;
  }

  bool propagate() {
    while (!pending_.empty()) {
      auto [u, s] = pending_.back();
      pending_.pop_back();
      if (!assign(u, s)) {
        pending_.clear();
        return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Vertex v = trail_.back();
      trail_.pop_back();
      for (EdgeIndex e : h_.incident(v))
        if (h_.edge(e).size() > 1) --count_[side_[v]][e];
      side_[v] = kUnset;
    }
  }

  bool search(Vertex from) {
    if (!budget_.tick()) return false;
    while (from < h_.vertex_count() && (side_[from] != kUnset || !constrained_[from])) ++from;
    if (from == h_.vertex_count()) return true;

    for (int s : {kInside, kOutside}) {
      const std::size_t mark = trail_.size();
      if (assign(from, s) && propagate() && search(from + 1)) return true;
      pending_.clear();
      undo(mark);
      if (budget_.exceeded()) return false;
    }
    return false;
  }

  struct Forced {
    Vertex vertex;
    int side;
  };

  const Hypergraph& h_;
  NodeBudget& budget_;
  std::vector<int> side_;
  std::vector<std::size_t> count_[2];
  std::vector<bool> constrained_;
  std::vector<Vertex> trail_;
  std::vector<Forced> pending_;
};

// ---------------------------------------------------------------------------

class TransversalSearch {
 public:
  TransversalSearch(const Hypergraph& h, NodeBudget& budget)
      : h_(h),
        budget_(budget),
        hit_(h.edge_count(), false),
        blocked_(h.vertex_count(), 0),
        alive_(h.edge_count()) {
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) alive_[i] = h.edge(i).size();
  }

  std::optional<VertexList> run() {
    if (!search()) return std::nullopt;
    VertexList out = chosen_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // A vertex is blocked while it lies in a hit edge; choosing it would hit
  // that edge a second time. alive_[e] counts unblocked vertices of e.
  bool choose(Vertex v) {
    bool dead_end = false;
    chosen_.push_back(v);
    for (EdgeIndex e : h_.incident(v)) hit_[e] = true;
    for (EdgeIndex e : h_.incident(v)) {
      for (Vertex u : h_.edge(e)) {
        if (blocked_[u]++ != 0) continue;
        for (EdgeIndex g : h_.incident(u))
          if (--alive_[g] == 0 && !hit_[g]) dead_end = true;
      }
    }
    return !dead_end;
  }

  void unchoose(Vertex v) {
    for (EdgeIndex e : h_.incident(v)) {
      for (Vertex u : h_.edge(e)) {
        if (--blocked_[u] != 0) continue;
        for (EdgeIndex g : h_.incident(u)) ++alive_[g];
      }
    }
    for (EdgeIndex e : h_.incident(v)) hit_[e] = false;
    chosen_.pop_back();
  }

  bool search() {
    if (!budget_.tick()) return false;
    EdgeIndex f = 0;
    while (f < h_.edge_count() && hit_[f]) ++f;
    if (f == h_.edge_count()) return true;

    for (Vertex v : h_.edge(f)) {
      if (blocked_[v]) continue;
      const bool viable = choose(v);
      if (viable && search()) return true;
      unchoose(v);
      if (budget_.exceeded()) return false;
    }
    return false;
  }

  const Hypergraph& h_;
  NodeBudget& budget_;
  std::vector<bool> hit_;
  std::vector<std::size_t> blocked_;
  std::vector<std::size_t> alive_;
  VertexList chosen_;
};

}  // namespace

MatchingResult max_matching(const Hypergraph& h, const SolveOptions& options) {
  Stopwatch clock;
  NodeBudget budget(options.node_budget);
  PackingSearch search(h, budget);
  MatchingResult result;
  result.matching.edges = search.run();
  result.status = status_of(budget);
  result.stats = finish(budget, clock);
  return result;
}

CoverResult covering_number(const Hypergraph& h, const SolveOptions& options) {
  Stopwatch clock;
  NodeBudget budget(options.node_budget);
  HittingSetSearch search(h, budget);
  CoverResult result;
  result.solution.cover = search.run();
  result.solution.nu = result.solution.cover.size();
  result.status = status_of(budget);
  result.stats = finish(budget, clock);
  return result;
}

BipartitionResult bipartition(const Hypergraph& h, const SolveOptions& options) {
  Stopwatch clock;
  NodeBudget budget(options.node_budget);
  ColoringSearch search(h, budget);
  BipartitionResult result;
  if (auto side = search.run()) result.bipartition = Bipartition{std::move(*side)};
  result.status = status_of(budget);
  result.stats = finish(budget, clock);
  return result;
}

TransversalResult exact_transversal(const Hypergraph& h, const SolveOptions& options) {
  Stopwatch clock;
  NodeBudget budget(options.node_budget);
  TransversalSearch search(h, budget);
  TransversalResult result;
  if (auto choice = search.run()) result.transversal = ExactTransversal{std::move(*choice)};
  result.status = status_of(budget);
  result.stats = finish(budget, clock);
  return result;
}

}  // namespace konig
