#include "konig/heritability.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <thread>

#include "konig/generators.hpp"
#include "konig/rng.hpp"

namespace konig {

namespace {

constexpr std::size_t kBatch = 8192;

// Visits k-subsets of {0..m-1} in lexicographic order.
template <typename F>
void for_each_index_combination(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<EdgeIndex> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  for (;;) {
    f(comb);
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

std::vector<Truth> check_batch(const Hypergraph& h, Property property,
                               const std::vector<EdgeSubset>& batch, const ExploreOptions& options) {
  std::vector<Truth> results(batch.size(), Truth::indeterminate);
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      results[i] = decide(induced(h, batch[i]).graph, property, options.solve);
  };
  const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, batch.size() ? batch.size() : 1);
  if (threads == 1) {
    work(0, batch.size());
    return results;
  }
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (batch.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(batch.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(work, begin, end);
    }
  }
  return results;
}

class Aggregator {
 public:
  Aggregator(const Hypergraph& h, Property property, const ExploreOptions& options,
             HeritabilityReport& report)
      : h_(h), property_(property), options_(options), report_(report) {}

  void add(EdgeSubset subset) {
    batch_.push_back(std::move(subset));
    if (batch_.size() == kBatch) flush();
  }

  void flush() {
    if (batch_.empty()) return;
    const auto results = check_batch(h_, property_, batch_, options_);
    for (std::size_t i = 0; i < batch_.size(); ++i) {
      ++report_.subsets_checked;
      switch (results[i]) {
        case Truth::holds:
          break;
        case Truth::indeterminate:
          ++report_.indeterminate_subsets;
          break;
        case Truth::fails:
          report_.all_small_hold = false;
          if (!report_.smallest_failing_subset || batch_[i] < *report_.smallest_failing_subset)
            report_.smallest_failing_subset = batch_[i];
          break;
      }
      if (options_.keep_outcomes) report_.outcomes.push_back({batch_[i], results[i]});
    }
    batch_.clear();
  }

 private:
  const Hypergraph& h_;
  Property property_;
  const ExploreOptions& options_;
  HeritabilityReport& report_;
  std::vector<EdgeSubset> batch_;
};

// Uniform k-subset of {0..m-1} (Floyd), sorted.
std::vector<EdgeIndex> sample_combination(Rng& rng, std::size_t m, std::size_t k) {
  std::set<EdgeIndex> chosen;
  for (std::size_t j = m - k; j < m; ++j) {
    const auto t = static_cast<EdgeIndex>(rng.below(j + 1));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

template <typename Obstructed>
CoreResult greedy_core(const Hypergraph& h, Obstructed&& obstructed) {
  CoreResult result;
  result.truth = obstructed(h);
  if (result.truth != Truth::holds) return result;

  std::vector<EdgeIndex> keep(h.edge_count());
  for (EdgeIndex i = 0; i < keep.size(); ++i) keep[i] = i;
  for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
    EdgeSubset candidate;
    candidate.indices.reserve(keep.size());
    std::copy_if(keep.begin(), keep.end(), std::back_inserter(candidate.indices),
                 [i](EdgeIndex j) { return j != i; });
    const Truth t = obstructed(induced(h, candidate).graph);
    if (t == Truth::indeterminate) return {Truth::indeterminate, std::nullopt};
    if (t == Truth::holds) keep = std::move(candidate.indices);
  }
  result.core = EdgeSubset{std::move(keep)};
  return result;
}

Truth negate(Truth t) {
  switch (t) {
    case Truth::holds: return Truth::fails;
    case Truth::fails: return Truth::holds;
    case Truth::indeterminate: return Truth::indeterminate;
  }
  return Truth::indeterminate;
}

}  // namespace

std::string_view to_string(Property p) {
  switch (p) {
    case Property::konig: return "konig";
    case Property::weak_konig: return "weak_konig";
    case Property::bipartite: return "bipartite";
    case Property::cp: return "cp";
  }
  return "unknown";
}

std::string_view to_string(ExploreMode m) {
  return m == ExploreMode::exhaustive ? "exhaustive" : "sampled";
}

std::optional<Property> parse_property(std::string_view name) {
  if (name == "konig") return Property::konig;
  if (name == "weak_konig" || name == "weak-konig") return Property::weak_konig;
  if (name == "bipartite") return Property::bipartite;
  if (name == "cp") return Property::cp;
  return std::nullopt;
}

Truth decide(const Hypergraph& h, Property p, const SolveOptions& options) {
  switch (p) {
    case Property::konig: return has_konig(h, options).truth;
    case Property::weak_konig: return has_weak_konig(h, options).truth;
    case Property::bipartite: return is_bipartite(h, options).truth;
    case Property::cp: return has_cp(h, options).truth;
  }
  return Truth::indeterminate;
}

std::uint64_t count_subsets(std::size_t edge_count, std::size_t max_size) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= std::min(max_size, edge_count); ++k) {
    const std::uint64_t c = binomial(edge_count, k);
    if (c > kMax - total) return kMax;
    total += c;
  }
  return total;
}

HeritabilityReport explore(const Hypergraph& h, Property property, const ExploreOptions& options) {
  HeritabilityReport report;
  report.property = property;
  report.max_subset_size = options.max_subset_size;

  const std::size_t m = h.edge_count();
  const std::size_t top = std::min(options.max_subset_size, m);
  const std::uint64_t total = count_subsets(m, options.max_subset_size);
  Aggregator aggregator(h, property, options, report);

  if (total <= options.budget) {
    report.mode = ExploreMode::exhaustive;
    for (std::size_t k = 0; k <= top; ++k)
      for_each_index_combination(m, k, [&](const std::vector<EdgeIndex>& c) { aggregator.add(EdgeSubset{c}); });
  } else {
    report.mode = ExploreMode::sampled;
    report.seed = options.seed;
    Rng rng(options.seed);
    // weights[k] is C(m, k) in floating point; computed by the same sequence
    // of IEEE operations everywhere.
    std::vector<double> cumulative(top + 1);
    double weight = 1.0;
    double sum = 0.0;
    for (std::size_t k = 0; k <= top; ++k) {
      if (k > 0) weight = weight * static_cast<double>(m - k + 1) / static_cast<double>(k);
      sum += weight;
      cumulative[k] = sum;
    }
    std::set<std::vector<EdgeIndex>> seen;
    while (seen.size() < options.budget) {
      const double u = rng.unit() * sum;
      const std::size_t k = static_cast<std::size_t>(
          std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
      auto combination = sample_combination(rng, m, std::min(k, top));
      if (!seen.insert(combination).second) continue;
      aggregator.add(EdgeSubset{std::move(combination)});
    }
  }
  aggregator.flush();

  const Truth whole = decide(h, property, options.solve);
  report.whole_holds = whole == Truth::holds;
  report.whole_indeterminate = whole == Truth::indeterminate;
  return report;
}

CoreResult minimal_nonbipartite_core(const Hypergraph& h, const SolveOptions& options) {
  return greedy_core(h, [&](const Hypergraph& g) { return negate(is_bipartite(g, options).truth); });
}

CoreResult minimal_non_cp_core(const Hypergraph& h, const SolveOptions& options) {
  return greedy_core(h, [&](const Hypergraph& g) { return negate(has_cp(g, options).truth); });
}

CoreResult cover_critical_core(const Hypergraph& h, const SolveOptions& options) {
  const auto whole = covering_number(h, options);
  if (whole.status != SolveStatus::complete) return {Truth::indeterminate, std::nullopt};
  const std::size_t nu = whole.solution.nu;
  return greedy_core(h, [&](const Hypergraph& g) {
    const auto r = covering_number(g, options);
    if (r.status != SolveStatus::complete) return Truth::indeterminate;
    return r.solution.nu == nu ? Truth::holds : Truth::fails;
  });
}

}  // namespace konig
