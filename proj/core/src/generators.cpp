#include "konig/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "konig/rng.hpp"

namespace konig {

namespace {

__extension__ typedef unsigned __int128 Wide;

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  VertexList comb(k);
  std::iota(comb.begin(), comb.end(), Vertex{0});
  for (;;) {
    f(comb);
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

VertexList complement(std::size_t n, const VertexList& sorted) {
  VertexList out;
  out.reserve(n - sorted.size());
  std::size_t j = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (j < sorted.size() && sorted[j] == v) {
      ++j;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

constexpr std::uint64_t kMaxGeneratedEdges = 2'000'000;

// Draws `size` distinct values from [0, n) by partial Fisher-Yates.
VertexList draw_subset(Rng& rng, std::size_t n, std::size_t size) {
  VertexList pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide result = 1;
  constexpr Wide kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
    if (result > kMax) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

Hypergraph cofinite_family(std::size_t n, std::size_t k) {
  if (n < 1) throw GeneratorError("cofinite_family: n must be at least 1");
  if (k >= n) throw GeneratorError("cofinite_family: k must be smaller than n");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i <= k; ++i) total += binomial(n, i);
  if (total > kMaxGeneratedEdges) throw GeneratorError("cofinite_family: too many edges");

  std::vector<VertexList> edges;
  edges.reserve(total);
  for (std::size_t i = 0; i <= k; ++i)
    for_each_combination(n, i, [&](const VertexList& missing) { edges.push_back(complement(n, missing)); });
  return Hypergraph(n, std::move(edges));
}

Hypergraph large_subsets_family(std::size_t n, std::size_t m) {
  if (m < 1 || m > n) throw GeneratorError("large_subsets_family: need 1 <= m <= n");
  if (n > 20) throw GeneratorError("large_subsets_family: n must be at most 20");
  std::vector<VertexList> edges;
  for (std::size_t size = m; size <= n; ++size)
    for_each_combination(n, size, [&](const VertexList& e) { edges.push_back(e); });
  return Hypergraph(n, std::move(edges));
}

Hypergraph affine_lines_family(std::size_t p) {
  if (!is_prime(p)) throw GeneratorError("affine_lines_family: p must be prime");
  if (p > 13) throw GeneratorError("affine_lines_family: p must be at most 13");
  const auto point = [p](std::size_t x, std::size_t y) { return static_cast<Vertex>(x * p + y); };
  std::vector<VertexList> lines;
  lines.reserve(p * p + p);
  // y = a*x + b
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b) {
      VertexList line;
      for (std::size_t x = 0; x < p; ++x) line.push_back(point(x, (a * x + b) % p));
      lines.push_back(std::move(line));
    }
  // x = c
  for (std::size_t c = 0; c < p; ++c) {
    VertexList line;
    for (std::size_t y = 0; y < p; ++y) line.push_back(point(c, y));
    lines.push_back(std::move(line));
  }
  return Hypergraph(p * p, std::move(lines));
}

Hypergraph complete_graph(std::size_t n) {
  if (n < 1) throw GeneratorError("complete_graph: n must be at least 1");
  std::vector<VertexList> edges;
  for_each_combination(n, 2, [&](const VertexList& e) { edges.push_back(e); });
  return Hypergraph(n, std::move(edges));
}

Hypergraph cycle_graph(std::size_t n) {
  if (n < 3) throw GeneratorError("cycle_graph: n must be at least 3");
  std::vector<VertexList> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  return Hypergraph(n, std::move(edges));
}

Hypergraph path_graph(std::size_t n) {
  if (n < 1) throw GeneratorError("path_graph: n must be at least 1");
  std::vector<VertexList> edges;
  for (std::size_t i = 0; i + 1 < n; ++i)
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return Hypergraph(n, std::move(edges));
}

Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_arity,
                             std::uint64_t seed) {
  if (max_arity < 1) throw GeneratorError("random_hypergraph: max_arity must be at least 1");
  const std::size_t arity = std::min(max_arity, n);
  std::uint64_t available = 0;
  for (std::size_t i = 1; i <= arity; ++i) {
    const std::uint64_t c = binomial(n, i);
    available = c > std::numeric_limits<std::uint64_t>::max() - available
                    ? std::numeric_limits<std::uint64_t>::max()
                    : available + c;
  }
  if (m > available)
    throw GeneratorError("random_hypergraph: only " + std::to_string(available) +
                         " distinct edges of size <= " + std::to_string(max_arity) + " exist on " +
                         std::to_string(n) + " vertices");
  Rng rng(seed);
  std::set<VertexList> edges;
  while (edges.size() < m) {
    const std::size_t size = 1 + static_cast<std::size_t>(rng.below(arity));
    edges.insert(draw_subset(rng, n, size));
  }
  return Hypergraph(n, {edges.begin(), edges.end()});
}

Hypergraph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m > binomial(n, 2))
    throw GeneratorError("random_graph: only " + std::to_string(binomial(n, 2)) +
                         " distinct edges exist on " + std::to_string(n) + " vertices");
  Rng rng(seed);
  std::set<VertexList> edges;
  while (edges.size() < m) edges.insert(draw_subset(rng, n, 2));
  return Hypergraph(n, {edges.begin(), edges.end()});
}

Hypergraph random_bipartite_graph(std::size_t left, std::size_t right, std::size_t m,
                                  std::uint64_t seed) {
  if (m > left * right)
    throw GeneratorError("random_bipartite_graph: only " + std::to_string(left * right) +
                         " distinct edges exist");
  Rng rng(seed);
  std::set<VertexList> edges;
  while (edges.size() < m) {
    const auto a = static_cast<Vertex>(rng.below(left));
    const auto b = static_cast<Vertex>(left + rng.below(right));
    edges.insert({a, b});
  }
  return Hypergraph(left + right, {edges.begin(), edges.end()});
}

}  // namespace konig
