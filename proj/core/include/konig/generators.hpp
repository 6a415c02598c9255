#pragma once

#include <cstdint>
#include <stdexcept>

#include "konig/hypergraph.hpp"

namespace konig {

/// Raised on generator parameters outside the documented domain.
class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subsets of {0..n-1} whose complement has at most k elements.
///
/// Truncation of the cofinite subsets of an infinite set. Any family of at
/// most (n-1)/k edges shares a common vertex (k > 0), so small subfamilies
/// have a one-edge matching with a one-vertex cover. When 2k < n every two
/// edges intersect, so the whole family has matching number 1 while its
/// covering number is k + 1.
/// Requires 1 <= n and k < n. Edge count is sum_{i<=k} C(n, i).
Hypergraph cofinite_family(std::size_t n, std::size_t k);

/// Subsets of {0..n-1} with at least m elements.
///
/// Truncation of "all infinite subsets". Any fewer than m edges are split by
/// D = {min(e)}; the whole family has no bipartition once n >= 2m - 1.
/// Requires 1 <= m <= n <= 20.
Hypergraph large_subsets_family(std::size_t n, std::size_t m);

/// The p^2 + p lines of the affine plane over the integers mod p.
///
/// Point (x, y) is vertex x*p + y. Distinct lines share at most one point,
/// which is the finite stand-in for an almost disjoint family: any p lines
/// have an exact transversal (each keeps a private point), the whole family
/// has none. Requires p prime and p <= 13.
Hypergraph affine_lines_family(std::size_t p);

Hypergraph complete_graph(std::size_t n);  // n >= 1
Hypergraph cycle_graph(std::size_t n);     // n >= 3
Hypergraph path_graph(std::size_t n);      // n >= 1

/// m distinct edges with 1..max_arity vertices on n vertices. Each draw picks
/// the size uniformly, then a uniform subset of that size; repeats are
/// redrawn. Throws GeneratorError when fewer than m distinct edges exist.
Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_arity,
                             std::uint64_t seed);

/// m distinct 2-vertex edges on n vertices.
Hypergraph random_graph(std::size_t n, std::size_t m, std::uint64_t seed);

/// m distinct edges between {0..left-1} and {left..left+right-1}.
Hypergraph random_bipartite_graph(std::size_t left, std::size_t right, std::size_t m,
                                  std::uint64_t seed);

/// C(n, k), saturating at the maximum of std::uint64_t.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace konig
