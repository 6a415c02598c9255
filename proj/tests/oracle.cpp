#include "oracle.hpp"

#include <stdexcept>

namespace konig::oracle {

namespace {

std::uint64_t mask_of(const VertexList& e) {
  std::uint64_t m = 0;
  for (auto v : e) m |= std::uint64_t{1} << v;
  return m;
}

void require_small(const Hypergraph& h) {
  if (h.vertex_count() > 20) throw std::invalid_argument("oracle: at most 20 vertices");
}

void extend(const Hypergraph& h, std::size_t next, std::uint64_t used, std::vector<std::size_t>& current,
            std::vector<std::vector<std::size_t>>& out) {
  out.push_back(current);
  for (std::size_t i = next; i < h.edge_count(); ++i) {
    const std::uint64_t e = mask_of(h.edge(i));
    if (e & used) continue;
    current.push_back(i);
    extend(h, i + 1, used | e, current, out);
    current.pop_back();
  }
}

int popcount(std::uint64_t x) {
  int c = 0;
  for (; x; x &= x - 1) ++c;
  return c;
}

}  // namespace

std::vector<std::vector<std::size_t>> all_matchings(const Hypergraph& h) {
  require_small(h);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  extend(h, 0, 0, current, out);
  return out;
}

std::vector<std::vector<std::size_t>> maximum_matchings(const Hypergraph& h) {
  auto all = all_matchings(h);
  std::size_t best = 0;
  for (const auto& m : all) best = std::max(best, m.size());
  std::vector<std::vector<std::size_t>> out;
  for (auto& m : all)
    if (m.size() == best) out.push_back(std::move(m));
  return out;
}

std::size_t matching_number(const Hypergraph& h) { return maximum_matchings(h).front().size(); }

bool cover_ok(const Hypergraph& h, std::uint64_t mask) {
  for (const auto& e : h.edges())
    if (!(mask_of(e) & mask)) return false;
  return true;
}

std::vector<Set> minimum_covers(const Hypergraph& h) {
  require_small(h);
  const std::uint64_t limit = std::uint64_t{1} << h.vertex_count();
  int best = 1 << 30;
  std::vector<Set> out;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (!cover_ok(h, mask)) continue;
    const int size = popcount(mask);
    if (size > best) continue;
    if (size < best) {
      best = size;
      out.clear();
    }
    Set s;
    for (std::uint32_t v = 0; v < h.vertex_count(); ++v)
      if (mask >> v & 1) s.push_back(v);
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t covering_number(const Hypergraph& h) { return minimum_covers(h).front().size(); }

bool bipartition_exists(const Hypergraph& h) {
  require_small(h);
  const std::uint64_t limit = std::uint64_t{1} << h.vertex_count();
  for (std::uint64_t side = 0; side < limit; ++side) {
    bool ok = true;
    for (const auto& e : h.edges()) {
      if (e.size() < 2) continue;
      const std::uint64_t m = mask_of(e);
      if (!(m & side) || !(m & ~side)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool exact_transversal_exists(const Hypergraph& h) {
  require_small(h);
  const std::uint64_t limit = std::uint64_t{1} << h.vertex_count();
  for (std::uint64_t c = 0; c < limit; ++c) {
    bool ok = true;
    for (const auto& e : h.edges())
      if (popcount(mask_of(e) & c) != 1) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

bool konig_exists(const Hypergraph& h) {
  for (const auto& m : all_matchings(h)) {
    // Odometer over one representative per matched edge.
    std::vector<std::size_t> pick(m.size(), 0);
    for (;;) {
      std::uint64_t cover = 0;
      for (std::size_t i = 0; i < m.size(); ++i) cover |= std::uint64_t{1} << h.edge(m[i])[pick[i]];
      if (cover_ok(h, cover)) return true;
      std::size_t i = 0;
      while (i < m.size() && ++pick[i] == h.edge(m[i]).size()) pick[i++] = 0;
      if (i == m.size()) break;
    }
  }
  return false;
}

}  // namespace konig::oracle
