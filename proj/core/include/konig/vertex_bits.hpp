#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace konig {

using Vertex = std::uint32_t;

/// Fixed-width bitset over the vertex ids of one hypergraph.
///
/// The width is set at construction; binary operations require equal widths.
class VertexBits {
 public:
  VertexBits() = default;
  explicit VertexBits(std::size_t width)
      : width_(width), words_((width + 63) / 64, 0) {}

  static VertexBits of(std::size_t width, std::span<const Vertex> vertices) {
    VertexBits bits(width);
    for (Vertex v : vertices) bits.set(v);
    return bits;
  }

  std::size_t width() const { return width_; }

  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool intersects(const VertexBits& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  std::size_t intersection_count(const VertexBits& other) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return n;
  }

  bool is_subset_of(const VertexBits& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  VertexBits& operator|=(const VertexBits& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  VertexBits& operator&=(const VertexBits& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  /// Removes every vertex of `other`.
  VertexBits& subtract(const VertexBits& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int bit = std::countr_zero(w);
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexBits&, const VertexBits&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

inline VertexBits operator|(VertexBits a, const VertexBits& b) { return a |= b; }
inline VertexBits operator&(VertexBits a, const VertexBits& b) { return a &= b; }

}  // namespace konig
