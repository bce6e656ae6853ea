#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rbl {

using Vertex = std::uint32_t;

// Bitset over [0, n) with cached cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static VertexSet range(std::size_t n, std::size_t lo, std::size_t hi);
  static VertexSet full(std::size_t n) { return range(n, 0, n); }
  static VertexSet of(std::size_t n, const std::vector<Vertex>& vs);

  std::size_t universe() const { return n_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const { return v < n_ && (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }

  bool is_subset_of(const VertexSet& o) const;
  bool disjoint(const VertexSet& o) const { return intersect_count(*this, o) == 0; }
  static std::size_t intersect_count(const VertexSet& a, const VertexSet& b);

  // Smallest element, or universe() when empty.
  Vertex first() const;
  std::vector<Vertex> to_vector() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void recount();
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

}  // namespace rbl
