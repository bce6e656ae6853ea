#include "rbl/vertex_set.hpp"

#include "rbl/errors.hpp"

namespace rbl {

VertexSet VertexSet::range(std::size_t n, std::size_t lo, std::size_t hi) {
  VertexSet s(n);
  for (std::size_t v = lo; v < hi && v < n; ++v) s.words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  s.recount();
  return s;
}

VertexSet VertexSet::of(std::size_t n, const std::vector<Vertex>& vs) {
  VertexSet s(n);
  for (Vertex v : vs) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= n_) throw ContractViolation("vertex " + std::to_string(v) + " outside universe");
  std::uint64_t& w = words_[v >> 6];
  std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (!(w & bit)) {
    w |= bit;
    ++count_;
  }
}

void VertexSet::erase(Vertex v) {
  if (v >= n_) return;
  std::uint64_t& w = words_[v >> 6];
  std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (w & bit) {
    w &= ~bit;
    --count_;
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  recount();
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::size_t VertexSet::intersect_count(const VertexSet& a, const VertexSet& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) c += std::popcount(a.words_[i] & b.words_[i]);
  return c;
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
  return static_cast<Vertex>(n_);
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::recount() {
  count_ = 0;
  for (auto w : words_) count_ += std::popcount(w);
}

}  // namespace rbl
