#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rbl/rational.hpp"
#include "rbl/vertex_set.hpp"

namespace rbl {

enum class Colour { Red, Blue };

const char* colour_name(Colour c);
Colour parse_colour(const std::string& s);

// Two-colouring of E(K_n). Both neighbourhood rows are stored.
class Colouring {
 public:
  Colouring() = default;
  explicit Colouring(std::size_t n);  // all blue

  std::size_t n() const { return n_; }
  bool is_red(Vertex u, Vertex v) const { return red_[u].contains(v); }
  void set(Vertex u, Vertex v, Colour c);

  const VertexSet& red(Vertex u) const { return red_[u]; }
  const VertexSet& blue(Vertex u) const { return blue_[u]; }
  const VertexSet& nbr(Vertex u, Colour c) const { return c == Colour::Red ? red_[u] : blue_[u]; }

  bool operator==(const Colouring& o) const { return n_ == o.n_ && red_ == o.red_; }

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> red_, blue_;
};

// mt19937_64 seeded with `seed`; pairs u<v in lexicographic order, one draw each;
// red iff draw < floor(red_prob * 2^64) (always red when red_prob = 1).
Colouring random_colouring(std::size_t n, const Rational& red_prob, std::uint64_t seed);
Colouring paley_colouring(std::uint64_t q);

std::uint64_t red_edges(const Colouring& c, const VertexSet& X, const VertexSet& Y);
Rational red_density(const Colouring& c, const VertexSet& X, const VertexSet& Y);
Rational blue_density(const Colouring& c, const VertexSet& X, const VertexSet& Y);

void save(const Colouring& c, const std::string& path);
Colouring load(const std::string& path);
std::string to_rbc1(const Colouring& c);
Colouring from_rbc1(const std::string& text);

// Write via a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace rbl
