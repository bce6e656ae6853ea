#pragma once

#include <cstddef>

#include "rbl/colouring.hpp"

namespace rbl {

struct Book {
  VertexSet spine, pages;
  Colour colour = Colour::Blue;
};

// Maximum clique of `colour` inside `within`; stops as soon as one of size `size_cap` is found.
VertexSet max_clique(const Colouring& c, Colour colour, const VertexSet& within,
                     std::size_t size_cap);

enum class MonoResult { RedClique, BlueClique, Neither };

struct MonoWitness {
  MonoResult kind = MonoResult::Neither;
  VertexSet clique;
};

MonoWitness has_mono_clique(const Colouring& c, std::size_t k, std::size_t ell);

bool is_clique(const Colouring& c, Colour colour, const VertexSet& s);
bool is_book(const Colouring& c, const Book& b);

// Vertices of `within` whose blue degree inside `within` is at least mu*|within|.
VertexSet high_blue_degree(const Colouring& c, const VertexSet& within, const Rational& mu);

Book best_blue_book(const Colouring& c, const VertexSet& within, const Rational& mu,
                    std::size_t spine_budget = 12);

}  // namespace rbl
