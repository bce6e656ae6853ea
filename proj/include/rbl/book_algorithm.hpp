#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbl/cliques.hpp"
#include "rbl/colouring.hpp"
#include "rbl/rational.hpp"

namespace rbl {

struct BookParams {
  unsigned k = 12, ell = 12;
  Rational mu{2, 5};
  Rational epsilon;
  std::size_t x_min = 36, w_min = 12;
  Rational p_floor;
  std::size_t spine_budget = 12;

  // epsilon = k^(-1/4) (rounded to 6 decimals), x_min = 3k, w_min = k, p_floor = 1/k
  static BookParams defaults(unsigned k, unsigned ell);
  void validate() const;
};

namespace halt {
inline constexpr const char* XSmall = "|X| <= x_min";
inline constexpr const char* PFloor = "p <= p_floor";
inline constexpr const char* XExhausted = "X exhausted";
inline constexpr const char* AFull = "|A| = k";
inline constexpr const char* BFull = "|B| >= ell";
inline constexpr const char* NoCentral = "no central vertex";
bool is_known(const std::string& reason);
}  // namespace halt

// q_h = p0 + ((1+eps)^h - 1)/k and alpha_h = q_h - q_{h-1}, cached per run.
class Ladder {
 public:
  Ladder(const Rational& p0, const Rational& eps, unsigned k);
  Rational q(unsigned h);  // by value: later calls may grow the cache
  Rational alpha(unsigned h);
  unsigned height(const Rational& p);
  unsigned cap() const { return cap_; }

 private:
  Rational p0_, eps_;
  unsigned k_, cap_;
  std::vector<Rational> q_, pw_;
};

unsigned height(const Rational& p, const Rational& p0, const Rational& eps, unsigned k);
Rational alpha(unsigned h, const Rational& eps, unsigned k);

struct BookState {
  VertexSet X, Y, A, B;
  Rational p, p0;
  std::size_t i = 0;
};

BookState initial_state(const Colouring& c, const VertexSet& X0, const VertexSet& Y0);

Rational pair_weight(const Colouring& c, const BookState& st, Vertex x, Vertex y);
Rational vertex_weight(const Colouring& c, const BookState& st, Vertex x);

enum class StepKind { DegreeRegularise, BigBlue, Red, DensityBoost };
const char* step_kind_name(StepKind k);
StepKind parse_step_kind(const std::string& s);

struct StepRecord {
  std::size_t index = 0;
  StepKind kind = StepKind::DegreeRegularise;
  std::size_t x_size = 0, y_size = 0;
  Rational p;
  unsigned h = 1;
  std::optional<Rational> alpha, beta;
  std::optional<Vertex> central_vertex;
  std::optional<std::size_t> spine, pages;
  std::vector<Vertex> spine_vertices;
  std::vector<Vertex> removed;
  std::size_t removed_count = 0;
  bool halted = false;
  std::string halting_reason;
};

struct TraceSummary {
  std::size_t t = 0, s = 0, big_blue_count = 0;
  Rational beta_harmonic;
  std::string halting_reason;
  std::vector<Vertex> final_A;
  std::size_t final_Y_size = 0;
};

struct Trace {
  BookParams params;
  std::size_t n = 0;
  std::vector<Vertex> x0, y0;
  std::size_t x0_size = 0, y0_size = 0;
  Rational p0;
  std::vector<StepRecord> steps;
  TraceSummary summary;
};

StepRecord degree_regularise(const Colouring& c, BookState& st, const BookParams& prm, Ladder& lad);
VertexSet find_big_blue_candidates(const Colouring& c, const BookState& st, const BookParams& prm);

// Steps 2-5. Returns nullopt (and sets `reason`) when no step can be taken.
std::optional<StepRecord> step(const Colouring& c, BookState& st, const BookParams& prm, Ladder& lad,
                               std::string& reason);

Trace run(const Colouring& c, const VertexSet& X0, const VertexSet& Y0, const BookParams& prm);

// S*: DensityBoost steps whose height jump is at most eps^(-1/4).
std::vector<bool> moderate_boosts(const Trace& tr);
bool height_jump_moderate(long jump, const Rational& eps);

std::string trace_to_json(const Trace& tr);
Trace trace_from_json(const std::string& text);

}  // namespace rbl
