#include "rbl/book_algorithm.hpp"

#include <cmath>
#include <json.hpp>

#include "rbl/errors.hpp"

namespace rbl {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

BookParams BookParams::defaults(unsigned k, unsigned ell) {
  BookParams p;
  p.k = k;
  p.ell = ell;
  p.epsilon = round_to_denominator(std::pow(static_cast<double>(k), -0.25), 1000000);
  p.x_min = 3 * static_cast<std::size_t>(k);
  p.w_min = k;
  p.p_floor = Rational(1, k);
  return p;
}

void BookParams::validate() const {
  if (k < 1 || ell < 1) throw InvalidInput("k and ell must be at least 1");
  if (ell > k) throw InvalidInput("ell must not exceed k");
  if (mu <= 0 || mu >= 1) throw InvalidInput("mu must lie in (0,1)");
  if (epsilon <= 0 || epsilon >= 1) throw InvalidInput("epsilon must lie in (0,1)");
  if (x_min < 1 || w_min < 1) throw InvalidInput("x_min and w_min must be at least 1");
  if (p_floor < 0 || p_floor > 1) throw InvalidInput("p_floor must lie in [0,1]");
  if (spine_budget < 1) throw InvalidInput("spine_budget must be at least 1");
}

bool halt::is_known(const std::string& r) {
  return r == XSmall || r == PFloor || r == XExhausted || r == AFull || r == BFull || r == NoCentral;
}

Ladder::Ladder(const Rational& p0, const Rational& eps, unsigned k) : p0_(p0), eps_(eps), k_(k) {
  // (1+eps)^h >= 1 + k is reached by h <= 2 ln(k+1)/eps + 1
  cap_ = static_cast<unsigned>(std::ceil(2.0 * std::log(k + 1.0) / to_double(eps))) + 2;
  q_.push_back(p0);
  pw_.push_back(1);
}

Rational Ladder::q(unsigned h) {
  while (q_.size() <= h) {
    pw_.push_back(pw_.back() * (1 + eps_));
    q_.push_back(p0_ + (pw_.back() - 1) / k_);
  }
  return q_[h];
}

Rational Ladder::alpha(unsigned h) {
  if (h < 1) throw ContractViolation("alpha needs h >= 1");
  q(h);
  return eps_ * pw_[h - 1] / k_;
}

unsigned Ladder::height(const Rational& p) {
  for (unsigned h = 1; h <= cap_; ++h)
    if (p <= q(h)) return h;
  throw InternalError("height exceeds the cap " + std::to_string(cap_));
}

unsigned height(const Rational& p, const Rational& p0, const Rational& eps, unsigned k) {
  return Ladder(p0, eps, k).height(p);
}

Rational alpha(unsigned h, const Rational& eps, unsigned k) {
  if (h < 1) throw ContractViolation("alpha needs h >= 1");
  return eps * pow(1 + eps, h - 1) / k;
}

BookState initial_state(const Colouring& c, const VertexSet& X0, const VertexSet& Y0) {
  if (X0.universe() != c.n() || Y0.universe() != c.n())
    throw ContractViolation("vertex sets do not match the colouring");
  BookState st{X0, Y0, VertexSet(c.n()), VertexSet(c.n()), red_density(c, X0, Y0), 0, 0};
  st.p0 = st.p;
  return st;
}

Rational pair_weight(const Colouring& c, const BookState& st, Vertex x, Vertex y) {
  if (!st.X.contains(x) || !st.X.contains(y)) throw ContractViolation("pair_weight needs x, y in X");
  if (st.Y.empty()) throw UndefinedDensity("Y is empty");
  VertexSet rx = c.red(x) & st.Y;
  std::size_t common = VertexSet::intersect_count(rx, c.red(y));
  return (Rational(common) - st.p * rx.size()) / st.Y.size();
}

Rational vertex_weight(const Colouring& c, const BookState& st, Vertex x) {
  if (!st.X.contains(x)) throw ContractViolation("vertex_weight needs x in X");
  Rational w = 0;
  st.X.for_each([&](Vertex y) {
    if (y != x) w += pair_weight(c, st, x, y);
  });
  return w;
}

const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::DegreeRegularise: return "DegreeRegularise";
    case StepKind::BigBlue: return "BigBlue";
    case StepKind::Red: return "Red";
    case StepKind::DensityBoost: return "DensityBoost";
  }
  return "?";
}

StepKind parse_step_kind(const std::string& s) {
  for (auto k : {StepKind::DegreeRegularise, StepKind::BigBlue, StepKind::Red, StepKind::DensityBoost})
    if (s == step_kind_name(k)) return k;
  throw SchemaError("unknown step kind '" + s + "'");
}

StepRecord degree_regularise(const Colouring& c, BookState& st, const BookParams& prm, Ladder& lad) {
  if (st.X.empty() || st.Y.empty()) throw ContractViolation("degree_regularise needs nonempty X, Y");
  unsigned h = lad.height(st.p);
  Rational a = lad.alpha(h);
  const std::size_t nx = st.X.size(), ny = st.Y.size();
  const BigInt e = red_edges(c, st.X, st.Y);
  // keep x iff d >= p|Y| - a|Y|/sqrt(eps); with g = e - d|X| this is g <= 0 or g^2 eps <= a^2 |Y|^2 |X|^2
  const BigInt lhs_f = numerator(prm.epsilon) * denominator(a) * denominator(a);
  const BigInt rhs = numerator(a) * numerator(a) * denominator(prm.epsilon) * BigInt(ny) * ny * nx * nx;
  StepRecord rec;
  rec.kind = StepKind::DegreeRegularise;
  rec.alpha = a;
  VertexSet keep(c.n());
  st.X.for_each([&](Vertex x) {
    BigInt g = e - BigInt(VertexSet::intersect_count(c.red(x), st.Y)) * nx;
    if (g <= 0 || g * g * lhs_f <= rhs)
      keep.insert(x);
    else
      rec.removed.push_back(x);
  });
  st.X = keep;
  rec.removed_count = rec.removed.size();
  rec.index = ++st.i;
  rec.x_size = st.X.size();
  rec.y_size = st.Y.size();
  if (!st.X.empty()) {
    st.p = red_density(c, st.X, st.Y);
    rec.p = st.p;
    rec.h = lad.height(st.p);
  }
  return rec;
}

VertexSet find_big_blue_candidates(const Colouring& c, const BookState& st, const BookParams& prm) {
  return high_blue_degree(c, st.X, prm.mu);
}

std::optional<StepRecord> step(const Colouring& c, BookState& st, const BookParams& prm, Ladder& lad,
                               std::string& reason) {
  StepRecord rec;
  VertexSet W = find_big_blue_candidates(c, st, prm);
  if (W.size() >= prm.w_min) {
    Book b = best_blue_book(c, st.X, prm.mu, prm.spine_budget);
    st.X = b.pages;
    st.B |= b.spine;
    rec.kind = StepKind::BigBlue;
    rec.spine = b.spine.size();
    rec.pages = b.pages.size();
    rec.spine_vertices = b.spine.to_vector();
  } else {
    const std::size_t nx = st.X.size(), ny = st.Y.size();
    const BigInt mnum = numerator(prm.mu), mden = denominator(prm.mu);
    std::vector<std::size_t> dX(c.n(), 0);
    st.Y.for_each([&](Vertex z) { dX[z] = VertexSet::intersect_count(c.red(z), st.X); });
    const std::uint64_t e = red_edges(c, st.X, st.Y);
    // omega(x) * |X||Y|^2 = W_x |X||Y| - e (|X|-1) d_x
    bool have = false;
    Vertex best = 0;
    __int128 best_key = 0;
    st.X.for_each([&](Vertex x) {
      if (mden * VertexSet::intersect_count(c.blue(x), st.X) > mnum * nx) return;
      std::size_t dx = 0;
      __int128 wx = 0;
      (c.red(x) & st.Y).for_each([&](Vertex z) {
        wx += dX[z];
        ++dx;
      });
      wx -= dx;
      __int128 key = wx * nx * ny - static_cast<__int128>(e) * (nx - 1) * dx;
      if (!have || key > best_key) best = x, best_key = key, have = true;
    });
    if (!have) {
      reason = halt::NoCentral;
      return std::nullopt;
    }
    const Vertex x = best;
    unsigned h = lad.height(st.p);
    Rational a = lad.alpha(h);
    VertexSet nrx = c.red(x) & st.X, nry = c.red(x) & st.Y;
    bool red = false;
    if (!nrx.empty() && !nry.empty()) {
      Rational d(BigInt(red_edges(c, nrx, nry)), BigInt(nrx.size()) * nry.size());
      red = d >= st.p - a;
    }
    VertexSet nbx = c.blue(x) & st.X;
    rec.central_vertex = x;
    rec.alpha = a;
    rec.beta = Rational(BigInt(nbx.size()), BigInt(nx));
    if (red) {
      rec.kind = StepKind::Red;
      st.X = nrx;
      st.Y = nry;
      st.A.insert(x);
    } else {
      if (nbx.empty() || nry.empty()) {
        reason = halt::XExhausted;
        return std::nullopt;
      }
      rec.kind = StepKind::DensityBoost;
      st.X = nbx;
      st.Y = nry;
      st.B.insert(x);
    }
  }
  st.p = red_density(c, st.X, st.Y);
  rec.index = ++st.i;
  rec.x_size = st.X.size();
  rec.y_size = st.Y.size();
  rec.p = st.p;
  rec.h = lad.height(st.p);
  return rec;
}

namespace {

const char* halting_reason(const BookState& st, const BookParams& prm) {
  if (st.A.size() >= prm.k) return halt::AFull;
  if (st.B.size() >= prm.ell) return halt::BFull;
  if (st.X.size() <= prm.x_min) return halt::XSmall;
  if (st.p <= prm.p_floor) return halt::PFloor;
  return nullptr;
}

}  // namespace

bool height_jump_moderate(long jump, const Rational& eps) {
  if (jump <= 0) return true;
  Rational j4 = pow(Rational(jump), 4);
  return j4 * eps <= 1;
}

std::vector<bool> moderate_boosts(const Trace& tr) {
  std::vector<bool> out(tr.steps.size(), false);
  for (std::size_t i = 0; i < tr.steps.size(); ++i) {
    if (tr.steps[i].kind != StepKind::DensityBoost) continue;
    long prev = i == 0 ? 1 : static_cast<long>(tr.steps[i - 1].h);
    out[i] = height_jump_moderate(static_cast<long>(tr.steps[i].h) - prev, tr.params.epsilon);
  }
  return out;
}

Trace run(const Colouring& c, const VertexSet& X0, const VertexSet& Y0, const BookParams& prm) {
  prm.validate();
  BookState st = initial_state(c, X0, Y0);
  Ladder lad(st.p0, prm.epsilon, prm.k);
  Trace tr;
  tr.params = prm;
  tr.n = c.n();
  tr.x0 = X0.to_vector();
  tr.y0 = Y0.to_vector();
  tr.x0_size = tr.x0.size();
  tr.y0_size = tr.y0.size();
  tr.p0 = st.p0;

  std::string reason;
  auto stop = [&](const std::string& r) {
    reason = r;
    if (!tr.steps.empty()) {
      tr.steps.back().halted = true;
      tr.steps.back().halting_reason = r;
    }
  };
  for (;;) {
    if (const char* r = halting_reason(st, prm)) {
      stop(r);
      break;
    }
    tr.steps.push_back(degree_regularise(c, st, prm, lad));
    if (st.X.empty()) {
      stop(halt::XExhausted);
      break;
    }
    if (const char* r = halting_reason(st, prm)) {
      stop(r);
      break;
    }
    std::string why;
    auto rec = step(c, st, prm, lad, why);
    if (!rec) {
      stop(why);
      break;
    }
    tr.steps.push_back(std::move(*rec));
  }

  auto& sm = tr.summary;
  sm.halting_reason = reason;
  auto moderate = moderate_boosts(tr);
  Rational inv_sum = 0;
  std::size_t nstar = 0;
  for (std::size_t i = 0; i < tr.steps.size(); ++i) {
    const auto& r = tr.steps[i];
    if (r.kind == StepKind::Red) ++sm.t;
    if (r.kind == StepKind::DensityBoost) ++sm.s;
    if (r.kind == StepKind::BigBlue) ++sm.big_blue_count;
    if (moderate[i]) {
      ++nstar;
      inv_sum += 1 / *r.beta;
    }
  }
  sm.beta_harmonic = nstar == 0 ? prm.mu : Rational(nstar) / inv_sum;
  sm.final_A = st.A.to_vector();
  sm.final_Y_size = st.Y.size();

  if (!is_clique(c, Colour::Red, st.A)) throw InternalError("final A is not a red clique");
  bool ok = true;
  st.A.for_each([&](Vertex a) {
    if (!st.Y.is_subset_of(c.red(a))) ok = false;
  });
  if (!ok) throw InternalError("final (A, Y) is not a red book");
  return tr;
}

// ---- JSON ----

using ojson = nlohmann::ordered_json;

namespace {

ojson opt_rat(const std::optional<Rational>& r) { return r ? ojson(to_string(*r)) : ojson(nullptr); }

template <class T>
ojson opt_num(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

const ojson& field(const ojson& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw SchemaError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::uint64_t get_uint(const ojson& j, const char* name) {
  const ojson& v = field(j, name);
  if (!v.is_number_unsigned()) throw SchemaError(std::string("field '") + name + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

Rational get_rat(const ojson& v, const char* name) {
  if (!v.is_string()) throw SchemaError(std::string("field '") + name + "' must be a \"num/den\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InvalidInput& e) {
    throw SchemaError(std::string("field '") + name + "': " + e.what());
  }
}

std::optional<Rational> get_opt_rat(const ojson& j, const char* name) {
  const ojson& v = field(j, name);
  if (v.is_null()) return std::nullopt;
  return get_rat(v, name);
}

std::optional<std::uint64_t> get_opt_uint(const ojson& j, const char* name) {
  const ojson& v = field(j, name);
  if (v.is_null()) return std::nullopt;
  return get_uint(j, name);
}

std::vector<Vertex> get_vertices(const ojson& v, const char* name) {
  if (!v.is_array()) throw SchemaError(std::string("field '") + name + "' must be an array");
  std::vector<Vertex> out;
  for (const auto& x : v) {
    if (!x.is_number_unsigned() || x.get<std::uint64_t>() > 0xffffffffu)
      throw SchemaError(std::string("field '") + name + "' holds a non-vertex");
    out.push_back(x.get<Vertex>());
  }
  return out;
}

}  // namespace

std::string trace_to_json(const Trace& tr) {
  ojson j;
  const auto& p = tr.params;
  j["params"] = {{"k", p.k},
                 {"ell", p.ell},
                 {"mu", to_string(p.mu)},
                 {"epsilon", to_string(p.epsilon)},
                 {"x_min", p.x_min},
                 {"w_min", p.w_min},
                 {"p_floor", to_string(p.p_floor)},
                 {"spine_budget", p.spine_budget}};
  j["n"] = tr.n;
  j["x0"] = tr.x0;
  j["y0"] = tr.y0;
  j["p0"] = to_string(tr.p0);
  j["x0_size"] = tr.x0_size;
  j["y0_size"] = tr.y0_size;
  ojson steps = ojson::array();
  for (const auto& r : tr.steps) {
    ojson s;
    s["index"] = r.index;
    s["kind"] = step_kind_name(r.kind);
    s["x_size"] = r.x_size;
    s["y_size"] = r.y_size;
    s["p"] = to_string(r.p);
    s["h"] = r.h;
    s["alpha"] = opt_rat(r.alpha);
    s["beta"] = opt_rat(r.beta);
    s["central_vertex"] = opt_num(r.central_vertex);
    s["spine"] = opt_num(r.spine);
    s["pages"] = opt_num(r.pages);
    s["spine_vertices"] = r.kind == StepKind::BigBlue ? ojson(r.spine_vertices) : ojson(nullptr);
    s["removed_count"] = r.removed_count;
    s["halted"] = r.halted;
    s["halting_reason"] = r.halted ? ojson(r.halting_reason) : ojson(nullptr);
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  const auto& sm = tr.summary;
  j["summary"] = {{"t", sm.t},
                  {"s", sm.s},
                  {"big_blue_count", sm.big_blue_count},
                  {"beta_harmonic", to_string(sm.beta_harmonic)},
                  {"halting_reason", sm.halting_reason},
                  {"final_A", sm.final_A},
                  {"final_Y_size", sm.final_Y_size}};
  return j.dump(1) + "\n";
}

Trace trace_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw SchemaError(std::string("trace is not valid JSON: ") + e.what());
  }
  Trace tr;
  const ojson& pj = field(j, "params");
  auto& p = tr.params;
  p.k = static_cast<unsigned>(get_uint(pj, "k"));
  p.ell = static_cast<unsigned>(get_uint(pj, "ell"));
  p.mu = get_rat(field(pj, "mu"), "mu");
  p.epsilon = get_rat(field(pj, "epsilon"), "epsilon");
  p.x_min = get_uint(pj, "x_min");
  p.w_min = get_uint(pj, "w_min");
  p.p_floor = get_rat(field(pj, "p_floor"), "p_floor");
  p.spine_budget = get_uint(pj, "spine_budget");
  try {
    p.validate();
  } catch (const InvalidInput& e) {
    throw SchemaError(std::string("params: ") + e.what());
  }
  tr.n = get_uint(j, "n");
  tr.x0 = get_vertices(field(j, "x0"), "x0");
  tr.y0 = get_vertices(field(j, "y0"), "y0");
  tr.p0 = get_rat(field(j, "p0"), "p0");
  tr.x0_size = get_uint(j, "x0_size");
  tr.y0_size = get_uint(j, "y0_size");
  const ojson& steps = field(j, "steps");
  if (!steps.is_array()) throw SchemaError("steps must be an array");
  for (const auto& s : steps) {
    StepRecord r;
    r.index = get_uint(s, "index");
    const ojson& kind = field(s, "kind");
    if (!kind.is_string()) throw SchemaError("kind must be a string");
    r.kind = parse_step_kind(kind.get<std::string>());
    r.x_size = get_uint(s, "x_size");
    r.y_size = get_uint(s, "y_size");
    r.p = get_rat(field(s, "p"), "p");
    r.h = static_cast<unsigned>(get_uint(s, "h"));
    r.alpha = get_opt_rat(s, "alpha");
    r.beta = get_opt_rat(s, "beta");
    if (auto cv = get_opt_uint(s, "central_vertex")) r.central_vertex = static_cast<Vertex>(*cv);
    if (auto v = get_opt_uint(s, "spine")) r.spine = *v;
    if (auto v = get_opt_uint(s, "pages")) r.pages = *v;
    const ojson& sv = field(s, "spine_vertices");
    if (!sv.is_null()) r.spine_vertices = get_vertices(sv, "spine_vertices");
    r.removed_count = get_uint(s, "removed_count");
    const ojson& hl = field(s, "halted");
    if (!hl.is_boolean()) throw SchemaError("halted must be a boolean");
    r.halted = hl.get<bool>();
    const ojson& hr = field(s, "halting_reason");
    if (!hr.is_null()) {
      if (!hr.is_string()) throw SchemaError("halting_reason must be a string or null");
      r.halting_reason = hr.get<std::string>();
    }
    tr.steps.push_back(std::move(r));
  }
  const ojson& sj = field(j, "summary");
  auto& sm = tr.summary;
  sm.t = get_uint(sj, "t");
  sm.s = get_uint(sj, "s");
  sm.big_blue_count = get_uint(sj, "big_blue_count");
  sm.beta_harmonic = get_rat(field(sj, "beta_harmonic"), "beta_harmonic");
  const ojson& hr = field(sj, "halting_reason");
  if (!hr.is_string()) throw SchemaError("summary.halting_reason must be a string");
  sm.halting_reason = hr.get<std::string>();
  sm.final_A = get_vertices(field(sj, "final_A"), "final_A");
  sm.final_Y_size = get_uint(sj, "final_Y_size");
  return tr;
}

}  // namespace rbl
