#include "rbl/invariants.hpp"

#include <algorithm>
#include <map>
#include <json.hpp>

#include "rbl/errors.hpp"

namespace rbl {

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10",
                                               "weight_bound", "beta_floor"};
  return ids;
}

const CheckResult& CheckReport::check(const std::string& id) const {
  for (const auto& [k, v] : checks)
    if (k == id) return v;
  throw ContractViolation("no check '" + id + "'");
}

std::optional<Rational> CheckReport::diagnostic(const std::string& id) const {
  for (const auto& [k, v] : diagnostics)
    if (k == id) return v;
  return std::nullopt;
}

bool CheckReport::exact_checks_pass() const { return failed().empty(); }

std::vector<std::string> CheckReport::failed() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : checks)
    if (v.status == "fail") out.push_back(k);
  return out;
}

namespace {

struct Acc {
  CheckResult r;
  void slack(const Rational& s, std::size_t idx, const std::string& what) {
    if (!r.worst_slack || s < *r.worst_slack) r.worst_slack = s;
    if (s < 0) violate(idx, what);
  }
  void violate(std::size_t idx, const std::string& what) {
    if (r.status != "fail") {
      r.status = "fail";
      r.first_violation = idx;
      r.detail = what;
    }
  }
};

struct Halt {};  // replay cannot continue

Rational ratio(std::size_t a, std::size_t b) { return Rational(BigInt(a), BigInt(b)); }

class Replayer {
 public:
  Replayer(const Colouring& c, const Trace& tr) : c_(c), tr_(tr), prm_(tr.params) {}

  void run() {
    provenance();
    st_.X = VertexSet::of(c_.n(), tr_.x0);
    st_.Y = VertexSet::of(c_.n(), tr_.y0);
    st_.A = VertexSet(c_.n());
    st_.B = VertexSet(c_.n());
    if (tr_.x0_size != st_.X.size() || tr_.y0_size != st_.Y.size())
      acc("1").violate(0, "x0_size/y0_size disagree with the initial sets");
    st_.p = red_density(c_, st_.X, st_.Y);
    if (st_.p != tr_.p0) acc("2").violate(0, "p0 does not match the recomputed density");
    lad_.emplace(st_.p, prm_.epsilon, prm_.k);
    p_.push_back(st_.p);
    h_.push_back(1);
    alpha_bounds(st_.p, 0);
    try {
      for (std::size_t j = 0; j < tr_.steps.size(); ++j) {
        const StepRecord& rec = tr_.steps[j];
        const std::size_t idx = j + 1;
        if (rec.index != idx) acc("9").violate(idx, "step index out of sequence");
        bool last = j + 1 == tr_.steps.size();
        if (!last && (rec.halted || !rec.halting_reason.empty()))
          acc("9").violate(idx, "halting flag on a step that is not the last");
        if (const char* r = halting(st_)) {
          acc("9").violate(idx, std::string("run continues past halting condition ") + r);
          throw Halt{};
        }
        bool expect_d = kinds_.empty() || kinds_.back() != StepKind::DegreeRegularise;
        if (expect_d != (rec.kind == StepKind::DegreeRegularise)) {
          acc("9").violate(idx, "degree regularisation must alternate with Steps 2-5");
          throw Halt{};
        }
        if (rec.kind == StepKind::DegreeRegularise)
          replay_d(rec, idx);
        else
          replay_step(rec, idx);
        kinds_.push_back(rec.kind);
      }
      final_checks();
    } catch (const Halt&) {
    }
  }

  CheckReport report() {
    CheckReport rep;
    diagnostics(rep);
    for (const auto& id : check_ids()) {
      CheckResult r = acc(id).r;
      if (id == "10") {
        r.status = "diagnostic";
        r.worst_slack.reset();
      }
      rep.checks.emplace_back(id, r);
    }
    return rep;
  }

  std::vector<WeightMargin> weights;

 private:
  Acc& acc(const std::string& id) { return accs_[id]; }

  void provenance() {
    if (tr_.n != c_.n())
      throw ProvenanceError("trace is for n = " + std::to_string(tr_.n) + ", colouring has n = " +
                            std::to_string(c_.n()));
    auto in_range = [&](const std::vector<Vertex>& vs) {
      for (Vertex v : vs)
        if (v >= c_.n()) throw ProvenanceError("vertex " + std::to_string(v) + " outside the colouring");
    };
    in_range(tr_.x0);
    in_range(tr_.y0);
    in_range(tr_.summary.final_A);
    for (const auto& r : tr_.steps) {
      in_range(r.spine_vertices);
      if (r.central_vertex) in_range({*r.central_vertex});
    }
    VertexSet X = VertexSet::of(c_.n(), tr_.x0), Y = VertexSet::of(c_.n(), tr_.y0);
    if (X.size() != tr_.x0.size() || Y.size() != tr_.y0.size())
      throw ProvenanceError("repeated vertices in x0/y0");
    if (X.empty() || Y.empty() || !X.disjoint(Y)) throw ProvenanceError("x0, y0 must be disjoint and nonempty");
  }

  const char* halting(const BookState& s) const {
    if (s.A.size() >= prm_.k) return halt::AFull;
    if (s.B.size() >= prm_.ell) return halt::BFull;
    if (s.X.size() <= prm_.x_min) return halt::XSmall;
    if (s.p <= prm_.p_floor) return halt::PFloor;
    return nullptr;
  }

  void expect_null(const StepRecord& rec, std::size_t idx) {
    bool bad = false;
    if (rec.kind == StepKind::DegreeRegularise)
      bad = rec.beta || rec.central_vertex || rec.spine || rec.pages || !rec.spine_vertices.empty() || !rec.alpha;
    else if (rec.kind == StepKind::BigBlue)
      bad = rec.alpha || rec.beta || rec.central_vertex || !rec.spine || !rec.pages || rec.removed_count;
    else
      bad = !rec.alpha || !rec.beta || !rec.central_vertex || rec.spine || rec.pages ||
            !rec.spine_vertices.empty() || rec.removed_count;
    if (bad) acc("9").violate(idx, "kind-specific fields present where not applicable (or missing)");
  }

  void replay_d(const StepRecord& rec, std::size_t idx) {
    expect_null(rec, idx);
    const unsigned h = lad_->height(st_.p);
    const Rational a = lad_->alpha(h);
    if (!rec.alpha || *rec.alpha != a) acc("8").violate(idx, "recorded alpha differs from alpha_{h(p)}");
    const Rational& eps = prm_.epsilon;
    const std::size_t ny = st_.Y.size();
    const Rational bound = a * a * ny * ny;  // compared with gap^2 * eps
    VertexSet keep(c_.n());
    std::vector<Vertex> removed;
    st_.X.for_each([&](Vertex x) {
      Rational gap = st_.p * ny - VertexSet::intersect_count(c_.red(x), st_.Y);
      if (gap <= 0 || gap * gap * eps <= bound)
        keep.insert(x);
      else
        removed.push_back(x);
    });
    if (rec.removed_count != removed.size())
      acc("4").violate(idx, "removed_count differs from the recomputed removal");
    if (!rec.removed.empty() && rec.removed != removed) acc("4").violate(idx, "removed vertices differ");
    if (keep.empty()) {
      acc("9").violate(idx, "degree regularisation emptied X");
      throw Halt{};
    }
    VertexSet Xprev = st_.X, Yprev = st_.Y;
    Rational pprev = st_.p;
    st_.X = keep;
    st_.p = red_density(c_, st_.X, st_.Y);
    const Rational delta = st_.p - pprev;
    if (removed.empty()) {
      acc("4").slack(delta, idx, "density changed without removals");
      if (delta != 0) acc("4").violate(idx, "density changed without removals");
    } else {
      Rational need = ratio(removed.size(), st_.X.size());
      need = need * need * a * a / eps;  // squared right-hand side
      acc("4").slack(delta < 0 ? delta : delta * delta - need, idx,
                     "degree-regularisation boost below (r/|X_i|) eps^(-1/2) alpha");
    }
    after(rec, idx, Xprev, Yprev, pprev);
  }

  struct Central {
    bool any = false;
    Vertex best = 0;
    std::vector<Rational> omega;  // indexed by vertex, valid on X
  };

  // omega(x) for every x in X by direct pairwise counting; argmax over eligible vertices.
  Central evaluate_central(std::size_t idx) {
    Central ce;
    ce.omega.assign(c_.n(), Rational(0));
    const std::size_t nx = st_.X.size(), ny = st_.Y.size();
    BigInt walks = 0;
    st_.X.for_each([&](Vertex x) {
      VertexSet rx = c_.red(x) & st_.Y;
      std::size_t sum = 0;
      st_.X.for_each([&](Vertex y) { sum += VertexSet::intersect_count(rx, c_.red(y)); });
      walks += sum;
      ce.omega[x] = (Rational(sum - rx.size()) - st_.p * (nx - 1) * rx.size()) / ny;
    });
    const Rational e = st_.p * nx * ny;
    Rational total = (Rational(walks) - st_.p * nx * e) / ny;
    acc("3").slack(total, idx, "sum of pair weights over X x X is negative");
    st_.X.for_each([&](Vertex x) {
      if (prm_.mu * nx < VertexSet::intersect_count(c_.blue(x), st_.X)) return;
      if (!ce.any || ce.omega[x] > ce.omega[ce.best]) ce.best = x, ce.any = true;
    });
    return ce;
  }

  void replay_step(const StepRecord& rec, std::size_t idx) {
    expect_null(rec, idx);
    VertexSet Xprev = st_.X, Yprev = st_.Y;
    Rational pprev = st_.p;
    VertexSet W = high_blue_degree(c_, st_.X, prm_.mu);
    bool big = W.size() >= prm_.w_min;
    if (big != (rec.kind == StepKind::BigBlue)) {
      acc("5").violate(idx, big ? "big blue step should have fired" : "big blue step fired below w_min");
      throw Halt{};
    }
    if (big) {
      VertexSet S = VertexSet::of(c_.n(), rec.spine_vertices);
      if (S.size() != rec.spine_vertices.size() || !S.is_subset_of(st_.X) || S.empty() ||
          !is_clique(c_, Colour::Blue, S)) {
        acc("2").violate(idx, "recorded spine is not a blue clique inside X");
        throw Halt{};
      }
      VertexSet T = st_.X;
      S.for_each([&](Vertex s) { T &= c_.blue(s); });
      if (!rec.spine || *rec.spine != S.size()) acc("1").violate(idx, "spine size differs from spine_vertices");
      if (!rec.pages || *rec.pages != T.size()) acc("1").violate(idx, "pages differ from the common blue neighbourhood");
      if (Rational(T.size()) * 2 < pow(prm_.mu, static_cast<unsigned>(S.size())) * st_.X.size() || T.empty())
        acc("2").violate(idx, "book has fewer than mu^|S| |X| / 2 pages");
      Book b = best_blue_book(c_, st_.X, prm_.mu, prm_.spine_budget);
      if (!(b.spine == S)) acc("1").violate(idx, "spine differs from the deterministic book search");
      if (T.empty()) {
        acc("9").violate(idx, "big blue step left X empty");
        throw Halt{};
      }
      st_.X = T;
      st_.B |= S;
      st_.p = red_density(c_, st_.X, st_.Y);
      spines_ += S.size();
      ++big_blue_;
    } else {
      Central ce = evaluate_central(idx);
      if (!ce.any) {
        acc("9").violate(idx, "step recorded although no vertex is eligible");
        throw Halt{};
      }
      if (!rec.central_vertex || !st_.X.contains(*rec.central_vertex)) {
        acc("weight_bound").violate(idx, "central vertex missing or outside X");
        throw Halt{};
      }
      const Vertex x = *rec.central_vertex;
      const std::size_t nx = st_.X.size(), ny = st_.Y.size();
      if (x != ce.best) acc("weight_bound").violate(idx, "central vertex is not the lowest-index maximizer of omega");
      weights.push_back({idx, x, ce.omega[x], ce.omega[x] + Rational(nx) / pow(Rational(prm_.k), 5),
                         x == ce.best});
      VertexSet nbx = c_.blue(x) & st_.X, nrx = c_.red(x) & st_.X, nry = c_.red(x) & st_.Y;
      const Rational beta = ratio(nbx.size(), nx);
      if (!rec.beta || *rec.beta != beta) acc("beta_floor").violate(idx, "recorded beta differs from |N_B(x) cap X|/|X|");
      acc("beta_floor").slack(prm_.mu - beta, idx, "beta exceeds mu");
      const unsigned h = lad_->height(st_.p);
      const Rational a = lad_->alpha(h);
      if (!rec.alpha || *rec.alpha != a) acc("8").violate(idx, "recorded alpha differs from alpha_{h(p)}");
      bool red = false;
      if (!nrx.empty() && !nry.empty()) red = red_density(c_, nrx, nry) >= st_.p - a;
      if (rec.kind == StepKind::Red && !red) {
        acc("5").violate(idx, "red step recorded but the Step-4 density test fails");
        throw Halt{};
      }
      if (rec.kind == StepKind::DensityBoost && red) {
        acc("6").violate(idx, "density boost recorded but the Step-4 test passes");
        throw Halt{};
      }
      if (rec.kind == StepKind::Red) {
        if (nrx.empty() || nry.empty()) {
          acc("5").violate(idx, "red step would empty X or Y");
          throw Halt{};
        }
        st_.X = nrx;
        st_.Y = nry;
        st_.A.insert(x);
        st_.p = red_density(c_, st_.X, st_.Y);
        acc("5").slack(st_.p - (pprev - a), idx, "red step dropped p by more than alpha");
      } else {
        if (nbx.empty() || nry.empty()) {
          acc("6").violate(idx, "density boost would empty X or Y");
          throw Halt{};
        }
        st_.X = nbx;
        st_.Y = nry;
        st_.B.insert(x);
        st_.p = red_density(c_, st_.X, st_.Y);
        Rational rhs = pprev + (1 - beta) / beta * a - a / (beta * nx) +
                       ce.omega[x] * ny / (beta * nx * nry.size());
        acc("6").slack(st_.p - rhs, idx, "density boost below the exact dichotomy bound");
        boosts_.push_back({idx, beta});
      }
    }
    after(rec, idx, Xprev, Yprev, pprev);
  }

  void alpha_bounds(const Rational& p, std::size_t idx) {
    const Rational& eps = prm_.epsilon;
    const unsigned h = lad_->height(p);
    const Rational a = lad_->alpha(h);
    const Rational lo = eps / prm_.k;
    if (p <= lad_->q(1) && a != lo) acc("8").violate(idx, "alpha_{h(p)} != eps/k although p <= q_1");
    if (p >= lad_->q(0)) {
      Rational s = std::min(Rational(a - lo), Rational(eps * (p - lad_->q(0) + Rational(1, prm_.k)) - a));
      acc("8").slack(s, idx, "alpha_{h(p)} outside [eps/k, eps(p - q_0 + 1/k)]");
    }
  }

  // p(h) clamped to the h-th rung of the ladder
  Rational clamp_rung(const Rational& p, unsigned h) {
    const Rational& hi = lad_->q(h);
    if (h == 1) return std::min(p, hi);
    const Rational& lo = lad_->q(h - 1);
    return std::max(lo, std::min(p, hi));
  }

  void after(const StepRecord& rec, std::size_t idx, const VertexSet& Xprev, const VertexSet& Yprev,
             const Rational& pprev) {
    auto& a1 = acc("1");
    if (!st_.X.is_subset_of(Xprev) || !st_.Y.is_subset_of(Yprev)) a1.violate(idx, "X_i or Y_i not contained in predecessor");
    bool y_may_change = rec.kind == StepKind::Red || rec.kind == StepKind::DensityBoost;
    if (!y_may_change && !(st_.Y == Yprev)) a1.violate(idx, "Y changed outside Red/DensityBoost");
    if (rec.x_size != st_.X.size() || rec.y_size != st_.Y.size()) a1.violate(idx, "recorded |X_i|, |Y_i| differ from replay");

    auto& a2 = acc("2");
    if (rec.p != st_.p) a2.violate(idx, "p matches recomputed density: mismatch");
    state_properties(idx);

    const unsigned h = lad_->height(st_.p);
    if (rec.h != h) acc("8").violate(idx, "recorded h differs from h(p_i)");
    alpha_bounds(st_.p, idx);

    // zigzag: Delta_i = sum_h Delta_i(h)
    const unsigned top = std::max(h, h_.back()) + 1;
    Rational sum = 0;
    for (unsigned r = 1; r <= top; ++r) sum += clamp_rung(st_.p, r) - clamp_rung(pprev, r);
    Rational diff = sum - (st_.p - pprev);
    acc("7").slack(diff == 0 ? Rational(0) : Rational(-1), idx, "Delta_i differs from the sum of Delta_i(h)");

    p_.push_back(st_.p);
    h_.push_back(h);
  }

  void state_properties(std::size_t idx) {
    auto& a2 = acc("2");
    const auto& s = st_;
    if (!s.X.disjoint(s.Y) || !s.X.disjoint(s.A) || !s.X.disjoint(s.B) || !s.Y.disjoint(s.A) ||
        !s.Y.disjoint(s.B) || !s.A.disjoint(s.B))
      a2.violate(idx, "X, Y, A, B not pairwise disjoint");
    VertexSet XY = s.X | s.Y;
    s.A.for_each([&](Vertex a) {
      VertexSet others = s.A;
      others.erase(a);
      if (!(XY | others).is_subset_of(c_.red(a))) a2.violate(idx, "property (a): an edge at A is blue");
    });
    s.B.for_each([&](Vertex b) {
      VertexSet others = s.B;
      others.erase(b);
      if (!(s.X | others).is_subset_of(c_.blue(b))) a2.violate(idx, "property (b): an edge at B is red");
    });
  }

  void final_checks() {
    const std::size_t idx = tr_.steps.size() + 1;
    auto& a9 = acc("9");
    std::string expected;
    if (const char* r = halting(st_)) {
      expected = r;
    } else if (!kinds_.empty() && kinds_.back() == StepKind::DegreeRegularise) {
      VertexSet W = high_blue_degree(c_, st_.X, prm_.mu);
      if (W.size() < prm_.w_min) {
        Central ce = evaluate_central(idx);
        if (!ce.any) {
          expected = halt::NoCentral;
        } else {
          const Vertex x = ce.best;
          VertexSet nbx = c_.blue(x) & st_.X, nrx = c_.red(x) & st_.X, nry = c_.red(x) & st_.Y;
          const Rational a = lad_->alpha(lad_->height(st_.p));
          bool red = !nrx.empty() && !nry.empty() && red_density(c_, nrx, nry) >= st_.p - a;
          if (!red && (nbx.empty() || nry.empty())) expected = halt::XExhausted;
        }
      }
    }
    if (expected.empty()) a9.violate(idx, "trace stops although no halting condition holds");
    if (tr_.summary.halting_reason != expected || !halt::is_known(tr_.summary.halting_reason))
      a9.violate(idx, "halting reason differs from replay (expected '" + expected + "')");
    if (!tr_.steps.empty()) {
      const auto& last = tr_.steps.back();
      if (!last.halted || last.halting_reason != tr_.summary.halting_reason)
        a9.violate(idx - 1, "last step does not carry the halting flag and reason");
    }

    std::size_t t = 0, s = 0, d = 0, bb = 0;
    for (auto k : kinds_) {
      t += k == StepKind::Red;
      s += k == StepKind::DensityBoost;
      d += k == StepKind::DegreeRegularise;
      bb += k == StepKind::BigBlue;
    }
    const auto& sm = tr_.summary;
    if (sm.t != t || st_.A.size() != t) a9.violate(idx, "t differs from the number of red steps / |A|");
    if (sm.s != s) a9.violate(idx, "s differs from the number of density-boost steps");
    if (sm.big_blue_count != bb) a9.violate(idx, "big_blue_count differs");
    if (st_.B.size() != s + spines_) a9.violate(idx, "|B| != s + sum of spine sizes");
    if (d > t + bb + s + 1) a9.violate(idx, "|D| > |R| + |B| + |S| + 1");
    if (sm.final_A != st_.A.to_vector()) a9.violate(idx, "final_A differs from replay");
    if (sm.final_Y_size != st_.Y.size()) a9.violate(idx, "final_Y_size differs from replay");

    // S*: boosts with h(p_i) - h(p_{i-1}) <= eps^(-1/4)
    Rational inv = 0, zig = 0;
    std::size_t nstar = 0;
    for (const auto& [i, beta] : boosts_) {
      long jump = static_cast<long>(h_[i]) - static_cast<long>(h_[i - 1]);
      if (!height_jump_moderate(jump, prm_.epsilon)) continue;
      ++nstar;
      inv += 1 / beta;
      zig += (1 - beta) / beta;
    }
    beta_ = nstar == 0 ? prm_.mu : Rational(nstar) / inv;
    zigzag_ = zig;
    if (sm.beta_harmonic != beta_) a9.violate(idx, "beta_harmonic differs from replay");
    t_ = t;
    s_ = s;
    done_ = true;
  }

  void diagnostics(CheckReport& rep) {
    if (!done_) return;
    const Rational& eps = prm_.epsilon;
    const Rational p0 = p_.front();
    Rational minp = *std::min_element(p_.begin(), p_.end());
    rep.diagnostics.emplace_back("bounding_p", minp - (p0 - 3 * eps));
    const std::size_t x0 = tr_.x0.size(), y0 = tr_.y0.size();
    Rational ydenom = pow(p0, static_cast<unsigned>(s_ + t_)) * y0;
    if (ydenom > 0) rep.diagnostics.emplace_back("ybound", Rational(st_.Y.size()) / ydenom);
    const Rational& mu = prm_.mu;
    Rational xdenom = pow(mu, prm_.ell) * pow(1 - mu, static_cast<unsigned>(t_)) *
                      pow(beta_ / mu, static_cast<unsigned>(s_)) * x0;
    rep.diagnostics.emplace_back("xbound", Rational(st_.X.size()) / xdenom);
    rep.diagnostics.emplace_back("zigzag", Rational(t_) - zigzag_);
    if (beta_ < 1) rep.diagnostics.emplace_back("s_bound", beta_ / (1 - beta_) * t_ - s_);
    rep.diagnostics.emplace_back("beta_bound", s_ + t_ == 0 ? Rational(0) : beta_ - ratio(s_, s_ + t_));
    if (!weights.empty()) {
      Rational m = weights.front().margin;
      for (const auto& w : weights) m = std::min(m, w.margin);
      rep.diagnostics.emplace_back("weight_bound", m);
    }
    if (!boosts_.empty()) {
      Rational m = boosts_.front().second;
      for (const auto& b : boosts_) m = std::min(m, b.second);
      rep.diagnostics.emplace_back("beta_floor", m - Rational(1, BigInt(prm_.k) * prm_.k));
    }
  }

  const Colouring& c_;
  const Trace& tr_;
  const BookParams& prm_;
  std::map<std::string, Acc> accs_;
  BookState st_;
  std::optional<Ladder> lad_;
  std::vector<Rational> p_;
  std::vector<unsigned> h_;
  std::vector<StepKind> kinds_;
  std::vector<std::pair<std::size_t, Rational>> boosts_;
  std::size_t spines_ = 0, big_blue_ = 0, t_ = 0, s_ = 0;
  Rational beta_, zigzag_;
  bool done_ = false;
};

}  // namespace

CheckReport check_trace(const Colouring& c, const Trace& tr) {
  Replayer r(c, tr);
  r.run();
  return r.report();
}

std::vector<WeightMargin> check_weight_bound(const Colouring& c, const Trace& tr) {
  Replayer r(c, tr);
  r.run();
  return r.weights;
}

std::vector<BetaFloor> check_beta_floor(const Trace& tr) {
  std::vector<BetaFloor> out;
  const Rational floor(1, BigInt(tr.params.k) * tr.params.k);
  for (const auto& s : tr.steps)
    if (s.kind == StepKind::DensityBoost && s.beta)
      out.push_back({s.index, *s.beta, *s.beta - floor, *s.beta <= tr.params.mu});
  return out;
}

std::string report_to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const auto& [id, c] : r.checks) {
    nlohmann::ordered_json e;
    e["status"] = c.status;
    e["worst_slack"] = c.worst_slack ? nlohmann::ordered_json(to_string(*c.worst_slack)) : nullptr;
    e["first_violation"] = c.first_violation ? nlohmann::ordered_json(*c.first_violation) : nullptr;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks[id] = e;
  }
  j["checks"] = checks;
  nlohmann::ordered_json diags = nlohmann::ordered_json::object();
  for (const auto& [id, v] : r.diagnostics) diags[id] = to_string(v);
  j["diagnostics"] = diags;
  return j.dump(1) + "\n";
}

}  // namespace rbl
