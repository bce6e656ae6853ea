// rbl: command-line front end for the book algorithm laboratory.
#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rbl/book_algorithm.hpp"
#include "rbl/bounds.hpp"
#include "rbl/cliques.hpp"
#include "rbl/colouring.hpp"
#include "rbl/errors.hpp"
#include "rbl/invariants.hpp"
#include "rbl/parallel.hpp"
#include "rbl/ramsey_tables.hpp"

namespace {

using namespace rbl;

// Exit codes
constexpr int kOk = 0, kUsage = 1, kCheckFailed = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_file_atomic(out, text);
}

struct Opts {
  unsigned jobs = 0;
  // gen
  std::size_t n = 0;
  std::string red_prob = "1/2";
  std::uint64_t seed = 0, paley = 0;
  // run-book
  std::string in, out;
  unsigned k = 0, ell = 0;
  std::string mu, epsilon, p_floor;
  std::size_t x_min = 0, w_min = 0, spine_budget = 0;
  // check-trace
  std::string colouring, trace;
  // verify-bounds
  std::string appendix = "A";
  double tol = 1e-3;
  // tables
  std::string k_range, ell_rule = "equal";
  // clique
  std::string colour = "red";
  std::size_t cap = 0;
};

int cmd_gen(const Opts& o) {
  Colouring c;
  if (o.paley) {
    c = paley_colouring(o.paley);
  } else {
    if (o.n == 0) throw InvalidInput("gen: --n must be positive (or give --paley)");
    c = random_colouring(o.n, parse_rational(o.red_prob), o.seed);
  }
  emit(o.out, to_rbc1(c));
  return kOk;
}

int cmd_run_book(CLI::App* sub, const Opts& o) {
  Colouring c = from_rbc1(read_file(o.in));
  BookParams prm = BookParams::defaults(o.k, o.ell);
  if (sub->count("--mu")) prm.mu = parse_rational(o.mu);
  if (sub->count("--epsilon")) prm.epsilon = parse_rational(o.epsilon);
  if (sub->count("--p-floor")) prm.p_floor = parse_rational(o.p_floor);
  if (sub->count("--x-min")) prm.x_min = o.x_min;
  if (sub->count("--w-min")) prm.w_min = o.w_min;
  if (sub->count("--spine-budget")) prm.spine_budget = o.spine_budget;
  prm.validate();
  const std::size_t n = c.n();
  Trace tr = run(c, VertexSet::range(n, 0, n / 2), VertexSet::range(n, n / 2, n), prm);
  emit(o.out, trace_to_json(tr));
  if (!o.out.empty() && o.out != "-")
    std::cerr << "steps " << tr.steps.size() << ", halted: " << tr.summary.halting_reason
              << ", |A| = " << tr.summary.final_A.size() << ", |Y| = " << tr.summary.final_Y_size << '\n';
  return kOk;
}

int cmd_check_trace(const Opts& o) {
  Colouring c = from_rbc1(read_file(o.colouring));
  Trace tr = trace_from_json(read_file(o.trace));
  CheckReport rep;
  try {
    rep = check_trace(c, tr);
  } catch (const ProvenanceError& e) {
    std::cerr << "provenance: " << e.what() << '\n';
    return kCheckFailed;
  }
  emit(o.out, report_to_json(rep));
  bool ok = rep.exact_checks_pass();
  if (!ok) {
    std::cerr << "failed checks:";
    for (const auto& id : rep.failed()) std::cerr << ' ' << id;
    std::cerr << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_verify_bounds(const Opts& o, unsigned jobs) {
  if (o.appendix == "D") {
    auto rep = bounds::verify_binomial_facts(bounds::BinomialSweep{}, jobs);
    emit(o.out, bounds::binomial_csv(rep));
    return rep.pass() ? kOk : kCheckFailed;
  }
  if (o.appendix.size() != 1) throw InvalidInput("--appendix must be one of A, B, C, D");
  auto rep = bounds::verify_appendix_claims(o.appendix[0], o.tol, jobs);
  emit(o.out, bounds::appendix_csv(rep));
  return rep.pass() ? kOk : kCheckFailed;
}

int cmd_tables(const Opts& o) {
  auto colon = o.k_range.find(':');
  if (colon == std::string::npos) throw InvalidInput("--k-range must look like a:b");
  unsigned lo = 0, hi = 0;
  try {
    std::size_t p1 = 0, p2 = 0;
    std::string a = o.k_range.substr(0, colon), b = o.k_range.substr(colon + 1);
    lo = static_cast<unsigned>(std::stoul(a, &p1));
    hi = static_cast<unsigned>(std::stoul(b, &p2));
    if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InvalidInput("--k-range must look like a:b with integers a <= b");
  }
  emit(o.out, tables_csv(lo, hi, o.ell_rule));
  return kOk;
}

int cmd_clique(const Opts& o) {
  Colouring c = from_rbc1(read_file(o.in));
  Colour col = parse_colour(o.colour);
  std::size_t cap = o.cap == 0 ? c.n() : o.cap;
  VertexSet q = max_clique(c, col, VertexSet::full(c.n()), cap);
  std::ostringstream os;
  os << "colour " << colour_name(col) << "\nsize " << q.size() << "\nvertices";
  q.for_each([&](Vertex v) { os << ' ' << v; });
  os << '\n';
  emit(o.out, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Book algorithm laboratory"};
  app.require_subcommand(1);
  Opts o;
  app.add_option("--jobs", o.jobs, "worker threads (0 = all cores; RBL_JOBS overrides)");

  auto* gen = app.add_subcommand("gen", "generate a random or Paley colouring (RBC1)");
  gen->add_option("--n", o.n, "number of vertices");
  gen->add_option("--red-prob", o.red_prob, "red edge probability (decimal or a/b)");
  gen->add_option("--seed", o.seed, "RNG seed");
  gen->add_option("--paley", o.paley, "Paley colouring on q vertices instead (q prime, 1 mod 4)");
  gen->add_option("--out", o.out, "output file")->required();

  auto* rb = app.add_subcommand("run-book", "run the book algorithm and write a JSON trace");
  rb->add_option("--in", o.in, "colouring (RBC1)")->required();
  rb->add_option("--k", o.k, "red clique target")->required();
  rb->add_option("--ell", o.ell, "blue clique target")->required();
  rb->add_option("--mu", o.mu, "big-blue threshold mu");
  rb->add_option("--epsilon", o.epsilon, "epsilon");
  rb->add_option("--x-min", o.x_min, "halt when |X| <= x_min");
  rb->add_option("--w-min", o.w_min, "minimum book size for a big-blue step");
  rb->add_option("--p-floor", o.p_floor, "halt when p <= p_floor");
  rb->add_option("--spine-budget", o.spine_budget, "largest spine searched exhaustively");
  rb->add_option("--out", o.out, "trace file")->required();

  auto* ct = app.add_subcommand("check-trace", "replay a trace and run every check");
  ct->add_option("--colouring", o.colouring, "colouring (RBC1)")->required();
  ct->add_option("--trace", o.trace, "trace JSON")->required();
  ct->add_option("--out", o.out, "report JSON (default stdout)");

  auto* vb = app.add_subcommand("verify-bounds", "certify the appendix claims (A, B, C) or binomial facts (D)");
  vb->add_option("--appendix", o.appendix, "A, B, C or D")->check(CLI::IsMember({"A", "B", "C", "D"}));
  vb->add_option("--tol", o.tol, "tolerance against the stated constants")->check(CLI::PositiveNumber);
  vb->add_option("--out", o.out, "CSV file (default stdout)");

  auto* tb = app.add_subcommand("tables", "bound table over a range of k");
  tb->add_option("--k-range", o.k_range, "a:b")->required();
  tb->add_option("--ell-rule", o.ell_rule, "equal, quarter or ninetenths")
      ->check(CLI::IsMember({"equal", "quarter", "ninetenths"}));
  tb->add_option("--out", o.out, "CSV file (default stdout)");

  auto* cq = app.add_subcommand("clique", "maximum monochromatic clique");
  cq->add_option("--in", o.in, "colouring (RBC1)")->required();
  cq->add_option("--colour", o.colour, "red or blue")->check(CLI::IsMember({"red", "blue"}));
  cq->add_option("--cap", o.cap, "stop once a clique of this size is found (0 = none)");
  cq->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    const unsigned jobs = resolve_jobs(o.jobs);
    if (*gen) return cmd_gen(o);
    if (*rb) return cmd_run_book(rb, o);
    if (*ct) return cmd_check_trace(o);
    if (*vb) return cmd_verify_bounds(o, jobs);
    if (*tb) return cmd_tables(o);
    if (*cq) return cmd_clique(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
