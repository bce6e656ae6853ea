// Python bindings for the main operations. Exact rationals cross the boundary as
// "num/den" strings and big integers as Python ints (via decimal strings).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rbl/book_algorithm.hpp"
#include "rbl/bounds.hpp"
#include "rbl/cliques.hpp"
#include "rbl/colouring.hpp"
#include "rbl/errors.hpp"
#include "rbl/invariants.hpp"
#include "rbl/parallel.hpp"
#include "rbl/ramsey_tables.hpp"

namespace py = pybind11;
using namespace rbl;

namespace {

VertexSet to_set(std::size_t n, const std::vector<Vertex>& vs) { return VertexSet::of(n, vs); }

py::object big(const BigInt& z) { return py::module_::import("builtins").attr("int")(z.str()); }

BookParams book_params(unsigned k, unsigned ell, py::object mu, py::object epsilon, py::object x_min,
                       py::object w_min, py::object p_floor, py::object spine_budget) {
  BookParams p = BookParams::defaults(k, ell);
  auto rat = [](py::object o) { return parse_rational(py::str(o)); };
  if (!mu.is_none()) p.mu = rat(mu);
  if (!epsilon.is_none()) p.epsilon = rat(epsilon);
  if (!p_floor.is_none()) p.p_floor = rat(p_floor);
  if (!x_min.is_none()) p.x_min = x_min.cast<std::size_t>();
  if (!w_min.is_none()) p.w_min = w_min.cast<std::size_t>();
  if (!spine_budget.is_none()) p.spine_budget = spine_budget.cast<std::size_t>();
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(rbl_py, m) {
  m.doc() = "Book algorithm laboratory";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<UndefinedDensity>(m, "UndefinedDensity", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<ProvenanceError>(m, "ProvenanceError", PyExc_ValueError);
  py::register_exception<NoBookError>(m, "NoBookError", PyExc_ValueError);

  py::class_<Colouring>(m, "Colouring")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def_property_readonly("n", &Colouring::n)
      .def("is_red", &Colouring::is_red)
      .def("set_red", [](Colouring& c, Vertex u, Vertex v) { c.set(u, v, Colour::Red); })
      .def("set_blue", [](Colouring& c, Vertex u, Vertex v) { c.set(u, v, Colour::Blue); })
      .def("red_neighbours", [](const Colouring& c, Vertex u) { return c.red(u).to_vector(); })
      .def("to_rbc1", &to_rbc1)
      .def_static("from_rbc1", &from_rbc1)
      .def("__eq__", &Colouring::operator==);

  m.def("random_colouring",
        [](std::size_t n, py::object red_prob, std::uint64_t seed) {
          return random_colouring(n, parse_rational(py::str(red_prob)), seed);
        },
        py::arg("n"), py::arg("red_prob") = "1/2", py::arg("seed") = 0);
  m.def("paley_colouring", &paley_colouring, py::arg("q"));
  m.def("load", &load);
  m.def("save", &save);

  m.def("red_density",
        [](const Colouring& c, const std::vector<Vertex>& X, const std::vector<Vertex>& Y) {
          return to_string(red_density(c, to_set(c.n(), X), to_set(c.n(), Y)));
        });

  m.def("max_clique",
        [](const Colouring& c, const std::string& colour, py::object within, std::size_t cap) {
          VertexSet w = within.is_none() ? VertexSet::full(c.n())
                                         : to_set(c.n(), within.cast<std::vector<Vertex>>());
          return max_clique(c, parse_colour(colour), w, cap == 0 ? c.n() : cap).to_vector();
        },
        py::arg("c"), py::arg("colour") = "red", py::arg("within") = py::none(), py::arg("cap") = 0);
  m.def("has_mono_clique", [](const Colouring& c, std::size_t k, std::size_t ell) {
    auto w = has_mono_clique(c, k, ell);
    const char* kind = w.kind == MonoResult::RedClique ? "red" : w.kind == MonoResult::BlueClique ? "blue" : "neither";
    return py::make_tuple(kind, w.clique.to_vector());
  });

  m.def("run_book",
        [](const Colouring& c, unsigned k, unsigned ell, py::object mu, py::object epsilon, py::object x_min,
           py::object w_min, py::object p_floor, py::object spine_budget) {
          auto prm = book_params(k, ell, mu, epsilon, x_min, w_min, p_floor, spine_budget);
          const std::size_t n = c.n();
          Trace tr;
          {
            py::gil_scoped_release nogil;
            tr = run(c, VertexSet::range(n, 0, n / 2), VertexSet::range(n, n / 2, n), prm);
          }
          return trace_to_json(tr);
        },
        py::arg("c"), py::arg("k"), py::arg("ell"), py::arg("mu") = py::none(), py::arg("epsilon") = py::none(),
        py::arg("x_min") = py::none(), py::arg("w_min") = py::none(), py::arg("p_floor") = py::none(),
        py::arg("spine_budget") = py::none(),
        "Run the algorithm from X0 = [0, n/2), Y0 = [n/2, n); returns the trace as JSON.");

  m.def("check_trace",
        [](const Colouring& c, const std::string& trace_json) {
          Trace tr = trace_from_json(trace_json);
          CheckReport rep;
          {
            py::gil_scoped_release nogil;
            rep = check_trace(c, tr);
          }
          return py::make_tuple(rep.exact_checks_pass(), report_to_json(rep));
        },
        "Replay a JSON trace; returns (all exact checks pass, report JSON).");

  m.def("height", [](const std::string& p, const std::string& p0, const std::string& eps, unsigned k) {
    return height(parse_rational(p), parse_rational(p0), parse_rational(eps), k);
  });
  m.def("alpha", [](unsigned h, const std::string& eps, unsigned k) {
    return to_string(alpha(h, parse_rational(eps), k));
  });

  m.def("eval",
        [](const std::string& fn, double x, double y, double mu, double nu, double theta) {
          return bounds::eval({bounds::parse_fn(fn), mu, nu, theta}, x, y);
        },
        py::arg("fn"), py::arg("x"), py::arg("y") = 0.0, py::arg("mu") = 0.4, py::arg("nu") = 0.5,
        py::arg("theta") = 1.0);
  m.def("verify_bounds",
        [](const std::string& appendix, double tol, unsigned jobs) {
          py::gil_scoped_release nogil;
          const unsigned j = resolve_jobs(jobs);
          if (appendix == "D") {
            auto rep = bounds::verify_binomial_facts(bounds::BinomialSweep{}, j);
            return std::make_pair(rep.pass(), bounds::binomial_csv(rep));
          }
          if (appendix.size() != 1) throw InvalidInput("appendix must be one of A, B, C, D");
          auto rep = bounds::verify_appendix_claims(appendix[0], tol, j);
          return std::make_pair(rep.pass(), bounds::appendix_csv(rep));
        },
        py::arg("appendix"), py::arg("tol") = 1e-3, py::arg("jobs") = 0,
        "Returns (pass, CSV text).");

  m.def("es_bound", [](unsigned k, unsigned ell) { return big(es_bound(k, ell)); });
  m.def("tables", &tables_csv, py::arg("k_lo"), py::arg("k_hi"), py::arg("ell_rule") = "equal");
  m.def("es_greedy", [](const Colouring& c, unsigned k, unsigned ell) {
    auto r = es_greedy(c, k, ell);
    return py::make_tuple(es_outcome_name(r.outcome), r.clique.to_vector());
  });
  m.def("known_ramsey", &known_ramsey);
}
