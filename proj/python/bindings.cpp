// Python bindings. Elements cross the boundary as strings in the text syntax
// of their ring ("-3/4", "[1,0,2]"), matrices as lists of rows of strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ringmat/charpoly.hpp"
#include "ringmat/cli.hpp"
#include "ringmat/determinant.hpp"
#include "ringmat/error.hpp"
#include "ringmat/laws.hpp"
#include "ringmat/permutation.hpp"
#include "ringmat/text_format.hpp"

namespace py = pybind11;
using namespace ringmat;

namespace {

using Rows = std::vector<std::vector<std::string>>;

Element read(const Ring& ring, const std::string& text) { return parse_element(ring, text); }
std::string show(const Ring& ring, const Element& x) { return format_element(ring, x); }

Matrix to_matrix(const Ring& ring, const Rows& rows) {
  std::vector<Vector> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) {
    Vector v;
    v.reserve(r.size());
    for (const auto& text : r) v.push_back(read(ring, text));
    parsed.push_back(std::move(v));
  }
  return Matrix(std::move(parsed));
}

Rows to_rows(const Ring& ring, const Matrix& a) {
  Rows rows;
  for (const auto& r : a.row_list()) {
    std::vector<std::string> texts;
    for (const auto& x : r) texts.push_back(show(ring, x));
    rows.push_back(std::move(texts));
  }
  return rows;
}

std::size_t order(const Matrix& a) {
  if (!a.is_square() || a.rows() == 0) throw precondition_error("expected a non-empty square matrix");
  return a.rows();
}

}  // namespace

PYBIND11_MODULE(_ringmat, m) {
  m.doc() = "Exact linear algebra over commutative rings";

  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

  py::class_<Ring>(m, "Ring")
      .def(py::init([](const std::string& descriptor) { return Ring::parse(descriptor); }), py::arg("descriptor"))
      .def_property_readonly("descriptor", &Ring::descriptor)
      .def("zero", [](const Ring& r) { return show(r, r.zero()); })
      .def("one", [](const Ring& r) { return show(r, r.one()); })
      .def("add", [](const Ring& r, const std::string& x, const std::string& y) { return show(r, r.add(read(r, x), read(r, y))); })
      .def("mul", [](const Ring& r, const std::string& x, const std::string& y) { return show(r, r.mul(read(r, x), read(r, y))); })
      .def("neg", [](const Ring& r, const std::string& x) { return show(r, r.neg(read(r, x))); })
      .def("canonical", [](const Ring& r, const std::string& x) { return show(r, read(r, x)); },
           "Parse an element and return its canonical text")
      .def("__repr__", [](const Ring& r) { return "Ring('" + r.descriptor() + "')"; })
      .def("__eq__", [](const Ring& a, const Ring& b) { return a == b; });

  m.def("det", [](const Ring& ring, const Rows& rows, const std::string& algorithm, std::size_t cap) {
        const Matrix a = to_matrix(ring, rows);
        const std::size_t n = order(a);
        if (algorithm == "leibniz") return show(ring, det(ring, a, n, cap));
        if (algorithm == "cofactor") return show(ring, det_rec(ring, a, n));
        throw precondition_error("unknown algorithm '" + algorithm + "'");
      },
      py::arg("ring"), py::arg("rows"), py::arg("algorithm") = "cofactor", py::arg("cap") = kDefaultEnumerationCap);

  m.def("expand_row", [](const Ring& ring, const Rows& rows, std::size_t i) {
        const Matrix a = to_matrix(ring, rows);
        return show(ring, expand_row(ring, a, i, order(a)));
      },
      py::arg("ring"), py::arg("rows"), py::arg("i"));

  m.def("expand_col", [](const Ring& ring, const Rows& rows, std::size_t j) {
        const Matrix a = to_matrix(ring, rows);
        return show(ring, expand_col(ring, a, j, order(a)));
      },
      py::arg("ring"), py::arg("rows"), py::arg("j"));

  m.def("adjoint", [](const Ring& ring, const Rows& rows) {
        const Matrix a = to_matrix(ring, rows);
        return to_rows(ring, adjoint(ring, a, order(a)));
      },
      py::arg("ring"), py::arg("rows"));

  m.def("multiply", [](const Ring& ring, const Rows& a, const Rows& b) {
        return to_rows(ring, multiply(ring, to_matrix(ring, a), to_matrix(ring, b)));
      },
      py::arg("ring"), py::arg("a"), py::arg("b"));

  m.def("charpoly", [](const Ring& ring, const Rows& rows, std::size_t cap) {
        return show(Ring::polynomials(ring), charpoly(ring, to_matrix(ring, rows), cap));
      },
      py::arg("ring"), py::arg("rows"), py::arg("cap") = kDefaultEnumerationCap);

  m.def("check", [](const Ring& ring, const Rows& rows, std::uint64_t seed) {
        LawCheckOptions options;
        options.seed = seed;
        std::vector<std::pair<std::string, bool>> results;
        for (const auto& r : run_law_checks(ring, to_matrix(ring, rows), options).results) results.emplace_back(r.law, r.passed);
        return results;
      },
      py::arg("ring"), py::arg("rows"), py::arg("seed") = kDefaultSeed);

  m.def("parity", [](const std::vector<std::size_t>& p) {
        return parity(Permutation(p)) == Parity::even ? "even" : "odd";
      },
      py::arg("p"));
  m.def("compose", [](const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
        return compose(Permutation(p), Permutation(q)).images();
      },
      py::arg("p"), py::arg("q"));
  m.def("enumerate_permutations", [](std::size_t n) {
        std::vector<std::vector<std::size_t>> all;
        for (const auto& p : enumerate(n)) all.push_back(p.images());
        return all;
      },
      py::arg("n"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        std::vector<std::string> argv{"ringmat"};
        argv.insert(argv.end(), args.begin(), args.end());
        const int status = cli::run(argv, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Run the command line front end in process; returns (status, stdout, stderr)");
}
