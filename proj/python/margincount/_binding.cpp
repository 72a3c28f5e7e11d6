#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "margincount/ehrhart.hpp"
#include "margincount/enumerate.hpp"
#include "margincount/oracle.hpp"
#include "margincount/sample.hpp"

namespace py = pybind11;
using namespace margincount;

namespace {

Mode parse_mode(const std::string& name) {
    if (name == "binary") return Mode::Binary;
    if (name == "natural") return Mode::Natural;
    throw std::invalid_argument("mode must be 'binary' or 'natural'");
}

py::int_ to_py_int(const BigCount& value) {
    // Exact big-integer handoff through the decimal representation.
    PyObject* obj = PyLong_FromString(value.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::object to_py_fraction(const Rational& value) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py_int(BigCount(value.get_num())), to_py_int(BigCount(value.get_den())));
}

}  // namespace

PYBIND11_MODULE(_margincount, m) {
    m.doc() = "Exact counting and uniform sampling of matrices with fixed margins";

    m.def(
        "count",
        [](const std::vector<int>& rows, const std::vector<int>& cols, const std::string& mode) {
            return to_py_int(count(MarginSpec{rows, cols}, parse_mode(mode)).count);
        },
        py::arg("rows"), py::arg("cols"), py::arg("mode") = "binary",
        "Exact number of matrices with the given margins.");

    m.def(
        "sample",
        [](const std::vector<int>& rows, const std::vector<int>& cols, const std::string& mode,
           std::uint64_t seed, int num) {
            SamplerContext ctx = prepare(MarginSpec{rows, cols}, parse_mode(mode));
            RandomSource rng(seed);
            std::vector<Matrix> out;
            out.reserve(num);
            for (int i = 0; i < num; ++i) out.push_back(draw(ctx, rng));
            return out;
        },
        py::arg("rows"), py::arg("cols"), py::arg("mode") = "binary", py::arg("seed") = 0,
        py::arg("num") = 1, "Uniform samples as lists of rows; deterministic per seed.");

    m.def(
        "gale_ryser_feasible",
        [](const std::vector<int>& rows, const std::vector<int>& cols) {
            return gale_ryser_feasible(rows, counts_vector(cols));
        },
        py::arg("rows"), py::arg("cols"),
        "Whether a binary matrix with these margins exists.");

    m.def(
        "h_value", [](int n, int r) { return to_py_int(h_value(n, r)); }, py::arg("n"),
        py::arg("r"), "Number of n x n natural matrices with all line sums r.");

    m.def(
        "ehrhart_polynomial",
        [](int n) {
            const RationalPoly poly = birkhoff_polynomial(n);
            std::vector<py::object> coeffs;
            coeffs.reserve(poly.coeffs.size());
            for (const auto& c : poly.coeffs) coeffs.push_back(to_py_fraction(c));
            return coeffs;
        },
        py::arg("n"),
        "Coefficients of the Birkhoff Ehrhart polynomial, ascending degree, as Fractions.");

    py::register_exception<InfeasibleMarginsError>(m, "InfeasibleMarginsError");
}
