// Python bindings: the string-level command surface plus thin convenience
// wrappers that raise on nonzero exit instead of returning a code.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "coalg/commands.hpp"

namespace py = pybind11;

namespace {

std::string run_or_throw(const std::vector<std::string>& args) {
    const coalg::CommandResult r = coalg::run_cli(args);
    if (r.code != 0)
        throw std::runtime_error(r.output.empty() ? std::string("command failed") : r.output);
    std::string out = r.output;
    while (!out.empty() && out.back() == '\n') out.pop_back();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-arithmetic toolkit for composite combinatorial coalgebras";

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            const coalg::CommandResult r = coalg::run_cli(args);
            return py::make_tuple(r.code, r.output);
        },
        py::arg("args"),
        "Run one command (same verbs and flags as the coalg executable); "
        "returns (exit_code, output).");

    m.def(
        "product",
        [](const std::string& algebra, const std::string& x, const std::string& y) {
            return run_or_throw({"product", algebra, x, y});
        },
        py::arg("algebra"), py::arg("x"), py::arg("y"),
        "Product of two basis elements, rendered as a sorted F-basis expansion.");

    m.def(
        "coproduct",
        [](const std::string& algebra, const std::string& x) {
            return run_or_throw({"coproduct", algebra, x});
        },
        py::arg("algebra"), py::arg("x"),
        "Coproduct of a basis element as a sum of (x)-separated tensors.");

    m.def(
        "antipode",
        [](const std::string& algebra, const std::string& x) {
            return run_or_throw({"antipode", algebra, x});
        },
        py::arg("algebra"), py::arg("x"), "Antipode of a basis element.");

    m.def(
        "primitives",
        [](const std::string& algebra, int n) {
            return run_or_throw({"primitives", algebra, std::to_string(n)});
        },
        py::arg("algebra"), py::arg("n"),
        "Primitive dimension in degree n, followed by generator expansions when known.");

    m.def(
        "dim",
        [](const std::string& algebra, const std::string& range) {
            return run_or_throw({"dim", algebra, range});
        },
        py::arg("algebra"), py::arg("range"),
        "Graded dimensions over a degree or a lo..hi range, space-separated.");

    m.def(
        "verify",
        [](const std::string& algebra, int max_degree, const std::string& axioms) {
            std::vector<std::string> args = {"verify", algebra};
            if (max_degree >= 0) {
                args.push_back("--max-degree");
                args.push_back(std::to_string(max_degree));
            }
            if (!axioms.empty()) {
                args.push_back("--axioms");
                args.push_back(axioms);
            }
            run_or_throw(args);
            return true;
        },
        py::arg("algebra"), py::arg("max_degree") = -1, py::arg("axioms") = std::string(),
        "Machine-check the algebraic identities; returns True or raises with the "
        "failing axiom, degree, and witness.");

    m.def(
        "mobius",
        [](const std::string& t, const std::string& s) {
            const std::string v = run_or_throw({"mobius", t, s});
            return py::module_::import("builtins").attr("int")(v);
        },
        py::arg("t"), py::arg("s"),
        "Mobius function of the rotation order between two tree literals.");

    m.def(
        "convert",
        [](const std::string& literal, const std::string& target) {
            return run_or_throw({"convert", literal, target});
        },
        py::arg("literal"), py::arg("target"),
        "Convert a literal between equivalent index forms.");
}
