#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seifertkit/seifertkit.hpp"

namespace py = pybind11;
namespace sk = seifertkit;

namespace {

// Python ints cross the boundary as decimal strings so nothing is truncated.
sk::Integer to_integer(const py::handle &h) {
    return sk::Integer(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>());
}

py::int_ to_py(const sk::Integer &x) { return py::int_(py::module_::import("builtins").attr("int")(x.get_str())); }

sk::IntMatrix to_matrix(const py::sequence &rows) {
    std::vector<std::vector<sk::Integer>> out;
    for (const auto &row : rows) {
        std::vector<sk::Integer> r;
        for (const auto &x : row.cast<py::sequence>())
            r.push_back(to_integer(x));
        out.push_back(std::move(r));
    }
    return sk::IntMatrix::from_rows(out);
}

py::list to_py(const sk::IntMatrix &m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.append(to_py(m(i, j)));
        rows.append(row);
    }
    return rows;
}

py::object from_json(const nlohmann::json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Seifert-matrix invariants, S-equivalence certificates and cosmetic-crossing checks";

    py::register_exception<sk::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<sk::DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<sk::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<sk::InvalidMoveError>(m, "InvalidMoveError", PyExc_ValueError);
    py::register_exception<sk::PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    m.def("det", [](const py::sequence &v) { return to_py(sk::det(to_matrix(v))); });

    m.def("smith_diagonal", [](const py::sequence &v) {
        py::list out;
        for (const auto &d : sk::smith_normal_form(to_matrix(v)).diagonal())
            out.append(to_py(d));
        return out;
    });

    m.def("signature", [](const py::sequence &v) { return sk::signature(to_matrix(v)); });

    m.def(
        "alexander",
        [](const py::sequence &v, bool canonical) {
            sk::LaurentPoly p = sk::alexander(sk::SeifertMatrix(to_matrix(v)));
            if (canonical)
                p = sk::canonicalize(p);
            py::list coeffs;
            for (const auto &c : p.coeffs())
                coeffs.append(to_py(c));
            return py::make_tuple(p.lowdeg(), coeffs);
        },
        py::arg("v"), py::arg("canonical") = true,
        "(lowdeg, coeffs) of det(V - tV^T), canonicalized by default");

    m.def("knot_determinant", [](const py::sequence &v) { return to_py(sk::knot_determinant(sk::SeifertMatrix(to_matrix(v)))); });

    m.def("isotropic_vector", [](const py::sequence &v) -> py::object {
        const auto w = sk::isotropic_vector(to_matrix(v));
        if (!w)
            return py::none();
        return py::make_tuple(to_py(w->x), to_py(w->y));
    });

    m.def("h1_double_cover", [](const py::sequence &v) {
        const auto g = sk::h1_double_cover(sk::SeifertMatrix(to_matrix(v)));
        py::list torsion;
        for (const auto &t : g.torsion)
            torsion.append(to_py(t));
        return py::make_tuple(torsion, g.free_rank);
    });

    m.def("metabolizer_form", [](const py::sequence &v) -> py::object {
        const auto f = sk::metabolizer_form(sk::SeifertMatrix(to_matrix(v)));
        if (!f)
            return py::none();
        py::dict d;
        d["a"] = to_py(f->a);
        d["b"] = to_py(f->b);
        d["basis_change"] = to_py(f->basis_change);
        return d;
    });

    m.def("congruence_classifier", [](const py::int_ &a, const py::int_ &b, const py::int_ &c) -> py::object {
        const auto n = sk::congruence_classifier_2x2(to_integer(a), to_integer(b), to_integer(c));
        return n ? py::object(to_py(*n)) : py::none();
    });

    m.def(
        "brute_force_congruence",
        [](const py::sequence &v, const py::sequence &w, unsigned long bound) -> py::object {
            const auto p = sk::brute_force_congruence(to_matrix(v), to_matrix(w), bound);
            return p ? py::object(to_py(*p)) : py::none();
        },
        py::arg("v"), py::arg("w"), py::arg("bound"));

    m.def("chain_certificate", [](const py::int_ &a, const py::int_ &b) {
        return sk::serialize_certificate(sk::lemma_chain_certificate(to_integer(a), to_integer(b)));
    });

    m.def("sequiv_pair", [](const py::int_ &b) {
        const auto pair = sk::construct_sequiv_pair(to_integer(b));
        return py::make_tuple(to_py(pair.a), to_py(pair.k), sk::serialize_certificate(pair.cert));
    });

    m.def("verify_certificate", [](const std::string &text) {
        const auto r = sk::verify_certificate(sk::parse_certificate(text));
        return py::make_tuple(r.ok, r.failed_step ? py::object(py::int_(*r.failed_step)) : py::none(), r.message);
    });

    m.def(
        "analyze",
        [](const std::string &spec, bool unique_surface) {
            return from_json(sk::to_json(sk::analyze(sk::parse_knot_spec(spec), unique_surface)));
        },
        py::arg("spec"), py::arg("unique_surface") = false);

    m.def("table_screen", [] {
        const auto screen = sk::run_table_screen();
        py::dict d;
        d["survivors"] = screen.survivors;
        py::list reports;
        for (const auto &r : screen.reports)
            reports.append(from_json(sk::to_json(r)));
        d["reports"] = reports;
        return d;
    });
}
