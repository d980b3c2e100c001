#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <variant>

#include "origami/belyi.hpp"
#include "origami/cartography.hpp"
#include "origami/csmap.hpp"
#include "origami/document.hpp"
#include "origami/metric.hpp"
#include "origami/tiling.hpp"

namespace py = pybind11;
using namespace origami;

namespace {

CellKind kind_from(const std::string& name) {
    if (name == "vertex") return CellKind::vertex;
    if (name == "edge") return CellKind::edge;
    if (name == "face") return CellKind::face;
    throw InvalidArgument("cell kind must be 'vertex', 'edge' or 'face'");
}

template <class Enum, std::size_t N>
Enum enum_from(const std::string& s, const Enum (&values)[N]) {
    for (Enum e : values) {
        if (s == to_string(e)) return e;
    }
    throw InvalidArgument("unknown value '" + s + "'");
}

template <class Enum>
std::vector<std::string> names(const std::vector<Enum>& values) {
    std::vector<std::string> out;
    for (Enum e : values) out.emplace_back(to_string(e));
    return out;
}

constexpr VertexLabel kLabels[] = {VertexLabel::zero, VertexLabel::one, VertexLabel::infinity};

CsMapSpec spec_from(const std::variant<CsMapSpec, std::string>& s) {
    if (const auto* spec = std::get_if<CsMapSpec>(&s)) return *spec;
    auto named = spec_by_name(std::get<std::string>(s));
    if (!named) throw InvalidArgument("unknown map spec '" + std::get<std::string>(s) + "'");
    return *named;
}

py::object to_fraction(const Rational& r) {
    std::ostringstream os;
    os << r;
    return py::module_::import("fractions").attr("Fraction")(os.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Square-tiled surfaces, tricolored dessins and Schwarz-Christoffel maps";

    static py::exception<Error> error_type(m, "OrigamiError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error_type, (e.code() + ": " + e.what()).c_str());
        }
    });

    py::class_<Dessin>(m, "Dessin")
        .def(py::init<Permutation, Permutation>(), py::arg("rho0"), py::arg("rho1"))
        .def_static("from_faces", &Dessin::from_faces, py::arg("rho1"), py::arg("rho2"))
        .def_property_readonly("n_darts", &Dessin::n_darts)
        .def_property_readonly("rho0", &Dessin::rho0)
        .def_property_readonly("rho1", &Dessin::rho1)
        .def_property_readonly("rho2", &Dessin::rho2)
        .def("__eq__", [](const Dessin& a, const Dessin& b) { return a == b; })
        .def("__repr__", [](const Dessin& d) { return "<Dessin n_darts=" + std::to_string(d.n_darts()) + ">"; });

    m.def("validate", [](const Dessin& d) {
        std::vector<std::tuple<std::string, Dart, std::string>> out;
        for (const auto& v : validate(d)) out.emplace_back(to_string(v.kind), v.dart, v.message);
        return out;
    });
    m.def("cells", [](const Dessin& d, const std::string& kind) { return cells(d, kind_from(kind)); },
          py::arg("dessin"), py::arg("kind"));
    m.def("dart_cell", [](const Dessin& d, Dart dart, int j) { return dart_cell(d, dart, j).id; });
    m.def("cell_counts", [](const Dessin& d) {
        const auto c = cell_counts(d);
        return std::make_tuple(c.vertices, c.edges, c.faces);
    });
    m.def("euler_genus", &euler_genus);
    m.def("canonical_code", &canonical_code);
    m.def("is_isomorphic", &is_isomorphic);

    m.def("origami", &origami::origami, py::arg("right"), py::arg("up"));
    m.def("is_square_tiling", &is_square_tiling);
    m.def("corner_bipartition", [](const Dessin& d) { return names(corner_bipartition(d)); });
    m.def("refine_2x2", &refine_2x2);

    py::class_<TricoloredDessin>(m, "TricoloredDessin")
        .def_readonly("base", &TricoloredDessin::base)
        .def_property_readonly("edge_color", [](const TricoloredDessin& t) { return names(t.edge_color); })
        .def_property_readonly("face_shade", [](const TricoloredDessin& t) { return names(t.face_shade); })
        .def_property_readonly("vertex_label", [](const TricoloredDessin& t) { return names(t.vertex_label); });

    m.def("diagonal_subdivision", [](const Dessin& d, const std::vector<std::string>& labels) {
        std::vector<VertexLabel> parsed;
        for (const auto& s : labels) parsed.push_back(enum_from(s, kLabels));
        return diagonal_subdivision(d, parsed);
    });
    m.def("validate_tricoloring", [](const TricoloredDessin& t) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& v : validate_tricoloring(t)) out.emplace_back(to_string(v.rule), v.message);
        return out;
    });
    m.def("barycentric_subdivide", py::overload_cast<const TricoloredDessin&>(&barycentric_subdivide));
    m.def("barycentric_subdivide", py::overload_cast<const Dessin&>(&barycentric_subdivide));

    py::class_<Passport>(m, "Passport")
        .def(py::init([](std::size_t degree, std::vector<std::size_t> zero, std::vector<std::size_t> one,
                         std::vector<std::size_t> inf) { return Passport{degree, zero, one, inf}; }),
             py::arg("degree"), py::arg("over_zero"), py::arg("over_one"), py::arg("over_infinity"))
        .def_readonly("degree", &Passport::degree)
        .def_readonly("over_zero", &Passport::over_zero)
        .def_readonly("over_one", &Passport::over_one)
        .def_readonly("over_infinity", &Passport::over_infinity)
        .def("__eq__", [](const Passport& a, const Passport& b) { return a == b; })
        .def("__repr__", [](const Passport& p) { return to_string(p); });
    m.def("passport", &passport);
    m.def("riemann_hurwitz_genus", &riemann_hurwitz_genus);

    m.def(
        "barycentric_rational",
        [](std::optional<Complex> x) -> std::optional<Complex> {
            const auto r = barycentric_rational(x ? SpherePoint<Complex>(*x) : SpherePoint<Complex>::infinity());
            if (r.is_infinite()) return std::nullopt;
            return r.value();
        },
        py::arg("x"), "Floating-point evaluation; None stands for the point at infinity.");
    m.def(
        "barycentric_rational_exact",
        [](long long numerator, long long denominator) -> py::object {
            if (denominator == 0) throw InvalidArgument("zero denominator");
            const auto r = barycentric_rational(SpherePoint<Rational>(Rational(numerator, denominator)));
            if (r.is_infinite()) return py::none();
            return to_fraction(r.value());
        },
        py::arg("numerator"), py::arg("denominator") = 1);

    py::class_<CsMapSpec>(m, "CsMapSpec")
        .def(py::init([](double a, double b, Complex prefactor) { return CsMapSpec{a, b, prefactor}; }),
             py::arg("a"), py::arg("b"), py::arg("prefactor") = Complex(1.0))
        .def_static("square_cell", &CsMapSpec::square_cell)
        .def_static("triangle_coord", &CsMapSpec::triangle_coord)
        .def_static("square_coord", &CsMapSpec::square_coord)
        .def_readonly("a", &CsMapSpec::a)
        .def_readonly("b", &CsMapSpec::b)
        .def_readonly("prefactor", &CsMapSpec::prefactor)
        .def_property_readonly("name", [](const CsMapSpec& s) { return std::string(to_string(s.name)); });

    m.def("incomplete_cs_integral", [](double a, double b, Complex t) { return incomplete_cs_integral(a, b, t); });
    m.def("complete_beta", &complete_beta);
    m.def("cs_map", [](const std::variant<CsMapSpec, std::string>& s, Complex t) { return cs_map(spec_from(s), t); },
          py::arg("spec"), py::arg("t"));
    m.def("cs_map_derivative",
          [](const std::variant<CsMapSpec, std::string>& s, Complex t) { return cs_map_derivative(spec_from(s), t); },
          py::arg("spec"), py::arg("t"));
    m.def("image_triangle", [](const std::variant<CsMapSpec, std::string>& s) { return image_triangle(spec_from(s)); });
    m.def("invert_cs_map",
          [](const std::variant<CsMapSpec, std::string>& s, Complex z) { return invert_cs_map(spec_from(s), z); },
          py::arg("spec"), py::arg("z"));
    m.def("triangle_to_square", [](Complex z) { return triangle_to_square(z); }, py::arg("z"));

    m.def("parse_document", [](const std::string& text) -> py::object {
        const auto doc = parse_document(text);
        if (doc.colors) return py::cast(tricolored_from(doc));
        return py::cast(doc.dessin);
    });
    m.def("serialize_document", [](const Dessin& d) { return serialize_document(make_document(d)); });
    m.def("serialize_document", [](const TricoloredDessin& t) { return serialize_document(make_document(t)); });
}
