#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tv4q/homology.hpp"
#include "tv4q/tv4.hpp"
#include "tv4q/tvr.hpp"
#include "tv4q/triangulation.hpp"

namespace py = pybind11;
using namespace tv4q;

namespace {

py::dict dyadic_dict(const DyadicSqrt2& v) {
    py::dict d;
    d["a"] = v.a().str();
    d["b"] = v.b().str();
    d["k"] = v.k();
    d["decimal"] = v.to_double();
    d["text"] = v.to_string();
    return d;
}

py::dict report_dict(const TVReport& r) {
    py::dict d;
    d["q"] = r.q;
    d["z"] = r.z_negative ? "-sqrt2" : "+sqrt2";
    d["n"] = r.n;
    d["v"] = r.v;
    d["e"] = r.e;
    d["beta1_z2"] = r.beta1;
    d["classes"] = r.class_count;
    d["raw"] = dyadic_dict(r.raw);
    d["normalized"] = dyadic_dict(r.normalized);
    py::dict triple;
    triple["trivial"] = dyadic_dict(r.triple[0]);
    triple["nontrivial_chi_even"] = dyadic_dict(r.triple[1]);
    triple["chi_odd"] = dyadic_dict(r.triple[2]);
    d["triple"] = triple;
    py::dict poly, bp, bm;
    for (const auto& [m, c] : r.poly.coefficients()) poly[py::int_(m)] = c.str();
    for (const auto& [m, c] : r.b_plus) bp[py::int_(m)] = c.str();
    for (const auto& [m, c] : r.b_minus) bm[py::int_(m)] = c.str();
    d["poly"] = poly;
    d["b_plus"] = bp;
    d["b_minus"] = bm;
    d["multi_vertex_warning"] = r.multi_vertex_warning;
    return d;
}

}  // namespace

PYBIND11_MODULE(_tv4q, m) {
    m.doc() = "Exact Turaev-Viro TV_{4,q} invariants of closed 3-manifold triangulations";

    py::class_<Triangulation>(m, "Triangulation")
        .def(py::init(&parse_triangulation), py::arg("tri_text"))
        .def_property_readonly("tet_count", &Triangulation::tet_count)
        .def_property_readonly("vertex_count", &Triangulation::vertex_count)
        .def_property_readonly("edge_count", &Triangulation::edge_count)
        .def_property_readonly("triangle_count", &Triangulation::triangle_count)
        .def("to_tri", [](const Triangulation& t) { return to_tri(t); })
        .def("__repr__", [](const Triangulation& t) {
            std::ostringstream os;
            os << "<Triangulation n=" << t.tet_count() << " v=" << t.vertex_count()
               << " e=" << t.edge_count() << ">";
            return os.str();
        });

    m.def("parse", &parse_triangulation, py::arg("tri_text"),
          "Parse a triangulation from TRI text.");
    m.def("lens_space", &generate_lens_space, py::arg("p"), py::arg("q"),
          "One-vertex triangulation of the lens space L(p,q).");
    m.def("pachner_23", &pachner_23, py::arg("t"), py::arg("triangle_class"),
          "Apply a 2-3 move at the given triangle class.");

    m.def(
        "check_closed",
        [](const Triangulation& t) {
            ClosedCheck c = check_closed_manifold(t);
            py::dict d;
            d["ok"] = c.ok;
            d["reason"] = c.reason;
            d["v"] = c.v;
            d["e"] = c.e;
            d["beta0"] = c.beta0;
            return d;
        },
        py::arg("t"), "Closed-3-manifold check; returns the first violated condition.");

    m.def(
        "homology",
        [](const Triangulation& t) {
            auto [b0, b1] = betti_z2(t);
            IntegralH1 h = integral_h1(t);
            py::dict d;
            d["beta0_z2"] = b0;
            d["beta1_z2"] = b1;
            d["free_rank"] = h.free_rank;
            py::list torsion;
            for (const BigInt& x : h.torsion) torsion.append(py::int_(py::str(x.str())));
            d["torsion"] = torsion;
            return d;
        },
        py::arg("t"), "Z2 Betti numbers and integral H1 (free rank, invariant factors).");

    m.def(
        "tv4",
        [](const Triangulation& t, int q, int jobs) { return report_dict(tv4_compute(t, q, jobs)); },
        py::arg("t"), py::arg("q") = 1, py::arg("jobs") = 1,
        "Exact TV_{4,q} report: raw/normalized values, nu-triple, P_T(z), b+- tables.");

    m.def(
        "tv4_bruteforce",
        [](const Triangulation& t, int q, std::uint64_t budget) {
            BruteResult r = tv4_bruteforce_exact(t, q, budget);
            py::dict d;
            d["raw"] = dyadic_dict(r.raw);
            d["raw_gamma"] = dyadic_dict(r.raw_gamma);
            d["colourings"] = py::int_(py::str(r.colourings.str()));
            return d;
        },
        py::arg("t"), py::arg("q") = 1, py::arg("budget") = kDefaultBudget,
        "Exact brute-force oracle over Adm(T,4).");

    m.def(
        "tv_r",
        [](const Triangulation& t, int r, int q, std::uint64_t budget) {
            std::complex<double> v = tv_r_bruteforce(t, r, q, budget);
            return py::make_tuple(v.real(), v.imag());
        },
        py::arg("t"), py::arg("r"), py::arg("q") = 1, py::arg("budget") = kDefaultBudget,
        "Complex-arithmetic TV_{r,q} state sum (brute force).");
}
