#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nrange/fov.hpp"
#include "nrange/io.hpp"
#include "nrange/oracles.hpp"
#include "nrange/projrange.hpp"
#include "nrange/rankk.hpp"
#include "nrange/rectrange.hpp"
#include "nrange/verify.hpp"

namespace py = pybind11;
using namespace nrange;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
    if (a.ndim() == 1) {
        return ComplexMatrix(a.shape(0), 1, std::vector<cplx>(a.data(), a.data() + a.size()));
    }
    if (a.ndim() != 2) throw InputError("expected a 1-d or 2-d array, got " + std::to_string(a.ndim()) + " dimensions");
    return ComplexMatrix(a.shape(0), a.shape(1), std::vector<cplx>(a.data(), a.data() + a.size()));
}

CArray to_array(const ComplexMatrix& m) {
    CArray out({m.rows(), m.cols()});
    std::copy(m.data().begin(), m.data().end(), out.mutable_data());
    return out;
}

py::dict curve_dict(const BoundaryCurve& c) {
    py::dict d;
    d["angles"] = py::array_t<double>(c.angles.size(), c.angles.data());
    d["support"] = py::array_t<double>(c.support.size(), c.support.data());
    d["points"] = py::array_t<cplx>(c.points.size(), c.points.data());
    return d;
}

}  // namespace

PYBIND11_MODULE(_nrange, m) {
    m.doc() = "Numerical ranges of rectangular matrices.";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<OutOfRangeError>(m, "OutOfRangeError", PyExc_ValueError);
    py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<io::IoError>(m, "IoError", PyExc_OSError);

    py::class_<Region>(m, "Region")
        .def_property_readonly("kind", [](const Region& r) { return std::string(to_string(r.kind())); })
        .def_property_readonly("outer_radius", &Region::outer_radius)
        .def("contains", [](const Region& r, cplx z, double tol) { return region_contains(r, z, tol); },
             py::arg("z"), py::arg("tol") = 1e-12)
        .def("support", [](const Region& r, double theta) { return region_support(r, theta); }, py::arg("theta"))
        .def("to_json",
             [](const Region& r, const std::string& set) {
                 return io::region_to_json({r, {set, std::nullopt, {}, io::kToolVersion}});
             },
             py::arg("set") = "")
        .def_static("from_json", [](const std::string& s) { return io::region_from_json(s).region; })
        .def("__repr__", [](const Region& r) { return "<Region " + std::string(to_string(r.kind())) + ">"; });

    m.def("singular_values", [](const CArray& a) { return singular_values(to_matrix(a)); });

    m.def("w_disc", [](const CArray& a) { return rect::w_disc(to_matrix(a)).region; },
          "w(A) = {y*Ax : |x| = |y| = 1}, the disc of radius sigma_1.");
    m.def("wnorm_disc", [](const CArray& a, const CArray& b) { return rect::wnorm_disc(to_matrix(a), to_matrix(b)); },
          py::arg("a"), py::arg("b"));
    m.def("boundary_witness",
          [](const CArray& a, double theta) {
              const auto w = rect::boundary_witness(to_matrix(a), theta);
              return py::make_tuple(w.x, w.y, w.value);
          },
          py::arg("a"), py::arg("theta"), "Unit (x, y, y*Ax) with y*Ax = sigma_1 e^{i theta}.");

    m.def("fov_boundary", [](const CArray& a, std::size_t n) { return curve_dict(fov::fov_boundary(to_matrix(a), n)); },
          py::arg("a"), py::arg("n_angles") = kDefaultAngles);
    m.def("fov_region", [](const CArray& a, std::size_t n) { return fov::fov_region(to_matrix(a), n); },
          py::arg("a"), py::arg("n_angles") = kDefaultAngles);

    m.def("w_lower",
          [](const CArray& a, const CArray& h, std::size_t n) {
              return curve_dict(proj::w_lower(proj::ProjectorSetting(to_matrix(a), to_matrix(h)), n));
          },
          py::arg("a"), py::arg("h"), py::arg("n_angles") = kDefaultAngles);
    m.def("w_higher",
          [](const CArray& a, const CArray& h, std::size_t n) {
              return curve_dict(proj::w_higher(proj::ProjectorSetting(to_matrix(a), to_matrix(h)), n));
          },
          py::arg("a"), py::arg("h"), py::arg("n_angles") = kDefaultAngles);
    m.def("vector_ellipse", [](const CArray& a) { return proj::vector_ellipse(to_matrix(a).data()); });

    m.def("rank_k_regime", [](std::size_t m_, std::size_t n, std::size_t k) {
        return std::string(rankk::to_string(rankk::classify(m_, n, k)));
    });
    m.def("phi_k_region", [](const CArray& a, std::size_t k) { return rankk::phi_k_region(to_matrix(a), k).region; },
          py::arg("a"), py::arg("k"));
    m.def("phi_k_contains",
          [](const CArray& a, std::size_t k, cplx z, double tol) { return rankk::phi_k_contains(to_matrix(a), k, z, tol); },
          py::arg("a"), py::arg("k"), py::arg("z"), py::arg("tol") = 1e-12);
    m.def("find_witness",
          [](const CArray& a, std::size_t k, cplx z, std::uint64_t seed, int restarts, double tol) {
              rankk::WitnessOptions opt;
              opt.restarts = restarts;
              opt.tol = tol;
              const auto w = rankk::find_witness(to_matrix(a), k, z, seed, opt);
              py::dict d;
              d["success"] = w.success;
              d["m"] = to_array(w.best.m.matrix());
              d["n"] = to_array(w.best.n.matrix());
              d["residual"] = w.best.residual;
              d["restarts_used"] = w.best.restarts_used;
              return d;
          },
          py::arg("a"), py::arg("k"), py::arg("z"), py::arg("seed") = 1, py::arg("restarts") = 20, py::arg("tol") = 1e-8);

    m.def("mc_rect_sup",
          [](const CArray& a, std::size_t n, std::uint64_t seed) { return oracles::mc_rect_sup(to_matrix(a), n, seed).sup_abs; },
          py::arg("a"), py::arg("n_samples"), py::arg("seed") = 1);
    m.def("power_sigma_max",
          [](const CArray& a, std::size_t n, std::uint64_t seed) { return oracles::power_sigma_max(to_matrix(a), n, seed); },
          py::arg("a"), py::arg("n_iters") = 5000, py::arg("seed") = 1);

    m.def("verify",
          [](const std::string& suite, std::uint64_t seed, double tol) {
              if (!verify::is_suite(suite)) throw InputError("unknown suite '" + suite + "'");
              py::list out;
              for (const auto& r : verify::run(suite, {seed, tol})) {
                  py::dict d;
                  d["suite"] = r.suite;
                  d["name"] = r.name;
                  d["passed"] = r.passed;
                  d["worst"] = r.worst;
                  d["detail"] = r.detail;
                  out.append(d);
              }
              return out;
          },
          py::arg("suite") = "all", py::arg("seed") = 1, py::arg("tol") = 1e-8);
}
