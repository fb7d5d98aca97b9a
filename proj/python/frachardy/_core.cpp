#include "frachardy/asymptotics.hpp"
#include "frachardy/criticality.hpp"
#include "frachardy/errors.hpp"
#include "frachardy/fractional_operator.hpp"
#include "frachardy/hardy_weights.hpp"
#include "frachardy/heat_kernel.hpp"
#include "frachardy/riesz_kernel.hpp"
#include "frachardy/serialization.hpp"
#include "frachardy/special_functions.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace frachardy;

namespace {

LatticePoint point(const std::vector<int>& x) { return LatticePoint(x); }

// JSON crosses the boundary as text; the Python side parses it with json.loads
std::string dump(const Json& j) { return j.dump(); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Riesz kernels, Hardy weights and criticality diagnostics on Z^d";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<PoleError>(m, "PoleError", domain.ptr());
    py::register_exception<QuadratureError>(m, "QuadratureError", base.ptr());
    py::register_exception<CoverageError>(m, "CoverageError", base.ptr());
    py::register_exception<InsufficientDataError>(m, "InsufficientDataError", base.ptr());

    py::enum_<TailPolicy>(m, "TailPolicy")
        .value("ANALYTIC", TailPolicy::AnalyticExpansion)
        .value("POWER_LAW", TailPolicy::PowerLawBound);

    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init<>())
        .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
        .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
        .def_readwrite("max_subdivisions", &QuadratureSpec::max_subdivisions)
        .def_readwrite("tail_policy", &QuadratureSpec::tail_policy)
        .def("validate", &QuadratureSpec::validate)
        .def_static("from_environment", &QuadratureSpec::from_environment);

    m.def("ln_gamma", &ln_gamma);
    m.def("gamma", &frachardy::gamma);
    m.def("digamma", &digamma);
    m.def("bessel_i_scaled", &bessel_i_scaled);

    m.def("heat_kernel", [](double t, const std::vector<int>& x) { return heat_kernel(t, point(x)); });

    m.def(
        "riesz", [](double alpha, const std::vector<int>& x, const QuadratureSpec& q) { return riesz(alpha, point(x), q); },
        py::arg("alpha"), py::arg("x"), py::arg("q") = QuadratureSpec{});
    m.def("riesz_asymptotic_constant", &riesz_asymptotic_constant);
    m.def("total_mass", &total_mass, py::arg("sigma"), py::arg("d"), py::arg("q") = QuadratureSpec{});
    m.def(
        "kernel_table_json",
        [](double alpha, int d, int radius, const QuadratureSpec& q) { return dump(to_json(build_table(alpha, d, radius, q))); },
        py::arg("alpha"), py::arg("d"), py::arg("radius"), py::arg("q") = QuadratureSpec{});

    m.def("alpha0", [](double sigma, int d) { return ModelParams(d, sigma).alpha0(); }, py::arg("sigma"), py::arg("d"));
    m.def("psi", &psi, py::arg("sigma"), py::arg("d"), py::arg("alpha"));
    m.def("psi_log_derivative", &psi_log_derivative, py::arg("sigma"), py::arg("d"), py::arg("alpha"));
    m.def("optimal_constant", &optimal_constant, py::arg("sigma"), py::arg("d"));
    m.def(
        "hardy_weight",
        [](double sigma, double alpha, const std::vector<int>& x, const QuadratureSpec& q) {
            return hardy_weight(HardyParams(static_cast<int>(x.size()), sigma, alpha), point(x), q);
        },
        py::arg("sigma"), py::arg("alpha"), py::arg("x"), py::arg("q") = QuadratureSpec{});
    m.def(
        "hardy_deficits",
        [](double sigma, int d, double alpha, int box, std::uint64_t seed, int samples) {
            const auto t = HardyTables::build(HardyParams(d, sigma, alpha), box);
            std::vector<std::pair<double, double>> out;
            for (int i = 0; i < samples; ++i) {
                const auto phi = LatticeFunction::random_box(d, box, seed + static_cast<std::uint64_t>(i));
                out.emplace_back(hardy_deficit(t, phi), quadratic_form(t.kappa_sigma, phi));
            }
            return out;
        },
        py::arg("sigma"), py::arg("d"), py::arg("alpha"), py::arg("box"), py::arg("seed") = 0, py::arg("samples") = 1,
        "(deficit, Q(phi)) for seeded random functions on the box.");

    m.def("classify", [](double sigma, int d, double alpha) { return to_string(classify(sigma, d, alpha)); },
          py::arg("sigma"), py::arg("d"), py::arg("alpha"));
    m.def(
        "scan_json",
        [](double sigma, int d, const std::vector<double>& alphas, const std::vector<int>& radii,
           const QuadratureSpec& q) { return dump(to_json(scan(sigma, d, alphas, radii, q))); },
        py::arg("sigma"), py::arg("d"), py::arg("alphas"), py::arg("radii"), py::arg("q") = QuadratureSpec{});
    m.def(
        "ground_state_residual_json",
        [](double sigma, double alpha, const std::vector<int>& x, int radius, const QuadratureSpec& q) {
            return dump(to_json(ground_state_residual(sigma, alpha, point(x), radius, q)));
        },
        py::arg("sigma"), py::arg("alpha"), py::arg("x"), py::arg("radius"), py::arg("q") = QuadratureSpec{});
    m.def(
        "weight_ratio_at_infinity",
        [](double sigma, int d, double alpha, const std::vector<int>& radii) {
            const auto e = weight_ratio_at_infinity(sigma, d, alpha, radii);
            return std::make_pair(e.estimate, e.expected);
        },
        py::arg("sigma"), py::arg("d"), py::arg("alpha"), py::arg("radii"));
}
