#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gausslind/airy.hpp"
#include "gausslind/errors.hpp"
#include "gausslind/evolution.hpp"
#include "gausslind/moment_oracle.hpp"

namespace py = pybind11;
using namespace gausslind;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gaussian states under quadratic Hamiltonians coupled to a "
              "thermal dissipative bath";

    py::register_exception<HeisenbergError>(m, "HeisenbergError",
                                            PyExc_ValueError);
    py::register_exception<IntegrationError>(m, "IntegrationError",
                                             PyExc_RuntimeError);
    py::register_exception<QuadratureError>(m, "QuadratureError",
                                            PyExc_RuntimeError);

    py::class_<GaussianParams>(m, "GaussianParams")
        .def(py::init<>())
        .def(py::init([](std::complex<double> alpha, double r, double phi,
                         double nu) {
                 return GaussianParams{alpha, r, phi, nu};
             }),
             py::arg("alpha") = std::complex<double>(0.0, 0.0),
             py::arg("r") = 0.0, py::arg("phi") = 0.0, py::arg("nu") = 0.0)
        .def_readwrite("alpha", &GaussianParams::alpha)
        .def_readwrite("r", &GaussianParams::r)
        .def_readwrite("phi", &GaussianParams::phi)
        .def_readwrite("nu", &GaussianParams::nu);

    py::class_<GaussianState>(m, "GaussianState")
        .def(py::init<>())
        .def(py::init([](double mean_q, double mean_p, double sigma_qq,
                         double sigma_pp, double sigma_qp) {
                 return GaussianState{mean_q, mean_p, sigma_qq, sigma_pp,
                                      sigma_qp};
             }),
             py::arg("mean_q") = 0.0, py::arg("mean_p") = 0.0,
             py::arg("sigma_qq") = 0.5, py::arg("sigma_pp") = 0.5,
             py::arg("sigma_qp") = 0.0)
        .def_readwrite("mean_q", &GaussianState::mean_q)
        .def_readwrite("mean_p", &GaussianState::mean_p)
        .def_readwrite("sigma_qq", &GaussianState::sigma_qq)
        .def_readwrite("sigma_pp", &GaussianState::sigma_pp)
        .def_readwrite("sigma_qp", &GaussianState::sigma_qp)
        .def("covariance", &GaussianState::covariance);

    py::class_<ConstantProfile>(m, "ConstantProfile")
        .def(py::init<double>(), py::arg("omega0") = 1.0)
        .def_readwrite("omega0", &ConstantProfile::omega0);
    py::class_<InvertedProfile>(m, "InvertedProfile")
        .def(py::init<double>(), py::arg("omega0") = 1.0)
        .def_readwrite("omega0", &InvertedProfile::omega0);
    py::class_<SqrtRampProfile>(m, "SqrtRampProfile")
        .def(py::init<double, double>(), py::arg("omega0") = 1.0,
             py::arg("gamma") = 1.0)
        .def_readwrite("omega0", &SqrtRampProfile::omega0)
        .def_readwrite("gamma", &SqrtRampProfile::gamma);
    py::class_<TabulatedProfile>(m, "TabulatedProfile")
        .def(py::init<std::vector<std::pair<double, double>>>(),
             py::arg("samples"))
        .def("omega_squared", &TabulatedProfile::omega_squared)
        .def_property_readonly("samples", &TabulatedProfile::samples);

    py::class_<BathParams>(m, "BathParams")
        .def(py::init([](double k, double n_bar) {
                 return BathParams{k, n_bar};
             }),
             py::arg("k") = 0.0, py::arg("n_bar") = 0.0)
        .def_readwrite("k", &BathParams::k)
        .def_readwrite("n_bar", &BathParams::n_bar);

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init([](double ode, double quad) {
                 return Tolerances{ode, quad};
             }),
             py::arg("ode") = 1e-10, py::arg("quad") = 1e-10)
        .def_readwrite("ode", &Tolerances::ode)
        .def_readwrite("quad", &Tolerances::quad);

    py::class_<ModeCoefficients>(m, "ModeCoefficients")
        .def_readonly("f1", &ModeCoefficients::f1)
        .def_readonly("f2", &ModeCoefficients::f2);

    py::class_<PropagatorMatrix>(m, "PropagatorMatrix")
        .def_readonly("u", &PropagatorMatrix::u)
        .def_readonly("v", &PropagatorMatrix::v)
        .def_readonly("du", &PropagatorMatrix::du)
        .def_readonly("dv", &PropagatorMatrix::dv)
        .def("matrix", &PropagatorMatrix::matrix)
        .def("wronskian", &PropagatorMatrix::wronskian);

    py::class_<AiryValues>(m, "AiryValues")
        .def_readonly("ai", &AiryValues::ai)
        .def_readonly("aip", &AiryValues::aip)
        .def_readonly("bi", &AiryValues::bi)
        .def_readonly("bip", &AiryValues::bip);

    py::class_<TrajectorySample>(m, "TrajectorySample")
        .def_readonly("t", &TrajectorySample::t)
        .def_readonly("state", &TrajectorySample::state)
        .def_readonly("det", &TrajectorySample::det)
        .def_readonly("entropy", &TrajectorySample::entropy)
        .def_readonly("r", &TrajectorySample::r)
        .def_readonly("nu", &TrajectorySample::nu);

    m.def("wrap_angle", &wrap_angle, py::arg("phi"));
    m.def("params_to_state", &params_to_state, py::arg("params"));
    m.def("state_to_params", &state_to_params, py::arg("state"));
    m.def("covariance_det", &covariance_det, py::arg("state"));
    m.def("symplectic_eigenvalue", &symplectic_eigenvalue, py::arg("state"));
    m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("d"));

    m.def("omega_squared",
          py::overload_cast<const FrequencyProfile&, double>(&omega_squared),
          py::arg("profile"), py::arg("t"));
    m.def("reference_omega", &reference_omega, py::arg("profile"));
    m.def("mode_coefficients", &mode_coefficients, py::arg("profile"),
          py::arg("t"));

    m.def("airy", &airy, py::arg("z"));

    m.def("fundamental_pair", &fundamental_pair, py::arg("profile"),
          py::arg("t"), py::arg("tol") = 1e-10);
    m.def("constant_propagator_closed", &constant_propagator_closed,
          py::arg("omega0"), py::arg("t"));
    m.def("iho_propagator_closed", &iho_propagator_closed, py::arg("omega0"),
          py::arg("t"));
    m.def("ramp_propagator_closed", &ramp_propagator_closed,
          py::arg("omega0"), py::arg("gamma"), py::arg("t"));
    m.def("propagator_at", &propagator_at, py::arg("profile"), py::arg("t"),
          py::arg("tol") = 1e-10);
    m.def("two_time_propagator", &two_time_propagator, py::arg("profile"),
          py::arg("t_from"), py::arg("t_to"), py::arg("tol") = 1e-10);

    m.def("m_matrix", &m_matrix, py::arg("profile"), py::arg("bath"),
          py::arg("t"), py::arg("tol") = 1e-10);
    m.def("m_matrix_iho_closed", &m_matrix_iho_closed, py::arg("omega0"),
          py::arg("bath"), py::arg("t"));
    m.def("evolve", &evolve, py::arg("state0"), py::arg("profile"),
          py::arg("bath"), py::arg("t"), py::arg("tol") = Tolerances{});
    m.def("chi_at", &chi_at, py::arg("state"), py::arg("xi_p"),
          py::arg("xi_q"));
    m.def("trajectory", &trajectory, py::arg("params0"), py::arg("profile"),
          py::arg("bath"), py::arg("t_max"), py::arg("n_steps"),
          py::arg("tol") = Tolerances{});
    m.def("d_asymptote_iho", &d_asymptote_iho, py::arg("omega0"),
          py::arg("bath"));
    m.def("oracle_evolve", &oracle_evolve, py::arg("state0"),
          py::arg("profile"), py::arg("bath"), py::arg("t_grid"),
          py::arg("tol") = 1e-10);
}
