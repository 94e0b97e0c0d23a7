#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kgring/errors.hpp"
#include "kgring/oracle.hpp"
#include "kgring/quadrature.hpp"
#include "kgring/specfun.hpp"

namespace py = pybind11;
using namespace kgring;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Relativistic bound states in a D-dimensional ring-shaped Kratzer potential";

    py::register_exception<OutOfBoundWindow>(m, "OutOfBoundWindowError", PyExc_ValueError);
    py::register_exception<NegativeDiscriminant>(m, "NegativeDiscriminantError", PyExc_ValueError);
    py::register_exception<NoRealAngularMomentum>(m, "NoRealAngularMomentumError",
                                                  PyExc_ValueError);
    py::register_exception<NoBoundState>(m, "NoBoundStateError", PyExc_RuntimeError);
    py::register_exception<NonConvergence>(m, "NonConvergenceError", PyExc_RuntimeError);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<double, double, double, double, int>(), py::arg("mu"), py::arg("a0"),
             py::arg("r0"), py::arg("C") = 0.0, py::arg("D") = 3)
        .def_readonly("mu", &ModelParams::mu)
        .def_readonly("a0", &ModelParams::a0)
        .def_readonly("r0", &ModelParams::r0)
        .def_readonly("C", &ModelParams::C)
        .def_readonly("D", &ModelParams::D)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(mu=" + std::to_string(p.mu) + ", a0=" + std::to_string(p.a0) +
                   ", r0=" + std::to_string(p.r0) + ", C=" + std::to_string(p.C) +
                   ", D=" + std::to_string(p.D) + ")";
        });

    py::class_<Couplings>(m, "Couplings")
        .def_readonly("A", &Couplings::A)
        .def_readonly("B", &Couplings::B);

    py::class_<QuantumNumbers>(m, "QuantumNumbers")
        .def(py::init<int, int, int>(), py::arg("n"), py::arg("n_theta"), py::arg("m"))
        .def_readonly("n", &QuantumNumbers::n)
        .def_readonly("n_theta", &QuantumNumbers::n_theta)
        .def_readonly("m", &QuantumNumbers::m)
        .def("__repr__", [](const QuantumNumbers& q) {
            return "QuantumNumbers(n=" + std::to_string(q.n) +
                   ", n_theta=" + std::to_string(q.n_theta) + ", m=" + std::to_string(q.m) + ")";
        });

    py::class_<EnergyChannel>(m, "EnergyChannel")
        .def_readonly("alpha1_sq", &EnergyChannel::alpha1_sq)
        .def_readonly("alpha2_sq", &EnergyChannel::alpha2_sq)
        .def_readonly("eps", &EnergyChannel::eps);

    py::class_<NonrelSubstitution>(m, "NonrelSubstitution")
        .def_readonly("E_nr", &NonrelSubstitution::E_nr)
        .def_readonly("two_mu", &NonrelSubstitution::two_mu);

    m.def("derive_couplings", &derive_couplings, py::arg("params"));
    m.def("channel_at", &channel_at, py::arg("params"), py::arg("E"));
    m.def("nonrel_transform", &nonrel_transform, py::arg("alpha1_sq"), py::arg("alpha2_sq"));

    py::class_<PolyEval>(m, "PolyEval")
        .def_readonly("value", &PolyEval::value)
        .def_readonly("derivative", &PolyEval::derivative);

    m.def("laguerre", &laguerre, py::arg("n"), py::arg("alpha"), py::arg("x"));
    m.def("jacobi_sym", &jacobi_sym, py::arg("n"), py::arg("alpha"), py::arg("s"));
    m.def("log_gamma", &log_gamma, py::arg("x"));

    py::class_<AngularSolution>(m, "AngularSolution")
        .def_readonly("m_prime", &AngularSolution::m_prime)
        .def_readonly("j", &AngularSolution::j)
        .def_readonly("j_prime", &AngularSolution::j_prime)
        .def_readonly("lambda_sep", &AngularSolution::lambda_sep)
        .def_readonly("norm", &AngularSolution::norm);

    m.def("m_prime", &m_prime, py::arg("m"), py::arg("C"), py::arg("alpha2_sq"));
    m.def("j_from_ntilde", &j_from_ntilde, py::arg("ntilde"), py::arg("m_prime"), py::arg("D"),
          py::arg("C"), py::arg("alpha2_sq"));
    m.def("jprime_from_ntilde", &jprime_from_ntilde, py::arg("ntilde"), py::arg("m_prime"),
          py::arg("D"));
    m.def("ntilde_from_j", &ntilde_from_j, py::arg("j"), py::arg("m_prime"), py::arg("D"),
          py::arg("C"), py::arg("alpha2_sq"));
    m.def("polar_wavefunction", &polar_wavefunction, py::arg("ntilde"), py::arg("m_prime"),
          py::arg("theta"));
    m.def("azimuthal", &azimuthal, py::arg("m"), py::arg("phi"));
    m.def("solve_angular", &solve_angular, py::arg("params"), py::arg("qn"),
          py::arg("alpha2_sq"));

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("scan_points", &SolverConfig::scan_points)
        .def_readwrite("window_margin", &SolverConfig::window_margin)
        .def_readwrite("residual_tol", &SolverConfig::residual_tol)
        .def_readwrite("max_bisect_iters", &SolverConfig::max_bisect_iters);

    py::class_<RadialIntermediates>(m, "RadialIntermediates")
        .def_readonly("M", &RadialIntermediates::M)
        .def_readonly("gamma4", &RadialIntermediates::gamma4)
        .def_readonly("beta_sq", &RadialIntermediates::beta_sq)
        .def_readonly("zeta", &RadialIntermediates::zeta)
        .def_readonly("eps", &RadialIntermediates::eps);

    py::class_<SolveDiagnostics>(m, "SolveDiagnostics")
        .def_readonly("roots", &SolveDiagnostics::roots)
        .def_readonly("multiple_roots", &SolveDiagnostics::multiple_roots);

    py::class_<BoundState>(m, "BoundState")
        .def_readonly("params", &BoundState::params)
        .def_readonly("qn", &BoundState::qn)
        .def_readonly("E", &BoundState::E)
        .def_readonly("intermediates", &BoundState::intermediates)
        .def_readonly("angular", &BoundState::angular)
        .def_readonly("norm", &BoundState::norm)
        .def_readonly("diagnostics", &BoundState::diagnostics)
        .def("__repr__", [](const BoundState& s) {
            return "BoundState(n=" + std::to_string(s.qn.n) +
                   ", n_theta=" + std::to_string(s.qn.n_theta) + ", m=" + std::to_string(s.qn.m) +
                   ", E=" + std::to_string(s.E) + ")";
        });

    m.def("radial_intermediates", &radial_intermediates, py::arg("params"), py::arg("j"),
          py::arg("E"));
    m.def("energy_residual_kratzer", &energy_residual_kratzer, py::arg("params"), py::arg("n"),
          py::arg("j"), py::arg("E"));
    m.def("energy_residual_noncentral", &energy_residual_noncentral, py::arg("params"),
          py::arg("qn"), py::arg("E"));
    m.def("solve_bound_state", &solve_bound_state, py::arg("params"), py::arg("qn"),
          py::arg("config") = SolverConfig{});
    m.def("coulomb_energy", &coulomb_energy, py::arg("mu"), py::arg("qe_sq"), py::arg("n"),
          py::arg("ell"), py::arg("D"));
    m.def("coulomb_series", &coulomb_series, py::arg("mu"), py::arg("qe_sq"), py::arg("n"),
          py::arg("ell"), py::arg("D"));
    m.def("coulomb_root", &coulomb_root, py::arg("mu"), py::arg("A"), py::arg("n"),
          py::arg("ell"), py::arg("D"), py::arg("config") = SolverConfig{});
    m.def("nonrel_energy", &nonrel_energy, py::arg("params"), py::arg("qn"));
    m.def("transformed_nonrel_residual", &transformed_nonrel_residual, py::arg("params"),
          py::arg("qn"), py::arg("E_nr"));
    m.def("radial_wavefunction", &radial_wavefunction, py::arg("state"), py::arg("r"));
    m.def("reduced_radial_wavefunction", &reduced_radial_wavefunction, py::arg("state"),
          py::arg("r"));
    m.def("total_wavefunction", &total_wavefunction, py::arg("state"), py::arg("r"),
          py::arg("theta"), py::arg("phi"));

    py::class_<oracle::ResidualReport>(m, "ResidualReport")
        .def_readonly("max_rel_residual", &oracle::ResidualReport::max_rel_residual)
        .def_readonly("grid", &oracle::ResidualReport::grid)
        .def_readonly("tolerance", &oracle::ResidualReport::tolerance)
        .def_readonly("pass_", &oracle::ResidualReport::pass);

    py::class_<oracle::EigenCrossCheck>(m, "EigenCrossCheck")
        .def_readonly("E_analytic", &oracle::EigenCrossCheck::E_analytic)
        .def_readonly("E_numeric", &oracle::EigenCrossCheck::E_numeric)
        .def_readonly("gap", &oracle::EigenCrossCheck::gap)
        .def_readonly("grid_size", &oracle::EigenCrossCheck::grid_size)
        .def_readonly("r_max", &oracle::EigenCrossCheck::r_max)
        .def_readonly("converged", &oracle::EigenCrossCheck::converged);

    m.def(
        "radial_ode_residual",
        [](const BoundState& state, const std::vector<double>& grid, double tol) {
            return oracle::radial_ode_residual(state, grid, tol);
        },
        py::arg("state"), py::arg("r_grid"), py::arg("tolerance") = 1e-7);
    m.def(
        "angular_ode_residual",
        [](const AngularSolution& ang, int ntilde, int D, double C, double alpha2_sq,
           const std::vector<double>& grid, double tol) {
            return oracle::angular_ode_residual(ang, ntilde, D, C, alpha2_sq, grid, tol);
        },
        py::arg("angular"), py::arg("ntilde"), py::arg("D"), py::arg("C"), py::arg("alpha2_sq"),
        py::arg("theta_grid"), py::arg("tolerance") = 1e-7);
    m.def("matrix_eigen_crosscheck", &oracle::matrix_eigen_crosscheck, py::arg("params"),
          py::arg("qn"), py::arg("N"), py::arg("r_max"));
    m.def("matrix_eigen_crosscheck_coulomb", &oracle::matrix_eigen_crosscheck_coulomb,
          py::arg("mu"), py::arg("A"), py::arg("n"), py::arg("ell"), py::arg("D"), py::arg("N"),
          py::arg("r_max"));

    m.def(
        "integrate",
        [](const std::function<double(double)>& f, double a, double b, double tol) {
            return integrate(f, a, b, tol);
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("abs_tol") = 1e-10);
    m.def(
        "integrate_to_inf",
        [](const std::function<double(double)>& f, double a, double tol) {
            return integrate_to_inf(f, a, tol);
        },
        py::arg("f"), py::arg("a") = 0.0, py::arg("abs_tol") = 1e-10);
}
