#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "contactdyn/analytic.hpp"
#include "contactdyn/bracket.hpp"
#include "contactdyn/diagnostics.hpp"
#include "contactdyn/trajectory_io.hpp"
#include "contactdyn/vector_field.hpp"
#include "contactdyn/verification.hpp"

namespace py = pybind11;
using namespace contactdyn;

PYBIND11_MODULE(_contactdyn, m) {
  m.doc() = "Contact Hamiltonian dynamics: models, hybrid leap-frog "
            "integration, brackets, diagnostics";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ContactError>(m, "ContactError");

  py::class_<ContactState>(m, "ContactState")
      .def(py::init<>())
      .def(py::init([](std::vector<double> q, std::vector<double> p, double z,
                       double lambda, double t) {
             ContactState s;
             s.q = std::move(q);
             s.p = std::move(p);
             s.z = z;
             s.lambda = lambda;
             s.t = t;
             return s;
           }),
           py::arg("q"), py::arg("p"), py::arg("z") = 0.0,
           py::arg("lambda_") = 1.0, py::arg("t") = 0.0)
      .def_readwrite("q", &ContactState::q)
      .def_readwrite("p", &ContactState::p)
      .def_readwrite("z", &ContactState::z)
      .def_readwrite("lambda_", &ContactState::lambda)
      .def_readwrite("t", &ContactState::t)
      .def("dof", &ContactState::dof)
      .def("__repr__", [](const ContactState& s) {
        std::ostringstream os;
        os << "ContactState(q=[";
        for (std::size_t i = 0; i < s.q.size(); ++i) {
          os << (i ? "," : "") << s.q[i];
        }
        os << "], p=[";
        for (std::size_t i = 0; i < s.p.size(); ++i) {
          os << (i ? "," : "") << s.p[i];
        }
        os << "], z=" << s.z << ", lambda=" << s.lambda << ", t=" << s.t
           << ")";
        return os.str();
      });

  py::class_<LiftedState>(m, "LiftedState")
      .def_readwrite("q1", &LiftedState::q1)
      .def_readwrite("p1", &LiftedState::p1)
      .def_readwrite("q0", &LiftedState::q0)
      .def_readwrite("p0", &LiftedState::p0)
      .def_readwrite("t", &LiftedState::t);

  m.def(
      "validate",
      [](const ContactState& s) -> std::optional<std::string> {
        if (auto err = validate(s)) return std::string(to_string(*err));
        return std::nullopt;
      },
      "Returns the violated invariant name, or None when the state is valid.");
  m.def("lift", &lift);
  m.def("unlift", &unlift);
  m.def("time_inversion", &time_inversion);

  py::class_<ContactSystem>(m, "System")
      .def_readonly("n", &ContactSystem::n)
      .def_readonly("label", &ContactSystem::label)
      .def("K", [](const ContactSystem& sys, const ContactState& s) {
        return sys.K(s);
      })
      .def("K_p", [](const ContactSystem& sys, const ContactState& s) {
        return sys.K_p(s);
      })
      .def("K_q", [](const ContactSystem& sys, const ContactState& s) {
        return sys.K_q(s);
      })
      .def("K_z", [](const ContactSystem& sys, const ContactState& s) {
        return sys.K_z(s);
      });
  m.def("max_partial_deviation", &max_partial_deviation);

  py::class_<StateDerivative>(m, "StateDerivative")
      .def_readonly("dq", &StateDerivative::dq)
      .def_readonly("dp", &StateDerivative::dp)
      .def_readonly("dz", &StateDerivative::dz)
      .def_readonly("dlambda", &StateDerivative::dlambda);
  m.def("contact_vector_field", &contact_vector_field);
  m.def("k_rate_identity", &k_rate_identity);

  py::enum_<ModelKind>(m, "ModelKind")
      .value("DampedHOLinear", ModelKind::DampedHOLinear)
      .value("DampedHOQuadratic", ModelKind::DampedHOQuadratic)
      .value("DampedDoubleWell", ModelKind::DampedDoubleWell)
      .value("CoupledOscillators", ModelKind::CoupledOscillators);

  py::class_<ModelSpec>(m, "ModelSpec")
      .def(py::init<>())
      .def_readwrite("kind", &ModelSpec::kind)
      .def_readwrite("omega", &ModelSpec::omega)
      .def_readwrite("gamma", &ModelSpec::gamma)
      .def_readwrite("a", &ModelSpec::a)
      .def_readwrite("omega1_sq", &ModelSpec::omega1_sq)
      .def_readwrite("omega2_sq", &ModelSpec::omega2_sq)
      .def_readwrite("g", &ModelSpec::g);
  m.def("build_system", &build_system);

  py::enum_<Scheme>(m, "Scheme")
      .value("HybridLeapfrog", Scheme::HybridLeapfrog)
      .value("RK4Reference", Scheme::RK4Reference);

  py::class_<IntegratorConfig>(m, "IntegratorConfig")
      .def(py::init<>())
      .def_readwrite("h", &IntegratorConfig::h)
      .def_readwrite("n_steps", &IntegratorConfig::n_steps)
      .def_readwrite("record_every", &IntegratorConfig::record_every)
      .def_readwrite("scheme", &IntegratorConfig::scheme);

  py::class_<StepFailure>(m, "StepFailure")
      .def_property_readonly(
          "code", [](const StepFailure& f) { return to_string(f.code); })
      .def_readonly("step_index", &StepFailure::step_index)
      .def_readonly("message", &StepFailure::message);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("states", &Trajectory::states)
      .def_readonly("K", &Trajectory::K)
      .def_readonly("H", &Trajectory::H)
      .def_readonly("failure", &Trajectory::failure)
      .def("times", &Trajectory::times)
      .def("__len__", [](const Trajectory& t) { return t.states.size(); });

  m.def("hybrid_leapfrog_step", &hybrid_leapfrog_step);
  m.def("rk4_reference_step", &rk4_reference_step);
  m.def("integrate", &integrate);

  py::class_<Experiment>(m, "Experiment")
      .def_readonly("name", &Experiment::name)
      .def_readonly("model", &Experiment::model)
      .def_readonly("initial", &Experiment::initial)
      .def_readonly("config", &Experiment::config);
  m.def("default_experiments", &default_experiments);

  py::class_<DampedHOParams>(m, "DampedHOParams")
      .def(py::init<>())
      .def_readwrite("omega", &DampedHOParams::omega)
      .def_readwrite("gamma", &DampedHOParams::gamma)
      .def_readwrite("q0", &DampedHOParams::q0)
      .def_readwrite("p0", &DampedHOParams::p0)
      .def_readwrite("z0", &DampedHOParams::z0)
      .def_readwrite("lambda0", &DampedHOParams::lambda0);
  m.def("analytic_damped_ho", &analytic_damped_ho, py::arg("params"),
        py::arg("t"), py::arg("quad_step") = 1e-6);
  m.def("analytic_damped_ho_series", &analytic_damped_ho_series,
        py::arg("params"), py::arg("times"), py::arg("quad_step") = 1e-6);

  py::class_<OrderEstimate>(m, "OrderEstimate")
      .def_readonly("order", &OrderEstimate::order)
      .def_readonly("valid", &OrderEstimate::valid)
      .def_readonly("note", &OrderEstimate::note);
  m.def("convergence_order", &convergence_order, py::arg("sys"), py::arg("s0"),
        py::arg("T"), py::arg("h_list"), py::arg("scheme"),
        py::arg("reference") = nullptr);

  py::class_<Observable>(m, "Observable")
      .def_readonly("n", &Observable::n)
      .def_readonly("name", &Observable::name)
      .def("value",
           [](const Observable& a, const ContactState& s) { return a.value(s); });
  m.def("observable_from_value", &observable_from_value, py::arg("name"),
        py::arg("n"), py::arg("f"),
        "Observable with central finite-difference partials.");
  m.def("coordinate_q", &coordinate_q);
  m.def("coordinate_p", &coordinate_p);
  m.def("coordinate_z", &coordinate_z);
  m.def("coordinate_lambda", &coordinate_lambda);
  m.def("system_observable", &system_observable);
  m.def("contact_bracket", &contact_bracket);
  m.def("observable_rate", &observable_rate);

  py::class_<DiagnosticReport>(m, "DiagnosticReport")
      .def_readonly("name", &DiagnosticReport::name)
      .def_readonly("series", &DiagnosticReport::series)
      .def_readonly("max_abs", &DiagnosticReport::max_abs)
      .def_readonly("threshold", &DiagnosticReport::threshold)
      .def_readonly("pass_", &DiagnosticReport::pass);

  py::class_<ActionReport>(m, "ActionReport")
      .def_readonly("algebraic", &ActionReport::algebraic)
      .def_readonly("quadrature", &ActionReport::quadrature);

  m.def("hamiltonian_drift", &hamiltonian_drift, py::arg("traj"),
        py::arg("rel_threshold") = 1e-3);
  m.def("action_residual", &action_residual, py::arg("traj"), py::arg("sys"),
        py::arg("threshold") = 1e-3);
  m.def("herglotz_residual", &herglotz_residual, py::arg("traj"),
        py::arg("spec"), py::arg("threshold") = 5e-3);
  m.def("symmetry_check_space_inversion", &symmetry_check_space_inversion,
        py::arg("traj_plus"), py::arg("traj_minus"),
        py::arg("threshold") = 1e-12);
  m.def("sync_metric", &sync_metric);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("pass_", &CheckResult::pass)
      .def_readonly("detail", &CheckResult::detail);
  m.def("check_names", &check_names);
  m.def("run_checks", &run_checks, py::arg("only") = "");
}
