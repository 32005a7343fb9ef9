#pragma once

#include <string>
#include <utility>
#include <vector>

#include "contactdyn/integrator.hpp"
#include "contactdyn/models.hpp"

namespace contactdyn {

/// One named diagnostic over a trajectory: a (t, value) residual series, its
/// max magnitude, and a pass/fail verdict against `threshold`.
struct DiagnosticReport {
  std::string name;
  std::vector<std::pair<double, double>> series;
  double max_abs = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// Drift of the conserved quantity H = lambda*K: series of H(t) - H(0).
/// Passes when the max drift is within rel_threshold relative to |H(0)|
/// (absolute when H(0) == 0).
DiagnosticReport hamiltonian_drift(const Trajectory& traj,
                                   double rel_threshold = 1e-3);

struct ActionReport {
  DiagnosticReport algebraic;   // (K - p.K_p) + J with J = p.K_p - K; == 0
  DiagnosticReport quadrature;  // z(t) - (z(0) - trapezoid integral of J)
};

/// Checks that z behaves as minus the accumulated Lagrangian J = p.K_p - K:
/// the algebraic residual validates plumbing (identically zero), the
/// quadrature residual compares z(t) against -integral(J dt) over records.
ActionReport action_residual(const Trajectory& traj, const ContactSystem& sys,
                             double threshold = 1e-3);

/// Residual of the extended Euler-Lagrange (Herglotz) equation for models of
/// the form K = p^2/2 + U(q) + f(z):  qdd + U'(q) - qd * f'(z), with qdd/qd
/// from centered differences of the recorded q(t). Interior records only;
/// thresholds scale with the record spacing squared.
/// Throws UnsupportedModel for the coupled-oscillator model, TooShort when
/// fewer than three records are available.
DiagnosticReport herglotz_residual(const Trajectory& traj,
                                   const ModelSpec& spec,
                                   double threshold = 5e-3);

/// Mirror comparison of two runs whose initial states are related by
/// (q, p) -> (-q, -p): per-record max of |q+ + q-| and |p+ + p-|.
/// Passes when the mirror residual is within threshold AND the z and lambda
/// columns agree exactly. Throws LengthMismatch when record counts, times or
/// dimensions differ.
DiagnosticReport symmetry_check_space_inversion(const Trajectory& traj_plus,
                                                const Trajectory& traj_minus,
                                                double threshold = 1e-12);

/// Frequency-lock score in [0, 1] for a two-oscillator trajectory: mean
/// zero-crossing period of each q component over the final half of the run,
/// score = 1 - |T1 - T2| / max(T1, T2). The first half is discarded as
/// transient. Throws TooShort / NoCrossings when the window cannot support
/// a period estimate.
double sync_metric(const Trajectory& traj);

}  // namespace contactdyn
