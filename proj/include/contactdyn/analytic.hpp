#pragma once

#include <vector>

#include "contactdyn/state.hpp"

namespace contactdyn {

/// Parameters of the linearly damped harmonic oscillator with closed-form
/// solution (underdamped regime gamma < 2*omega).
struct DampedHOParams {
  double omega = 1.0;
  double gamma = 0.1;
  double q0 = 1.0;
  double p0 = 0.0;
  double z0 = 1.0;
  double lambda0 = 1.0;
};

/// Exact state at time t:
///   q(t) = e^{-gamma t/2} [q0 cos(wd t) + ((p0 + gamma q0/2)/wd) sin(wd t)],
///   wd = sqrt(omega^2 - gamma^2/4),  p = dq/dt,  lambda = lambda0 e^{gamma t};
/// z solves the linear ODE dz/dt + gamma z = (omega^2 q^2 - p^2)/2 and is
/// obtained by RK4 quadrature with sub-step ~quad_step (the closed form for z
/// is long and error-prone; the quadrature is the independent oracle).
/// Throws OverdampedUnsupported when gamma >= 2*omega.
ContactState analytic_damped_ho(const DampedHOParams& par, double t,
                                double quad_step = 1e-6);

/// Same, evaluated at a nondecreasing list of times with one cumulative
/// z-integration pass (use this for whole-trajectory comparisons).
std::vector<ContactState> analytic_damped_ho_series(
    const DampedHOParams& par, const std::vector<double>& times,
    double quad_step = 1e-6);

}  // namespace contactdyn
