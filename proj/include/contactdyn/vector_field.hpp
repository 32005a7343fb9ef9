#pragma once

#include <utility>
#include <vector>

#include "contactdyn/state.hpp"
#include "contactdyn/system.hpp"

namespace contactdyn {

/// Time derivative of a ContactState along the contact equations of motion.
struct StateDerivative {
  std::vector<double> dq;
  std::vector<double> dp;
  double dz = 0.0;
  double dlambda = 0.0;
};

/// Time derivative of a LiftedState along the canonical equations of
/// H = lambda * K in lifted coordinates.
struct LiftedDerivative {
  std::vector<double> dq1;
  std::vector<double> dp1;
  double dq0 = 0.0;
  double dp0 = 0.0;
};

/// Contact equations of motion:
///   dq = K_p,  dp_i = -K_q_i + p_i K_z,  dz = K - sum_i p_i K_p_i,
///   dlambda = -lambda K_z.
/// (dq, dp, dz) never depend on lambda; only dlambda does.
StateDerivative contact_vector_field(const ContactSystem& sys,
                                     const ContactState& s);

/// Canonical equations for H(p1, q1, p0, q0) = p0 * K(p1/p0, q1, q0),
/// with the H-partials expressed through K's partials by the chain rule.
LiftedDerivative lifted_vector_field(const ContactSystem& sys,
                                     const LiftedState& ls);

/// Both sides of the rate identity dK/dt = K * K_z:
/// first the chain rule of K along the contact field, then K(s)*K_z(s).
std::pair<double, double> k_rate_identity(const ContactSystem& sys,
                                          const ContactState& s);

}  // namespace contactdyn
