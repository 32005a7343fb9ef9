#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "contactdyn/errors.hpp"

namespace contactdyn {

/// Phase-space point of a contact system: n position/momentum pairs (q, p),
/// the contact variable z (units of action) and the positive integration
/// factor lambda, at time t.
struct ContactState {
  std::vector<double> q;
  std::vector<double> p;
  double z = 0.0;
  double lambda = 1.0;
  double t = 0.0;

  std::size_t dof() const { return q.size(); }
};

/// Even-dimensional image of a ContactState under the canonical lift:
/// q1 = q, p1 = lambda*p, q0 = z, p0 = lambda.
struct LiftedState {
  std::vector<double> q1;
  std::vector<double> p1;
  double q0 = 0.0;
  double p0 = 1.0;
  double t = 0.0;
};

/// Returns the first violated invariant, or nullopt when the state is valid.
/// Checked in order: |q| == |p| with n >= 1, all fields finite, lambda > 0.
std::optional<ErrorCode> validate(const ContactState& s);

/// Throws ContactError when validate(s) reports a violation.
void require_valid(const ContactState& s);

LiftedState lift(const ContactState& s);
ContactState unlift(const LiftedState& ls);

/// Discrete time inversion: p and z flip sign, q and lambda are kept, t -> -t.
/// Applied componentwise for n > 1. An involution.
ContactState time_inversion(const ContactState& s);

}  // namespace contactdyn
