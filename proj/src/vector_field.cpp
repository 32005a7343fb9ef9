#include "contactdyn/vector_field.hpp"

#include <cmath>
#include <string>

namespace contactdyn {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += a[i] * b[i];
  }
  return sum;
}

bool finite_vec(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

void check_dims(const ContactSystem& sys, std::size_t n) {
  if (sys.n != n) {
    throw ContactError(ErrorCode::DimensionMismatch,
                       "system/state dimension mismatch");
  }
}

}  // namespace

StateDerivative contact_vector_field(const ContactSystem& sys,
                                     const ContactState& s) {
  require_valid(s);
  check_dims(sys, s.dof());

  const double K = sys.K(s);
  const std::vector<double> Kp = sys.K_p(s);
  const std::vector<double> Kq = sys.K_q(s);
  const double Kz = sys.K_z(s);

  StateDerivative d;
  d.dq = Kp;
  d.dp.resize(sys.n);
  for (std::size_t i = 0; i < sys.n; ++i) {
    d.dp[i] = -Kq[i] + s.p[i] * Kz;
  }
  d.dz = K - dot(s.p, Kp);
  d.dlambda = -s.lambda * Kz;

  if (!finite_vec(d.dq) || !finite_vec(d.dp) || !std::isfinite(d.dz) ||
      !std::isfinite(d.dlambda)) {
    throw ContactError(ErrorCode::NonFinite,
                       "non-finite derivative at " + sys.label);
  }
  return d;
}

LiftedDerivative lifted_vector_field(const ContactSystem& sys,
                                     const LiftedState& ls) {
  // Recover the contact coordinates, then express the H-partials through K's
  // partials: dH/dp1 = K_p, dH/dq1 = p0*K_q, dH/dp0 = K - p.K_p,
  // dH/dq0 = p0*K_z.
  const ContactState s = unlift(ls);
  check_dims(sys, s.dof());

  const double K = sys.K(s);
  const std::vector<double> Kp = sys.K_p(s);
  const std::vector<double> Kq = sys.K_q(s);
  const double Kz = sys.K_z(s);

  LiftedDerivative d;
  d.dq1 = Kp;
  d.dp1.resize(sys.n);
  for (std::size_t i = 0; i < sys.n; ++i) {
    d.dp1[i] = -ls.p0 * Kq[i];
  }
  d.dq0 = K - dot(s.p, Kp);
  d.dp0 = -ls.p0 * Kz;

  if (!finite_vec(d.dq1) || !finite_vec(d.dp1) || !std::isfinite(d.dq0) ||
      !std::isfinite(d.dp0)) {
    throw ContactError(ErrorCode::NonFinite,
                       "non-finite lifted derivative at " + sys.label);
  }
  return d;
}

std::pair<double, double> k_rate_identity(const ContactSystem& sys,
                                          const ContactState& s) {
  const StateDerivative d = contact_vector_field(sys, s);
  const std::vector<double> Kp = sys.K_p(s);
  const std::vector<double> Kq = sys.K_q(s);

  double lhs = dot(Kp, d.dp) + dot(Kq, d.dq) + sys.K_z(s) * d.dz;
  double rhs = sys.K(s) * sys.K_z(s);
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
    throw ContactError(ErrorCode::NonFinite, "non-finite rate identity");
  }
  return {lhs, rhs};
}

}  // namespace contactdyn
