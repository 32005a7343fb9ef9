#include "contactdyn/analytic.hpp"

#include <cmath>

#include "contactdyn/errors.hpp"

namespace contactdyn {

namespace {

struct ClosedForm {
  double omega, gamma, wd, amp_cos, amp_sin;

  explicit ClosedForm(const DampedHOParams& par)
      : omega(par.omega),
        gamma(par.gamma),
        wd(std::sqrt(par.omega * par.omega - 0.25 * par.gamma * par.gamma)),
        amp_cos(par.q0),
        amp_sin((par.p0 + 0.5 * par.gamma * par.q0) / wd) {}

  double q(double t) const {
    return std::exp(-0.5 * gamma * t) *
           (amp_cos * std::cos(wd * t) + amp_sin * std::sin(wd * t));
  }
  double p(double t) const {
    const double psin = amp_cos * wd + 0.5 * gamma * amp_sin;
    const double pcos = amp_sin * wd - 0.5 * gamma * amp_cos;  // = p0
    return std::exp(-0.5 * gamma * t) *
           (pcos * std::cos(wd * t) - psin * std::sin(wd * t));
  }
  // dz/dt = (omega^2 q^2 - p^2)/2 - gamma z
  double zdot(double t, double z) const {
    const double qt = q(t);
    const double pt = p(t);
    return 0.5 * (omega * omega * qt * qt - pt * pt) - gamma * z;
  }
};

void check_params(const DampedHOParams& par) {
  if (!(par.omega > 0.0) || !std::isfinite(par.omega) ||
      !std::isfinite(par.gamma) || par.gamma < 0.0) {
    throw ContactError(ErrorCode::InvalidSpec, "invalid oscillator parameters");
  }
  if (!(par.gamma < 2.0 * par.omega)) {
    throw ContactError(ErrorCode::OverdampedUnsupported,
                       "closed form requires the underdamped regime");
  }
  if (!(par.lambda0 > 0.0)) {
    throw ContactError(ErrorCode::NonPositiveLambda, "lambda0 must be > 0");
  }
}

// RK4 quadrature of the scalar z equation from t0 to t1.
double advance_z(const ClosedForm& cf, double z, double t0, double t1,
                 double quad_step) {
  const double span = t1 - t0;
  if (span == 0.0) return z;
  const auto nsub = static_cast<std::size_t>(
      std::max<long long>(1, std::llround(std::ceil(std::abs(span) / quad_step))));
  const double h = span / static_cast<double>(nsub);
  double t = t0;
  for (std::size_t k = 0; k < nsub; ++k) {
    const double k1 = cf.zdot(t, z);
    const double k2 = cf.zdot(t + 0.5 * h, z + 0.5 * h * k1);
    const double k3 = cf.zdot(t + 0.5 * h, z + 0.5 * h * k2);
    const double k4 = cf.zdot(t + h, z + h * k3);
    z += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = t0 + static_cast<double>(k + 1) * h;
  }
  return z;
}

ContactState make_state(const DampedHOParams& par, const ClosedForm& cf,
                        double t, double z) {
  ContactState s;
  s.q = {cf.q(t)};
  s.p = {cf.p(t)};
  s.z = z;
  s.lambda = par.lambda0 * std::exp(par.gamma * t);
  s.t = t;
  return s;
}

}  // namespace

ContactState analytic_damped_ho(const DampedHOParams& par, double t,
                                double quad_step) {
  check_params(par);
  const ClosedForm cf(par);
  const double z = advance_z(cf, par.z0, 0.0, t, quad_step);
  return make_state(par, cf, t, z);
}

std::vector<ContactState> analytic_damped_ho_series(
    const DampedHOParams& par, const std::vector<double>& times,
    double quad_step) {
  check_params(par);
  const ClosedForm cf(par);

  std::vector<ContactState> out;
  out.reserve(times.size());
  double z = par.z0;
  double t_prev = 0.0;
  for (double t : times) {
    if (t < t_prev) {
      throw ContactError(ErrorCode::InvalidSpec,
                         "times must be nondecreasing");
    }
    z = advance_z(cf, z, t_prev, t, quad_step);
    out.push_back(make_state(par, cf, t, z));
    t_prev = t;
  }
  return out;
}

}  // namespace contactdyn
