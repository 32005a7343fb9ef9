#include "contactdyn/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace contactdyn {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += a[i] * b[i];
  }
  return sum;
}

void require_nonempty(const Trajectory& traj) {
  if (traj.states.empty()) {
    throw ContactError(ErrorCode::EmptyTrajectory, "empty trajectory");
  }
}

void finish(DiagnosticReport& r) {
  r.max_abs = 0.0;
  for (const auto& [t, v] : r.series) {
    r.max_abs = std::max(r.max_abs, std::abs(v));
  }
  r.pass = r.max_abs <= r.threshold;
}

// Zero crossings of q[comp] over [t_from, end], linearly interpolated.
std::vector<double> zero_crossings(const Trajectory& traj, std::size_t comp,
                                   double t_from) {
  std::vector<double> out;
  const auto& st = traj.states;
  for (std::size_t k = 1; k < st.size(); ++k) {
    if (st[k - 1].t < t_from) continue;
    const double a = st[k - 1].q[comp];
    const double b = st[k].q[comp];
    if (a == 0.0) continue;  // counted at the previous interval's endpoint
    if (b == 0.0) {
      out.push_back(st[k].t);
    } else if ((a < 0.0) != (b < 0.0)) {
      const double frac = a / (a - b);
      out.push_back(st[k - 1].t + frac * (st[k].t - st[k - 1].t));
    }
  }
  return out;
}

}  // namespace

DiagnosticReport hamiltonian_drift(const Trajectory& traj,
                                   double rel_threshold) {
  require_nonempty(traj);
  const double H0 = traj.H.front();

  DiagnosticReport r;
  r.name = "hamiltonian_drift";
  r.series.reserve(traj.states.size());
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    r.series.emplace_back(traj.states[k].t, traj.H[k] - H0);
  }
  r.threshold = (H0 != 0.0) ? rel_threshold * std::abs(H0) : rel_threshold;
  finish(r);
  return r;
}

ActionReport action_residual(const Trajectory& traj, const ContactSystem& sys,
                             double threshold) {
  require_nonempty(traj);

  ActionReport out;
  out.algebraic.name = "action_algebraic";
  out.algebraic.threshold = 0.0;
  out.quadrature.name = "action_quadrature";
  out.quadrature.threshold = threshold;

  std::vector<double> J(traj.states.size());
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const ContactState& s = traj.states[k];
    const double K = sys.K(s);
    const double pKp = dot(s.p, sys.K_p(s));
    J[k] = pKp - K;
    const double zdot = K - pKp;
    out.algebraic.series.emplace_back(s.t, zdot + J[k]);
  }

  // cumulative trapezoid of J against the recorded times
  const double z0 = traj.states.front().z;
  double integral = 0.0;
  out.quadrature.series.emplace_back(traj.states.front().t, 0.0);
  for (std::size_t k = 1; k < traj.states.size(); ++k) {
    const double dt = traj.states[k].t - traj.states[k - 1].t;
    integral += 0.5 * dt * (J[k - 1] + J[k]);
    out.quadrature.series.emplace_back(traj.states[k].t,
                                       traj.states[k].z - (z0 - integral));
  }

  finish(out.algebraic);
  finish(out.quadrature);
  return out;
}

DiagnosticReport herglotz_residual(const Trajectory& traj,
                                   const ModelSpec& spec, double threshold) {
  require_nonempty(traj);
  if (spec.kind == ModelKind::CoupledOscillators) {
    throw ContactError(ErrorCode::UnsupportedModel,
                       "coupling term breaks the K = p^2/2 + U(q) + f(z) form");
  }
  if (traj.states.size() < 3) {
    throw ContactError(ErrorCode::TooShort,
                       "need at least three records for the time stencil");
  }

  auto u_prime = [&spec](double q) {
    if (spec.kind == ModelKind::DampedDoubleWell) {
      return 2.0 * q * (q * q - spec.a * spec.a);
    }
    return spec.omega * spec.omega * q;
  };
  auto f_prime = [&spec](double z) {
    if (spec.kind == ModelKind::DampedHOQuadratic) {
      return -2.0 * spec.gamma * z;
    }
    return -spec.gamma;
  };

  DiagnosticReport r;
  r.name = "herglotz_residual";
  r.threshold = threshold;
  const auto& st = traj.states;
  for (std::size_t k = 1; k + 1 < st.size(); ++k) {
    const double dt_l = st[k].t - st[k - 1].t;
    const double dt_r = st[k + 1].t - st[k].t;
    if (std::abs(dt_r - dt_l) > 1e-9 * std::max(dt_l, dt_r)) {
      continue;  // off-schedule final record; the centered stencil needs
                 // equal spacing
    }
    const double dt = 0.5 * (st[k + 1].t - st[k - 1].t);
    const double qdd =
        (st[k + 1].q[0] - 2.0 * st[k].q[0] + st[k - 1].q[0]) / (dt * dt);
    const double qd = (st[k + 1].q[0] - st[k - 1].q[0]) / (2.0 * dt);
    r.series.emplace_back(st[k].t,
                          qdd + u_prime(st[k].q[0]) - qd * f_prime(st[k].z));
  }
  finish(r);
  return r;
}

DiagnosticReport symmetry_check_space_inversion(const Trajectory& traj_plus,
                                                const Trajectory& traj_minus,
                                                double threshold) {
  require_nonempty(traj_plus);
  require_nonempty(traj_minus);
  const auto& sp = traj_plus.states;
  const auto& sm = traj_minus.states;
  if (sp.size() != sm.size()) {
    throw ContactError(ErrorCode::LengthMismatch, "record counts differ");
  }

  DiagnosticReport r;
  r.name = "space_inversion_mirror";
  r.threshold = threshold;
  bool contact_pair_matches = true;
  for (std::size_t k = 0; k < sp.size(); ++k) {
    if (sp[k].dof() != sm[k].dof() || sp[k].t != sm[k].t) {
      throw ContactError(ErrorCode::LengthMismatch,
                         "record times or dimensions differ");
    }
    double res = 0.0;
    for (std::size_t i = 0; i < sp[k].dof(); ++i) {
      res = std::max(res, std::abs(sp[k].q[i] + sm[k].q[i]));
      res = std::max(res, std::abs(sp[k].p[i] + sm[k].p[i]));
    }
    r.series.emplace_back(sp[k].t, res);
    if (sp[k].z != sm[k].z || sp[k].lambda != sm[k].lambda) {
      contact_pair_matches = false;
    }
  }
  finish(r);
  r.pass = r.pass && contact_pair_matches;  // z, lambda are inversion-even
  return r;
}

double sync_metric(const Trajectory& traj) {
  require_nonempty(traj);
  if (traj.states.front().dof() != 2) {
    throw ContactError(ErrorCode::DimensionMismatch,
                       "sync metric needs a two-oscillator trajectory");
  }
  if (traj.states.size() < 8) {
    throw ContactError(ErrorCode::TooShort, "too few records");
  }

  const double t0 = traj.states.front().t;
  const double t1 = traj.states.back().t;
  const double t_mid = 0.5 * (t0 + t1);  // skip the transient first half

  double period[2];
  for (std::size_t comp = 0; comp < 2; ++comp) {
    const std::vector<double> crossings = zero_crossings(traj, comp, t_mid);
    if (crossings.size() < 3) {
      throw ContactError(ErrorCode::NoCrossings,
                         "not enough zero crossings in the analysis window");
    }
    // consecutive crossings are half periods
    const double mean_gap = (crossings.back() - crossings.front()) /
                            static_cast<double>(crossings.size() - 1);
    period[comp] = 2.0 * mean_gap;
  }

  const double score =
      1.0 - std::abs(period[0] - period[1]) / std::max(period[0], period[1]);
  return std::clamp(score, 0.0, 1.0);
}

}  // namespace contactdyn
