#include "contactdyn/models.hpp"

#include <cmath>

namespace contactdyn {

namespace {

void check_finite(const ModelSpec& spec) {
  const double fields[] = {spec.omega,     spec.gamma,     spec.a,
                           spec.omega1_sq, spec.omega2_sq, spec.g};
  for (double v : fields) {
    if (!std::isfinite(v)) {
      throw ContactError(ErrorCode::InvalidSpec,
                         "model parameter is not finite");
    }
  }
  if (spec.gamma < 0.0) {
    throw ContactError(ErrorCode::InvalidSpec, "gamma must be >= 0");
  }
}

ContactSystem damped_ho(const ModelSpec& spec, bool quadratic) {
  if (!(spec.omega > 0.0)) {
    throw ContactError(ErrorCode::InvalidSpec, "omega must be > 0");
  }
  const double omega = spec.omega;
  const double gamma = spec.gamma;

  ContactSystem sys;
  sys.n = 1;
  sys.label = quadratic ? "damped_ho_quadratic" : "damped_ho_linear";
  if (quadratic) {
    sys.K = [omega, gamma](const ContactState& s) {
      return 0.5 * (s.p[0] * s.p[0] + omega * omega * s.q[0] * s.q[0]) -
             gamma * s.z * s.z;
    };
    sys.K_z = [gamma](const ContactState& s) { return -2.0 * gamma * s.z; };
  } else {
    sys.K = [omega, gamma](const ContactState& s) {
      return 0.5 * (s.p[0] * s.p[0] + omega * omega * s.q[0] * s.q[0]) -
             gamma * s.z;
    };
    sys.K_z = [gamma](const ContactState&) { return -gamma; };
  }
  sys.K_p = [](const ContactState& s) {
    return std::vector<double>{s.p[0]};
  };
  sys.K_q = [omega](const ContactState& s) {
    return std::vector<double>{omega * omega * s.q[0]};
  };
  return sys;
}

ContactSystem double_well(const ModelSpec& spec) {
  const double a = spec.a;
  const double gamma = spec.gamma;

  ContactSystem sys;
  sys.n = 1;
  sys.label = "damped_double_well";
  sys.K = [a, gamma](const ContactState& s) {
    const double w = s.q[0] * s.q[0] - a * a;
    return 0.5 * s.p[0] * s.p[0] + 0.5 * w * w - gamma * s.z;
  };
  sys.K_p = [](const ContactState& s) {
    return std::vector<double>{s.p[0]};
  };
  sys.K_q = [a](const ContactState& s) {
    return std::vector<double>{2.0 * s.q[0] * (s.q[0] * s.q[0] - a * a)};
  };
  sys.K_z = [gamma](const ContactState&) { return -gamma; };
  return sys;
}

ContactSystem coupled_oscillators(const ModelSpec& spec) {
  if (!(spec.omega1_sq > 0.0) || !(spec.omega2_sq > 0.0)) {
    throw ContactError(ErrorCode::InvalidSpec,
                       "squared frequencies must be > 0");
  }
  if (spec.g < 0.0) {
    throw ContactError(ErrorCode::InvalidSpec, "coupling g must be >= 0");
  }
  const double w1 = spec.omega1_sq;
  const double w2 = spec.omega2_sq;
  const double g = spec.g;
  const double gamma = spec.gamma;

  // Two oscillators sharing a single contact pair (z, lambda).
  ContactSystem sys;
  sys.n = 2;
  sys.label = "coupled_oscillators";
  sys.K = [w1, w2, g, gamma](const ContactState& s) {
    const double q1 = s.q[0];
    const double q2 = s.q[1];
    return 0.5 * (s.p[0] * s.p[0] + w1 * q1 * q1) +
           0.5 * (s.p[1] * s.p[1] + w2 * q2 * q2) + g * q1 * q1 * q2 * q2 -
           gamma * s.z;
  };
  sys.K_p = [](const ContactState& s) {
    return std::vector<double>{s.p[0], s.p[1]};
  };
  sys.K_q = [w1, w2, g](const ContactState& s) {
    const double q1 = s.q[0];
    const double q2 = s.q[1];
    return std::vector<double>{w1 * q1 + 2.0 * g * q1 * q2 * q2,
                               w2 * q2 + 2.0 * g * q1 * q1 * q2};
  };
  sys.K_z = [gamma](const ContactState&) { return -gamma; };
  return sys;
}

ContactState initial_state(std::vector<double> q, std::vector<double> p) {
  ContactState s;
  s.q = std::move(q);
  s.p = std::move(p);
  s.z = 1.0;
  s.lambda = 1.0;
  s.t = 0.0;
  return s;
}

IntegratorConfig run_config(double T, double h) {
  IntegratorConfig cfg;
  cfg.h = h;
  cfg.n_steps = static_cast<std::size_t>(std::llround(T / h));
  cfg.record_every = 1;
  cfg.scheme = Scheme::HybridLeapfrog;
  return cfg;
}

}  // namespace

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::DampedHOLinear:
      return "damped_ho_linear";
    case ModelKind::DampedHOQuadratic:
      return "damped_ho_quadratic";
    case ModelKind::DampedDoubleWell:
      return "damped_double_well";
    case ModelKind::CoupledOscillators:
      return "coupled_oscillators";
  }
  return "unknown";
}

ContactSystem build_system(const ModelSpec& spec) {
  check_finite(spec);
  switch (spec.kind) {
    case ModelKind::DampedHOLinear:
      return damped_ho(spec, /*quadratic=*/false);
    case ModelKind::DampedHOQuadratic:
      return damped_ho(spec, /*quadratic=*/true);
    case ModelKind::DampedDoubleWell:
      return double_well(spec);
    case ModelKind::CoupledOscillators:
      return coupled_oscillators(spec);
  }
  throw ContactError(ErrorCode::InvalidSpec, "unknown model kind");
}

std::vector<Experiment> default_experiments(ModelKind kind) {
  switch (kind) {
    case ModelKind::DampedHOLinear:
    case ModelKind::DampedHOQuadratic: {
      ModelSpec spec;
      spec.kind = kind;
      spec.omega = 1.0;
      spec.gamma = 0.1;
      Experiment e{kind == ModelKind::DampedHOLinear ? "A" : "B", spec,
                   initial_state({1.0}, {0.0}), run_config(50.0, 0.01)};
      return {e};
    }
    case ModelKind::DampedDoubleWell: {
      ModelSpec spec;
      spec.kind = kind;
      spec.a = 1.0;
      spec.gamma = 0.1;
      Experiment plus{"C+", spec, initial_state({2.0}, {0.0}),
                      run_config(50.0, 0.01)};
      Experiment minus{"C-", spec, initial_state({-2.0}, {0.0}),
                       run_config(50.0, 0.01)};
      return {plus, minus};
    }
    case ModelKind::CoupledOscillators: {
      ModelSpec uncoupled;
      uncoupled.kind = kind;
      uncoupled.gamma = 0.01;
      uncoupled.omega1_sq = 1.2;
      uncoupled.omega2_sq = 0.8;
      uncoupled.g = 0.0;
      ModelSpec coupled = uncoupled;
      coupled.g = 0.8;
      const ContactState s0 = initial_state({1.0, -1.0}, {0.0, 0.0});
      Experiment off{"D_g0.0", uncoupled, s0, run_config(100.0, 0.01)};
      Experiment on{"D_g0.8", coupled, s0, run_config(100.0, 0.01)};
      return {off, on};
    }
  }
  throw ContactError(ErrorCode::InvalidSpec, "unknown model kind");
}

}  // namespace contactdyn
