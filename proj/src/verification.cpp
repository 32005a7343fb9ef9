#include "contactdyn/verification.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

#include "contactdyn/analytic.hpp"
#include "contactdyn/bracket.hpp"
#include "contactdyn/observable.hpp"
#include "contactdyn/vector_field.hpp"

namespace contactdyn {

namespace {

// Measured once against the analytic oracle and frozen as regression bounds.
constexpr double kAccuracyCBound = 0.5;       // |q - q_exact| <= C h^2, model A
constexpr double kDriftRatioLo = 3.5;         // O(h^2) halving window
constexpr double kDriftRatioHi = 4.5;
constexpr double kReductionDriftBound = 5e-4; // gamma=0 relative H drift
constexpr double kSyncLockedMin = 0.99;
constexpr double kSyncUnlockedMax = 0.95;
constexpr double kCoupledKDriftBound = 1e-4;  // gamma=0, g=0.8 relative K drift

std::vector<ModelSpec> model_zoo() {
  ModelSpec a;
  a.kind = ModelKind::DampedHOLinear;
  ModelSpec b;
  b.kind = ModelKind::DampedHOQuadratic;
  ModelSpec c;
  c.kind = ModelKind::DampedDoubleWell;
  ModelSpec d;
  d.kind = ModelKind::CoupledOscillators;
  d.gamma = 0.01;
  d.g = 0.8;
  return {a, b, c, d};
}

ContactState random_state(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> lam(0.5, 3.0);
  ContactState s;
  s.q.resize(n);
  s.p.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.q[i] = coord(rng);
    s.p[i] = coord(rng);
  }
  s.z = coord(rng);
  s.lambda = lam(rng);
  s.t = 0.0;
  return s;
}

Trajectory run_experiment(const Experiment& e) {
  return integrate(build_system(e.model), e.initial, e.config);
}

Trajectory trajectory_from_states(const ContactSystem& sys,
                                  std::vector<ContactState> states) {
  Trajectory traj;
  traj.states = std::move(states);
  for (const auto& s : traj.states) {
    const double K = sys.K(s);
    traj.K.push_back(K);
    traj.H.push_back(s.lambda * K);
  }
  return traj;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// --- random polynomial observables with exact partials ------------------

struct Monomial {
  double c = 1.0;
  std::vector<int> eq, ep;  // exponents per coordinate
  int ez = 0, el = 0;
};

double ipow(double x, int e) {
  double r = 1.0;
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

Observable polynomial_observable(std::vector<Monomial> terms, std::size_t n,
                                 std::string name) {
  Observable a;
  a.n = n;
  a.name = std::move(name);
  a.value = [terms, n](const ContactState& s) {
    double v = 0.0;
    for (const auto& m : terms) {
      double t = m.c * ipow(s.z, m.ez) * ipow(s.lambda, m.el);
      for (std::size_t i = 0; i < n; ++i) {
        t *= ipow(s.q[i], m.eq[i]) * ipow(s.p[i], m.ep[i]);
      }
      v += t;
    }
    return v;
  };
  a.d_q = [terms, n](const ContactState& s) {
    std::vector<double> g(n, 0.0);
    for (const auto& m : terms) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m.eq[j] == 0) continue;
        double t = m.c * m.eq[j] * ipow(s.q[j], m.eq[j] - 1) *
                   ipow(s.z, m.ez) * ipow(s.lambda, m.el);
        for (std::size_t i = 0; i < n; ++i) {
          t *= ipow(s.p[i], m.ep[i]);
          if (i != j) t *= ipow(s.q[i], m.eq[i]);
        }
        g[j] += t;
      }
    }
    return g;
  };
  a.d_p = [terms, n](const ContactState& s) {
    std::vector<double> g(n, 0.0);
    for (const auto& m : terms) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m.ep[j] == 0) continue;
        double t = m.c * m.ep[j] * ipow(s.p[j], m.ep[j] - 1) *
                   ipow(s.z, m.ez) * ipow(s.lambda, m.el);
        for (std::size_t i = 0; i < n; ++i) {
          t *= ipow(s.q[i], m.eq[i]);
          if (i != j) t *= ipow(s.p[i], m.ep[i]);
        }
        g[j] += t;
      }
    }
    return g;
  };
  a.d_z = [terms, n](const ContactState& s) {
    double g = 0.0;
    for (const auto& m : terms) {
      if (m.ez == 0) continue;
      double t = m.c * m.ez * ipow(s.z, m.ez - 1) * ipow(s.lambda, m.el);
      for (std::size_t i = 0; i < n; ++i) {
        t *= ipow(s.q[i], m.eq[i]) * ipow(s.p[i], m.ep[i]);
      }
      g += t;
    }
    return g;
  };
  a.d_lambda = [terms, n](const ContactState& s) {
    double g = 0.0;
    for (const auto& m : terms) {
      if (m.el == 0) continue;
      double t = m.c * m.el * ipow(s.lambda, m.el - 1) * ipow(s.z, m.ez);
      for (std::size_t i = 0; i < n; ++i) {
        t *= ipow(s.q[i], m.eq[i]) * ipow(s.p[i], m.ep[i]);
      }
      g += t;
    }
    return g;
  };
  return a;
}

Observable random_polynomial(std::mt19937& rng, std::size_t n,
                             const std::string& name) {
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::vector<Monomial> terms;
  const int count = nterms(rng);
  for (int k = 0; k < count; ++k) {
    Monomial m;
    m.c = coef(rng);
    m.eq.resize(n);
    m.ep.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      m.eq[i] = expo(rng);
      m.ep[i] = expo(rng);
    }
    m.ez = expo(rng);
    m.el = expo(rng);
    terms.push_back(m);
  }
  return polynomial_observable(std::move(terms), n, name);
}

Observable product_observable(const Observable& A, const Observable& B) {
  Observable out;
  out.n = A.n;
  out.name = A.name + "*" + B.name;
  out.value = [A, B](const ContactState& s) { return A.value(s) * B.value(s); };
  out.d_q = [A, B](const ContactState& s) {
    const double av = A.value(s);
    const double bv = B.value(s);
    auto ga = A.d_q(s);
    const auto gb = B.d_q(s);
    for (std::size_t i = 0; i < ga.size(); ++i) {
      ga[i] = ga[i] * bv + av * gb[i];
    }
    return ga;
  };
  out.d_p = [A, B](const ContactState& s) {
    const double av = A.value(s);
    const double bv = B.value(s);
    auto ga = A.d_p(s);
    const auto gb = B.d_p(s);
    for (std::size_t i = 0; i < ga.size(); ++i) {
      ga[i] = ga[i] * bv + av * gb[i];
    }
    return ga;
  };
  out.d_z = [A, B](const ContactState& s) {
    return A.d_z(s) * B.value(s) + A.value(s) * B.d_z(s);
  };
  out.d_lambda = [A, B](const ContactState& s) {
    return A.d_lambda(s) * B.value(s) + A.value(s) * B.d_lambda(s);
  };
  return out;
}

// lambda * (canonical bracket of the observables pulled back to lifted
// coordinates); independent route for the bracket scaling law.
double lifted_bracket_route(const Observable& A, const Observable& B,
                            const ContactState& s) {
  const auto Ap = A.d_p(s);
  const auto Aq = A.d_q(s);
  const auto Bp = B.d_p(s);
  const auto Bq = B.d_q(s);
  double pAp = 0.0, pBp = 0.0;
  for (std::size_t i = 0; i < s.dof(); ++i) {
    pAp += s.p[i] * Ap[i];
    pBp += s.p[i] * Bp[i];
  }
  // lifted partials by the chain rule
  const double Aq0 = A.d_z(s);
  const double Bq0 = B.d_z(s);
  const double Ap0 = A.d_lambda(s) - pAp / s.lambda;
  const double Bp0 = B.d_lambda(s) - pBp / s.lambda;
  double canon = Aq0 * Bp0 - Bq0 * Ap0;
  for (std::size_t i = 0; i < s.dof(); ++i) {
    canon += Aq[i] * (Bp[i] / s.lambda) - Bq[i] * (Ap[i] / s.lambda);
  }
  return s.lambda * canon;
}

// --- textbook velocity-Verlet oracle for the gamma=0 reduction ----------

void verlet_step(double omega, double h, double& q, double& p) {
  const double hh = 0.5 * h;
  const double p_half = p - hh * (omega * omega * q);
  q = q + h * p_half;
  p = p_half - hh * (omega * omega * q);
}

// --- individual checks ---------------------------------------------------

CheckResult check_model_partials() {
  std::mt19937 rng(20240811);
  double worst = 0.0;
  for (const auto& spec : model_zoo()) {
    const ContactSystem sys = build_system(spec);
    for (int k = 0; k < 1000; ++k) {
      worst = std::max(worst,
                       max_partial_deviation(sys, random_state(rng, sys.n)));
    }
  }
  return {"model_partials", worst <= 1e-6,
          "max FD deviation " + fmt(worst) + " (bound 1e-6)"};
}

CheckResult check_k_rate() {
  std::mt19937 rng(7);
  double worst = 0.0;
  for (const auto& spec : model_zoo()) {
    const ContactSystem sys = build_system(spec);
    for (int k = 0; k < 100; ++k) {
      const auto [lhs, rhs] = k_rate_identity(sys, random_state(rng, sys.n));
      worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
    }
  }
  return {"k_rate_identity", worst <= 1e-10,
          "max |lhs-rhs|/(1+|rhs|) = " + fmt(worst)};
}

CheckResult check_bracket_laws() {
  std::mt19937 rng(32);
  bool ok = true;
  std::string detail;

  // fundamental brackets
  for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    for (int k = 0; k < 20; ++k) {
      const ContactState s = random_state(rng, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const double qp =
              contact_bracket(coordinate_q(i, n), coordinate_p(j, n), s);
          if (std::abs(qp - (i == j ? 1.0 : 0.0)) > 1e-12) ok = false;
        }
        const double zp =
            contact_bracket(coordinate_z(n), coordinate_p(i, n), s);
        if (std::abs(zp + s.p[i]) > 1e-12 * (1.0 + std::abs(s.p[i])))
          ok = false;
      }
      const double zl =
          contact_bracket(coordinate_z(n), coordinate_lambda(n), s);
      if (std::abs(zl - s.lambda) > 1e-12 * (1.0 + s.lambda)) ok = false;
    }
  }
  if (!ok) detail += "fundamental brackets off; ";

  // antisymmetry, Leibniz, and the lambda-scaling law on random polynomials
  double worst_anti = 0.0, worst_leib = 0.0, worst_scale = 0.0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = (k % 2 == 0) ? 1 : 2;
    const ContactState s = random_state(rng, n);
    const Observable A = random_polynomial(rng, n, "A");
    const Observable B = random_polynomial(rng, n, "B");
    const Observable C = random_polynomial(rng, n, "C");

    const double ab = contact_bracket(A, B, s);
    const double ba = contact_bracket(B, A, s);
    worst_anti =
        std::max(worst_anti, std::abs(ab + ba) / (1.0 + std::abs(ab)));

    const double lhs = contact_bracket(A, product_observable(B, C), s);
    const double rhs = ab * C.value(s) + B.value(s) * contact_bracket(A, C, s);
    worst_leib = std::max(
        worst_leib, std::abs(lhs - rhs) / (1.0 + std::max(std::abs(lhs),
                                                          std::abs(rhs))));

    const double scaled = lifted_bracket_route(A, B, s);
    worst_scale =
        std::max(worst_scale, std::abs(ab - scaled) / (1.0 + std::abs(ab)));
  }
  if (worst_anti > 1e-12) ok = false;
  if (worst_leib > 1e-10) ok = false;
  if (worst_scale > 1e-10) ok = false;
  detail += "antisym " + fmt(worst_anti) + ", Leibniz " + fmt(worst_leib) +
            ", scaling " + fmt(worst_scale);
  return {"bracket_laws", ok, detail};
}

CheckResult check_bracket_field() {
  std::mt19937 rng(99);
  double worst = 0.0;
  for (const auto& spec : model_zoo()) {
    const ContactSystem sys = build_system(spec);
    const std::size_t n = sys.n;
    for (int k = 0; k < 100; ++k) {
      const ContactState s = random_state(rng, n);
      const StateDerivative d = contact_vector_field(sys, s);
      auto rel = [](double got, double want) {
        return std::abs(got - want) / (1.0 + std::abs(want));
      };
      for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(
            worst, rel(observable_rate(coordinate_q(i, n), sys, s), d.dq[i]));
        worst = std::max(
            worst, rel(observable_rate(coordinate_p(i, n), sys, s), d.dp[i]));
      }
      worst = std::max(worst,
                       rel(observable_rate(coordinate_z(n), sys, s), d.dz));
      worst = std::max(
          worst, rel(observable_rate(coordinate_lambda(n), sys, s), d.dlambda));
    }
  }
  return {"bracket_field_equivalence", worst <= 1e-12,
          "max coordinate-rate deviation " + fmt(worst)};
}

CheckResult check_lift_consistency() {
  std::mt19937 rng(4242);
  double worst_push = 0.0, worst_dH = 0.0, worst_grad = 0.0;
  for (const auto& spec : model_zoo()) {
    const ContactSystem sys = build_system(spec);
    for (int k = 0; k < 100; ++k) {
      const ContactState s = random_state(rng, sys.n);
      const StateDerivative d = contact_vector_field(sys, s);
      const LiftedState ls = lift(s);
      const LiftedDerivative ld = lifted_vector_field(sys, ls);

      auto rel = [](double got, double want) {
        return std::abs(got - want) / (1.0 + std::abs(want));
      };
      // push the lifted derivative down: p = p1/p0
      for (std::size_t i = 0; i < sys.n; ++i) {
        worst_push = std::max(worst_push, rel(ld.dq1[i], d.dq[i]));
        const double dp = ld.dp1[i] / ls.p0 - s.p[i] * ld.dp0 / ls.p0;
        worst_push = std::max(worst_push, rel(dp, d.dp[i]));
      }
      worst_push = std::max(worst_push, rel(ld.dq0, d.dz));
      worst_push = std::max(worst_push, rel(ld.dp0, d.dlambda));

      // H = lambda K is conserved along the exact flow
      const auto Kp = sys.K_p(s);
      const auto Kq = sys.K_q(s);
      double dK = sys.K_z(s) * d.dz;
      for (std::size_t i = 0; i < sys.n; ++i) {
        dK += Kp[i] * d.dp[i] + Kq[i] * d.dq[i];
      }
      const double H = s.lambda * sys.K(s);
      const double dH = s.lambda * dK + d.dlambda * sys.K(s);
      worst_dH = std::max(worst_dH, std::abs(dH) / (1.0 + std::abs(H)));

      // gradient of H dotted with the canonical field vanishes
      double grad = 0.0;
      for (std::size_t i = 0; i < sys.n; ++i) {
        grad += (s.lambda * Kq[i]) * ld.dq1[i] + Kp[i] * ld.dp1[i];
      }
      grad += (s.lambda * sys.K_z(s)) * ld.dq0 +
              (sys.K(s) - [&] {
                double pk = 0.0;
                for (std::size_t i = 0; i < sys.n; ++i) pk += s.p[i] * Kp[i];
                return pk;
              }()) * ld.dp0;
      worst_grad = std::max(worst_grad, std::abs(grad) / (1.0 + std::abs(H)));
    }
  }
  const bool ok = worst_push <= 1e-10 && worst_dH <= 1e-12 &&
                  worst_grad <= 1e-12;
  return {"lift_consistency", ok,
          "pushforward " + fmt(worst_push) + ", dH/dt " + fmt(worst_dH) +
              ", gradH.field " + fmt(worst_grad)};
}

CheckResult check_lambda_decoupling() {
  bool ok = true;
  std::string detail;
  for (ModelKind kind :
       {ModelKind::DampedHOLinear, ModelKind::DampedHOQuadratic,
        ModelKind::DampedDoubleWell, ModelKind::CoupledOscillators}) {
    for (const Experiment& e : default_experiments(kind)) {
      ContactState doubled = e.initial;
      doubled.lambda = 2.0;
      const ContactSystem sys = build_system(e.model);
      const Trajectory a = integrate(sys, e.initial, e.config);
      const Trajectory b = integrate(sys, doubled, e.config);
      if (a.states.size() != b.states.size()) {
        ok = false;
        detail += e.name + ": record count differs; ";
        continue;
      }
      for (std::size_t k = 0; k < a.states.size(); ++k) {
        const auto& sa = a.states[k];
        const auto& sb = b.states[k];
        if (std::memcmp(sa.q.data(), sb.q.data(),
                        sa.q.size() * sizeof(double)) != 0 ||
            std::memcmp(sa.p.data(), sb.p.data(),
                        sa.p.size() * sizeof(double)) != 0 ||
            sa.z != sb.z || sa.t != sb.t) {
          ok = false;
          detail += e.name + ": bits differ at record " + fmt(double(k)) + "; ";
          break;
        }
      }
    }
  }
  if (detail.empty()) detail = "(q,p,z) bit-identical for lambda0 in {1,2}";
  return {"lambda_decoupling", ok, detail};
}

CheckResult check_reduction() {
  ModelSpec spec;
  spec.kind = ModelKind::DampedHOLinear;
  spec.gamma = 0.0;
  const ContactSystem sys = build_system(spec);

  ContactState s;
  s.q = {1.0};
  s.p = {0.0};
  s.z = 1.0;
  s.lambda = 1.0;

  IntegratorConfig cfg;
  cfg.h = 0.01;
  cfg.n_steps = 10000;
  const Trajectory traj = integrate(sys, s, cfg);
  if (traj.failure) return {"conservative_reduction", false, "run failed"};

  bool bits_ok = true;
  double q = 1.0, p = 0.0;
  for (std::size_t k = 1; k < traj.states.size(); ++k) {
    verlet_step(spec.omega, cfg.h, q, p);
    if (q != traj.states[k].q[0] || p != traj.states[k].p[0] ||
        traj.states[k].lambda != 1.0) {
      bits_ok = false;
      break;
    }
  }

  const DiagnosticReport drift = hamiltonian_drift(traj, kReductionDriftBound);
  const bool ok = bits_ok && drift.pass;
  return {"conservative_reduction", ok,
          std::string(bits_ok ? "Verlet bits match" : "Verlet bits DIFFER") +
              ", rel H drift " + fmt(drift.max_abs / std::abs(traj.H.front()))};
}

CheckResult check_accuracy() {
  const Experiment e = default_experiments(ModelKind::DampedHOLinear).front();
  const ContactSystem sys = build_system(e.model);
  DampedHOParams par;
  par.omega = e.model.omega;
  par.gamma = e.model.gamma;
  par.q0 = e.initial.q[0];
  par.p0 = e.initial.p[0];
  par.z0 = e.initial.z;
  par.lambda0 = e.initial.lambda;

  auto max_q_error = [&](double h) {
    IntegratorConfig cfg = e.config;
    cfg.h = h;
    cfg.n_steps = static_cast<std::size_t>(std::llround(50.0 / h));
    const Trajectory traj = integrate(sys, e.initial, cfg);
    const auto ref = analytic_damped_ho_series(par, traj.times(), 1e-3);
    double worst = 0.0;
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
      worst = std::max(worst, std::abs(traj.states[k].q[0] - ref[k].q[0]));
    }
    return worst;
  };

  const double e_coarse = max_q_error(0.02);
  const auto t0 = std::chrono::steady_clock::now();
  const double e_fine = max_q_error(0.01);
  const auto t1 = std::chrono::steady_clock::now();
  const double seconds = std::chrono::duration<double>(t1 - t0).count();

  const double ratio = e_coarse / e_fine;
  const bool ok = ratio >= 3.5 && ratio <= 4.5 &&
                  e_fine <= kAccuracyCBound * 0.01 * 0.01 && seconds < 1.0;
  return {"leapfrog_accuracy", ok,
          "err(h=0.01) " + fmt(e_fine) + ", halving ratio " + fmt(ratio) +
              ", runtime " + fmt(seconds) + "s"};
}

CheckResult check_conservation_suite() {
  const Experiment e = default_experiments(ModelKind::DampedHOLinear).front();
  const ContactSystem sys = build_system(e.model);

  auto drift_at = [&](double h) {
    IntegratorConfig cfg = e.config;
    cfg.h = h;
    cfg.n_steps = static_cast<std::size_t>(std::llround(50.0 / h));
    const Trajectory traj = integrate(sys, e.initial, cfg);
    const DiagnosticReport r = hamiltonian_drift(traj, 1e-3);
    return std::pair<double, bool>{r.max_abs / std::abs(traj.H.front()),
                                   r.pass};
  };

  const auto [rel_h, pass_h] = drift_at(0.01);
  const auto [rel_h2, pass_h2] = drift_at(0.005);
  const double ratio = rel_h / rel_h2;
  const bool ok =
      pass_h && ratio >= kDriftRatioLo && ratio <= kDriftRatioHi;
  (void)pass_h2;
  return {"conservation", ok,
          "rel drift " + fmt(rel_h) + " at h=0.01, halving ratio " +
              fmt(ratio)};
}

CheckResult check_convergence() {
  const Experiment e = default_experiments(ModelKind::DampedHOLinear).front();
  const ContactSystem sys = build_system(e.model);
  DampedHOParams par;
  par.q0 = e.initial.q[0];
  par.p0 = e.initial.p[0];
  par.z0 = e.initial.z;
  par.lambda0 = e.initial.lambda;
  par.omega = e.model.omega;
  par.gamma = e.model.gamma;
  auto reference = [par](double t) { return analytic_damped_ho(par, t, 1e-4); };

  const std::vector<double> hs{0.04, 0.02, 0.01, 0.005};
  const OrderEstimate lf = convergence_order(sys, e.initial, 10.0, hs,
                                             Scheme::HybridLeapfrog, reference);
  const OrderEstimate rk = convergence_order(sys, e.initial, 10.0, hs,
                                             Scheme::RK4Reference, reference);
  const bool ok = lf.valid && std::abs(lf.order - 2.0) <= 0.2 && rk.valid &&
                  std::abs(rk.order - 4.0) <= 0.3;
  return {"convergence_order", ok,
          "leapfrog order " + fmt(lf.order) + ", RK4 order " + fmt(rk.order)};
}

CheckResult check_slower_decay() {
  const Trajectory a =
      run_experiment(default_experiments(ModelKind::DampedHOLinear).front());
  const Trajectory b =
      run_experiment(default_experiments(ModelKind::DampedHOQuadratic).front());
  auto late_peak = [](const Trajectory& traj) {
    double peak = 0.0;
    for (const auto& s : traj.states) {
      if (s.t >= 40.0 && s.t <= 50.0) {
        peak = std::max(peak, std::abs(s.q[0]));
      }
    }
    return peak;
  };
  const double peak_a = late_peak(a);
  const double peak_b = late_peak(b);
  return {"slower_decay_quadratic", peak_b > peak_a,
          "late |q| peaks: quadratic " + fmt(peak_b) + " vs linear " +
              fmt(peak_a)};
}

CheckResult check_symmetry() {
  const auto exps = default_experiments(ModelKind::DampedDoubleWell);
  const Trajectory plus = run_experiment(exps[0]);
  const Trajectory minus = run_experiment(exps[1]);
  const DiagnosticReport r = symmetry_check_space_inversion(plus, minus);
  return {"space_inversion", r.pass,
          "mirror residual " + fmt(r.max_abs) + " (bound 1e-12)"};
}

CheckResult check_sync() {
  const auto exps = default_experiments(ModelKind::CoupledOscillators);
  const double score_off = sync_metric(run_experiment(exps[0]));
  const double score_on = sync_metric(run_experiment(exps[1]));

  Experiment lossless = exps[1];
  lossless.model.gamma = 0.0;
  const Trajectory cons = run_experiment(lossless);
  double k_drift = 0.0;
  for (double K : cons.K) {
    k_drift = std::max(k_drift, std::abs(K - cons.K.front()));
  }
  k_drift /= std::abs(cons.K.front());

  const bool ok = score_on >= kSyncLockedMin && score_off <= kSyncUnlockedMax &&
                  k_drift <= kCoupledKDriftBound;
  return {"synchronization", ok,
          "score(g=0.8) " + fmt(score_on) + ", score(g=0) " + fmt(score_off) +
              ", lossless rel K drift " + fmt(k_drift)};
}

CheckResult check_action() {
  const Experiment e = default_experiments(ModelKind::DampedHOLinear).front();
  const ContactSystem sys = build_system(e.model);
  const Trajectory traj = integrate(sys, e.initial, e.config);
  const ActionReport r = action_residual(traj, sys, 1e-3);
  const bool ok = r.algebraic.max_abs == 0.0 && r.quadrature.pass;
  return {"action_identity", ok,
          "algebraic " + fmt(r.algebraic.max_abs) + ", quadrature " +
              fmt(r.quadrature.max_abs)};
}

CheckResult check_herglotz() {
  bool ok = true;
  std::string detail;

  {  // linear damped oscillator vs the closed form under the same stencil
    const Experiment e = default_experiments(ModelKind::DampedHOLinear).front();
    const ContactSystem sys = build_system(e.model);
    const Trajectory traj = integrate(sys, e.initial, e.config);
    DampedHOParams par;
    par.omega = e.model.omega;
    par.gamma = e.model.gamma;
    par.q0 = e.initial.q[0];
    par.p0 = e.initial.p[0];
    par.z0 = e.initial.z;
    par.lambda0 = e.initial.lambda;
    const Trajectory ref = trajectory_from_states(
        sys, analytic_damped_ho_series(par, traj.times(), 1e-2));
    const double got = herglotz_residual(traj, e.model, 1.0).max_abs;
    const double base = herglotz_residual(ref, e.model, 1.0).max_abs;
    if (got > 2.0 * base) ok = false;
    detail += "linear " + fmt(got) + " vs ref " + fmt(base);
  }
  {  // double well vs the RK4 reference under the same stencil
    const Experiment e =
        default_experiments(ModelKind::DampedDoubleWell).front();
    const ContactSystem sys = build_system(e.model);
    const Trajectory traj = integrate(sys, e.initial, e.config);
    IntegratorConfig cfg = e.config;
    cfg.scheme = Scheme::RK4Reference;
    const Trajectory ref = integrate(sys, e.initial, cfg);
    const double got = herglotz_residual(traj, e.model, 1.0).max_abs;
    const double base = herglotz_residual(ref, e.model, 1.0).max_abs;
    if (got > 2.0 * base) ok = false;
    detail += "; double well " + fmt(got) + " vs ref " + fmt(base);
  }
  return {"herglotz", ok, detail};
}

}  // namespace

CheckResult check_conservation(const ContactSystem& sys,
                               const ContactState& s0, double h,
                               std::size_t n_steps, double rel_threshold) {
  IntegratorConfig cfg;
  cfg.h = h;
  cfg.n_steps = n_steps;
  const Trajectory traj = integrate(sys, s0, cfg);
  if (traj.failure) {
    return {"conservation", false,
            std::string("integration failed: ") + traj.failure->message};
  }
  const DiagnosticReport r = hamiltonian_drift(traj, rel_threshold);
  return {"conservation", r.pass,
          "rel drift " + fmt(r.max_abs / std::abs(traj.H.front()))};
}

std::vector<std::string> check_names() {
  return {"model_partials",       "k_rate_identity",
          "bracket_laws",         "bracket_field_equivalence",
          "lift_consistency",     "lambda_decoupling",
          "conservation",         "conservative_reduction",
          "leapfrog_accuracy",    "convergence_order",
          "slower_decay_quadratic", "space_inversion",
          "synchronization",      "action_identity",
          "herglotz"};
}

std::vector<CheckResult> run_checks(const std::string& only) {
  using Runner = CheckResult (*)();
  const std::pair<const char*, Runner> table[] = {
      {"model_partials", check_model_partials},
      {"k_rate_identity", check_k_rate},
      {"bracket_laws", check_bracket_laws},
      {"bracket_field_equivalence", check_bracket_field},
      {"lift_consistency", check_lift_consistency},
      {"lambda_decoupling", check_lambda_decoupling},
      {"conservation", check_conservation_suite},
      {"conservative_reduction", check_reduction},
      {"leapfrog_accuracy", check_accuracy},
      {"convergence_order", check_convergence},
      {"slower_decay_quadratic", check_slower_decay},
      {"space_inversion", check_symmetry},
      {"synchronization", check_sync},
      {"action_identity", check_action},
      {"herglotz", check_herglotz},
  };

  std::vector<CheckResult> results;
  for (const auto& [name, runner] : table) {
    if (!only.empty() && std::string(name).find(only) == std::string::npos) {
      continue;
    }
    results.push_back(runner());
  }
  return results;
}

}  // namespace contactdyn
