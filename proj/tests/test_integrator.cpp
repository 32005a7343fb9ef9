#include <cmath>
#include <cstring>
#include <random>

#include "contactdyn/analytic.hpp"
#include "contactdyn/integrator.hpp"
#include "contactdyn/models.hpp"
#include "contactdyn/vector_field.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace contactdyn;

namespace {

ContactSystem free_particle() {
  ContactSystem sys;
  sys.n = 1;
  sys.label = "free_particle";
  sys.K = [](const ContactState& s) { return 0.5 * s.p[0] * s.p[0]; };
  sys.K_p = [](const ContactState& s) { return s.p; };
  sys.K_q = [](const ContactState&) { return std::vector<double>{0.0}; };
  sys.K_z = [](const ContactState&) { return 0.0; };
  return sys;
}

ContactState state1(double q, double p, double z, double lambda) {
  ContactState s;
  s.q = {q};
  s.p = {p};
  s.z = z;
  s.lambda = lambda;
  return s;
}

std::vector<ModelSpec> zoo() {
  ModelSpec a, b, c, d;
  a.kind = ModelKind::DampedHOLinear;
  b.kind = ModelKind::DampedHOQuadratic;
  c.kind = ModelKind::DampedDoubleWell;
  d.kind = ModelKind::CoupledOscillators;
  d.gamma = 0.01;
  d.g = 0.8;
  return {a, b, c, d};
}

}  // namespace

TEST_CASE("free particle step") {
  const ContactState out =
      hybrid_leapfrog_step(free_particle(), state1(0.0, 1.0, 0.0, 1.0), 0.1);
  CHECK(out.q[0] == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(out.p[0] == 1.0);
  CHECK(out.z == doctest::Approx(-0.05).epsilon(1e-15));
  CHECK(out.lambda == 1.0);
  CHECK(out.t == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("step matches an independent transcription of the recursion") {
  // the oracle keeps the momentum update coupled through the lambda ratios
  std::mt19937 rng(91);
  for (const auto& spec : zoo()) {
    const ContactSystem sys = build_system(spec);
    for (int k = 0; k < 20; ++k) {
      const ContactState s = oracles::random_state(rng, sys.n);
      const ContactState got = hybrid_leapfrog_step(sys, s, 0.01);
      const ContactState want = oracles::leapfrog_lambda_route(sys, s, 0.01);
      for (std::size_t i = 0; i < sys.n; ++i) {
        CHECK(std::abs(got.q[i] - want.q[i]) <=
              1e-15 * (1.0 + std::abs(want.q[i])));
        CHECK(std::abs(got.p[i] - want.p[i]) <=
              1e-15 * (1.0 + std::abs(want.p[i])));
      }
      CHECK(std::abs(got.z - want.z) <= 1e-15 * (1.0 + std::abs(want.z)));
      CHECK(std::abs(got.lambda - want.lambda) <=
            1e-15 * (1.0 + std::abs(want.lambda)));
    }
  }
}

TEST_CASE("default linear-oscillator run agrees with the oracle transcription") {
  const Experiment e = default_experiments(ModelKind::DampedHOLinear).front();
  const ContactSystem sys = build_system(e.model);
  ContactState oracle = e.initial;
  ContactState impl = e.initial;
  for (int k = 0; k < 500; ++k) {
    oracle = oracles::leapfrog_lambda_route(sys, oracle, e.config.h);
    impl = hybrid_leapfrog_step(sys, impl, e.config.h);
  }
  CHECK(std::abs(impl.q[0] - oracle.q[0]) <= 1e-12);
  CHECK(std::abs(impl.p[0] - oracle.p[0]) <= 1e-12);
  CHECK(std::abs(impl.z - oracle.z) <= 1e-12);
  CHECK(std::abs(impl.lambda - oracle.lambda) <= 1e-12);
}

TEST_CASE("gamma = 0 reduces to Stormer-Verlet bit for bit") {
  ModelSpec spec;
  spec.kind = ModelKind::DampedHOLinear;
  spec.gamma = 0.0;
  const ContactSystem sys = build_system(spec);

  ContactState s = state1(1.0, 0.0, 1.0, 1.0);
  double q = 1.0, p = 0.0;
  for (int k = 0; k < 1000; ++k) {
    s = hybrid_leapfrog_step(sys, s, 0.01);
    oracles::verlet_step(spec.omega, 0.01, q, p);
    REQUIRE(s.q[0] == q);
    REQUIRE(s.p[0] == p);
    REQUIRE(s.lambda == 1.0);
  }
}

TEST_CASE("the lambda update never feeds back into (q, p, z)") {
  for (const auto& spec : zoo()) {
    const ContactSystem sys = build_system(spec);
    ContactState a = (sys.n == 1) ? state1(1.0, 0.3, 1.0, 1.0)
                                  : ContactState{{1.0, -1.0}, {0.0, 0.0},
                                                 1.0, 1.0, 0.0};
    ContactState b = a;
    b.lambda = 2.0;
    for (int k = 0; k < 100; ++k) {
      a = hybrid_leapfrog_step(sys, a, 0.01);
      b = hybrid_leapfrog_step(sys, b, 0.01);
      REQUIRE(std::memcmp(a.q.data(), b.q.data(),
                          a.q.size() * sizeof(double)) == 0);
      REQUIRE(std::memcmp(a.p.data(), b.p.data(),
                          a.p.size() * sizeof(double)) == 0);
      REQUIRE(a.z == b.z);
    }
  }
}

TEST_CASE("one step is consistent with the vector field") {
  // (step(s,h) - s)/h = field + (h/2) d(field)/dt + O(h^2); at h = 1e-6 the
  // curvature term caps the componentwise error near 1e-5 on the model zoo,
  // and halving h halves it.
  std::mt19937 rng(92);
  for (const auto& spec : zoo()) {
    const ContactSystem sys = build_system(spec);
    for (int k = 0; k < 50; ++k) {
      const ContactState s = oracles::random_state(rng, sys.n);
      const StateDerivative f = contact_vector_field(sys, s);
      auto worst_err = [&](double h) {
        const ContactState s1 = hybrid_leapfrog_step(sys, s, h);
        auto rel = [](double fd, double ex) {
          return std::abs(fd - ex) / (1.0 + std::abs(ex));
        };
        double w = 0.0;
        for (std::size_t i = 0; i < sys.n; ++i) {
          w = std::max(w, rel((s1.q[i] - s.q[i]) / h, f.dq[i]));
          w = std::max(w, rel((s1.p[i] - s.p[i]) / h, f.dp[i]));
        }
        w = std::max(w, rel((s1.z - s.z) / h, f.dz));
        w = std::max(w, rel((s1.lambda - s.lambda) / h, f.dlambda));
        return w;
      };
      const double e1 = worst_err(1e-6);
      CHECK(e1 <= 2e-5);
      if (e1 > 1e-9) {  // above the rounding floor the error is O(h)
        CHECK(worst_err(5e-7) <= 0.7 * e1);
      }
    }
  }
}

TEST_CASE("singular half-step denominators are reported") {
  // (h/2) K_z = 1 at the initial state makes the momentum denominator vanish
  ModelSpec spec;
  spec.kind = ModelKind::DampedHOQuadratic;
  spec.gamma = 100.0;
  const ContactSystem sys = build_system(spec);
  const ContactState s = state1(1.0, 0.0, -1.0, 1.0);  // K_z = +200
  CHECK_THROWS_AS(hybrid_leapfrog_step(sys, s, 0.01), ContactError);

  IntegratorConfig cfg;
  cfg.h = 0.01;
  cfg.n_steps = 5;
  const Trajectory traj = integrate(sys, s, cfg);
  REQUIRE(traj.failure.has_value());
  CHECK(traj.failure->code == ErrorCode::StepSingular);
  CHECK(traj.failure->step_index == 1);
  CHECK(traj.states.size() == 1);  // partial trajectory: the initial record
}

TEST_CASE("integrate with zero steps returns only the initial state") {
  IntegratorConfig cfg;
  cfg.n_steps = 0;
  const Trajectory traj =
      integrate(free_particle(), state1(1.0, 0.5, 0.0, 1.0), cfg);
  REQUIRE(traj.states.size() == 1);
  CHECK(traj.states[0].q[0] == 1.0);
  CHECK(traj.K[0] == 0.125);
  CHECK(traj.H[0] == 0.125);
  CHECK(!traj.failure);
}

TEST_CASE("record thinning keeps every k-th state plus the final one") {
  IntegratorConfig cfg;
  cfg.h = 0.1;
  cfg.n_steps = 25;
  cfg.record_every = 10;
  const Trajectory traj =
      integrate(free_particle(), state1(0.0, 1.0, 0.0, 1.0), cfg);
  REQUIRE(traj.states.size() == 4);  // records at steps 0, 10, 20, 25
  CHECK(traj.states[1].t == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(traj.states[2].t == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(traj.states[3].t == doctest::Approx(2.5).epsilon(1e-12));
  // strictly increasing record times
  for (std::size_t k = 1; k < traj.states.size(); ++k) {
    CHECK(traj.states[k].t > traj.states[k - 1].t);
  }
}

TEST_CASE("invalid integrator configurations are rejected") {
  IntegratorConfig cfg;
  cfg.h = 0.0;
  CHECK_THROWS_AS(integrate(free_particle(), state1(0, 1, 0, 1), cfg),
                  ContactError);
  cfg.h = 0.01;
  cfg.record_every = 0;
  CHECK_THROWS_AS(integrate(free_particle(), state1(0, 1, 0, 1), cfg),
                  ContactError);
}

TEST_CASE("RK4 is exact on the free particle") {
  const ContactState s0 = state1(0.0, 1.5, 0.0, 1.0);
  ContactState s = s0;
  for (int k = 0; k < 100; ++k) {
    s = rk4_reference_step(free_particle(), s, 0.1);
  }
  CHECK(s.q[0] == doctest::Approx(15.0).epsilon(1e-13));
  CHECK(s.p[0] == 1.5);
  // z moves at the constant rate K - p K_p = -p^2/2
  CHECK(s.z == doctest::Approx(-0.5 * 1.5 * 1.5 * 10.0).epsilon(1e-13));
}

TEST_CASE("RK4 with a tiny step matches the closed form") {
  ModelSpec spec;
  spec.kind = ModelKind::DampedHOLinear;
  const ContactSystem sys = build_system(spec);

  IntegratorConfig cfg;
  cfg.h = 1e-4;
  cfg.n_steps = 10000;  // T = 1
  cfg.record_every = cfg.n_steps;
  cfg.scheme = Scheme::RK4Reference;
  const Trajectory traj = integrate(sys, state1(1.0, 0.0, 1.0, 1.0), cfg);
  REQUIRE(!traj.failure);

  DampedHOParams par;  // defaults match the run
  const ContactState ref = analytic_damped_ho(par, 1.0, 1e-4);
  const ContactState& got = traj.states.back();
  CHECK(std::abs(got.q[0] - ref.q[0]) <= 1e-10);
  CHECK(std::abs(got.p[0] - ref.p[0]) <= 1e-10);
  CHECK(std::abs(got.z - ref.z) <= 1e-10);
  CHECK(std::abs(got.lambda - ref.lambda) <= 1e-10);
}

TEST_CASE("leap-frog error shrinks fourfold when the step is halved") {
  const Experiment e = default_experiments(ModelKind::DampedHOLinear).front();
  const ContactSystem sys = build_system(e.model);
  auto q_err_at = [&](double h) {
    IntegratorConfig cfg;
    cfg.h = h;
    cfg.n_steps = static_cast<std::size_t>(std::llround(10.0 / h));
    cfg.record_every = cfg.n_steps;
    const Trajectory traj = integrate(sys, e.initial, cfg);
    DampedHOParams par;
    const ContactState ref = analytic_damped_ho(par, 10.0, 1e-4);
    return std::abs(traj.states.back().q[0] - ref.q[0]);
  };
  const double ratio = q_err_at(0.02) / q_err_at(0.01);
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);
}

TEST_CASE("convergence orders of the two schemes") {
  const Experiment e = default_experiments(ModelKind::DampedHOLinear).front();
  const ContactSystem sys = build_system(e.model);
  DampedHOParams par;
  auto reference = [par](double t) { return analytic_damped_ho(par, t, 1e-4); };

  const std::vector<double> hs{0.04, 0.02, 0.01, 0.005};
  const OrderEstimate lf = convergence_order(sys, e.initial, 10.0, hs,
                                             Scheme::HybridLeapfrog, reference);
  REQUIRE(lf.valid);
  CHECK(lf.order == doctest::Approx(2.0).epsilon(0.1));

  const OrderEstimate rk = convergence_order(sys, e.initial, 10.0, hs,
                                             Scheme::RK4Reference, reference);
  REQUIRE(rk.valid);
  CHECK(rk.order == doctest::Approx(4.0).epsilon(0.075));
}

TEST_CASE("convergence order needs at least two step sizes") {
  const Experiment e = default_experiments(ModelKind::DampedHOLinear).front();
  CHECK_THROWS_AS(convergence_order(build_system(e.model), e.initial, 10.0,
                                    {0.01}, Scheme::HybridLeapfrog),
                  ContactError);
}

TEST_CASE("degenerate error curves are flagged, not fitted") {
  // free particle: q, p and z are all integrated exactly
  const OrderEstimate est =
      convergence_order(free_particle(), state1(0.0, 1.0, 0.0, 1.0), 1.0,
                        {0.1, 0.05, 0.025}, Scheme::HybridLeapfrog);
  CHECK(!est.valid);
}

TEST_CASE("closed-form oscillator: initial condition and lambda growth") {
  DampedHOParams par;
  const ContactState at0 = analytic_damped_ho(par, 0.0, 1e-3);
  CHECK(at0.q[0] == 1.0);
  CHECK(at0.p[0] == 0.0);
  CHECK(at0.z == 1.0);
  CHECK(at0.lambda == 1.0);

  const ContactState at10 = analytic_damped_ho(par, 10.0, 1e-3);
  CHECK(at10.lambda ==
        doctest::Approx(2.718281828459045).epsilon(1e-12));  // e^{gamma t}
}

TEST_CASE("closed-form oscillator: conservative limit is a pure cosine") {
  DampedHOParams par;
  par.gamma = 0.0;
  const double two_pi = 2.0 * std::acos(-1.0);
  const ContactState s = analytic_damped_ho(par, two_pi, 1e-3);
  CHECK(std::abs(s.q[0] - 1.0) <= 1e-12);
  CHECK(std::abs(s.p[0]) <= 1e-12);
}

TEST_CASE("closed form rejects the overdamped regime") {
  DampedHOParams par;
  par.gamma = 2.0;  // = 2*omega
  CHECK_THROWS_AS(analytic_damped_ho(par, 1.0), ContactError);
  par.gamma = 2.5;
  CHECK_THROWS_AS(analytic_damped_ho(par, 1.0), ContactError);
}

TEST_CASE("closed form conserves lambda K to quadrature accuracy") {
  DampedHOParams par;
  const double H0 = 1.0 * (0.5 * (0.0 + 1.0) - 0.1 * 1.0);
  for (double t : {1.0, 5.0, 10.0}) {
    const ContactState s = analytic_damped_ho(par, t, 1e-4);
    const double K = 0.5 * (s.p[0] * s.p[0] + s.q[0] * s.q[0]) - 0.1 * s.z;
    CHECK(std::abs(s.lambda * K - H0) <= 1e-10);
  }
}

TEST_CASE("series evaluation matches pointwise evaluation") {
  DampedHOParams par;
  const std::vector<double> times{0.0, 0.5, 1.0, 2.5};
  const auto series = analytic_damped_ho_series(par, times, 1e-4);
  REQUIRE(series.size() == times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    const ContactState ref = analytic_damped_ho(par, times[k], 1e-4);
    CHECK(series[k].q[0] == doctest::Approx(ref.q[0]).epsilon(1e-13));
    CHECK(std::abs(series[k].z - ref.z) <= 1e-12);
  }
}
