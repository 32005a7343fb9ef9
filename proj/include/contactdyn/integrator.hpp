#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "contactdyn/state.hpp"
#include "contactdyn/system.hpp"

namespace contactdyn {

enum class Scheme {
  HybridLeapfrog,
  RK4Reference,
};

struct IntegratorConfig {
  double h = 0.01;
  std::size_t n_steps = 0;
  std::size_t record_every = 1;  // output thinning
  Scheme scheme = Scheme::HybridLeapfrog;
};

struct StepFailure {
  ErrorCode code = ErrorCode::NonFinite;
  std::size_t step_index = 0;  // 1-based index of the failing step
  std::string message;
};

/// Time-ordered sequence of recorded states with per-record K and H = lambda*K.
/// When integration aborts, `failure` is set and the records up to the last
/// good state are kept.
struct Trajectory {
  std::vector<ContactState> states;
  std::vector<double> K;
  std::vector<double> H;
  std::optional<StepFailure> failure;

  std::vector<double> times() const;
};

/// One step of the hybrid leap-frog scheme, a staggered explicit update of
/// (q, p, z, lambda) that reduces to Stormer-Verlet when K_z == 0.
///
/// Order of operations (hh = h/2, all step-n partials at (p^n, q^n, z^n)):
///   1. auxiliary half steps  z' = z + hh*(K - p.K_p),  q' = q + hh*K_p
///   2. momentum half step    p' = (p - hh*K_q) / (1 - hh*K_z)
///   3. full steps at the midpoint (p', q', z'):
///        z_new = z + h*(K - p'.K_p)',  q_new = q + h*K_p'
///   4. lambda_new = lambda*(1 - hh*K_z) / (1 + hh*K_z+)
///   5. p_new = p'*(1 + hh*K_z+) - hh*K_q+
/// where the step-(n+1) partials K_z+, K_q+ are evaluated at
/// (p', q_new, z_new). The (q, p, z) path never reads lambda; the scheme is
/// exact in this respect because every K evaluation is done on a state whose
/// lambda slot is fixed to 1.
///
/// Throws StepSingular when |1 -/+ hh*K_z| <= 1e-12, NonFinite on NaN/Inf.
ContactState hybrid_leapfrog_step(const ContactSystem& sys,
                                  const ContactState& s, double h);

/// Classical fourth-order Runge-Kutta on the full (q, p, z, lambda) contact
/// vector field. Reference oracle for the leap-frog scheme.
ContactState rk4_reference_step(const ContactSystem& sys,
                                const ContactState& s, double h);

/// Applies cfg.n_steps steps of the configured scheme to s0, recording every
/// cfg.record_every-th state plus the final one (the initial state is always
/// record 0). On a step error the partial trajectory is returned with
/// `failure` set to the error code and 1-based step index.
Trajectory integrate(const ContactSystem& sys, const ContactState& s0,
                     const IntegratorConfig& cfg);

struct OrderEstimate {
  double order = 0.0;
  bool valid = false;
  std::string note;
};

/// Least-squares slope of log(error at T) vs log(h) over h_list, where the
/// error is the (q, p, z) distance at time T against `reference` (or, when no
/// reference is given, against an RK4 run at min(h_list)/64). Returns an
/// invalid estimate when the errors sit at the rounding floor.
/// Throws InsufficientData for fewer than two step sizes.
OrderEstimate convergence_order(
    const ContactSystem& sys, const ContactState& s0, double T,
    const std::vector<double>& h_list, Scheme scheme,
    const std::function<ContactState(double)>& reference = {});

}  // namespace contactdyn
