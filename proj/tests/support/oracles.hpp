#pragma once

// Independent oracles for the test suites. Everything here is written from
// the governing equations directly, not by calling the implementation under
// test, so disagreements are meaningful.

#include <random>
#include <vector>

#include "contactdyn/integrator.hpp"
#include "contactdyn/state.hpp"
#include "contactdyn/system.hpp"

namespace oracles {

/// Second, independently written transcription of the staggered leap-frog
/// recursion. Keeps the momentum update coupled to the lambda ratios
/// (p' = (lambda^n / lambda^{n+1/2}) * (...)) instead of the decoupled
/// division form, so it exercises a different arithmetic route.
contactdyn::ContactState leapfrog_lambda_route(const contactdyn::ContactSystem& sys,
                                               const contactdyn::ContactState& s,
                                               double h);

/// Textbook velocity-Verlet step for K = (p^2 + omega^2 q^2)/2 (one degree of
/// freedom, no damping).
void verlet_step(double omega, double h, double& q, double& p);

/// Valid random state: q,p,z in [-2,2], lambda in [0.5,3].
contactdyn::ContactState random_state(std::mt19937& rng, std::size_t n);

/// Builds a trajectory container from precomputed states (fills K and H).
contactdyn::Trajectory trajectory_from_states(
    const contactdyn::ContactSystem& sys,
    std::vector<contactdyn::ContactState> states);

}  // namespace oracles
