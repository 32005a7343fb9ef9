#pragma once

#include <functional>
#include <string>
#include <vector>

#include "contactdyn/state.hpp"

namespace contactdyn {

/// A contact Hamiltonian K(p, q, z) together with its exact partial
/// derivatives. K must not depend on lambda or t; every consumer in this
/// library (vector fields, bracket, stepper) relies on that.
///
/// Partials are user-supplied, never finite-differenced: integration accuracy
/// must not inherit finite-difference noise. Use max_partial_deviation to
/// cross-check a hand-written system against central differences of K.
struct ContactSystem {
  std::size_t n = 1;
  std::function<double(const ContactState&)> K;
  std::function<std::vector<double>(const ContactState&)> K_p;
  std::function<std::vector<double>(const ContactState&)> K_q;
  std::function<double(const ContactState&)> K_z;
  std::string label;
};

/// Largest relative deviation between the supplied partials and central
/// finite differences of K at s (step cbrt(machine eps)*max(1,|x|)).
double max_partial_deviation(const ContactSystem& sys, const ContactState& s);

}  // namespace contactdyn
