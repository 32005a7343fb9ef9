#pragma once

#include <functional>
#include <string>
#include <vector>

#include "contactdyn/state.hpp"
#include "contactdyn/system.hpp"

namespace contactdyn {

/// Scalar function A(q, p, z, lambda) with its partial derivatives, the
/// argument of the contact bracket. Unlike ContactSystem, an Observable may
/// depend on lambda.
struct Observable {
  std::size_t n = 1;
  std::string name;
  std::function<double(const ContactState&)> value;
  std::function<std::vector<double>(const ContactState&)> d_q;
  std::function<std::vector<double>(const ContactState&)> d_p;
  std::function<double(const ContactState&)> d_z;
  std::function<double(const ContactState&)> d_lambda;
};

/// Builds an Observable from a value function alone; partials are central
/// finite differences with step cbrt(machine eps)*max(1,|coordinate|).
Observable observable_from_value(std::string name, std::size_t n,
                                 std::function<double(const ContactState&)> f);

// Coordinate observables q_i, p_i, z, lambda with exact partials.
Observable coordinate_q(std::size_t i, std::size_t n);
Observable coordinate_p(std::size_t i, std::size_t n);
Observable coordinate_z(std::size_t n);
Observable coordinate_lambda(std::size_t n);

/// Adapts a ContactSystem's K into an Observable (d_lambda is identically 0:
/// K never depends on lambda).
Observable system_observable(const ContactSystem& sys);

}  // namespace contactdyn
