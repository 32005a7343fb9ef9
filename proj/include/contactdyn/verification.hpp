#pragma once

#include <string>
#include <vector>

#include "contactdyn/diagnostics.hpp"
#include "contactdyn/models.hpp"

namespace contactdyn {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Names of all built-in verification checks, in execution order.
std::vector<std::string> check_names();

/// Runs the built-in verification suite (bracket laws, field consistency,
/// lambda decoupling, conservation and drift bounds, convergence orders,
/// symmetry, synchronization, action/Herglotz identities). `only` filters by
/// exact name; empty runs everything.
std::vector<CheckResult> run_checks(const std::string& only = "");

/// Conservation check against an arbitrary system/initial state: relative
/// drift of lambda*K over a default-style run must stay within threshold.
/// Exposed separately so a deliberately broken system can be fed in.
CheckResult check_conservation(const ContactSystem& sys,
                               const ContactState& s0, double h,
                               std::size_t n_steps, double rel_threshold);

}  // namespace contactdyn
