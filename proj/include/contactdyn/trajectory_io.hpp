#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "contactdyn/diagnostics.hpp"
#include "contactdyn/integrator.hpp"

namespace contactdyn {

/// Serializes a double with 17 significant digits (round-trip exact).
std::string format_double(double x);

/// CSV with header `t,q1..qn,p1..pn,z,lambda,K,H`, one row per record.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Parses a trajectory CSV produced by write_trajectory_csv; bit-exact
/// round trip. Throws ConfigError on malformed input.
Trajectory read_trajectory_csv(std::istream& in);

/// Minimal static line plot of the q columns against t: fixed 800x500
/// viewBox, axes, one polyline and label per column.
void write_trajectory_svg(std::ostream& out, const Trajectory& traj,
                          const std::string& title);

void write_report_csv(std::ostream& out,
                      const std::vector<DiagnosticReport>& reports);
void write_report_json(std::ostream& out,
                       const std::vector<DiagnosticReport>& reports);

}  // namespace contactdyn
