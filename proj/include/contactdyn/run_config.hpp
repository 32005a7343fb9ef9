#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "contactdyn/integrator.hpp"
#include "contactdyn/models.hpp"

namespace contactdyn {

struct OutputConfig {
  std::filesystem::path dir = ".";
  std::string csv = "trajectory.csv";
  std::string svg;     // empty: no plot
  std::string report;  // empty: no report file (.csv or .json)
};

/// Full configuration of one run: model, initial state, stepper, outputs.
struct RunConfig {
  ModelSpec model;
  ContactState initial;
  IntegratorConfig integ;
  OutputConfig output;
};

/// Starting configuration for a preset kind (first default experiment for
/// that kind; the double well starts at q0 = +2, the coupled pair at g = 0.8).
RunConfig preset_run_config(ModelKind kind);

ModelKind parse_model_kind(const std::string& text);   // throws ConfigError
Scheme parse_scheme(const std::string& text);          // throws ConfigError

/// Parses the flat `key = value` config format with sections
/// [model] [initial] [integrator] [output]. The [model] kind selects preset
/// defaults, all other keys override them. '#' starts a comment.
/// Throws ConfigError on unknown sections/keys or malformed values.
RunConfig parse_config(std::istream& in);

}  // namespace contactdyn
