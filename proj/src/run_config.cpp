#include "contactdyn/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <map>
#include <sstream>

namespace contactdyn {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  auto end = s.find_last_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

double to_double(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || end != begin + value.size() || !std::isfinite(v)) {
    throw ContactError(ErrorCode::ConfigError,
                       "bad numeric value for '" + key + "': " + value);
  }
  return v;
}

std::size_t to_count(const std::string& key, const std::string& value) {
  const double v = to_double(key, value);
  if (v < 0.0 || v != std::floor(v)) {
    throw ContactError(ErrorCode::ConfigError,
                       "'" + key + "' must be a nonnegative integer");
  }
  return static_cast<std::size_t>(v);
}

std::vector<double> to_vector(const std::string& key,
                              const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(to_double(key, trim(item)));
  }
  if (out.empty()) {
    throw ContactError(ErrorCode::ConfigError, "empty vector for '" + key + "'");
  }
  return out;
}

}  // namespace

ModelKind parse_model_kind(const std::string& text) {
  const std::string k = lower(trim(text));
  if (k == "a" || k == "damped_ho_linear") return ModelKind::DampedHOLinear;
  if (k == "b" || k == "damped_ho_quadratic")
    return ModelKind::DampedHOQuadratic;
  if (k == "c" || k == "damped_double_well") return ModelKind::DampedDoubleWell;
  if (k == "d" || k == "coupled_oscillators")
    return ModelKind::CoupledOscillators;
  throw ContactError(ErrorCode::ConfigError, "unknown model kind: " + text);
}

Scheme parse_scheme(const std::string& text) {
  const std::string s = lower(trim(text));
  if (s == "leapfrog" || s == "hybrid_leapfrog") return Scheme::HybridLeapfrog;
  if (s == "rk4" || s == "rk4_reference") return Scheme::RK4Reference;
  throw ContactError(ErrorCode::ConfigError, "unknown scheme: " + text);
}

RunConfig preset_run_config(ModelKind kind) {
  const auto experiments = default_experiments(kind);
  // Double well defaults to q0 = +2, the coupled pair to g = 0.8.
  const Experiment& e = (kind == ModelKind::CoupledOscillators)
                            ? experiments.back()
                            : experiments.front();
  RunConfig cfg;
  cfg.model = e.model;
  cfg.initial = e.initial;
  cfg.integ = e.config;
  return cfg;
}

RunConfig parse_config(std::istream& in) {
  // First pass: collect (section, key) -> value, preserving order checks.
  std::map<std::string, std::map<std::string, std::string>> sections;
  std::string line;
  std::string current;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ContactError(ErrorCode::ConfigError,
                           "unterminated section header at line " +
                               std::to_string(lineno));
      }
      current = lower(trim(line.substr(1, line.size() - 2)));
      if (current != "model" && current != "initial" &&
          current != "integrator" && current != "output") {
        throw ContactError(ErrorCode::ConfigError,
                           "unknown section [" + current + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos || current.empty()) {
      throw ContactError(ErrorCode::ConfigError,
                         "expected 'key = value' at line " +
                             std::to_string(lineno));
    }
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string value = trim(line.substr(eq + 1));
    sections[current][key] = value;
  }

  ModelKind kind = ModelKind::DampedHOLinear;
  if (auto it = sections["model"].find("kind"); it != sections["model"].end()) {
    kind = parse_model_kind(it->second);
  }
  RunConfig cfg = preset_run_config(kind);

  for (const auto& [key, value] : sections["model"]) {
    if (key == "kind") continue;
    if (key == "omega") cfg.model.omega = to_double(key, value);
    else if (key == "gamma") cfg.model.gamma = to_double(key, value);
    else if (key == "a") cfg.model.a = to_double(key, value);
    else if (key == "omega1_sq") cfg.model.omega1_sq = to_double(key, value);
    else if (key == "omega2_sq") cfg.model.omega2_sq = to_double(key, value);
    else if (key == "g") cfg.model.g = to_double(key, value);
    else
      throw ContactError(ErrorCode::ConfigError,
                         "unknown [model] key: " + key);
  }
  for (const auto& [key, value] : sections["initial"]) {
    if (key == "q") cfg.initial.q = to_vector(key, value);
    else if (key == "p") cfg.initial.p = to_vector(key, value);
    else if (key == "z") cfg.initial.z = to_double(key, value);
    else if (key == "lambda") cfg.initial.lambda = to_double(key, value);
    else if (key == "t") cfg.initial.t = to_double(key, value);
    else
      throw ContactError(ErrorCode::ConfigError,
                         "unknown [initial] key: " + key);
  }
  for (const auto& [key, value] : sections["integrator"]) {
    if (key == "h") cfg.integ.h = to_double(key, value);
    else if (key == "steps") cfg.integ.n_steps = to_count(key, value);
    else if (key == "record_every") {
      cfg.integ.record_every = to_count(key, value);
      if (cfg.integ.record_every == 0) {
        throw ContactError(ErrorCode::ConfigError, "record_every must be >= 1");
      }
    } else if (key == "scheme") {
      cfg.integ.scheme = parse_scheme(value);
    } else {
      throw ContactError(ErrorCode::ConfigError,
                         "unknown [integrator] key: " + key);
    }
  }
  for (const auto& [key, value] : sections["output"]) {
    if (key == "dir") cfg.output.dir = value;
    else if (key == "csv") cfg.output.csv = value;
    else if (key == "svg") cfg.output.svg = value;
    else if (key == "report") cfg.output.report = value;
    else
      throw ContactError(ErrorCode::ConfigError,
                         "unknown [output] key: " + key);
  }
  return cfg;
}

}  // namespace contactdyn
