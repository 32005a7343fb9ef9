#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "contactdyn/analytic.hpp"
#include "contactdyn/diagnostics.hpp"
#include "contactdyn/run_config.hpp"
#include "contactdyn/trajectory_io.hpp"
#include "contactdyn/verification.hpp"

namespace {

namespace fs = std::filesystem;
using namespace contactdyn;

struct RunFlags {
  std::string config_path;
  std::string preset;
  std::optional<double> omega, gamma, a, omega1_sq, omega2_sq, g;
  std::optional<std::vector<double>> q0, p0;
  std::optional<double> z0, lambda0;
  std::optional<double> h;
  std::optional<long long> steps;
  std::optional<long long> record_every;
  std::string scheme;
  std::string out_dir, csv_name, svg_name, report_name;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--config", f.config_path, "config file (key = value)")
      ->excludes(cmd->add_option("--preset", f.preset,
                                 "model preset: A, B, C or D"));
  cmd->add_option("--omega", f.omega, "oscillator frequency");
  cmd->add_option("--gamma", f.gamma, "damping strength");
  cmd->add_option("--a", f.a, "double-well minimum position");
  cmd->add_option("--omega1-sq", f.omega1_sq, "first squared frequency");
  cmd->add_option("--omega2-sq", f.omega2_sq, "second squared frequency");
  cmd->add_option("--g", f.g, "coupling strength");
  cmd->add_option("--q0", f.q0, "initial positions (comma separated)")
      ->delimiter(',');
  cmd->add_option("--p0", f.p0, "initial momenta (comma separated)")
      ->delimiter(',');
  cmd->add_option("--z0", f.z0, "initial contact variable");
  cmd->add_option("--lambda0", f.lambda0, "initial integration factor");
  cmd->add_option("--dt", f.h, "time step");
  cmd->add_option("--steps", f.steps, "number of steps");
  cmd->add_option("--record-every", f.record_every, "record thinning");
  cmd->add_option("--scheme", f.scheme, "leapfrog or rk4");
  cmd->add_option("--out", f.out_dir, "output directory");
  cmd->add_option("--csv", f.csv_name, "trajectory CSV file name");
  cmd->add_option("--svg", f.svg_name, "also write an SVG plot of q(t)");
  cmd->add_option("--report", f.report_name,
                  "also write a diagnostics report (.csv or .json)");
}

RunConfig resolve_config(const RunFlags& f) {
  RunConfig cfg;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) {
      throw ContactError(ErrorCode::ConfigError,
                         "cannot open config file " + f.config_path);
    }
    cfg = parse_config(in);
  } else if (!f.preset.empty()) {
    cfg = preset_run_config(parse_model_kind(f.preset));
  } else {
    cfg = preset_run_config(ModelKind::DampedHOLinear);
  }

  if (f.omega) cfg.model.omega = *f.omega;
  if (f.gamma) cfg.model.gamma = *f.gamma;
  if (f.a) cfg.model.a = *f.a;
  if (f.omega1_sq) cfg.model.omega1_sq = *f.omega1_sq;
  if (f.omega2_sq) cfg.model.omega2_sq = *f.omega2_sq;
  if (f.g) cfg.model.g = *f.g;
  if (f.q0) cfg.initial.q = *f.q0;
  if (f.p0) cfg.initial.p = *f.p0;
  if (f.z0) cfg.initial.z = *f.z0;
  if (f.lambda0) cfg.initial.lambda = *f.lambda0;
  if (f.h) cfg.integ.h = *f.h;
  if (f.steps) {
    if (*f.steps < 0) {
      throw ContactError(ErrorCode::ConfigError, "--steps must be >= 0");
    }
    cfg.integ.n_steps = static_cast<std::size_t>(*f.steps);
  }
  if (f.record_every) {
    if (*f.record_every < 1) {
      throw ContactError(ErrorCode::ConfigError, "--record-every must be >= 1");
    }
    cfg.integ.record_every = static_cast<std::size_t>(*f.record_every);
  }
  if (!f.scheme.empty()) cfg.integ.scheme = parse_scheme(f.scheme);
  if (!f.out_dir.empty()) cfg.output.dir = f.out_dir;
  if (!f.csv_name.empty()) cfg.output.csv = f.csv_name;
  if (!f.svg_name.empty()) cfg.output.svg = f.svg_name;
  if (!f.report_name.empty()) cfg.output.report = f.report_name;

  if (const char* env = std::getenv("CONTACTDYN_OUT_DIR")) {
    if (*env != '\0') cfg.output.dir = env;
  }
  return cfg;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ContactError(ErrorCode::ConfigError,
                       "cannot write " + path.string());
  }
  out << content;
}

int cmd_run(const RunFlags& flags) {
  RunConfig cfg;
  ContactSystem sys;
  try {
    cfg = resolve_config(flags);
    sys = build_system(cfg.model);
    require_valid(cfg.initial);
    if (sys.n != cfg.initial.dof()) {
      throw ContactError(ErrorCode::DimensionMismatch,
                         "initial state has wrong dimension for the model");
    }
  } catch (const ContactError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  const Trajectory traj = integrate(sys, cfg.initial, cfg.integ);

  fs::create_directories(cfg.output.dir);
  {
    std::ostringstream csv;
    write_trajectory_csv(csv, traj);
    write_file(cfg.output.dir / cfg.output.csv, csv.str());
  }
  if (!cfg.output.svg.empty()) {
    std::ostringstream svg;
    write_trajectory_svg(svg, traj, sys.label);
    write_file(cfg.output.dir / cfg.output.svg, svg.str());
  }
  if (!cfg.output.report.empty()) {
    std::vector<DiagnosticReport> reports;
    reports.push_back(hamiltonian_drift(traj));
    const ActionReport action = action_residual(traj, sys);
    reports.push_back(action.algebraic);
    reports.push_back(action.quadrature);
    std::ostringstream rep;
    if (fs::path(cfg.output.report).extension() == ".json") {
      write_report_json(rep, reports);
    } else {
      write_report_csv(rep, reports);
    }
    write_file(cfg.output.dir / cfg.output.report, rep.str());
  }

  if (traj.failure) {
    std::cerr << "integration failed at step " << traj.failure->step_index
              << " (" << to_string(traj.failure->code)
              << "): " << traj.failure->message << "\n";
    return 2;
  }

  const ContactState& last = traj.states.back();
  std::cout << sys.label << ": " << traj.states.size() << " records to "
            << (cfg.output.dir / cfg.output.csv).string() << ", t_final "
            << last.t << ", H drift "
            << format_double(traj.H.back() - traj.H.front()) << "\n";
  return 0;
}

int cmd_check(const std::string& only, bool list_only) {
  if (list_only) {
    for (const auto& name : check_names()) {
      std::cout << name << "\n";
    }
    return 0;
  }
  const std::vector<CheckResult> results = run_checks(only);
  if (results.empty()) {
    std::cerr << "no check matches '" << only << "'; use --list\n";
    return 1;
  }
  std::string first_fail;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  " << r.detail
              << "\n";
    if (!r.pass && first_fail.empty()) first_fail = r.name;
  }
  if (!first_fail.empty()) {
    std::cerr << "first failing check: " << first_fail << "\n";
    return 3;
  }
  return 0;
}

struct SweepFlags {
  std::string preset = "A";
  std::string param;
  std::string values;
  std::string param2;
  std::string values2;
  std::string out_file;  // empty: stdout
};

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

void apply_param(RunConfig& cfg, const std::string& name, double value) {
  if (name == "omega") cfg.model.omega = value;
  else if (name == "gamma") cfg.model.gamma = value;
  else if (name == "a") cfg.model.a = value;
  else if (name == "omega1_sq") cfg.model.omega1_sq = value;
  else if (name == "omega2_sq") cfg.model.omega2_sq = value;
  else if (name == "g") cfg.model.g = value;
  else if (name == "q0") cfg.initial.q.assign(cfg.initial.q.size(), value);
  else if (name == "h") {
    // keep the horizon fixed when sweeping the step size
    const double T = cfg.integ.h * static_cast<double>(cfg.integ.n_steps);
    cfg.integ.h = value;
    cfg.integ.n_steps = static_cast<std::size_t>(std::llround(T / value));
  } else {
    throw ContactError(ErrorCode::ConfigError, "unknown sweep param " + name);
  }
}

int cmd_sweep(const SweepFlags& flags) {
  RunConfig base;
  std::vector<double> values, values2;
  try {
    base = preset_run_config(parse_model_kind(flags.preset));
    if (flags.param.empty()) {
      throw ContactError(ErrorCode::ConfigError, "--param is required");
    }
    values = parse_values(flags.values);
    if (!flags.param2.empty()) values2 = parse_values(flags.values2);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  std::ostringstream out;
  out << flags.param;
  if (!flags.param2.empty()) out << ',' << flags.param2;
  const std::size_t n = base.initial.dof();
  for (std::size_t i = 1; i <= n; ++i) out << ",q" << i;
  for (std::size_t i = 1; i <= n; ++i) out << ",p" << i;
  out << ",z,lambda,K,H,rel_drift,sync,err_q_analytic,error\n";

  const std::vector<double> inner =
      values2.empty() ? std::vector<double>{0.0} : values2;
  for (double v1 : values) {
    for (double v2 : inner) {
      RunConfig cfg = base;
      std::string error;
      Trajectory traj;
      ContactSystem sys;
      try {
        apply_param(cfg, flags.param, v1);
        if (!flags.param2.empty()) apply_param(cfg, flags.param2, v2);
        sys = build_system(cfg.model);
        traj = integrate(sys, cfg.initial, cfg.integ);
        if (traj.failure) {
          error = std::string(to_string(traj.failure->code)) + "@step" +
                  std::to_string(traj.failure->step_index);
        }
      } catch (const ContactError& e) {
        error = to_string(e.code());
      }

      out << format_double(v1);
      if (!flags.param2.empty()) out << ',' << format_double(v2);
      if (error.empty()) {
        const ContactState& last = traj.states.back();
        for (double q : last.q) out << ',' << format_double(q);
        for (double p : last.p) out << ',' << format_double(p);
        out << ',' << format_double(last.z) << ','
            << format_double(last.lambda) << ',' << format_double(traj.K.back())
            << ',' << format_double(traj.H.back());
        const DiagnosticReport drift = hamiltonian_drift(traj);
        const double H0 = traj.H.front();
        out << ','
            << format_double(H0 != 0.0 ? drift.max_abs / std::abs(H0)
                                       : drift.max_abs);
        // frequency-lock score for two-oscillator runs
        if (last.dof() == 2) {
          try {
            out << ',' << format_double(sync_metric(traj));
          } catch (const ContactError&) {
            out << ',';
          }
        } else {
          out << ',';
        }
        // error against the closed form, for the linearly damped oscillator
        if (cfg.model.kind == ModelKind::DampedHOLinear &&
            cfg.model.gamma < 2.0 * cfg.model.omega) {
          DampedHOParams par;
          par.omega = cfg.model.omega;
          par.gamma = cfg.model.gamma;
          par.q0 = cfg.initial.q[0];
          par.p0 = cfg.initial.p[0];
          par.z0 = cfg.initial.z;
          par.lambda0 = cfg.initial.lambda;
          const auto ref = analytic_damped_ho_series(par, traj.times(), 1e-3);
          double worst = 0.0;
          for (std::size_t k = 0; k < traj.states.size(); ++k) {
            worst =
                std::max(worst, std::abs(traj.states[k].q[0] - ref[k].q[0]));
          }
          out << ',' << format_double(worst);
        } else {
          out << ',';
        }
        out << ",\n";
      } else {
        // 2n+7 empty cells (q..err_q_analytic), then the error column
        for (std::size_t i = 0; i < 2 * n + 8; ++i) out << ',';
        out << error << "\n";
      }
    }
  }

  if (flags.out_file.empty() || flags.out_file == "-") {
    std::cout << out.str();
  } else {
    try {
      write_file(flags.out_file, out.str());
    } catch (const ContactError& e) {
      std::cerr << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contact Hamiltonian dynamics: dissipative models, hybrid "
               "leap-frog integration, invariants"};
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "integrate one configuration and "
                                            "write a trajectory CSV");
  add_run_flags(run, run_flags);

  std::string only;
  bool list_only = false;
  CLI::App* check =
      app.add_subcommand("check", "run the built-in verification suite");
  check->add_option("--only", only, "run only checks whose name contains this");
  check->add_flag("--list", list_only, "list check names and exit");

  SweepFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "run a parameter grid and write a summary CSV");
  sweep->add_option("--preset", sweep_flags.preset, "model preset")
      ->required();
  sweep->add_option("--param", sweep_flags.param,
                    "swept parameter (model field, q0 or h)");
  sweep->add_option("--values", sweep_flags.values,
                    "comma-separated grid values");
  sweep->add_option("--param2", sweep_flags.param2, "second swept parameter");
  sweep->add_option("--values2", sweep_flags.values2,
                    "comma-separated grid values for --param2");
  sweep->add_option("--out", sweep_flags.out_file,
                    "summary CSV path ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_flags);
    if (check->parsed()) return cmd_check(only, list_only);
    if (sweep->parsed()) return cmd_sweep(sweep_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
