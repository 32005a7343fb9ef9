// End-to-end checks of the command line tool. The binary path comes from the
// build system; every invocation works in its own scratch directory.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "contactdyn/trajectory_io.hpp"
#include "doctest.h"

#ifndef CONTACTDYN_CLI_PATH
#error "CONTACTDYN_CLI_PATH must be defined by the build"
#endif

namespace {

namespace fs = std::filesystem;

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(CONTACTDYN_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("contactdyn_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_count(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) {
    if (c == '\n') ++n;
  }
  return n;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    if (pos == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return cells;
}

std::string cell_by_name(const std::string& header, const std::string& row,
                         const std::string& column) {
  const auto names = split_csv(header);
  const auto cells = split_csv(row);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == column) {
      return i < cells.size() ? cells[i] : "";
    }
  }
  return "";
}

}  // namespace

TEST_CASE("run with zero steps writes exactly the initial row") {
  const fs::path dir = scratch_dir("run0");
  REQUIRE(run_cli("run --preset A --steps 0 --out " + dir.string()) == 0);
  const std::string csv = slurp(dir / "trajectory.csv");
  CHECK(line_count(csv) == 2);  // header + one record
  std::istringstream in(csv);
  const auto traj = contactdyn::read_trajectory_csv(in);
  REQUIRE(traj.states.size() == 1);
  CHECK(traj.states[0].q[0] == 1.0);
  CHECK(traj.states[0].p[0] == 0.0);
  CHECK(traj.states[0].z == 1.0);
  CHECK(traj.states[0].lambda == 1.0);
  CHECK(traj.states[0].t == 0.0);
}

TEST_CASE("mirrored double-well runs produce mirrored CSVs") {
  const fs::path dir = scratch_dir("mirror");
  REQUIRE(run_cli("run --preset C --q0 2.0 --steps 500 --out " + dir.string() +
                  " --csv plus.csv") == 0);
  REQUIRE(run_cli("run --preset C --q0 -2.0 --steps 500 --out " + dir.string() +
                  " --csv minus.csv") == 0);
  std::istringstream in_plus(slurp(dir / "plus.csv"));
  std::istringstream in_minus(slurp(dir / "minus.csv"));
  const auto plus = contactdyn::read_trajectory_csv(in_plus);
  const auto minus = contactdyn::read_trajectory_csv(in_minus);
  REQUIRE(plus.states.size() == minus.states.size());
  for (std::size_t k = 0; k < plus.states.size(); ++k) {
    CHECK(plus.states[k].q[0] == -minus.states[k].q[0]);
    CHECK(plus.states[k].z == minus.states[k].z);
    CHECK(plus.states[k].lambda == minus.states[k].lambda);
  }
}

TEST_CASE("run writes optional SVG and report artifacts") {
  const fs::path dir = scratch_dir("artifacts");
  REQUIRE(run_cli("run --preset A --steps 200 --out " + dir.string() +
                  " --svg q.svg --report report.json") == 0);
  CHECK(slurp(dir / "q.svg").find("<svg") == 0);
  CHECK(slurp(dir / "report.json").find("hamiltonian_drift") !=
        std::string::npos);
}

TEST_CASE("config file driving plus flag override") {
  const fs::path dir = scratch_dir("config");
  {
    std::ofstream cfg(dir / "run.cfg");
    cfg << "[model]\nkind = A\n[integrator]\nsteps = 10\n[output]\ndir = "
        << dir.string() << "\n";
  }
  REQUIRE(run_cli("run --config " + (dir / "run.cfg").string() +
                  " --steps 3") == 0);
  std::istringstream in(slurp(dir / "trajectory.csv"));
  CHECK(contactdyn::read_trajectory_csv(in).states.size() == 4);
}

TEST_CASE("output directory honors the environment override") {
  const fs::path dir = scratch_dir("envdir");
  const std::string cmd = "CONTACTDYN_OUT_DIR=" + dir.string() + " " +
                          CONTACTDYN_CLI_PATH +
                          " run --preset A --steps 1 >/dev/null 2>&1";
  REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(fs::exists(dir / "trajectory.csv"));
}

TEST_CASE("configuration errors exit with code 1") {
  CHECK(run_cli("run --config /nonexistent/file.cfg") == 1);
  CHECK(run_cli("run --preset A --scheme sundial") == 1);
  CHECK(run_cli("run --preset A --lambda0 0.0") == 1);
  CHECK(run_cli("run --preset D --q0 1.0") == 1);  // wrong dimension
}

TEST_CASE("integration failures exit with code 2 and flush a partial CSV") {
  const fs::path dir = scratch_dir("singular");
  // (h/2) K_z = 1 at the initial state: singular momentum denominator
  CHECK(run_cli("run --preset B --gamma 100 --z0 -1 --steps 5 --out " +
                dir.string()) == 2);
  std::istringstream in(slurp(dir / "trajectory.csv"));
  CHECK(contactdyn::read_trajectory_csv(in).states.size() == 1);
}

TEST_CASE("check subcommand filters and lists") {
  CHECK(run_cli("check --only bracket") == 0);
  CHECK(run_cli("check --only no_such_check") == 1);
  CHECK(run_cli("check --list") == 0);
}

TEST_CASE("sweep over the coupling emits one deterministic row per point") {
  const fs::path dir = scratch_dir("sweep");
  const fs::path out = dir / "sweep.csv";
  REQUIRE(run_cli("sweep --preset D --param g --values 0.0,0.8 --out " +
                  out.string()) == 0);
  const std::string text = slurp(out);
  REQUIRE(line_count(text) == 3);  // header + two grid points

  // header then rows in grid order
  std::istringstream in(text);
  std::string header, row0, row8;
  std::getline(in, header);
  std::getline(in, row0);
  std::getline(in, row8);
  CHECK(header.find("g,q1,q2,") == 0);
  CHECK(header.find("sync") != std::string::npos);
  CHECK(row0.substr(0, 2) == "0,");

  // the sync column brackets the locking transition
  CHECK(std::stod(cell_by_name(header, row0, "sync")) <= 0.95);
  CHECK(std::stod(cell_by_name(header, row8, "sync")) >= 0.99);
}

TEST_CASE("failed grid points are recorded and the sweep continues") {
  const fs::path dir = scratch_dir("sweep_fail");
  const fs::path out = dir / "fail.csv";
  REQUIRE(run_cli("sweep --preset A --param gamma --values -1.0,0.1 --out " +
                  out.string()) == 0);
  std::istringstream in(slurp(out));
  std::string header, bad, good;
  std::getline(in, header);
  std::getline(in, bad);
  std::getline(in, good);
  CHECK(cell_by_name(header, bad, "error") == "InvalidSpec");
  CHECK(cell_by_name(header, good, "error").empty());
  CHECK(!cell_by_name(header, good, "K").empty());
}

TEST_CASE("empty sweep grid yields a header-only CSV") {
  const fs::path dir = scratch_dir("sweep_empty");
  const fs::path out = dir / "empty.csv";
  REQUIRE(run_cli("sweep --preset A --param gamma --values '' --out " +
                  out.string()) == 0);
  CHECK(line_count(slurp(out)) == 1);
}

TEST_CASE("halving the step in a sweep shrinks the closed-form error fourfold") {
  const fs::path dir = scratch_dir("sweep_h");
  const fs::path out = dir / "h.csv";
  REQUIRE(run_cli("sweep --preset A --param h --values 0.04,0.02,0.01 --out " +
                  out.string()) == 0);
  std::istringstream in(slurp(out));
  std::string header, line;
  std::getline(in, header);
  std::vector<double> errs;
  while (std::getline(in, line)) {
    errs.push_back(std::stod(cell_by_name(header, line, "err_q_analytic")));
  }
  REQUIRE(errs.size() == 3);
  CHECK(errs[0] / errs[1] >= 3.0);
  CHECK(errs[0] / errs[1] <= 5.0);
  CHECK(errs[1] / errs[2] >= 3.0);
  CHECK(errs[1] / errs[2] <= 5.0);
}
