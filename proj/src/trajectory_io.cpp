#include "contactdyn/trajectory_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace contactdyn {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || end != begin + text.size()) {
    throw ContactError(ErrorCode::ConfigError,
                       "malformed number '" + text + "'");
  }
  return v;
}

nlohmann::json report_to_json(const DiagnosticReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["max_abs"] = r.max_abs;
  j["threshold"] = r.threshold;
  j["pass"] = r.pass;
  auto& series = j["series"] = nlohmann::json::array();
  for (const auto& [t, v] : r.series) {
    series.push_back({t, v});
  }
  return j;
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  const std::size_t n = traj.states.empty() ? 1 : traj.states.front().dof();
  out << "t";
  for (std::size_t i = 1; i <= n; ++i) out << ",q" << i;
  for (std::size_t i = 1; i <= n; ++i) out << ",p" << i;
  out << ",z,lambda,K,H\n";

  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const ContactState& s = traj.states[k];
    out << format_double(s.t);
    for (double v : s.q) out << ',' << format_double(v);
    for (double v : s.p) out << ',' << format_double(v);
    out << ',' << format_double(s.z) << ',' << format_double(s.lambda) << ','
        << format_double(traj.K[k]) << ',' << format_double(traj.H[k]) << '\n';
  }
}

Trajectory read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ContactError(ErrorCode::ConfigError, "missing CSV header");
  }
  const auto header = split(line, ',');
  std::size_t n = 0;
  while (1 + n < header.size() && header[1 + n][0] == 'q') ++n;
  if (n == 0 || header.size() != 1 + 2 * n + 4 || header[0] != "t") {
    throw ContactError(ErrorCode::ConfigError, "unrecognized CSV header");
  }

  Trajectory traj;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) {
      throw ContactError(ErrorCode::ConfigError, "row width mismatch");
    }
    ContactState s;
    s.t = parse_double(cells[0]);
    for (std::size_t i = 0; i < n; ++i) s.q.push_back(parse_double(cells[1 + i]));
    for (std::size_t i = 0; i < n; ++i)
      s.p.push_back(parse_double(cells[1 + n + i]));
    s.z = parse_double(cells[1 + 2 * n]);
    s.lambda = parse_double(cells[2 + 2 * n]);
    traj.states.push_back(std::move(s));
    traj.K.push_back(parse_double(cells[3 + 2 * n]));
    traj.H.push_back(parse_double(cells[4 + 2 * n]));
  }
  return traj;
}

void write_trajectory_svg(std::ostream& out, const Trajectory& traj,
                          const std::string& title) {
  constexpr double width = 800.0, height = 500.0;
  constexpr double left = 60.0, right = 780.0, top = 40.0, bottom = 460.0;
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

  const std::size_t n = traj.states.empty() ? 0 : traj.states.front().dof();
  double t_min = 0.0, t_max = 1.0, q_min = -1.0, q_max = 1.0;
  if (!traj.states.empty()) {
    t_min = traj.states.front().t;
    t_max = traj.states.back().t;
    q_min = q_max = traj.states.front().q[0];
    for (const auto& s : traj.states) {
      for (double v : s.q) {
        q_min = std::min(q_min, v);
        q_max = std::max(q_max, v);
      }
    }
  }
  if (t_max == t_min) t_max = t_min + 1.0;
  if (q_max == q_min) q_max = q_min + 1.0;

  auto x_of = [&](double t) {
    return left + (t - t_min) / (t_max - t_min) * (right - left);
  };
  auto y_of = [&](double q) {
    return bottom - (q - q_min) / (q_max - q_min) * (bottom - top);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width
      << ' ' << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2
      << "\" y=\"22\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"14\">"
      << title << "</text>\n";
  // axes
  out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right
      << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
      << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << left << "\" y=\"" << bottom + 18
      << "\" font-family=\"monospace\" font-size=\"11\">t=" << t_min
      << "</text>\n";
  out << "<text x=\"" << right << "\" y=\"" << bottom + 18
      << "\" text-anchor=\"end\" font-family=\"monospace\" "
         "font-size=\"11\">t="
      << t_max << "</text>\n";
  out << "<text x=\"" << left - 4 << "\" y=\"" << y_of(q_min)
      << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">"
      << q_min << "</text>\n";
  out << "<text x=\"" << left - 4 << "\" y=\"" << y_of(q_max) + 10
      << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">"
      << q_max << "</text>\n";

  for (std::size_t i = 0; i < n; ++i) {
    const char* color = palette[i % 4];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1\" points=\"";
    for (const auto& s : traj.states) {
      out << x_of(s.t) << ',' << y_of(s.q[i]) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << right - 40 << "\" y=\"" << top + 16.0 * (i + 1)
        << "\" fill=\"" << color
        << "\" font-family=\"monospace\" font-size=\"12\">q" << i + 1
        << "</text>\n";
  }
  out << "</svg>\n";
}

void write_report_csv(std::ostream& out,
                      const std::vector<DiagnosticReport>& reports) {
  out << "name,t,value,max_abs,threshold,pass\n";
  for (const auto& r : reports) {
    for (const auto& [t, v] : r.series) {
      out << r.name << ',' << format_double(t) << ',' << format_double(v)
          << ',' << format_double(r.max_abs) << ','
          << format_double(r.threshold) << ',' << (r.pass ? 1 : 0) << '\n';
    }
  }
}

void write_report_json(std::ostream& out,
                       const std::vector<DiagnosticReport>& reports) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : reports) {
    j.push_back(report_to_json(r));
  }
  out << j.dump(2) << '\n';
}

}  // namespace contactdyn
