#include "contactdyn/system.hpp"

#include <cmath>
#include <limits>

namespace contactdyn {

namespace {

double fd_step(double x) {
  static const double base = std::cbrt(std::numeric_limits<double>::epsilon());
  return base * std::max(1.0, std::abs(x));
}

double rel_dev(double fd, double exact) {
  return std::abs(fd - exact) / std::max(1.0, std::abs(exact));
}

}  // namespace

double max_partial_deviation(const ContactSystem& sys, const ContactState& s) {
  const std::vector<double> kq = sys.K_q(s);
  const std::vector<double> kp = sys.K_p(s);
  double worst = 0.0;

  ContactState plus = s;
  ContactState minus = s;
  for (std::size_t i = 0; i < sys.n; ++i) {
    const double h = fd_step(s.q[i]);
    plus.q[i] = s.q[i] + h;
    minus.q[i] = s.q[i] - h;
    const double fd = (sys.K(plus) - sys.K(minus)) / (2.0 * h);
    worst = std::max(worst, rel_dev(fd, kq[i]));
    plus.q[i] = s.q[i];
    minus.q[i] = s.q[i];
  }
  for (std::size_t i = 0; i < sys.n; ++i) {
    const double h = fd_step(s.p[i]);
    plus.p[i] = s.p[i] + h;
    minus.p[i] = s.p[i] - h;
    const double fd = (sys.K(plus) - sys.K(minus)) / (2.0 * h);
    worst = std::max(worst, rel_dev(fd, kp[i]));
    plus.p[i] = s.p[i];
    minus.p[i] = s.p[i];
  }
  {
    const double h = fd_step(s.z);
    plus.z = s.z + h;
    minus.z = s.z - h;
    const double fd = (sys.K(plus) - sys.K(minus)) / (2.0 * h);
    worst = std::max(worst, rel_dev(fd, sys.K_z(s)));
  }
  return worst;
}

}  // namespace contactdyn
