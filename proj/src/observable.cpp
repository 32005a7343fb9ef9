#include "contactdyn/observable.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace contactdyn {

namespace {

double fd_step(double x) {
  static const double base = std::cbrt(std::numeric_limits<double>::epsilon());
  return base * std::max(1.0, std::abs(x));
}

std::vector<double> zeros(std::size_t n) {
  return std::vector<double>(n, 0.0);
}

}  // namespace

Observable observable_from_value(std::string name, std::size_t n,
                                 std::function<double(const ContactState&)> f) {
  Observable a;
  a.n = n;
  a.name = std::move(name);
  a.value = f;
  a.d_q = [f, n](const ContactState& s) {
    std::vector<double> g(n);
    ContactState plus = s;
    ContactState minus = s;
    for (std::size_t i = 0; i < n; ++i) {
      const double h = fd_step(s.q[i]);
      plus.q[i] = s.q[i] + h;
      minus.q[i] = s.q[i] - h;
      g[i] = (f(plus) - f(minus)) / (2.0 * h);
      plus.q[i] = s.q[i];
      minus.q[i] = s.q[i];
    }
    return g;
  };
  a.d_p = [f, n](const ContactState& s) {
    std::vector<double> g(n);
    ContactState plus = s;
    ContactState minus = s;
    for (std::size_t i = 0; i < n; ++i) {
      const double h = fd_step(s.p[i]);
      plus.p[i] = s.p[i] + h;
      minus.p[i] = s.p[i] - h;
      g[i] = (f(plus) - f(minus)) / (2.0 * h);
      plus.p[i] = s.p[i];
      minus.p[i] = s.p[i];
    }
    return g;
  };
  a.d_z = [f](const ContactState& s) {
    const double h = fd_step(s.z);
    ContactState plus = s;
    ContactState minus = s;
    plus.z = s.z + h;
    minus.z = s.z - h;
    return (f(plus) - f(minus)) / (2.0 * h);
  };
  a.d_lambda = [f](const ContactState& s) {
    const double h = fd_step(s.lambda);
    ContactState plus = s;
    ContactState minus = s;
    plus.lambda = s.lambda + h;
    minus.lambda = s.lambda - h;
    return (f(plus) - f(minus)) / (2.0 * h);
  };
  return a;
}

Observable coordinate_q(std::size_t i, std::size_t n) {
  Observable a;
  a.n = n;
  a.name = "q" + std::to_string(i + 1);
  a.value = [i](const ContactState& s) { return s.q[i]; };
  a.d_q = [i, n](const ContactState&) {
    auto g = zeros(n);
    g[i] = 1.0;
    return g;
  };
  a.d_p = [n](const ContactState&) { return zeros(n); };
  a.d_z = [](const ContactState&) { return 0.0; };
  a.d_lambda = [](const ContactState&) { return 0.0; };
  return a;
}

Observable coordinate_p(std::size_t i, std::size_t n) {
  Observable a;
  a.n = n;
  a.name = "p" + std::to_string(i + 1);
  a.value = [i](const ContactState& s) { return s.p[i]; };
  a.d_q = [n](const ContactState&) { return zeros(n); };
  a.d_p = [i, n](const ContactState&) {
    auto g = zeros(n);
    g[i] = 1.0;
    return g;
  };
  a.d_z = [](const ContactState&) { return 0.0; };
  a.d_lambda = [](const ContactState&) { return 0.0; };
  return a;
}

Observable coordinate_z(std::size_t n) {
  Observable a;
  a.n = n;
  a.name = "z";
  a.value = [](const ContactState& s) { return s.z; };
  a.d_q = [n](const ContactState&) { return zeros(n); };
  a.d_p = [n](const ContactState&) { return zeros(n); };
  a.d_z = [](const ContactState&) { return 1.0; };
  a.d_lambda = [](const ContactState&) { return 0.0; };
  return a;
}

Observable coordinate_lambda(std::size_t n) {
  Observable a;
  a.n = n;
  a.name = "lambda";
  a.value = [](const ContactState& s) { return s.lambda; };
  a.d_q = [n](const ContactState&) { return zeros(n); };
  a.d_p = [n](const ContactState&) { return zeros(n); };
  a.d_z = [](const ContactState&) { return 0.0; };
  a.d_lambda = [](const ContactState&) { return 1.0; };
  return a;
}

Observable system_observable(const ContactSystem& sys) {
  Observable a;
  a.n = sys.n;
  a.name = sys.label.empty() ? "K" : sys.label;
  a.value = sys.K;
  a.d_q = sys.K_q;
  a.d_p = sys.K_p;
  a.d_z = sys.K_z;
  a.d_lambda = [](const ContactState&) { return 0.0; };
  return a;
}

}  // namespace contactdyn
