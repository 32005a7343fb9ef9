#pragma once

#include <string>
#include <vector>

#include "contactdyn/integrator.hpp"
#include "contactdyn/system.hpp"

namespace contactdyn {

/// The built-in dissipative model zoo.
///   DampedHOLinear:     K = (p^2 + w^2 q^2)/2 - gamma*z
///   DampedHOQuadratic:  K = (p^2 + w^2 q^2)/2 - gamma*z^2
///   DampedDoubleWell:   K = p^2/2 + (q^2 - a^2)^2/2 - gamma*z
///   CoupledOscillators: K = (p1^2 + w1^2 q1^2)/2 + (p2^2 + w2^2 q2^2)/2
///                           + g q1^2 q2^2 - gamma*z            (n = 2)
enum class ModelKind {
  DampedHOLinear,
  DampedHOQuadratic,
  DampedDoubleWell,
  CoupledOscillators,
};

struct ModelSpec {
  ModelKind kind = ModelKind::DampedHOLinear;
  double omega = 1.0;  // oscillator frequency (linear/quadratic damping HO)
  double gamma = 0.1;  // damping strength (all models)
  double a = 1.0;      // well positions +-a (double well)
  double omega1_sq = 1.2;  // squared frequencies and coupling (coupled pair)
  double omega2_sq = 0.8;
  double g = 0.0;
};

const char* to_string(ModelKind kind);

/// Builds the ContactSystem for a spec, with exact analytic partials.
/// Throws InvalidSpec on non-positive frequencies, negative gamma or g, or
/// non-finite parameters.
ContactSystem build_system(const ModelSpec& spec);

/// A ready-to-run configuration: model, initial state, stepper settings.
struct Experiment {
  std::string name;
  ModelSpec model;
  ContactState initial;
  IntegratorConfig config;
};

/// Default experiment(s) for a model kind, using h = 0.01 throughout:
///   DampedHOLinear / DampedHOQuadratic: w=1, gamma=0.1,
///       (q,p,z,lambda)(0) = (1,0,1,1), T=50.
///   DampedDoubleWell: a=1, gamma=0.1, z(0)=lambda(0)=1, p(0)=0, T=50;
///       two entries with q(0) = +2 and -2.
///   CoupledOscillators: gamma=0.01, w1^2=1.2, w2^2=0.8, q(0)=(1,-1),
///       p(0)=0, z(0)=lambda(0)=1, T=100; two entries with g = 0.0 and 0.8.
std::vector<Experiment> default_experiments(ModelKind kind);

}  // namespace contactdyn
