#include "contactdyn/state.hpp"

#include <cmath>
#include <string>

namespace contactdyn {

namespace {

bool all_finite(const ContactState& s) {
  for (double v : s.q) {
    if (!std::isfinite(v)) return false;
  }
  for (double v : s.p) {
    if (!std::isfinite(v)) return false;
  }
  return std::isfinite(s.z) && std::isfinite(s.lambda) && std::isfinite(s.t);
}

}  // namespace

std::optional<ErrorCode> validate(const ContactState& s) {
  if (s.q.empty() || s.q.size() != s.p.size()) {
    return ErrorCode::DimensionMismatch;
  }
  if (!all_finite(s)) {
    return ErrorCode::NonFinite;
  }
  if (!(s.lambda > 0.0)) {
    return ErrorCode::NonPositiveLambda;
  }
  return std::nullopt;
}

void require_valid(const ContactState& s) {
  if (auto err = validate(s)) {
    throw ContactError(*err, std::string("invalid state: ") + to_string(*err));
  }
}

LiftedState lift(const ContactState& s) {
  require_valid(s);
  LiftedState ls;
  ls.q1 = s.q;
  ls.p1.resize(s.p.size());
  for (std::size_t i = 0; i < s.p.size(); ++i) {
    ls.p1[i] = s.lambda * s.p[i];
  }
  ls.q0 = s.z;
  ls.p0 = s.lambda;
  ls.t = s.t;
  return ls;
}

ContactState unlift(const LiftedState& ls) {
  if (ls.q1.empty() || ls.q1.size() != ls.p1.size()) {
    throw ContactError(ErrorCode::DimensionMismatch,
                       "lifted state has mismatched q1/p1 lengths");
  }
  if (!(ls.p0 > 0.0) || !std::isfinite(ls.p0)) {
    throw ContactError(ErrorCode::NonPositiveLambda,
                       "lifted state requires p0 > 0");
  }
  ContactState s;
  s.q = ls.q1;
  s.p.resize(ls.p1.size());
  for (std::size_t i = 0; i < ls.p1.size(); ++i) {
    s.p[i] = ls.p1[i] / ls.p0;
  }
  s.z = ls.q0;
  s.lambda = ls.p0;
  s.t = ls.t;
  return s;
}

ContactState time_inversion(const ContactState& s) {
  require_valid(s);
  ContactState out = s;
  for (double& v : out.p) {
    v = -v;
  }
  out.z = -out.z;
  out.t = -out.t;
  return out;
}

}  // namespace contactdyn
