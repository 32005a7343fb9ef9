#include "contactdyn/bracket.hpp"

#include <cmath>

namespace contactdyn {

double contact_bracket(const Observable& A, const Observable& B,
                       const ContactState& s) {
  require_valid(s);

  const std::vector<double> Aq = A.d_q(s);
  const std::vector<double> Ap = A.d_p(s);
  const std::vector<double> Bq = B.d_q(s);
  const std::vector<double> Bp = B.d_p(s);

  double sym = 0.0;
  for (std::size_t i = 0; i < s.dof(); ++i) {
    sym += Aq[i] * Bp[i] - Bq[i] * Ap[i];
  }

  // u_X = lambda*dX/dlambda - sum_i p_i dX/dp_i
  double pAp = 0.0;
  double pBp = 0.0;
  for (std::size_t i = 0; i < s.dof(); ++i) {
    pAp += s.p[i] * Ap[i];
    pBp += s.p[i] * Bp[i];
  }
  const double uA = s.lambda * A.d_lambda(s) - pAp;
  const double uB = s.lambda * B.d_lambda(s) - pBp;
  const double zterm = A.d_z(s) * uB - B.d_z(s) * uA;

  const double result = sym + zterm;
  if (!std::isfinite(result)) {
    throw ContactError(ErrorCode::NonFinite, "non-finite bracket {" + A.name +
                                                 "," + B.name + "}");
  }
  return result;
}

double observable_rate(const Observable& A, const ContactSystem& sys,
                       const ContactState& s) {
  const double rate =
      contact_bracket(A, system_observable(sys), s) + A.d_z(s) * sys.K(s);
  if (!std::isfinite(rate)) {
    throw ContactError(ErrorCode::NonFinite,
                       "non-finite rate of " + A.name);
  }
  return rate;
}

}  // namespace contactdyn
