#pragma once

#include "contactdyn/observable.hpp"
#include "contactdyn/state.hpp"
#include "contactdyn/system.hpp"

namespace contactdyn {

/// Contact Poisson bracket of two observables at a state:
///   {A,B}_c = sum_i (A_q_i B_p_i - B_q_i A_p_i)
///           + A_z (lambda B_lambda - sum_i p_i B_p_i)
///           - B_z (lambda A_lambda - sum_i p_i A_p_i).
/// Antisymmetric and Leibniz; equals lambda times the canonical bracket of
/// the observables pulled back to lifted coordinates.
double contact_bracket(const Observable& A, const Observable& B,
                       const ContactState& s);

/// Evolution rate of an observable along the dynamics of sys:
///   dA/dt = {A, K}_c + A_z * K.
/// On the coordinate observables this reproduces the contact vector field.
double observable_rate(const Observable& A, const ContactSystem& sys,
                       const ContactState& s);

}  // namespace contactdyn
