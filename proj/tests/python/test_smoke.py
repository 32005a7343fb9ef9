"""Smoke tests for the python bindings."""

import math

import pytest

import contactdyn as cd


def test_import_and_version():
    assert cd.__version__


def test_state_validation():
    good = cd.ContactState(q=[1.0], p=[0.0], z=1.0, lambda_=1.0)
    assert cd.validate(good) is None
    assert cd.validate(cd.ContactState(q=[1.0], p=[0.0], z=1.0, lambda_=0.0)) == (
        "NonPositiveLambda"
    )
    assert cd.validate(cd.ContactState(q=[1.0, 2.0], p=[0.0], z=0.0)) == (
        "DimensionMismatch"
    )


def test_lift_round_trip():
    s = cd.ContactState(q=[1.0], p=[2.0], z=3.0, lambda_=2.0)
    ls = cd.lift(s)
    assert ls.p1 == [4.0]
    assert ls.p0 == 2.0
    back = cd.unlift(ls)
    assert back.p == [2.0]
    assert back.z == 3.0


def test_vector_field_of_preset_a():
    exp = cd.default_experiments(cd.ModelKind.DampedHOLinear)[0]
    sys = cd.build_system(exp.model)
    d = cd.contact_vector_field(sys, exp.initial)
    assert d.dq == [0.0]
    assert d.dp[0] == pytest.approx(-1.0)
    assert d.dz == pytest.approx(0.4)
    assert d.dlambda == pytest.approx(0.1)


def test_integrate_and_drift():
    exp = cd.default_experiments(cd.ModelKind.DampedHOLinear)[0]
    sys = cd.build_system(exp.model)
    traj = cd.integrate(sys, exp.initial, exp.config)
    assert traj.failure is None
    assert len(traj) == exp.config.n_steps + 1
    report = cd.hamiltonian_drift(traj)
    assert report.pass_
    assert report.max_abs <= 1e-3 * abs(traj.H[0])


def test_lambda_decoupling_is_bitwise():
    exp = cd.default_experiments(cd.ModelKind.DampedHOQuadratic)[0]
    sys = cd.build_system(exp.model)
    cfg = cd.IntegratorConfig()
    cfg.h = 0.01
    cfg.n_steps = 500
    other = cd.ContactState(
        q=list(exp.initial.q), p=list(exp.initial.p), z=exp.initial.z, lambda_=2.0
    )
    a = cd.integrate(sys, exp.initial, cfg)
    b = cd.integrate(sys, other, cfg)
    assert all(
        sa.q == sb.q and sa.p == sb.p and sa.z == sb.z
        for sa, sb in zip(a.states, b.states)
    )


def test_analytic_oracle():
    par = cd.DampedHOParams()
    at0 = cd.analytic_damped_ho(par, 0.0, quad_step=1e-3)
    assert at0.q == [1.0]
    at10 = cd.analytic_damped_ho(par, 10.0, quad_step=1e-3)
    assert at10.lambda_ == pytest.approx(math.e)


def test_bracket_fundamentals():
    s = cd.ContactState(q=[0.5], p=[3.0], z=-0.25, lambda_=2.0)
    assert cd.contact_bracket(cd.coordinate_q(0, 1), cd.coordinate_p(0, 1), s) == 1.0
    assert cd.contact_bracket(cd.coordinate_z(1), cd.coordinate_lambda(1), s) == 2.0
    assert cd.contact_bracket(cd.coordinate_z(1), cd.coordinate_p(0, 1), s) == -3.0


def test_observable_from_python_callable():
    obs = cd.observable_from_value("q_squared", 1, lambda s: s.q[0] ** 2)
    exp = cd.default_experiments(cd.ModelKind.DampedHOLinear)[0]
    sys = cd.build_system(exp.model)
    s = cd.ContactState(q=[1.5], p=[0.5], z=0.0, lambda_=1.0)
    # d(q^2)/dt = 2 q p
    assert cd.observable_rate(obs, sys, s) == pytest.approx(2.0 * 1.5 * 0.5, rel=1e-6)


def test_sync_metric_bracketing():
    off, on = cd.default_experiments(cd.ModelKind.CoupledOscillators)
    t_off = cd.integrate(cd.build_system(off.model), off.initial, off.config)
    t_on = cd.integrate(cd.build_system(on.model), on.initial, on.config)
    assert cd.sync_metric(t_off) <= 0.95
    assert cd.sync_metric(t_on) >= 0.99


def test_error_mapping():
    par = cd.DampedHOParams()
    par.gamma = 5.0  # overdamped: no closed form
    with pytest.raises(cd.ContactError):
        cd.analytic_damped_ho(par, 1.0)


def test_run_checks_subset():
    results = cd.run_checks("bracket_laws")
    assert results and all(r.pass_ for r in results)
