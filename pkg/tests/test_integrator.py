"""
Testes do passo semi-implícito, do arranque e do laço de integração
"""

import numpy as np
import pytest
from pydantic import ValidationError

from src.exceptions import ConvergenceError, IntegrationError, NonFiniteStateError, StartupError
from src.integrator import (
    History,
    InstrumentedProblem,
    IntegratorConfig,
    LinearStructure,
    Slot,
    SplitProblem,
    StartupMode,
    fixed_point_correct,
    integrate,
    predict,
    startup,
    step,
    step_count,
)
from src.problems import build_problem, scalar_problem
from src.schemes import CATALOG_NAMES, builtin


def history_of(*slots):
    hist = History(len(slots))
    for t, u, h in slots:
        hist.push(Slot(t, np.atleast_1d(np.asarray(u, dtype=float)), np.atleast_1d(np.asarray(h, dtype=float))))
    return hist


def without_linear(prob: SplitProblem) -> SplitProblem:
    return SplitProblem(dim=prob.dim, eval_H=prob.eval_H, dtype=prob.dtype, name=prob.name)


def test_backward_euler_single_step(decay_problem):
    hist = history_of((0.0, 1.0, -1.0))
    c = builtin('FE-BE1')
    cfg = IntegratorConfig(dt=0.5)
    np.testing.assert_allclose(predict(c, hist, 0.5), [1.0])
    u = step(c, decay_problem, hist, cfg)
    np.testing.assert_allclose(u, [2.0 / 3.0], rtol=1e-14)
    assert hist.newest.t == 0.5
    np.testing.assert_allclose(hist.newest.h, [-2.0 / 3.0], rtol=1e-14)


def test_crank_nicolson_pair_on_constant_history(decay_problem):
    hist = history_of((-1.0, 1.0, -1.0), (0.0, 1.0, -1.0))
    c = builtin('FE-CN2')
    np.testing.assert_allclose(predict(c, hist, 1.0), [0.0], atol=1e-15)
    u = step(c, decay_problem, hist, IntegratorConfig(dt=1.0))
    np.testing.assert_allclose(u, [1.0 / 3.0], rtol=1e-14)


@pytest.mark.parametrize('name', CATALOG_NAMES)
def test_constant_state_is_preserved(name):
    c = builtin(name)
    state = np.array([2.5, -1.0])
    zero = SplitProblem(dim=2, eval_H=lambda t, u, v: np.zeros(2),
                        linear=LinearStructure(eval_K=lambda t, u: np.zeros(2), apply_A=lambda t, u, w: 0.0 * w))
    dt = 0.37
    hist = History(c.s, [Slot(j * dt, state, np.zeros(2)) for j in range(c.s)])
    u = step(c, zero, hist, IntegratorConfig(dt=dt))
    np.testing.assert_allclose(u, state, rtol=1e-13)


def test_fixed_point_matches_linear_solve(decay_problem):
    c = builtin('FE-BE1')
    cfg = IntegratorConfig(dt=0.5, linear_tol=1e-12)
    u = step(c, without_linear(decay_problem), history_of((0.0, 1.0, -1.0)), cfg)
    np.testing.assert_allclose(u, [2.0 / 3.0], rtol=1e-10)


def test_fixed_point_cubic():
    c = builtin('FE-BE1')
    dt = 0.1
    cubic = SplitProblem(dim=1, eval_H=lambda t, u, v: -v ** 3)
    hist = history_of((0.0, 1.0, -1.0))
    cfg = IntegratorConfig(dt=dt, linear_tol=1e-13)
    v = fixed_point_correct(c, cubic, hist, predict(c, hist, dt), cfg)
    # raiz real de v + Δt v³ = 1
    roots = np.roots([dt, 0.0, 1.0, -1.0])
    real_root = roots[np.argmin(np.abs(roots.imag))].real
    assert v[0] == pytest.approx(real_root, rel=1e-11)


def test_fixed_point_divergence_is_reported(decay_problem):
    c = builtin('FE-BE1')
    hist = history_of((0.0, 1.0, -1.0))
    cfg = IntegratorConfig(dt=3.0, linear_maxiter=50)
    with pytest.raises(ConvergenceError) as info:
        fixed_point_correct(c, without_linear(decay_problem), hist, predict(c, hist, 3.0), cfg)
    assert info.value.iterations == 50


def test_linear_and_fixed_point_paths_agree():
    bench = scalar_problem()
    c = builtin('FE-BDF2')
    cfg = IntegratorConfig(dt=0.05, linear_tol=1e-12, startup=StartupMode.EXACT)
    linear_hist = startup(c, bench.problem, bench.initial, cfg, exact=bench.exact)
    fixed_hist = startup(c, bench.problem, bench.initial, cfg, exact=bench.exact)
    a = step(c, bench.problem, linear_hist, cfg)
    b = step(c, without_linear(bench.problem), fixed_hist, cfg)
    assert abs(a[0] - b[0]) <= 10 * cfg.linear_tol * abs(a[0])


def test_history_rejects_bad_times():
    hist = history_of((0.0, 1.0, 0.0), (0.1, 1.0, 0.0))
    with pytest.raises(IntegrationError):
        hist.push(Slot(0.1, np.ones(1), np.zeros(1)))
    assert hist.times == [0.1, 0.0]

    uneven = history_of((0.0, 1.0, 0.0), (0.1, 1.0, 0.0), (0.25, 1.0, 0.0))
    with pytest.raises(IntegrationError):
        uneven.check_uniform(0.1, 3)
    with pytest.raises(IntegrationError):
        step(builtin('AB-BDF3'), SplitProblem(1, lambda t, u, v: -v), uneven, IntegratorConfig(dt=0.1))


def test_integrator_config_validation(monkeypatch):
    with pytest.raises(ValidationError):
        IntegratorConfig(dt=0.0)
    with pytest.raises(ValidationError):
        IntegratorConfig(dt=0.1, linear_tol=1.0)
    assert IntegratorConfig(dt=0.1, startup='EXACT').startup == StartupMode.EXACT
    assert IntegratorConfig(dt=0.1).substeps_for(3) == 8
    assert IntegratorConfig(dt=0.1, cascade_substeps=4).substeps_for(3) == 4

    monkeypatch.setenv('SEMILM_LINEAR_TOL', '1e-8')
    assert IntegratorConfig(dt=0.1).linear_tol == 1e-8


def test_startup_single_step_scheme(decay_problem):
    for mode in StartupMode:
        hist = startup(builtin('FE-BE1'), decay_problem, np.ones(1), IntegratorConfig(dt=0.1, startup=mode))
        assert len(hist) == 1
        np.testing.assert_array_equal(hist.newest.h, [-1.0])


def test_exact_startup_requires_exact(decay_problem):
    cfg = IntegratorConfig(dt=0.1, startup=StartupMode.EXACT)
    with pytest.raises(StartupError):
        startup(builtin('FE-BDF2'), decay_problem, np.ones(1), cfg)
    with pytest.raises(StartupError):
        startup(builtin('FE-BE1'), decay_problem, np.ones(3), cfg)


def test_exact_startup_reproduces_manufactured_solution():
    bench = build_problem('test1', n=16)
    c = builtin('SSP-BDF4')
    cfg = IntegratorConfig(dt=0.05, startup=StartupMode.EXACT)
    hist = startup(c, bench.problem, bench.initial, cfg, exact=bench.exact)
    assert len(hist) == 4
    for slot in hist:
        np.testing.assert_allclose(slot.u, bench.exact(slot.t), rtol=1e-14)
        np.testing.assert_allclose(slot.h, bench.problem.eval_H(slot.t, slot.u, slot.u), rtol=1e-14)


def cascade_error(substeps: int) -> float:
    bench = scalar_problem()
    c = builtin('AB-BDF3')
    cfg = IntegratorConfig(dt=0.1, startup=StartupMode.CASCADE, cascade_substeps=substeps)
    hist = startup(c, bench.problem, bench.initial, cfg)
    assert hist.times == pytest.approx([0.2, 0.1, 0.0])
    return max(abs(slot.u[0] - bench.exact(slot.t)[0]) for slot in hist)


def test_cascade_startup_approaches_exact_startup():
    assert cascade_error(16) < 2e-3
    assert cascade_error(32) < cascade_error(8) / 2


def test_zero_steps_returns_startup_state():
    bench = scalar_problem()
    result = integrate(builtin('FE-BE1'), bench.problem, 0.0, 0.0, IntegratorConfig(dt=0.1), u0=bench.initial)
    assert result.steps == 0
    np.testing.assert_array_equal(result.u, bench.initial)


def test_backward_euler_closed_form(decay_problem):
    seen = []
    result = integrate(builtin('FE-BE1'), decay_problem, 0.0, 1.0, IntegratorConfig(dt=0.1), u0=np.ones(1),
                       observer=lambda n, t, u: seen.append((n, t, u)))
    assert result.steps == 10
    assert result.u[0] == pytest.approx((1.0 / 1.1) ** 10, rel=1e-12)
    assert [n for n, _, _ in seen] == list(range(11))
    assert seen[-1][1] == pytest.approx(1.0)
    assert not seen[-1][2].flags.writeable


def test_observer_sees_startup_slots():
    bench = scalar_problem()
    c = builtin('AB-BDF4')
    seen = []
    integrate(c, bench.problem, 0.0, 0.5, IntegratorConfig(dt=0.1, startup=StartupMode.EXACT),
              exact=bench.exact, observer=lambda n, t, u: seen.append(n))
    assert seen == list(range(6))


def test_step_count_contract():
    assert step_count(0.0, 2.0, 2.0 / 82) == 82
    with pytest.raises(IntegrationError):
        step_count(0.0, 1.05, 0.1)
    with pytest.raises(IntegrationError):
        step_count(1.0, 0.0, 0.1)


def test_non_finite_state_aborts_with_last_good_index():
    def eval_K(t, u):
        return np.full_like(u, np.nan) if t > 0.25 else np.zeros_like(u)

    prob = SplitProblem(
        dim=1,
        eval_H=lambda t, u, v: eval_K(t, u) - v,
        linear=LinearStructure(eval_K=eval_K, apply_A=lambda t, u, w: -w,
                               shifted_solve=lambda t, u, g, rhs: rhs / (1.0 + g))
    )
    with pytest.raises(NonFiniteStateError) as info:
        integrate(builtin('FE-BE1'), prob, 0.0, 1.0, IntegratorConfig(dt=0.1), u0=np.ones(1))
    assert info.value.last_good_index == 2
    assert info.value.t == pytest.approx(0.3)


def test_linear_path_uses_two_evaluations_per_step():
    bench = build_problem('test1', n=16)
    c = builtin('AB-BDF3')
    cfg = IntegratorConfig(dt=0.05, startup=StartupMode.EXACT)
    counted = InstrumentedProblem(bench.problem)
    hist = startup(c, counted, bench.initial, cfg, exact=bench.exact)
    counted.reset()
    result = integrate(c, counted, 0.0, 0.5, cfg, history=hist)
    n = result.scheme_steps
    assert n == 8
    assert counted.counts['eval_H'] == n
    assert counted.counts['eval_K'] == n
    assert counted.evaluations == 2 * n


def test_additive_wrapper_declares_linear_structure(rng):
    eps = 0.01
    G = -np.diag(rng.uniform(1.0, 2.0, 5))
    prob = SplitProblem.from_additive(5, lambda t, u: -u ** 2, lambda t, v: G @ v, eps, g_matrix=G)
    assert prob.has_linear_structure
    assert prob.linear_structure_mismatch(probes=5) <= 1e-12
    u, v = rng.standard_normal(5), rng.standard_normal(5)
    np.testing.assert_allclose(prob.eval_H(0.0, u, v), -u ** 2 + G @ v / eps)


@pytest.mark.parametrize('name', CATALOG_NAMES)
def test_scalar_convergence_order(name):
    bench = scalar_problem(lam=1.0, mu=-2.0)
    c = builtin(name)
    steps = np.array([0.1, 0.05, 0.025, 0.0125])
    errors = []
    for dt in steps:
        cfg = IntegratorConfig(dt=dt, startup=StartupMode.EXACT, linear_tol=1e-14)
        result = integrate(c, bench.problem, 0.0, 1.0, cfg, exact=bench.exact)
        errors.append(abs(result.u[0] - bench.exact(1.0)[0]))
    slope = np.polyfit(np.log(steps), np.log(errors), 1)[0]
    assert slope == pytest.approx(c.p, abs=0.25)
