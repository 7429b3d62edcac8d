"""
Testes de aceitação nos problemas de referência (lentos)

pytest -m slow
"""

import numpy as np
import pytest

from src.cli import ConvergenceManager
from src.integrator import IntegratorConfig, StartupMode, integrate
from src.problems import build_problem, l1_error
from src.problems import convection_diffusion
from src.schemes import builtin

pytestmark = pytest.mark.slow


@pytest.fixture(scope='module')
def test1_study():
    manager = ConvergenceManager()
    rows = manager.run_study('test1', ['FE-BDF2', 'AB-BDF3', 'SSP-BDF4', 'AB-BDF5'], [5, 6, 7],
                             lam=0.5, t_final=2.0)
    return {(row.scheme, row.k): row for row in rows}


@pytest.mark.parametrize('scheme, order', [('FE-BDF2', 2), ('AB-BDF3', 3), ('SSP-BDF4', 4)])
def test_reaction_diffusion_observed_order(test1_study, scheme, order):
    finest = test1_study[(scheme, 7)]
    assert finest.l1_full is not None
    assert finest.order_full == pytest.approx(order, abs=0.4)
    assert finest.Nx == 128


def test_reaction_diffusion_fifth_order_second_component(test1_study):
    finest = test1_study[('AB-BDF5', 7)]
    assert finest.order_w2 >= 4.5
    assert finest.l1_w2 < test1_study[('AB-BDF5', 5)].l1_w2


def test_reaction_diffusion_errors_decrease(test1_study):
    for scheme in ('FE-BDF2', 'AB-BDF3', 'SSP-BDF4'):
        errors = [test1_study[(scheme, k)].l1_full for k in (5, 6, 7)]
        assert errors[0] > errors[1] > errors[2]


def test_gray_scott_regression_against_fine_reference():
    bench = build_problem('test2', n=50)
    dt = 0.5 * bench.grid.dx
    t_final = 50.0
    cfg = IntegratorConfig(dt=dt, startup=StartupMode.CASCADE)
    result = integrate(builtin('SSP-BDF4'), bench.problem, 0.0, t_final, cfg, u0=bench.initial)

    fine_cfg = IntegratorConfig(dt=dt / 32)
    reference = integrate(builtin('FE-BE1'), bench.problem, 0.0, t_final, fine_cfg, u0=bench.initial).u

    w = bench.grid.unpack(result.u, 2)
    assert np.all(np.isfinite(w))
    assert w.min() >= -0.05 and w.max() <= 1.25
    scale = l1_error(reference, np.zeros_like(reference), bench.grid)
    assert l1_error(result.u, reference, bench.grid) <= 5e-3 * scale


def run_test3(dx: float, t_final: float = 1.0):
    bench = convection_diffusion.test3_problem(convection_diffusion.test3_grid(dx))
    dt = 0.5 * dx
    cfg = IntegratorConfig(dt=dt, startup=StartupMode.EXACT, linear_tol=1e-10)
    result = integrate(builtin('SSP-BDF4'), bench.problem, 0.0, t_final, cfg, exact=bench.exact)
    return bench, result


def test_convection_diffusion_convergence_and_mass():
    errors = []
    for dx in (0.2, 0.1):
        bench, result = run_test3(dx)
        errors.append(l1_error(result.u, bench.exact(result.t), bench.grid))

        mass = bench.grid.cell_area * np.sum(result.u)
        exact_mass = 2.0 * np.pi * np.sqrt(4.0 * convection_diffusion.MU * result.t + 1.0)
        assert abs(mass - exact_mass) <= 5e-3 * exact_mass
        assert result.u.min() > -1e-3

    assert np.log2(errors[0] / errors[1]) >= 3.5
    assert errors[1] <= 1e-2
