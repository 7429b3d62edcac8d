"""
Testes das malhas, stencils e problemas de referência
"""

import csv
from fractions import Fraction

import numpy as np
import pytest

from src.exceptions import ConfigError, GridError
from src.integrator import History, IntegratorConfig, Slot, StartupMode, integrate, step
from src.linalg import make_operator, solve_shifted
from src.problems import (
    FIRST_DERIVATIVE,
    SECOND_DERIVATIVE,
    STENCILS,
    Field,
    PeriodicGrid2D,
    apply_stencil,
    build_problem,
    export_frame,
    gradient,
    grid_for,
    grid_operators,
    l1_component_error,
    l1_error,
    laplacian,
    laplacian_diagonal,
    read_manifest,
    scalar_problem,
    stencil_matrix,
    write_manifest,
)
from src.problems import gray_scott, reaction_diffusion
from src.problems import convection_diffusion
from src.schemes import builtin


def sine_field(n: int):
    grid = PeriodicGrid2D(n, n, 2 * np.pi, 2 * np.pi)
    X, Y = grid.mesh()
    return grid, np.sin(X) * np.cos(2 * Y)


@pytest.mark.parametrize('order', [2, 4, 6])
def test_second_derivative_weights(order):
    weights = SECOND_DERIVATIVE[order]
    radius = len(weights) // 2
    offsets = range(-radius, radius + 1)
    assert sum(weights) == 0
    assert sum(w * k ** 2 for w, k in zip(weights, offsets)) == 2
    assert list(weights) == list(reversed(weights))


def test_first_derivative_weights():
    weights = FIRST_DERIVATIVE[4]
    offsets = range(-2, 3)
    assert sum(weights) == 0
    assert sum(w * k for w, k in zip(weights, offsets)) == 1
    assert sum(w * k ** 3 for w, k in zip(weights, offsets)) == 0


def test_sixth_order_center_weight():
    assert SECOND_DERIVATIVE[6][3] == Fraction(-490, 180)
    assert STENCILS.center('dxx', 6) == pytest.approx(-49 / 18)
    assert laplacian_diagonal(0.5, 0.25, 2) == pytest.approx(-2 / 0.25 - 2 / 0.0625)


@pytest.mark.parametrize('kind, order', [('dxx', 2), ('dxx', 4), ('dxx', 6), ('dx', 4)])
def test_stencils_vanish_on_constants(kind, order):
    assert np.max(np.abs(apply_stencil(np.full((10, 12), 3.0), 'x', kind, order, 0.1))) < 1e-10


@pytest.mark.parametrize('kind, order', [('dxx', 2), ('dxx', 4), ('dxx', 6), ('dx', 4)])
def test_stencil_convergence_rate(kind, order):
    errors = []
    for n in (32, 64):
        grid, f = sine_field(n)
        X, Y = grid.mesh()
        exact = -np.sin(X) * np.cos(2 * Y) if kind == 'dxx' else np.cos(X) * np.cos(2 * Y)
        errors.append(np.max(np.abs(apply_stencil(f, 'x', kind, order, grid.dx) - exact)))
    assert np.log2(errors[0] / errors[1]) == pytest.approx(order, abs=0.2)


def test_stencil_along_y():
    grid, f = sine_field(64)
    X, Y = grid.mesh()
    dyy = apply_stencil(f, 'y', 'dxx', 6, grid.dy)
    np.testing.assert_allclose(dyy, -4.0 * f, atol=1e-6)
    gx, gy = gradient(f, grid.dx, grid.dy)
    np.testing.assert_allclose(gy, -2.0 * np.sin(X) * np.sin(2 * Y), atol=5e-4)
    np.testing.assert_allclose(laplacian(f, grid.dx, grid.dy, 6), -5.0 * f, atol=1e-6)


def test_unsupported_stencils():
    with pytest.raises(GridError):
        apply_stencil(np.zeros((10, 10)), 'x', 'dx', 2)
    with pytest.raises(GridError):
        apply_stencil(np.zeros((10, 10)), 'z', 'dxx', 2)
    with pytest.raises(GridError):
        apply_stencil(np.zeros((10, 4)), 'x', 'dxx', 6)


def test_grid_layout_and_l1():
    grid = PeriodicGrid2D(8, 8, 8.0, 8.0)
    assert grid.cell_area == 1.0
    assert l1_error(np.ones(64), np.zeros(64), grid) == 64.0

    field_ = Field.from_components(grid, np.ones((8, 8)), np.zeros((8, 8)))
    assert field_.is_finite()
    assert l1_component_error(field_, np.zeros(128), grid, 2, 0) == 64.0
    assert l1_component_error(field_, np.zeros(128), grid, 2, 1) == 0.0

    flat = np.arange(64.0)
    assert grid.unpack(flat, 1)[0, 1, 0] == 8.0
    with pytest.raises(GridError):
        l1_error(np.ones(64), np.ones(63), grid)
    with pytest.raises(GridError):
        PeriodicGrid2D(4, 8, 1.0, 1.0)


def test_test1_initial_data_and_structure():
    bench = build_problem('test1', n=32)
    grid = bench.grid
    X, _ = grid.mesh()
    w = grid.unpack(bench.initial, 2)
    np.testing.assert_allclose(w[1], np.cos(2 * X))
    np.testing.assert_allclose(w[0], 1.0 + np.cos(X))
    assert bench.problem.linear_structure_mismatch() <= 1e-12


def test_test1_spatial_residual_is_sixth_order():
    for t in (0.0, 1.0):
        coarse, fine = (reaction_diffusion.test1_problem(reaction_diffusion.test1_grid(k)) for k in (6, 7))
        r = [np.max(np.abs(bench.residual(t))) for bench in (coarse, fine)]
        assert np.log2(r[0] / r[1]) == pytest.approx(6.0, abs=0.3)


def test_test1_requires_its_domain():
    with pytest.raises(GridError):
        reaction_diffusion.test1_problem(PeriodicGrid2D(16, 32, 2 * np.pi, 2 * np.pi))
    with pytest.raises(GridError):
        reaction_diffusion.test1_problem(PeriodicGrid2D(16, 16, 1.0, 1.0))


def test_test2_initial_data():
    grid = gray_scott.test2_grid(40)
    w = grid.unpack(gray_scott.gray_scott_initial(grid), 2)
    X, Y = grid.mesh()
    outside = (np.abs(X) > 0.25) | (np.abs(Y) > 0.25)
    assert np.all(w[1][outside] == 0.0)
    np.testing.assert_allclose(w[0] + 2.0 * w[1], 1.0)
    assert w[1].max() <= 0.25


def test_test2_without_activator_is_diagonal(rng):
    bench = build_problem('test2', n=16)
    grid = bench.grid
    u = grid.pack(np.stack([rng.uniform(0.0, 1.0, (16, 16)), np.zeros((16, 16))]))
    diag = bench.problem.linear.diagonal_A(0.0, u)
    w = rng.standard_normal(bench.problem.dim)
    np.testing.assert_allclose(bench.problem.linear.apply_A(0.0, u, w), diag * w)
    np.testing.assert_allclose(grid.unpack(diag, 2)[0], -gray_scott.GAMMA)
    np.testing.assert_allclose(grid.unpack(diag, 2)[1], -(gray_scott.GAMMA + gray_scott.KAPPA))


def test_test2_closed_form_solve_matches_krylov(rng):
    bench = build_problem('test2', n=16)
    linear = bench.problem.linear
    u = rng.uniform(0.0, 1.0, bench.problem.dim)
    rhs = rng.standard_normal(bench.problem.dim)
    gamma = 3.7
    direct = linear.shifted_solve(0.0, u, gamma, rhs)
    operator = make_operator(bench.problem.dim, lambda w: linear.apply_A(0.0, u, w))
    krylov = solve_shifted(operator, gamma, rhs, tol=1e-13, diagonal=linear.diagonal_A(0.0, u))
    np.testing.assert_allclose(direct, krylov, rtol=1e-9, atol=1e-11)
    assert bench.problem.linear_structure_mismatch() <= 1e-12


def test_test2_backward_euler_step_by_hand():
    bench = build_problem('test2', n=40)
    grid = bench.grid
    dt = 0.5 * grid.dx
    u0 = bench.initial
    hist = History(1, [Slot(0.0, u0, bench.problem.eval_H(0.0, u0, u0))])
    u1 = step(builtin('FE-BE1'), bench.problem, hist, IntegratorConfig(dt=dt))

    U = grid.unpack(u0, 2)
    lap1 = laplacian(U[0], grid.dx, grid.dy, gray_scott.LAPLACIAN_ORDER)
    lap2 = laplacian(U[1], grid.dx, grid.dy, gray_scott.LAPLACIAN_ORDER)
    g, k = gray_scott.GAMMA, gray_scott.KAPPA
    x1 = (U[0] + dt * (gray_scott.SIGMA1 * lap1 + g)) / (1.0 + dt * (U[1] ** 2 + g))
    x2 = (U[1] + dt * gray_scott.SIGMA2 * lap2 + dt * U[1] ** 2 * x1) / (1.0 + dt * (g + k))
    np.testing.assert_allclose(grid.unpack(u1, 2), np.stack([x1, x2]), rtol=1e-13, atol=1e-15)


def test_test3_initial_gaussian():
    bench = convection_diffusion.test3_problem(convection_diffusion.test3_grid(0.2))
    X, Y = bench.grid.mesh()
    np.testing.assert_allclose(bench.grid.unpack(bench.initial, 1)[0], np.exp(-(X ** 2 + Y ** 2) / 2.0))
    assert bench.grid.nx == 100
    assert bench.problem.linear_structure_mismatch() <= 1e-12


def test_test3_interior_residual_is_fourth_order():
    t = 0.5
    residuals = []
    for dx in (0.2, 0.1):
        bench = convection_diffusion.test3_problem(convection_diffusion.test3_grid(dx))
        X, Y = bench.grid.mesh()
        interior = np.hypot(X - t, Y - t) <= 5.0
        residuals.append(np.max(np.abs(bench.grid.unpack(bench.residual(t), 1)[0][interior])))
    assert np.log2(residuals[0] / residuals[1]) >= 3.5


def test_sparse_operators_match_stencils(rng):
    f = rng.standard_normal((12, 10))
    dx, dy = 0.3, 0.7
    Dx, Dy, lap = grid_operators(10, 12, dx, dy, 4)
    np.testing.assert_allclose(Dx @ f.ravel(), apply_stencil(f, 'x', 'dx', 4, dx).ravel(), atol=1e-12)
    np.testing.assert_allclose(Dy @ f.ravel(), apply_stencil(f, 'y', 'dx', 4, dy).ravel(), atol=1e-12)
    np.testing.assert_allclose(lap @ f.ravel(), laplacian(f, dx, dy, 4).ravel(), atol=1e-10)
    with pytest.raises(GridError):
        stencil_matrix(4, 'dxx', 6)


def test_floored_log_stays_bounded():
    U = np.array([[1.0, 1e-20], [-1e-13, 0.5]])
    logs = convection_diffusion.floored_log(U)
    assert logs.min() == pytest.approx(np.log(1e-12))
    assert logs[0, 0] == 0.0
    assert np.all(np.isfinite(convection_diffusion.floored_log(np.full((2, 2), -1.0))))


def test_test3_shifted_solve_with_negative_far_field(rng):
    bench = convection_diffusion.test3_problem(convection_diffusion.test3_grid(0.5))
    linear = bench.problem.linear
    u = bench.exact(0.3)
    u[u < 1e-14] = -1e-13
    rhs = rng.standard_normal(bench.problem.dim)
    gamma = 0.2
    x = linear.shifted_solve(0.0, u, gamma, rhs)
    np.testing.assert_allclose(x - gamma * linear.apply_A(0.0, u, x), rhs, atol=1e-9)


def test_test3_integrates_on_coarse_grid():
    bench = convection_diffusion.test3_problem(convection_diffusion.test3_grid(0.5))
    cfg = IntegratorConfig(dt=0.25, startup=StartupMode.EXACT)
    result = integrate(builtin('SSP-BDF4'), bench.problem, 0.0, 2.0, cfg, exact=bench.exact)
    assert result.t == pytest.approx(2.0)
    assert result.scheme_steps >= 4
    assert np.all(np.isfinite(result.u))
    exact_mass = 2.0 * np.pi * np.sqrt(4.0 * convection_diffusion.MU * 2.0 + 1.0)
    assert l1_error(result.u, bench.exact(2.0), bench.grid) <= 0.05 * exact_mass
    assert result.u.min() > -1e-3


def test_scalar_problem_residual():
    bench = scalar_problem(lam=2.0, mu=-0.5)
    for t in (0.0, 0.7, 3.0):
        assert np.abs(bench.residual(t)[0]) < 1e-14
    assert bench.problem.linear.shifted_solve(0.0, bench.initial, 0.5, np.ones(1))[0] == pytest.approx(1 / 1.25)


def test_registry_errors():
    with pytest.raises(ConfigError):
        build_problem('nosuch')
    with pytest.raises(ConfigError):
        grid_for('scalar', 16)
    with pytest.raises(ConfigError):
        build_problem('test2', n=16).residual(0.0)
    assert build_problem(' Scalar ').name == 'scalar'
    assert grid_for('test3', 200).dx == pytest.approx(0.1)


def test_frame_export_and_manifest(tmp_path):
    grid = PeriodicGrid2D(8, 8, 2.0, 2.0, -1.0, -1.0)
    w1 = np.arange(64.0).reshape(8, 8)
    u = grid.pack(np.stack([w1, -w1]))
    path = export_frame(str(tmp_path), 3, 0.25, u, grid, 2)
    with open(path, newline='', encoding='utf-8') as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ['x', 'y', 'w1', 'w2']
    assert len(rows) == 65
    assert [float(v) for v in rows[1]] == [-1.0, -1.0, 0.0, -0.0]
    assert [float(v) for v in rows[2]] == [-0.75, -1.0, 1.0, -1.0]

    write_manifest(str(tmp_path), [(0, 0.0, path), (1, 0.1, path)])
    assert read_manifest(str(tmp_path)) == [(0, 0.0, 'frame_0003.csv'), (1, 0.1, 'frame_0003.csv')]
