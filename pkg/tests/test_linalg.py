"""
Testes do solve deslocado e do Aberth-Ehrlich
"""

import numpy as np
import pytest

from src.exceptions import LinearSolveError
from src.linalg import ComplexPolynomial, backward_errors, make_operator, poly_from_roots, poly_roots, solve_shifted


def periodic_laplacian(n: int, scale: float = 1.0) -> np.ndarray:
    L = -2.0 * np.eye(n) + np.eye(n, k=1) + np.eye(n, k=-1)
    L[0, -1] = L[-1, 0] = 1.0
    return scale * L


def test_zero_shift_returns_rhs(rng):
    rhs = rng.standard_normal(10)
    A = make_operator(10, lambda w: 5.0 * w)
    np.testing.assert_array_equal(solve_shifted(A, 0.0, rhs), rhs)


@pytest.mark.parametrize('method', ['dense', 'gmres'])
def test_diagonal_operator(method, rng):
    d = -rng.uniform(0.0, 50.0, 100)
    rhs = rng.standard_normal(100)
    A = make_operator(100, lambda w: d * w)
    x = solve_shifted(A, 0.3, rhs, tol=1e-12, method=method, diagonal=d)
    np.testing.assert_allclose(x, rhs / (1.0 - 0.3 * d), rtol=1e-10)


def test_periodic_laplacian_matches_dense():
    n = 32
    L = periodic_laplacian(n)
    rhs = np.sin(2 * np.pi * np.arange(n) / n) + 0.1
    x = solve_shifted(make_operator(n, lambda w: L @ w), 0.1, rhs, tol=1e-12, method='gmres')
    np.testing.assert_allclose(x, np.linalg.solve(np.eye(n) - 0.1 * L, rhs), rtol=1e-10, atol=1e-12)


def test_gmres_and_dense_agree(rng):
    n = 48
    M = periodic_laplacian(n, 10.0) + 0.5 * rng.standard_normal((n, n)) / np.sqrt(n)
    A = make_operator(n, lambda w: M @ w)
    rhs = rng.standard_normal(n)
    tol = 1e-10
    dense = solve_shifted(A, 0.05, rhs, tol=tol, method='dense')
    krylov = solve_shifted(A, 0.05, rhs, tol=tol, method='gmres', diagonal=np.diag(M))
    assert np.linalg.norm(krylov - dense) <= 10 * tol * np.linalg.norm(dense) * np.linalg.cond(np.eye(n) - 0.05 * M)


def test_relative_residual_contract(rng):
    n = 200
    L = periodic_laplacian(n, 4.0)
    A = make_operator(n, lambda w: L @ w)
    rhs = rng.standard_normal(n)
    tol = 1e-10
    x = solve_shifted(A, 0.5, rhs, tol=tol)
    residual = np.linalg.norm(rhs - (x - 0.5 * L @ x)) / np.linalg.norm(rhs)
    assert residual <= tol

    scaled = solve_shifted(A, 0.5, 1e6 * rhs, tol=tol) / 1e6
    assert np.linalg.norm(scaled - x) <= 10 * tol * np.linalg.norm(x) * 10


def test_complex_system():
    d = np.array([-1.0 + 2.0j, -3.0, -0.5j])
    rhs = np.array([1.0, 1.0j, 2.0])
    x = solve_shifted(make_operator(3, lambda w: d * w, dtype=complex), 0.7, rhs)
    np.testing.assert_allclose(x, rhs / (1.0 - 0.7 * d), rtol=1e-12)


def test_gmres_failure_reports_residual(rng):
    n = 200
    L = periodic_laplacian(n, 1e4)
    A = make_operator(n, lambda w: L @ w)
    with pytest.raises(LinearSolveError) as info:
        solve_shifted(A, 1.0, rng.standard_normal(n), tol=1e-12, maxiter=1, method='gmres')
    assert info.value.residual > 1e-12
    assert info.value.iterations >= 1


def test_rhs_shape_mismatch():
    with pytest.raises(LinearSolveError):
        solve_shifted(make_operator(4, lambda w: w), 0.1, np.ones(5))


def sorted_roots(result):
    return np.array(sorted(result.roots, key=lambda z: (round(z.real, 8), round(z.imag, 8))))


def test_roots_of_z_squared_minus_one():
    result = poly_roots(ComplexPolynomial([-1.0, 0.0, 1.0]))
    np.testing.assert_allclose(sorted_roots(result), [-1.0, 1.0], atol=1e-12)


@pytest.mark.parametrize('s', [2, 3, 4, 5])
def test_adams_state_polynomial(s):
    # ζ^s - ζ^{s-1}
    coefficients = np.zeros(s + 1)
    coefficients[s] = 1.0
    coefficients[s - 1] = -1.0
    result = poly_roots(ComplexPolynomial(coefficients))
    assert len(result) == s
    assert np.sum(np.abs(result.roots) < 1e-12) == s - 1
    assert np.min(np.abs(result.roots - 1.0)) < 1e-12


def test_bdf2_state_polynomial():
    result = poly_roots(ComplexPolynomial([1 / 3, -4 / 3, 1.0]))
    np.testing.assert_allclose(sorted_roots(result), [1 / 3, 1.0], atol=1e-12)


def test_backward_error_and_reconstruction(rng):
    roots = rng.standard_normal(7) + 1j * rng.standard_normal(7)
    p = poly_from_roots(roots, leading=2.0 - 1.0j)
    result = poly_roots(p)
    assert np.all(backward_errors(p.coefficients, result.roots) <= 1e-12)
    rebuilt = poly_from_roots(result.roots, leading=p.leading)
    np.testing.assert_allclose(rebuilt.coefficients, p.coefficients, atol=1e-8 * np.max(np.abs(p.coefficients)))


def test_well_separated_roots_are_continuous():
    p = poly_from_roots([0.5, -0.25 + 0.5j, -0.25 - 0.5j, 0.9j])
    perturbed = ComplexPolynomial(p.coefficients + 1e-14)
    a = sorted_roots(poly_roots(p))
    b = sorted_roots(poly_roots(perturbed))
    np.testing.assert_allclose(a, b, atol=1e-10)


def test_degenerate_polynomial():
    p = ComplexPolynomial([3.0, 1e-20])
    assert p.degree == 0
    result = poly_roots(p)
    assert result.degenerate
    assert len(result) == 0
