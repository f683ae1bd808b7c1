import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fcontact import jets

finite = st.floats(min_value=-10, max_value=10, allow_nan=False)
nonzero = st.floats(min_value=0.2, max_value=10).map(lambda v: v)


def seed2(x, y):
    u, v = jets.variables([x, y])
    return u, v


def test_variables_seeding():
    x = jets.variables([1.5, -2.0, 0.25])
    assert [jets.value(v) for v in x] == [1.5, -2.0, 0.25]
    assert np.allclose(x[1].grad, [0, 1, 0])
    assert np.allclose(x[2].hess, 0)


def test_polynomial_derivatives():
    # w = x^2 y + 3 x: dw = (2xy + 3, x^2), d2w = [[2y, 2x], [2x, 0]]
    x, y = seed2(2.0, 5.0)
    w = x**2 * y + 3 * x
    assert w.val == pytest.approx(4 * 5 + 6)
    assert np.allclose(w.grad, [2 * 2 * 5 + 3, 4.0])
    assert np.allclose(w.hess, [[10.0, 4.0], [4.0, 0.0]])


def test_trig_chain_rule():
    # w = sin(x y): full second-order expansion at a generic point
    a, b = 0.7, -1.3
    x, y = seed2(a, b)
    w = jets.sin(x * y)
    s, c = math.sin(a * b), math.cos(a * b)
    assert w.val == pytest.approx(s)
    assert np.allclose(w.grad, [c * b, c * a])
    expected_hess = [
        [-s * b * b, c - s * a * b],
        [c - s * a * b, -s * a * a],
    ]
    assert np.allclose(w.hess, expected_hess)


def test_division_and_reciprocal():
    x, y = seed2(3.0, 2.0)
    w = x / y
    assert w.val == pytest.approx(1.5)
    assert np.allclose(w.grad, [1 / 2, -3 / 4])
    # d2/dy2 (x/y) = 2x/y^3
    assert w.hess[1, 1] == pytest.approx(2 * 3 / 8)


def test_sqrt_exp_log():
    (x,) = jets.variables([4.0])
    r = jets.sqrt(x)
    assert r.val == pytest.approx(2.0)
    assert r.grad[0] == pytest.approx(0.25)
    assert r.hess[0, 0] == pytest.approx(-1 / 32)
    e = jets.exp(x)
    assert e.hess[0, 0] == pytest.approx(math.exp(4.0))
    l = jets.log(x)
    assert l.grad[0] == pytest.approx(0.25)
    assert l.hess[0, 0] == pytest.approx(-1 / 16)


def test_integer_pow_at_negative_base():
    (x,) = jets.variables([-2.0])
    w = x**3
    assert w.val == pytest.approx(-8.0)
    assert w.grad[0] == pytest.approx(12.0)
    assert w.hess[0, 0] == pytest.approx(-12.0)


def test_fractional_pow_rejects_nonpositive():
    (x,) = jets.variables([-1.0])
    with pytest.raises(ValueError):
        x**0.5


def test_plain_floats_pass_through():
    assert jets.sin(0.5) == pytest.approx(math.sin(0.5))
    assert jets.value(2.5) == 2.5
    assert np.allclose(jets.gradient(2.5, 3), 0)


@given(finite, finite, finite, finite)
def test_product_rule(a, b, ga, gb):
    u = jets.Jet(a, [ga], [[0.0]])
    v = jets.Jet(b, [gb], [[0.0]])
    w = u * v
    assert w.val == pytest.approx(a * b, abs=1e-9)
    assert w.grad[0] == pytest.approx(a * gb + b * ga, abs=1e-9)
    assert w.hess[0, 0] == pytest.approx(2 * ga * gb, abs=1e-9)


@given(finite)
def test_pythagorean_identity_is_constant(x0):
    (x,) = jets.variables([x0])
    w = jets.sin(x) ** 2 + jets.cos(x) ** 2
    assert w.val == pytest.approx(1.0)
    assert abs(w.grad[0]) < 1e-12
    assert abs(w.hess[0, 0]) < 1e-12


def test_object_array_interop():
    x = jets.variables([1.0, 2.0])
    eta = np.array([x[0], 0.5], dtype=object)
    mat = np.outer(eta, eta)
    vals = jets.tensor_value(mat)
    assert np.allclose(vals, [[1.0, 0.5], [0.5, 0.25]])
    jac = jets.tensor_jacobian(mat, 2)
    assert jac[0, 0, 0] == pytest.approx(2.0)  # d/dx of x^2
    assert jac[0, 1, 0] == pytest.approx(0.5)  # d/dx of 0.5 x
    assert np.allclose(jac[1, 1], 0)


def test_tensor_extraction_handles_float_arrays():
    g = np.eye(3)
    assert np.allclose(jets.tensor_value(g), g)
    assert np.allclose(jets.tensor_jacobian(g, 3), 0)
    assert np.allclose(jets.tensor_hessian(g, 3), 0)
