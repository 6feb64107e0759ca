import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gbx.algebra import ONE, AlgebraParams, GBCNumber, multiply, norm_form
from gbx.errors import NotOnHyperquadric
from gbx.hyperquadric import (
    HyperquadricKind,
    constraint_arrays,
    constraint_value,
    group_inverse,
    group_product,
    inverse_arrays,
    membership,
    metric_arrays,
    metric_eval,
    metric_form,
    sample_members,
    unit_membership,
)

BICOMPLEX = AlgebraParams(1.0, 1.0)
KINDS = list(HyperquadricKind)
SIGN_CASES = [AlgebraParams(a, b) for a in (1.0, -1.0) for b in (1.0, -1.0)]

coeff = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
numbers = st.builds(GBCNumber, coeff, coeff, coeff, coeff)
param = st.one_of(st.floats(-4, -0.05), st.floats(0.05, 4))
params = st.builds(AlgebraParams, param, param)


def ti_phi(t: float) -> GBCNumber:
    """Diagonal of the circle surface under the TI rule with alpha = beta = 1."""
    return GBCNumber(
        math.cosh(t) * math.cos(t),
        math.cosh(t) * math.sin(t),
        -math.sinh(t) * math.sin(t),
        math.sinh(t) * math.cos(t),
    )


# -- metric and constraint ----------------------------------------------------


@pytest.mark.parametrize(
    "kind, weights, index",
    [
        (HyperquadricKind.TI, (1.0, 2.0, 3.0, 6.0), 0),
        (HyperquadricKind.TJ, (1.0, -2.0, -3.0, 6.0), 2),
        (HyperquadricKind.TIJ, (1.0, 2.0, -3.0, -6.0), 2),
    ],
)
def test_metric_weights(kind, weights, index):
    form = metric_form(kind, AlgebraParams(2.0, -3.0))
    assert form.weights == weights
    assert form.index == index


def test_constraint_examples():
    for k in KINDS:
        assert constraint_value(ONE, k, BICOMPLEX) == 0.0
    assert constraint_value(GBCNumber(1, 0, 0, 5), HyperquadricKind.TI, BICOMPLEX) == 0.0
    assert constraint_value(GBCNumber(1, 1, 1, 1), HyperquadricKind.TIJ, BICOMPLEX) == 0.0


@given(numbers, params, st.sampled_from(KINDS))
def test_constraint_is_half_the_norm_residual(x, p, k):
    assert constraint_value(x, k, p) == norm_form(x, k, p).residual / 2


def test_metric_examples():
    for k in KINDS:
        assert metric_eval(ONE, ONE, k, BICOMPLEX) == 1.0
    x = GBCNumber(1, 0, 0, 5)
    assert metric_eval(x, x, HyperquadricKind.TI, BICOMPLEX) == -24.0


@given(numbers, numbers, params, st.sampled_from(KINDS))
def test_metric_is_symmetric(x, y, p, k):
    assert metric_eval(x, y, k, p) == metric_eval(y, x, k, p)


@given(numbers, params, st.sampled_from(KINDS))
def test_metric_norm_equals_norm_form_scalar(x, p, k):
    size = max(1.0, float(np.abs(x.as_array()).max()) ** 2 * max(1.0, abs(p.alpha * p.beta)))
    assert abs(metric_eval(x, x, k, p) - norm_form(x, k, p).scalar) <= 1e-12 * size


# -- membership ---------------------------------------------------------------


def test_identity_is_in_every_hyperquadric():
    for k in KINDS:
        assert membership(ONE, k, BICOMPLEX).value == ONE


def test_constraint_violation_is_reported():
    with pytest.raises(NotOnHyperquadric) as info:
        membership(GBCNumber(1, 0, 1, 0), HyperquadricKind.TI, BICOMPLEX)
    assert info.value.reason == "constraint"
    assert info.value.value == 1.0


def test_vanishing_norm_is_reported():
    # constraint holds, norm 1 - 1 = 0
    with pytest.raises(NotOnHyperquadric) as info:
        membership(GBCNumber(1, 0, 0, 1), HyperquadricKind.TI, BICOMPLEX)
    assert info.value.reason == "norm"


def test_member_with_positive_norm():
    point = membership(GBCNumber(1, 1, 0, 0), HyperquadricKind.TI, BICOMPLEX)
    assert point.norm == 2.0


def test_membership_tolerance_scales_with_magnitude():
    x = GBCNumber(1e4, 0, 1e-4, 0)  # constraint 1, tiny next to |x|^2 = 1e8
    membership(x, HyperquadricKind.TI, BICOMPLEX, tol=1e-6)
    with pytest.raises(NotOnHyperquadric):
        membership(x, HyperquadricKind.TI, BICOMPLEX, tol=1e-9)


def test_membership_needs_positive_tolerance():
    with pytest.raises(ValueError):
        membership(ONE, HyperquadricKind.TI, BICOMPLEX, tol=0.0)


# -- group operations ---------------------------------------------------------


def test_identity_is_neutral():
    e = membership(ONE, HyperquadricKind.TJ, BICOMPLEX)
    x = membership(GBCNumber(1, 0, 2, 0), HyperquadricKind.TJ, BICOMPLEX)
    assert group_product(e, x).value == x.value


def test_product_of_subgroup_points():
    kind = HyperquadricKind.TI
    x = membership(ti_phi(1.0), kind, BICOMPLEX)
    y = membership(ti_phi(2.0), kind, BICOMPLEX)
    got = group_product(x, y).value.as_array()
    np.testing.assert_allclose(got, ti_phi(3.0).as_array(), rtol=0, atol=1e-12 * 20)


def test_product_rejects_mixed_kinds_and_algebras():
    x = membership(ONE, HyperquadricKind.TI, BICOMPLEX)
    with pytest.raises(ValueError):
        group_product(x, membership(ONE, HyperquadricKind.TJ, BICOMPLEX))
    with pytest.raises(ValueError):
        group_product(x, membership(ONE, HyperquadricKind.TI, AlgebraParams(2.0, 1.0)))


def test_inverse_examples():
    e = membership(ONE, HyperquadricKind.TI, BICOMPLEX)
    assert group_inverse(e).value == ONE
    y = membership(GBCNumber(1, 0, 0, 5), HyperquadricKind.TI, BICOMPLEX)
    inv = group_inverse(y).value.as_array()
    np.testing.assert_allclose(inv, [-1 / 24, 0.0, 0.0, 5 / 24], rtol=1e-15)
    np.testing.assert_allclose(multiply(y.value, group_inverse(y).value, BICOMPLEX).as_array(), ONE.as_array(), atol=1e-15)


def test_unit_membership_examples():
    kind = HyperquadricKind.TI
    assert unit_membership(membership(ONE, kind, BICOMPLEX))
    assert unit_membership(membership(ti_phi(0.7), kind, BICOMPLEX))
    assert not unit_membership(membership(GBCNumber(2, 0, 0, 0), kind, BICOMPLEX))


# -- random members -----------------------------------------------------------


@pytest.mark.parametrize("p", SIGN_CASES + [AlgebraParams(2.0, 3.0), AlgebraParams(-1.0, 0.5)])
@pytest.mark.parametrize("kind", KINDS)
def test_sampled_members_satisfy_the_generator_contract(kind, p):
    rng = np.random.default_rng(11)
    x = sample_members(rng, 2000, kind, p.alpha, p.beta, min_norm=1e-12)
    assert x.shape == (2000, 4)
    residual = np.abs(constraint_arrays(x, kind, p.alpha, p.beta)) / np.maximum(1.0, np.abs(x).max(-1) ** 2)
    assert residual.max() <= 1e-12
    assert np.abs(metric_arrays(x, x, kind, p.alpha, p.beta)).min() > 1e-12


@pytest.mark.parametrize("p", SIGN_CASES)
@pytest.mark.parametrize("kind", KINDS)
def test_closure_inverse_and_norm_multiplicativity(kind, p):
    rng = np.random.default_rng(3)
    for x, y in zip(sample_members(rng, 200, kind, p.alpha, p.beta), sample_members(rng, 200, kind, p.alpha, p.beta)):
        px = membership(GBCNumber.from_array(x), kind, p)
        py = membership(GBCNumber.from_array(y), kind, p)
        xy = group_product(px, py)
        assert xy.norm == pytest.approx(px.norm * py.norm, rel=1e-9)
        back = multiply(py.value, group_inverse(py).value, p).as_array()
        np.testing.assert_allclose(back, ONE.as_array(), rtol=0, atol=1e-9)


@pytest.mark.parametrize("kind", KINDS)
def test_unit_members_are_closed(kind):
    p = AlgebraParams(1.0, -1.0)
    rng = np.random.default_rng(8)
    x = sample_members(rng, 500, kind, p.alpha, p.beta)
    n = metric_arrays(x, x, kind, p.alpha, p.beta)
    u = x[n > 0] / np.sqrt(n[n > 0])[:, None]
    uv = multiply_rows(u, u[::-1], p)
    assert np.abs(metric_arrays(uv, uv, kind, p.alpha, p.beta) - 1).max() <= 1e-9
    inv = inverse_arrays(u, kind, p.alpha, p.beta)
    assert np.abs(metric_arrays(inv, inv, kind, p.alpha, p.beta) - 1).max() <= 1e-9


def multiply_rows(x, y, p):
    return np.array([multiply(GBCNumber.from_array(a), GBCNumber.from_array(b), p).as_array() for a, b in zip(x, y)])
