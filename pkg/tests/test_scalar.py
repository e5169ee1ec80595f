import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinrt.errors import InvalidColor
from spinrt.scalar import (
    Mod2C, ScalarContext, delta_spin, delta_spin_oracle, gauss_sum, in_ddot, is_integral,
    mod_dim, qint, twist_scalar,
)

from conftest import rel
from strategies import generic_alpha


@pytest.mark.parametrize("r", [4, 8, 12, 16, 20])
def test_gauss_sum_closed_form(r):
    assert abs(gauss_sum(ScalarContext(r)) - (1 - 1j) * math.sqrt(r)) < 1e-10


def test_gauss_sum_r8_value():
    assert abs(gauss_sum(ScalarContext(8)) - (2 * math.sqrt(2) - 2j * math.sqrt(2))) < 1e-12


@pytest.mark.parametrize("bad", [0, 2, 6, -4, 3.5])
def test_level_must_be_multiple_of_four(bad):
    with pytest.raises((ValueError, TypeError)):
        ScalarContext(bad)


def test_quantum_integers(ctx):
    assert abs(qint(ctx, 1) - 1) < 1e-14
    assert abs(qint(ctx, ctx.r)) < 1e-12
    assert abs(qint(ctx, 2) - (ctx.q + 1 / ctx.q)) < 1e-13


def test_modified_dimension_on_rz_is_the_limit(ctx):
    for n in (-2, -1, 0, 1, 2):
        eps = 1e-6
        approx = mod_dim(ctx, n * ctx.r + eps)
        assert mod_dim(ctx, n * ctx.r) == (-1) ** (n + 1)
        assert abs(approx - (-1) ** (n + 1)) < 1e-4


def test_modified_dimension_rejects_other_integers(ctx):
    with pytest.raises(InvalidColor):
        mod_dim(ctx, 1)


def test_index_set(ctx):
    assert in_ddot(ctx, 0.5)
    assert in_ddot(ctx, 0)
    assert in_ddot(ctx, -ctx.r)
    assert not in_ddot(ctx, 1)
    assert not in_ddot(ctx, ctx.r + 2)


@given(generic_alpha)
def test_modified_dimension_symmetries(alpha):
    ctx = ScalarContext(4)
    # d is even in alpha and 2r-periodic up to the sign pattern of rZ shifts
    assert rel(mod_dim(ctx, alpha), mod_dim(ctx, -alpha)) < 1e-9
    assert rel(mod_dim(ctx, alpha + 2 * ctx.r), mod_dim(ctx, alpha)) < 1e-8


@given(generic_alpha)
def test_twist_shift_by_r(alpha):
    ctx = ScalarContext(8)
    # theta_{alpha + r} = theta_alpha q^{r alpha + r^2/2}
    ratio = twist_scalar(ctx, alpha + ctx.r) / twist_scalar(ctx, alpha)
    assert rel(ratio, ctx.qpow(ctx.r * alpha + ctx.r**2 / 2)) < 1e-9


def test_stabilization_constants_are_conjugate(ctx):
    assert abs(delta_spin(ctx, 1) - delta_spin(ctx, -1).conjugate()) < 1e-12
    assert rel(abs(delta_spin(ctx, 1)), ctx.r**1.5 / math.sqrt(2)) < 1e-12


def test_stabilization_constant_values():
    ctx = ScalarContext(4)
    assert rel(delta_spin(ctx, -1), 4 * math.sqrt(2) * cmath.exp(1j * math.pi / 8)) < 1e-12
    assert rel(delta_spin(ctx, 1), 4 * math.sqrt(2) * cmath.exp(-1j * math.pi / 8)) < 1e-12


@given(generic_alpha, st.sampled_from([1, -1]))
def test_stabilization_sum_is_alpha_independent(alpha, sign):
    ctx = ScalarContext(4)
    assert rel(delta_spin_oracle(ctx, alpha, sign), delta_spin(ctx, sign)) < 1e-8


def test_delta_sign_validation(ctx):
    with pytest.raises(ValueError):
        delta_spin(ctx, 0)


finite = st.builds(complex, st.floats(-50, 50), st.floats(-5, 5))


@given(finite, finite)
def test_mod2c_group_laws(a, b):
    A, B = Mod2C(a), Mod2C(b)
    assert A + B == B + A
    assert (A + B) - B == A
    assert A + (-A) == 0
    assert 0 <= A.value.real < 2


@given(finite, st.integers(-6, 6))
def test_mod2c_integer_scaling(a, n):
    assert Mod2C(a) * n == Mod2C(n * a)
    assert Mod2C(a) * 2 + Mod2C(a) * -2 == 0


def test_mod2c_wraps_and_compares():
    assert Mod2C(2) == 0
    assert Mod2C(-0.5) == 1.5
    assert Mod2C(1.999999999999) == 0
    assert Mod2C(3) != 0
    with pytest.raises(TypeError):
        Mod2C(1) * 0.5
    with pytest.raises(TypeError):
        hash(Mod2C(1))


def test_integrality():
    assert is_integral(1)
    assert is_integral(-3)
    assert not is_integral(0.5)
    assert not is_integral(1 + 0.1j)
