import math
from fractions import Fraction as F

import pytest

from ssx.errors import NegativeTower, NoFiniteLimit, ZeroGamma
from ssx.roots import (
    additive_limit,
    amplitude_corrected,
    amplitude_iterated_root,
    build_corrected,
    build_iterated_root,
    eval_corrected,
    eval_iterated_root,
    generic_root_limit,
    tower_limit,
)
from ssx.series import PowerSeries, Prefactor, ReducedExpansion, normalize, series_pow


def test_exact_power_has_trivial_tower():
    g = F(2, 3)
    f = ReducedExpansion(Prefactor(F(1), F(0)), series_pow(PowerSeries([1, 1, 0, 0, 0]), g))
    for k in range(1, 5):
        r = build_iterated_root(f, k, g)
        assert r.A == (1,) + (0,) * (k - 1)
        assert amplitude_iterated_root(r).amplitude == 1.0


def test_first_order_amplitude_closed_form():
    # 1 + a x with gamma: R_1 = (1 + a x / gamma)**gamma, amplitude (a/gamma)**gamma
    f = normalize([1, -2 / math.sqrt(math.pi), 1.0])
    r = build_iterated_root(f, 1, -1)
    assert amplitude_iterated_root(r).amplitude == pytest.approx(math.sqrt(math.pi) / 2, abs=1e-15)


def test_parameters_are_exact_for_rational_input():
    f = normalize([1, F(1, 8), F(-1, 128), F(1, 1024)])
    r = build_iterated_root(f, 3, F(1, 2))
    assert all(isinstance(a, F) for a in r.A)
    assert r.expand(3) == f.series


def test_negative_tower_names_level():
    with pytest.raises(NegativeTower) as info:
        tower_limit([F(1), F(-3), F(1)])
    assert info.value.level == 2


def test_eval_matches_series_near_origin():
    f = normalize([1, F(1, 8), F(-1, 128), F(1, 1024), F(-5, 32768)])
    r = build_iterated_root(f, 4, F(1, 2))
    x = 1e-3
    assert eval_iterated_root(r, x) == pytest.approx(float(f.series(x)), rel=1e-13)


def test_zero_gamma_is_rejected():
    with pytest.raises(ZeroGamma):
        build_iterated_root(normalize([1, 1, 1]), 2, 0)


def test_generic_root_limit():
    form = generic_root_limit(Prefactor(F(2), F(0)), 4, F(1, 4), 2)
    assert form.amplitude == pytest.approx(2 * 4 ** 0.25)
    assert form.exponent == pytest.approx(0.5)


def test_corrected_reproduces_extra_coefficients():
    f = normalize([1, F(1, 8), F(-1, 128), F(1, 1024), F(-5, 32768)])
    base = build_iterated_root(f, 2, F(1, 2))
    c = build_corrected(base, f.series.coeffs[3:5], 2)
    assert c.expand(4) == f.series
    x = 1e-3
    assert eval_corrected(c, x) == pytest.approx(float(f.series(x)), rel=1e-13)
    assert amplitude_corrected(c).amplitude == pytest.approx(
        amplitude_iterated_root(base).amplitude * c.correction_limit()
    )


def test_corrected_with_exact_base_is_trivial():
    g = F(1, 2)
    f = ReducedExpansion(Prefactor(F(1), F(0)), series_pow(PowerSeries([1, 1, 0, 0, 0]), g))
    c = build_corrected(build_iterated_root(f, 2, g), f.series.coeffs[3:5], 2)
    assert c.d == 0 and c.correction_limit() == 1.0


def test_single_extra_coefficient_has_no_limit():
    f = normalize([1, F(1, 8), F(-1, 128), F(1, 100)])
    with pytest.raises(NoFiniteLimit):
        build_corrected(build_iterated_root(f, 2, F(1, 2)), f.series.coeffs[3:4], 1)


def test_additive_limit_of_rational_function():
    # (1 + 2x)/(1 + x) = 1 + x/(1 + x) tends to 2
    f = normalize([1, 1, -1, 1, -1])
    assert additive_limit(f, 3).amplitude == pytest.approx(2.0)
    with pytest.raises(ValueError):
        additive_limit(f, 1)
