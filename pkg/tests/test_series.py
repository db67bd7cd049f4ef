from fractions import Fraction as F
from math import factorial

import pytest

from ssx.errors import NonUnitConstant, ParseError, ZeroLeadingCoefficient
from ssx.series import (
    PowerSeries,
    change_variable_power,
    from_puiseux,
    normalize,
    parse_scalar,
    reduced_from_literal,
    reduced_to_literal,
    series_exp,
    series_log,
    series_pow,
    series_xdlog,
)


def test_parse_scalar_reads_decimals_exactly():
    assert parse_scalar("0.6") == F(3, 5)
    assert parse_scalar("-5/32768") == F(-5, 32768)
    assert parse_scalar(3) == F(3)
    assert isinstance(parse_scalar(0.25), float)


@pytest.mark.parametrize("bad", ["1/0", "abc", "", True])
def test_parse_scalar_rejects_malformed(bad):
    with pytest.raises(ParseError):
        parse_scalar(bad)


def test_binomial_square_root_coefficients():
    s = series_pow(PowerSeries([1, 1, 0, 0, 0]), F(1, 2))
    assert s.coeffs == (1, F(1, 2), F(-1, 8), F(1, 16), F(-5, 128))


def test_exp_and_log_of_elementary_series():
    assert series_exp(PowerSeries([0, 1, 0, 0, 0, 0])).coeffs == tuple(F(1, factorial(n)) for n in range(6))
    log = series_log(PowerSeries([1, 1, 0, 0, 0]))
    assert log.coeffs == (0, 1, F(-1, 2), F(1, 3), F(-1, 4))


def test_xdlog_of_geometric_series():
    # x d/dx ln 1/(1-x) = x/(1-x)
    assert series_xdlog(PowerSeries([1] * 6)).coeffs == (0, 1, 1, 1, 1, 1)


def test_log_needs_unit_constant():
    with pytest.raises(NonUnitConstant):
        series_log(PowerSeries([2, 1]))


def test_binary_operations_truncate_to_shorter_order():
    a = PowerSeries([1, 2, 3, 4])
    b = PowerSeries([1, 1])
    assert (a + b).order == 1
    assert (a * b).coeffs == (1, 3)


def test_truncate_never_pads():
    s = PowerSeries([1, 2])
    with pytest.raises(ValueError):
        s.truncate(3)
    assert s.padded(3).coeffs == (1, 2, 0, 0)


def test_exact_and_float_kinds():
    assert PowerSeries([1, F(1, 2)]).scalar_kind == "exact"
    assert PowerSeries([1, 0.5]).scalar_kind == "float"


def test_normalize_is_lossless():
    raw = PowerSeries([F(2), F(4), F(-6)])
    f = normalize(raw, leading_power=-1)
    assert f.prefactor.amplitude == 2 and f.prefactor.exponent == -1
    assert f.series.coeffs == (1, 2, -3)
    assert f.raw() == raw


def test_normalize_rejects_zero_lead():
    with pytest.raises(ZeroLeadingCoefficient):
        normalize([0, 1])


def test_change_variable_power_spreads_coefficients():
    assert change_variable_power(PowerSeries([1, 2, 3]), 2).coeffs == (1, 0, 2, 0, 3)


def test_puiseux_reduction_keeps_ladder():
    f = from_puiseux([3, 6, 9], leading_numerator=1, denominator=2)
    assert f.prefactor.exponent == 1
    assert f.series.coeffs == (1, 2, 3)


def test_literal_round_trip():
    lit = {"prefactor": {"A": "1/2", "alpha": 1}, "coeffs": [1, "1/8", "-1/128"]}
    f = reduced_from_literal(lit)
    assert f.series.coeffs == (1, F(1, 8), F(-1, 128))
    assert reduced_to_literal(f) == lit


def test_literal_needs_unit_constant():
    with pytest.raises(ParseError):
        reduced_from_literal({"prefactor": {"A": 1, "alpha": 0}, "coeffs": [2, 1]})


def test_gamma_is_beta_minus_alpha():
    f = normalize([1, 1], leading_power=2)
    assert f.gamma(F(1, 2)) == F(-3, 2)
