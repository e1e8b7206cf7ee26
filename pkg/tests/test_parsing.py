import pytest
from hypothesis import given, strategies as st

from superjac.algebra import IntPoly, ModPoly, format_coeffs
from superjac.parsing import PolynomialSyntaxError, parse_polynomial


@pytest.mark.parametrize(
    "text, expect",
    [
        ("x^5 - x - 1", IntPoly((-1, -1, 0, 0, 0, 1))),
        ("3x^2+2 mod 7", ModPoly(7, (2, 0, 3))),
        ("−x^2 + 4*x", IntPoly((0, 4, -1))),
        ("  2 x ^ 3  ", IntPoly((0, 0, 0, 2))),
        ("x + x", IntPoly((0, 2))),
        ("+7", IntPoly((7,))),
        ("9x mod 5", ModPoly(5, (0, 4))),
    ],
)
def test_examples(text, expect):
    assert parse_polynomial(text) == expect


@pytest.mark.parametrize(
    "text, offset",
    [("x^^2", 2), ("x^2 +", 5), ("3*", 2), ("x^2 mod 8", 8), ("x y", 2), ("", 0), ("x^2 mod", 7)],
)
def test_syntax_errors_report_offset(text, offset):
    with pytest.raises(PolynomialSyntaxError) as exc:
        parse_polynomial(text)
    assert exc.value.offset == offset
    assert isinstance(exc.value, ValueError)


@given(st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=12))
def test_round_trip(coeffs):
    f = IntPoly(coeffs)
    assert parse_polynomial(format_coeffs(f.coeffs)) == f


@given(st.lists(st.integers(0, 12), min_size=1, max_size=8), st.sampled_from([2, 3, 13]))
def test_round_trip_mod(coeffs, q):
    f = ModPoly(q, coeffs)
    if f.is_zero():
        return
    assert parse_polynomial(f"{format_coeffs(f.coeffs)} mod {q}") == f
