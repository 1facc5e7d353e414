import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from superharm.core import ParseError, PiScaledValue, SpaceParams, SuperPolynomial
from superharm.parsing import (
    piscaled_from_json,
    piscaled_to_json,
    poly_from_json,
    poly_from_text,
    poly_to_json,
    poly_to_text,
    weights_from_json,
    weights_to_json,
)
from superharm.rand import random_polynomial

P21 = SpaceParams(2, 1)


def test_parse_example():
    p = poly_from_text("3/2*x1^2*e1*e2 - x2", P21)
    assert len(p.terms) == 2
    assert poly_from_text(poly_to_text(p), P21) == p


def test_parse_sign_normalization():
    assert poly_from_text("e2*e1", P21) == poly_from_text("-e1*e2", P21)
    assert poly_from_text("e1*e1", P21).is_zero()
    assert poly_from_text("2*e1^2", P21).is_zero()


def test_parse_unary_and_spacing():
    assert poly_from_text("-x1 + + x2", P21) == poly_from_text("x2 - x1", P21)
    assert poly_from_text(" 7 ", P21) == SuperPolynomial.constant(P21, 7)
    assert poly_from_text("x1*2", P21) == poly_from_text("2*x1", P21)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        poly_from_text("x1 + $", P21)
    assert err.value.pos == 5
    with pytest.raises(ParseError):
        poly_from_text("", P21)
    with pytest.raises(ParseError):
        poly_from_text("x9", P21)
    with pytest.raises(ParseError):
        poly_from_text("x1^1/2", P21)
    with pytest.raises(ParseError):
        poly_from_text("x1 x2", P21)


def test_zero_prints_as_zero():
    assert poly_to_text(SuperPolynomial.zero(P21)) == "0"
    assert poly_from_text("0", P21).is_zero()


def test_json_round_trip_exact():
    p = poly_from_text("3/2*x1^2*e1*e2 - x2", P21)
    obj = poly_to_json(p)
    assert obj["m"] == 2 and obj["n"] == 1
    assert poly_from_json(obj) == p
    # via an actual JSON string
    assert poly_from_json(json.loads(json.dumps(obj))) == p


def test_json_normalizes_unsorted_ferm():
    obj = {"m": 2, "n": 1, "terms": [{"coeff": "1", "bos": [0, 0], "ferm": [2, 1]}]}
    assert poly_from_json(obj) == poly_from_text("-e1*e2", P21)


def test_json_space_mismatch():
    obj = poly_to_json(poly_from_text("x1", P21))
    with pytest.raises(ParseError):
        poly_from_json(obj, SpaceParams(3, 1))


_SPACES = [SpaceParams(0, 0), SpaceParams(2, 1), SpaceParams(1, 2), SpaceParams(3, 0)]


@st.composite
def polynomials(draw):
    params = draw(st.sampled_from(_SPACES))
    seed = draw(st.integers(min_value=0, max_value=10**6))
    rng = random.Random(seed)
    return random_polynomial(rng, params, max_degree=5, terms=draw(st.integers(0, 6)))


@settings(max_examples=150, deadline=None)
@given(polynomials())
def test_text_round_trip(p):
    assert poly_from_text(poly_to_text(p), p.params) == p


@settings(max_examples=150, deadline=None)
@given(polynomials())
def test_json_round_trip(p):
    assert poly_from_json(json.loads(json.dumps(poly_to_json(p)))) == p


def test_piscaled_json():
    v = PiScaledValue(Fraction(-3, 4), -2)
    assert piscaled_to_json(v) == {"coeff": "-3/4", "halfPiExp": -2}
    assert piscaled_from_json(piscaled_to_json(v)) == v


def test_weights_json():
    w = (Fraction(1), Fraction(-2, 3))
    assert weights_to_json(w) == {"a": ["1", "-2/3"]}
    assert weights_from_json(weights_to_json(w)) == w
