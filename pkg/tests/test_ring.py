"""Monomial/character grammar: parsing, formatting, arithmetic."""

import pytest

from qfold import ring
from qfold.ring import ALPHA, AlphaPoly, Character, Monomial, mono


def test_parse_format_roundtrip_simple():
    text = "Y[1;1]*Y[2;q^3 t]^-2"
    coeff, m = ring.parse_monomial(text)
    assert coeff == AlphaPoly(1)
    assert ring.format_monomial(coeff, m) == text


def test_parse_coefficient_forms():
    for text, want in [("3*Y[1;1]", AlphaPoly(3)),
                       ("(a)*Y[1;1]", ALPHA),
                       ("(2a+1)*Y[1;1]", AlphaPoly((1, 2)))]:
        coeff, _ = ring.parse_monomial(text)
        assert coeff == want, text


def test_parse_negative_param_is_phase_shorthand():
    # a leading '-' on the parameter means the half-period phase; it
    # needs the lattice period to be resolvable
    with pytest.raises(ring.ParseError):
        ring.parse_monomial("Z[1;-t^2]")
    _, m = ring.parse_monomial("Z[1;-t^2]", phase_period=4)
    _, m2 = ring.parse_monomial("Z[1;E^2 t^2]", phase_period=4)
    assert m.exps == m2.exps
    assert ring.format_monomial(AlphaPoly(1), m, phase_period=4) == "Z[1;-t^2]"


@pytest.mark.parametrize("bad", [
    "Y[1;1", "Y[;1]", "Q[1;1]", "Y[1;1]^", "Y[1]", "", "Y[1;q^]",
])
def test_parse_errors(bad):
    with pytest.raises(ring.ParseError):
        ring.parse_monomial(bad)


def test_character_roundtrip_with_multiplicities():
    text = "2\tY[1;t]*Y[1;t^3]^-1\n1\tY[2;1]"
    ch = ring.parse_character(text)
    assert ch.num_monomials() == 2
    assert ch.total_multiplicity() == 3
    assert ring.parse_character(ch.format()) == ch


def test_character_arithmetic():
    a = ring.parse_character("1\tY[1;1]")
    b = ring.parse_character("1\tY[1;q^2]^-1*Y[2;q]")
    s = a + b
    assert s.num_monomials() == 2
    p = a * b
    [(m, c)] = p.terms.items()
    assert c == 1
    assert m == ring.parse_monomial("Y[1;1]*Y[1;q^2]^-1*Y[2;q]")[1]


def test_alphapoly_arithmetic():
    two_a = ALPHA + ALPHA
    assert two_a == AlphaPoly((0, 2))
    assert ALPHA * ALPHA == AlphaPoly((0, 0, 1))
    assert (ALPHA + AlphaPoly(1)).eval_at(2) == 3
    assert AlphaPoly(0) == AlphaPoly()
    assert not AlphaPoly()


def test_mono_builder_matches_parser():
    built = mono("Y", (1, 0, 0, 0), (2, 0, 1, 3, -1))
    _, parsed = ring.parse_monomial("Y[1;1]*Y[2;q t^3]^-1")
    assert built == parsed
