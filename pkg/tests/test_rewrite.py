"""Exact normal ordering: rule identities, matrix cross-checks, strategy
independence, localization consistency, generator maps, the parser."""

import random
from fractions import Fraction

import numpy as np
import pytest

from elliptic_sl2.errors import DomainError
from elliptic_sl2.liealg import build_spin
from elliptic_sl2.rewrite import (
    LETTERS,
    GeneratorMap,
    NCPoly,
    apply_map,
    eval_poly_on_spin,
    eval_word_on_spin,
    identity_map,
    inversion_map,
    nf,
    nf_word,
    parse_expression,
    sign_map,
    verify_automorphism,
    verify_involution,
)

Jp = NCPoly.generator("Jp")
Jm = NCPoly.generator("Jm")
J0 = NCPoly.generator("J0")
Jpinv = NCPoly.generator("Jpinv")


def test_basic_normal_forms():
    assert nf_word(("Jp", "Jm")) == Jm * Jp + J0.scale(2)
    assert nf_word(("J0", "Jm")) == Jm * J0 - Jm
    assert nf_word(("Jp", "J0")) == J0 * Jp - Jp
    assert nf_word(("Jp", "Jpinv")) == NCPoly.one()
    assert nf_word(("Jpinv", "Jp")) == NCPoly.one()
    assert nf_word(()) == NCPoly.one()


def test_sandwiched_lowering():
    got = nf_word(("Jp", "Jm", "Jp"))
    expect = Jm * Jp * Jp + (J0 * Jp).scale(2)
    assert got == expect


def test_multiply_back_oracles():
    # each inverse-letter rule, undone by multiplying the inverse away
    assert Jp * nf_word(("Jpinv", "Jm")) == Jm
    assert Jp * nf_word(("Jpinv", "J0")) == J0
    assert Jpinv * nf_word(("Jp", "Jm")) == nf_word(("Jpinv", "Jp", "Jm"))


@pytest.mark.parametrize("c", [1, 2, 3, 4, 5, -1, -2, -3])
def test_raiser_power_past_lowering_closed_form(c):
    # Jp^c Jm = Jm Jp^c + c (2 J0 - c + 1) Jp^(c-1), valid for every integer c
    word = (("Jp",) * c if c > 0 else ("Jpinv",) * (-c)) + ("Jm",)
    got = nf_word(word)
    correction = (J0.scale(2) - NCPoly.scalar(c - 1)).scale(c) * (Jp ** (c - 1))
    expect = Jm * (Jp ** c) + correction
    assert got == expect


def test_100_random_words_match_matrices():
    rng = random.Random(2026)
    reps = [build_spin(j) for j in (0.5, 1.0, 1.5, 2.0)]
    for _ in range(100):
        word = tuple(rng.choice(("Jm", "J0", "Jp")) for _ in range(rng.randint(1, 7)))
        poly = nf_word(word)
        for rep in reps:
            direct = eval_word_on_spin(word, rep)
            ordered = eval_poly_on_spin(poly, rep)
            scale = max(1.0, float(np.max(np.abs(direct))))
            assert np.max(np.abs(direct - ordered)) / scale < 1e-12


def test_200_trials_of_order_independence():
    rng = random.Random(515)
    for _ in range(200):
        word = tuple(rng.choice(LETTERS) for _ in range(rng.randint(1, 8)))
        assert nf_word(word, "leftmost") == nf_word(word, "rightmost")


def test_localization_consistency():
    rng = random.Random(99)
    for _ in range(60):
        word = tuple(rng.choice(("Jm", "J0", "Jp")) for _ in range(rng.randint(1, 6)))
        base = nf_word(word)
        assert Jp * (Jpinv * base) == base
        assert Jpinv * (Jp * base) == base


def test_ncpoly_ring_axioms_on_random_elements():
    rng = random.Random(4)

    def rand_poly():
        out = NCPoly.zero()
        for _ in range(rng.randint(1, 3)):
            key = (rng.randint(0, 2), rng.randint(0, 2), rng.randint(-2, 2))
            out = out + NCPoly({key: Fraction(rng.randint(-3, 3), rng.randint(1, 4))})
        return out

    for _ in range(20):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


def test_inverse_and_powers():
    m = NCPoly({(0, 0, 3): Fraction(2, 5)})
    inv = m.inverse()
    assert m * inv == NCPoly.one()
    assert inv * m == NCPoly.one()
    assert (Jp.scale(2)) ** -2 == NCPoly({(0, 0, -2): Fraction(1, 4)})
    with pytest.raises(DomainError):
        (Jp + Jm).inverse()
    with pytest.raises(DomainError):
        (Jm ** 2).inverse()
    with pytest.raises(DomainError):
        Jp ** 0.5


def test_strategy_argument_is_validated():
    with pytest.raises(DomainError):
        nf_word(("Jp",), "middle-out")
    with pytest.raises(DomainError):
        nf_word(("Jq",))


def test_nf_accepts_weighted_words():
    got = nf([(2, ("Jp", "Jm")), (-4, ("J0",))])
    assert got == (Jm * Jp).scale(2)


def test_identity_and_sign_maps():
    assert verify_automorphism(identity_map())["all_zero"] is True
    s = sign_map()
    assert verify_automorphism(s)["all_zero"] is True
    assert verify_involution(s)["all_zero"] is True


def test_broken_map_is_rejected():
    bad = GeneratorMap(jp=Jp, jm=Jm, j0=J0 + NCPoly.one())
    report = verify_automorphism(bad)
    assert report["all_zero"] is False
    assert report["eq2"] is False
    assert report["residual_terms"]["eq2"]  # nonempty residual, reported exactly


@pytest.mark.parametrize("eps", [1, -1])
def test_inversion_map_exact(eps):
    m = inversion_map(Fraction(7, 10), Fraction(3, 5), eps)
    assert verify_automorphism(m)["all_zero"] is True
    assert verify_involution(m)["all_zero"] is True
    # the lowering image is the exact once-dressed sandwich
    expect = nf_word(("Jp", "Jm", "Jp")).scale(Fraction(eps) * Fraction(3, 5)
                                               * Fraction(7, 10) ** 2 / 4)
    assert m.jm == expect


def test_inversion_map_validates_input():
    with pytest.raises(DomainError):
        inversion_map(Fraction(1, 2), Fraction(1, 3), 2)
    with pytest.raises(DomainError):
        inversion_map(0, Fraction(1, 3), 1)


def test_apply_map_is_linear_and_multiplicative():
    m = inversion_map(Fraction(1, 2), Fraction(2, 3), -1)
    a = Jm * Jp + J0.scale(3)
    b = Jp ** 2
    assert apply_map(m, a + b) == apply_map(m, a) + apply_map(m, b)
    assert apply_map(m, a * b) == apply_map(m, a) * apply_map(m, b)


def test_eval_poly_rejects_inverse_powers():
    with pytest.raises(DomainError):
        eval_poly_on_spin(Jpinv, build_spin(1.0))
    with pytest.raises(DomainError):
        eval_word_on_spin(("Jpinv",), build_spin(1.0))


def test_terms_json_roundtrip():
    poly = nf_word(("Jp", "Jm", "J0")) - Jpinv.scale(Fraction(3, 7))
    back = NCPoly.from_terms(poly.to_terms())
    assert back == poly
    rows = poly.to_terms()
    assert rows == sorted(rows, key=lambda r: (r["a"], r["b"], r["c"]))


# -- parser --


def test_parser_relation_identities():
    assert parse_expression("[Jp, Jm] - 2*J0").is_zero()
    assert parse_expression("[J0, Jp] - Jp").is_zero()
    assert parse_expression("[J0, Jm] + Jm").is_zero()


def test_parser_juxtaposition_and_rationals():
    got = parse_expression("3/4 Jm^2 J0 - 2 Jp")
    assert got == (Jm ** 2 * J0).scale(Fraction(3, 4)) - Jp.scale(2)


def test_parser_precedence_and_parentheses():
    assert parse_expression("2*Jp^2") == (Jp ** 2).scale(2)
    assert parse_expression("(Jm + Jp)^2") == (Jm + Jp) * (Jm + Jp)
    assert parse_expression("-Jp^2") == -(Jp ** 2)
    assert parse_expression("Jp^-1") == Jpinv
    assert parse_expression("(2 Jp)^-1") == Jpinv.scale(Fraction(1, 2))


def test_parser_nested_brackets():
    got = parse_expression("[Jp, [Jp, Jm]] + 2*Jp")
    assert got.is_zero()


def test_parser_normal_orders_its_output():
    got = parse_expression("Jp * Jm")
    assert got == Jm * Jp + J0.scale(2)


def test_parser_error_positions():
    with pytest.raises(DomainError, match="position"):
        parse_expression("Jp + * Jm")
    with pytest.raises(DomainError, match="position"):
        parse_expression("[Jp, Jm")
    with pytest.raises(DomainError):
        parse_expression("")
    with pytest.raises(DomainError):
        parse_expression("Jx + 1")
    with pytest.raises(DomainError, match="integer"):
        parse_expression("Jp^(1/2)")
    with pytest.raises(DomainError):
        parse_expression("(Jp + Jm)^-1")
