"""Forms, wedge, Hodge star, parsing and exact contractions."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from skewtorsion import DegreeMismatch, DimensionMismatch, FrameSyntaxError, KForm
from skewtorsion.exterior import (
    Endomorphism,
    exact_einsum,
    format_form,
    hodge_star,
    inner,
    linear_ratio,
    parse_form,
    perm_sign,
    pullback_endo,
    volume,
    wedge,
    zeros,
)


def e(n, *idx):
    return KForm.mono(n, [i - 1 for i in idx])


def test_unsorted_keys_pick_up_permutation_sign():
    assert KForm(4, 2, {(1, 0): 3}) == KForm(4, 2, {(0, 1): -3})
    assert perm_sign((2, 0, 1)) == 1 and perm_sign((1, 0, 2)) == -1


def test_repeated_index_is_rejected():
    with pytest.raises(ValueError):
        KForm(4, 2, {(1, 1): 1})


def test_wedge_is_graded_commutative():
    a, b = e(5, 1) + e(5, 2) * 2, e(5, 3, 4)
    assert wedge(a, b) == wedge(b, a)
    assert wedge(a, a) == zeros(5, 2)
    assert wedge(e(5, 1), e(5, 2)) == -wedge(e(5, 2), e(5, 1))


def test_wedge_too_high_degree_is_zero():
    assert not wedge(e(3, 1, 2), e(3, 2, 3))


def test_hodge_star_small_cases():
    assert hodge_star(e(3, 1)) == e(3, 2, 3)
    assert hodge_star(e(3, 2)) == -e(3, 1, 3)
    assert hodge_star(KForm.const(4, 1)) == volume(4)
    assert hodge_star(volume(6)) == KForm.const(6, 1)


def test_inner_is_over_increasing_tuples():
    a = e(6, 1, 2, 3) * 2 + e(6, 4, 5, 6)
    assert inner(a, a) == 5
    assert inner(a, e(6, 1, 2, 4)) == 0


def test_mismatched_shapes_raise():
    with pytest.raises(DimensionMismatch):
        e(4, 1) + e(5, 1)
    with pytest.raises(DegreeMismatch):
        e(4, 1) + e(4, 1, 2)


def test_parse_and_format_round_trip():
    a = parse_form("-1/2*e12 + 3*e34 - e56", 6)
    assert a == e(6, 1, 2) * Fraction(-1, 2) + e(6, 3, 4) * 3 - e(6, 5, 6)
    assert parse_form(format_form(a), 6) == a


def test_parse_form_reports_column():
    with pytest.raises(FrameSyntaxError) as info:
        parse_form("e12 + e1x", 6, line=4)
    assert info.value.line == 4 and info.value.column >= 7


def test_linear_ratio():
    b = e(4, 1, 2) + e(4, 3, 4)
    assert linear_ratio(b * Fraction(-3, 7), b) == Fraction(-3, 7)
    assert linear_ratio(e(4, 1, 2), b) is None
    assert linear_ratio(b, zeros(4, 2)) is None


def test_pullback_by_complex_structure():
    J = Endomorphism([[0, -1], [1, 0]])
    assert J.is_almost_complex()
    assert pullback_endo(J, e(2, 1, 2)) == e(2, 1, 2)


def test_exact_einsum_matches_object_einsum():
    rng = np.random.default_rng(7)
    A = np.array([Fraction(int(p), int(q)) for p, q in rng.integers(1, 9, (27, 2))], dtype=object).reshape(3, 3, 3)
    B = np.array([Fraction(int(p), int(q)) for p, q in rng.integers(-9, 9, (9, 2)) + [0, 10]], dtype=object).reshape(3, 3)
    assert (exact_einsum("ijk,kl->ijl", A, B) == np.einsum("ijk,kl->ijl", A, B)).all()


def test_exact_einsum_falls_back_to_big_integers():
    big = Fraction(2**70, 3)
    A = np.array([[big, 1], [1, big]], dtype=object)
    out = exact_einsum("ij,jk->ik", A, A)
    assert out[0, 0] == big * big + 1
