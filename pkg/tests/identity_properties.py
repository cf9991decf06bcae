"""Randomized exact identities (at least 100 rational inputs each).

The ``check_*`` functions are collected through the acceptance suite.
"""

from __future__ import annotations

from fractions import Fraction
import math
from functools import lru_cache
from itertools import combinations

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from skewtorsion import (
    KForm,
    LieFrame,
    add_torsion,
    canonical,
    codifferential,
    curvature,
    exterior_derivative,
    hodge_star,
    inner,
    levi_civita,
    nijenhuis,
    pullback_endo,
    su3_torsion,
    tilde_curvature,
    volume,
    wedge,
)
from skewtorsion.exterior import parse_form, to_array, zeros

from skewtorsion.structures import type_30_part

from helpers import nil6

EXAMPLES = settings(max_examples=100, deadline=None, derandomize=True)

rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))
nonzero = rationals.filter(lambda q: q != 0)


def forms(n: int, k: int, max_terms: int = 6):
    """Sparse rational k-forms with up to ``max_terms`` monomials."""
    keys = list(combinations(range(n), k))
    return st.dictionaries(st.sampled_from(keys), rationals, max_size=max_terms).map(
        lambda c: KForm(n, k, c)
    )


@st.composite
def dim_degree_form(draw, dims=(5, 6, 7, 8)):
    n = draw(st.sampled_from(dims))
    k = draw(st.integers(0, n))
    return draw(forms(n, k))


@EXAMPLES
@given(forms(6, 1))
def check_w2_identity_on_one_forms(theta):
    pp = canonical("su3").psi_plus
    assert hodge_star(wedge(hodge_star(wedge(theta, pp)), pp)) == theta * -2


@EXAMPLES
@given(forms(7, 1))
def check_one_form_identity_against_star_omega(gamma):
    so = hodge_star(canonical("g2").omega)
    assert hodge_star(wedge(hodge_star(wedge(gamma, so)), so)) == gamma * 3


@EXAMPLES
@given(dim_degree_form())
def check_double_star_sign(a):
    n, k = a.dim, a.degree
    assert hodge_star(hodge_star(a)) == a * (-1) ** (k * (n - k))


@st.composite
def basis_pair(draw):
    n = draw(st.sampled_from((5, 6, 7, 8)))
    k = draw(st.integers(0, n))
    keys = list(combinations(range(n), k))
    i = draw(st.integers(0, len(keys) - 1))
    j = draw(st.integers(0, len(keys) - 1))
    a, b = draw(rationals), draw(rationals)
    return KForm(n, k, {keys[i]: a}), KForm(n, k, {keys[j]: b})


@EXAMPLES
@given(basis_pair())
def check_wedge_star_is_inner_times_volume(pair):
    a, b = pair
    assert wedge(a, hodge_star(b)) == volume(a.dim) * inner(a, b)


def check_wedge_star_exhaustive_basis_pairs():
    for n in (5, 6, 7, 8):
        vol = volume(n)
        for k in range(n + 1):
            for key in combinations(range(n), k):
                e = KForm.mono(n, key)
                assert wedge(e, hodge_star(e)) == vol
                assert hodge_star(e) ^ e == vol * (-1) ** (k * (n - k))


@st.composite
def nil6_pair(draw):
    k = draw(st.integers(0, 5))
    return draw(forms(6, k)), draw(forms(6, k + 1))


@EXAMPLES
@given(nil6_pair())
def check_codifferential_is_adjoint_of_d(pair):
    a, b = pair
    M = nil6()
    assert inner(exterior_derivative(M, a), b) == inner(a, codifferential(M, b))


@lru_cache(maxsize=None)
def _scaled_nil6(t: Fraction) -> LieFrame:
    d = [zeros(6, 2)] * 6
    for k, text in {0: "e36", 3: "e26", 4: "e23"}.items():
        d[k] = parse_form(text, 6) * t
    return LieFrame(6, tuple(d))


@EXAMPLES
@given(nonzero)
def check_dF_minus_against_JN_on_rescaled_nil6(t):
    M = _scaled_nil6(t)
    J = canonical("su3").J
    N = nijenhuis(M, J).form
    dF_minus = type_30_part(J, M.d(canonical("su3").F))
    assert dF_minus
    assert dF_minus == pullback_endo(J, N) * Fraction(-3, 4)


def _integer_tensor(arr):
    den = math.lcm(*(Fraction(x).denominator for x in arr.flat))
    return np.vectorize(lambda x: int(x * den), otypes=[object])(arr), den


@lru_cache(maxsize=None)
def _nil6_curvatures():
    """R^nabla, R~ and dT on nil6 as integer tensors with denominators."""
    M = nil6()
    T = su3_torsion(canonical("su3"), M).T
    Rn = curvature(M, add_torsion(levi_civita(M), T))
    dT = exterior_derivative(M, T)
    return tuple(_integer_tensor(a) for a in (Rn.r, tilde_curvature(Rn, dT).r, to_array(dT)))


def _evaluate(tensor, vectors):
    arr, den = tensor
    ints = [np.array([x.numerator * (math.lcm(*(y.denominator for y in v)) // x.denominator) for x in v],
                     dtype=object) for v in vectors]
    scale = den * math.prod(math.lcm(*(y.denominator for y in v)) for v in vectors)
    return Fraction(np.einsum("ijkl,i,j,k,l->", arr, *ints), scale)


vectors6 = st.lists(rationals, min_size=6, max_size=6)


@EXAMPLES
@given(st.tuples(vectors6, vectors6, vectors6, vectors6))
def check_torsion_curvature_pairing_on_nil6(vs):
    Rn, Rt, dT = _nil6_curvatures()
    X, Y, Z, V = vs
    lhs = _evaluate(Rn, (X, Y, Z, V))
    rhs = _evaluate(Rt, (Z, V, X, Y)) + _evaluate(dT, (X, Y, Z, V)) / 2
    assert lhs == rhs


PROPERTIES = [
    check_w2_identity_on_one_forms,
    check_one_form_identity_against_star_omega,
    check_double_star_sign,
    check_wedge_star_is_inner_times_volume,
    check_wedge_star_exhaustive_basis_pairs,
    check_codifferential_is_adjoint_of_d,
    check_dF_minus_against_JN_on_rescaled_nil6,
    check_torsion_curvature_pairing_on_nil6,
]
