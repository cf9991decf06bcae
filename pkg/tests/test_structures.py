"""G-structures, intrinsic torsion, instantons and lifts."""

from __future__ import annotations

from fractions import Fraction

import pytest

from skewtorsion import (
    KForm,
    LieFrame,
    NotAdmissible,
    canonical,
    in_g2,
    in_spin7,
    in_su3,
    instanton_check,
    lee_form,
    lift_su3_to_g2,
    nijenhuis,
    scalar_identity_check,
    su3_analyze,
    su3_torsion,
)
from skewtorsion.exterior import Endomorphism, hodge_star, parse_form, volume, wedge, zeros
from skewtorsion.frames import constant_curvature

from helpers import nil6


def flat(n: int) -> LieFrame:
    return LieFrame(n, (zeros(n, 2),) * n)


def test_canonical_structures_satisfy_their_invariants():
    for kind in ("su3", "sasaki"):
        assert canonical(kind).invariant_violations() == []
    s = canonical("su3")
    assert s.J @ s.J == -Endomorphism.identity(6)
    assert wedge(wedge(s.F, s.F), s.F) == volume(6) * -6


def test_spin7_form_is_self_dual_with_square_fourteen_vol():
    Phi = canonical("spin7").Phi
    assert hodge_star(Phi) == Phi
    assert wedge(Phi, Phi) == volume(8) * 14


def test_flat_structures_are_torsion_free():
    s = canonical("su3")
    rep = su3_analyze(s, flat(6))
    assert not rep.theta6 and not rep.N
    assert not su3_torsion(s, flat(6)).T


def test_nijenhuis_of_nil6_is_a_three_form():
    res = nijenhuis(nil6(), canonical("su3").J)
    assert res.skew and res.form == -canonical("su3").psi_minus


def test_non_admissible_frame_names_condition():
    d = [zeros(6, 2)] * 6
    d[0] = parse_form("e36", 6)
    d[3] = parse_form("e26", 6) * 2
    d[4] = parse_form("e23", 6)
    with pytest.raises(NotAdmissible) as info:
        su3_torsion(canonical("su3"), LieFrame(6, tuple(d)))
    assert info.value.condition == "N_skew"


def test_structure_algebra_membership():
    s = canonical("su3")
    assert in_su3(parse_form("e12 - e34", 6), s)
    assert not in_su3(s.F, s)
    g2 = canonical("g2")
    assert not in_g2(KForm.mono(7, (0, 1)), g2)
    assert in_g2(parse_form("e12 - e34", 7), g2)
    assert not in_g2(parse_form("e12 + e34", 7), g2)
    sp = canonical("spin7")
    assert not in_spin7(KForm.mono(8, (0, 1)), sp)


def test_flat_curvature_is_an_instanton():
    z = constant_curvature(7, 0)
    assert instanton_check(z, canonical("g2"))


def test_round_sphere_curvature_is_not_an_instanton():
    assert not instanton_check(constant_curvature(6, 1), canonical("su3"))


def test_lift_produces_canonical_g2_form():
    lift = lift_su3_to_g2(canonical("su3"), flat(6))
    assert lift.structure.omega == canonical("g2").omega
    assert not lee_form(lift.structure, lift.space)


def test_lift_of_nil6_keeps_torsion():
    M = nil6()
    s = canonical("su3")
    lift = lift_su3_to_g2(s, M)
    assert lift.sol7g_holds and lift.pairing == 0
    assert lift.theta7 == KForm.mono(7, (6,))


def test_scalar_identity_on_nil6():
    rep = scalar_identity_check("scal2", canonical("su3"), nil6())
    assert rep.equal and rep.trace == Fraction(-3, 2)


def test_unknown_scalar_identity_kind():
    with pytest.raises(ValueError):
        scalar_identity_check("nope", canonical("su3"), nil6())
