"""Lie frames, connections, curvature and Bianchi calibration."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from skewtorsion import (
    InvalidFrame,
    KForm,
    LieFrame,
    add_torsion,
    bianchi_calibrate,
    codifferential,
    constant_curvature,
    curvature,
    levi_civita,
    product_with_line,
    ricci,
    scalar_curvature,
)
from skewtorsion.exterior import parse_form, zeros
from skewtorsion.frames import torsion_tensor

from helpers import nil6


def heisenberg() -> LieFrame:
    return LieFrame(3, (parse_form("e23", 3), zeros(3, 2), zeros(3, 2)))


def test_heisenberg_d_and_jacobi():
    H = heisenberg()
    assert H.d(KForm.mono(3, (0,))) == parse_form("e23", 3)
    assert not H.d(parse_form("e23", 3))


def test_jacobi_failure_names_a_triple():
    diffs = (parse_form("e12", 3), parse_form("e13", 3), zeros(3, 2))
    with pytest.raises(InvalidFrame) as info:
        LieFrame(3, diffs)
    assert info.value.triple == (0, 1, 2)


def test_levi_civita_is_metric_and_torsion_free():
    for M in (heisenberg(), nil6()):
        lc = levi_civita(M)
        assert lc.is_metric()
        assert not any(x != 0 for x in torsion_tensor(M, lc).flat)


def test_heisenberg_scalar_curvature():
    # the 3-dim Heisenberg group with de1 = e23 has s = -1/2
    assert scalar_curvature(curvature(heisenberg(), levi_civita(heisenberg()))) == Fraction(-1, 2)


def test_torsion_connection_torsion_is_the_form():
    M = heisenberg()
    T = parse_form("e123", 3)
    conn = add_torsion(levi_civita(M), T)
    tt = torsion_tensor(M, conn)
    assert tt[0, 1, 2] == 1 and tt[1, 0, 2] == -1


def test_constant_curvature_ricci():
    R = constant_curvature(5, Fraction(1, 4))
    assert (ricci(R) == np.eye(5, dtype=int) * 1).all()
    assert scalar_curvature(R) == 5


def test_codifferential_of_closed_frame_forms():
    M = heisenberg()
    assert codifferential(M, parse_form("e1", 3)) == zeros(3, 0)
    assert codifferential(M, parse_form("e23", 3)) == parse_form("e1", 3)


def test_product_with_line_appends_closed_direction():
    P = product_with_line(heisenberg(), "4")
    assert P.dim == 4
    assert P.d(KForm.mono(4, (3,))) == zeros(4, 2)
    assert P.d(KForm.mono(4, (0,))) == parse_form("e23", 4)


def test_bianchi_calibration_examples():
    dT = parse_form("e1234 + e1256", 6)
    rep = bianchi_calibrate(dT, dT * 2, -dT)
    assert (rep.alpha_modb, rep.alpha_modb1, rep.sign) == (Fraction(1, 4), Fraction(1, 6), "positive")
    z = zeros(6, 4)
    rep = bianchi_calibrate(z, z, z)
    assert rep.proportional and rep.alpha_modb is None and rep.sign == "undefined"
    rep = bianchi_calibrate(dT, parse_form("e3456", 6), z)
    assert not rep.proportional_modb and rep.alpha_modb is None


def test_bianchi_rejects_wrong_degree():
    with pytest.raises(ValueError):
        bianchi_calibrate(zeros(6, 3), zeros(6, 4), zeros(6, 4))
