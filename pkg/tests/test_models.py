"""Model catalogue construction and registry."""

from __future__ import annotations

from fractions import Fraction

import pytest

from skewtorsion import build, calibrate_pontrjagin
from skewtorsion.exterior import hodge_star
from skewtorsion.models import PARAMS


def test_registry_lists_all_models():
    assert set(PARAMS) == {"nil6", "s6_nk", "s7_np", "s5_sasaki"}


def test_unknown_model_and_parameter():
    with pytest.raises(KeyError):
        build("torus")
    with pytest.raises(ValueError):
        build("nil6", {"t": 1})


@pytest.mark.parametrize("name,params", [("s6_nk", {"t": 0}), ("s7_np", {"lambda": 0})])
def test_degenerate_parameters_rejected(name, params):
    with pytest.raises(ValueError):
        build(name, params)


def test_parameters_are_exact_rationals():
    h = build("s6_nk", {"t": "3/2"})
    assert h.params["t"] == Fraction(3, 2)
    assert h.facts["a2"] == Fraction(9, 2)
    assert h.torsion == h.structure.psi_minus * Fraction(3, 2)


def test_s7_torsion_is_multiple_of_omega():
    h = build("s7_np", {"lambda": 6})
    assert h.torsion == h.structure.omega * -1
    assert h.space.d(h.structure.omega) == hodge_star(h.structure.omega) * -6


def test_s5_torsion():
    h = build("s5_sasaki")
    assert h.space.d(h.torsion) == h.space.d(h.structure.eta) ^ h.space.d(h.structure.eta)


def test_pontrjagin_constant_is_one():
    assert calibrate_pontrjagin() == 1
