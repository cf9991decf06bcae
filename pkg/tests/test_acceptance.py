"""Acceptance criteria 1-12; each test is tagged with its criterion number.

A summary line per criterion is printed at the end of the run.  Every
comparison is an exact rational equality.
"""

from __future__ import annotations

import json

import pytest

from skewtorsion.cli import main
from skewtorsion.scenarios import COMMENTARY

from helpers import results
from identity_properties import PROPERTIES

criterion = pytest.mark.criterion


def assert_pass(model: str, ids: list[str], **params):
    res = results(model, **params)
    missing = [i for i in ids if i not in res]
    assert not missing, f"checks not produced: {missing}"
    bad = [res[i] for i in ids if res[i].status != "pass"]
    assert not bad, "; ".join(f"{r.id} {r.status} ({r.lhs} vs {r.rhs})" if len(r.lhs) < 30 else f"{r.id} {r.status}"
                              for r in bad)


@criterion(1, "nil6 structure equations")
def test_nil6_structure_equations():
    assert_pass("nil6", ["in1.jacobi", "in2.dF", "in2.N", "in2.N_skew", "in2.dpsi_minus", "in2.N_psi_minus",
                         "in2.theta6", "in2.dpsi_plus", "in2.N_psi_plus"])


@criterion(2, "nil6 torsion and dT by two routes")
def test_nil6_torsion():
    assert_pass("nil6", ["torcy.T", "cy2.T", "tor.dT", "tor.dT_explicit", "partor.dT_quadratic"])


@criterion(3, "nil6 connection tables, parallel T and N, curvature values")
def test_nil6_connections():
    res = results("nil6")
    ids = [i for i in res if i.split(".")[0] in ("levc", "kz", "tor1", "7curv")]
    assert len([i for i in ids if i.startswith("7curv.")]) == 10
    assert_pass("nil6", ids)


@criterion(4, "nil6 conformal curvature component")
def test_nil6_weyl():
    assert_pass("nil6", ["Rg.5621", "Wg.5621"])


@criterion(5, "nil6 instanton and Bianchi identities")
def test_nil6_instanton_bianchi():
    assert_pass("nil6", ["6inst.Rnabla", "pont.c0", "pont.half_trace", "pont.tilde", "modb.alpha", "modb1.alpha"])


@criterion(6, "nil6 scalar curvature")
def test_nil6_scalar():
    assert_pass("nil6", ["scal2.nil6"])
    assert results("nil6")["scal2.nil6"].lhs == "-3/2"


@criterion(7, "lift coherence su(3) -> g2 -> spin(7)")
def test_lift_coherence():
    assert_pass("nil6", ["om.canonical", "sg1.canonical", "thet.theta7", "nav.pairing", "tsol7g.T7", "th1.T8",
                         "th1.curvature", "6inst.Rnabla", "6inst.persist_g2", "7inst.persist_spin7"])


@criterion(8, "S6 nearly Kaehler suite")
@pytest.mark.parametrize("t", [1, 2])
def test_s6_suite(t):
    assert_pass("s6_nk", ["nk.constant_type", "nk.dT", "pont.nabla", "pont.tilde", "modb.alpha", "modb1.alpha",
                          "scal.nk"], t=t)


@criterion(9, "S7 nearly parallel suite")
@pytest.mark.parametrize("lam", [1, 6])
def test_s7_suite(lam):
    assert_pass("s7_np", ["g2par.theta7", "tsol7g.T", "g2par.dT_quadratic", "g2par.dT_exterior", "pont.nabla",
                          "pont.nabla_star", "pont.tilde", "7inst.Rnabla", "modb.alpha", "modb1.alpha",
                          "th1.theta8", "th1.T8"], **{"lambda": lam})


@criterion(10, "Sasakian S5 suite")
def test_s5_suite():
    assert_pass("s5_sasaki", ["ric1.ricci", "sas2.lck", "sas2.theta6", "sas2.T6", "sas1.T5", "sas.dT6",
                              "pont.nabla", "pont.tilde", "modb.alpha", "6inst.Rnabla6"])


@criterion(11, "randomized identity properties")
@pytest.mark.parametrize("prop", PROPERTIES, ids=lambda f: f.__name__.removeprefix("check_"))
def test_identity_property(prop):
    prop()


@criterion(12, "global statements appear only as commentary")
def test_commentary_not_checks(capsys):
    main(["--model", "s5_sasaki", "--check", "ric1"])
    lines = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert lines[-1]["commentary"] == list(COMMENTARY) and len(COMMENTARY) == 3
    for model, params in (("nil6", {}), ("s6_nk", {"t": 1}), ("s7_np", {"lambda": 1}), ("s5_sasaki", {})):
        ids = " ".join(results(model, **params))
        for word in ("lattice", "exact", "action", "lee_global"):
            assert word not in ids
