"""Per-model check suites.

A scenario is an ordered list of ``(id, groups, thunk)`` entries; selection
by id, id family (text before the first dot) or group name happens before
any thunk runs, so unselected checks cost nothing.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import GeometryError
from .exterior import KForm, hodge_star, inner, parse_form, volume, wedge, zeros
from .frames import (
    PONTRJAGIN_C0,
    CurvatureTensor,
    LieFrame,
    add_torsion,
    arrays_equal,
    brackets,
    curvature,
    dT_quadratic,
    is_parallel,
    levi_civita,
    nabla_curvature_from_riemannian,
    pontrjagin_raw,
    ricci,
    ricci_scalar_weyl,
    tilde_curvature,
    torsion_tensor,
)
from .models import ModelHandle, calibrate_pontrjagin, constant_type_holds
from .report import (
    FAIL,
    PASS,
    SKIPPED,
    CheckResult,
    bianchi_calibrate,
    compare,
    pontrjagin_check,
    render,
)
from .structures import (
    G2Structure,
    SU3Structure,
    canonical,
    instanton_check,
    lee_form,
    lift_contact_to_hermitian,
    lift_g2_to_spin7,
    lift_su3_to_g2,
    nijenhuis,
    nijenhuis_form,
    scalar_identity_check,
    su3_analyze,
    su3_torsion,
    g2_torsion,
    torsion_connection_curvature,
)

Thunk = Callable[[], CheckResult]

GROUPS = ("structure", "torsion", "connection", "curvature", "instanton", "bianchi", "lift", "scalar")

COMMENTARY = (
    "existence of a lattice in the nilpotent group (compact quotient) is not checked",
    "global exactness of Lee forms on compact quotients is not checked",
    "the value of the ten-dimensional supergravity action is not computed",
)


class UsageError(ValueError):
    """Unknown check id or group."""


@dataclass(frozen=True)
class Entry:
    id: str
    groups: tuple[str, ...]
    run: Thunk


def _flag(check_id: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(check_id, PASS if ok else FAIL, render(ok), "true", detail)


def _e(n: int, *one_based: int) -> KForm:
    return KForm.mono(n, tuple(i - 1 for i in one_based))


def _guard(entry: Entry) -> CheckResult:
    try:
        return entry.run()
    except GeometryError as exc:
        return CheckResult(entry.id, FAIL, "error", "", f"{type(exc).__name__}: {exc}")


def select(entries: Sequence[Entry], tokens: Optional[Iterable[str]]) -> list[Entry]:
    """Entries matching any token; ``None`` or ``all`` selects everything."""
    if tokens is None:
        return list(entries)
    tokens = [t for t in tokens if t]
    if not tokens or "all" in tokens:
        return list(entries)
    known = {e.id for e in entries} | {e.id.split(".")[0] for e in entries} | set(GROUPS)
    unknown = [t for t in tokens if t not in known]
    if unknown:
        raise UsageError(f"unknown check id(s): {', '.join(unknown)}")
    want = set(tokens)
    return [e for e in entries if e.id in want or e.id.split(".")[0] in want or want & set(e.groups)]


# ------------------------------------------------------------------ context


class _Pontrjagin:
    """Shared curvature and Pontrjagin data of a torsion connection."""

    def __init__(self, Rn: CurvatureTensor, dT: KForm):
        self.Rn = Rn
        self.dT = dT

    @cached_property
    def Rt(self) -> CurvatureTensor:
        return tilde_curvature(self.Rn, self.dT)

    @cached_property
    def P(self) -> KForm:
        return pontrjagin_raw(self.Rn)

    @cached_property
    def Pt(self) -> KForm:
        return pontrjagin_raw(self.Rt)

    def bianchi(self, c0: Fraction):
        return bianchi_calibrate(self.dT, self.P * c0, self.Pt * c0)


def _bianchi_entries(prefix: str, pont: Callable[[], _Pontrjagin], c0: Fraction, sign: str, labels):
    def modb():
        b = pont().bianchi(c0)
        return CheckResult(
            "modb.alpha" + prefix,
            PASS if b.proportional_modb and b.alpha_modb is not None and b.sign == sign else FAIL,
            render(b.alpha_modb),
            f"{sign} alpha'",
            f"sign={b.sign}",
        )

    def modb1():
        b = pont().bianchi(c0)
        return CheckResult(
            "modb1.alpha" + prefix,
            PASS if b.proportional_modb1 and b.alpha_modb1 is not None and b.sign == sign else FAIL,
            render(b.alpha_modb1),
            f"{sign} alpha'",
            f"sign={b.sign}",
        )

    return [Entry("modb.alpha" + prefix, ("bianchi",), modb), Entry("modb1.alpha" + prefix, ("bianchi",), modb1)]


# ------------------------------------------------------------------ nil6

LEVC = [(6, 3, 1, "1/2"), (2, 3, 5, "-1/2"), (6, 2, 4, "1/2"), (3, 6, 1, "-1/2"), (3, 2, 5, "1/2"),
        (2, 6, 4, "-1/2"), (1, 6, 3, "-1/2"), (5, 2, 3, "1/2"), (4, 6, 2, "-1/2")]
TOR1 = [(1, 6, 3, -1), (5, 2, 3, 1), (4, 6, 2, -1), (4, 5, 1, -1), (5, 1, 4, -1), (1, 4, 5, -1)]
CURV7 = [(6, 2, 6, 2, 1), (6, 3, 6, 3, 1), (2, 3, 2, 3, 1), (4, 5, 4, 5, 1), (4, 1, 4, 1, 1),
         (5, 1, 5, 1, 1), (2, 6, 5, 1, -1), (3, 6, 4, 5, -1), (2, 3, 1, 4, -1)]
NIL6_T = "-2*e145 + e136 + e235 - e246"


def _orbit(i, j, k, l):
    out = set()
    for a, b, c, d in ((i, j, k, l), (k, l, i, j)):
        out |= {(a, b, c, d), (b, a, c, d), (a, b, d, c), (b, a, d, c)}
    return out


def _su3_lift_entries(M, s: SU3Structure, T6: KForm, c0, Rn6: Callable[[], CurvatureTensor], expect_theta7):
    """Entries for the G2 and Spin(7) lifts of an admissible SU(3)-structure."""
    lift7 = cached(lambda: lift_su3_to_g2(s, M))
    g2t = cached(lambda: g2_torsion(lift7().structure, lift7().space))
    lift8 = cached(lambda: lift_g2_to_spin7(lift7().structure, lift7().space))
    R7 = cached(lambda: torsion_connection_curvature(lift7().space, g2t().T))
    R8 = cached(lambda: torsion_connection_curvature(lift8().space, lift8().T8))
    lab7 = lambda: lift7().space.labels
    lab8 = lambda: lift8().space.labels
    N = cached(lambda: nijenhuis_form(s, M))

    def theta_stated():
        L = lift7()
        rhs = lee_form(s, M).embed(7) + _e(7, 7) * (inner(N(), s.psi_minus) / 4)
        return compare("thet.theta7", L.theta7, rhs, lab7(), "Lee form formula vs theta6 + (N,Psi-) e7/4")

    def theta_flipped():
        L = lift7()
        rhs = lee_form(s, M).embed(7) - _e(7, 7) * (inner(N(), s.psi_minus) / 4)
        return compare("thet.theta7_expanded", L.theta7, rhs, lab7(),
                       "Lee form formula vs theta6 - (N,Psi-) e7/4 (middle line of the derivation)")

    out = [
        Entry("thet.theta7", ("lift",), theta_stated),
        Entry("thet.theta7_expanded", ("lift",), theta_flipped),
        Entry("nav.pairing", ("lift",), lambda: compare(
            "nav.pairing", lift7().pairing, Fraction(-3, 2) * inner(N(), s.psi_plus),
            detail="(d omega,*omega) = -3/2 (N,Psi+)")),
        Entry("sol7g.lift", ("lift",), lambda: _flag("sol7g.lift", lift7().sol7g_holds, "d*omega = theta7 ^ *omega")),
        Entry("tsol7g.T7", ("lift", "torsion"), lambda: compare("tsol7g.T7", g2t().T, T6.embed(7), lab7())),
        Entry("th1.theta8", ("lift",), lambda: compare(
            "th1.theta8", lift8().theta8, _stated_theta8(lift7(), g2t(), +1), lab8(),
            "6/7 theta7 + (d omega,*omega) e0 / 7")),
        Entry("th1.theta8_oriented", ("lift",), lambda: compare(
            "th1.theta8_oriented", lift8().theta8, _stated_theta8(lift7(), g2t(), -1), lab8(),
            "6/7 theta7 - (d omega,*omega) e0 / 7")),
        Entry("th1.T8", ("lift", "torsion"), lambda: compare("th1.T8", lift8().T8, lift8().T7, lab8())),
        Entry("th1.curvature", ("lift", "curvature"), lambda: _flag(
            "th1.curvature", R8() == R7().embed(8, 1), "R^nabla8 = R^nabla7")),
        Entry("th1.pontrjagin", ("lift", "bianchi"), lambda: compare(
            "th1.pontrjagin", pontrjagin_raw(R8()) * c0, (pontrjagin_raw(R7()) * c0).embed(8, 1), lab8())),
    ]
    if expect_theta7 is not None:
        out.insert(0, Entry("thet.theta7_value", ("lift",), lambda: compare(
            "thet.theta7_value", lift7().theta7, expect_theta7, lab7(), "value stated for this model")))
    out += [
        Entry("6inst.persist_g2", ("lift", "instanton"), lambda: _flag(
            "6inst.persist_g2", instanton_check(Rn6().embed(7), lift7().structure) and instanton_check(R7(), lift7().structure),
            "su(3) instanton lifts to a g2 instanton")),
        Entry("7inst.persist_spin7", ("lift", "instanton"), lambda: _flag(
            "7inst.persist_spin7", instanton_check(R8(), lift8().structure), "g2 instanton lifts to a spin(7) instanton")),
    ]
    return out


def _stated_theta8(lift7, g2t, sign):
    e0 = KForm.mono(8, (0,))
    return g2t.theta7.embed(8, 1) * Fraction(6, 7) + e0 * (sign * g2t.pairing / 7)


def cached(fn):
    box = []

    def get():
        if not box:
            box.append(fn())
        return box[0]

    return get


def nil6_entries(h: ModelHandle, c0: Fraction) -> list[Entry]:
    M: LieFrame = h.space
    s: SU3Structure = h.structure
    n = 6
    F, pp, pm = s.F, s.psi_plus, s.psi_minus
    lc = cached(lambda: levi_civita(M))
    conn = cached(lambda: add_torsion(lc(), h.torsion))
    Rg = cached(lambda: curvature(M, lc()))
    Rn = cached(lambda: curvature(M, conn()))
    rsw = cached(lambda: ricci_scalar_weyl(Rg()))
    rep = cached(lambda: su3_analyze(s, M))
    tor = cached(lambda: su3_torsion(s, M))
    dT = cached(lambda: M.d(h.torsion))
    pont = cached(lambda: _Pontrjagin(Rn(), dT()))
    Nres = cached(lambda: nijenhuis(M, s.J))
    T_expected = parse_form(NIL6_T, n)
    c = cached(lambda: brackets(M))

    E: list[Entry] = [
        Entry("in1.jacobi", ("structure",), lambda: _flag(
            "in1.jacobi", all(not M.d(M.d(KForm.mono(n, (k,)))) for k in range(n)), "d^2 e_k = 0")),
        Entry("in1.bracket_361", ("structure",), lambda: compare("in1.bracket_361", c()[2, 5, 0], Fraction(-1),
                                                                  detail="g([e3,e6],e1)")),
        Entry("in1.bracket_235", ("structure",), lambda: compare("in1.bracket_235", c()[1, 2, 4], Fraction(-1),
                                                                  detail="g([e2,e3],e5)")),
        Entry("in2.dF", ("structure",), lambda: compare("in2.dF", M.d(F), _e(n, 2, 3, 6) * -3)),
        Entry("in2.N", ("structure",), lambda: compare("in2.N", Nres().form, -pm, detail="N = -Psi-")),
        Entry("in2.N_skew", ("structure",), lambda: _flag("in2.N_skew", Nres().skew, "g(N(.,.),.) totally skew")),
        Entry("in2.dpsi_minus", ("structure",), lambda: compare("in2.dpsi_minus", M.d(pm), hodge_star(F))),
        Entry("in2.N_psi_minus", ("structure",), lambda: compare("in2.N_psi_minus", inner(Nres().form, pm), Fraction(-4))),
        Entry("in2.theta6", ("structure",), lambda: compare("in2.theta6", rep().theta6, zeros(n, 1))),
        Entry("in2.dpsi_plus", ("structure",), lambda: compare("in2.dpsi_plus", M.d(pp), zeros(n, 4))),
        Entry("in2.N_psi_plus", ("structure",), lambda: compare("in2.N_psi_plus", inner(Nres().form, pp), Fraction(0))),
        Entry("cycon.holds", ("structure",), lambda: _flag("cycon.holds", rep().cycon_holds)),
        Entry("halfflat.closed", ("structure",), lambda: _flag(
            "halfflat.closed", rep().half_flat, "d Psi+ = 0 and theta6 = 0")),
        Entry("halfflat.dF_wedge_F", ("structure",), lambda: _flag(
            "halfflat.dF_wedge_F", rep().dF_wedge_F_zero, "dF ^ F = 0, recorded separately")),
        Entry("W1.plus", ("structure",), lambda: compare("W1.plus", rep().W1plus, Fraction(0))),
        Entry("W1.minus", ("structure",), lambda: compare("W1.minus", rep().W1minus, Fraction(3))),
        Entry("torcy.T", ("torsion",), lambda: compare("torcy.T", tor().T, T_expected)),
        Entry("cy2.T", ("torsion",), lambda: compare("cy2.T", tor().T_cy2, T_expected, detail="-dF(J.,J.,J.) + N")),
        Entry("acy.dF_minus", ("torsion",), lambda: compare(
            "acy.dF_minus", tor().dF_minus, tor().JN * Fraction(-3, 4), detail="dF- = -3/4 N(J.,J.,J.)")),
        Entry("tor.dT", ("torsion",), lambda: compare("tor.dT", dT(), hodge_star(F) * 2, detail="dT = 2*F")),
        Entry("tor.dT_explicit", ("torsion",), lambda: compare(
            "tor.dT_explicit", dT(), parse_form("-2*e1256 - 2*e3456 - 2*e1234", n))),
        Entry("partor.dT_quadratic", ("torsion",), lambda: compare("partor.dT_quadratic", dT_quadratic(h.torsion), dT())),
    ]
    for i, j, k, v in LEVC:
        cid = f"levc.{i}{j}{k}"
        E.append(Entry(cid, ("connection",), (lambda cid=cid, i=i, j=j, k=k, v=v: compare(
            cid, lc().gamma[i - 1, j - 1, k - 1], Fraction(v), detail=f"g(nabla^g_e{i} e{j}, e{k})"))))
    E += [
        Entry("kz.metric", ("connection",), lambda: _flag("kz.metric", lc().is_metric())),
        Entry("kz.torsion_free", ("connection",), lambda: _flag(
            "kz.torsion_free", not any(x != 0 for x in torsion_tensor(M, lc()).flat))),
    ]
    for i, j, k, v in TOR1:
        cid = f"tor1.{i}{j}{k}"
        E.append(Entry(cid, ("connection",), (lambda cid=cid, i=i, j=j, k=k, v=v: compare(
            cid, conn().gamma[i - 1, j - 1, k - 1], Fraction(v), detail=f"g(nabla_e{i} e{j}, e{k})"))))
    E += [
        Entry("tor1.torsion", ("connection", "torsion"), lambda: _flag(
            "tor1.torsion", arrays_equal(torsion_tensor(M, conn()), _arr(h.torsion)), "torsion of nabla is T")),
        Entry("tor1.nablaT", ("connection",), lambda: _flag("tor1.nablaT", is_parallel(conn(), h.torsion))),
        Entry("tor1.nablaN", ("connection",), lambda: _flag("tor1.nablaN", is_parallel(conn(), Nres().form))),
    ]
    for i, j, k, l, v in CURV7:
        cid = f"7curv.{i}{j}{k}{l}"
        E.append(Entry(cid, ("curvature",), (lambda cid=cid, i=i, j=j, k=k, l=l, v=v: compare(
            cid, Rn()[i - 1, j - 1, k - 1, l - 1], Fraction(v)))))

    def exhaustive():
        listed = set()
        for i, j, k, l, _ in CURV7:
            listed |= _orbit(i - 1, j - 1, k - 1, l - 1)
        nz = set(Rn().nonzero())
        return CheckResult("7curv.exhaustive", PASS if nz == listed else FAIL, str(len(nz)), str(len(listed)),
                           "nonzero entries vs symmetry orbits of the listed terms")

    E += [
        Entry("7curv.exhaustive", ("curvature",), exhaustive),
        Entry("partor.Rnabla", ("curvature",), lambda: _flag(
            "partor.Rnabla", nabla_curvature_from_riemannian(Rg(), h.torsion) == Rn(),
            "R^nabla from R^g and T equals the direct curvature")),
        Entry("bas2.pair_symmetry", ("curvature",), lambda: _flag("bas2.pair_symmetry", Rn().is_pair_symmetric())),
        Entry("bas3.tilde", ("curvature",), lambda: _flag(
            "bas3.tilde", pont().Rt == curvature(M, add_torsion(lc(), -h.torsion)),
            "R^nabla - dT/2 equals the curvature of nabla^g - T/2")),
        Entry("Rg.5621", ("curvature",), lambda: compare("Rg.5621", Rg()[4, 5, 1, 0], Fraction(-1, 4))),
        Entry("Wg.5621", ("curvature",), lambda: compare("Wg.5621", rsw()[2][4, 5, 1, 0], Fraction(-1, 4))),
        Entry("6inst.Rnabla", ("instanton",), lambda: _flag("6inst.Rnabla", instanton_check(Rn(), s))),
        Entry("pont.c0", ("bianchi",), lambda: compare(
            "pont.c0", calibrate_pontrjagin(), PONTRJAGIN_C0, detail="c0 solved from dT = Tr(R^nabla ^ R^nabla)/2")),
        Entry("pont.half_trace", ("bianchi",), lambda: pontrjagin_check(
            "pont.half_trace", pont().P * Fraction(1, 2), c0, Fraction(1), dT(), detail="dT = Tr(R^nabla ^ R^nabla)/2; calibrates c0")),
        Entry("pont.tilde", ("bianchi",), lambda: pontrjagin_check(
            "pont.tilde", -pont().Pt, c0, Fraction(1), dT(), detail="dT = -Tr(R~ ^ R~)")),
    ]
    E += _bianchi_entries("", pont, c0, "positive", None)
    E += [
        Entry("scal2.nil6", ("scalar",), lambda: _scal("scal2.nil6", scalar_identity_check("scal2", s, M), Fraction(-3, 2))),
    ]
    E += _su3_lift_entries(M, s, h.torsion, c0, Rn, _e(7, 7) * -1)
    E += canonical_entries()
    return E


def _arr(T: KForm):
    from .exterior import to_array

    return to_array(T)


def _scal(cid: str, rep, expected: Optional[Fraction]) -> CheckResult:
    terms = ", ".join(f"{k}={render(v)}" for k, v in rep.terms.items())
    ok = rep.equal and (expected is None or rep.trace == expected)
    return CheckResult(cid, PASS if ok else FAIL, render(rep.trace), render(rep.formula), terms)


def canonical_entries() -> list[Entry]:
    def su3_to_g2():
        s = canonical("su3")
        e7 = _e(7, 7)
        w = -wedge(s.F.embed(7), e7) - s.psi_plus.embed(7)
        return compare("om.canonical", w, canonical("g2").omega)

    def g2_to_spin7():
        w = canonical("g2").omega
        e0 = KForm.mono(8, (0,))
        Phi = wedge(e0, w.embed(8, 1)) + hodge_star(w).embed(8, 1)
        P = canonical("spin7").Phi
        return compare("sg1.canonical", Phi, P, tuple(str(i) for i in range(8)))

    def phi_square():
        P = canonical("spin7").Phi
        return compare("spin7.phi_wedge_phi", wedge(P, P), volume(8) * 14, tuple(str(i) for i in range(8)),
                       "Phi ^ Phi = 14 vol")

    return [
        Entry("om.canonical", ("lift", "structure"), su3_to_g2),
        Entry("sg1.canonical", ("lift", "structure"), g2_to_spin7),
        Entry("spin7.self_dual", ("structure",), lambda: compare(
            "spin7.self_dual", hodge_star(canonical("spin7").Phi), canonical("spin7").Phi, tuple(str(i) for i in range(8)))),
        Entry("spin7.phi_wedge_phi", ("structure",), phi_square),
    ]


# ------------------------------------------------------------------ S6


def s6_entries(h: ModelHandle, c0: Fraction) -> list[Entry]:
    M = h.space
    s: SU3Structure = h.structure
    t = h.params["t"]
    a2 = h.facts["a2"]
    F, pp, pm = s.F, s.psi_plus, s.psi_minus
    Rg = M.curvature
    Rn = cached(lambda: nabla_curvature_from_riemannian(Rg, h.torsion))
    dT = cached(lambda: dT_quadratic(h.torsion))
    pont = cached(lambda: _Pontrjagin(Rn(), dT()))
    tor = cached(lambda: su3_torsion(s, M))
    N = M.extras["N"]
    E = [
        Entry("nk.constant_type", ("structure",), lambda: _flag(
            "nk.constant_type", constant_type_holds(h.torsion, F, a2),
            "T_ijm T_klm = a^2/2 (g_ik g_jl - g_jk g_il - F_ik F_jl + F_jk F_il)")),
        Entry("nk.dT", ("torsion",), lambda: compare("nk.dT", dT(), hodge_star(F) * (-2 * a2), detail="dT = -2a^2 *F")),
        Entry("nk.dT_declared", ("torsion",), lambda: compare("nk.dT_declared", M.d(h.torsion), dT(),
                                                               detail="d-data vs quadratic formula")),
        Entry("nk.N_psi_plus", ("structure",), lambda: compare("nk.N_psi_plus", inner(N, pp), Fraction(0))),
        Entry("cycon.holds", ("structure",), lambda: _flag("cycon.holds", su3_analyze(s, M).cycon_holds)),
        Entry("torcy.T", ("torsion",), lambda: compare("torcy.T", tor().T, pm * t)),
        Entry("cy2.T", ("torsion",), lambda: compare("cy2.T", tor().T_cy2, pm * t)),
        Entry("bas2.pair_symmetry", ("curvature",), lambda: _flag("bas2.pair_symmetry", Rn().is_pair_symmetric())),
        Entry("6inst.Rnabla", ("instanton",), lambda: _flag("6inst.Rnabla", instanton_check(Rn(), s))),
        Entry("pont.nabla", ("bianchi",), lambda: pontrjagin_check(
            "pont.nabla", pont().P, c0, -Fraction(3, 4) * a2, dT(), detail="Tr(R^nabla ^ R^nabla) = -3a^2/4 dT")),
        Entry("pont.tilde", ("bianchi",), lambda: pontrjagin_check(
            "pont.tilde", pont().Pt, c0, Fraction(9, 4) * a2, dT(), detail="Tr(R~ ^ R~) = 9a^2/4 dT")),
        Entry("rem1.homothety", ("bianchi",), lambda: pontrjagin_check(
            "rem1.homothety", pont().P, c0, Fraction(-3, 2) * t * t, dT(), detail="P/dT = -3t^2/2")),
    ]
    E += _bianchi_entries("", pont, c0, "negative", None)
    E += [
        Entry("scal.nk", ("scalar",), lambda: _scal("scal.nk", scalar_identity_check("nk", s, M, a2=a2), 15 * a2)),
        Entry("scal2.nk", ("scalar",), lambda: _scal("scal2.nk", scalar_identity_check("scal2", s, M), 15 * a2)),
    ]
    E += _su3_lift_entries(M, s, h.torsion, c0, Rn, None)
    return E


# ------------------------------------------------------------------ S7


def s7_entries(h: ModelHandle, c0: Fraction) -> list[Entry]:
    M = h.space
    s: G2Structure = h.structure
    lam = h.params["lambda"]
    w = s.omega
    sw = hodge_star(w)
    Rn = cached(lambda: nabla_curvature_from_riemannian(M.curvature, h.torsion))
    dT = cached(lambda: dT_quadratic(h.torsion))
    pont = cached(lambda: _Pontrjagin(Rn(), dT()))
    g2t = cached(lambda: g2_torsion(s, M))
    lift8 = cached(lambda: lift_g2_to_spin7(s, M))
    R8 = cached(lambda: torsion_connection_curvature(lift8().space, lift8().T8))
    lab8 = lambda: lift8().space.labels
    e0 = KForm.mono(8, (0,))
    E = [
        Entry("g2par.theta7", ("structure",), lambda: compare("g2par.theta7", g2t().theta7, zeros(7, 1))),
        Entry("g2par.pairing", ("structure",), lambda: compare(
            "g2par.pairing", g2t().pairing, -7 * lam,
            detail=f"increasing-tuple pairing; -lambda = {render(-lam)} would need another normalization")),
        Entry("sol7g.holds", ("structure",), lambda: _flag("sol7g.holds", g2t().condition_holds)),
        Entry("tsol7g.T", ("torsion",), lambda: compare("tsol7g.T", g2t().T, w * (-lam / 6))),
        Entry("g2par.dT_quadratic", ("torsion",), lambda: compare("g2par.dT_quadratic", dT(), sw * (lam * lam / 6))),
        Entry("g2par.dT_exterior", ("torsion",), lambda: compare("g2par.dT_exterior", M.d(h.torsion), sw * (lam * lam / 6))),
        Entry("bas2.pair_symmetry", ("curvature",), lambda: _flag("bas2.pair_symmetry", Rn().is_pair_symmetric())),
        Entry("7inst.Rnabla", ("instanton",), lambda: _flag("7inst.Rnabla", instanton_check(Rn(), s))),
        Entry("pont.nabla", ("bianchi",), lambda: pontrjagin_check(
            "pont.nabla", pont().P, c0, -lam * lam / 36, dT(), detail="Tr(R^nabla ^ R^nabla) = -lambda^2/36 dT")),
        Entry("pont.nabla_star", ("bianchi",), lambda: pontrjagin_check(
            "pont.nabla_star", pont().P, c0, -lam ** 4 / 216, sw, detail="Tr(R^nabla ^ R^nabla) = -lambda^4/216 *omega")),
        Entry("pont.tilde", ("bianchi",), lambda: pontrjagin_check(
            "pont.tilde", pont().Pt, c0, lam * lam / 9, dT(), detail="Tr(R~ ^ R~) = lambda^2/9 dT")),
    ]
    E += _bianchi_entries("", pont, c0, "negative", None)
    E += [
        Entry("scal1.s7", ("scalar",), lambda: _scal("scal1.s7", scalar_identity_check("scal1", s, M), Fraction(21, 8) * lam * lam)),
        Entry("th1.theta8", ("lift",), lambda: compare("th1.theta8", lift8().theta8, e0 * -lam, lab8(),
                                                        "value -lambda e0")),
        Entry("th1.theta8_oriented", ("lift",), lambda: _flag(
            "th1.theta8_oriented", lift8().theta_flipped_holds, "6/7 theta7 - (d omega,*omega) e0 / 7")),
        Entry("th1.T8", ("lift", "torsion"), lambda: compare("th1.T8", lift8().T8, lift8().T7, lab8())),
        Entry("th1.curvature", ("lift", "curvature"), lambda: _flag(
            "th1.curvature", R8() == Rn().embed(8, 1), "R^nabla8 = R^nabla7")),
        Entry("8inst.persist", ("lift", "instanton"), lambda: _flag(
            "8inst.persist", instanton_check(R8(), lift8().structure))),
    ]
    return E


# ------------------------------------------------------------------ S5


def s5_entries(h: ModelHandle, c0: Fraction) -> list[Entry]:
    M = h.space
    c = h.structure
    F5 = c.F5
    Rg = M.curvature
    H = cached(lambda: lift_contact_to_hermitian(c, M))
    lab = lambda: H().space.labels
    e6 = _e(6, 6)
    F56 = F5.embed(6)
    Rn6 = cached(lambda: nabla_curvature_from_riemannian(H().space.curvature, H().T6))
    pont = cached(lambda: _Pontrjagin(Rn6(), H().dT6))

    def ric():
        r = ricci(Rg)
        exp = np.array([[(6 if i == j else 0) - 2 * c.eta[(i,)] * c.eta[(j,)] for j in range(5)] for i in range(5)],
                       dtype=object)
        return CheckResult("ric1.ricci", PASS if arrays_equal(r, exp) else FAIL,
                           str([render(r[i, i]) for i in range(5)]), "6g - 2 eta (x) eta")

    def closed_form():
        g6 = np.eye(6, dtype=int)
        eta = [0, 0, 0, 0, 1, 0]
        dTa = _arr(H().dT6)
        r = np.empty((6,) * 4, dtype=object)
        for i, j, k, l in np.ndindex(*r.shape):
            r[i, j, k, l] = Fraction(4, 3) * (
                g6[j, k] * g6[i, l] - g6[i, k] * g6[j, l] + eta[i] * eta[k] * g6[j, l]
                - eta[j] * eta[k] * g6[i, l] + eta[j] * eta[l] * g6[i, k] - eta[i] * eta[l] * g6[j, k]
            ) + dTa[i, j, k, l] / 6
        return _flag("sas.Rnabla6_closed_form", CurvatureTensor(6, r) == Rn6(),
                     "closed form of R^nabla6 vs R^nabla6 from R^g and T")

    E = [
        Entry("ric1.ricci", ("curvature",), ric),
        Entry("sas1.T5", ("structure", "torsion"), lambda: compare("sas1.T5", h.torsion, wedge(c.eta, F5) * 2)),
        Entry("sas1.deta", ("structure",), lambda: compare("sas1.deta", M.d(c.eta), F5 * 2)),
        Entry("sas1.dT5", ("torsion",), lambda: compare("sas1.dT5", dT_quadratic(h.torsion), M.d(h.torsion),
                                                        detail="quadratic formula vs d-data")),
        Entry("contact.invariants", ("structure",), lambda: compare(
            "contact.invariants", ", ".join(c.invariant_violations()) or "none", "none")),
        Entry("sas2.lck", ("lift",), lambda: compare(
            "sas2.lck", H().space.d(H().F6), wedge(e6, H().F6) * 2, lab(), "dF6 = 2 e6 ^ F6")),
        Entry("sas2.theta6", ("lift",), lambda: compare("sas2.theta6", H().theta6, e6 * 2, lab(),
                                                         "theta6 = delta F6 (J .)")),
        Entry("sas2.theta6_normalized", ("lift",), lambda: compare(
            "sas2.theta6_normalized", H().theta6, e6 * 4, lab(), "trace part of dF6 is theta6 ^ F6 / 2")),
        Entry("sas2.T6", ("lift", "torsion"), lambda: compare("sas2.T6", H().T6, h.torsion.embed(6), lab())),
        Entry("sas.dT6", ("lift", "torsion"), lambda: compare("sas.dT6", H().dT6, wedge(F56, F56) * 4, lab())),
        Entry("sas.dT6_quadratic", ("lift", "torsion"), lambda: compare(
            "sas.dT6_quadratic", dT_quadratic(H().T6), H().dT6, lab())),
        Entry("bas2.pair_symmetry", ("curvature",), lambda: _flag("bas2.pair_symmetry", Rn6().is_pair_symmetric())),
        Entry("sas.Rnabla6_closed_form", ("curvature",), closed_form),
        Entry("6inst.Rnabla6", ("instanton", "lift"), lambda: _flag(
            "6inst.Rnabla6", instanton_check(Rn6(), H().structure))),
        Entry("pont.nabla", ("bianchi",), lambda: pontrjagin_check(
            "pont.nabla", pont().P, c0, Fraction(-8, 3), H().dT6, lab(), "Tr(R^nabla6 ^ R^nabla6) = -8/3 dT6")),
        Entry("pont.tilde", ("bianchi",), lambda: pontrjagin_check(
            "pont.tilde", pont().Pt, c0, Fraction(16, 3), H().dT6, lab(), "Tr(R~6 ^ R~6) = 16/3 dT6")),
    ]
    E += _bianchi_entries("", pont, c0, "negative", None)
    E += [
        Entry("scal2.s5xR", ("scalar",), lambda: _scal(
            "scal2.s5xR", scalar_identity_check("scal2", H().structure, H().space, T=H().T6), Fraction(28))),
    ]
    return E


# ------------------------------------------------------------------ frames


def frame_entries(M: LieFrame, c0: Fraction) -> list[Entry]:
    """Generic suite for a user-supplied Lie frame; SU(3) checks in dimension 6."""
    n = M.dim
    lc = cached(lambda: levi_civita(M))
    Rg = cached(lambda: curvature(M, lc()))
    E = [
        Entry("in1.jacobi", ("structure",), lambda: _flag(
            "in1.jacobi", all(not M.d(M.d(KForm.mono(n, (k,)))) for k in range(n)))),
        Entry("kz.metric", ("connection",), lambda: _flag("kz.metric", lc().is_metric())),
        Entry("kz.torsion_free", ("connection",), lambda: _flag(
            "kz.torsion_free", not any(x != 0 for x in torsion_tensor(M, lc()).flat))),
        Entry("curv.antisymmetry", ("curvature",), lambda: _flag("curv.antisymmetry", Rg().is_pair_antisymmetric())),
        Entry("curv.pair_symmetry", ("curvature",), lambda: _flag("curv.pair_symmetry", Rg().is_pair_symmetric())),
    ]
    if n != 6:
        return E
    s = canonical("su3")

    def admissible():
        try:
            return su3_torsion(s, M)
        except GeometryError:
            return None

    tor = cached(admissible)

    def needs_torsion(cid, fn):
        def run():
            if tor() is None:
                return CheckResult(cid, SKIPPED, "", "", "canonical SU(3)-structure not admissible on this frame")
            return fn()
        return run

    def adm():
        try:
            su3_torsion(s, M)
            return _flag("su3.admissible", True)
        except GeometryError as exc:
            return CheckResult("su3.admissible", SKIPPED, "false", "true", str(exc))

    E += [
        Entry("su3.admissible", ("structure",), adm),
        Entry("cy2.T", ("torsion",), needs_torsion("cy2.T", lambda: compare("cy2.T", tor().T_cy2, tor().T))),
        Entry("acy.dF_minus", ("torsion",), needs_torsion("acy.dF_minus", lambda: _flag("acy.dF_minus", tor().acy_holds))),
        Entry("scal2.frame", ("scalar",), needs_torsion("scal2.frame", lambda: _scal(
            "scal2.frame", scalar_identity_check("scal2", s, M), None))),
    ]
    return E


# ------------------------------------------------------------------ driver


SUITES = {"nil6": nil6_entries, "s6_nk": s6_entries, "s7_np": s7_entries, "s5_sasaki": s5_entries}


@functools.lru_cache(maxsize=1)
def calibrated_c0() -> Fraction:
    """The single Pontrjagin normalization, solved on nil6."""
    return calibrate_pontrjagin()


def entries_for(target, c0: Optional[Fraction] = None) -> list[Entry]:
    """All entries for a :class:`ModelHandle` or a bare :class:`LieFrame`."""
    c0 = calibrated_c0() if c0 is None else c0
    if isinstance(target, LieFrame):
        return frame_entries(target, c0)
    return SUITES[target.name](target, c0)


def run_scenario(target, checks: Optional[Iterable[str]] = None, c0: Optional[Fraction] = None) -> list[CheckResult]:
    """Run the selected checks in their fixed order.

    Raises :class:`UsageError` for unknown ids before anything is evaluated.
    """
    chosen = select(entries_for(target, c0), None if checks is None else list(checks))
    return [_guard(e) for e in chosen]
