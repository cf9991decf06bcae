"""SU(3), G2, Spin(7) and almost contact structures with skew torsion.

Every structure is given by its defining forms on an oriented orthonormal
frame.  The almost complex structure of an SU(3)-structure is always derived
from the Kaehler form through ``F(X, Y) = g(X, JY)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .errors import (
    ConsistencyError,
    DegreeMismatch,
    DimensionMismatch,
    NotAdmissible,
    UnsupportedOperation,
)
from .exterior import (
    Endomorphism,
    exact_einsum,
    KForm,
    from_array,
    hodge_star,
    inner,
    parse_form,
    pullback_endo,
    to_array,
    wedge,
    zeros,
)
from .frames import (
    CurvatureTensor,
    FrameSpace,
    LieFrame,
    ModelSpace,
    add_torsion,
    arrays_equal,
    brackets,
    codifferential,
    curvature,
    exterior_derivative,
    levi_civita,
    nabla_curvature_from_riemannian,
    product_with_line,
    scalar_curvature,
)

# ------------------------------------------------------------------ structures


@dataclass(frozen=True)
class SU3Structure:
    """Kaehler form plus the real and imaginary parts of the (3,0)-form.

    ``psi_plus``/``psi_minus`` may be omitted for purely Hermitian data.
    """

    F: KForm
    psi_plus: Optional[KForm] = None
    psi_minus: Optional[KForm] = None

    def __post_init__(self):
        if self.F.degree != 2:
            raise DegreeMismatch("F must be a 2-form")
        for psi in (self.psi_plus, self.psi_minus):
            if psi is not None and (psi.degree != 3 or psi.dim != self.F.dim):
                raise DegreeMismatch("Psi must be a 3-form on the frame of F")

    @property
    def dim(self) -> int:
        return self.F.dim

    @property
    def J(self) -> Endomorphism:
        return Endomorphism.from_two_form(self.F)

    @property
    def has_psi(self) -> bool:
        return self.psi_plus is not None and self.psi_minus is not None

    def invariant_violations(self) -> list[str]:
        bad = []
        if not self.J.is_almost_complex():
            bad.append("J^2 != -Id")
        if self.has_psi:
            if wedge(self.F, self.psi_plus) or wedge(self.F, self.psi_minus):
                bad.append("F ^ Psi != 0")
            if inner(self.psi_plus, self.psi_plus) != inner(self.psi_minus, self.psi_minus):
                bad.append("|Psi+| != |Psi-|")
        return bad


@dataclass(frozen=True)
class G2Structure:
    omega: KForm

    def __post_init__(self):
        if self.omega.degree != 3 or self.omega.dim != 7:
            raise DegreeMismatch("a G2-structure is a 3-form in dimension 7")

    @property
    def dim(self) -> int:
        return 7


@dataclass(frozen=True)
class Spin7Structure:
    Phi: KForm

    def __post_init__(self):
        if self.Phi.degree != 4 or self.Phi.dim != 8:
            raise DegreeMismatch("a Spin(7)-structure is a 4-form in dimension 8")

    @property
    def dim(self) -> int:
        return 8


@dataclass(frozen=True)
class ContactStructure:
    """Almost contact metric structure ``(eta, F5 = g(., psi .), psi, xi)``."""

    eta: KForm
    F5: KForm
    psi: Endomorphism
    xi: int

    @property
    def dim(self) -> int:
        return self.eta.dim

    def invariant_violations(self) -> list[str]:
        n = self.dim
        bad = []
        if any(x != 0 for x in self.psi.column(self.xi)):
            bad.append("psi(xi) != 0")
        eta_xi = Endomorphism(
            [[(1 if (i == self.xi) else 0) * self.eta[j] for j in range(n)] for i in range(n)]
        )
        if self.psi @ self.psi != -Endomorphism.identity(n) + eta_xi:
            bad.append("psi^2 != -Id + eta (x) xi")
        if Endomorphism.from_two_form(self.F5) != self.psi:
            bad.append("F5 != g(., psi .)")
        return bad


@dataclass(frozen=True)
class DilatonData:
    """Constant-coefficient differential of the dilaton."""

    dphi: KForm

    def lee_form(self, dim: int) -> KForm:
        factor = {6: Fraction(2), 7: Fraction(2), 8: Fraction(12, 7)}[dim]
        return self.dphi * factor


GStructure = Union[SU3Structure, G2Structure, Spin7Structure, ContactStructure]

# ---------------------------------------------------------------- canonical

CANONICAL_TEXT = {
    "F": "-e12 - e34 - e56",
    "psi_plus": "-e135 + e236 + e146 + e245",
    "psi_minus": "-e136 - e145 - e235 + e246",
    "omega": "e127 - e236 + e347 + e567 - e146 - e245 + e135",
    "star_omega": "e3456 + e1457 + e1256 + e1234 + e2357 + e1367 - e2467",
    "Phi": (
        "e0127 - e0236 + e0347 + e0567 - e0146 - e0245 + e0135"
        " + e3456 + e1457 + e1256 + e1234 + e2357 + e1367 - e2467"
    ),
    "F5": "e12 + e34",
    "eta": "e5",
}

SPIN7_LABELS = tuple(str(i) for i in range(8))


def canonical(kind: str, dim: Optional[int] = None) -> GStructure:
    """The standard forms: ``su3`` (dim 6), ``g2`` (7), ``spin7`` (8, frame e0..e7), ``sasaki`` (5)."""
    expected = {"su3": 6, "g2": 7, "spin7": 8, "sasaki": 5}
    if kind not in expected:
        raise ValueError(f"unknown structure kind {kind!r}")
    if dim is not None and dim != expected[kind]:
        raise DimensionMismatch(f"{kind} lives in dimension {expected[kind]}, not {dim}")
    t = CANONICAL_TEXT
    if kind == "su3":
        return SU3Structure(parse_form(t["F"], 6), parse_form(t["psi_plus"], 6), parse_form(t["psi_minus"], 6))
    if kind == "g2":
        return G2Structure(parse_form(t["omega"], 7))
    if kind == "spin7":
        return Spin7Structure(parse_form(t["Phi"], 8, labels=SPIN7_LABELS))
    F5 = parse_form(t["F5"], 5)
    return ContactStructure(parse_form(t["eta"], 5), F5, Endomorphism.from_two_form(F5), xi=4)


# ------------------------------------------------------------------ helpers


def _slots(J: Endomorphism, a: KForm, slots) -> np.ndarray:
    """Component array of ``a`` with J inserted in the given argument slots."""
    arr = to_array(a)
    Jm = np.array(J.matrix, dtype=object)
    letters = "abcdefgh"[: a.degree]
    for s in slots:
        src = letters[:s] + "z" + letters[s + 1:]
        arr = exact_einsum(f"{src},z{letters[s]}->{letters}", arr, Jm)
    return arr


def type_30_part(J: Endomorphism, a: KForm) -> KForm:
    """(3,0)+(0,3) part of a real 3-form.

    ``A(a) = a(J.,J.,.) + a(J.,.,J.) + a(.,J.,J.)`` is ``-3`` on
    (3,0)+(0,3) and ``+1`` on (2,1)+(1,2), so the projection is ``(a - A a)/4``.
    """
    if a.degree != 3:
        raise DegreeMismatch("need a 3-form")
    A = _slots(J, a, (0, 1)) + _slots(J, a, (0, 2)) + _slots(J, a, (1, 2))
    return from_array((to_array(a) - A) * Fraction(1, 4))


def full_norm2(a: KForm) -> Fraction:
    """Sum of squares over all ordered index tuples, ``k! * inner(a, a)``."""
    from math import factorial

    return factorial(a.degree) * inner(a, a)


@dataclass(frozen=True)
class NijenhuisResult:
    tensor: np.ndarray
    skew: bool
    form: Optional[KForm]


def nijenhuis(M: LieFrame, J: Endomorphism) -> NijenhuisResult:
    """``N(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY]``, ``tensor[i,j,k] = g(N(e_i,e_j),e_k)``."""
    if J.dim != M.dim:
        raise DimensionMismatch("J on a different frame")
    c = brackets(M)
    Jm = np.array(J.matrix, dtype=object)
    # [u, v]_k = u_i v_j c_ijk ; columns of Jm are J e_j
    JJ = exact_einsum("ai,bj,abk->ijk", Jm, Jm, c)
    JX = exact_einsum("ai,ajm,km->ijk", Jm, c, Jm)
    XJ = exact_einsum("bj,ibm,km->ijk", Jm, c, Jm)
    N = JJ - c - JX - XJ
    form = from_array(N, check=False)
    skew = arrays_equal(N, to_array(form))
    return NijenhuisResult(N, skew, form if skew else None)


def nijenhuis_form(s: SU3Structure, M: FrameSpace) -> KForm:
    """N as a 3-form; model spaces supply it as data under ``extras['N']``."""
    if isinstance(M, LieFrame):
        res = nijenhuis(M, s.J)
        if not res.skew:
            raise NotAdmissible("N_skew", "Nijenhuis tensor is not totally skew-symmetric")
        return res.form
    if "N" in M.extras:
        return M.extras["N"]
    raise UnsupportedOperation(f"model {M.name or '?'} does not declare its Nijenhuis tensor")


# --------------------------------------------------------------- Lee forms


def lee_form(s: GStructure, M: FrameSpace) -> KForm:
    """theta^6 = delta F(J .), theta^7 = -*(*d omega ^ omega)/3, theta^8 = -*(*d Phi ^ Phi)/7."""
    if isinstance(s, SU3Structure):
        return pullback_endo(s.J, codifferential(M, s.F))
    if isinstance(s, G2Structure):
        dw = exterior_derivative(M, s.omega)
        return hodge_star(wedge(hodge_star(dw), s.omega)) * Fraction(-1, 3)
    if isinstance(s, Spin7Structure):
        dP = exterior_derivative(M, s.Phi)
        return hodge_star(wedge(hodge_star(dP), s.Phi)) * Fraction(-1, 7)
    raise UnsupportedOperation(f"no Lee form for {type(s).__name__}")


# ----------------------------------------------------------------- dim 6


@dataclass(frozen=True)
class SU3Report:
    W1plus: Fraction
    W1minus: Fraction
    theta6: KForm
    N_skew: bool
    N: Optional[KForm]
    half_flat: bool
    dF_wedge_F_zero: bool
    cycon_plus: bool
    cycon_minus: bool

    @property
    def cycon_holds(self) -> bool:
        return self.cycon_plus and self.cycon_minus


def _cycon_rhs(theta: KForm, psi: KForm, N: KForm, F: KForm) -> KForm:
    return wedge(theta, psi) - hodge_star(F) * (inner(N, psi) / 4)


def su3_analyze(s: SU3Structure, M: FrameSpace) -> SU3Report:
    if not s.has_psi:
        raise UnsupportedOperation("SU(3) analysis needs Psi+ and Psi-")
    dpp = exterior_derivative(M, s.psi_plus)
    dpm = exterior_derivative(M, s.psi_minus)
    w1p = hodge_star(wedge(dpp, s.F))[()]
    w1m = hodge_star(wedge(dpm, s.F))[()]
    theta = lee_form(s, M)
    try:
        N = nijenhuis_form(s, M)
        skew = True
    except NotAdmissible:
        N, skew = None, False
    if skew:
        cp = dpp == _cycon_rhs(theta, s.psi_plus, N, s.F)
        cm = dpm == _cycon_rhs(theta, s.psi_minus, N, s.F)
    else:
        cp = cm = False
    dF = exterior_derivative(M, s.F)
    return SU3Report(
        W1plus=w1p,
        W1minus=w1m,
        theta6=theta,
        N_skew=skew,
        N=N,
        half_flat=(not dpp) and (not theta),
        dF_wedge_F_zero=not wedge(dF, s.F),
        cycon_plus=cp,
        cycon_minus=cm,
    )


@dataclass(frozen=True)
class SU3Torsion:
    T: KForm
    T_cy2: KForm
    T_cy2_plus: KForm
    dF_minus: KForm
    JN: KForm
    acy_holds: bool


def su3_torsion(s: SU3Structure, M: FrameSpace) -> SU3Torsion:
    """Characteristic torsion ``-*dF + *(theta ^ F) + (N,Psi+)Psi+/4 + (N,Psi-)Psi-/4``.

    Cross-checked against ``-dF(J.,J.,J.) + N`` and
    ``-dF^+(J.,J.,J.) + N/4``; raises :class:`NotAdmissible` naming the first
    violated hypothesis and :class:`ConsistencyError` if the routes disagree.
    """
    rep = su3_analyze(s, M)
    if not rep.N_skew:
        raise NotAdmissible("N_skew", "Nijenhuis tensor is not totally skew-symmetric")
    if not rep.cycon_plus:
        raise NotAdmissible("cycon.psi_plus", "d Psi+ != theta ^ Psi+ - (N,Psi+) *F / 4")
    if not rep.cycon_minus:
        raise NotAdmissible("cycon.psi_minus", "d Psi- != theta ^ Psi- - (N,Psi-) *F / 4")
    N, F, J, theta = rep.N, s.F, s.J, rep.theta6
    dF = exterior_derivative(M, F)
    T = (
        -hodge_star(dF)
        + hodge_star(wedge(theta, F))
        + s.psi_plus * (inner(N, s.psi_plus) / 4)
        + s.psi_minus * (inner(N, s.psi_minus) / 4)
    )
    T_cy2 = -pullback_endo(J, dF) + N
    dFm = type_30_part(J, dF)
    T_cy2p = -pullback_endo(J, dF - dFm) + N * Fraction(1, 4)
    JN = pullback_endo(J, N)
    if T != T_cy2 or T != T_cy2p:
        raise ConsistencyError("torsion routes disagree")
    return SU3Torsion(T, T_cy2, T_cy2p, dFm, JN, dFm == JN * Fraction(-3, 4))


# ----------------------------------------------------------------- dim 7, 8


@dataclass(frozen=True)
class G2Torsion:
    T: KForm
    theta7: KForm
    pairing: Fraction
    condition_holds: bool


def g2_torsion(s: G2Structure, M: FrameSpace, strict: bool = True) -> G2Torsion:
    """``T = (d omega, *omega) omega / 6 - *d omega + *(theta7 ^ omega)``.

    ``condition_holds`` records ``d*omega = theta7 ^ *omega``; with
    ``strict`` a failure raises :class:`NotAdmissible`.
    """
    w = s.omega
    sw = hodge_star(w)
    dw = exterior_derivative(M, w)
    theta = lee_form(s, M)
    ok = exterior_derivative(M, sw) == wedge(theta, sw)
    if strict and not ok:
        raise NotAdmissible("sol7g", "d*omega != theta7 ^ *omega")
    pairing = inner(dw, sw)
    T = w * (pairing / 6) - hodge_star(dw) + hodge_star(wedge(theta, w))
    return G2Torsion(T, theta, pairing, ok)


@dataclass(frozen=True)
class Spin7Torsion:
    T: KForm
    theta8: KForm


SPIN7_THETA_COEFF = Fraction(7, 6)


def spin7_torsion(s: Spin7Structure, M: FrameSpace, coeff: Fraction = SPIN7_THETA_COEFF) -> Spin7Torsion:
    """``T = *d Phi - c *(theta8 ^ Phi)``; exists for every Spin(7)-structure.

    The default ``c = 7/6`` is the dilaton form ``*d Phi - 2 *(d phi ^ Phi)``
    with ``theta8 = 12/7 d phi``; ``c = 1`` is accepted for comparison.
    """
    theta = lee_form(s, M)
    dP = exterior_derivative(M, s.Phi)
    return Spin7Torsion(hodge_star(dP) - hodge_star(wedge(theta, s.Phi)) * coeff, theta)


# ---------------------------------------------------------------- instantons


def _two_forms(curv) -> list[KForm]:
    if isinstance(curv, KForm):
        if curv.degree != 2:
            raise DegreeMismatch("instanton test takes 2-forms")
        return [curv]
    if isinstance(curv, CurvatureTensor):
        n = curv.dim
        return [curv.slot(k, l) for k in range(n) for l in range(k + 1, n)]
    return list(curv)


def in_su3(alpha: KForm, s: SU3Structure) -> bool:
    """J-invariant and orthogonal to F."""
    return pullback_endo(s.J, alpha) == alpha and inner(alpha, s.F) == 0


def in_g2(alpha: KForm, s: G2Structure) -> bool:
    return hodge_star(wedge(alpha, s.omega)) == -alpha


def in_spin7(alpha: KForm, s: Spin7Structure) -> bool:
    return hodge_star(wedge(alpha, s.Phi)) == -alpha


def _g2_coefficient_forms(forms: list[KForm], s: G2Structure) -> list[bool]:
    # with the canonical forms, contraction against *omega (resp. Phi) is
    # -1 on the structure algebra and +2 (resp. +3) on its complement
    a = np.array([to_array(x) for x in forms], dtype=object)
    contracted = exact_einsum("kmn,mnp->kp", a, to_array(s.omega))
    selfdual = exact_einsum("kpq,pqmn->kmn", a, to_array(hodge_star(s.omega))) * Fraction(1, 2)
    return [
        all(x == 0 for x in contracted[k]) and arrays_equal(a[k], -selfdual[k]) for k in range(len(forms))
    ]


def _spin7_coefficient_form(forms: list[KForm], s: Spin7Structure) -> list[bool]:
    a = np.array([to_array(x) for x in forms], dtype=object)
    b = exact_einsum("kpq,pqmn->kmn", a, to_array(s.Phi)) * Fraction(-1, 2)
    return [arrays_equal(a[k], b[k]) for k in range(len(forms))]


def instanton_check(curv, s: GStructure, cross_check: bool = True) -> bool:
    """True iff every curvature 2-form ``R(., ., e_k, e_l)`` lies in the structure algebra.

    For G2 and Spin(7) the index forms of the instanton equations are
    evaluated as well; disagreement raises :class:`ConsistencyError`.
    """
    forms = _two_forms(curv)
    for alpha in forms:
        if alpha.dim != s.dim:
            raise DimensionMismatch("curvature and structure on different frames")
    if isinstance(s, SU3Structure):
        return all(in_su3(a, s) for a in forms)
    if isinstance(s, G2Structure):
        res = [in_g2(a, s) for a in forms]
        if cross_check and res != _g2_coefficient_forms(forms, s):
            raise ConsistencyError("7inst index form disagrees with *(a ^ omega) = -a")
        return all(res)
    if isinstance(s, Spin7Structure):
        res = [in_spin7(a, s) for a in forms]
        if cross_check and res != _spin7_coefficient_form(forms, s):
            raise ConsistencyError("8inst index form disagrees with *(a ^ Phi) = -a")
        return all(res)
    raise UnsupportedOperation(f"no instanton condition for {type(s).__name__}")


# ---------------------------------------------------------- connections


def torsion_connection_curvature(M: FrameSpace, T: KForm) -> CurvatureTensor:
    """Curvature of ``nabla^g + T/2``: computed on a LieFrame, from the
    parallel-torsion relation on a ModelSpace."""
    if isinstance(M, LieFrame):
        return curvature(M, add_torsion(levi_civita(M), T))
    return nabla_curvature_from_riemannian(M.curvature, T)


def riemannian_curvature(M: FrameSpace) -> CurvatureTensor:
    if isinstance(M, LieFrame):
        return curvature(M, levi_civita(M))
    return M.curvature


# ------------------------------------------------------------------ lifts


@dataclass(frozen=True)
class G2Lift:
    structure: G2Structure
    space: FrameSpace
    theta7: KForm
    pairing: Fraction
    theta_formula_holds: bool
    theta_flipped_holds: bool
    pairing_formula_holds: bool
    sol7g_holds: bool


def lift_su3_to_g2(s: SU3Structure, M: FrameSpace, label: str = "7") -> G2Lift:
    """``omega = -F ^ e7 - Psi+`` on ``M x R``.

    Checks ``theta7 = theta6 + (N,Psi-) e7 / 4`` (and the same with the
    e7 term negated, which is what the Lee form formula produces) and
    ``(d omega, *omega) = -3/2 (N, Psi+)``.
    """
    su3_torsion(s, M)  # raises unless admissible
    M7 = product_with_line(M, label)
    e7 = KForm.mono(7, (6,))
    F, pp = s.F.embed(7), s.psi_plus.embed(7)
    omega = -wedge(F, e7) - pp
    g2 = G2Structure(omega)
    theta7 = lee_form(g2, M7)
    N = nijenhuis_form(s, M)
    theta6 = lee_form(s, M).embed(7)
    pairing = inner(exterior_derivative(M7, omega), hodge_star(omega))
    return G2Lift(
        structure=g2,
        space=M7,
        theta7=theta7,
        pairing=pairing,
        theta_formula_holds=theta7 == theta6 + e7 * (inner(N, s.psi_minus) / 4),
        theta_flipped_holds=theta7 == theta6 - e7 * (inner(N, s.psi_minus) / 4),
        pairing_formula_holds=pairing == Fraction(-3, 2) * inner(N, s.psi_plus),
        sol7g_holds=g2_torsion(g2, M7, strict=False).condition_holds,
    )


@dataclass(frozen=True)
class Spin7Lift:
    structure: Spin7Structure
    space: FrameSpace
    theta8: KForm
    theta_formula_holds: bool
    theta_flipped_holds: bool
    T8: KForm
    T7: KForm


def lift_g2_to_spin7(s: G2Structure, M: FrameSpace, label: str = "0") -> Spin7Lift:
    """``Phi = e0 ^ omega + *omega`` on ``R x M`` with ``e0`` leading the orientation.

    Checks ``theta8 = 6/7 theta7 + (d omega, *omega) e0 / 7`` and the
    variant with the e0 term negated; only the latter is compatible with
    ``e0`` leading the orientation in which Phi is self-dual.
    """
    g2t = g2_torsion(s, M)
    M8 = product_with_line(M, label, first=True)
    e0 = KForm.mono(8, (0,))
    w = s.omega.embed(8, 1)
    Phi = wedge(e0, w) + hodge_star(s.omega).embed(8, 1)
    sp = Spin7Structure(Phi)
    t8 = spin7_torsion(sp, M8)
    base = g2t.theta7.embed(8, 1) * Fraction(6, 7)
    return Spin7Lift(
        structure=sp,
        space=M8,
        theta8=t8.theta8,
        theta_formula_holds=t8.theta8 == base + e0 * (g2t.pairing / 7),
        theta_flipped_holds=t8.theta8 == base - e0 * (g2t.pairing / 7),
        T8=t8.T,
        T7=g2t.T.embed(8, 1),
    )


@dataclass(frozen=True)
class HermitianLift:
    structure: SU3Structure
    space: FrameSpace
    F6: KForm
    theta6: KForm
    T6: KForm
    dT6: KForm
    lck_holds: bool


def lift_contact_to_hermitian(c: ContactStructure, M: FrameSpace, label: str = "6") -> HermitianLift:
    """``F6 = F5 + e5 ^ e6`` on ``M x R`` for a Sasakian 5-frame (``d eta = 2 F5``).

    The torsion is the Bismut torsion ``-dF6(J.,J.,J.)`` of the integrable
    structure.
    """
    if exterior_derivative(M, c.eta) != c.F5 * 2:
        raise NotAdmissible("sas1", "d eta != 2 F5: not Sasakian")
    n = c.dim
    M6 = product_with_line(M, label)
    if isinstance(M6, ModelSpace):
        # normal contact structure: the product complex structure is integrable
        M6 = replace(M6, extras={**M6.extras, "N": zeros(n + 1, 3)})
    e6 = KForm.mono(n + 1, (n,))
    F6 = c.F5.embed(n + 1) + wedge(c.eta.embed(n + 1), e6)
    h = SU3Structure(F6)
    dF6 = exterior_derivative(M6, F6)
    theta = lee_form(h, M6)
    T6 = -pullback_endo(h.J, dF6)
    return HermitianLift(
        structure=h,
        space=M6,
        F6=F6,
        theta6=theta,
        T6=T6,
        dT6=exterior_derivative(M6, T6),
        lck_holds=dF6 == wedge(e6, F6) * 2,
    )


# ------------------------------------------------------- scalar curvature


@dataclass(frozen=True)
class ScalarReport:
    kind: str
    trace: Fraction
    formula: Fraction
    terms: dict = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return self.trace == self.formula


def scalar_identity_check(kind: str, s: GStructure, M: FrameSpace, **inputs) -> ScalarReport:
    """Compare the curvature trace with a closed-form scalar-curvature formula.

    kinds: ``scal2`` (SU(3), needs N), ``scal1`` (G2), ``scal`` (dilaton
    form, needs ``dilaton=DilatonData`` and ``T=``), ``nk`` (``s = 15 a^2``
    with ``a2=`` given).  Norms of 3-forms are full contractions.

    ``scal1`` is evaluated as ``(d omega,*omega)^2/18 + 2|theta|^2 -
    |T|^2/12 + 3 delta theta``, the normalization that agrees with the
    dilaton form under ``theta7 = 2 d phi``.
    """
    trace = scalar_curvature(riemannian_curvature(M))
    if kind == "scal2":
        if not isinstance(s, SU3Structure):
            raise UnsupportedOperation("scal2 is an SU(3) identity")
        N = nijenhuis_form(s, M)
        if not s.has_psi and N:
            raise UnsupportedOperation("scal2 without Psi needs an integrable J")
        T = inputs.get("T") or su3_torsion(s, M).T
        theta = lee_form(s, M)
        terms = {
            "(N,Psi+)": inner(N, s.psi_plus) if s.has_psi else Fraction(0),
            "(N,Psi-)": inner(N, s.psi_minus) if s.has_psi else Fraction(0),
            "|theta|^2": inner(theta, theta),
            "|T|^2": full_norm2(T),
            "delta theta": codifferential(M, theta)[()],
        }
        formula = (
            terms["(N,Psi+)"] ** 2 / 8
            + terms["(N,Psi-)"] ** 2 / 8
            + 2 * terms["|theta|^2"]
            - terms["|T|^2"] / 12
            + 3 * terms["delta theta"]
        )
    elif kind == "scal1":
        if not isinstance(s, G2Structure):
            raise UnsupportedOperation("scal1 is a G2 identity")
        g2t = g2_torsion(s, M)
        theta = g2t.theta7
        terms = {
            "(d omega,*omega)": g2t.pairing,
            "|theta|^2": inner(theta, theta),
            "|T|^2": full_norm2(g2t.T),
            "delta theta": codifferential(M, theta)[()],
        }
        formula = (
            terms["(d omega,*omega)"] ** 2 / 18
            + 2 * terms["|theta|^2"]
            - terms["|T|^2"] / 12
            + 3 * terms["delta theta"]
        )
    elif kind == "scal":
        dil: DilatonData = inputs["dilaton"]
        T = inputs["T"]
        terms = {
            "|dphi|^2": inner(dil.dphi, dil.dphi),
            "|T|^2": full_norm2(T),
            "delta dphi": codifferential(M, dil.dphi)[()],
        }
        formula = 8 * terms["|dphi|^2"] - terms["|T|^2"] / 12 + 6 * terms["delta dphi"]
    elif kind == "nk":
        a2 = Fraction(inputs["a2"])
        terms = {"a^2": a2}
        formula = 15 * a2
    else:
        raise ValueError(f"unknown scalar identity {kind!r}")
    return ScalarReport(kind, trace, formula, terms)
