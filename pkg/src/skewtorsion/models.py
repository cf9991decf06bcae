"""Built-in example geometries with all data rational.

Each constructor validates its declared data before returning, so a
:class:`ModelHandle` is always internally consistent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .errors import ConsistencyError, GeometryError
from .exterior import (
    KForm,
    contract_pair,
    hodge_star,
    linear_ratio,
    parse_form,
    scalar,
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
    constant_curvature,
    curvature,
    dT_quadratic,
    levi_civita,
    pontrjagin_raw,
    ricci,
)
from .structures import GStructure, canonical


@dataclass(frozen=True)
class ModelHandle:
    """A named model: frame backend, structure and declared torsion."""

    name: str
    params: dict
    space: FrameSpace
    structure: GStructure
    torsion: KForm
    facts: dict = field(default_factory=dict)


NIL6_TABLE = {0: "e36", 3: "e26", 4: "e23"}


def nil6_frame() -> LieFrame:
    diffs = [zeros(6, 2)] * 6
    for k, text in NIL6_TABLE.items():
        diffs[k] = parse_form(text, 6)
    return LieFrame(6, tuple(diffs), name="nil6")


def nil6() -> ModelHandle:
    """Nilpotent Lie group with ``de1 = e36, de4 = e26, de5 = e23`` and the canonical SU(3)-structure."""
    from .structures import su3_torsion

    M = nil6_frame()
    s = canonical("su3")
    T = su3_torsion(s, M).T
    return ModelHandle("nil6", {}, M, s, T)


def _require(ok: bool, what: str) -> None:
    if not ok:
        raise ConsistencyError(f"model construction check failed: {what}")


def constant_type_holds(T: KForm, F: KForm, a2) -> bool:
    """``T_ijm T_klm = a^2/2 (g_ik g_jl - g_jk g_il - F_ik F_jl + F_jk F_il)``."""
    n = T.dim
    Fa = to_array(F)
    g = np.eye(n, dtype=int)
    rhs = np.empty((n,) * 4, dtype=object)
    for i, j, k, l in np.ndindex(*rhs.shape):
        rhs[i, j, k, l] = Fraction(a2) / 2 * (
            g[i, k] * g[j, l] - g[j, k] * g[i, l] - Fa[i, k] * Fa[j, l] + Fa[j, k] * Fa[i, l]
        )
    return arrays_equal(contract_pair(T, T), rhs)


def s6_nearly_kaehler(t=1) -> ModelHandle:
    """Round S^6 as a nearly Kaehler manifold of constant type ``a^2 = 2 t^2``.

    Torsion ``T = t Psi-``, Nijenhuis form ``N = 4 T``, sectional curvature
    ``a^2 / 2``.  The d-data ``dF = 3t Psi+``, ``dPsi+ = 0``,
    ``dPsi- = -4t *F`` are checked against the constant-type contraction
    and the quadratic dT.
    """
    t = scalar(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    a2 = 2 * t * t
    s = canonical("su3")
    F, pp, pm = s.F, s.psi_plus, s.psi_minus
    T = pm * t
    _require(constant_type_holds(T, F, a2), "constant-type identity for T = t Psi-")
    dT = dT_quadratic(T)
    _require(dT == hodge_star(F) * (-2 * a2), "dT = -2 a^2 *F")
    gens = (
        ("F", F, pp * (3 * t)),
        ("psi_plus", pp, zeros(6, 4)),
        ("psi_minus", pm, hodge_star(F) * (-4 * t)),
    )
    M = ModelSpace(
        6,
        constant_curvature(6, a2 / 2),
        T,
        gens,
        name="s6_nk",
        extras={"N": T * 4, "a2": a2},
    )
    M.check_generators()
    _require(M.d(T) == dT, "declared dPsi- agrees with quadratic dT")
    return ModelHandle("s6_nk", {"t": t}, M, s, T, {"a2": a2})


def s7_nearly_parallel(lam=1) -> ModelHandle:
    """Round S^7 as a nearly parallel G2-manifold: ``d omega = -lambda *omega``.

    Torsion ``T = -lambda omega / 6``; sectional curvature ``lambda^2 / 16``.
    """
    lam = scalar(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    s = canonical("g2")
    w = s.omega
    sw = hodge_star(w)
    T = w * (-lam / 6)
    gens = (("omega", w, sw * (-lam)), ("star_omega", sw, zeros(7, 5)))
    M = ModelSpace(7, constant_curvature(7, lam * lam / 16), T, gens, name="s7_np")
    M.check_generators()
    dT = dT_quadratic(T)
    _require(dT == sw * (lam * lam / 6), "quadratic dT = lambda^2/6 *omega")
    _require(dT == M.d(w) * (-lam / 6), "quadratic dT = -lambda/6 d omega")
    return ModelHandle("s7_np", {"lambda": lam}, M, s, T)


def sasakian_curvature() -> CurvatureTensor:
    """Riemannian curvature of the Tanno-deformed Einstein-Sasakian S^5."""
    c = canonical("sasaki")
    Fa = to_array(c.F5)
    eta = [c.eta[(i,)] for i in range(5)]
    g = np.eye(5, dtype=int)
    r = np.empty((5,) * 4, dtype=object)
    third = Fraction(1, 3)
    for i, j, k, l in np.ndindex(*r.shape):
        r[i, j, k, l] = (
            Fraction(4, 3) * (g[j, k] * g[i, l] - g[i, k] * g[j, l])
            + third * (Fa[k, j] * Fa[l, i] - Fa[k, i] * Fa[l, j] + 2 * Fa[i, j] * Fa[l, k])
            + third * (eta[i] * eta[k] * g[j, l] - eta[j] * eta[k] * g[i, l]
                       + eta[j] * eta[l] * g[i, k] - eta[i] * eta[l] * g[j, k])
        )
    return CurvatureTensor(5, r)


def s5_sasakian() -> ModelHandle:
    """Sasakian S^5 with ``eta = e5``, ``F5 = e12 + e34``, ``T5 = 2 eta ^ F5``."""
    c = canonical("sasaki")
    T = wedge(c.eta, c.F5) * 2
    gens = (("eta", c.eta, c.F5 * 2), ("F5", c.F5, zeros(5, 3)))
    Rg = sasakian_curvature()
    M = ModelSpace(5, Rg, T, gens, name="s5_sasaki")
    M.check_generators()
    ric = ricci(Rg)
    expected = np.array(
        [[(6 if i == j else 0) - 2 * c.eta[(i,)] * c.eta[(j,)] for j in range(5)] for i in range(5)],
        dtype=object,
    )
    _require(arrays_equal(ric, expected), "Ric = 6g - 2 eta (x) eta")
    _require(M.d(T) == wedge(M.d(c.eta), M.d(c.eta)), "dT5 = d eta ^ d eta")
    return ModelHandle("s5_sasaki", {}, M, c, T)


# ------------------------------------------------------------------ registry

PARAMS = {"nil6": (), "s6_nk": ("t",), "s7_np": ("lambda",), "s5_sasaki": ()}
DEFAULTS = {"s6_nk": {"t": Fraction(1)}, "s7_np": {"lambda": Fraction(1)}}
_BUILDERS: dict[str, Callable[[dict], ModelHandle]] = {
    "nil6": lambda p: nil6(),
    "s6_nk": lambda p: s6_nearly_kaehler(p["t"]),
    "s7_np": lambda p: s7_nearly_parallel(p["lambda"]),
    "s5_sasaki": lambda p: s5_sasakian(),
}


def build(name: str, params: Optional[dict] = None) -> ModelHandle:
    """Construct a model by name; unknown names or parameters raise ``KeyError``/``ValueError``."""
    if name not in PARAMS:
        raise KeyError(f"unknown model {name!r}; choose from {', '.join(PARAMS)}")
    given = dict(params or {})
    bad = set(given) - set(PARAMS[name])
    if bad:
        raise ValueError(f"model {name} takes no parameter(s) {', '.join(sorted(bad))}")
    return _BUILDERS[name]({**DEFAULTS.get(name, {}), **{k: scalar(v) for k, v in given.items()}})


# ------------------------------------------------------------- calibration


def calibrate_pontrjagin() -> Fraction:
    """The constant ``c0`` fixed by ``dT = P(R^nabla) / 2`` on nil6.

    Both sides are computed from scratch; raises if they are not proportional.
    """
    h = nil6()
    M = h.space
    Rn = curvature(M, add_torsion(levi_civita(M), h.torsion))
    ratio = linear_ratio(M.d(h.torsion), pontrjagin_raw(Rn))
    if ratio is None:
        raise GeometryError("dT and the curvature trace on nil6 are not proportional")
    return 2 * ratio
