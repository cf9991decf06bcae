"""Frame backends, connections and curvature.

Two backends describe a manifold through a global orthonormal coframe:

* :class:`LieFrame` -- left-invariant coframe given by its structure
  equations ``d e_k``.  Everything (brackets, Levi-Civita connection,
  curvature) is computed.
* :class:`ModelSpace` -- closed-form data for spaces without structure
  constants (round spheres, Sasakian space forms): the Riemannian curvature,
  a parallel torsion 3-form and the exterior derivatives of a few generating
  forms.  ``d`` of any form in the algebra generated by them follows from the
  Leibniz rule.

Index conventions: ``gamma[i, j, k] = g(nabla_{e_i} e_j, e_k)``,
``R[i, j, k, l] = g(R(e_i, e_j) e_k, e_l)`` with
``R(X, Y) = [nabla_X, nabla_Y] - nabla_[X,Y]``.  For a round sphere of
sectional curvature kappa this gives ``R_ijkl = kappa (g_jk g_il - g_ik g_jl)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .errors import (
    ConsistencyError,
    DegreeMismatch,
    DimensionMismatch,
    GeometryError,
    InvalidFrame,
    UnsupportedOperation,
)
from .exterior import (
    KForm,
    default_labels,
    exact_einsum,
    format_form,
    from_array,
    hodge_star,
    to_array,
    wedge,
    zeros,
)
from .linalg import nullspace, solve

ZERO = Fraction(0)


def zero_array(*shape: int) -> np.ndarray:
    return np.full(shape, ZERO, dtype=object)


def arrays_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def _first_nonzero(arr: np.ndarray):
    for idx in itertools.product(*(range(s) for s in arr.shape)):
        if arr[idx] != 0:
            return idx
    return None


# --------------------------------------------------------------------- backends


def _d_monomial(differentials: Sequence[KForm], dim: int, key: tuple[int, ...]) -> KForm:
    out = zeros(dim, len(key) + 1)
    for p, i in enumerate(key):
        left = KForm.mono(dim, key[:p]) if p else KForm.const(dim, 1)
        right = KForm.mono(dim, key[p + 1:]) if p + 1 < len(key) else KForm.const(dim, 1)
        term = wedge(wedge(left, differentials[i]), right)
        out = out + (term if p % 2 == 0 else -term)
    return out


@dataclass(frozen=True, eq=False)
class LieFrame:
    """Left-invariant orthonormal coframe with ``differentials[k] = d e_k``.

    Construction checks ``d(d e_k) = 0`` for every k (the Jacobi identity of
    the dual Lie algebra) and raises :class:`InvalidFrame` otherwise.
    """

    dim: int
    differentials: tuple[KForm, ...]
    labels: tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.dim))
        object.__setattr__(self, "differentials", tuple(self.differentials))
        object.__setattr__(self, "_dcache", {})
        if len(self.differentials) != self.dim or len(self.labels) != self.dim:
            raise DimensionMismatch("need one differential and one label per frame index")
        for k, de in enumerate(self.differentials):
            if de.dim != self.dim or de.degree != 2:
                raise DegreeMismatch(f"d e{self.labels[k]} must be a 2-form on dim {self.dim}")
        for k, de in enumerate(self.differentials):
            dde = self.d(de)
            if dde:
                key = min(dde.coeffs)
                triple = tuple(key)
                labs = ",".join("e" + self.labels[i] for i in triple)
                raise InvalidFrame(
                    f"d(d e{self.labels[k]}) = {format_form(dde, self.labels)} != 0 "
                    f"(Jacobi fails on ({labs}))",
                    triple=triple,
                )

    def __eq__(self, other) -> bool:
        return isinstance(other, LieFrame) and self.differentials == other.differentials

    def __hash__(self) -> int:
        return hash(self.differentials)

    def d(self, a: KForm) -> KForm:
        if a.dim != self.dim:
            raise DimensionMismatch(f"form of dim {a.dim} on a frame of dim {self.dim}")
        if a.degree == self.dim:
            return zeros(self.dim, self.dim) if self.dim else a
        out = zeros(self.dim, a.degree + 1)
        cache = self._dcache
        for key, v in a.items():
            dm = cache.get(key)
            if dm is None:
                dm = cache[key] = _d_monomial(self.differentials, self.dim, key)
            out = out + v * dm
        return out

    def fmt(self, a: KForm) -> str:
        return format_form(a, self.labels)

    def position(self, label) -> int:
        return self.labels.index(str(label))


@dataclass(frozen=True, eq=False)
class CurvatureTensor:
    """``r[i, j, k, l] = R(e_i, e_j, e_k, e_l)``; antisymmetric in both pairs."""

    dim: int
    r: np.ndarray

    def __post_init__(self):
        if self.r.shape != (self.dim,) * 4:
            raise DimensionMismatch("curvature array must be n x n x n x n")

    def __getitem__(self, idx) -> Fraction:
        return self.r[idx]

    def __eq__(self, other) -> bool:
        return isinstance(other, CurvatureTensor) and arrays_equal(self.r, other.r)

    __hash__ = None

    def __add__(self, other: "CurvatureTensor") -> "CurvatureTensor":
        return CurvatureTensor(self.dim, self.r + other.r)

    def __sub__(self, other: "CurvatureTensor") -> "CurvatureTensor":
        return CurvatureTensor(self.dim, self.r - other.r)

    def scaled(self, s) -> "CurvatureTensor":
        return CurvatureTensor(self.dim, self.r * Fraction(s))

    def is_pair_antisymmetric(self) -> bool:
        r = self.r
        return arrays_equal(r, -r.transpose(1, 0, 2, 3)) and arrays_equal(r, -r.transpose(0, 1, 3, 2))

    def is_pair_symmetric(self) -> bool:
        return arrays_equal(self.r, self.r.transpose(2, 3, 0, 1))

    def embed(self, dim: int, offset: int = 0) -> "CurvatureTensor":
        r = zero_array(dim, dim, dim, dim)
        s = slice(offset, offset + self.dim)
        r[s, s, s, s] = self.r
        return CurvatureTensor(dim, r)

    def slot(self, k: int, l: int) -> KForm:
        """The 2-form ``R(., ., e_k, e_l)``."""
        return from_array(self.r[:, :, k, l], check=False)

    def nonzero(self) -> dict[tuple[int, int, int, int], Fraction]:
        return {
            idx: self.r[idx]
            for idx in itertools.product(range(self.dim), repeat=4)
            if self.r[idx] != 0
        }


def constant_curvature(dim: int, kappa) -> CurvatureTensor:
    """``R_ijkl = kappa (g_jk g_il - g_ik g_jl)``."""
    kappa = Fraction(kappa)
    r = zero_array(dim, dim, dim, dim)
    for i in range(dim):
        for j in range(dim):
            if i != j:
                r[i, j, j, i] += kappa
                r[i, j, i, j] -= kappa
    return CurvatureTensor(dim, r)


@dataclass(frozen=True, eq=False)
class ModelSpace:
    """Closed-form backend: curvature, torsion and generator d-data.

    ``generators`` holds ``(name, form, d(form))`` triples.  On
    construction every linear relation among products of generators (up to
    ``check_degree``) is verified to be respected by ``d``; a violation means
    the declared data are inconsistent and raises :class:`ConsistencyError`.
    ``torsion`` is assumed parallel for the torsion connection; this is
    recorded in ``assumptions``, not checked.
    """

    dim: int
    curvature: CurvatureTensor
    torsion: KForm
    generators: tuple[tuple[str, KForm, KForm], ...] = ()
    labels: tuple[str, ...] = ()
    name: str = ""
    assumptions: tuple[str, ...] = ("nabla T = 0",)
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.dim))
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.curvature.dim != self.dim or self.torsion.dim != self.dim:
            raise DimensionMismatch("model data on a different frame")
        if self.torsion.degree != 3:
            raise DegreeMismatch("torsion must be a 3-form")
        for name, a, da in self.generators:
            if a.dim != self.dim or da.dim != self.dim or da.degree != a.degree + 1:
                raise DegreeMismatch(f"generator {name}: bad d-data shape")

    def fmt(self, a: KForm) -> str:
        return format_form(a, self.labels)

    def position(self, label) -> int:
        return self.labels.index(str(label))

    def _products(self, degree: int) -> list[tuple[KForm, KForm]]:
        """All (product, d(product)) pairs of generators of total ``degree``."""
        cache = self.__dict__.setdefault("_prod_cache", {})
        if degree in cache:
            return cache[degree]
        gens = [(a, da) for _, a, da in self.generators if a.degree > 0]
        out: list[tuple[KForm, KForm]] = []

        def rec(start: int, acc: KForm, dacc: KForm, used_odd: set):
            if acc.degree == degree:
                if acc:
                    out.append((acc, dacc))
                return
            for gi in range(start, len(gens)):
                g, dg = gens[gi]
                if acc.degree + g.degree > degree or (g.degree % 2 and gi in used_odd):
                    continue
                # d(acc ^ g) = dacc ^ g + (-1)^|acc| acc ^ dg
                prod = wedge(acc, g)
                dprod = wedge(dacc, g) + (wedge(acc, dg) if acc.degree % 2 == 0 else -wedge(acc, dg))
                rec(gi, prod, dprod, used_odd | ({gi} if g.degree % 2 else set()))

        rec(0, KForm.const(self.dim, 1), zeros(self.dim, 1), set())
        cache[degree] = out
        return out

    def _vectors(self, forms: Sequence[KForm], degree: int) -> list[list[Fraction]]:
        keys = list(itertools.combinations(range(self.dim), degree))
        return [[f[k] for k in keys] for f in forms]

    def d(self, a: KForm) -> KForm:
        if a.dim != self.dim:
            raise DimensionMismatch(f"form of dim {a.dim} on a frame of dim {self.dim}")
        if a.degree == 0:
            return zeros(self.dim, 1)
        if a.degree == self.dim or not a:
            return zeros(self.dim, min(a.degree + 1, self.dim))
        prods = self._products(a.degree)
        cols = self._vectors([p for p, _ in prods], a.degree)
        target = self._vectors([a], a.degree)[0]
        x = solve(cols, target) if cols else None
        if x is None:
            raise UnsupportedOperation(
                f"{self.fmt(a)} is outside the algebra generated by the d-data of {self.name or 'model'}"
            )
        out = zeros(self.dim, a.degree + 1)
        for coef, (_, dp) in zip(x, prods):
            if coef:
                out = out + coef * dp
        return out

    def check_generators(self, max_degree: int | None = None) -> None:
        """Verify ``d`` respects every linear relation among generator products."""
        top = self.dim - 1 if max_degree is None else max_degree
        for k in range(1, top + 1):
            prods = self._products(k)
            if not prods:
                continue
            cols = self._vectors([p for p, _ in prods], k)
            for rel in nullspace(cols, len(cols[0])):
                dsum = zeros(self.dim, k + 1)
                for coef, (_, dp) in zip(rel, prods):
                    if coef:
                        dsum = dsum + coef * dp
                if dsum:
                    raise ConsistencyError(
                        f"d-data of {self.name or 'model'} violates a degree-{k} relation: "
                        f"d(0) = {self.fmt(dsum)}"
                    )

    def generator(self, name: str) -> KForm:
        for n, a, _ in self.generators:
            if n == name:
                return a
        raise KeyError(name)


FrameSpace = Union[LieFrame, ModelSpace]


# ------------------------------------------------------------ exterior calculus


def exterior_derivative(M: FrameSpace, a: KForm) -> KForm:
    """d extended from the frame differentials (LieFrame) or the generator d-data."""
    return M.d(a)


def codifferential(M: FrameSpace, a: KForm) -> KForm:
    """``delta = (-1)^(n(k+1)+1) * d *`` on k-forms, the formal adjoint of d."""
    n, k = a.dim, a.degree
    if k == 0:
        return zeros(n, 0)
    out = hodge_star(exterior_derivative(M, hodge_star(a)))
    return out if (n * (k + 1) + 1) % 2 == 0 else -out


def brackets(M: LieFrame) -> np.ndarray:
    """``c[i, j, k] = g([e_i, e_j], e_k) = -(d e_k)(e_i, e_j)``."""
    if not isinstance(M, LieFrame):
        raise UnsupportedOperation("brackets need a LieFrame")
    n = M.dim
    c = zero_array(n, n, n)
    for k, de in enumerate(M.differentials):
        for (i, j), v in de.items():
            c[i, j, k] = -v
            c[j, i, k] = v
    return c


@dataclass(frozen=True, eq=False)
class Connection:
    """Metric connection with constant coefficients ``gamma[i, j, k]``."""

    dim: int
    gamma: np.ndarray

    def __post_init__(self):
        if self.gamma.shape != (self.dim,) * 3:
            raise DimensionMismatch("connection array must be n x n x n")

    def __eq__(self, other) -> bool:
        return isinstance(other, Connection) and arrays_equal(self.gamma, other.gamma)

    __hash__ = None

    def is_metric(self) -> bool:
        return arrays_equal(self.gamma, -self.gamma.transpose(0, 2, 1))

    def nabla(self, i: int, j: int) -> list[Fraction]:
        """Coefficients of ``nabla_{e_i} e_j`` in the frame."""
        return list(self.gamma[i, j, :])


def levi_civita(M: LieFrame) -> Connection:
    """Koszul formula for left-invariant fields:
    ``2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) - g([X,Z],Y)``."""
    c = brackets(M)
    gamma = (c - c.transpose(2, 0, 1) - c.transpose(0, 2, 1)) * Fraction(1, 2)
    return Connection(M.dim, gamma)


def torsion_tensor(M: LieFrame, conn: Connection) -> np.ndarray:
    """``T[i, j, k] = g(nabla_{e_i} e_j - nabla_{e_j} e_i - [e_i, e_j], e_k)``."""
    return conn.gamma - conn.gamma.transpose(1, 0, 2) - brackets(M)


def add_torsion(conn: Connection, T: KForm) -> Connection:
    """``nabla = nabla^g + T/2``: ``gamma'[i, j, k] = gamma[i, j, k] + T_ijk / 2``."""
    if T.degree != 3:
        raise DegreeMismatch("torsion must be a 3-form")
    if T.dim != conn.dim:
        raise DimensionMismatch("torsion on a different frame")
    return Connection(conn.dim, conn.gamma + to_array(T) * Fraction(1, 2))


def curvature(M: LieFrame, conn: Connection) -> CurvatureTensor:
    """``R_ijkl = sum_m G_jkm G_iml - G_ikm G_jml - c_ijm G_mkl`` for constant coefficients."""
    G = conn.gamma
    c = brackets(M)
    r = (
        exact_einsum("jkm,iml->ijkl", G, G)
        - exact_einsum("ikm,jml->ijkl", G, G)
        - exact_einsum("ijm,mkl->ijkl", c, G)
    )
    return CurvatureTensor(M.dim, r)


def covariant_derivative_3form(conn: Connection, T: KForm) -> np.ndarray:
    """``(nabla_{e_i} T)_jkl`` for a constant-coefficient 3-form."""
    G = conn.gamma
    A = to_array(T)
    return -(
        exact_einsum("ijm,mkl->ijkl", G, A)
        + exact_einsum("ikm,jml->ijkl", G, A)
        + exact_einsum("ilm,jkm->ijkl", G, A)
    )


def is_parallel(conn: Connection, T: KForm) -> bool:
    return _first_nonzero(covariant_derivative_3form(conn, T)) is None


def _kulkarni_nomizu_g(h: np.ndarray) -> np.ndarray:
    # P(h)_ijkl = h_jk g_il + h_il g_jk - h_ik g_jl - h_jl g_ik; P(g) = 2 (g_jk g_il - g_ik g_jl)
    n = h.shape[0]
    g = zero_array(n, n)
    for i in range(n):
        g[i, i] = Fraction(1)
    return (
        exact_einsum("jk,il->ijkl", h, g)
        + exact_einsum("il,jk->ijkl", h, g)
        - exact_einsum("ik,jl->ijkl", h, g)
        - exact_einsum("jl,ik->ijkl", h, g)
    )


def ricci(R: CurvatureTensor) -> np.ndarray:
    """``Ric_jl = sum_i R_ijli`` (positive on round spheres)."""
    return np.einsum("ijli->jl", R.r)


def scalar_curvature(R: CurvatureTensor) -> Fraction:
    return sum(np.diagonal(ricci(R)), ZERO)


def ricci_scalar_weyl(R: CurvatureTensor) -> tuple[np.ndarray, Fraction, CurvatureTensor]:
    """Ricci tensor, scalar curvature and Weyl tensor of an algebraic curvature tensor."""
    n = R.dim
    if n < 4:
        raise GeometryError("Weyl tensor needs dimension >= 4")
    ric = ricci(R)
    s = sum(np.diagonal(ric), ZERO)
    g = zero_array(n, n)
    for i in range(n):
        g[i, i] = Fraction(1)
    W = (
        R.r
        - _kulkarni_nomizu_g(ric) * Fraction(1, n - 2)
        + _kulkarni_nomizu_g(g) * (s / (2 * (n - 1) * (n - 2)))
    )
    return ric, s, CurvatureTensor(n, W)


# ------------------------------------------------------------------- products


def product_with_line(M: FrameSpace, label, first: bool = False) -> FrameSpace:
    """Riemannian product with a line; the new coframe 1-form is closed.

    The new direction is appended, or prepended with ``first=True`` (needed
    when the line coordinate leads the orientation, as ``e_0`` does for
    Spin(7)).  Curvature and torsion extend by zero.
    """
    n = M.dim
    off = 1 if first else 0
    labels = ((str(label),) + M.labels) if first else (M.labels + (str(label),))
    if str(label) in M.labels:
        raise ValueError(f"label {label} already used")
    new_pos = 0 if first else n
    if isinstance(M, LieFrame):
        diffs = [de.embed(n + 1, off) for de in M.differentials]
        diffs.insert(new_pos, zeros(n + 1, 2))
        return LieFrame(n + 1, tuple(diffs), labels, name=f"{M.name}xR" if M.name else "")
    gens = [(name, a.embed(n + 1, off), da.embed(n + 1, off)) for name, a, da in M.generators]
    gens.append((f"e{label}", KForm.mono(n + 1, (new_pos,)), zeros(n + 1, 2)))
    return ModelSpace(
        n + 1,
        M.curvature.embed(n + 1, off),
        M.torsion.embed(n + 1, off),
        tuple(gens),
        labels,
        name=f"{M.name}xR" if M.name else "",
        assumptions=M.assumptions,
        extras=dict(M.extras),
    )


# ------------------------------------------------------ parallel-torsion tools


def _tt(T: KForm) -> np.ndarray:
    A = to_array(T)
    return exact_einsum("ijm,klm->ijkl", A, A)


def dT_quadratic(T: KForm) -> KForm:
    """``dT_ijkl = 2 (T_ijm T_klm + T_jkm T_ilm + T_kim T_jlm)``, valid when T is parallel."""
    if T.degree != 3:
        raise DegreeMismatch("need a 3-form")
    P = _tt(T)
    arr = 2 * (P + np.einsum("jkil->ijkl", P) + np.einsum("kijl->ijkl", P))
    try:
        return from_array(arr)
    except ValueError as exc:
        raise ConsistencyError("quadratic dT is not a 4-form") from exc


def nabla_curvature_from_riemannian(Rg: CurvatureTensor, T: KForm) -> CurvatureTensor:
    """Solve ``R^g = R^nabla - T_ijm T_klm / 2 - T_jkm T_ilm / 4 - T_kim T_jlm / 4`` for R^nabla."""
    if T.dim != Rg.dim:
        raise DimensionMismatch("torsion on a different frame")
    P = _tt(T)
    r = (
        Rg.r
        + P * Fraction(1, 2)
        + np.einsum("jkil->ijkl", P) * Fraction(1, 4)
        + np.einsum("kijl->ijkl", P) * Fraction(1, 4)
    )
    return CurvatureTensor(Rg.dim, r)


def tilde_curvature(Rn: CurvatureTensor, dT: KForm) -> CurvatureTensor:
    """Curvature of ``nabla^g - T/2`` from ``R^nabla = R^~ + dT/2``.

    Requires the pair symmetry ``R^nabla(X,Y,Z,V) = R^nabla(Z,V,X,Y)``; the
    pairing ``R^nabla(X,Y,Z,V) = R^~(Z,V,X,Y) + dT(X,Y,Z,V)/2`` is verified on
    the result.
    """
    if dT.degree != 4 or dT.dim != Rn.dim:
        raise DegreeMismatch("dT must be a 4-form on the same frame")
    if not Rn.is_pair_symmetric():
        raise ConsistencyError("bas2: R^nabla is not pair symmetric; nabla T is not a 4-form")
    half = to_array(dT) * Fraction(1, 2)
    Rt = CurvatureTensor(Rn.dim, Rn.r - half)
    if not arrays_equal(Rn.r, Rt.r.transpose(2, 3, 0, 1) + half):
        raise ConsistencyError("bas1 pairing identity fails")
    return Rt


# --------------------------------------------------------------- Pontrjagin

# Fixed once from dT = Tr(R^nabla ^ R^nabla) / 2 on the nilmanifold example;
# see models.calibrate_pontrjagin.
PONTRJAGIN_C0 = Fraction(1)


def curvature_two_forms(R: CurvatureTensor) -> dict[tuple[int, int], KForm]:
    """``Omega_ab = sum_{i<j} R_ijab e_ij`` for ``a < b``."""
    n = R.dim
    return {(a, b): R.slot(a, b) for a in range(n) for b in range(a + 1, n)}


def pontrjagin_raw(R: CurvatureTensor) -> KForm:
    """``sum_{a<b} Omega_ab ^ Omega_ab`` before the global normalization."""
    out = zeros(R.dim, 4) if R.dim >= 4 else zeros(R.dim, R.dim)
    for om in curvature_two_forms(R).values():
        if om:
            out = out + wedge(om, om)
    return out


def pontrjagin(R: CurvatureTensor, c0: Fraction = PONTRJAGIN_C0) -> KForm:
    """``Tr(R ^ R) = c0 * sum_{a<b} Omega_ab ^ Omega_ab``; quadratic in R."""
    return pontrjagin_raw(R) * c0
