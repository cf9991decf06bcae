"""Exact exterior algebra over an oriented orthonormal frame.

Forms are sparse maps from strictly increasing index tuples (0-based frame
positions) to :class:`fractions.Fraction`.  The metric is the identity on
the frame, so raised and lowered indices coincide, and the volume form is
``e_1 ^ ... ^ e_n`` in frame order.

Conventions
-----------
* ``e_I(e_I) = 1`` for an increasing tuple ``I`` (determinant convention).
* ``inner(a, b)`` sums coefficient products over increasing tuples.
* ``a ^ *b = inner(a, b) vol`` fixes the Hodge star.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .errors import DegreeMismatch, DimensionMismatch, FrameSyntaxError

Scalar = Fraction

__all__ = [
    "Scalar",
    "scalar",
    "perm_sign",
    "KForm",
    "Endomorphism",
    "wedge",
    "hodge_star",
    "inner",
    "pullback_endo",
    "contract_pair",
    "volume",
    "to_array",
    "from_array",
    "zeros",
    "format_form",
    "parse_form",
    "format_scalar",
    "default_labels",
]


def scalar(x) -> Fraction:
    """Coerce ints, strings like ``"3/4"`` and Fractions to an exact scalar."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, np.integer):
        return Fraction(int(x))
    raise TypeError(f"refusing inexact scalar {x!r} of type {type(x).__name__}")


def perm_sign(seq: Iterable[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 if an entry repeats."""
    s = list(seq)
    if len(set(s)) != len(s):
        return 0
    sign = 1
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                sign = -sign
    return sign


class KForm:
    """A constant-coefficient k-form on an n-dimensional frame.

    Parameters
    ----------
    dim : int
        Frame dimension n.
    degree : int
        Form degree k, ``0 <= k <= n``.
    coeffs : mapping, optional
        Index tuple -> coefficient.  Tuples need not be increasing; they are
        sorted with the permutation sign applied and repeated entries are
        rejected.  Zero coefficients are dropped.
    """

    __slots__ = ("dim", "degree", "_c", "_hash")

    def __init__(self, dim: int, degree: int, coeffs: Mapping[tuple, object] | None = None):
        if not 0 <= degree <= dim:
            raise DegreeMismatch(f"degree {degree} outside 0..{dim}")
        self.dim = dim
        self.degree = degree
        c: dict[tuple[int, ...], Fraction] = {}
        for key, val in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != degree:
                raise DegreeMismatch(f"index tuple {key} has length != {degree}")
            if any(not 0 <= i < dim for i in key):
                raise DimensionMismatch(f"index tuple {key} outside frame of dim {dim}")
            sign = perm_sign(key)
            if sign == 0:
                raise ValueError(f"repeated index in {key}")
            skey = tuple(sorted(key))
            c[skey] = c.get(skey, Fraction(0)) + sign * scalar(val)
        self._c = {k: v for k, v in c.items() if v != 0}
        self._hash = None

    @classmethod
    def _raw(cls, dim: int, degree: int, c: dict) -> "KForm":
        # trusted constructor: keys increasing, values nonzero Fractions
        obj = cls.__new__(cls)
        obj.dim = dim
        obj.degree = degree
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def mono(cls, dim: int, indices: Iterable[int], coeff=1) -> "KForm":
        """The monomial ``coeff * e_{i1} ^ ... ^ e_{ik}`` (0-based positions)."""
        idx = tuple(indices)
        return cls(dim, len(idx), {idx: coeff})

    @classmethod
    def const(cls, dim: int, value) -> "KForm":
        return cls(dim, 0, {(): value})

    @property
    def coeffs(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __getitem__(self, idx) -> Fraction:
        if isinstance(idx, int):
            idx = (idx,)
        idx = tuple(idx)
        sign = perm_sign(idx)
        if sign == 0:
            return Fraction(0)
        return sign * self._c.get(tuple(sorted(idx)), Fraction(0))

    def _check(self, other: "KForm") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"frames of dim {self.dim} and {other.dim}")
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")

    def __add__(self, other: "KForm") -> "KForm":
        if not isinstance(other, KForm):
            return NotImplemented
        self._check(other)
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return KForm._raw(self.dim, self.degree, c)

    def __neg__(self) -> "KForm":
        return KForm._raw(self.dim, self.degree, {k: -v for k, v in self._c.items()})

    def __sub__(self, other: "KForm") -> "KForm":
        if not isinstance(other, KForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, s) -> "KForm":
        if isinstance(s, KForm):
            return NotImplemented
        s = scalar(s)
        if s == 0:
            return KForm._raw(self.dim, self.degree, {})
        return KForm._raw(self.dim, self.degree, {k: s * v for k, v in self._c.items()})

    __rmul__ = __mul__

    def __truediv__(self, s) -> "KForm":
        return self * (1 / scalar(s))

    def __xor__(self, other: "KForm") -> "KForm":
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KForm):
            return NotImplemented
        return self.dim == other.dim and self.degree == other.degree and self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim, self.degree, tuple(sorted(self._c.items()))))
        return self._hash

    def embed(self, dim: int, offset: int = 0) -> "KForm":
        """Same form on a larger frame, positions shifted by ``offset``."""
        if dim < self.dim + offset:
            raise DimensionMismatch("target frame too small")
        return KForm._raw(
            dim, self.degree, {tuple(i + offset for i in k): v for k, v in self._c.items()}
        )

    def __repr__(self) -> str:
        return f"KForm(dim={self.dim}, degree={self.degree}, {format_form(self)})"


def zeros(dim: int, degree: int) -> KForm:
    return KForm._raw(dim, degree, {})


def volume(dim: int) -> KForm:
    return KForm._raw(dim, dim, {tuple(range(dim)): Fraction(1)})


def wedge(a: KForm, b: KForm) -> KForm:
    """Exterior product; the zero form when the degrees overflow the frame."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot wedge forms on frames of dim {a.dim} and {b.dim}")
    k = a.degree + b.degree
    if k > a.dim:
        return zeros(a.dim, a.dim)
    c: dict[tuple[int, ...], Fraction] = {}
    for ka, va in a._c.items():
        sa = set(ka)
        for kb, vb in b._c.items():
            if sa.intersection(kb):
                continue
            idx = ka + kb
            key = tuple(sorted(idx))
            c[key] = c.get(key, 0) + perm_sign(idx) * va * vb
    return KForm._raw(a.dim, k, {key: v for key, v in c.items() if v})


def _complement_sign(dim: int, idx: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    rest = tuple(i for i in range(dim) if i not in idx)
    return rest, perm_sign(idx + rest)


def hodge_star(a: KForm) -> KForm:
    """Hodge star with ``a ^ *b = inner(a, b) vol``."""
    c = {}
    for key, v in a._c.items():
        rest, sign = _complement_sign(a.dim, key)
        c[rest] = sign * v
    return KForm._raw(a.dim, a.dim - a.degree, c)


def inner(a: KForm, b: KForm) -> Fraction:
    """Pointwise inner product, summed over increasing index tuples."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"frames of dim {a.dim} and {b.dim}")
    if a.degree != b.degree:
        raise DegreeMismatch(f"inner product of a {a.degree}-form with a {b.degree}-form")
    small, big = (a, b) if len(a._c) <= len(b._c) else (b, a)
    return sum((v * big._c.get(k, 0) for k, v in small._c.items()), Fraction(0))


def _det(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    m = [row[:] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                for cc in range(col, n):
                    m[r][cc] -= f * m[col][cc]
    return det


class Endomorphism:
    """Linear map of the frame; column ``j`` of ``matrix`` is the image of ``e_j``."""

    __slots__ = ("dim", "matrix")

    def __init__(self, matrix):
        rows = [[scalar(x) for x in row] for row in matrix]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("endomorphism matrix must be square")
        self.dim = n
        self.matrix = tuple(tuple(r) for r in rows)

    @classmethod
    def identity(cls, dim: int) -> "Endomorphism":
        return cls([[int(i == j) for j in range(dim)] for i in range(dim)])

    @classmethod
    def from_two_form(cls, F: KForm) -> "Endomorphism":
        """J with ``F(X, Y) = g(X, JY)``, i.e. ``J[i][j] = F_ij``."""
        if F.degree != 2:
            raise DegreeMismatch("need a 2-form")
        n = F.dim
        return cls([[F[i, j] if i != j else 0 for j in range(n)] for i in range(n)])

    def __call__(self, v):
        """Apply to a coefficient vector."""
        return [sum((self.matrix[i][j] * v[j] for j in range(self.dim)), Fraction(0)) for i in range(self.dim)]

    def column(self, j: int) -> list[Fraction]:
        return [self.matrix[i][j] for i in range(self.dim)]

    def __matmul__(self, other: "Endomorphism") -> "Endomorphism":
        n = self.dim
        return Endomorphism(
            [[sum((self.matrix[i][k] * other.matrix[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
        )

    def __add__(self, other: "Endomorphism") -> "Endomorphism":
        return Endomorphism([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.matrix, other.matrix)])

    def __neg__(self) -> "Endomorphism":
        return Endomorphism([[-a for a in r] for r in self.matrix])

    def __eq__(self, other) -> bool:
        return isinstance(other, Endomorphism) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def is_almost_complex(self) -> bool:
        return self @ self == -Endomorphism.identity(self.dim)

    def __repr__(self) -> str:
        return f"Endomorphism({[[str(x) for x in r] for r in self.matrix]})"


def pullback_endo(A: Endomorphism, a: KForm) -> KForm:
    """``(A^* a)(X_1, ..., X_k) = a(A X_1, ..., A X_k)``."""
    if A.dim != a.dim:
        raise DimensionMismatch(f"endomorphism of dim {A.dim} on a form of dim {a.dim}")
    k = a.degree
    if k == 0:
        return a
    M = A.matrix
    c = {}
    for cols in itertools.combinations(range(a.dim), k):
        total = Fraction(0)
        for rows, v in a._c.items():
            total += v * _det([[M[r][cc] for cc in cols] for r in rows])
        if total:
            c[cols] = total
    return KForm._raw(a.dim, k, c)


def to_array(a: KForm) -> np.ndarray:
    """Fully antisymmetric component array ``A[i1..ik] = a(e_i1, ..., e_ik)``."""
    arr = np.full((a.dim,) * a.degree, Fraction(0), dtype=object)
    for key, v in a._c.items():
        for perm in itertools.permutations(range(a.degree)):
            idx = tuple(key[p] for p in perm)
            arr[idx] = perm_sign(perm) * v
    return arr


def from_array(arr: np.ndarray, check: bool = True) -> KForm:
    """Read off the increasing-tuple components of an antisymmetric array.

    With ``check`` the array must be fully antisymmetric; otherwise a
    :class:`ValueError` is raised.
    """
    dim = arr.shape[0] if arr.ndim else 0
    k = arr.ndim
    c = {}
    for key in itertools.combinations(range(dim), k):
        v = Fraction(arr[key])
        if v:
            c[key] = v
    form = KForm._raw(dim, k, c)
    if check:
        full = to_array(form)
        if not all(Fraction(x) == y for x, y in zip(arr.flat, full.flat)):
            raise ValueError("array is not totally antisymmetric")
    return form


def contract_pair(S: KForm, U: KForm) -> np.ndarray:
    """``result[i, j, k, l] = sum_m S_ijm U_klm`` for two 3-forms."""
    if S.dim != U.dim:
        raise DimensionMismatch(f"frames of dim {S.dim} and {U.dim}")
    if S.degree != 3 or U.degree != 3:
        raise DegreeMismatch("contract_pair needs two 3-forms")
    return exact_einsum("ijm,klm->ijkl", to_array(S), to_array(U))


# ---------------------------------------------------------------- text syntax


def format_scalar(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def default_labels(dim: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(dim))


def format_form(a: KForm, labels=None) -> str:
    """Monomial syntax such as ``-2*e145 + e136``.

    ``labels`` names the frame positions (default ``"1".."n"``).  Labels are
    concatenated when all are single characters; otherwise factors are
    joined with ``^`` (``e1^e10``).
    """
    labels = tuple(labels) if labels is not None else default_labels(a.dim)
    if not a._c:
        return "0"
    compact = all(len(lab) == 1 for lab in labels)
    parts = []
    for key, v in sorted(a._c.items()):
        if a.degree == 0:
            body = format_scalar(abs(v))
        else:
            if compact:
                mono = "e" + "".join(labels[i] for i in key)
            else:
                mono = "^".join("e" + labels[i] for i in key)
            body = mono if abs(v) == 1 else f"{format_scalar(abs(v))}*{mono}"
        parts.append(("-" if v < 0 else "+", body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?(?P<mono>e\d+(?:\s*\^\s*e\d+)*)?\s*"
)


def _parse_mono(mono: str, labels: tuple[str, ...]) -> tuple[int, ...]:
    factors = [f.strip()[1:] for f in mono.split("^")]
    if len(factors) == 1 and all(len(lab) == 1 for lab in labels):
        factors = list(factors[0])
    pos = {lab: i for i, lab in enumerate(labels)}
    try:
        return tuple(pos[f] for f in factors)
    except KeyError as exc:
        raise KeyError(exc.args[0]) from None


def parse_form(text: str, dim: int, labels=None, line: int = 0, degree: int | None = None) -> KForm:
    """Parse the monomial syntax produced by :func:`format_form`.

    Degree is inferred from the first monomial (a bare number is a 0-form);
    pass ``degree`` to allow the text ``"0"``.
    """
    labels = tuple(labels) if labels is not None else default_labels(dim)
    text = text.strip()
    if text == "0":
        if degree is None:
            raise FrameSyntaxError("degree of the zero form is ambiguous", line, 1)
        return zeros(dim, degree)
    pos = 0
    terms: list[tuple[Fraction, tuple[int, ...] | None]] = []
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise FrameSyntaxError(f"unexpected {text[pos:pos + 8]!r}", line, pos + 1)
        if terms and not m.group("sign"):
            raise FrameSyntaxError("expected '+' or '-' between terms", line, pos + 1)
        coef = Fraction(m.group("coef")) if m.group("coef") else None
        mono = m.group("mono")
        if m.group("star") and not mono:
            raise FrameSyntaxError("dangling '*'", line, m.end() + 1)
        if coef is not None and mono and not m.group("star"):
            raise FrameSyntaxError("expected '*' between coefficient and monomial", line, m.start("mono") + 1)
        if coef is None and not mono:
            raise FrameSyntaxError("empty term", line, pos + 1)
        if coef is None:
            coef = Fraction(1)
        if m.group("sign") == "-":
            coef = -coef
        idx = None
        if mono:
            try:
                idx = _parse_mono(mono, labels)
            except KeyError as exc:
                raise FrameSyntaxError(f"unknown frame label e{exc.args[0]}", line, m.start("mono") + 1) from None
            if len(set(idx)) != len(idx):
                raise FrameSyntaxError(f"repeated index in {mono!r}", line, m.start("mono") + 1)
        terms.append((coef, idx))
        pos = m.end()
    degrees = {0 if idx is None else len(idx) for _, idx in terms}
    if len(degrees) != 1:
        raise FrameSyntaxError("mixed degrees in one form", line, 1)
    k = degrees.pop()
    if degree is not None and k != degree:
        raise FrameSyntaxError(f"expected a {degree}-form", line, 1)
    out = zeros(dim, k)
    for coef, idx in terms:
        out = out + KForm(dim, k, {idx or (): coef})
    return out


def linear_ratio(a: KForm, b: KForm) -> Fraction | None:
    """The scalar ``r`` with ``a = r * b``, or None if ``b`` is zero or no such ``r`` exists."""
    if (a.dim, a.degree) != (b.dim, b.degree):
        raise DegreeMismatch("forms of different shape")
    if not b:
        return None
    key, val = next(iter(b.items()))
    r = a[key] / val
    return r if a == b * r else None


def _integer_array(arr: np.ndarray) -> tuple[np.ndarray, int]:
    """``(ints, den)`` with ``arr == ints / den`` entrywise."""
    flat = [x if isinstance(x, (int, Fraction)) else Fraction(x) for x in arr.flat]
    den = math.lcm(1, *{x.denominator for x in flat})
    if den == 1:
        ints = np.array([int(x) for x in flat], dtype=object)
    else:
        ints = np.array([x.numerator * (den // x.denominator) for x in flat], dtype=object)
    return ints.reshape(arr.shape), den


def exact_einsum(spec: str, *operands: np.ndarray) -> np.ndarray:
    """``np.einsum`` over rational arrays, exactly and fast.

    Operands are scaled to integers by the lcm of their denominators; the
    contraction runs in machine integers when a crude bound rules out
    overflow, and in Python integers otherwise.
    """
    inputs, output = spec.split("->")
    scaled = [_integer_array(np.asarray(op, dtype=object)) for op in operands]
    sizes = {}
    for letters, op in zip(inputs.split(","), operands):
        sizes.update(zip(letters, np.shape(op)))
    terms = math.prod(v for k, v in sizes.items() if k not in output)
    bound = terms * math.prod(max((abs(int(x)) for x in ints.flat), default=0) for ints, _ in scaled)
    if bound < 2**62:
        res = np.einsum(spec, *(ints.astype(np.int64) for ints, _ in scaled))
    else:
        res = np.einsum(spec, *(ints for ints, _ in scaled))
    den = math.prod(d for _, d in scaled)
    zero = Fraction(0)
    flat = [zero if not v else Fraction(int(v), den) for v in np.ravel(res).tolist()]
    out = np.empty(len(flat), dtype=object)
    out[:] = flat
    return out.reshape(np.shape(res))
