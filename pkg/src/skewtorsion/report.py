"""Check results, Bianchi-identity calibration and report rendering."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import DegreeMismatch, DimensionMismatch
from .exterior import KForm, format_form, format_scalar, linear_ratio

PASS, FAIL, SKIPPED, CONFLICT = "pass", "fail", "skipped", "c0_conflict"
FAILING = (FAIL, CONFLICT)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one exact comparison.

    ``status`` is ``pass``, ``fail``, ``skipped`` or ``c0_conflict`` (a
    Pontrjagin identity that would hold only with a different normalization
    constant; counted as a failure).
    """

    id: str
    status: str
    lhs: str
    rhs: str
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status in FAILING

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)


def render(value, labels=None) -> str:
    """Serialize a form, scalar, flag or text for a report field."""
    if isinstance(value, KForm):
        return format_form(value, labels)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (Fraction, int)):
        return format_scalar(Fraction(value))
    if value is None:
        return "undefined"
    return str(value)


def compare(check_id: str, lhs, rhs, labels=None, detail: str = "") -> CheckResult:
    """Exact comparison; no tolerance of any kind."""
    ok = lhs == rhs
    return CheckResult(check_id, PASS if ok else FAIL, render(lhs, labels), render(rhs, labels), detail)


def pontrjagin_check(
    check_id: str,
    raw: KForm,
    c0: Fraction,
    ratio: Fraction,
    dT: KForm,
    labels=None,
    detail: str = "",
) -> CheckResult:
    """Compare ``c0 * raw`` with ``ratio * dT``.

    When the two sides are proportional but only for another ``c0``, the
    status is :data:`CONFLICT` and ``detail`` names the required constant.
    """
    lhs, rhs = raw * c0, dT * ratio
    if lhs == rhs:
        return CheckResult(check_id, PASS, render(lhs, labels), render(rhs, labels), detail)
    r = linear_ratio(raw, dT) if dT else None
    if r:
        needed = ratio / r
        note = f"holds only with c0 = {format_scalar(needed)} (calibrated c0 = {format_scalar(c0)})"
        return CheckResult(
            check_id, CONFLICT, render(lhs, labels), render(rhs, labels), "; ".join(x for x in (detail, note) if x)
        )
    return CheckResult(check_id, FAIL, render(lhs, labels), render(rhs, labels), detail)


# ------------------------------------------------------------------ Bianchi


@dataclass(frozen=True)
class BianchiReport:
    """alpha' solving ``dT = 2 alpha' P_A`` and ``dT = 2 alpha' (P_A - P_tilde)``."""

    alpha_modb: Optional[Fraction]
    alpha_modb1: Optional[Fraction]
    sign: str
    proportional: bool
    proportional_modb: bool
    proportional_modb1: bool


def _alpha(dT: KForm, base: KForm) -> tuple[bool, Optional[Fraction]]:
    if not base:
        return (not dT), None
    r = linear_ratio(dT, base * 2)
    return r is not None, r


def bianchi_calibrate(dT: KForm, P_A: KForm, P_tilde: KForm) -> BianchiReport:
    """Decide proportionality by exact linear algebra and extract alpha'.

    The zero form is proportional to everything; alpha' is undefined when the
    curvature side vanishes.  ``sign`` is ``positive``/``negative`` only if every
    defined alpha' is nonzero with that sign.
    """
    for f in (P_A, P_tilde):
        if f.dim != dT.dim:
            raise DimensionMismatch("Bianchi inputs on different frames")
        if f.degree != 4 or dT.degree != 4:
            raise DegreeMismatch("Bianchi inputs must be 4-forms")
    p1, a1 = _alpha(dT, P_A)
    p2, a2 = _alpha(dT, P_A - P_tilde)
    defined = [a for a in (a1, a2) if a is not None]
    if defined and all(a > 0 for a in defined):
        sign = "positive"
    elif defined and all(a < 0 for a in defined):
        sign = "negative"
    else:
        sign = "undefined"
    return BianchiReport(a1, a2, sign, p1 and p2, p1, p2)


# ------------------------------------------------------------------ rendering


def summary_counts(results: Iterable[CheckResult]) -> dict[str, int]:
    counts = {PASS: 0, FAIL: 0, CONFLICT: 0, SKIPPED: 0}
    for r in results:
        counts[r.status] += 1
    return counts


def render_json(results: list[CheckResult], header: dict, commentary: list[str]) -> str:
    lines = [r.to_json() for r in results]
    tail = {"summary": {**header, **summary_counts(results)}, "commentary": commentary}
    lines.append(json.dumps(tail, ensure_ascii=False))
    return "\n".join(lines) + "\n"


def render_text(results: list[CheckResult], header: dict, commentary: list[str]) -> str:
    width = max((len(r.id) for r in results), default=10)
    out = [" ".join(f"{k}={v}" for k, v in header.items())]
    for r in results:
        line = f"{r.status.upper():<11} {r.id:<{width}}  {r.lhs}"
        if r.status != PASS or r.lhs != r.rhs:
            line += f"  vs  {r.rhs}"
        if r.detail:
            line += f"  ({r.detail})"
        out.append(line)
    c = summary_counts(results)
    out.append(
        f"{len(results)} checks: {c[PASS]} passed, {c[FAIL]} failed, "
        f"{c[CONFLICT]} c0 conflicts, {c[SKIPPED]} skipped"
    )
    out.extend(f"note: {n}" for n in commentary)
    return "\n".join(out) + "\n"
