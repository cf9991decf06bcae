"""Command-line entry point ``verify`` and the frame-file format.

Frame files are line based::

    dim 6
    # comments and blank lines are ignored
    d e1 = e3^e6
    d e4 = e2^e6
    d e5 = 1/2*e2^e3 - e1^e4

Every frame index not mentioned is closed (``d e_k = 0``).
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .errors import FrameSyntaxError, InvalidFrame
from .exterior import KForm, format_scalar, zeros
from .frames import LieFrame
from .models import PARAMS, build
from .report import render_json, render_text
from .scenarios import COMMENTARY, UsageError, run_scenario

_DIM = re.compile(r"\s*dim\s+(\d+)\s*$")
_HEAD = re.compile(r"\s*d\s+e(\d+)\s*=")
_RATIONAL = r"\d+(?:/\d+)?"
_TERM = re.compile(
    rf"\s*(?P<sign>[+-])?\s*(?:(?P<coef>{_RATIONAL})\s*\*\s*)?e(?P<i>\d+)\s*\^\s*e(?P<j>\d+)"
)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _index(raw: str, n: int, line: int, col: int) -> int:
    k = int(raw)
    if not 1 <= k <= n:
        raise FrameSyntaxError(f"frame index e{k} outside 1..{n}", line, col)
    return k - 1


def _parse_rhs(text: str, start: int, n: int, line: int) -> KForm:
    out = zeros(n, 2)
    pos = start
    first = True
    while True:
        m = _TERM.match(text, pos)
        if not m:
            rest = text[pos:].strip()
            if not rest and not first:
                return out
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            what = f"unexpected {rest[:8]!r}" if rest else "expected a term"
            raise FrameSyntaxError(what, line, col)
        if not first and not m.group("sign"):
            col = m.start() + 1 + (len(m.group()) - len(m.group().lstrip()))
            raise FrameSyntaxError("expected '+' or '-' between terms", line, col)
        try:
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        except ZeroDivisionError:
            raise FrameSyntaxError("zero denominator", line, m.start("coef") + 1) from None
        if m.group("sign") == "-":
            coef = -coef
        i = _index(m.group("i"), n, line, m.start("i"))
        j = _index(m.group("j"), n, line, m.start("j"))
        if i >= j:
            raise FrameSyntaxError(f"need i < j in e{i + 1}^e{j + 1}", line, m.start("i"))
        out = out + KForm(n, 2, {(i, j): coef})
        pos = m.end()
        first = False


def parse_frame(text: str, name: str = "frame") -> LieFrame:
    """Parse a frame file into a validated :class:`LieFrame`.

    Raises
    ------
    FrameSyntaxError
        With the 1-based line and column of the offending token.
    InvalidFrame
        When ``d^2 != 0``; ``triple`` holds the offending 0-based indices.
    """
    n: Optional[int] = None
    diffs: list[KForm] = []
    seen: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        if n is None:
            m = _DIM.match(line)
            if not m:
                raise FrameSyntaxError("expected 'dim <n>' first", lineno, len(line) - len(line.lstrip()) + 1)
            n = int(m.group(1))
            if n < 1:
                raise FrameSyntaxError("dimension must be positive", lineno, m.start(1) + 1)
            diffs = [zeros(n, 2)] * n
            continue
        m = _HEAD.match(line)
        if not m:
            raise FrameSyntaxError("expected 'd e<k> = ...'", lineno, len(line) - len(line.lstrip()) + 1)
        k = _index(m.group(1), n, lineno, m.start(1))
        if k in seen:
            raise FrameSyntaxError(f"d e{k + 1} already given on line {seen[k]}", lineno, m.start(1))
        seen[k] = lineno
        diffs[k] = _parse_rhs(line, m.end(), n, lineno)
    if n is None:
        raise FrameSyntaxError("empty frame file; expected 'dim <n>'", 1, 1)
    return LieFrame(n, tuple(diffs), name=name)


def format_frame(M: LieFrame) -> str:
    """Serialize ``M`` in the frame-file grammar (inverse of :func:`parse_frame`)."""
    lines = [f"dim {M.dim}"]
    for k, de in enumerate(M.differentials):
        if not de:
            continue
        terms = []
        for (i, j), v in sorted(de.items()):
            mag = "" if abs(v) == 1 else f"{format_scalar(abs(v))}*"
            sign = "-" if v < 0 else "+"
            terms.append((sign, f"{mag}e{i + 1}^e{j + 1}"))
        body = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        body += "".join(f" {s} {t}" for s, t in terms[1:])
        lines.append(f"d e{k + 1} = {body}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ argparse


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="verify", description="Exact checks of torsion geometry on built-in models or a Lie frame.")
    p.add_argument("--model", choices=sorted(PARAMS), help="built-in model")
    p.add_argument("--param", action="append", default=[], metavar="K=V", help="rational model parameter")
    p.add_argument("--check", action="append", default=[], metavar="IDS",
                   help="comma-separated check ids, families, groups, or 'all'")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--frame-file", metavar="PATH", help="Lie frame in the frame-file grammar")
    return p


def _params(items: Sequence[str]) -> dict[str, Fraction]:
    out = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects k=v, got {item!r}")
        try:
            out[key.strip()] = Fraction(val.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--param {key}: {val!r} is not a rational") from None
    return out


def _checks(items: Sequence[str]) -> Optional[list[str]]:
    tokens = [t.strip() for item in items for t in item.split(",") if t.strip()]
    if not tokens or "all" in tokens:
        return None
    return tokens


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run ``verify``; returns 0 if every check passes, 1 on any failure, 2 on usage errors."""
    try:
        args = _parser().parse_args(argv)
        if (args.model is None) == (args.frame_file is None):
            raise UsageError("give exactly one of --model or --frame-file")
        checks = _checks(args.check)
        if args.frame_file is not None:
            if args.param:
                raise UsageError("--param applies only to --model")
            try:
                with open(args.frame_file, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(f"cannot read {args.frame_file}: {exc.strerror}") from None
            target = parse_frame(text, name=args.frame_file)
            header = {"frame": args.frame_file, "dim": target.dim}
        else:
            params = _params(args.param)
            try:
                target = build(args.model, params)
            except (KeyError, ValueError) as exc:
                raise UsageError(str(exc.args[0] if exc.args else exc)) from None
            header = {"model": args.model, **{k: format_scalar(v) for k, v in sorted(target.params.items())}}
        results = run_scenario(target, checks)
    except (UsageError, FrameSyntaxError) as exc:
        print(f"verify: error: {exc}", file=sys.stderr)
        return 2
    except InvalidFrame as exc:
        labels = ",".join(f"e{i + 1}" for i in exc.triple or ())
        print(f"verify: error: invalid frame: {exc} [triple {labels}]", file=sys.stderr)
        return 2
    render = render_json if args.format == "json" else render_text
    sys.stdout.write(render(results, header, list(COMMENTARY)))
    return 1 if any(r.failed for r in results) else 0


def main_exit() -> None:
    """Console-script wrapper: exit with the status of :func:`main`."""
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_exit()
