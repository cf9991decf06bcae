"""Shared, cached scenario runs so each model is evaluated once per session."""

from __future__ import annotations

from functools import lru_cache

from skewtorsion import build, run_scenario
from skewtorsion.models import nil6_frame

NIL6_FRAME_TEXT = "dim 6\nd e1 = e3^e6\nd e4 = e2^e6\nd e5 = e2^e3\n"


@lru_cache(maxsize=None)
def results(name: str, **params) -> dict:
    """``{check id: CheckResult}`` for a full run of a built-in model."""
    return {r.id: r for r in run_scenario(build(name, params))}


@lru_cache(maxsize=None)
def nil6():
    return nil6_frame()
