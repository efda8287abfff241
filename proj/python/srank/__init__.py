"""Stable rank analysis of finitely presented and finite commutative monoids.

Inputs are the text of a presentation (``<a, b | 3a = a + b, 4a = 2b>``) or of a
Cayley table (``{...}``). Every analysis returns a plain ``dict`` decoded from
the JSON the core produces.
"""

from __future__ import annotations

import json
import time
from pathlib import Path
from typing import Any, Iterable

from . import _core
from ._core import AxiomViolation, ParseError, SuiteContradiction

__version__ = _core.__version__

__all__ = [
    "AxiomViolation",
    "ParseError",
    "SuiteContradiction",
    "complete",
    "eq",
    "finite",
    "fixtures",
    "grade",
    "load",
    "nf",
    "props",
    "quotient",
    "report",
    "sr",
    "suite",
    "verify",
]


def load(path: str | Path) -> str:
    """Read a ``.cmon`` or ``.ctab`` file."""
    return Path(path).read_text()


def nf(text: str, expr: str) -> dict[str, Any]:
    return json.loads(_core.nf(text, expr))


def eq(text: str, lhs: str, rhs: str) -> dict[str, Any]:
    return json.loads(_core.eq(text, lhs, rhs))


def complete(text: str, budget: int = _core.DEFAULT_COMPLETION_BUDGET) -> dict[str, Any]:
    return json.loads(_core.complete(text, budget))


def finite(text: str, cap: int = 4096) -> dict[str, Any]:
    return json.loads(_core.finite(text, cap))


def grade(text: str) -> dict[str, Any]:
    return json.loads(_core.grade(text))


def sr(
    text: str,
    expr: str,
    *,
    radius: int = 0,
    witness_radius: int = 0,
    max_n: int = 24,
    target_size: int = 6,
) -> dict[str, Any]:
    """Brackets for sr and sr+; exact values when ``text`` is a Cayley table."""
    return json.loads(_core.sr(text, expr, radius, witness_radius, max_n, target_size))


def props(text: str, *, radius: int = 0, witness_radius: int = 0) -> dict[str, Any]:
    return json.loads(_core.props(text, radius, witness_radius))


def quotient(
    text: str,
    kind: str,
    *,
    ideal_of: str = "",
    powers: Iterable[int] = (),
    targets: Iterable[str] = (),
) -> dict[str, Any]:
    return json.loads(_core.quotient(text, kind, ideal_of, list(powers), list(targets)))


def verify(text: str, certificate: dict[str, Any]) -> dict[str, Any]:
    return json.loads(_core.verify(text, json.dumps(certificate)))


def suite(
    fixtures: Iterable[str] = (), *, samples: int = 100, seed: int | None = None
) -> dict[str, Any]:
    if seed is None:
        return json.loads(_core.suite(list(fixtures), samples))
    return json.loads(_core.suite(list(fixtures), samples, seed))


def fixtures() -> list[dict[str, Any]]:
    return _core.fixtures()


def report(command: str, input_text: str, params: dict[str, Any], fn, *args, **kwargs) -> dict[str, Any]:
    """Run ``fn`` and wrap its result in the same envelope the CLI emits."""
    start = time.perf_counter()
    results = fn(*args, **kwargs)
    elapsed = (time.perf_counter() - start) * 1000.0
    return json.loads(
        _core.report(command, input_text, json.dumps(params), json.dumps(results), elapsed)
    )
