"""Exact verification of Lie algebra homology, Abels' criterion and the
5x5 group over Z[1/p].

Every function returns plain Python data decoded from the native core's
JSON. Commands that mirror the CLI return a :class:`Result` carrying the
exit status (0 passed, 1 a check failed) and the report; malformed input
raises :class:`ValueError`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping, Optional, Sequence, Union

from . import _core
from ._core import DomainError, InternalError

__all__ = [
    "Result",
    "DomainError",
    "InternalError",
    "verify",
    "algebra_check",
    "group_selftest",
    "ball",
    "u9_algebra",
    "abels4_algebra",
    "abelianization_weights",
    "h2_weight_dim",
    "gamma_mul",
    "gamma_inv",
    "canonical_mod_mz",
    "order_in_m_mod_mz",
    "discriminating_set",
    "vp",
]

Algebra = Union[str, Mapping[str, Any]]
Element = Union[str, Mapping[str, Any]]


@dataclass(frozen=True)
class Result:
    status: int
    report: dict

    @property
    def passed(self) -> bool:
        return self.status == 0


def _text(value: Union[str, Mapping[str, Any]]) -> str:
    return value if isinstance(value, str) else json.dumps(value)


def _result(pair) -> Result:
    status, text = pair
    report = json.loads(text)
    if status == 2:
        raise ValueError(report.get("error", "malformed input"))
    return Result(status, report)


def verify(p: int = 2, trials: int = 1000, seed: int = 0) -> Result:
    return _result(_core.verify(p, trials, seed))


def algebra_check(algebra: Algebra) -> Result:
    """Abels verdict for an algebra given as a dict or JSON text."""
    return _result(_core.algebra_check(_text(algebra)))


def group_selftest(p: int, trials: int = 1000, seed: int = 0) -> Result:
    return _result(_core.group_selftest(p, trials, seed))


def ball(preset: Union[str, Sequence[str]], radius: int, compare: Union[str, Sequence[str], None] = None,
         p: int = 2, max_radius: int = 6) -> Result:
    """Cayley ball of a preset marking: "z", ("z-mod", n), "gamma" or "gamma-mod-mz"."""

    def tokens(x) -> list:
        return [x] if isinstance(x, str) else [str(t) for t in x]

    return _result(_core.ball(tokens(preset), radius, None if compare is None else tokens(compare), p, max_radius))


def u9_algebra() -> dict:
    return json.loads(_core.u9_algebra())


def abels4_algebra() -> dict:
    return json.loads(_core.abels4_algebra())


def abelianization_weights(algebra: Algebra) -> list:
    return [tuple(w) for w in _core.abelianization_weights(_text(algebra))]


def h2_weight_dim(algebra: Algebra, weight: Sequence[int]) -> int:
    return _core.h2_weight_dim(_text(algebra), list(weight))


def gamma_mul(p: int, a: Element, b: Element) -> dict:
    return json.loads(_core.gamma_mul(p, _text(a), _text(b)))


def gamma_inv(p: int, a: Element) -> dict:
    return json.loads(_core.gamma_inv(p, _text(a)))


def canonical_mod_mz(p: int, a: Element) -> dict:
    return json.loads(_core.canonical_mod_mz(p, _text(a)))


def order_in_m_mod_mz(p: int, a: Element) -> int:
    return int(_core.order_in_m_mod_mz(p, _text(a)))


def discriminating_set(p: int) -> list:
    return json.loads(_core.discriminating_set(p))


def vp(x: Union[str, int], p: int) -> Optional[int]:
    """p-adic valuation of a rational "a/b"; None stands for infinity."""
    return _core.vp(str(x), p)
