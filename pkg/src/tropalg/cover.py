"""Supertropical cover T = K u U of a totally ordered idempotent semifield.

Ghost elements record ties: the sum of two equal nonzero tangibles is the
ghost of their common value.  A matrix is singular exactly when some
nonzero tangible vector is sent to a ghost-or-zero vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .errors import DomainMismatchError, UnsupportedSemifieldError
from .semifield import Semifield


@dataclass(frozen=True, slots=True)
class CoverElement:
    field: Semifield
    magnitude: Any
    ghost: bool = False

    def __post_init__(self):
        # a ghost zero would break the isomorphism U u {0} ~ K
        if self.ghost and self.field.is_zero(self.magnitude):
            object.__setattr__(self, "ghost", False)

    @classmethod
    def tangible(cls, field, a) -> "CoverElement":
        return cls(field, a, False)

    @classmethod
    def hat(cls, field, a) -> "CoverElement":
        return cls(field, a, True)

    @property
    def is_zero(self) -> bool:
        return self.field.is_zero(self.magnitude)

    def __add__(self, other):
        return cover_add(self, other)

    def __mul__(self, other):
        return cover_mul(self, other)

    def __repr__(self):
        v = self.field.format(self.magnitude)
        return f"ghost({v})" if self.ghost else f"tangible({v})"

    def to_json(self):
        v = self.field.format(self.magnitude)
        return {"ghost": v} if self.ghost else v


def _check(a: CoverElement, b: CoverElement) -> Semifield:
    sf = a.field
    if sf is not b.field and sf != b.field:
        raise DomainMismatchError(f"operands from {sf.name} and {b.field.name}")
    if not sf.totally_ordered:
        raise UnsupportedSemifieldError(f"{sf.name} is not totally ordered")
    return sf


def cover_add(a: CoverElement, b: CoverElement) -> CoverElement:
    sf = _check(a, b)
    ka, kb = sf.key(a.magnitude), sf.key(b.magnitude)
    if not a.ghost and not b.ghost:
        if ka != kb or a.is_zero:
            return CoverElement(sf, a.magnitude if ka > kb else b.magnitude)
        return CoverElement(sf, a.magnitude, True)
    if a.ghost and b.ghost:
        return CoverElement(sf, a.magnitude if ka >= kb else b.magnitude, True)
    t, g = (a, b) if b.ghost else (b, a)
    if sf.key(t.magnitude) > sf.key(g.magnitude):
        return t
    return g


def cover_mul(a: CoverElement, b: CoverElement) -> CoverElement:
    sf = _check(a, b)
    return CoverElement(sf, sf.mul(a.magnitude, b.magnitude), a.ghost or b.ghost)


def is_ghost_or_zero(v: Sequence[CoverElement]) -> bool:
    return all(c.ghost or c.is_zero for c in v)


def lift(sf: Semifield, x: Sequence) -> list[CoverElement]:
    """Tangible lift of a payload vector."""
    return [CoverElement(sf, a) for a in x]


def cover_sum(sf: Semifield, items) -> CoverElement:
    acc = CoverElement(sf, sf.zero)
    for c in items:
        acc = cover_add(acc, c)
    return acc


def cover_mat_vec(a, x: Sequence) -> list[CoverElement]:
    """``lift(a) (x) lift(x)`` computed in the cover; ``a`` is a ``Matrix``."""
    sf = a.sf
    return [
        cover_sum(sf, (CoverElement(sf, sf.mul(r[j], x[j])) for j in range(a.cols)))
        for r in a.data
    ]
