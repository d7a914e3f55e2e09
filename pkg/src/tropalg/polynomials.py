"""Univariate polynomials over an idempotent semifield.

Polynomials are formal: ``(X + 1)(X^2 + 1)`` and ``(X + 1)(X^2 + X + 1)``
are equal here while their right factors differ, so the polynomial ring
does not cancel.  Roots are points where some orthogonal split
``P = P1 (+) P2`` of the monomials gives ``P1(x) = P2(x)``; over a totally
ordered semifield that is exactly a tie between two maximal monomials.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .cover import CoverElement, cover_sum
from .errors import DomainMismatchError, UndefinedRootsError, UnsupportedSemifieldError
from .semifield import MAXPLUS, ZERO, MaxPlus, MinPlus, Semifield


class UnivariatePoly:
    __slots__ = ("sf", "coeffs")

    def __init__(self, sf: Semifield, coeffs: Mapping[int, object] | None = None):
        self.sf = sf
        cleaned = {}
        for d, a in (coeffs or {}).items():
            d = int(d)
            if d < 0:
                raise ValueError(f"negative degree {d}")
            if not sf.is_zero(a):
                cleaned[d] = a
        self.coeffs = dict(sorted(cleaned.items()))

    @classmethod
    def from_values(cls, sf: Semifield, coeffs: Mapping) -> "UnivariatePoly":
        return cls(sf, {int(d): sf.coerce(a) for d, a in coeffs.items()})

    @classmethod
    def monomial(cls, sf: Semifield, degree: int, coeff=None) -> "UnivariatePoly":
        return cls(sf, {degree: sf.one if coeff is None else coeff})

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return max(self.coeffs, default=-1)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, d: int):
        return self.coeffs.get(d, self.sf.zero)

    def __eq__(self, other):
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self.sf == other.sf and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.sf.name, tuple(self.coeffs.items())))

    def __add__(self, other):
        return poly_add(self, other)

    def __mul__(self, other):
        return poly_mul(self, other)

    def __pow__(self, k: int):
        return poly_pow(self, k)

    def __call__(self, x):
        return poly_eval(self, x)

    def __repr__(self):
        if self.is_zero:
            return f"UnivariatePoly({self.sf.name}, 0)"
        fmt = self.sf.format
        terms = [f"{fmt(a)}*X^{d}" for d, a in sorted(self.coeffs.items(), reverse=True)]
        return f"UnivariatePoly({self.sf.name}, {' + '.join(terms)})"


def _same(p: UnivariatePoly, q: UnivariatePoly) -> Semifield:
    if p.sf is not q.sf and p.sf != q.sf:
        raise DomainMismatchError(f"polynomials over {p.sf.name} and {q.sf.name}")
    return p.sf


def poly_add(p: UnivariatePoly, q: UnivariatePoly) -> UnivariatePoly:
    sf = _same(p, q)
    out = dict(p.coeffs)
    for d, a in q.coeffs.items():
        out[d] = sf.add(out[d], a) if d in out else a
    return UnivariatePoly(sf, out)


def poly_mul(p: UnivariatePoly, q: UnivariatePoly) -> UnivariatePoly:
    sf = _same(p, q)
    out: dict = {}
    for d, a in p.coeffs.items():
        for e, b in q.coeffs.items():
            t = sf.mul(a, b)
            out[d + e] = sf.add(out[d + e], t) if d + e in out else t
    return UnivariatePoly(sf, out)


def poly_pow(p: UnivariatePoly, k: int) -> UnivariatePoly:
    if k < 0:
        raise ValueError("negative exponent")
    out = UnivariatePoly(p.sf, {0: p.sf.one})
    for _ in range(k):
        out = poly_mul(out, p)
    return out


def _terms(p: UnivariatePoly, x) -> list:
    sf = p.sf
    return [sf.mul(a, sf.power(x, d)) for d, a in p.coeffs.items()]


def poly_eval(p: UnivariatePoly, x):
    x = p.sf.coerce(x)
    return p.sf.sum(_terms(p, x))


def is_root(p: UnivariatePoly, r) -> bool:
    """r is a root iff the maximum of the monomials at r is attained twice.

    At the zero point only the constant term survives, so zero is a root
    exactly when the constant term vanishes.
    """
    sf = p.sf
    r = sf.coerce(r)
    if p.is_zero:
        return True
    if sf.is_zero(r):
        return 0 not in p.coeffs
    terms = _terms(p, r)
    top = sf.sum(terms)
    return sum(1 for t in terms if t == top) >= 2


def eval_cover(p: UnivariatePoly, x) -> CoverElement:
    """Value of p at the tangible lift of x in the supertropical cover."""
    sf = p.sf
    x = sf.coerce(x)
    return cover_sum(sf, (CoverElement(sf, t) for t in _terms(p, x)))


def _normalize(q: Fraction):
    return q.numerator if q.denominator == 1 else q


def _maxplus_roots(coeffs: Mapping[int, object]) -> list[tuple]:
    pts = sorted(coeffs.items())
    hull: list[tuple] = []
    for d, a in pts:
        # pop while the last hull point lies on or below the chord to (d, a)
        while len(hull) >= 2:
            (d1, a1), (d2, a2) = hull[-2], hull[-1]
            if (a2 - a1) * (d - d1) <= (a - a1) * (d2 - d1):
                hull.pop()
            else:
                break
        hull.append((d, a))
    out = []
    for (d1, a1), (d2, a2) in zip(hull, hull[1:]):
        out.append((_normalize(Fraction(a1 - a2) / (d2 - d1)), d2 - d1))
    return out


def roots(p: UnivariatePoly) -> list[tuple]:
    """``[(root, multiplicity), ...]`` from the Newton polygon, largest root first.

    Each edge of the upper hull of ``{(i, a_i)}`` gives the root where its
    two end monomials tie, with multiplicity its horizontal length; a zero
    constant term adds the zero point with multiplicity the lowest degree.
    """
    sf = p.sf
    if p.is_zero:
        raise UndefinedRootsError("the zero polynomial vanishes everywhere")
    if isinstance(sf, MaxPlus):
        found = _maxplus_roots(p.coeffs)
    elif isinstance(sf, MinPlus):
        found = [(-r, m) for r, m in _maxplus_roots({d: -a for d, a in p.coeffs.items()})]
    else:
        raise UnsupportedSemifieldError(f"roots() needs max-plus or min-plus, got {sf.name}")
    found.sort(key=lambda rm: sf.key(rm[0]), reverse=True)
    low = min(p.coeffs)
    if low > 0:
        found.append((ZERO, low))
    return found


def total_multiplicity(rs: list[tuple]) -> int:
    return sum(m for _, m in rs)


def X(sf: Semifield = MAXPLUS) -> UnivariatePoly:
    return UnivariatePoly.monomial(sf, 1)


def constant(sf: Semifield, a) -> UnivariatePoly:
    return UnivariatePoly(sf, {0: sf.coerce(a)})
