"""Commutative idempotent semifields.

A semifield object owns the arithmetic; elements are plain Python payloads
(``int``/``Fraction`` magnitudes, group elements, bits) so that matrix code
can run tight loops without wrapper allocation.  ``Value`` wraps a payload
together with its semifield for the element-level API, where mixing
instances must be rejected.

The additive neutral of every numeric instance is the ``ZERO`` singleton,
never a sentinel magnitude.  It sorts below every magnitude, which lets
max-plus addition use the builtin comparison directly.
"""
from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from .errors import (
    ConstructionError,
    DomainMismatchError,
    NoInverseError,
)

__all__ = [
    "ZERO", "Semifield", "MaxPlus", "MinPlus", "F1", "OrderedGroupSemifield",
    "MAXPLUS", "MINPLUS", "BOOLEAN", "SEMIFIELDS", "get_semifield",
    "ordered_group_semifield", "Value",
    "sf_add", "sf_mul", "sf_inv", "quasi_opposite", "natural_leq",
    "frobenius_check", "is_orthogonal", "support",
]


class _Zero:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __reduce__(self):
        return (_Zero, ())

    # bottom of every key order
    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self


ZERO = _Zero()


def _neg(a):
    return ZERO if a is ZERO else -a


_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def _parse_rational(x) -> int | Fraction:
    if isinstance(x, bool):
        raise TypeError(f"booleans are not magnitudes: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        m = _RATIONAL.match(x)
        if not m:
            raise ValueError(f"not an exact rational: {x!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise ValueError(f"zero denominator: {x!r}")
        return _parse_rational(Fraction(num, den))
    raise TypeError(f"expected int, Fraction or 'p/q' string, got {type(x).__name__}")


def _format_rational(a) -> str:
    if isinstance(a, Fraction):
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"
    return str(a)


class Semifield:
    """Base class.  Subclasses supply ``add``, ``mul``, ``inv`` and ``key``.

    ``key`` maps payloads into a total order compatible with the natural
    order ``a <= b iff a + b == b``; every instance shipped here is totally
    ordered.
    """

    name = "abstract"
    totally_ordered = True
    zero: Any = ZERO
    one: Any = 0

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def key(self, a):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a is ZERO

    def coerce(self, x):
        """Turn a user-facing value (int, string, ``Value``) into a payload."""
        raise NotImplementedError

    def format(self, a):
        """JSON-ready representation of a payload."""
        raise NotImplementedError

    def sum(self, items: Iterable):
        acc = self.zero
        for a in items:
            acc = self.add(acc, a)
        return acc

    def prod(self, items: Iterable):
        acc = self.one
        for a in items:
            acc = self.mul(acc, a)
        return acc

    def power(self, a, k: int):
        if k < 0:
            return self.power(self.inv(a), -k)
        acc = self.one
        for _ in range(k):
            acc = self.mul(acc, a)
        return acc

    def leq(self, a, b) -> bool:
        return self.add(a, b) == b

    def meet(self, a, b):
        """Greatest lower bound in the natural order."""
        return a if self.key(a) <= self.key(b) else b

    def __call__(self, x) -> "Value":
        return Value(self, self.coerce(x))

    def __repr__(self):
        return f"<semifield {self.name}>"


class OrderedGroupSemifield(Semifield):
    """Totally ordered abelian group with an adjoined bottom ``ZERO``.

    Addition is the maximum for ``key``; multiplication is the group law.
    """

    def __init__(self, name: str, op: Callable, identity, inverse: Callable,
                 key: Callable | None = None, coerce: Callable | None = None,
                 format: Callable | None = None):
        self.name = name
        self._op = op
        self.one = identity
        self._inverse = inverse
        self._key = key if key is not None else (lambda a: a)
        self._coerce = coerce
        self._format = format

    def add(self, a, b):
        if a is ZERO:
            return b
        if b is ZERO:
            return a
        return a if self._key(a) >= self._key(b) else b

    def mul(self, a, b):
        if a is ZERO or b is ZERO:
            return ZERO
        return self._op(a, b)

    def inv(self, a):
        if a is ZERO:
            raise NoInverseError(f"{self.name}: the additive neutral has no inverse")
        return self._inverse(a)

    def key(self, a):
        return ZERO if a is ZERO else self._key(a)

    def coerce(self, x):
        if isinstance(x, Value):
            _same(self, x.field)
            return x.raw
        if x is ZERO or x in ("-inf", "zero"):
            return ZERO
        return self._coerce(x) if self._coerce else x

    def format(self, a):
        if a is ZERO:
            return "-inf"
        return self._format(a) if self._format else a

    def validate(self, samples: Sequence) -> None:
        """Check the group and order axioms on ``samples``; raise on failure."""
        samples = list(samples)
        e, op, key = self.one, self._op, self._key
        for a in samples:
            if op(a, e) != a or op(e, a) != a:
                raise ConstructionError(f"{self.name}: identity fails on {a!r}")
            if op(a, self._inverse(a)) != e:
                raise ConstructionError(f"{self.name}: inverse fails on {a!r}")
            for b in samples:
                if op(a, b) != op(b, a):
                    raise ConstructionError(f"{self.name}: law not commutative at {a!r}, {b!r}")
                try:
                    ka, kb = key(a), key(b)
                    ab_le, ba_le = ka <= kb, kb <= ka
                except TypeError as exc:
                    raise ConstructionError(f"{self.name}: keys not comparable") from exc
                if not (ab_le or ba_le):
                    raise ConstructionError(f"{self.name}: order not total at {a!r}, {b!r}")
                if ab_le and ba_le and a != b:
                    raise ConstructionError(f"{self.name}: order not antisymmetric at {a!r}, {b!r}")
                for c in samples:
                    if op(op(a, b), c) != op(a, op(b, c)):
                        raise ConstructionError(f"{self.name}: law not associative")
                    if ab_le and not key(op(a, c)) <= key(op(b, c)):
                        raise ConstructionError(
                            f"{self.name}: order incompatible with the law at {a!r}, {b!r}, {c!r}")


def ordered_group_semifield(name: str, op: Callable, identity, inverse: Callable,
                            samples: Sequence, key: Callable | None = None,
                            coerce: Callable | None = None,
                            format: Callable | None = None) -> OrderedGroupSemifield:
    """Build the max-semifield of a totally ordered abelian group.

    The order (given by ``key``, default the elements' own ordering) must be
    total and translation invariant; both are checked on ``samples``.
    """
    sf = OrderedGroupSemifield(name, op, identity, inverse, key=key,
                               coerce=coerce, format=format)
    sf.validate(samples)
    return sf


class MaxPlus(OrderedGroupSemifield):
    """(Q, +) with max as addition; exact ``int``/``Fraction`` payloads."""

    def __init__(self):
        super().__init__("maxplus", operator.add, 0, operator.neg,
                         coerce=_parse_rational, format=_format_rational)

    def add(self, a, b):
        return a if a >= b else b

    def mul(self, a, b):
        if a is ZERO or b is ZERO:
            return ZERO
        return a + b

    def key(self, a):
        return a

    def meet(self, a, b):
        return a if a <= b else b

    def __eq__(self, other):
        return type(other) is type(self)

    def __hash__(self):
        return hash(self.name)


class MinPlus(Semifield):
    """Order dual of max-plus: payload ``a`` stands for max-plus ``-a``."""

    name = "minplus"
    zero = ZERO
    one = 0

    def __init__(self, base: MaxPlus | None = None):
        self.base = base or MaxPlus()

    def add(self, a, b):
        return _neg(self.base.add(_neg(a), _neg(b)))

    def mul(self, a, b):
        return self.base.mul(a, b)

    def inv(self, a):
        if a is ZERO:
            raise NoInverseError("minplus: the additive neutral has no inverse")
        return -a

    def key(self, a):
        return _neg(a)

    def coerce(self, x):
        if isinstance(x, Value):
            _same(self, x.field)
            return x.raw
        if x is ZERO or x in ("+inf", "inf", "zero"):
            return ZERO
        return _parse_rational(x)

    def format(self, a):
        return "+inf" if a is ZERO else _format_rational(a)

    def __eq__(self, other):
        return type(other) is type(self)

    def __hash__(self):
        return hash(self.name)


class F1(Semifield):
    """The two-element semifield {0, 1} with 1 + 1 = 1."""

    name = "f1"
    zero = 0
    one = 1

    def add(self, a, b):
        return a | b

    def mul(self, a, b):
        return a & b

    def inv(self, a):
        if not a:
            raise NoInverseError("f1: 0 has no inverse")
        return 1

    def key(self, a):
        return a

    def is_zero(self, a) -> bool:
        return a == 0

    def coerce(self, x):
        if isinstance(x, Value):
            _same(self, x.field)
            return x.raw
        if isinstance(x, str):
            x = x.strip()
            if x not in ("0", "1"):
                raise ValueError(f"f1 element must be 0 or 1, got {x!r}")
            return int(x)
        if x in (0, 1) and not isinstance(x, float):
            return int(x)
        raise ValueError(f"f1 element must be 0 or 1, got {x!r}")

    def format(self, a):
        return int(a)

    def __eq__(self, other):
        return type(other) is type(self)

    def __hash__(self):
        return hash(self.name)


MAXPLUS = MaxPlus()
MINPLUS = MinPlus(MAXPLUS)
BOOLEAN = F1()
SEMIFIELDS = {"maxplus": MAXPLUS, "minplus": MINPLUS, "f1": BOOLEAN}


def get_semifield(name: str) -> Semifield:
    try:
        return SEMIFIELDS[name]
    except KeyError:
        raise ValueError(f"unknown semifield {name!r}; expected one of {sorted(SEMIFIELDS)}") from None


def _same(a: Semifield, b: Semifield) -> None:
    if a is not b and a != b:
        raise DomainMismatchError(f"operands from {a.name} and {b.name}")


@dataclass(frozen=True, slots=True)
class Value:
    """A semifield element: payload plus the instance it belongs to."""

    field: Semifield
    raw: Any

    def __add__(self, other):
        return sf_add(self, other)

    def __mul__(self, other):
        return sf_mul(self, other)

    def __pow__(self, k: int):
        return Value(self.field, self.field.power(self.raw, k))

    def __le__(self, other):
        return natural_leq(self, other)

    def inv(self):
        return sf_inv(self)

    @property
    def is_zero(self) -> bool:
        return self.field.is_zero(self.raw)

    def __repr__(self):
        return f"{self.field.name}({self.field.format(self.raw)})"


def sf_add(x: Value, y: Value) -> Value:
    _same(x.field, y.field)
    return Value(x.field, x.field.add(x.raw, y.raw))


def sf_mul(x: Value, y: Value) -> Value:
    _same(x.field, y.field)
    return Value(x.field, x.field.mul(x.raw, y.raw))


def sf_inv(x: Value) -> Value:
    return Value(x.field, x.field.inv(x.raw))


def quasi_opposite(x: Value) -> Value:
    # idempotency: x + x + x = x, so x is its own (unique) quasi-opposite
    return x


def natural_leq(x: Value, y: Value) -> bool:
    _same(x.field, y.field)
    return x.field.leq(x.raw, y.raw)


def frobenius_check(x: Value, y: Value, n: int) -> bool:
    """Compare ``(x + y)^n`` with ``x^n + y^n`` exactly."""
    if n < 1:
        raise ValueError("n must be at least 1")
    lhs = (x + y) ** n
    rhs = x ** n + y ** n
    return lhs == rhs


def support(v: Sequence, sf: Semifield | None = None) -> frozenset:
    """Indices of the nonzero coordinates of ``v`` (Values, or payloads with ``sf``)."""
    if sf is None:
        return frozenset(i for i, a in enumerate(v) if not a.is_zero)
    return frozenset(i for i, a in enumerate(v) if not sf.is_zero(a))


def is_orthogonal(x: Sequence, y: Sequence, sf: Semifield | None = None) -> bool:
    """Free-module orthogonality: the supports are disjoint."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")
    return not (support(x, sf) & support(y, sf))
