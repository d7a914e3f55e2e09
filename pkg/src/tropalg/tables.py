"""Finite semirings given by explicit operation tables, and their characteristic."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import ConstructionError, NotApplicableError

MAX_TABLE_SIZE = 64


@dataclass(frozen=True)
class FiniteSemiringTable:
    """Elements are ``0..size-1``; ``add[a][b]`` and ``mul[a][b]`` give the laws.

    Construction enumerates every pair and triple to check the semiring
    axioms, so tables are limited to ``MAX_TABLE_SIZE`` elements.
    """

    add: tuple
    mul: tuple
    zero: int = 0
    one: int = 1

    def __post_init__(self):
        object.__setattr__(self, "add", tuple(tuple(r) for r in self.add))
        object.__setattr__(self, "mul", tuple(tuple(r) for r in self.mul))
        self._validate()

    @property
    def size(self) -> int:
        return len(self.add)

    def _validate(self) -> None:
        n = self.size
        if not 1 <= n <= MAX_TABLE_SIZE:
            raise ConstructionError(f"table size must be in 1..{MAX_TABLE_SIZE}, got {n}")
        for tab in (self.add, self.mul):
            if len(tab) != n or any(len(r) != n for r in tab):
                raise ConstructionError("tables must be square and of equal size")
            if any(not 0 <= v < n for r in tab for v in r):
                raise ConstructionError("table entry out of range")
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise ConstructionError("neutral index out of range")
        A, M, z, e = self.add, self.mul, self.zero, self.one
        for a in range(n):
            if A[a][z] != a:
                raise ConstructionError(f"{z} is not neutral for addition at {a}")
            if M[a][e] != a or M[e][a] != a:
                raise ConstructionError(f"{e} is not neutral for multiplication at {a}")
            for b in range(n):
                if A[a][b] != A[b][a]:
                    raise ConstructionError(f"addition not commutative at ({a}, {b})")
        for a, b, c in product(range(n), repeat=3):
            if A[A[a][b]][c] != A[a][A[b][c]]:
                raise ConstructionError(f"addition not associative at ({a}, {b}, {c})")
            if M[M[a][b]][c] != M[a][M[b][c]]:
                raise ConstructionError(f"multiplication not associative at ({a}, {b}, {c})")
            if M[a][A[b][c]] != A[M[a][b]][M[a][c]]:
                raise ConstructionError(f"left distributivity fails at ({a}, {b}, {c})")
            if M[A[a][b]][c] != A[M[a][c]][M[b][c]]:
                raise ConstructionError(f"right distributivity fails at ({a}, {b}, {c})")

    def multiple(self, k: int, x: int) -> int:
        """``k . x`` = x + ... + x (k times); ``0 . x`` is the zero."""
        acc = self.zero
        for _ in range(k):
            acc = self.add[acc][x]
        return acc

    @classmethod
    def f1(cls) -> "FiniteSemiringTable":
        return cls(add=[[0, 1], [1, 1]], mul=[[0, 0], [0, 1]])

    @classmethod
    def ring_mod(cls, n: int) -> "FiniteSemiringTable":
        """The ring Z/n encoded as a table (for n = 1 the zero ring)."""
        return cls(
            add=[[(a + b) % n for b in range(n)] for a in range(n)],
            mul=[[(a * b) % n for b in range(n)] for a in range(n)],
            zero=0, one=1 % n,
        )

    @classmethod
    def product(cls, s: "FiniteSemiringTable", t: "FiniteSemiringTable") -> "FiniteSemiringTable":
        """Direct product; the pair (a, b) is encoded as ``a * t.size + b``."""
        m = t.size
        pairs = [(a, b) for a in range(s.size) for b in range(m)]

        def enc(a, b):
            return a * m + b

        return cls(
            add=[[enc(s.add[a][c], t.add[b][d]) for c, d in pairs] for a, b in pairs],
            mul=[[enc(s.mul[a][c], t.mul[b][d]) for c, d in pairs] for a, b in pairs],
            zero=enc(s.zero, t.zero), one=enc(s.one, t.one),
        )

    @classmethod
    def from_json(cls, obj: dict) -> "FiniteSemiringTable":
        return cls(add=obj["add"], mul=obj["mul"], zero=obj.get("zero", 0), one=obj.get("one", 1))

    def to_json(self) -> dict:
        return {"size": self.size, "add": [list(r) for r in self.add],
                "mul": [list(r) for r in self.mul], "zero": self.zero, "one": self.one}


def characteristic(t: FiniteSemiringTable) -> int:
    """Smallest n > 0 with ``n.1 + 1 = 1``, or 0 if there is none.

    ``k.1`` is eventually periodic; 1 recurs exactly when it lies on the
    cycle, in which case the first recurrence gives n.
    """
    one = t.one
    seen = {}
    k, cur = 1, one  # cur == k.1
    while cur not in seen:
        seen[cur] = k
        nxt = t.add[cur][one]  # (k+1).1 = k.1 + 1
        if nxt == one:
            return k
        cur, k = nxt, k + 1
    return 0


def is_pure_characteristic(t: FiniteSemiringTable) -> bool:
    """True iff ``(k+1)x = x`` forces ``p | k`` for every nonzero x (p = char)."""
    p = characteristic(t)
    if p == 0:
        raise NotApplicableError("pure characteristic is only defined for p > 0")
    bound = t.size * p
    for x in range(t.size):
        if x == t.zero:
            continue
        acc = x  # (k+1).x, starting at k = 0
        for k in range(1, bound + 1):
            acc = t.add[acc][x]
            if acc == x and k % p:
                return False
    return True


def h_set(t: FiniteSemiringTable, up_to: int) -> list[int]:
    """``{k <= up_to : k.1 + 1 = 1}`` by direct enumeration."""
    return [k for k in range(up_to + 1) if t.add[t.multiple(k, t.one)][t.one] == t.one]

