"""Dense matrices over a semifield and the permutation-census determinant.

Entries are stored as payloads in row-major tuples; vectors are plain
tuples of payloads.  In characteristic 1 the signature coefficient of an
odd permutation is the quasi-opposite of 1, which is 1 itself, so the
determinant is the permanent and ``det = det_plus + det_minus``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .errors import (
    DimensionError,
    DomainMismatchError,
    NotInvertibleError,
    SizeLimitError,
)
from .semifield import MaxPlus, MinPlus, Semifield, ZERO

ENUMERATION_BOUND = 9
FAST_DET_BOUND = 64


class Matrix:
    """Rectangular matrix over one semifield instance (immutable)."""

    __slots__ = ("sf", "data", "rows", "cols")

    def __init__(self, sf: Semifield, data: Sequence[Sequence], cols: int | None = None):
        rows = tuple(tuple(r) for r in data)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise DimensionError("ragged rows")
        else:
            ncols = cols or 0
        self.sf = sf
        self.data = rows
        self.rows = len(rows)
        self.cols = ncols

    @classmethod
    def from_values(cls, sf: Semifield, nested) -> "Matrix":
        """Build from user values (ints, ``'p/q'`` strings, ``'-inf'``, Values)."""
        return cls(sf, [[sf.coerce(v) for v in row] for row in nested])

    @classmethod
    def identity(cls, sf: Semifield, n: int) -> "Matrix":
        return cls(sf, [[sf.one if i == j else sf.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, sf: Semifield, rows: int, cols: int) -> "Matrix":
        return cls(sf, [[sf.zero] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, sf: Semifield, columns: Sequence[Sequence], dim: int | None = None) -> "Matrix":
        columns = [tuple(c) for c in columns]
        if dim is None:
            if not columns:
                raise DimensionError("dimension required for an empty family")
            dim = len(columns[0])
        if any(len(c) != dim for c in columns):
            raise DimensionError("family vectors have different lengths")
        return cls(sf, [[c[i] for c in columns] for i in range(dim)], cols=len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(self.sf, [[self.data[i][j] for j in cols] for i in rows], cols=len(cols))

    def transpose(self) -> "Matrix":
        return transpose(self)

    def is_zero(self) -> bool:
        z = self.sf.is_zero
        return all(z(a) for r in self.data for a in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.sf == other.sf and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.sf.name, self.shape, self.data))

    def __repr__(self):
        fmt = self.sf.format
        body = ", ".join("[" + ", ".join(str(fmt(a)) for a in r) + "]" for r in self.data)
        return f"Matrix({self.sf.name}, [{body}])"


def _same(a: Semifield, b: Semifield) -> None:
    if a is not b and a != b:
        raise DomainMismatchError(f"operands from {a.name} and {b.name}")


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    _same(a.sf, b.sf)
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    sf = a.sf
    add, mul = sf.add, sf.mul
    bcols = b.columns()
    out = []
    for r in a.data:
        row = []
        for c in bcols:
            acc = sf.zero
            for x, y in zip(r, c):
                acc = add(acc, mul(x, y))
            row.append(acc)
        out.append(row)
    return Matrix(sf, out, cols=b.cols)


def mat_vec(a: Matrix, x: Sequence) -> tuple:
    if len(x) != a.cols:
        raise DimensionError(f"vector of length {len(x)} for a {a.shape} matrix")
    sf = a.sf
    add, mul, zero = sf.add, sf.mul, sf.zero
    out = []
    for r in a.data:
        acc = zero
        for aij, xj in zip(r, x):
            acc = add(acc, mul(aij, xj))
        out.append(acc)
    return tuple(out)


def transpose(a: Matrix) -> Matrix:
    return Matrix(a.sf, a.columns(), cols=a.rows)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    _same(a.sf, b.sf)
    if a.shape != b.shape:
        raise DimensionError(f"cannot add {a.shape} and {b.shape}")
    add = a.sf.add
    return Matrix(a.sf, [[add(x, y) for x, y in zip(r, s)] for r, s in zip(a.data, b.data)],
                  cols=a.cols)


# --- permutations and the determinant census ------------------------------

@dataclass(frozen=True, order=True)
class Permutation:
    """``image[i]`` is the (0-based) column assigned to row ``i``."""

    image: tuple
    parity: str = field(compare=False)

    @classmethod
    def of(cls, image: Sequence[int]) -> "Permutation":
        image = tuple(image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a permutation: {image}")
        return cls(image, "even" if _is_even(image) else "odd")

    def to_json(self) -> dict:
        return {"image": [j + 1 for j in self.image], "parity": self.parity}


def _is_even(image: Sequence[int]) -> bool:
    seen = [False] * len(image)
    transpositions = 0
    for start in range(len(image)):
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = image[j]
            length += 1
        if length:
            transpositions += length - 1
    return transpositions % 2 == 0


@lru_cache(maxsize=None)
def _perms(n: int) -> tuple:
    return tuple((p, _is_even(p)) for p in permutations(range(n)))


@dataclass(frozen=True)
class DetReport:
    det: object
    det_plus: object
    det_minus: object
    optimal_even: tuple
    optimal_odd: tuple
    sf: Semifield = field(repr=False, compare=False, default=None)

    @property
    def optimal(self) -> tuple:
        """Permutations whose weight equals ``det`` (empty when det is zero)."""
        out = ()
        if self.optimal_even and self.det_plus == self.det:
            out += self.optimal_even
        if self.optimal_odd and self.det_minus == self.det:
            out += self.optimal_odd
        return tuple(sorted(out))

    def to_json(self) -> dict:
        fmt = self.sf.format
        return {
            "det": fmt(self.det),
            "det_plus": fmt(self.det_plus),
            "det_minus": fmt(self.det_minus),
            "optimal_even": [p.to_json() for p in self.optimal_even],
            "optimal_odd": [p.to_json() for p in self.optimal_odd],
        }


def _require_square(a: Matrix) -> None:
    if not a.is_square:
        raise DimensionError(f"square matrix required, got {a.shape}")


def det_report(a: Matrix, bound: int = ENUMERATION_BOUND) -> DetReport:
    """Enumerate all n! permutations and tally even/odd optima."""
    _require_square(a)
    n = a.rows
    if n > bound:
        raise SizeLimitError(f"n = {n} exceeds the enumeration bound {bound}; use det_value_fast")
    sf = a.sf
    mul, add, is_zero, one = sf.mul, sf.add, sf.is_zero, sf.one
    data = a.data
    best = {True: sf.zero, False: sf.zero}
    tied: dict[bool, list] = {True: [], False: []}
    for p, even in _perms(n):
        w = one
        for i in range(n):
            w = mul(w, data[i][p[i]])
            if is_zero(w):
                break
        if is_zero(w):
            continue
        b = best[even]
        s = add(b, w)
        if s == w and w != b:
            best[even] = w
            tied[even] = [p]
        elif w == b:
            tied[even].append(p)
    plus, minus = best[True], best[False]
    return DetReport(
        det=add(plus, minus),
        det_plus=plus,
        det_minus=minus,
        optimal_even=tuple(Permutation(p, "even") for p in tied[True]),
        optimal_odd=tuple(Permutation(p, "odd") for p in tied[False]),
        sf=sf,
    )


def det(a: Matrix) -> object:
    """Determinant value; enumeration within the bound, assignment beyond it."""
    if a.rows <= ENUMERATION_BOUND:
        return det_report(a).det
    return det_value_fast(a)


# --- matching and assignment ----------------------------------------------

def support_matching(a: Matrix) -> list[int] | None:
    """Perfect matching row -> column on the nonzero entries (augmenting paths)."""
    _require_square(a)
    n = a.rows
    is_zero = a.sf.is_zero
    adj = [[j for j in range(n) if not is_zero(a.data[i][j])] for i in range(n)]
    match_col = [-1] * n

    def augment(i, seen):
        for j in adj[i]:
            if not seen[j]:
                seen[j] = True
                if match_col[j] < 0 or augment(match_col[j], seen):
                    match_col[j] = i
                    return True
        return False

    for i in range(n):
        if not augment(i, [False] * n):
            return None
    image = [0] * n
    for j, i in enumerate(match_col):
        image[i] = j
    return image


def min_cost_assignment(cost: Sequence[Sequence]) -> tuple | None:
    """Exact Hungarian method; ``None`` entries are forbidden edges.

    Returns ``(total, image)`` or ``None`` if every assignment uses a
    forbidden edge.  Works on ints and Fractions without rounding.
    """
    n = len(cost)
    if n == 0:
        return 0, []
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    p = [0] * (n + 1)  # p[j]: row matched to column j (1-based, 0 = free)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [None] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            row = cost[i0 - 1]
            delta, j1 = None, None
            for j in range(1, n + 1):
                if used[j]:
                    continue
                c = row[j - 1]
                if c is not None:
                    cur = c - u[i0] - v[j]
                    if minv[j] is None or cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                if minv[j] is not None and (delta is None or minv[j] < delta):
                    delta, j1 = minv[j], j
            if j1 is None:
                return None
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                elif minv[j] is not None:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    image = [0] * n
    for j in range(1, n + 1):
        image[p[j] - 1] = j - 1
    total = sum(cost[i][image[i]] for i in range(n))
    return total, image


def det_value_fast(a: Matrix) -> object:
    """Determinant value by optimal assignment (max-plus and min-plus only).

    Other semifields fall back to enumeration.  No tie census is produced.
    """
    _require_square(a)
    sf = a.sf
    n = a.rows
    if not isinstance(sf, (MaxPlus, MinPlus)):
        return det_report(a).det
    if n > FAST_DET_BOUND:
        raise SizeLimitError(f"n = {n} exceeds the assignment bound {FAST_DET_BOUND}")
    if n == 0:
        return sf.one
    if support_matching(a) is None:
        return sf.zero
    # max-plus maximises the sum; min-plus (payloads are the numbers) minimises it
    sign = -1 if isinstance(sf, MaxPlus) else 1
    cost = [[None if x is ZERO else sign * x for x in r] for r in a.data]
    result = min_cost_assignment(cost)
    if result is None:
        return sf.zero
    return sign * result[0]


# --- monomial matrices ----------------------------------------------------

def is_monomial(a: Matrix) -> bool:
    _require_square(a)
    z = a.sf.is_zero
    nz = [[not z(x) for x in r] for r in a.data]
    return (all(sum(r) == 1 for r in nz)
            and all(sum(r[j] for r in nz) == 1 for j in range(a.cols)))


def monomial_inverse(a: Matrix) -> Matrix:
    if not is_monomial(a):
        raise NotInvertibleError("only monomial matrices are invertible")
    sf = a.sf
    n = a.rows
    out = [[sf.zero] * n for _ in range(n)]
    for i, r in enumerate(a.data):
        for j, x in enumerate(r):
            if not sf.is_zero(x):
                out[j][i] = sf.inv(x)
    return Matrix(sf, out)


def dominates_monomial(a: Matrix) -> Matrix | None:
    """A monomial S with S <= a entrywise, or None when det(a) is zero."""
    image = support_matching(a)
    if image is None:
        return None
    sf = a.sf
    n = a.rows
    return Matrix(sf, [[a.data[i][j] if j == image[i] else sf.zero for j in range(n)]
                       for i in range(n)])


def entrywise_leq(s: Matrix, a: Matrix) -> bool:
    _same(s.sf, a.sf)
    leq = s.sf.leq
    return s.shape == a.shape and all(
        leq(x, y) for r, t in zip(s.data, a.data) for x, y in zip(r, t))
