"""Tropical rank, dimension and kernels of linear forms.

Everything here assumes a totally ordered idempotent semifield.  A vector
x lies in the kernel of the form ``l = (a_1, ..., a_n)`` when ``l(x)`` is
zero or its maximum is attained by two distinct terms; this tie locus is
simultaneously the tropical kernel and the *kernel of ``l``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import DimensionError, PreconditionError, SizeLimitError, UnsupportedSemifieldError
from .matrix import Matrix, det_report, mat_vec
from .oracles import DEFAULT_BUDGET, SearchBudget, candidate_vectors, count_candidates
from .semifield import Semifield
from .singularity import is_d_singular

RANK_BUDGET = 7


@dataclass(frozen=True)
class LinearForm:
    sf: Semifield
    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def __call__(self, x: Sequence):
        sf = self.sf
        return sf.sum(sf.mul(a, v) for a, v in zip(self.coefficients, x))

    def is_zero(self) -> bool:
        return all(self.sf.is_zero(a) for a in self.coefficients)


@dataclass(frozen=True)
class FamilyReport:
    vectors: tuple
    is_regular: bool
    tropical_dimension: int
    max_regular_subfamily: tuple = field(default=())


def _ordered(sf: Semifield) -> None:
    if not sf.totally_ordered:
        raise UnsupportedSemifieldError(f"{sf.name} is not totally ordered")


# --- kernels of linear forms ----------------------------------------------

def kernel_membership(l: LinearForm, x: Sequence) -> bool:
    sf = l.sf
    _ordered(sf)
    if len(x) != l.n:
        raise DimensionError(f"form of length {l.n} applied to a vector of length {len(x)}")
    terms = [sf.mul(a, v) for a, v in zip(l.coefficients, x)]
    top = sf.sum(terms)
    if sf.is_zero(top):
        return True
    return sum(1 for t in terms if t == top) >= 2


def kernel_generators(l: LinearForm) -> list[tuple]:
    """Generators of ``Ker l`` as a submodule.

    One vector ``a_i^-1 e_i + a_j^-1 e_j`` per pair of nonzero coefficients,
    and the unit vector ``e_k`` for each zero coefficient.
    """
    sf = l.sf
    _ordered(sf)
    n = l.n
    nz = [i for i, a in enumerate(l.coefficients) if not sf.is_zero(a)]
    units = [tuple(sf.one if k == i else sf.zero for k in range(n))
             for i in range(n) if sf.is_zero(l.coefficients[i])]
    if len(nz) < 2:
        # l(x) can only vanish; a single nonzero coefficient kills its axis
        return units
    gens = []
    for i, j in combinations(nz, 2):
        v = [sf.zero] * n
        v[i] = sf.inv(l.coefficients[i])
        v[j] = sf.inv(l.coefficients[j])
        gens.append(tuple(v))
    return gens + units


@dataclass(frozen=True)
class SpanCertificate:
    member: bool
    coefficients: tuple


def span_membership(g: Matrix, y: Sequence) -> SpanCertificate:
    """Is y a combination of the columns of g?  Decided by residuation.

    The largest lambda with ``g lambda <= y`` has
    ``lambda_j = min_i y_i / g_ij`` over the nonzero entries of column j;
    y is in the span iff that lambda reaches it.
    """
    sf = g.sf
    _ordered(sf)
    if len(y) != g.rows:
        raise DimensionError(f"vector of length {len(y)} for {g.rows} rows")
    lam = []
    for j in range(g.cols):
        best = None
        for i in range(g.rows):
            gij = g.data[i][j]
            if sf.is_zero(gij):
                continue
            q = sf.mul(y[i], sf.inv(gij))
            best = q if best is None else sf.meet(best, q)
        # an all-zero column is useless: give it coefficient zero
        lam.append(sf.zero if best is None else best)
    lam = tuple(lam)
    return SpanCertificate(mat_vec(g, lam) == tuple(y), lam)


# --- regular families and rank --------------------------------------------

def _check_budget(a: Matrix, limit: int) -> None:
    if a.rows > limit or a.cols > limit:
        raise SizeLimitError(f"{a.shape} exceeds the minor enumeration budget {limit}")


def regular_minor(a: Matrix, k: int, cols: Sequence[int] | None = None):
    """First ``(rows, cols)`` (lexicographic) of a d-regular k x k minor, or None."""
    col_sets = [tuple(cols)] if cols is not None else combinations(range(a.cols), k)
    for cs in col_sets:
        for rs in combinations(range(a.rows), k):
            if not is_d_singular(a.submatrix(rs, cs)):
                return rs, cs
    return None


def tropical_rank(a: Matrix, limit: int = RANK_BUDGET) -> int:
    """Largest order of a d-regular square submatrix.

    Regular minors are hereditary (the optimal permutation of a regular
    matrix restricts to the unique optimum of a minor), so the search can
    climb one order at a time and stop at the first empty level.
    """
    _ordered(a.sf)
    _check_budget(a, limit)
    r = 0
    for k in range(1, min(a.rows, a.cols) + 1):
        if regular_minor(a, k) is None:
            break
        r = k
    return r


def is_regular_family(vectors: Sequence[Sequence], sf: Semifield, dim: int | None = None) -> bool:
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return True
    a = Matrix.from_columns(sf, vectors, dim)
    if a.cols > a.rows:
        return False
    return regular_minor(a, a.cols, cols=range(a.cols)) is not None


def tropical_dimension(family: Sequence[Sequence], sf: Semifield, dim: int | None = None,
                       limit: int = RANK_BUDGET) -> FamilyReport:
    family = tuple(tuple(v) for v in family)
    if not family:
        return FamilyReport((), True, 0, ())
    a = Matrix.from_columns(sf, family, dim)
    r = tropical_rank(a, limit)
    best = ()
    if r:
        for cs in combinations(range(a.cols), r):
            if regular_minor(a, r, cols=cs) is not None:
                best = cs
                break
    return FamilyReport(family, r == len(family), r, best)


def complete_to_tropical_basis(family: Sequence[Sequence], n: int, sf: Semifield) -> list[tuple]:
    """Extend a regular family by unit vectors to a regular family of size n."""
    family = [tuple(v) for v in family]
    p = len(family)
    if p == 0:
        return [tuple(sf.one if k == i else sf.zero for k in range(n)) for i in range(n)]
    a = Matrix.from_columns(sf, family, n)
    if p > n:
        raise PreconditionError(f"{p} vectors cannot be regular in dimension {n}")
    found = regular_minor(a, p, cols=range(p))
    if found is None:
        raise PreconditionError("family is not regular")
    rows = set(found[0])
    extra = [tuple(sf.one if k == i else sf.zero for k in range(n)) for i in range(n) if i not in rows]
    return family + extra


# --- kernels of matrices --------------------------------------------------

def tker_membership(a: Matrix, x: Sequence) -> bool:
    if len(x) != a.cols:
        raise DimensionError(f"vector of length {len(x)} for {a.cols} columns")
    return all(kernel_membership(LinearForm(a.sf, r), x) for r in a.data)


def grid_kernel_members(a: Matrix, budget: SearchBudget = DEFAULT_BUDGET) -> list[tuple] | None:
    """Nonzero grid vectors in Tker a, or None if the grid exceeds the budget."""
    if a.cols > budget.max_dim:
        return None
    pool = budget.pool_for(a)
    if count_candidates(a.cols, len(pool)) * max(a.rows, 1) > budget.max_work:
        return None
    return [x for x in candidate_vectors(a.sf, a.cols, pool) if tker_membership(a, x)]


def regular_subfamilies(members: Sequence[tuple], sf: Semifield, dim: int, up_to: int):
    """Index sets of regular subfamilies, level by level, up to size ``up_to``.

    Subfamilies of regular families are regular, so level k+1 only extends
    sets whose every k-subset survived.
    """
    levels = [[()]]
    up_to = min(up_to, dim)  # no family larger than the dimension is regular
    if up_to < 1:
        return levels
    current = [(i,) for i, v in enumerate(members) if any(not sf.is_zero(c) for c in v)]
    levels.append(current)
    while current and len(levels) <= up_to:
        alive = set(current)
        nxt = []
        for s in current:
            for j in range(s[-1] + 1, len(members)):
                t = s + (j,)
                if all(t[:k] + t[k + 1:] in alive for k in range(len(t) - 1)):
                    if is_regular_family([members[i] for i in t], sf, dim):
                        nxt.append(t)
        levels.append(nxt)
        current = nxt
    while len(levels) > 1 and not levels[-1]:
        levels.pop()
    return levels


@dataclass(frozen=True)
class TkerDimension:
    value: int
    evidence: tuple | None  # a regular family of size ``value`` inside Tker
    confirmed: bool


def tker_dimension(a: Matrix, budget: SearchBudget = DEFAULT_BUDGET) -> TkerDimension:
    """``cols - tropical_rank``, with a grid search for a regular family of that size.

    ``confirmed`` needs such a family and no larger one on the grid; when a
    larger one turns up, ``evidence`` holds it and the value is not confirmed.
    """
    value = a.cols - tropical_rank(a)
    members = grid_kernel_members(a, budget)
    if members is None:
        return TkerDimension(value, None, False)
    levels = regular_subfamilies(members, a.sf, a.cols, value + 1)
    top = len(levels) - 1
    evidence = tuple(members[i] for i in levels[top][0]) if top else ()
    return TkerDimension(value, evidence if top >= value else None, top == value)


@dataclass(frozen=True)
class RankTheoremCheck:
    confirmed: bool
    status: str  # "confirmed", "refuted" or "exhausted"
    columns: int
    rank: int
    kernel_dimension: int | None
    family: tuple | None = None  # largest regular family found inside Tker


def rank_theorem_check(a: Matrix, budget: SearchBudget = DEFAULT_BUDGET) -> RankTheoremCheck:
    """Compare ``cols`` with ``rank + dim Tker``, the latter searched on the grid.

    ``refuted`` means a regular family inside Tker with more than
    ``cols - rank`` members was found; the family is returned so it can be
    checked independently.  Such families exist (``[[-inf, 0, 0], [0, 0, 0]]`` has rank 2
    and the regular pair ``(0, 0, 0), (-inf, 0, 0)`` in its kernel), so the
    identity does not hold for every matrix.  ``exhausted`` means the grid
    did not reach ``cols - rank``.
    """
    n = a.cols
    r = tropical_rank(a)
    members = grid_kernel_members(a, budget)
    if members is None:
        return RankTheoremCheck(False, "exhausted", n, r, None)
    levels = regular_subfamilies(members, a.sf, n, n - r + 1)
    dim = len(levels) - 1
    family = tuple(members[i] for i in levels[dim][0]) if dim else ()
    if dim > n - r:
        return RankTheoremCheck(False, "refuted", n, r, dim, family)
    if dim < n - r:
        return RankTheoremCheck(False, "exhausted", n, r, dim, family)
    return RankTheoremCheck(True, "confirmed", n, r, dim, family)


# --- orthogonality and separation -----------------------------------------

def orthogonal_form_membership(l: LinearForm, family: Sequence[Sequence]) -> bool:
    """l is singular on every member, hence on their span."""
    return all(kernel_membership(l, f) for f in family)


def determinant_form(columns: Sequence[tuple], sf: Semifield, n: int) -> LinearForm:
    """``y -> det(columns | y)`` expanded along y: coefficient i is the minor without row i."""
    m = Matrix.from_columns(sf, columns, n)
    coeffs = []
    for i in range(n):
        rows = [k for k in range(n) if k != i]
        coeffs.append(det_report(m.submatrix(rows, range(m.cols))).det)
    return LinearForm(sf, coeffs)


def weak_span_separation(family: Sequence[Sequence], x: Sequence, sf: Semifield) -> LinearForm | None:
    """Look for a determinant form singular on the family but not at x.

    The forms tried are ``y -> det(g_1, ..., g_{n-1}, y)`` with the g's taken
    from the family (all of it, or every (n-1)-subset when it is larger)
    padded with unit vectors.  A returned form certifies that x is outside
    the weakly generated submodule; None only means no such form was found.
    """
    _ordered(sf)
    family = [tuple(v) for v in family]
    n = len(x)
    if any(len(f) != n for f in family):
        raise DimensionError("family and x have different lengths")
    if n < 2:
        return None
    k = n - 1
    heads = [tuple(family)] if len(family) <= k else list(combinations(family, k))
    for head in heads:
        pad = k - len(head)
        for units in combinations(range(n), pad):
            cols = list(head) + [tuple(sf.one if t == u else sf.zero for t in range(n)) for u in units]
            l = determinant_form(cols, sf, n)
            if l.is_zero():
                continue
            if orthogonal_form_membership(l, family) and not kernel_membership(l, x):
                return l
    return None
