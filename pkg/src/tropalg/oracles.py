"""Brute-force oracles that follow the raw definitions.

Nothing here may import the determinant-based predicates it is used to
validate (``singularity``, ``rank``).  The candidate grid and search budget
are shared with those modules, which import them from here.

Candidate vectors are normalised so their first nonzero coordinate is 1:
every condition searched for is invariant under scaling, so this loses
nothing and shrinks the search by a factor of the pool size.  With the
pool ``D u D.D u {1}`` (D = pairwise quotients of nonzero matrix entries)
the search is complete up to three coordinates: the tie conditions cut out
difference-constraint polyhedra whose minimal faces contain points with
coordinates that are products of at most ``n - 1`` elements of D.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .errors import SearchExhaustedError
from .matrix import Matrix
from .polynomials import is_root
from .semifield import Semifield


@dataclass(frozen=True)
class SearchBudget:
    """Bounds for the grid searches.

    ``pool`` overrides the matrix-derived coordinate pool; ``max_work``
    caps candidates times decompositions before any search starts.
    """

    max_dim: int = 4
    pool: tuple | None = None
    max_work: int = 5_000_000

    def pool_for(self, a: Matrix) -> tuple:
        return self.pool if self.pool is not None else value_pool(a)


DEFAULT_BUDGET = SearchBudget()


def value_pool(a: Matrix) -> tuple:
    """Quotients of nonzero entries, closed under one product/sum step, plus 1."""
    sf = a.sf
    entries = {x for r in a.data for x in r if not sf.is_zero(x)}
    diffs = {sf.mul(x, sf.inv(y)) for x in entries for y in entries}
    pool = set(diffs) | {sf.one}
    for d in diffs:
        for e in diffs:
            pool.add(sf.mul(d, e))
            pool.add(sf.add(d, e))
    return tuple(sorted(pool, key=sf.key))


def count_candidates(n: int, pool_size: int) -> int:
    return sum((pool_size + 1) ** (n - lead - 1) for lead in range(n))


def candidate_vectors(sf: Semifield, n: int, pool: Sequence) -> Iterator[tuple]:
    """Nonzero vectors with first nonzero coordinate 1 and the rest in pool u {0}.

    Deterministic order: by position of the leading coordinate, then
    lexicographically in the pool order.
    """
    choices = (sf.zero,) + tuple(pool)
    for lead in range(n):
        head = (sf.zero,) * lead + (sf.one,)
        for tail in product(choices, repeat=n - lead - 1):
            yield head + tail


def _check_dim(a: Matrix, budget: SearchBudget) -> None:
    if a.cols > budget.max_dim:
        raise SearchExhaustedError(
            f"{a.cols} unknowns exceeds the search dimension bound {budget.max_dim}")


def _row_split(sf, row, x):
    """Some subset S of the row support with sum over S = sum over the rest, or None."""
    idx = [j for j, v in enumerate(row) if not sf.is_zero(v)]
    terms = [sf.mul(row[j], x[j]) for j in idx]
    k = len(idx)
    for mask in range(1 << k):
        left = right = sf.zero
        for t in range(k):
            if mask >> t & 1:
                left = sf.add(left, terms[t])
            else:
                right = sf.add(right, terms[t])
        if left == right:
            return frozenset(idx[t] for t in range(k) if mask >> t & 1)
    return None


def _split_matrices(a: Matrix, parts: Sequence[frozenset]) -> tuple[Matrix, Matrix]:
    sf = a.sf
    a1 = [[v if j in s else sf.zero for j, v in enumerate(r)] for r, s in zip(a.data, parts)]
    a2 = [[sf.zero if j in s else v for j, v in enumerate(r)] for r, s in zip(a.data, parts)]
    return Matrix(sf, a1, cols=a.cols), Matrix(sf, a2, cols=a.cols)


def oracle_definitional_singular(a: Matrix, budget: SearchBudget = DEFAULT_BUDGET):
    """Search for ``(X, A1, A2)`` with A = A1 (+) A2 orthogonal and A1 X = A2 X, X != 0.

    The rows of A1 X and A2 X only involve the matching rows of A1 and A2,
    so the enumeration of all support splits of A is done row by row: the
    set of matrix splits is the product of the row splits.  Returns None
    when no candidate works; raises ``SearchExhaustedError`` if the budget
    would be exceeded.
    """
    _check_dim(a, budget)
    sf = a.sf
    pool = budget.pool_for(a)
    splits = sum(1 << sum(not sf.is_zero(v) for v in r) for r in a.data)
    work = count_candidates(a.cols, len(pool)) * max(splits, 1)
    if work > budget.max_work:
        raise SearchExhaustedError(f"definitional search needs {work} steps > {budget.max_work}")
    for x in candidate_vectors(sf, a.cols, pool):
        parts = []
        for r in a.data:
            s = _row_split(sf, r, x)
            if s is None:
                break
            parts.append(s)
        else:
            a1, a2 = _split_matrices(a, parts)
            return x, a1, a2
    return None


def oracle_definitional_singular_full(a: Matrix, budget: SearchBudget = DEFAULT_BUDGET):
    """Same question as ``oracle_definitional_singular`` with whole-matrix splits.

    Enumerates every subset of the support of A as the support of A1; only
    usable on tiny matrices.  Kept to cross-check the row factorisation.
    """
    _check_dim(a, budget)
    sf = a.sf
    pool = budget.pool_for(a)
    cells = [(i, j) for i, r in enumerate(a.data) for j, v in enumerate(r) if not sf.is_zero(v)]
    work = count_candidates(a.cols, len(pool)) << len(cells)
    if work > budget.max_work:
        raise SearchExhaustedError(f"full split search needs {work} steps > {budget.max_work}")
    for x in candidate_vectors(sf, a.cols, pool):
        for mask in range(1 << len(cells)):
            parts = [set() for _ in range(a.rows)]
            for t, (i, j) in enumerate(cells):
                if mask >> t & 1:
                    parts[i].add(j)
            a1, a2 = _split_matrices(a, [frozenset(p) for p in parts])
            if _mat_vec(a1, x) == _mat_vec(a2, x):
                return x, a1, a2
    return None


def _mat_vec(a: Matrix, x) -> tuple:
    sf = a.sf
    return tuple(sf.sum(sf.mul(v, xj) for v, xj in zip(r, x)) for r in a.data)


def oracle_gm_dependent(a: Matrix, budget: SearchBudget = DEFAULT_BUDGET):
    """Search for orthogonal ``X1, X2`` with ``X1 (+) X2 != 0`` and ``A X1 = A X2``."""
    _check_dim(a, budget)
    sf = a.sf
    pool = budget.pool_for(a)
    work = count_candidates(a.cols, len(pool)) * (1 << max(a.cols - 1, 0)) * max(a.rows, 1)
    if work > budget.max_work:
        raise SearchExhaustedError(f"GM search needs {work} steps > {budget.max_work}")
    add, mul, zero = sf.add, sf.mul, sf.zero
    for x in candidate_vectors(sf, a.cols, pool):
        supp = [j for j, v in enumerate(x) if not sf.is_zero(v)]
        first, rest = supp[0], supp[1:]
        # (X1, X2) and (X2, X1) are the same relation: keep the leader in X1
        for mask in range(1 << len(rest)):
            side1 = {first} | {rest[t] for t in range(len(rest)) if mask >> t & 1}
            for r in a.data:
                left = right = zero
                for j in supp:
                    if j in side1:
                        left = add(left, mul(r[j], x[j]))
                    else:
                        right = add(right, mul(r[j], x[j]))
                if left != right:
                    break
            else:
                x1 = tuple(v if j in side1 else zero for j, v in enumerate(x))
                x2 = tuple(zero if j in side1 else v for j, v in enumerate(x))
                return x1, x2
    return None


def rational_grid(lo, hi, step) -> list:
    lo, hi, step = Fraction(lo), Fraction(hi), Fraction(step)
    if step <= 0:
        raise ValueError("grid step must be positive")
    out = []
    v = lo
    while v <= hi:
        out.append(v.numerator if v.denominator == 1 else v)
        v += step
    return out


def oracle_roots(p, lo=-10, hi=10, step=Fraction(1, 4)) -> list:
    """Grid values r (max-plus or min-plus) at which p is a root."""
    return [r for r in rational_grid(lo, hi, step) if is_root(p, r)]
