"""Regularity notions for matrices over a totally ordered idempotent semifield.

* d-singular: a zero of the determinant (det is zero, or at least two
  permutations attain it);
* D-singular: ``det_plus == det_minus``;
* singular (definitional): A = A1 (+) A2 orthogonally with A1 X = A2 X for
  some X != 0; decided through d-singularity for square matrices and
  through square minors for tall ones;
* *singular (Gondran-Minoux dependent): X = X1 (+) X2 orthogonally with
  A X1 = A X2; decided through D-singularity for square matrices.

Witnesses are searched for separately and always verified before they are
returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cover import cover_mat_vec, is_ghost_or_zero
from .errors import (
    DimensionError,
    InvariantViolation,
    NotSingularError,
    SearchExhaustedError,
    UnsupportedSemifieldError,
)
from .matrix import DetReport, Matrix, det_report, mat_add, mat_vec, transpose
from .oracles import DEFAULT_BUDGET, SearchBudget, candidate_vectors, count_candidates


@dataclass(frozen=True)
class Witness:
    """``A = A1 (+) A2`` with disjoint supports and ``A1 X = A2 X``."""

    x: tuple
    a1: Matrix
    a2: Matrix


@dataclass(frozen=True)
class GMWitness:
    """Orthogonal ``X1, X2`` with ``X1 (+) X2 != 0`` and ``A X1 = A X2``."""

    x1: tuple
    x2: tuple


@dataclass(frozen=True)
class SingularityReport:
    shape: tuple
    det: DetReport | None
    d_singular: bool | None
    D_singular: bool | None
    definitional_singular: bool
    gm_dependent: bool
    gm_method: str  # "determinant", "dimension" or "bounded-search"
    witness: Witness | None = None
    witness_status: str = "n/a"  # "found", "exhausted" or "n/a"
    gm_witness: GMWitness | None = None
    gm_witness_status: str = "n/a"

    def verdicts(self) -> tuple:
        return (self.d_singular, self.D_singular, self.definitional_singular, self.gm_dependent)


def _require_ordered(a: Matrix) -> None:
    if not a.sf.totally_ordered:
        raise UnsupportedSemifieldError(f"{a.sf.name} is not totally ordered")


def _require_square(a: Matrix) -> None:
    if not a.is_square:
        raise DimensionError(f"square matrix required, got {a.shape}")


def d_singular_from(rep: DetReport, sf) -> bool:
    return sf.is_zero(rep.det) or len(rep.optimal) >= 2


def is_d_singular(a: Matrix) -> bool:
    _require_square(a)
    return d_singular_from(det_report(a), a.sf)


def is_D_singular(a: Matrix) -> bool:
    _require_square(a)
    rep = det_report(a)
    return rep.det_plus == rep.det_minus


def has_regular_row_minor(a: Matrix) -> tuple | None:
    """Lexicographically first set of ``cols`` rows forming a d-regular minor."""
    n = a.cols
    cols = range(n)
    for rows in combinations(range(a.rows), n):
        if not is_d_singular(a.submatrix(rows, cols)):
            return rows
    return None


def is_definitionally_singular(a: Matrix) -> bool:
    _require_ordered(a)
    p, n = a.shape
    if n > p:
        return True
    if p == n:
        return is_d_singular(a)
    return has_regular_row_minor(a) is None


# --- witnesses ------------------------------------------------------------

def _is_zero_vec(sf, x) -> bool:
    return all(sf.is_zero(v) for v in x)


def _ghost_test(a: Matrix, x) -> bool:
    return not _is_zero_vec(a.sf, x) and is_ghost_or_zero(cover_mat_vec(a, x))


def cramer_candidates(a: Matrix):
    """For every n-1 rows, the vector of (n-1)-minors obtained by deleting each column."""
    n = a.cols
    for rows in combinations(range(a.rows), n - 1):
        yield tuple(
            det_report(a.submatrix(rows, [c for c in range(n) if c != j])).det
            for j in range(n)
        )


def split_for(a: Matrix, x) -> Witness:
    """Split each row between its first maximal term and the rest.

    Rows whose product with ``x`` is zero go wholly to A1.
    """
    sf = a.sf
    a1, a2 = [], []
    for r in a.data:
        terms = [sf.mul(v, xj) for v, xj in zip(r, x)]
        top = sf.sum(terms)
        if sf.is_zero(top):
            a1.append(list(r))
            a2.append([sf.zero] * a.cols)
            continue
        j = next(k for k, t in enumerate(terms) if t == top)
        a1.append([v if k == j else sf.zero for k, v in enumerate(r)])
        a2.append([sf.zero if k == j else v for k, v in enumerate(r)])
    w = Witness(tuple(x), Matrix(sf, a1, cols=a.cols), Matrix(sf, a2, cols=a.cols))
    verify_witness(a, w)
    return w


def verify_witness(a: Matrix, w: Witness) -> None:
    sf = a.sf
    if _is_zero_vec(sf, w.x):
        raise InvariantViolation("witness vector is zero")
    if mat_add(w.a1, w.a2) != a:
        raise InvariantViolation("A1 (+) A2 != A")
    for r1, r2 in zip(w.a1.data, w.a2.data):
        if any(not sf.is_zero(u) and not sf.is_zero(v) for u, v in zip(r1, r2)):
            raise InvariantViolation("A1 and A2 supports overlap")
    if mat_vec(w.a1, w.x) != mat_vec(w.a2, w.x):
        raise InvariantViolation("A1 X != A2 X")


def verify_gm_witness(a: Matrix, w: GMWitness) -> None:
    sf = a.sf
    if any(not sf.is_zero(u) and not sf.is_zero(v) for u, v in zip(w.x1, w.x2)):
        raise InvariantViolation("X1 and X2 supports overlap")
    if _is_zero_vec(sf, w.x1) and _is_zero_vec(sf, w.x2):
        raise InvariantViolation("X1 (+) X2 is zero")
    if mat_vec(a, w.x1) != mat_vec(a, w.x2):
        raise InvariantViolation("A X1 != A X2")


def find_singular_witness(a: Matrix, budget: SearchBudget = DEFAULT_BUDGET) -> Witness | None:
    """Cramer candidates first (square only), then the grid; None if nothing found."""
    sf = a.sf
    if a.is_square:
        for x in cramer_candidates(a):
            if _ghost_test(a, x):
                return split_for(a, x)
    if a.cols > budget.max_dim:
        return None
    pool = budget.pool_for(a)
    if count_candidates(a.cols, len(pool)) * max(a.rows, 1) > budget.max_work:
        return None
    for x in candidate_vectors(sf, a.cols, pool):
        if _ghost_test(a, x):
            return split_for(a, x)
    return None


def singular_witness(a: Matrix, budget: SearchBudget = DEFAULT_BUDGET) -> Witness:
    _require_ordered(a)
    _require_square(a)
    if not is_definitionally_singular(a):
        raise NotSingularError("matrix is regular; no singularity witness exists")
    w = find_singular_witness(a, budget)
    if w is None:
        raise SearchExhaustedError("no witness found within the search bounds")
    return w


def find_gm_witness(a: Matrix, budget: SearchBudget = DEFAULT_BUDGET) -> GMWitness | None:
    """Grid search for a Gondran-Minoux relation between the columns."""
    sf = a.sf
    if a.cols > budget.max_dim:
        return None
    pool = budget.pool_for(a)
    if count_candidates(a.cols, len(pool)) << max(a.cols - 1, 0) > budget.max_work:
        return None
    zero = sf.zero
    for x in candidate_vectors(sf, a.cols, pool):
        supp = [j for j, v in enumerate(x) if not sf.is_zero(v)]
        first, rest = supp[0], supp[1:]
        for mask in range(1 << len(rest)):
            side1 = {first} | {rest[t] for t in range(len(rest)) if mask >> t & 1}
            x1 = tuple(v if j in side1 else zero for j, v in enumerate(x))
            x2 = tuple(zero if j in side1 else v for j, v in enumerate(x))
            if mat_vec(a, x1) == mat_vec(a, x2):
                w = GMWitness(x1, x2)
                verify_gm_witness(a, w)
                return w
    return None


def is_gm_dependent(a: Matrix, budget: SearchBudget = DEFAULT_BUDGET) -> bool:
    """Square: ``det_plus == det_minus``.  Wide: always.  Tall: bounded search."""
    _require_ordered(a)
    p, n = a.shape
    if p == n:
        return is_D_singular(a)
    if n > p:
        return True
    return find_gm_witness(a, budget) is not None


# --- classification -------------------------------------------------------

def classify(a: Matrix, budget: SearchBudget = DEFAULT_BUDGET, witnesses: bool = True) -> SingularityReport:
    _require_ordered(a)
    sf = a.sf
    p, n = a.shape
    rep = None
    d_sing = D_sing = None
    if p == n:
        rep = det_report(a)
        d_sing = d_singular_from(rep, sf)
        D_sing = rep.det_plus == rep.det_minus
        definitional = d_sing
        gm, gm_method = D_sing, "determinant"
    else:
        definitional = n > p or has_regular_row_minor(a) is None
        if n > p:
            gm, gm_method = True, "dimension"
        else:
            gm, gm_method = None, "bounded-search"

    witness = gm_witness = None
    w_status = gm_status = "n/a"
    if witnesses and definitional:
        witness = find_singular_witness(a, budget)
        w_status = "found" if witness else "exhausted"
    if gm is None or (witnesses and gm):
        gm_witness = find_gm_witness(a, budget)
        gm_status = "found" if gm_witness else "exhausted"
    if gm is None:
        gm = gm_witness is not None

    report = SingularityReport(
        shape=(p, n), det=rep, d_singular=d_sing, D_singular=D_sing,
        definitional_singular=definitional, gm_dependent=gm, gm_method=gm_method,
        witness=witness, witness_status=w_status,
        gm_witness=gm_witness, gm_witness_status=gm_status,
    )
    check_report(a, report)
    return report


def check_report(a: Matrix, r: SingularityReport) -> None:
    """Raise ``InvariantViolation`` if the report contradicts a proved relation."""
    if r.D_singular and not r.d_singular:
        raise InvariantViolation("D-singular but d-regular")
    if r.gm_dependent and not r.definitional_singular:
        raise InvariantViolation("*singular but regular")
    if r.shape[0] == r.shape[1]:
        if r.definitional_singular != r.d_singular or r.gm_dependent != r.D_singular:
            raise InvariantViolation("square verdicts disagree with the determinant criteria")
    if r.witness is not None:
        verify_witness(a, r.witness)
    if r.gm_witness is not None:
        verify_gm_witness(a, r.gm_witness)


def transpose_agrees(a: Matrix) -> bool:
    return classify(a, witnesses=False).verdicts() == classify(transpose(a), witnesses=False).verdicts()
