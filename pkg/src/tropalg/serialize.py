"""JSON wire formats.

Magnitudes travel as strings (``"3"``, ``"-7/2"``), the additive neutral as
``"-inf"`` (max-plus) or ``"+inf"`` (min-plus), F1 elements as 0/1.  Ghost
coordinates of the supertropical cover are written ``{"ghost": value}``.
"""
from __future__ import annotations

from .cover import CoverElement
from .errors import DimensionError
from .matrix import DetReport, Matrix
from .polynomials import UnivariatePoly
from .rank import FamilyReport, LinearForm
from .semifield import Semifield, get_semifield
from .singularity import SingularityReport


def value_to_json(sf: Semifield, a):
    v = sf.format(a)
    return v if sf.name == "f1" else str(v)


def vector_to_json(sf: Semifield, x) -> list:
    return [value_to_json(sf, a) for a in x]


def vector_from_json(sf: Semifield, obj) -> tuple:
    return tuple(sf.coerce(v) for v in obj)


def matrix_to_json(a: Matrix) -> dict:
    return {"semifield": a.sf.name, "rows": a.rows, "cols": a.cols,
            "entries": [vector_to_json(a.sf, r) for r in a.data]}


def matrix_from_json(obj: dict, default_semifield: str = "maxplus") -> Matrix:
    sf = get_semifield(obj.get("semifield", default_semifield))
    entries = obj["entries"]
    a = Matrix(sf, [[sf.coerce(v) for v in r] for r in entries], cols=obj.get("cols"))
    if "rows" in obj and obj["rows"] != a.rows:
        raise DimensionError(f"declared {obj['rows']} rows, found {a.rows}")
    if "cols" in obj and entries and obj["cols"] != a.cols:
        raise DimensionError(f"declared {obj['cols']} columns, found {a.cols}")
    return a


def poly_to_json(p: UnivariatePoly) -> dict:
    return {"semifield": p.sf.name,
            "coeffs": {str(d): value_to_json(p.sf, a) for d, a in p.coeffs.items()}}


def poly_from_json(obj: dict, default_semifield: str = "maxplus") -> UnivariatePoly:
    sf = get_semifield(obj.get("semifield", default_semifield))
    return UnivariatePoly.from_values(sf, obj["coeffs"])


def form_from_json(obj: dict, default_semifield: str = "maxplus") -> LinearForm:
    """Accepts ``{"coefficients": [...]}`` or a one-row matrix."""
    sf = get_semifield(obj.get("semifield", default_semifield))
    if "coefficients" in obj:
        return LinearForm(sf, vector_from_json(sf, obj["coefficients"]))
    a = matrix_from_json(obj, default_semifield)
    if a.rows != 1:
        raise DimensionError(f"a linear form is a single row, got {a.rows} rows")
    return LinearForm(a.sf, a.data[0])


def cover_to_json(c: CoverElement):
    v = value_to_json(c.field, c.magnitude)
    return {"ghost": v} if c.ghost else v


def roots_to_json(sf: Semifield, rs) -> dict:
    return {"semifield": sf.name,
            "roots": [{"value": value_to_json(sf, r), "multiplicity": m} for r, m in rs]}


def det_report_to_json(rep: DetReport, sf: Semifield) -> dict:
    return {
        "det": value_to_json(sf, rep.det),
        "det_plus": value_to_json(sf, rep.det_plus),
        "det_minus": value_to_json(sf, rep.det_minus),
        "optimal_even": [p.to_json() for p in rep.optimal_even],
        "optimal_odd": [p.to_json() for p in rep.optimal_odd],
    }


def report_to_json(r: SingularityReport, sf: Semifield) -> dict:
    out = {
        "shape": list(r.shape),
        "d_singular": r.d_singular,
        "D_singular": r.D_singular,
        "definitional_singular": r.definitional_singular,
        "gm_dependent": r.gm_dependent,
        "gm_method": r.gm_method,
        "det": det_report_to_json(r.det, sf) if r.det is not None else None,
        "witness_status": r.witness_status,
        "witness": None,
        "gm_witness_status": r.gm_witness_status,
        "gm_witness": None,
    }
    if r.witness is not None:
        out["witness"] = {"x": vector_to_json(sf, r.witness.x),
                          "a1": matrix_to_json(r.witness.a1),
                          "a2": matrix_to_json(r.witness.a2)}
    if r.gm_witness is not None:
        out["gm_witness"] = {"x1": vector_to_json(sf, r.gm_witness.x1),
                             "x2": vector_to_json(sf, r.gm_witness.x2)}
    return out


def family_report_to_json(rep: FamilyReport, sf: Semifield) -> dict:
    return {
        "vectors": [vector_to_json(sf, v) for v in rep.vectors],
        "is_regular": rep.is_regular,
        "tropical_dimension": rep.tropical_dimension,
        "max_regular_subfamily": [i + 1 for i in rep.max_regular_subfamily],
    }
