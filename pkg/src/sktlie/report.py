"""JSON reports combining algebra-level checks and per-structure flags."""

from __future__ import annotations

import json
from typing import Sequence

from .errors import SKTLieError
from .hermitian import is_generalized_kahler, property_report
from .hermitian_io import HermitianFile
from .liealg import LieAlgebra, Subspace
from .nilradical import verify_nilradical

__all__ = ["nilradical_summary", "build_report", "emit_report"]


def nilradical_summary(L: LieAlgebra, candidate: Sequence[int] | None) -> dict:
    """Verdict for a 1-based index candidate; nilpotent algebras are their own nilradical."""
    if candidate is None:
        if L.is_nilpotent():
            return {"dim": L.n, "verdict": "IS_NILRADICAL"}
        return {"dim": None, "verdict": "NO_CANDIDATE"}
    h = Subspace.span_of_basis(L.n, [i - 1 for i in candidate])
    try:
        res = verify_nilradical(L, h)
    except SKTLieError as exc:
        return {"dim": h.dim, "verdict": exc.code}
    out = {"dim": h.dim}
    out.update(res.to_json())
    return out


def build_report(
    L: LieAlgebra,
    hermitian: HermitianFile | None = None,
    candidate: Sequence[int] | None = None,
    name: str | None = None,
) -> dict:
    jac, _ = L.jacobi_check()
    out: dict = {
        "name": name if name is not None else L.name,
        "dimension": L.n,
        "jacobi": jac,
        "unimodular": L.is_unimodular(),
        "nilradical": nilradical_summary(L, candidate),
        "structures": [],
        "gk": [],
    }
    if hermitian is None:
        return out
    for label, J, g in hermitian.structures:
        out["structures"].append(property_report(L, J, g, label).to_json())
    for label, Jp, Jm, g in hermitian.gk:
        res = is_generalized_kahler(L, Jp, Jm, g)
        entry = {"labels": label, "verdict": res.verdict.value}
        if res.reason:
            entry["reason"] = res.reason
        out["gk"].append(entry)
    return out


def emit_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False)

