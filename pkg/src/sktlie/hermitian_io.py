"""JSON encoding of complex structures, metrics and extension specs.

Hermitian files look like::

    {"J": {"1": "2", "3": "4", "5": "6"}, "g": "identity"}

or, for several structures and generalized Kahler pairs::

    {"structures": [{"label": "J", "J": {...}, "g": "identity"}],
     "gk": [{"label": "J+/J-", "Jp": {...}, "Jm": {...}, "g": "identity"}]}

``{"1": "2"}`` means J e_1 = e_2 (so J e_2 = -e_1); ``"-2"`` flips the sign.
Matrices are lists of rows of exact scalar strings, with M[i][j] the i-th
coordinate of M e_j.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DimensionMismatch, NotCompatible, NotComplexStructure, NotMetric
from .hermitian import ComplexStructure, Metric, is_compatible
from .linalg import Endomorphism
from .scalar import format_scalar, parse_scalar

__all__ = [
    "HermitianFile",
    "load_hermitian",
    "dump_hermitian",
    "parse_matrix",
    "matrix_to_json",
    "structure_to_json",
    "load_extension_spec",
]


@dataclass
class HermitianFile:
    structures: list[tuple[str, ComplexStructure, Metric]] = field(default_factory=list)
    gk: list[tuple[str, ComplexStructure, ComplexStructure, Metric]] = field(default_factory=list)


def _scalar(x):
    if isinstance(x, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(x, int):
        return parse_scalar(str(x))
    if isinstance(x, str):
        return parse_scalar(x)
    raise ValueError(f"scalars must be exact strings or integers, got {x!r}")


def parse_matrix(obj, n: int) -> Endomorphism:
    if not isinstance(obj, list) or len(obj) != n or any(
        not isinstance(r, list) or len(r) != n for r in obj
    ):
        raise DimensionMismatch(f"expected a {n}x{n} matrix")
    return Endomorphism([[_scalar(x) for x in row] for row in obj])


def _parse_J(obj, n: int) -> ComplexStructure:
    if isinstance(obj, dict):
        pairs = {}
        for k, v in obj.items():
            try:
                i, j = int(k), int(str(v))
            except ValueError:
                raise NotComplexStructure(f"bad J image entry {k!r}: {v!r}") from None
            if not (1 <= i <= n and 1 <= abs(j) <= n):
                raise NotComplexStructure(f"J image entry {k}: {v} out of range 1..{n}")
            if abs(j) == i:
                raise NotComplexStructure(f"J e_{i} = +-e_{i} cannot square to -Id")
            pairs[i] = j
        return ComplexStructure.from_pairs(n, pairs)
    return ComplexStructure(parse_matrix(obj, n))


def _parse_g(obj, n: int) -> Metric:
    if obj is None or obj == "identity":
        return Metric.identity(n)
    m = parse_matrix(obj, n)
    if not m.is_symmetric():
        raise NotMetric("metric matrix is not symmetric")
    return Metric(m)


def _checked(J: ComplexStructure, g: Metric, label: str):
    if not is_compatible(J, g):
        raise NotCompatible(f"structure {label!r}: g(J., J.) != g")


def load_hermitian(data, n: int) -> HermitianFile:
    """Parse a Hermitian JSON document (text or already-decoded object)."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise ValueError("Hermitian data must be a JSON object")
    out = HermitianFile()
    if "J" in data:
        entries = [{"label": data.get("label", "J"), "J": data["J"], "g": data.get("g")}]
    else:
        entries = data.get("structures", [])
    for k, e in enumerate(entries):
        label = e.get("label", f"J{k + 1}")
        J = _parse_J(e["J"], n)
        g = _parse_g(e.get("g"), n)
        _checked(J, g, label)
        out.structures.append((label, J, g))
    for k, e in enumerate(data.get("gk", [])):
        label = e.get("label", f"GK{k + 1}")
        Jp = _parse_J(e["Jp"], n)
        Jm = _parse_J(e["Jm"], n)
        g = _parse_g(e.get("g"), n)
        _checked(Jp, g, label + " (J+)")
        _checked(Jm, g, label + " (J-)")
        out.gk.append((label, Jp, Jm, g))
    if not out.structures and not out.gk:
        raise ValueError("no complex structures found in Hermitian data")
    return out


def matrix_to_json(m: Endomorphism) -> list[list[str]]:
    return [[format_scalar(x) for x in row] for row in m.rows]


def _J_to_json(J: Endomorphism):
    """Image map when J permutes basis vectors up to sign, else a matrix."""
    n = J.n
    pairs: dict[str, str] = {}
    done: set[int] = set()
    for j in range(n):
        col = J.column(j)
        nz = [(i, c) for i, c in enumerate(col) if c != 0]
        if len(nz) != 1 or nz[0][1] not in (1, -1):
            return matrix_to_json(J)
        if j in done:
            continue
        i, c = nz[0]
        pairs[str(j + 1)] = str(i + 1) if c == 1 else str(-(i + 1))
        done.update((i, j))
    return pairs


def _g_to_json(g: Endomorphism):
    if g == Endomorphism.identity(g.n):
        return "identity"
    return matrix_to_json(g)


def structure_to_json(label: str, J, g) -> dict:
    J = J.J if isinstance(J, ComplexStructure) else J
    g = g.g if isinstance(g, Metric) else g
    return {"label": label, "J": _J_to_json(J), "g": _g_to_json(g)}


def dump_hermitian(hf: HermitianFile) -> dict:
    out: dict = {"structures": [structure_to_json(lbl, J, g) for lbl, J, g in hf.structures]}
    if hf.gk:
        out["gk"] = [
            {"label": lbl, "Jp": _J_to_json(Jp.J), "Jm": _J_to_json(Jm.J), "g": _g_to_json(g.g)}
            for lbl, Jp, Jm, g in hf.gk
        ]
    return out


def load_extension_spec(data):
    """ExtensionSpec from JSON.

    ``{"structure": "(0,0,0,0,e12,e34)", "J": {...}, "g": "identity",
    "theta": [matrix | "zero", ...]}``; theta lists theta(U_1), theta(J U_1), ...
    """
    from .constructions import ExtensionSpec
    from .dsl import parse_structure
    from .hermitian import HermitianData

    if isinstance(data, str):
        data = json.loads(data)
    if "structure" not in data or "theta" not in data:
        raise ValueError("extension spec needs 'structure' and 'theta'")
    L = parse_structure(data["structure"])
    n = L.n
    J = _parse_J(data.get("J", {str(2 * i + 1): str(2 * i + 2) for i in range(n // 2)}), n)
    g = _parse_g(data.get("g"), n)
    _checked(J, g, "base")
    theta = []
    for t in data["theta"]:
        theta.append(Endomorphism.zero(n) if t == "zero" else parse_matrix(t, n))
    return ExtensionSpec(HermitianData(L, J, g), tuple(theta))
