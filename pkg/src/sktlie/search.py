"""Search for SKT or Kahler metrics compatible with a fixed complex structure.

Once J is fixed, both conditions are linear in the fundamental form:
omega must be of type (1,1), i.e. omega(J., J.) = omega, and satisfy
d(J d omega) = 0 (SKT) or d omega = 0 (Kahler).  The solution space is
computed exactly; a positive-definite point is then hunted for, starting
from the projection of a standard compatible form and continuing with
random small-integer combinations of a kernel basis.  Running out of
budget gives UNKNOWN, never a nonexistence claim.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotIntegrable
from .exterior import KForm, forms_basis, j_transform
from .hermitian import is_integrable
from .liealg import LieAlgebra
from .linalg import Endomorphism, is_positive_definite, kernel, solve
from .scalar import format_scalar

__all__ = [
    "SearchStatus",
    "SearchOutcome",
    "solution_space",
    "in_solution_space",
    "metric_of_form",
    "metric_search",
    "skt_metric_search",
    "kahler_metric_search",
]

ZERO = Fraction(0)
KINDS = ("skt", "kahler")


class SearchStatus(str, enum.Enum):
    FOUND = "FOUND"
    EMPTY_LINEAR = "EMPTY_LINEAR"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    kind: str
    kernel_dim: int
    attempts: int
    omega: KForm | None = None
    metric: Endomorphism | None = None

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "status": self.status.value,
            "kernel_dim": self.kernel_dim,
            "attempts": self.attempts,
        }
        if self.omega is not None:
            out["omega"] = self.omega.to_text()
            out["g"] = [[format_scalar(x) for x in row] for row in self.metric.rows]
        return out


def _as_endo(J) -> Endomorphism:
    return J if isinstance(J, Endomorphism) else J.J


def _coords(f: KForm, keys: Sequence[tuple[int, ...]]) -> list:
    return [f.terms.get(k, ZERO) for k in keys]


def _constraint_image(L: LieAlgebra, J: Endomorphism, omega: KForm, kind: str) -> list:
    """Concatenated coordinates of the linear conditions applied to omega."""
    n = L.n
    parts = [j_transform(J, omega) - omega]
    domega = L.ce_differential(omega)
    if kind == "kahler":
        parts.append(domega)
    else:
        parts.append(L.ce_differential(j_transform(J, domega)))
    out = []
    for p in parts:
        out.extend(_coords(p, forms_basis(n, p.degree)))
    return out


def solution_space(L: LieAlgebra, J, kind: str = "skt") -> list[KForm]:
    """Basis of the (1,1)-forms satisfying the SKT or Kahler linear condition."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    J = _as_endo(J)
    if not is_integrable(L, J):
        raise NotIntegrable("complex structure is not integrable")
    n = L.n
    keys = forms_basis(n, 2)
    cols = [_constraint_image(L, J, KForm(n, 2, {k: Fraction(1)}), kind) for k in keys]
    rows = [list(r) for r in zip(*cols)]
    sols = kernel(rows, len(keys))
    return [KForm(n, 2, {k: c for k, c in zip(keys, s) if c != 0}) for s in sols]


def in_solution_space(L: LieAlgebra, J, omega: KForm, kind: str = "skt") -> bool:
    J = _as_endo(J)
    return all(c == 0 for c in _constraint_image(L, J, omega, kind))


def metric_of_form(omega: KForm, J) -> Endomorphism:
    """g(x, y) = omega(x, J y)."""
    J = _as_endo(J)
    n = omega.n
    W = [[ZERO] * n for _ in range(n)]
    for (i, j), c in omega.terms.items():
        W[i][j] = c
        W[j][i] = -c
    return Endomorphism(W) @ J


def _project(target: KForm, basis: list[KForm]) -> KForm | None:
    """Euclidean projection (in e^{ij} coordinates) of target onto span(basis)."""
    keys = forms_basis(target.n, 2)
    K = [_coords(b, keys) for b in basis]
    x = _coords(target, keys)
    gram = [[sum(a * b for a, b in zip(u, v)) for v in K] for u in K]
    rhs = [sum(a * b for a, b in zip(u, x)) for u in K]
    c = solve(gram, rhs)
    if c is None:
        return None
    out = KForm.zero(target.n, 2)
    for ci, b in zip(c, basis):
        if ci != 0:
            out = out + b.scale(ci)
    return out


def _standard_form(J: Endomorphism) -> KForm:
    """Fundamental form of the compatible metric Id + J^T J."""
    n = J.n
    g0 = Endomorphism.identity(n) + J.T @ J
    W = J.T @ g0
    return KForm(n, 2, {(i, j): W.rows[i][j] for i in range(n) for j in range(i + 1, n)})


def _combination(basis: list[KForm], coeffs: Sequence[int]) -> KForm:
    out = KForm.zero(basis[0].n, 2)
    for c, b in zip(coeffs, basis):
        if c:
            out = out + b.scale(Fraction(c))
    return out


def _candidates(basis: list[KForm], start: KForm | None, rng: random.Random):
    if start is not None and not start.is_zero():
        yield start
    for b in basis:
        yield b
        yield -b
    while True:
        if start is not None and rng.random() < 0.5:
            w = rng.randint(1, 4)
            coeffs = [rng.randint(-2, 2) for _ in basis]
            yield start.scale(Fraction(w)) + _combination(basis, coeffs)
        else:
            coeffs = [rng.randint(-3, 3) for _ in basis]
            if any(coeffs):
                yield _combination(basis, coeffs)


def metric_search(L: LieAlgebra, J, kind: str = "skt", budget: int = 512, seed: int = 0) -> SearchOutcome:
    J = _as_endo(J)
    basis = solution_space(L, J, kind)
    if not basis:
        return SearchOutcome(SearchStatus.EMPTY_LINEAR, kind, 0, 0)
    rng = random.Random(seed)
    start = _project(_standard_form(J), basis)
    attempts = 0
    for omega in _candidates(basis, start, rng):
        if attempts >= budget:
            break
        attempts += 1
        g = metric_of_form(omega, J)
        if is_positive_definite(g):
            return SearchOutcome(SearchStatus.FOUND, kind, len(basis), attempts, omega, g)
    return SearchOutcome(SearchStatus.UNKNOWN, kind, len(basis), attempts)


def skt_metric_search(L: LieAlgebra, J, budget: int = 512, seed: int = 0) -> SearchOutcome:
    return metric_search(L, J, "skt", budget, seed)


def kahler_metric_search(L: LieAlgebra, J, budget: int = 512, seed: int = 0) -> SearchOutcome:
    return metric_search(L, J, "kahler", budget, seed)
