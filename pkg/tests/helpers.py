"""Independent oracles shared by several test modules."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from sktlie.exterior import KForm
from sktlie.liealg import LieAlgebra
from sktlie.linalg import Endomorphism, basis_vector, inverse


def change_basis(L: LieAlgebra, cols) -> LieAlgebra:
    """The same algebra written in the basis given by the columns ``cols``."""
    P = Endomorphism.from_columns(cols)
    Pi = inverse(P)
    n = L.n
    br = {}
    for i in range(n):
        for j in range(i + 1, n):
            v = Pi @ L.bracket(P.column(i), P.column(j))
            vals = {k: c for k, c in enumerate(v) if c != 0}
            if vals:
                br[(i, j)] = vals
    return LieAlgebra(n, br, validate=False)


def d_by_evaluation(L: LieAlgebra, a: KForm) -> KForm:
    """Chevalley-Eilenberg differential from the invariant formula

    da(x_0..x_k) = sum_{i<j} (-1)^{i+j} a([x_i, x_j], x_0..^i..^j..x_k),

    evaluated on basis tuples.  Shares only ``bracket`` and form evaluation
    with the library.
    """
    n, k = L.n, a.degree
    out = {}
    for key in combinations(range(n), k + 1):
        xs = [basis_vector(n, i) for i in key]
        total = Fraction(0)
        for i in range(k + 1):
            for j in range(i + 1, k + 1):
                rest = [x for t, x in enumerate(xs) if t not in (i, j)]
                total += (-1) ** (i + j) * a(L.bracket(xs[i], xs[j]), *rest)
        if total != 0:
            out[key] = total
    return KForm(n, k + 1, out)


def jacobi_by_brackets(L: LieAlgebra) -> bool:
    n = L.n
    e = [basis_vector(n, i) for i in range(n)]
    for i, j, k in combinations(range(n), 3):
        s = [
            L.bracket(e[i], L.bracket(e[j], e[k])),
            L.bracket(e[j], L.bracket(e[k], e[i])),
            L.bracket(e[k], L.bracket(e[i], e[j])),
        ]
        if any(sum(c) != 0 for c in zip(*s)):
            return False
    return True


def fundamental_form_by_evaluation(J, g) -> KForm:
    """omega(x, y) = g(J x, y)."""
    n = J.n
    out = {}
    for i, j in combinations(range(n), 2):
        Jx = J.column(i)
        v = sum(Jx[a] * g.rows[a][j] for a in range(n))
        if v != 0:
            out[(i, j)] = v
    return KForm(n, 2, out)


def torsion_by_evaluation(L: LieAlgebra, J, g) -> KForm:
    """c(x, y, z) = d omega(J x, J y, J z), all from first principles."""
    n = L.n
    dw = d_by_evaluation(L, fundamental_form_by_evaluation(J, g))
    out = {}
    for key in combinations(range(n), 3):
        v = dw(*(J.column(i) for i in key))
        if v != 0:
            out[key] = v
    return KForm(n, 3, out)


def all_catalog_structures():
    """(entry name, structure label, HermitianData) for every catalog structure."""
    from sktlie.catalog import catalog_entry, catalog_list

    out = []
    for name in catalog_list():
        e = catalog_entry(name)
        for s in e.structures:
            out.append((name, s.label, e.hermitian(s.label)))
    return out
