"""Lie algebras given by structure constants.

Sign convention: for a 1-form e, de(x, y) = -e([x, y]).  A list of
differentials (de^1, ..., de^n) therefore determines the bracket through
[e_i, e_j] = -sum_k (coefficient of e^{ij} in de^k) e_k.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    HomomorphismViolation,
    JacobiFailure,
    NotDerivation,
)
from .exterior import KForm, wedge
from .linalg import (
    Endomorphism,
    Vector,
    basis_vector,
    kernel,
    rref,
)
from .scalar import Scalar, as_scalar

__all__ = ["LieAlgebra", "Subspace", "semidirect_product"]

ZERO = Fraction(0)
ONE = Fraction(1)


class Subspace:
    """A linear subspace of R^n, stored by its reduced row echelon basis."""

    __slots__ = ("n", "basis", "pivots")

    def __init__(self, n: int, vectors: Iterable[Sequence] = ()):
        rows = [list(as_scalar(x) for x in v) for v in vectors]
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("vector length differs from ambient dimension")
        red, piv = rref(rows) if rows else ([], [])
        self.n = n
        self.basis: tuple[Vector, ...] = tuple(tuple(r) for r in red)
        self.pivots = tuple(piv)

    @classmethod
    def span_of_basis(cls, n: int, indices: Iterable[int]) -> "Subspace":
        """Span of the coordinate vectors e_i (0-based indices)."""
        return cls(n, [basis_vector(n, i) for i in indices])

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls.span_of_basis(n, range(n))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"

    def contains(self, v: Sequence) -> bool:
        """Membership by reduction against the echelon basis."""
        w = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c != 0:
                w = [a - c * b if b != 0 else a for a, b in zip(w, row)]
        return all(x == 0 for x in w)

    __contains__ = contains

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of v in the echelon basis; ValueError if v is outside."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.n, list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        k = self.dim
        if k == 0 or other.dim == 0:
            return Subspace(self.n)
        # solve sum a_i s_i - sum b_j o_j = 0
        cols = list(self.basis) + [tuple(-x for x in v) for v in other.basis]
        mat = [[c[r] for c in cols] for r in range(self.n)]
        vecs = []
        for sol in kernel(mat, len(cols)):
            v = [ZERO] * self.n
            for a, s in zip(sol[:k], self.basis):
                if a != 0:
                    v = [x + a * y for x, y in zip(v, s)]
            vecs.append(v)
        return Subspace(self.n, vecs)

    def image(self, m: Endomorphism) -> "Subspace":
        return Subspace(self.n, [m @ v for v in self.basis])

    def complement_basis(self) -> list[Vector]:
        """Coordinate vectors e_i for the non-pivot columns."""
        return [basis_vector(self.n, i) for i in range(self.n) if i not in self.pivots]

    def orthogonal_complement(self, g: Endomorphism | None = None) -> "Subspace":
        """{x : g(x, s) = 0 for all s}; Euclidean when ``g`` is None."""
        if g is None:
            rows = [list(v) for v in self.basis]
        else:
            rows = [list(g @ v) for v in self.basis]
        if not rows:
            return Subspace.whole(self.n)
        return Subspace(self.n, kernel(rows, self.n))


class LieAlgebra:
    """Finite-dimensional Lie algebra with exact structure constants.

    ``brackets`` maps (i, j) with i < j (0-based) to the sparse vector
    ``{k: c^k_ij}``.  Instances are immutable.
    """

    def __init__(
        self,
        n: int,
        brackets: dict | None = None,
        labels: Sequence[str] | None = None,
        name: str = "",
        validate: bool = True,
    ):
        self.n = n
        clean: dict[tuple[int, int], dict[int, Scalar]] = {}
        for (i, j), vals in (brackets or {}).items():
            if i == j:
                continue
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"bracket index ({i + 1},{j + 1}) out of range")
            sgn = 1
            if i > j:
                i, j, sgn = j, i, -1
            items = vals.items() if isinstance(vals, dict) else enumerate(vals)
            entry = clean.setdefault((i, j), {})
            for k, c in items:
                c = as_scalar(c)
                if c == 0:
                    continue
                if not 0 <= k < n:
                    raise IndexError(f"bracket value index {k + 1} out of range")
                v = entry.get(k, ZERO) + (c if sgn > 0 else -c)
                if v == 0:
                    entry.pop(k, None)
                else:
                    entry[k] = v
            if not entry:
                del clean[(i, j)]
        self._br = clean
        self.labels = tuple(labels) if labels else tuple(f"e{i + 1}" for i in range(n))
        self.name = name
        self._d1cache: dict = {}
        if validate:
            ok, triple = self.jacobi_check()
            if not ok:
                i, j, k = triple
                raise JacobiFailure(
                    f"Jacobi identity fails on (e{i + 1}, e{j + 1}, e{k + 1})", triple=triple
                )

    # -- construction -------------------------------------------------------

    @classmethod
    def from_differentials(cls, forms: Sequence[KForm], validate: bool = True, **kw) -> "LieAlgebra":
        """Build from (de^1, ..., de^n)."""
        n = len(forms)
        br: dict[tuple[int, int], dict[int, Scalar]] = {}
        for k, f in enumerate(forms):
            if f.n != n:
                raise DimensionMismatch(f"de^{k + 1} lives in dimension {f.n}, expected {n}")
            if f.terms and f.degree != 2:
                raise ValueError(f"de^{k + 1} is not a 2-form")
            for (i, j), c in f.terms.items():
                br.setdefault((i, j), {})[k] = -c
        return cls(n, br, validate=validate, **kw)

    @classmethod
    def abelian(cls, n: int) -> "LieAlgebra":
        return cls(n, {})

    # -- basic data ---------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.n

    def structure_constants(self) -> dict[tuple[int, int], dict[int, Scalar]]:
        return {k: dict(v) for k, v in self._br.items()}

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.n == other.n and self._br == other._br

    def __hash__(self):
        return hash((self.n, frozenset((k, frozenset(v.items())) for k, v in self._br.items())))

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<LieAlgebra{nm} dim={self.n} {self.differentials_text()}>"

    def is_abelian(self) -> bool:
        return not self._br

    def basis_bracket(self, i: int, j: int) -> Vector:
        if i == j:
            return (ZERO,) * self.n
        sgn = 1
        if i > j:
            i, j, sgn = j, i, -1
        out = [ZERO] * self.n
        for k, c in self._br.get((i, j), {}).items():
            out[k] = c if sgn > 0 else -c
        return tuple(out)

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        if len(x) != self.n or len(y) != self.n:
            raise DimensionMismatch("vector dimension differs from algebra dimension")
        out = [ZERO] * self.n
        nzx = [(i, a) for i, a in enumerate(x) if a != 0]
        nzy = [(j, b) for j, b in enumerate(y) if b != 0]
        for i, a in nzx:
            for j, b in nzy:
                if i == j:
                    continue
                if i < j:
                    vals, s = self._br.get((i, j)), 1
                else:
                    vals, s = self._br.get((j, i)), -1
                if not vals:
                    continue
                ab = a * b if s > 0 else -(a * b)
                for k, c in vals.items():
                    out[k] = out[k] + ab * c
        return tuple(out)

    def ad(self, x: Sequence) -> Endomorphism:
        cols = [self.bracket(x, basis_vector(self.n, j)) for j in range(self.n)]
        return Endomorphism.from_columns(cols)

    def ad_basis(self, i: int) -> Endomorphism:
        return self._ad_basis[i]

    @cached_property
    def _ad_basis(self) -> list[Endomorphism]:
        return [
            Endomorphism.from_columns([self.basis_bracket(i, j) for j in range(self.n)])
            for i in range(self.n)
        ]

    # -- Jacobi and differentials -------------------------------------------

    def jacobi_check(self) -> tuple[bool, tuple[int, int, int] | None]:
        """(True, None) or (False, first failing basis triple, 0-based)."""
        n = self.n
        es = [basis_vector(n, i) for i in range(n)]
        for i, j, k in combinations(range(n), 3):
            a = self.bracket(es[i], self.basis_bracket(j, k))
            b = self.bracket(es[j], self.basis_bracket(k, i))
            c = self.bracket(es[k], self.basis_bracket(i, j))
            if any(x + y + z != 0 for x, y, z in zip(a, b, c)):
                return False, (i, j, k)
        return True, None

    @cached_property
    def _de(self) -> list[KForm]:
        terms: list[dict] = [{} for _ in range(self.n)]
        for (i, j), vals in self._br.items():
            for k, c in vals.items():
                terms[k][(i, j)] = -c
        return [KForm(self.n, 2, t) for t in terms]

    def differentials(self) -> list[KForm]:
        """(de^1, ..., de^n)."""
        return list(self._de)

    def differentials_text(self) -> str:
        return "(" + ", ".join(str(f) for f in self._de) + ")"

    def _d_monomial(self, key: tuple[int, ...]) -> KForm:
        hit = self._d1cache.get(key)
        if hit is not None:
            return hit
        n = self.n
        out = KForm.zero(n, len(key) + 1)
        for p, i in enumerate(key):
            de = self._de[i]
            if not de.terms:
                continue
            left = KForm._raw(n, p, {key[:p]: ONE})
            right = KForm._raw(n, len(key) - p - 1, {key[p + 1:]: ONE})
            term = wedge(wedge(left, de), right)
            out = out + (term if p % 2 == 0 else -term)
        self._d1cache[key] = out
        return out

    def ce_differential(self, a: KForm) -> KForm:
        """Chevalley-Eilenberg differential (antiderivation extending de^k)."""
        if a.n != self.n:
            raise DimensionMismatch("form dimension differs from algebra dimension")
        out = KForm.zero(self.n, a.degree + 1)
        for key, c in a.terms.items():
            if not key:
                continue
            dm = self._d_monomial(key)
            if dm.terms:
                out = out + dm.scale(c)
        return out

    d = ce_differential

    def d_squared_vanishes(self) -> bool:
        """d(de^k) = 0 for every k, which is equivalent to the Jacobi identity."""
        return all(self.ce_differential(f).is_zero() for f in self._de)

    # -- subspaces, ideals, series ------------------------------------------

    def bracket_space(self, s: Subspace, t: Subspace) -> Subspace:
        vecs = [self.bracket(x, y) for x in s.basis for y in t.basis]
        return Subspace(self.n, vecs)

    def whole(self) -> Subspace:
        return Subspace.whole(self.n)

    def derived_algebra(self) -> Subspace:
        return self.bracket_space(self.whole(), self.whole())

    def derived_series(self) -> list[Subspace]:
        series = [self.whole()]
        while True:
            nxt = self.bracket_space(series[-1], series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)
            if nxt.dim == 0:
                return series

    def lower_central_series(self, s: Subspace | None = None) -> list[Subspace]:
        """Lower central series of the subalgebra ``s`` (whole algebra by default)."""
        s = s or self.whole()
        series = [s]
        while True:
            nxt = self.bracket_space(s, series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)
            if nxt.dim == 0:
                return series

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].dim == 0

    def is_nilpotent(self, s: Subspace | None = None) -> bool:
        return self.lower_central_series(s)[-1].dim == 0

    def is_subalgebra(self, s: Subspace) -> bool:
        return s.contains_space(self.bracket_space(s, s))

    def is_ideal(self, s: Subspace) -> bool:
        return s.contains_space(self.bracket_space(self.whole(), s))

    def center(self) -> Subspace:
        rows = []
        for j in range(self.n):
            ad = self._ad_basis[j]
            rows.extend(list(r) for r in ad.rows)
        # x central iff ad_{e_j} x = 0 for all j
        return Subspace(self.n, kernel(rows, self.n)) if rows else self.whole()

    def centralizer(self, s: Subspace, within: Subspace | None = None) -> Subspace:
        rows = []
        for v in s.basis:
            rows.extend(list(r) for r in self.ad(v).rows)
        c = Subspace(self.n, kernel(rows, self.n)) if rows else self.whole()
        return c.intersection(within) if within is not None else c

    def is_unimodular(self) -> bool:
        return all(ad.trace() == 0 for ad in self._ad_basis)

    def trace_form(self) -> Vector:
        """Coefficients of the 1-form x -> tr(ad_x)."""
        return tuple(ad.trace() for ad in self._ad_basis)

    def is_derivation(self, d: Endomorphism) -> bool:
        return self.derivation_defect(d) is None

    def derivation_defect(self, d: Endomorphism):
        """None for a derivation, else the first failing basis pair (0-based)."""
        if d.n != self.n:
            raise DimensionMismatch("endomorphism dimension differs from algebra dimension")
        n = self.n
        cols = [d.column(j) for j in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                lhs = d @ self.basis_bracket(i, j)
                r1 = self.bracket(cols[i], basis_vector(n, j))
                r2 = self.bracket(basis_vector(n, i), cols[j])
                if any(a != b + c for a, b, c in zip(lhs, r1, r2)):
                    return (i, j)
        return None

    def derivation_equations(self) -> list[list]:
        """Linear equations on D (entry D[a][b] at position a*n + b) for
        D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j]."""
        n = self.n
        br = [[self.basis_bracket(i, j) for j in range(n)] for i in range(n)]
        rows = []
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    row = [ZERO] * (n * n)
                    for m in range(n):
                        c = br[i][j][m]
                        if c != 0:
                            row[k * n + m] += c
                        c = br[m][j][k]
                        if c != 0:
                            row[m * n + i] -= c
                        c = br[i][m][k]
                        if c != 0:
                            row[m * n + j] -= c
                    if any(x != 0 for x in row):
                        rows.append(row)
        return rows

    def derivation_algebra_basis(self) -> list[Endomorphism]:
        n = self.n
        sols = kernel(self.derivation_equations(), n * n)
        return [Endomorphism([list(s[a * n:(a + 1) * n]) for a in range(n)]) for s in sols]

    def restrict(self, s: Subspace) -> "LieAlgebra":
        """The subalgebra ``s`` as a Lie algebra in its echelon basis."""
        if not self.is_subalgebra(s):
            raise ValueError("subspace is not a subalgebra")
        k = s.dim
        br = {}
        for a in range(k):
            for b in range(a + 1, k):
                v = self.bracket(s.basis[a], s.basis[b])
                coords = s.coordinates(v)
                if any(c != 0 for c in coords):
                    br[(a, b)] = {m: c for m, c in enumerate(coords) if c != 0}
        return LieAlgebra(k, br, validate=False)

    def fingerprint(self) -> dict:
        """Cheap isomorphism invariants."""
        return {
            "dim": self.n,
            "derived_series": [s.dim for s in self.derived_series()],
            "lower_central_series": [s.dim for s in self.lower_central_series()],
            "center": self.center().dim,
            "unimodular": self.is_unimodular(),
        }


def _commutator_is_ad(h: LieAlgebra, t1: Endomorphism, t2: Endomorphism, v: Vector) -> bool:
    return t1.commutator(t2) == h.ad(v)


def semidirect_product(
    h: LieAlgebra,
    theta: Sequence[Endomorphism],
    extra: dict | None = None,
    name: str = "",
) -> LieAlgebra:
    """h semidirect (span U_1..U_m) with ad_{U_i}|_h = theta[i].

    ``extra`` maps (i, j) (0-based among the new generators) to the h-vector
    V_ij with [U_i, U_j] = V_ij.  Requires [theta_i, theta_j] = ad_{V_ij}|_h.
    The new generators come after the basis of h.
    """
    m = len(theta)
    n0 = h.n
    extra = dict(extra or {})
    for idx, t in enumerate(theta):
        if t.n != n0:
            raise DimensionMismatch(f"theta[{idx}] has size {t.n}, expected {n0}")
        bad = h.derivation_defect(t)
        if bad is not None:
            raise NotDerivation(
                f"theta[{idx}] is not a derivation: fails on (e{bad[0] + 1}, e{bad[1] + 1})",
                index=idx,
                pair=bad,
            )
    zero = (ZERO,) * n0
    for i in range(m):
        for j in range(i + 1, m):
            v = extra.get((i, j))
            if v is None and (j, i) in extra:
                v = tuple(-x for x in extra[(j, i)])
            v = tuple(v) if v is not None else zero
            if not _commutator_is_ad(h, theta[i], theta[j], v):
                raise HomomorphismViolation(
                    f"[theta[{i}], theta[{j}]] is not ad of the prescribed bracket",
                    pair=(i, j),
                )
            if any(x != 0 for x in v):
                extra[(i, j)] = v
    n = n0 + m
    br: dict[tuple[int, int], dict[int, Scalar]] = {}
    for (i, j), vals in h.structure_constants().items():
        br[(i, j)] = dict(vals)
    for a, t in enumerate(theta):
        u = n0 + a
        for j in range(n0):
            col = t.column(j)
            vals = {k: c for k, c in enumerate(col) if c != 0}
            if vals:
                # [U_a, e_j] = theta_a e_j, stored with j < u
                br[(j, u)] = {k: -c for k, c in vals.items()}
    for (i, j), v in extra.items():
        if i > j:
            continue
        vals = {k: c for k, c in enumerate(v) if c != 0}
        if vals:
            br[(n0 + i, n0 + j)] = vals
    labels = list(h.labels) + [f"u{a + 1}" for a in range(m)]
    return LieAlgebra(n, br, labels=labels, name=name, validate=True)
