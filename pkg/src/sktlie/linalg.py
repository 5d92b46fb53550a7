"""Exact dense linear algebra over Q or Q(sqrt(d)).

Matrices are small (n <= ~12) so everything is plain Python lists of
scalars.  :class:`Endomorphism` is the immutable square-matrix type used
across the package; the free functions work on lists of rows.

Convention: ``M[i][j]`` is the i-th coordinate of ``M e_j`` (columns are
images of basis vectors).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import Scalar, as_scalar, sign

__all__ = [
    "Vector",
    "Endomorphism",
    "rref",
    "rank",
    "kernel",
    "solve",
    "inverse",
    "det",
    "charpoly",
    "is_nilpotent_matrix",
    "ldl_pivots",
    "is_positive_definite",
    "leading_minors",
    "poly_trim",
    "poly_eval",
    "poly_divmod",
    "poly_gcd",
    "poly_interpolate",
    "poly_derivative",
    "sturm_real_root_count",
]

ZERO = Fraction(0)
ONE = Fraction(1)

Vector = tuple  # tuple of Scalars


def vec(xs: Iterable) -> Vector:
    return tuple(as_scalar(x) for x in xs)


def basis_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vadd(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def dot(x: Sequence, y: Sequence) -> Scalar:
    s = ZERO
    for a, b in zip(x, y):
        if a != 0 and b != 0:
            s = s + a * b
    return s


class Endomorphism:
    """Immutable n x n matrix with exact entries."""

    __slots__ = ("rows", "n", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(as_scalar(x) for x in r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("endomorphism matrix must be square")
        self.rows = rows
        self.n = n
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "Endomorphism":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Endomorphism":
        return cls([[ZERO] * n for _ in range(n)])

    @classmethod
    def from_columns(cls, cols) -> "Endomorphism":
        n = len(cols)
        return cls([[cols[j][i] for j in range(n)] for i in range(n)])

    @classmethod
    def from_images(cls, n: int, images: dict) -> "Endomorphism":
        """Build from ``{j: image vector}`` (0-based); unspecified columns are 0."""
        cols = [images.get(j, (ZERO,) * n) for j in range(n)]
        return cls.from_columns(cols)

    @classmethod
    def block_diag(cls, *blocks: "Endomorphism") -> "Endomorphism":
        n = sum(b.n for b in blocks)
        rows = [[ZERO] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.n):
                for j in range(b.n):
                    rows[off + i][off + j] = b.rows[i][j]
            off += b.n
        return cls(rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    @property
    def T(self) -> "Endomorphism":
        return Endomorphism(list(zip(*self.rows)))

    def __matmul__(self, other):
        if isinstance(other, Endomorphism):
            cols = list(zip(*other.rows))
            return Endomorphism([[dot(r, c) for c in cols] for r in self.rows])
        if isinstance(other, tuple):
            if len(other) != self.n:
                raise ValueError("dimension mismatch")
            return tuple(dot(r, other) for r in self.rows)
        return NotImplemented

    def __add__(self, other: "Endomorphism") -> "Endomorphism":
        return Endomorphism(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "Endomorphism") -> "Endomorphism":
        return Endomorphism(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "Endomorphism":
        return Endomorphism([[-a for a in r] for r in self.rows])

    def __mul__(self, c) -> "Endomorphism":
        c = as_scalar(c)
        return Endomorphism([[c * a for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def commutator(self, other: "Endomorphism") -> "Endomorphism":
        return self @ other - other @ self

    def trace(self) -> Scalar:
        s = ZERO
        for i in range(self.n):
            s = s + self.rows[i][i]
        return s

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_symmetric(self) -> bool:
        return self.rows == self.T.rows

    def restrict(self, basis: Sequence[Vector]) -> "Endomorphism":
        """Matrix of this map on span(basis), assuming the span is invariant.

        Raises ValueError if some image leaves the span.
        """
        k = len(basis)
        cols = []
        for b in basis:
            img = self @ tuple(b)
            coords = solve([list(v) for v in zip(*basis)], list(img))
            if coords is None:
                raise ValueError("subspace is not invariant")
            cols.append(coords)
        return Endomorphism([[cols[j][i] for j in range(k)] for i in range(k)])

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Endomorphism([{body}])"


# -- row reduction ---------------------------------------------------------


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        if piv != 1:
            inv = 1 / piv
            m[r] = [x * inv if x != 0 else x for x in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f != 0:
                    m[i] = [a - f * b if b != 0 else a for a, b in zip(m[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def kernel(rows: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Basis of {x : M x = 0}; ``ncols`` is needed when ``rows`` is empty."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [basis_vector(ncols, i) for i in range(ncols)]
    red, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(red, piv):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> Vector | None:
    """One solution of ``a x = b`` or None if inconsistent."""
    ncols = len(a[0]) if a else 0
    aug = [list(r) + [bi] for r, bi in zip(a, b)]
    red, piv = rref(aug)
    if ncols in piv:
        return None
    x = [ZERO] * ncols
    for row, p in zip(red, piv):
        x[p] = row[-1]
    return tuple(x)


def inverse(m: Endomorphism) -> Endomorphism:
    n = m.n
    aug = [list(m.rows[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("matrix is singular")
    return Endomorphism([row[n:] for row in red])


def det(m: Endomorphism | Sequence[Sequence]) -> Scalar:
    rows = [list(r) for r in (m.rows if isinstance(m, Endomorphism) else m)]
    n = len(rows)
    d: Scalar = ONE
    for c in range(n):
        pr = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pr is None:
            return ZERO
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            d = -d
        piv = rows[c][c]
        d = d * piv
        for i in range(c + 1, n):
            f = rows[i][c]
            if f != 0:
                f = f / piv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return d


def charpoly(m: Endomorphism) -> list[Scalar]:
    """Coefficients ``[c_0, ..., c_n]`` of det(t I - M), c_n = 1 (Faddeev-LeVerrier)."""
    n = m.n
    coeffs: list[Scalar] = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mk = Endomorphism.zero(n)
    ident = Endomorphism.identity(n)
    for k in range(1, n + 1):
        mk = m @ mk + ident * coeffs[n - k + 1]
        coeffs[n - k] = -(m @ mk).trace() / k
    return coeffs


def is_nilpotent_matrix(m: Endomorphism) -> bool:
    p = m
    for _ in range(m.n):
        if p.is_zero():
            return True
        p = p @ m
    return p.is_zero()


def ldl_pivots(m: Endomorphism | Sequence[Sequence]):
    """Yield symmetric-elimination pivots; these are ratios of leading minors.

    Stops early (yielding the offending pivot last) once a pivot is <= 0,
    which is all a positive-definiteness test needs.
    """
    rows = [list(r) for r in (m.rows if isinstance(m, Endomorphism) else m)]
    n = len(rows)
    for c in range(n):
        piv = rows[c][c]
        yield piv
        if sign(piv) <= 0:
            return
        for i in range(c + 1, n):
            f = rows[i][c]
            if f != 0:
                f = f / piv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]


def is_positive_definite(m: Endomorphism) -> bool:
    """Sylvester's criterion via exact symmetric elimination."""
    if not m.is_symmetric():
        return False
    return all(sign(p) > 0 for p in ldl_pivots(m))


def leading_minors(m: Endomorphism) -> list[Scalar]:
    return [det([r[:k] for r in m.rows[:k]]) for k in range(1, m.n + 1)]


# -- univariate polynomials, coefficient lists low -> high ------------------


def poly_trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_eval(p: Sequence, t) -> Scalar:
    acc: Scalar = ZERO
    for c in reversed(p):
        acc = acc * t + c
    return acc


def poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a, b = poly_trim(a), poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [ZERO] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        f = r[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            r[shift + i] = r[shift + i] - f * c
        r = poly_trim(r)
    return poly_trim(q), r


def poly_gcd(a: Sequence, b: Sequence) -> list:
    """Monic gcd; gcd(0, 0) = [] (the zero polynomial)."""
    a, b = poly_trim(a), poly_trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def poly_derivative(p: Sequence) -> list:
    return poly_trim([c * k for k, c in enumerate(p)][1:])


def poly_interpolate(xs: Sequence, ys: Sequence) -> list:
    """Newton interpolation through (xs[i], ys[i]); exact."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p: list = [ZERO]
    for i in range(n - 1, -1, -1):
        # p = p * (t - xs[i]) + coef[i]
        shifted = [ZERO] + p
        for k in range(len(p)):
            shifted[k] = shifted[k] - xs[i] * p[k]
        shifted[0] = shifted[0] + coef[i]
        p = shifted
    return poly_trim(p)


def _sign_changes(vals) -> int:
    signs = [s for s in (sign(v) for v in vals) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_real_root_count(p: Sequence) -> int:
    """Number of distinct real roots of a nonzero polynomial."""
    p = poly_trim(p)
    if len(p) <= 1:
        return 0
    seq = [p, poly_derivative(p)]
    while True:
        r = poly_divmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    at_pos = [q[-1] for q in seq]
    at_neg = [q[-1] * (-1 if (len(q) - 1) % 2 else 1) for q in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)
