"""Sparse alternating forms on R^n with exact coefficients.

A k-form is stored as ``{(i1, ..., ik): coeff}`` with 0-based, strictly
increasing index tuples and no zero coefficients.  Evaluation follows the
determinant convention, so ``e^{12}(e_1, e_2) = 1``.  Printed indices are
1-based, matching the usual ``e^{ij}`` notation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch
from .linalg import Endomorphism, Vector, det
from .scalar import Scalar, as_scalar, format_scalar

__all__ = [
    "KForm",
    "wedge",
    "contract",
    "endo_star",
    "j_transform",
    "wedge_power",
    "evaluate",
    "merge_sign",
]

ZERO = Fraction(0)


def merge_sign(a: Sequence[int], b: Sequence[int]) -> int:
    """Sign of the permutation sorting the concatenation ``a + b``.

    Both inputs are increasing and disjoint; the sign is (-1)^(# pairs
    with x in a, y in b, x > y).
    """
    inv = 0
    j = 0
    nb = len(b)
    for x in a:
        while j < nb and b[j] < x:
            j += 1
        inv += j
    return -1 if inv & 1 else 1


def _sort_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Insertion-sort parity; sign 0 for repeated indices."""
    arr = list(idx)
    s = 1
    for i in range(1, len(arr)):
        j = i
        while j > 0 and arr[j - 1] > arr[j]:
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            s = -s
            j -= 1
    for x, y in zip(arr, arr[1:]):
        if x == y:
            return 0, tuple(arr)
    return s, tuple(arr)


class KForm:
    __slots__ = ("n", "degree", "terms", "_hash")

    def __init__(self, n: int, degree: int, terms: Mapping | None = None):
        self.n = n
        self.degree = degree
        clean: dict[tuple[int, ...], Scalar] = {}
        for idx, c in (terms or {}).items():
            c = as_scalar(c)
            if c == 0:
                continue
            s, key = _sort_sign(idx)
            if s == 0:
                continue
            if len(key) != degree:
                raise ValueError(f"index tuple {idx} does not have degree {degree}")
            if key and (key[0] < 0 or key[-1] >= n):
                raise IndexError(f"index tuple {idx} out of range for dimension {n}")
            v = clean.get(key, ZERO) + (c if s > 0 else -c)
            if v == 0:
                clean.pop(key, None)
            else:
                clean[key] = v
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, degree: int, terms: dict) -> "KForm":
        f = object.__new__(cls)
        f.n, f.degree, f.terms, f._hash = n, degree, terms, None
        return f

    @classmethod
    def zero(cls, n: int, degree: int) -> "KForm":
        return cls._raw(n, degree, {})

    @classmethod
    def constant(cls, n: int, c) -> "KForm":
        return cls(n, 0, {(): c})

    @classmethod
    def e(cls, n: int, *indices: int, coeff=1) -> "KForm":
        """Basis monomial from 1-based indices: ``KForm.e(6, 1, 2)`` is e^{12}."""
        return cls(n, len(indices), {tuple(i - 1 for i in indices): coeff})

    @classmethod
    def from_covector(cls, xs: Sequence) -> "KForm":
        n = len(xs)
        return cls(n, 1, {(i,): c for i, c in enumerate(xs)})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, *indices_1based: int) -> Scalar:
        s, key = _sort_sign(tuple(i - 1 for i in indices_1based))
        if s == 0:
            return ZERO
        c = self.terms.get(key, ZERO)
        return c if s > 0 else -c

    def first_nonzero(self):
        """(1-based index tuple, coefficient) of the lexicographically first term."""
        if not self.terms:
            return None
        key = min(self.terms)
        return tuple(i + 1 for i in key), self.terms[key]

    def _check(self, other: "KForm"):
        if not isinstance(other, KForm):
            raise TypeError("expected a KForm")
        if other.n != self.n:
            raise DimensionMismatch(f"forms live in dimensions {self.n} and {other.n}")

    def __add__(self, other: "KForm") -> "KForm":
        self._check(other)
        if other.degree != self.degree:
            if not other.terms:
                return self
            if not self.terms:
                return other
            raise ValueError("cannot add forms of different degree")
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, ZERO) + c
            if v == 0:
                out.pop(k, None)
            else:
                out[k] = v
        return KForm._raw(self.n, self.degree, out)

    def __neg__(self) -> "KForm":
        return KForm._raw(self.n, self.degree, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def scale(self, c) -> "KForm":
        c = as_scalar(c)
        if c == 0:
            return KForm.zero(self.n, self.degree)
        return KForm._raw(self.n, self.degree, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, c):
        if isinstance(c, KForm):
            return wedge(self, c)
        return self.scale(c)

    __rmul__ = __mul__

    def __xor__(self, other: "KForm") -> "KForm":
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        if self.n != other.n:
            return False
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.degree, frozenset(self.terms.items())))
        return self._hash

    def __call__(self, *vectors: Vector) -> Scalar:
        return evaluate(self, *vectors)

    def __repr__(self):
        return f"KForm({self.n}, {self.degree}, {self!s})"

    def __str__(self):
        return self.to_text()

    def to_text(self, letter: str = "e") -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            c = self.terms[key]
            if key:
                big = self.n >= 10
                mono = (
                    "[" + ",".join(str(i + 1) for i in key) + "]"
                    if big
                    else letter + "".join(str(i + 1) for i in key)
                )
            else:
                mono = ""
            parts.append((c, mono))
        out = []
        for c, mono in parts:
            s = format_scalar(c)
            if not mono:
                term = s
            elif s == "1":
                term = mono
            elif s == "-1":
                term = "-" + mono
            elif "sqrt" in s and ("+" in s[1:] or "-" in s[1:]):
                term = f"({s})*{mono}"
            else:
                term = f"{s}*{mono}"
            out.append(term)
        text = out[0]
        for t in out[1:]:
            text += t if t.startswith("-") else "+" + t
        return text


def wedge(a: KForm, b: KForm) -> KForm:
    a._check(b)
    out: dict[tuple[int, ...], Scalar] = {}
    for ka, ca in a.terms.items():
        sa = set(ka)
        for kb, cb in b.terms.items():
            if sa.intersection(kb):
                continue
            s = merge_sign(ka, kb)
            key = tuple(sorted(ka + kb))
            v = ca * cb
            v = out.get(key, ZERO) + (v if s > 0 else -v)
            if v == 0:
                out.pop(key, None)
            else:
                out[key] = v
    return KForm._raw(a.n, a.degree + b.degree, out)


def wedge_power(a: KForm, m: int) -> KForm:
    if m < 0:
        raise ValueError("wedge power must be non-negative")
    result = KForm.constant(a.n, 1)
    for _ in range(m):
        result = wedge(result, a)
    return result


def contract(x: Vector, a: KForm) -> KForm:
    """Interior product: (i_x a)(v_2, ..., v_k) = a(x, v_2, ..., v_k)."""
    if a.degree < 1:
        raise ValueError("cannot contract a degree-0 form")
    if len(x) != a.n:
        raise DimensionMismatch("vector and form dimensions differ")
    out: dict[tuple[int, ...], Scalar] = {}
    for key, c in a.terms.items():
        for pos, i in enumerate(key):
            xi = x[i]
            if xi == 0:
                continue
            rest = key[:pos] + key[pos + 1:]
            v = c * xi
            if pos & 1:
                v = -v
            v = out.get(rest, ZERO) + v
            if v == 0:
                out.pop(rest, None)
            else:
                out[rest] = v
    return KForm._raw(a.n, a.degree - 1, out)


def _covector_images(m: Endomorphism, sign: int) -> list[dict[int, Scalar]]:
    """For each i, the 1-form e^i o M as {j: coeff} (times sign)."""
    rows = m.rows
    out = []
    for i in range(m.n):
        out.append({j: (c if sign > 0 else -c) for j, c in enumerate(rows[i]) if c != 0})
    return out


def endo_star(c: Endomorphism, a: KForm) -> KForm:
    """C^* a = -[a(C., ..., .) + ... + a(., ..., C.)] (derivation action, negated)."""
    if c.n != a.n:
        raise DimensionMismatch("endomorphism and form dimensions differ")
    images = _covector_images(c, -1)
    out: dict[tuple[int, ...], Scalar] = {}
    for key, coef in a.terms.items():
        for pos, i in enumerate(key):
            for j, cj in images[i].items():
                new = key[:pos] + (j,) + key[pos + 1:]
                s, skey = _sort_sign(new)
                if s == 0:
                    continue
                v = coef * cj
                v = out.get(skey, ZERO) + (v if s > 0 else -v)
                if v == 0:
                    out.pop(skey, None)
                else:
                    out[skey] = v
    return KForm._raw(a.n, a.degree, out)


def j_transform(j: Endomorphism, a: KForm) -> KForm:
    """(J a)(v_1, ..., v_k) = a(J v_1, ..., J v_k)."""
    if j.n != a.n:
        raise DimensionMismatch("endomorphism and form dimensions differ")
    if a.degree == 0:
        return a
    images = [KForm._raw(a.n, 1, {(k,): c for k, c in row.items()})
              for row in _covector_images(j, 1)]
    out = KForm.zero(a.n, a.degree)
    for key, coef in a.terms.items():
        term = images[key[0]]
        for i in key[1:]:
            term = wedge(term, images[i])
            if not term.terms:
                break
        out = out + term.scale(coef)
    return out


def evaluate(a: KForm, *vectors: Vector) -> Scalar:
    """Determinant-expansion evaluation of a on k vectors."""
    if len(vectors) != a.degree:
        raise ValueError(f"{a.degree}-form evaluated on {len(vectors)} vectors")
    if any(len(v) != a.n for v in vectors):
        raise DimensionMismatch("vector dimension differs from form dimension")
    if a.degree == 0:
        return a.terms.get((), ZERO)
    total: Scalar = ZERO
    for key, c in a.terms.items():
        m = [[v[i] for v in vectors] for i in key]
        d = det(m)
        if d != 0:
            total = total + c * d
    return total


def forms_basis(n: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations(range(n), k))


def linear_combination(forms: Iterable[KForm], coeffs: Iterable) -> KForm:
    out = None
    for f, c in zip(forms, coeffs):
        term = f.scale(c)
        out = term if out is None else out + term
    if out is None:
        raise ValueError("empty linear combination")
    return out
