"""Certify that a candidate subspace is the nilradical (codimension <= 2).

Setting: g solvable and h a nilpotent ideal containing [g, g].  Any x outside
h with ad_x|_h nilpotent spans, together with h, a strictly larger nilpotent
ideal; conversely a larger nilpotent ideal contains such an x (Engel).  So
once the cheap checks pass, h is the nilradical iff no nonzero direction in
a complement acts nilpotently on h.

For codimension 2 the directions are [a:b] and the characteristic polynomial
of a*A_1 + b*A_2 has coefficients that are binary forms in (a, b).  We
test [1:0] directly and decide the affine chart (t, 1) through the gcd of
the coefficient polynomials p_k(t).
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotSolvable, UnsupportedCodim
from .liealg import LieAlgebra, Subspace
from .linalg import (
    Endomorphism,
    Vector,
    charpoly,
    is_nilpotent_matrix,
    poly_gcd,
    poly_interpolate,
    poly_trim,
    sturm_real_root_count,
)
from .scalar import QuadSurd, format_scalar

__all__ = ["Verdict", "NilradicalResult", "verify_nilradical", "spot_check_directions"]


class Verdict(str, enum.Enum):
    IS_NILRADICAL = "IS_NILRADICAL"
    NOT_IDEAL = "NOT_IDEAL"
    NOT_NILPOTENT = "NOT_NILPOTENT"
    MISSES_DERIVED = "MISSES_DERIVED"
    LARGER_NILPOTENT_IDEAL = "LARGER_NILPOTENT_IDEAL"


GCD_TOKEN = "nonconstant gcd of minor forms"


@dataclass(frozen=True)
class NilradicalResult:
    verdict: Verdict
    witness: Vector | None = None  # direction x outside h with ad_x|_h nilpotent
    certificate: str | None = None
    gcd: tuple = ()  # coefficients (low -> high) of the gcd polynomial, if computed
    complement: tuple = ()
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict is Verdict.IS_NILRADICAL

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict.value}
        if self.witness is not None:
            out["witness"] = [format_scalar(x) for x in self.witness]
        if self.certificate:
            out["certificate"] = self.certificate
        if self.gcd:
            out["gcd"] = [format_scalar(x) for x in self.gcd]
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _restricted_ads(L: LieAlgebra, h: Subspace, us) -> list[Endomorphism]:
    return [L.ad(u).restrict(list(h.basis)) for u in us]


def _combo(a, x: Vector, b, y: Vector) -> Vector:
    return tuple(a * p + b * q for p, q in zip(x, y))


def _rational_roots(p: list) -> list[Fraction]:
    """Rational roots of an exact polynomial (coefficients low -> high)."""
    p = poly_trim(p)
    if len(p) == 2:
        return [-p[0] / p[1]]
    if any(isinstance(c, QuadSurd) for c in p):
        return []
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**k for k, c in enumerate(p))
    roots = sympy.Poly(expr, t).ground_roots()
    return sorted(Fraction(int(r.p), int(r.q)) for r in roots)


def verify_nilradical(L: LieAlgebra, h: Subspace) -> NilradicalResult:
    if h.n != L.n:
        raise ValueError("candidate lives in a different dimension")
    if not L.is_solvable():
        raise NotSolvable("algebra is not solvable")
    codim = L.n - h.dim
    if codim > 2:
        raise UnsupportedCodim(f"candidate has codimension {codim}; only <= 2 is supported")
    if not L.is_ideal(h):
        return NilradicalResult(Verdict.NOT_IDEAL)
    if not L.is_nilpotent(h):
        return NilradicalResult(Verdict.NOT_NILPOTENT)
    if not h.contains_space(L.derived_algebra()):
        return NilradicalResult(Verdict.MISSES_DERIVED)
    if codim == 0:
        return NilradicalResult(Verdict.IS_NILRADICAL)

    us = h.complement_basis()
    if h.dim == 0:
        # ad on the zero ideal is trivially nilpotent
        return NilradicalResult(
            Verdict.LARGER_NILPOTENT_IDEAL, witness=us[0], complement=tuple(us)
        )
    mats = _restricted_ads(L, h, us)
    if is_nilpotent_matrix(mats[0]):
        return NilradicalResult(
            Verdict.LARGER_NILPOTENT_IDEAL, witness=us[0], complement=tuple(us)
        )
    if codim == 1:
        return NilradicalResult(Verdict.IS_NILRADICAL, complement=tuple(us))

    a1, a2 = mats
    m = h.dim
    ts = [Fraction(k) for k in range(m + 1)]
    samples = [charpoly(a1 * t + a2) for t in ts]
    coeff_polys = [poly_interpolate(ts, [s[k] for s in samples]) for k in range(m)]
    g: list = []
    for p in coeff_polys:
        g = poly_gcd(g, p)
        if len(g) == 1:
            break
    if not g:
        # every direction (t, 1) is nilpotent
        return NilradicalResult(
            Verdict.LARGER_NILPOTENT_IDEAL, witness=us[1], complement=tuple(us)
        )
    if len(g) == 1:
        return NilradicalResult(Verdict.IS_NILRADICAL, gcd=tuple(g), complement=tuple(us))

    roots = _rational_roots(g)
    if roots:
        w = _combo(roots[0], us[0], 1, us[1])
        return NilradicalResult(
            Verdict.LARGER_NILPOTENT_IDEAL,
            witness=w,
            certificate=GCD_TOKEN,
            gcd=tuple(g),
            complement=tuple(us),
        )
    if sturm_real_root_count(g) > 0:
        return NilradicalResult(
            Verdict.LARGER_NILPOTENT_IDEAL,
            certificate=GCD_TOKEN,
            gcd=tuple(g),
            complement=tuple(us),
            notes=["bad direction is real but irrational"],
        )
    return NilradicalResult(
        Verdict.IS_NILRADICAL,
        gcd=tuple(g),
        complement=tuple(us),
        notes=["gcd of minor forms has only non-real roots; no real bad direction"],
    )


def spot_check_directions(
    L: LieAlgebra, h: Subspace, count: int = 1000, seed: int = 0, bound: int = 50
) -> Vector | None:
    """Return a random complement direction acting nilpotently on h, or None."""
    rng = random.Random(seed)
    us = h.complement_basis()
    mats = _restricted_ads(L, h, us)
    for _ in range(count):
        coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in us]
        if all(c == 0 for c in coeffs):
            continue
        m = mats[0] * coeffs[0]
        for c, a in zip(coeffs[1:], mats[1:]):
            m = m + a * c
        if is_nilpotent_matrix(m):
            v = us[0]
            v = tuple(coeffs[0] * x for x in v)
            for c, u in zip(coeffs[1:], us[1:]):
                v = tuple(x + c * y for x, y in zip(v, u))
            return v
    return None
