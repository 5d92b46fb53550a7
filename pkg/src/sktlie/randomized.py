"""Random instance generators for property tests and experiment scripts.

Every generator takes a :class:`random.Random` so runs are reproducible.
Coefficients are small integers, keeping exact arithmetic cheap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .constructions import (
    ExtensionSpec,
    admissible_derivations,
    family_base,
    standard_structure,
)
from .hermitian import ComplexStructure, HermitianData, Metric
from .liealg import LieAlgebra, Subspace, semidirect_product
from .linalg import Endomorphism, det, inverse, kernel
from .nilradical import verify_nilradical
from .scalar import sqrt

__all__ = [
    "random_int_matrix",
    "random_compatible_metric",
    "random_complex_structure",
    "combine",
    "j_commuting_derivations",
    "random_commuting_family",
    "random_extension_spec",
    "Codim2Instance",
    "random_abelian_codim2",
    "random_invariant_codim2",
    "EXTENSION_BASES",
]

ZERO = Fraction(0)

# (rho, gamma, delta) for the four isomorphism types of six-dimensional SKT bases
EXTENSION_BASES = {
    "h2": (0, 0, 1),
    "h8": (0, 0, 0),
    "h4": (1, Fraction(1, 2), sqrt(3) / 2),
    "h5": (1, Fraction(1, 2), Fraction(1, 2)),
}


def random_int_matrix(rng: random.Random, n: int, bound: int = 3) -> Endomorphism:
    return Endomorphism([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])


def random_compatible_metric(rng: random.Random, J: Endomorphism, bound: int = 2) -> Metric:
    """g = M + J^T M J with M = R^T R + Id, always symmetric, PD and J-compatible."""
    n = J.n
    R = random_int_matrix(rng, n, bound)
    M = R.T @ R + Endomorphism.identity(n)
    return Metric(M + J.T @ M @ J)


def random_complex_structure(rng: random.Random, n: int, bound: int = 2) -> ComplexStructure:
    """P J0 P^-1 for a random invertible integer P."""
    J0 = standard_structure(n).J
    while True:
        P = random_int_matrix(rng, n, bound)
        if det(P) != 0:
            return ComplexStructure(P @ J0 @ inverse(P))


def combine(rng: random.Random, basis: Sequence[Endomorphism], bound: int = 3) -> Endomorphism:
    n = basis[0].n
    out = Endomorphism.zero(n)
    for b in basis:
        c = rng.randint(-bound, bound)
        if c:
            out = out + b * Fraction(c)
    return out


def _endo_kernel(rows: list[list], n: int) -> list[Endomorphism]:
    sols = kernel(rows, n * n) if rows else kernel([[ZERO] * (n * n)], n * n)
    return [Endomorphism([list(s[a * n:(a + 1) * n]) for a in range(n)]) for s in sols]


def _commute_rows(M: Endomorphism) -> list[list]:
    """Equations on T (entry T[a][b] at a*n + b) for T M - M T = 0."""
    n = M.n
    rows = []
    for i in range(n):
        for j in range(n):
            row = [ZERO] * (n * n)
            for k in range(n):
                if M.rows[k][j] != 0:
                    row[i * n + k] += M.rows[k][j]
                if M.rows[i][k] != 0:
                    row[k * n + j] -= M.rows[i][k]
            if any(x != 0 for x in row):
                rows.append(row)
    return rows


def j_commuting_derivations(L: LieAlgebra, J: Endomorphism) -> list[Endomorphism]:
    return _endo_kernel(L.derivation_equations() + _commute_rows(J), L.n)


def random_commuting_family(
    rng: random.Random, space: Sequence[Endomorphism], count: int, bound: int = 3
) -> list[Endomorphism]:
    """``count`` pairwise commuting elements of span(space).

    Each new element is drawn from the joint centralizer (inside the span)
    of the ones already chosen.
    """
    if not space:
        raise ValueError("empty endomorphism space")
    n = space[0].n
    chosen: list[Endomorphism] = []
    for _ in range(count):
        if not chosen:
            cand = list(space)
        else:
            # coefficients x with [sum x_i S_i, C] = 0 for every chosen C
            rows = []
            comms = [[S.commutator(C) for S in space] for C in chosen]
            for per_c in comms:
                for a in range(n):
                    for b in range(n):
                        row = [m.rows[a][b] for m in per_c]
                        if any(x != 0 for x in row):
                            rows.append(row)
            if rows:
                sols = kernel(rows, len(space))
            else:
                sols = kernel([[ZERO] * len(space)], len(space))
            cand = []
            for s in sols:
                m = Endomorphism.zero(n)
                for x, S in zip(s, space):
                    if x != 0:
                        m = m + S * x
                cand.append(m)
        chosen.append(combine(rng, cand, bound) if cand else Endomorphism.zero(n))
    return chosen


def random_extension_spec(
    rng: random.Random, base_kind: str | None = None, k: int | None = None
) -> ExtensionSpec:
    """Random valid spec over one of the six-dimensional SKT bases."""
    kind = base_kind or rng.choice(sorted(EXTENSION_BASES))
    base = family_base(*EXTENSION_BASES[kind])
    k = k or rng.choice((1, 2))
    space = admissible_derivations(base)
    theta = random_commuting_family(rng, space, 2 * k)
    return ExtensionSpec(base, tuple(theta))


@dataclass(frozen=True)
class Codim2Instance:
    algebra: LieAlgebra
    J: ComplexStructure
    g: Metric
    h: Subspace

    @property
    def hermitian(self) -> HermitianData:
        return HermitianData(self.algebra, self.J, self.g)


def _complex_scalar_block(x, y) -> Endomorphism:
    return Endomorphism([[x, -y], [y, x]])


def random_abelian_codim2(
    rng: random.Random,
    pairs: int = 2,
    skew: bool | None = None,
    bound: int = 3,
    max_tries: int = 50,
) -> Codim2Instance:
    """Abelian h = R^{2p} with commuting, J_h-commuting A, B.

    With ``skew`` the blocks are pure rotations and the metric is the
    identity, so the abelian SKT conditions hold; otherwise the blocks get
    real parts, a random complex-linear change of basis and a random
    compatible metric, and the conditions typically fail.
    """
    m = 2 * pairs
    Jh = standard_structure(m).J
    for _ in range(max_tries):
        is_skew = rng.random() < 0.5 if skew is None else skew
        Ab, Bb = [], []
        for _p in range(pairs):
            xa = 0 if is_skew else rng.randint(-bound, bound)
            xb = 0 if is_skew else rng.randint(-bound, bound)
            Ab.append(_complex_scalar_block(xa, rng.randint(-bound, bound)))
            Bb.append(_complex_scalar_block(xb, rng.randint(-bound, bound)))
        A = Endomorphism.block_diag(*Ab)
        B = Endomorphism.block_diag(*Bb)
        if not is_skew:
            # random complex-linear change of basis keeps [.,J_h] = 0 and [A,B] = 0
            blocks = [
                _complex_scalar_block(rng.randint(-bound, bound), rng.randint(-bound, bound))
                for _ in range(pairs * pairs)
            ]
            P = Endomorphism(
                [
                    [blocks[(i // 2) * pairs + (j // 2)].rows[i % 2][j % 2] for j in range(m)]
                    for i in range(m)
                ]
            )
            if det(P) == 0:
                continue
            Pi = inverse(P)
            A, B = P @ A @ Pi, P @ B @ Pi
        h = LieAlgebra.abelian(m)
        V = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(m))
        try:
            L = semidirect_product(h, [A, B], extra={(0, 1): V})
        except ValueError:
            continue
        n = m + 2
        J = Endomorphism.block_diag(Jh, standard_structure(2).J)
        g = Metric.identity(n) if is_skew else random_compatible_metric(rng, J)
        hs = Subspace.span_of_basis(n, range(m))
        if not L.is_solvable() or not verify_nilradical(L, hs).ok:
            continue
        return Codim2Instance(L, ComplexStructure(J), g, hs)
    raise RuntimeError("could not generate an abelian codimension-2 instance")


def random_invariant_codim2(
    rng: random.Random, base_kind: str | None = None, bound: int = 2, max_tries: int = 50
) -> Codim2Instance:
    """Nilpotent h (abelian R^4 or a six-dimensional SKT base) extended by two
    J_h-commuting derivations A, B with [A, B] = ad_V|_h, V central in h.

    J is block-diagonal, hence integrable, and h is J-invariant; instances
    where h fails to be the nilradical are redrawn.
    """
    for _ in range(max_tries):
        kind = base_kind or rng.choice(["abelian4", *sorted(EXTENSION_BASES)])
        if kind == "abelian4":
            h = LieAlgebra.abelian(4)
            Jh = standard_structure(4).J
        else:
            hd = family_base(*EXTENSION_BASES[kind])
            h, Jh = hd.algebra, hd.J.J
        space = j_commuting_derivations(h, Jh)
        A, B = random_commuting_family(rng, space, 2, bound)
        z = h.center()
        V = tuple(ZERO for _ in range(h.n))
        for v in z.basis:
            c = rng.randint(-bound, bound)
            V = tuple(a + c * b for a, b in zip(V, v))
        L = semidirect_product(h, [A, B], extra={(0, 1): V})
        n = h.n + 2
        J = Endomorphism.block_diag(Jh, standard_structure(2).J)
        hs = Subspace.span_of_basis(n, range(h.n))
        if not verify_nilradical(L, hs).ok:
            continue
        g = random_compatible_metric(rng, J)
        return Codim2Instance(L, ComplexStructure(J), g, hs)
    raise RuntimeError("could not generate a codimension-2 instance")
