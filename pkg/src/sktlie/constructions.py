"""Constructions: abelian SKT extensions, the 6-dimensional nilpotent SKT
family, the g^{2n} family, and direct sums."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ExtensionError, SKTLieError
from .exterior import KForm
from .hermitian import (
    ComplexStructure,
    HermitianData,
    Metric,
    _is_skew,
    is_integrable,
    is_skt,
)
from .liealg import LieAlgebra, semidirect_product
from .linalg import Endomorphism, kernel
from .scalar import Scalar, as_scalar, sign

__all__ = [
    "ExtensionSpec",
    "skt_extension",
    "admissible_derivations",
    "nilpotent_family",
    "family_label",
    "family_base",
    "standard_structure",
    "g2n_family",
    "g2n_split_pair",
    "g2n_nonsplit_pair",
    "direct_sum",
    "rotation_block_theta",
]

ZERO = Fraction(0)
ONE = Fraction(1)


def standard_structure(n: int) -> ComplexStructure:
    """J e_{2i-1} = e_{2i}."""
    return ComplexStructure.from_pairs(n, {2 * i + 1: 2 * i + 2 for i in range(n // 2)})


@dataclass(frozen=True)
class ExtensionSpec:
    """Base Hermitian data and theta(U_1), theta(J U_1), ..., theta(J U_k)."""

    base: HermitianData
    theta: tuple

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(self.theta))

    @property
    def k(self) -> int:
        return len(self.theta) // 2

    def validate(self) -> None:
        h = self.base.algebra
        J, g = self.base.J.J, self.base.g.g
        omega_mat = J.T @ g
        if not self.theta or len(self.theta) % 2:
            raise ExtensionError("BAD_THETA_COUNT", "theta needs 2k >= 2 endomorphisms")
        if not h.is_nilpotent():
            raise ExtensionError("BASE_NOT_NILPOTENT", "base algebra is not nilpotent")
        if not (is_integrable(h, J) and is_skt(self.base)):
            raise ExtensionError("BASE_NOT_SKT", "base Hermitian structure is not SKT")
        for i, t in enumerate(self.theta):
            if t.n != h.n:
                raise ExtensionError("DIMENSION_MISMATCH", f"theta[{i}] has size {t.n}", index=i)
            if not h.is_derivation(t):
                raise ExtensionError("NOT_DERIVATION", f"theta[{i}] is not a derivation", index=i)
            if not _is_skew(t, g):
                raise ExtensionError("NOT_SKEW", f"theta[{i}] is not skew for the metric", index=i)
            if not _is_skew(t, omega_mat):
                raise ExtensionError(
                    "NOT_SYMPLECTIC", f"theta[{i}] is not skew for the fundamental form", index=i
                )
        for i in range(len(self.theta)):
            for j in range(i + 1, len(self.theta)):
                if not self.theta[i].commutator(self.theta[j]).is_zero():
                    raise ExtensionError(
                        "NOT_COMMUTING", f"theta[{i}] and theta[{j}] do not commute", pair=(i, j)
                    )


def skt_extension(spec: ExtensionSpec, name: str = "") -> HermitianData:
    """h semidirect R^{2k} with block-diagonal J and product metric; SKT by construction."""
    spec.validate()
    base = spec.base
    m = len(spec.theta)
    L = semidirect_product(base.algebra, list(spec.theta), name=name)
    J = Endomorphism.block_diag(base.J.J, standard_structure(m).J)
    g = Endomorphism.block_diag(base.g.g, Endomorphism.identity(m))
    H = HermitianData(L, ComplexStructure(J), Metric(g), label=name)
    if not is_skt(H):  # holds by construction; a failure is a bug here
        raise SKTLieError("extension is not SKT")
    return H


def admissible_derivations(base: HermitianData) -> list[Endomorphism]:
    """Basis of derivations T of the base with T g-skew and T omega-skew."""
    L = base.algebra
    n = L.n
    J, g = base.J.J, base.g.g
    omega = J.T @ g
    rows = L.derivation_equations()
    # T^T M + M T = 0 for M in (g, omega); unknown T[a][b] at a*n + b
    for M in (g, omega):
        for i in range(n):
            for j in range(i, n):
                row = [ZERO] * (n * n)
                for a in range(n):
                    # (T^T M)_ij = sum_a T[a][i] M[a][j]; (M T)_ij = sum_a M[i][a] T[a][j]
                    if M.rows[a][j] != 0:
                        row[a * n + i] += M.rows[a][j]
                    if M.rows[i][a] != 0:
                        row[a * n + j] += M.rows[i][a]
                if any(x != 0 for x in row):
                    rows.append(row)
    sols = kernel(rows, n * n)
    return [Endomorphism([list(s[a * n:(a + 1) * n]) for a in range(n)]) for s in sols]


# -- six-dimensional nilpotent family ----------------------------------------


def family_label(rho, gamma, delta) -> str:
    rho, gamma, delta = as_scalar(rho), as_scalar(gamma), as_scalar(delta)
    if rho == 0 and gamma == 0:
        return "h2" if delta != 0 else "h8"
    if rho == 1 and gamma == Fraction(1, 2):
        s = sign(4 * delta * delta - 3)
        return {1: "h2", 0: "h4", -1: "h5"}[s]
    return "none"


def nilpotent_family(rho, gamma, delta) -> tuple[LieAlgebra, str]:
    """de^1..de^4 = 0, de^5 = rho e13 - rho e24 + 2 delta e34,
    de^6 = rho e23 + rho e14 - 2 e12 - 2 gamma e34."""
    rho, gamma, delta = as_scalar(rho), as_scalar(gamma), as_scalar(delta)
    if rho not in (0, 1):
        raise ValueError("rho must be 0 or 1")
    n = 6
    z = KForm.zero(n, 2)
    de5 = KForm(n, 2, {(0, 2): rho, (1, 3): -rho, (2, 3): 2 * delta})
    de6 = KForm(n, 2, {(1, 2): rho, (0, 3): rho, (0, 1): -2, (2, 3): -2 * gamma})
    L = LieAlgebra.from_differentials([z, z, z, z, de5, de6])
    return L, family_label(rho, gamma, delta)


def family_base(rho, gamma, delta) -> HermitianData:
    """The family with its standard SKT structure (J e1=e2, e3=e4, e5=e6; g = Id)."""
    L, label = nilpotent_family(rho, gamma, delta)
    return HermitianData(L, standard_structure(6), Metric.identity(6), label=label)


def rotation_block_theta(n: int, blocks: dict[int, Scalar]) -> Endomorphism:
    """Block-diagonal endomorphism with [[0, c], [-c, 0]] on the pair (2p+1, 2p+2)
    (1-based) for each ``p: c`` in ``blocks``."""
    rows = [[ZERO] * n for _ in range(n)]
    for p, c in blocks.items():
        c = as_scalar(c)
        i, j = 2 * p, 2 * p + 1
        rows[i][j] = c
        rows[j][i] = -c
    return Endomorphism(rows)


# -- g^{2n} family -----------------------------------------------------------


def g2n_family(n: int, b, c, c2) -> LieAlgebra:
    """2n-dimensional family with codimension-2 abelian nilradical span(e_1..e_{2n-2}).

    de1 = -e1 ^ e_{2n-1}
    de2 = 1/2 e2 ^ e_{2n-1} + b e3 ^ e_{2n-1} - c e3 ^ e_{2n}
    de3 = -b e2 ^ e_{2n-1} + 1/2 e3 ^ e_{2n-1} + c e2 ^ e_{2n}
    de_{2l} = c2 e_{2l+1} ^ e_{2n}, de_{2l+1} = -c2 e_{2l} ^ e_{2n}  (l = 2..n-2)
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    b, c, c2 = as_scalar(b), as_scalar(c), as_scalar(c2)
    if b == 0 or c == 0 or c2 == 0:
        raise ValueError("parameters b, c, c' must be nonzero")
    N = 2 * n
    p, q = N - 2, N - 1  # 0-based indices of e_{2n-1}, e_{2n}
    half = Fraction(1, 2)

    def f(d):
        return KForm(N, 2, d)

    forms = [KForm.zero(N, 2) for _ in range(N)]
    forms[0] = f({(0, p): -1})
    forms[1] = f({(1, p): half, (2, p): b, (2, q): -c})
    forms[2] = f({(1, p): -b, (2, p): half, (1, q): c})
    for l in range(2, n - 1):
        i, j = 2 * l - 1, 2 * l  # e_{2l}, e_{2l+1}
        forms[i] = f({(j, q): c2})
        forms[j] = f({(i, q): -c2})
    return LieAlgebra.from_differentials(forms, name=f"g2n_n{n}")


def _g2n_common_pairs(n: int) -> dict[int, int]:
    pairs = {2 * l: 2 * l + 1 for l in range(2, n - 1)}
    pairs[2 * n - 2] = 2 * n
    return pairs


def g2n_split_pair(n: int) -> tuple[ComplexStructure, ComplexStructure]:
    """I_pm: e1 -> e_{2n-1}, e2 -> pm e3, e_{2l} -> e_{2l+1}, e_{2n-2} -> e_{2n}."""
    out = []
    for s in (1, -1):
        pairs = {1: 2 * n - 1, 2: 3 * s}
        pairs.update(_g2n_common_pairs(n))
        out.append(ComplexStructure.from_pairs(2 * n, pairs))
    return out[0], out[1]


def g2n_nonsplit_pair(n: int) -> tuple[ComplexStructure, ComplexStructure]:
    """Non-commuting pair for n >= 5.

    I_+: e1 -> e_{2n-1}, e2 -> e3, e4 -> e5, e6 -> -e7, e_{2l} -> e_{2l+1} (l >= 4),
         e_{2n-2} -> e_{2n}
    I_-: e1 -> e_{2n-1}, e2 -> -e3, e4 -> -e7, e5 -> e6, same tail.
    """
    if n < 5:
        raise ValueError("the non-split pair needs n >= 5")
    tail = {2 * l: 2 * l + 1 for l in range(4, n - 1)}
    tail[2 * n - 2] = 2 * n
    plus = {1: 2 * n - 1, 2: 3, 4: 5, 6: -7}
    minus = {1: 2 * n - 1, 2: -3, 4: -7, 5: 6}
    plus.update(tail)
    minus.update(tail)
    return ComplexStructure.from_pairs(2 * n, plus), ComplexStructure.from_pairs(2 * n, minus)


# -- direct sums -------------------------------------------------------------


def direct_sum(*algebras: LieAlgebra, name: str = "") -> LieAlgebra:
    br: dict = {}
    off = 0
    labels = []
    for L in algebras:
        for (i, j), vals in L.structure_constants().items():
            br[(i + off, j + off)] = {k + off: c for k, c in vals.items()}
        labels.extend(L.labels)
        off += L.n
    return LieAlgebra(off, br, labels=labels, name=name, validate=False)
