"""Hermitian structures on Lie algebras and the predicates built on them.

Conventions:
  * omega(x, y) = g(Jx, y), so omega_ij = (J^T g)_ij.
  * Bismut torsion c = d omega(J., J., J.) and d^c omega = -c.
  * SKT means dc = 0, Kahler means d omega = 0, balanced means
    d(omega^{n-1}) = 0 in real dimension 2n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatch,
    NotCodim2,
    NotCompatible,
    NotComplexStructure,
    NotIntegrable,
    NotInvariant,
    NotMetric,
)
from .exterior import KForm, j_transform, wedge_power
from .liealg import LieAlgebra, Subspace
from .linalg import (
    Endomorphism,
    Vector,
    basis_vector,
    dot,
    inverse,
    is_positive_definite,
)
from .scalar import Scalar, format_scalar

__all__ = [
    "ComplexStructure",
    "Metric",
    "HermitianData",
    "PropertyReport",
    "GKVerdict",
    "GKResult",
    "nijenhuis",
    "is_integrable",
    "fundamental_form",
    "bismut_torsion",
    "dc_form",
    "is_kahler",
    "is_skt",
    "is_balanced",
    "chern_lee",
    "chern_ricci",
    "lee_form",
    "is_generalized_kahler",
    "hj_decomposition",
    "integrability_defect",
    "abelian_skt_conditions",
    "center_obstruction",
    "center_obstruction_vectors",
    "codim2_frame",
    "is_compatible",
    "balanced_form",
    "fundamental_form_of",
    "property_report",
]

ZERO = Fraction(0)
HALF = Fraction(1, 2)


class ComplexStructure:
    """An endomorphism with J^2 = -Id."""

    __slots__ = ("J",)

    def __init__(self, J: Endomorphism):
        if not (J @ J == -Endomorphism.identity(J.n)):
            raise NotComplexStructure("J^2 is not -Id")
        if J.n % 2:
            raise NotComplexStructure("odd dimension cannot carry a complex structure")
        self.J = J

    @classmethod
    def from_pairs(cls, n: int, pairs: dict[int, int | tuple[int, int]]) -> "ComplexStructure":
        """From 1-based images: ``{1: 2}`` means J e_1 = e_2 (hence J e_2 = -e_1).

        A value ``-k`` means J e_i = -e_k.
        """
        images: dict[int, Vector] = {}
        for i, k in pairs.items():
            s = -1 if k < 0 else 1
            k = abs(k)
            if i - 1 in images or k - 1 in images:
                raise NotComplexStructure(f"basis vector appears twice in J pairs ({i}, {k})")
            images[i - 1] = tuple(Fraction(s) * x for x in basis_vector(n, k - 1))
            images[k - 1] = tuple(Fraction(-s) * x for x in basis_vector(n, i - 1))
        if len(images) != n:
            raise NotComplexStructure("J pairs do not cover the whole basis")
        return cls(Endomorphism.from_images(n, images))

    @property
    def n(self) -> int:
        return self.J.n

    def __neg__(self) -> "ComplexStructure":
        return ComplexStructure(-self.J)

    def __eq__(self, other):
        return isinstance(other, ComplexStructure) and self.J == other.J

    def __hash__(self):
        return hash(self.J)

    def __repr__(self):
        return f"ComplexStructure({self.J!r})"


class Metric:
    """Symmetric positive definite bilinear form, as a Gram matrix."""

    __slots__ = ("g",)

    def __init__(self, g: Endomorphism):
        if not g.is_symmetric():
            raise NotMetric("metric matrix is not symmetric")
        if not is_positive_definite(g):
            raise NotMetric("metric matrix is not positive definite")
        self.g = g

    @classmethod
    def identity(cls, n: int) -> "Metric":
        return cls(Endomorphism.identity(n))

    @property
    def n(self) -> int:
        return self.g.n

    def inner(self, x: Sequence, y: Sequence) -> Scalar:
        return dot(x, self.g @ tuple(y))

    def __eq__(self, other):
        return isinstance(other, Metric) and self.g == other.g

    def __hash__(self):
        return hash(self.g)


def _as_endo(x) -> Endomorphism:
    if isinstance(x, ComplexStructure):
        return x.J
    if isinstance(x, Metric):
        return x.g
    return x


def is_compatible(J, g) -> bool:
    J, g = _as_endo(J), _as_endo(g)
    return J.T @ g @ J == g


@dataclass(frozen=True)
class HermitianData:
    algebra: LieAlgebra
    J: ComplexStructure
    g: Metric
    label: str = ""

    def __post_init__(self):
        if not isinstance(self.J, ComplexStructure):
            object.__setattr__(self, "J", ComplexStructure(self.J))
        if not isinstance(self.g, Metric):
            object.__setattr__(self, "g", Metric(self.g))
        if self.J.n != self.algebra.n or self.g.n != self.algebra.n:
            raise DimensionMismatch("J, g and the algebra have different dimensions")
        if not is_compatible(self.J, self.g):
            raise NotCompatible("g(J., J.) != g")

    @property
    def n(self) -> int:
        return self.algebra.n

    def with_algebra(self, L: LieAlgebra) -> "HermitianData":
        return HermitianData(L, self.J, self.g, self.label)


# -- integrability -----------------------------------------------------------


def nijenhuis(L: LieAlgebra, J) -> dict[tuple[int, int], Vector]:
    """Nonzero values N(e_i, e_j), i < j (0-based), with
    N(x,y) = [Jx,Jy] - J[Jx,y] - J[x,Jy] - [x,y]."""
    J = _as_endo(J)
    if J.n != L.n:
        raise DimensionMismatch("J and algebra have different dimensions")
    n = L.n
    cols = [J.column(i) for i in range(n)]
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            ei, ej = basis_vector(n, i), basis_vector(n, j)
            a = L.bracket(cols[i], cols[j])
            b = J @ L.bracket(cols[i], ej)
            c = J @ L.bracket(ei, cols[j])
            d = L.basis_bracket(i, j)
            v = tuple(p - q - r - s for p, q, r, s in zip(a, b, c, d))
            if any(x != 0 for x in v):
                out[(i, j)] = v
    return out


def is_integrable(L: LieAlgebra, J) -> bool:
    return not nijenhuis(L, J)


def _require_integrable(H: HermitianData):
    if not is_integrable(H.algebra, H.J):
        raise NotIntegrable("complex structure is not integrable")


# -- forms -------------------------------------------------------------------


def fundamental_form_of(J, g) -> KForm:
    J, g = _as_endo(J), _as_endo(g)
    m = J.T @ g
    n = m.n
    return KForm(n, 2, {(i, j): m.rows[i][j] for i in range(n) for j in range(i + 1, n)})


def fundamental_form(H: HermitianData) -> KForm:
    return fundamental_form_of(H.J, H.g)


def bismut_torsion(H: HermitianData) -> KForm:
    _require_integrable(H)
    return _torsion(H.algebra, H.J.J, fundamental_form(H))


def _torsion(L: LieAlgebra, J: Endomorphism, omega: KForm) -> KForm:
    return j_transform(J, L.ce_differential(omega))


def dc_form(H: HermitianData) -> KForm:
    return -bismut_torsion(H)


def is_kahler(H: HermitianData) -> bool:
    _require_integrable(H)
    return H.algebra.ce_differential(fundamental_form(H)).is_zero()


def is_skt(H: HermitianData) -> bool:
    return H.algebra.ce_differential(bismut_torsion(H)).is_zero()


def balanced_form(H: HermitianData) -> KForm:
    """d(omega^{n-1})."""
    m = H.n // 2
    return H.algebra.ce_differential(wedge_power(fundamental_form(H), m - 1))


def is_balanced(H: HermitianData) -> bool:
    _require_integrable(H)
    return balanced_form(H).is_zero()


def chern_lee(H_or_L, J=None) -> KForm:
    """eta(Y) = 1/2 (tr(ad_Y o J) - tr ad_{JY}); depends only on (L, J)."""
    if isinstance(H_or_L, HermitianData):
        L, Jm = H_or_L.algebra, H_or_L.J.J
    else:
        L, Jm = H_or_L, _as_endo(J)
    if not is_integrable(L, Jm):
        raise NotIntegrable("complex structure is not integrable")
    n = L.n
    traces = L.trace_form()
    coeffs = []
    for k in range(n):
        t1 = (L.ad_basis(k) @ Jm).trace()
        t2 = dot(Jm.column(k), traces)
        coeffs.append(HALF * (t1 - t2))
    return KForm.from_covector(coeffs)


def chern_ricci(H_or_L, J=None) -> KForm:
    L = H_or_L.algebra if isinstance(H_or_L, HermitianData) else H_or_L
    return L.ce_differential(chern_lee(H_or_L, J))


def lee_form(H: HermitianData) -> KForm:
    """Lee form, vanishing exactly when the structure is balanced.

    theta(X) = 1/2 <sum_i [e_i, J e_i], JX> - tr ad_X over a g-orthonormal
    frame.  The frame sum is the contraction sum_{a,b} (g^-1)_{ab} [e_a, J e_b],
    so no orthonormalization is needed.  The trace term is the mean curvature
    of the group orbits and drops out on unimodular algebras.
    """
    _require_integrable(H)
    L, J, g = H.algebra, H.J.J, H.g.g
    n = L.n
    ginv = inverse(g)
    s = [ZERO] * n
    for a in range(n):
        for b in range(n):
            w = ginv.rows[a][b]
            if w == 0:
                continue
            v = L.bracket(basis_vector(n, a), J.column(b))
            s = [x + w * y for x, y in zip(s, v)]
    # <S, J e_k> = (S^T g J)_k
    gs = g @ tuple(s)
    traces = L.trace_form()
    coeffs = [HALF * dot(gs, J.column(k)) - traces[k] for k in range(n)]
    return KForm.from_covector(coeffs)


# -- generalized Kahler ------------------------------------------------------


class GKVerdict(str, enum.Enum):
    GK_SPLIT = "GK_SPLIT"
    GK_NONSPLIT = "GK_NONSPLIT"
    NOT_GK = "NOT_GK"


@dataclass(frozen=True)
class GKResult:
    verdict: GKVerdict
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict is not GKVerdict.NOT_GK


def is_generalized_kahler(L: LieAlgebra, Jp, Jm, g) -> GKResult:
    Jp, Jm, g = _as_endo(Jp), _as_endo(Jm), _as_endo(g)
    ident = Endomorphism.identity(L.n)
    for tag, J in (("J+", Jp), ("J-", Jm)):
        if not (J @ J == -ident):
            return GKResult(GKVerdict.NOT_GK, f"{tag}: J^2 != -Id")
        if not is_integrable(L, J):
            return GKResult(GKVerdict.NOT_GK, f"{tag}: not integrable")
        if not is_compatible(J, g):
            return GKResult(GKVerdict.NOT_GK, f"{tag}: not compatible with g")
    if not (g.is_symmetric() and is_positive_definite(g)):
        return GKResult(GKVerdict.NOT_GK, "g is not symmetric positive definite")
    cp = _torsion(L, Jp, fundamental_form_of(Jp, g))
    cm = _torsion(L, Jm, fundamental_form_of(Jm, g))
    if cp != -cm:
        return GKResult(GKVerdict.NOT_GK, "c+ != -c-")
    if not L.ce_differential(cp).is_zero():
        return GKResult(GKVerdict.NOT_GK, "dc+ != 0")
    if Jp.commutator(Jm).is_zero():
        return GKResult(GKVerdict.GK_SPLIT)
    return GKResult(GKVerdict.GK_NONSPLIT)


# -- structure relative to an ideal h ----------------------------------------


@dataclass(frozen=True)
class HJDecomposition:
    invariant: bool
    h_J: Subspace
    hJ_is_ideal: bool


def hj_decomposition(L: LieAlgebra, J, h: Subspace) -> HJDecomposition:
    J = _as_endo(J)
    jh = h.image(J)
    inter = h.intersection(jh)
    return HJDecomposition(invariant=(jh == h), h_J=inter, hJ_is_ideal=L.is_ideal(inter))


@dataclass(frozen=True)
class Codim2Frame:
    """U, JU spanning a J-invariant complement of h, plus the blocks on h."""

    h_basis: tuple
    U: Vector
    JU: Vector
    A: Endomorphism  # ad_U restricted to h
    B: Endomorphism  # ad_JU restricted to h
    J_h: Endomorphism
    g_h: Endomorphism | None


def codim2_frame(L: LieAlgebra, J, h: Subspace, g=None) -> Codim2Frame:
    J = _as_endo(J)
    g = _as_endo(g) if g is not None else None
    if L.n - h.dim != 2:
        raise NotCodim2(f"subspace has codimension {L.n - h.dim}, expected 2")
    if h.image(J) != h:
        raise NotInvariant("subspace is not J-invariant")
    if g is not None:
        comp = h.orthogonal_complement(g)
        U = comp.basis[0]
    else:
        U = h.complement_basis()[0]
    JU = J @ U
    hb = list(h.basis)
    A = L.ad(U).restrict(hb)
    B = L.ad(JU).restrict(hb)
    J_h = J.restrict(hb)
    g_h = None
    if g is not None:
        g_h = Endomorphism([[dot(x, g @ y) for y in hb] for x in hb])
    return Codim2Frame(tuple(hb), U, JU, A, B, J_h, g_h)


def integrability_defect(L: LieAlgebra, J, h: Subspace, g=None) -> Endomorphism:
    """[J_h, A] J_h + [J_h, B] in the echelon basis of h.

    This equals -N(U, .) restricted to h, so it vanishes for integrable J
    whatever complement vector U is used.
    """
    f = codim2_frame(L, J, h, g)
    return f.J_h.commutator(f.A) @ f.J_h + f.J_h.commutator(f.B)


def _is_skew(T: Endomorphism, g: Endomorphism) -> bool:
    return (T.T @ g + g @ T).is_zero()


def abelian_skt_conditions(L: LieAlgebra, J, g, h: Subspace) -> bool:
    """A, B are g-skew on h and commute with J_h (U taken g-orthogonal to h)."""
    f = codim2_frame(L, J, h, g)
    return all(
        _is_skew(T, f.g_h) and T.commutator(f.J_h).is_zero() for T in (f.A, f.B)
    )


def center_obstruction(L: LieAlgebra, J, g, h: Subspace) -> list[Scalar]:
    """For each basis vector Z of the center of h, the value

        |AJZ|^2 + |BJZ|^2 + |AZ|^2 + |BZ|^2
          - <AJAJZ, Z> - <JAJAZ, Z> - <BJBJZ, Z> - <JBJBZ, Z>

    with U g-orthogonal to h.  Both this expression and dc(JZ, Z, U, JU)
    scale by |U|^2, so U need not be normalized for the comparison.
    """
    f = codim2_frame(L, J, h, g)
    hl = L.restrict(h)
    z = hl.center()
    gh = f.g_h

    def ip(x, y):
        return dot(x, gh @ tuple(y))

    A, B, Jh = f.A, f.B, f.J_h
    out = []
    for Z in z.basis:
        JZ = Jh @ Z
        val = ZERO
        for v in (A @ JZ, B @ JZ, A @ Z, B @ Z):
            val += ip(v, v)
        for T in (A, B):
            val -= ip(T @ (Jh @ (T @ JZ)), Z)
            val -= ip(Jh @ (T @ (Jh @ (T @ Z))), Z)
        out.append(val)
    return out


def center_obstruction_vectors(L: LieAlgebra, J, g, h: Subspace) -> list[tuple[Vector, Vector, Vector, Vector]]:
    """(JZ, Z, U, JU) in ambient coordinates, matching center_obstruction's order."""
    f = codim2_frame(L, J, h, g)
    hl = L.restrict(h)
    out = []
    for Z in hl.center().basis:
        amb = _embed(f.h_basis, Z)
        out.append((_embed(f.h_basis, f.J_h @ Z), amb, f.U, f.JU))
    return out


def _embed(basis, coords) -> Vector:
    n = len(basis[0])
    v = [ZERO] * n
    for c, b in zip(coords, basis):
        if c != 0:
            v = [x + c * y for x, y in zip(v, b)]
    return tuple(v)


# -- reports -----------------------------------------------------------------


FLAGS = ("integrable", "compatible", "kahler", "skt", "balanced", "chern_ricci_flat")


def _form_witness(f: KForm) -> dict:
    comp, coeff = f.first_nonzero()
    return {"component": list(comp), "coefficient": format_scalar(coeff)}


@dataclass
class PropertyReport:
    label: str = ""
    flags: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, dict] = field(default_factory=dict)

    def __getitem__(self, key):
        return self.flags[key]

    def to_json(self) -> dict:
        out: dict = {"label": self.label}
        for k in FLAGS:
            out[k] = self.flags.get(k)
        out["witnesses"] = self.witnesses
        return out


def property_report(L: LieAlgebra, J, g, label: str = "") -> PropertyReport:
    """Evaluate every flag on (L, J, g); false flags carry a witness.

    Accepts raw endomorphisms so incompatible or non-integrable inputs
    still produce a report instead of raising.
    """
    J, g = _as_endo(J), _as_endo(g)
    rep = PropertyReport(label=label)
    nij = nijenhuis(L, J)
    rep.flags["integrable"] = not nij
    if nij:
        (i, j), v = next(iter(sorted(nij.items())))
        k = next(k for k, x in enumerate(v) if x != 0)
        rep.witnesses["integrable"] = {
            "component": [i + 1, j + 1, k + 1],
            "coefficient": format_scalar(v[k]),
        }
    defect = J.T @ g @ J - g
    rep.flags["compatible"] = defect.is_zero()
    if not rep.flags["compatible"]:
        i, j = next((i, j) for i in range(L.n) for j in range(L.n) if defect.rows[i][j] != 0)
        rep.witnesses["compatible"] = {
            "component": [i + 1, j + 1],
            "coefficient": format_scalar(defect.rows[i][j]),
        }
    if not (rep.flags["integrable"] and rep.flags["compatible"]):
        reason = "NOT_INTEGRABLE" if not rep.flags["integrable"] else "NOT_COMPATIBLE"
        for k in ("kahler", "skt", "balanced"):
            rep.flags[k] = False
            rep.witnesses[k] = {"reason": reason}
        if rep.flags["integrable"]:
            rho = chern_ricci(L, J)
            rep.flags["chern_ricci_flat"] = rho.is_zero()
            if not rho.is_zero():
                rep.witnesses["chern_ricci_flat"] = _form_witness(rho)
        else:
            rep.flags["chern_ricci_flat"] = False
            rep.witnesses["chern_ricci_flat"] = {"reason": reason}
        return rep
    H = HermitianData(L, ComplexStructure(J), Metric(g))
    omega = fundamental_form(H)
    domega = L.ce_differential(omega)
    c = j_transform(J, domega)
    dc = L.ce_differential(c)
    bal = balanced_form(H)
    rho = chern_ricci(L, J)
    for k, f in (("kahler", domega), ("skt", dc), ("balanced", bal), ("chern_ricci_flat", rho)):
        rep.flags[k] = f.is_zero()
        if not f.is_zero():
            rep.witnesses[k] = _form_witness(f)
    return rep
