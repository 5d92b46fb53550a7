"""Named algebras and Hermitian structures with their expected properties.

Each expected value carries a provenance tag:

* ``PAPER``: stated for this structure in the source literature,
* ``TRIVIAL``: immediate from the definitions,
* ``DERIVED``: obtained by a hand computation or an independent oracle and frozen.

Parameterized entries take rational (or quadratic-surd) overrides; defaults
are nonzero so the nilradical claims hold.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .constructions import (
    ExtensionSpec,
    family_base,
    g2n_family,
    g2n_nonsplit_pair,
    g2n_split_pair,
    rotation_block_theta,
    skt_extension,
    standard_structure,
)
from .dsl import format_form, parse_form, parse_structure, serialize
from .errors import SKTLieError
from .exterior import KForm
from .hermitian import (
    ComplexStructure,
    HermitianData,
    Metric,
    bismut_torsion,
    chern_lee,
    chern_ricci,
    dc_form,
    fundamental_form,
    lee_form,
)
from .hermitian_io import HermitianFile, dump_hermitian
from .liealg import LieAlgebra
from .linalg import Endomorphism
from .report import build_report
from .scalar import Scalar, as_scalar, format_scalar, parse_scalar, sqrt

__all__ = [
    "Provenance",
    "Expect",
    "StructureSpec",
    "GKSpec",
    "CatalogEntry",
    "CatalogResult",
    "UnknownEntry",
    "catalog_list",
    "catalog_entry",
    "catalog_defaults",
    "catalog_check",
    "catalog_check_all",
    "TENSORS",
]


class Provenance(str, enum.Enum):
    PAPER = "PAPER"
    TRIVIAL = "TRIVIAL"
    DERIVED = "DERIVED"


PAPER, TRIVIAL, DERIVED = Provenance.PAPER, Provenance.TRIVIAL, Provenance.DERIVED


@dataclass(frozen=True)
class Expect:
    value: object
    provenance: Provenance
    note: str = ""


class UnknownEntry(SKTLieError, KeyError):
    code = "UNKNOWN_ENTRY"


TENSORS: dict[str, Callable[[HermitianData], KForm]] = {
    "fundamental_form": fundamental_form,
    "bismut_torsion": bismut_torsion,
    "dc_form": dc_form,
    "chern_lee": chern_lee,
    "chern_ricci": chern_ricci,
    "lee_form": lee_form,
}


@dataclass
class StructureSpec:
    label: str
    J: ComplexStructure
    g: Metric
    flags: dict[str, Expect] = field(default_factory=dict)
    tensors: dict[str, Expect] = field(default_factory=dict)  # values are DSL form text


@dataclass
class GKSpec:
    label: str
    Jp: ComplexStructure
    Jm: ComplexStructure
    g: Metric
    verdict: Expect


@dataclass
class CatalogEntry:
    name: str
    description: str
    algebra: LieAlgebra
    letter: str = "e"
    params: dict[str, Scalar] = field(default_factory=dict)
    structures: list[StructureSpec] = field(default_factory=list)
    gk: list[GKSpec] = field(default_factory=list)
    nilradical: tuple[int, ...] | None = None  # 1-based basis indices
    nilradical_verdict: Expect | None = None
    unimodular: Expect | None = None

    @property
    def n(self) -> int:
        return self.algebra.n

    def hermitian(self, label: str | None = None) -> HermitianData:
        for s in self.structures:
            if label is None or s.label == label:
                return HermitianData(self.algebra, s.J, s.g, label=s.label)
        raise KeyError(label)

    def hermitian_file(self) -> HermitianFile:
        return HermitianFile(
            structures=[(s.label, s.J, s.g) for s in self.structures],
            gk=[(k.label, k.Jp, k.Jm, k.g) for k in self.gk],
        )

    def metadata(self) -> dict[str, str]:
        meta = {"name": self.name}
        if self.params:
            meta["params"] = ", ".join(f"{k}={format_scalar(v)}" for k, v in self.params.items())
        if self.nilradical is not None:
            meta["nilradical"] = ",".join(str(i) for i in self.nilradical)
        return meta

    def to_dsl(self) -> str:
        return serialize(self.algebra, self.metadata(), letter=self.letter)

    def hermitian_json(self) -> dict:
        return dump_hermitian(self.hermitian_file())

    def expectations(self):
        """Yield (where, expectation) for every expected value, for auditing provenance."""
        if self.unimodular is not None:
            yield "unimodular", self.unimodular
        if self.nilradical_verdict is not None:
            yield "nilradical", self.nilradical_verdict
        for s in self.structures:
            for k, e in s.flags.items():
                yield f"{s.label}.{k}", e
            for k, e in s.tensors.items():
                yield f"{s.label}.{k}", e
        for k in self.gk:
            yield f"{k.label}.gk", k.verdict


@dataclass
class CatalogResult:
    name: str
    report: dict
    mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "mismatches": self.mismatches, "report": self.report}


# -- helpers -----------------------------------------------------------------


def _J(n: int, pairs: dict[int, int]) -> ComplexStructure:
    return ComplexStructure.from_pairs(n, pairs)


def _I(n: int) -> Metric:
    return Metric.identity(n)


def _flags(**kw) -> dict[str, Expect]:
    return {k: (v if isinstance(v, Expect) else Expect(*v)) for k, v in kw.items()}


def _nonzero(params: Mapping[str, Scalar], *names: str):
    for k in names:
        if params[k] == 0:
            raise ValueError(f"parameter {k} must be nonzero")


def _indices(a: int, b: int) -> tuple[int, ...]:
    return tuple(range(a, b + 1))


# -- entry builders ----------------------------------------------------------


def _tau30_x_tau30(p) -> CatalogEntry:
    L = parse_structure("(-f25, f15, -f46, f36, 0, 0)")
    J = _J(6, {1: 2, 3: 4, 5: 6})
    s = StructureSpec(
        "J",
        J,
        _I(6),
        _flags(
            integrable=(True, PAPER),
            compatible=(True, TRIVIAL),
            skt=(True, PAPER),
            kahler=(True, DERIVED, "d(f12+f34+f56) = 0 by Leibniz"),
            balanced=(True, DERIVED, "Kahler implies balanced"),
            chern_ricci_flat=(True, PAPER, "J-invariant codimension-2 nilradical"),
        ),
        {"fundamental_form": Expect("f12+f34+f56", DERIVED, "g(J.,.) on basis pairs")},
    )
    return CatalogEntry(
        "tau30_x_tau30",
        "tau_{3,0} x tau_{3,0}, unimodular with J-invariant abelian nilradical",
        L,
        letter="f",
        structures=[s],
        gk=[GKSpec("J+/J-", J, -J, _I(6), Expect("GK_SPLIT", PAPER))],
        nilradical=_indices(1, 4),
        nilradical_verdict=Expect("IS_NILRADICAL", DERIVED, "f5, f6 act by rotations"),
        unimodular=Expect(True, PAPER),
    )


def _g5_35_R(p) -> CatalogEntry:
    L = parse_structure("(2*f15, -f25-f36, -f35+f26, 0, 0, 0)")
    J = _J(6, {1: 5, 2: 3, 4: 6})
    s = StructureSpec(
        "J",
        J,
        _I(6),
        _flags(
            integrable=(True, PAPER),
            compatible=(True, TRIVIAL),
            skt=(True, PAPER),
            kahler=(False, DERIVED, "d omega = 2 f235"),
            balanced=(False, DERIVED, "nonzero Lee form, cross-checked against d(omega^2)"),
            chern_ricci_flat=(False, DERIVED, "eta^Ch = -f1 - f6, so rho^Ch = -2 f15"),
        ),
        {"fundamental_form": Expect("f15+f23+f46", DERIVED, "g(J.,.) on basis pairs")},
    )
    Jp, Jm = _J(6, {1: 5, 2: 3, 4: 6}), _J(6, {1: 5, 2: -3, 4: 6})
    return CatalogEntry(
        "g5_35_R",
        "g_{5.35}^{-2,0} + R, unimodular with non-J-invariant abelian nilradical",
        L,
        letter="f",
        structures=[s],
        gk=[GKSpec("J+/J-", Jp, Jm, _I(6), Expect("GK_SPLIT", PAPER))],
        nilradical=_indices(1, 4),
        nilradical_verdict=Expect("IS_NILRADICAL", DERIVED, "no common zero of the minor forms"),
        unimodular=Expect(True, DERIVED, "trace ad f5 = 2 - 1 - 1"),
    )


def _s3_remark(p) -> CatalogEntry:
    L = parse_structure(
        "(e23+e17, 1/2*e27, 1/2*e37, -e48, 1/2*e58-e67, 1/2*e68+e57, 0, 0)"
    )
    Ip = _J(8, {1: 7, 2: 3, 5: 6, 4: 8})
    Im = _J(8, {1: 7, 2: 3, 5: -6, 4: 8})
    structures = [
        StructureSpec(
            "I+",
            Ip,
            _I(8),
            _flags(integrable=(True, PAPER), compatible=(True, TRIVIAL), skt=(True, PAPER)),
            {
                "fundamental_form": Expect("e17+e23+e48+e56", PAPER),
                "dc_form": Expect("e456", PAPER),
            },
        ),
        StructureSpec(
            "I-",
            Im,
            _I(8),
            _flags(integrable=(True, PAPER), compatible=(True, TRIVIAL), skt=(True, PAPER)),
            {
                "fundamental_form": Expect("e17+e23+e48-e56", PAPER),
                "dc_form": Expect("-e456", PAPER),
            },
        ),
    ]
    return CatalogEntry(
        "s3_remark",
        "(h3 + R^3) x R^2, non-unimodular GK example with non-invariant 2-step nilradical",
        L,
        structures=structures,
        gk=[GKSpec("I+/I-", Ip, Im, _I(8), Expect("GK_SPLIT", DERIVED, "[I+, I-] = 0"))],
        nilradical=_indices(1, 6),
        nilradical_verdict=Expect("IS_NILRADICAL", PAPER),
        unimodular=Expect(False, PAPER),
    )


def _g8_b(p) -> CatalogEntry:
    b = p["b"]
    _nonzero(p, "b")
    L = LieAlgebra(
        8,
        {
            (0, 6): {1: b},
            (1, 6): {0: -b},
            (2, 7): {3: b},
            (3, 7): {2: -b},
            (6, 7): {4: Fraction(1), 5: Fraction(1)},
        },
        name="g8_b",
    )
    J = _J(8, {1: 2, 3: 4, 5: 6, 7: 8})
    s = StructureSpec(
        "J",
        J,
        _I(8),
        _flags(
            integrable=(True, PAPER),
            compatible=(True, TRIVIAL),
            skt=(True, PAPER),
            chern_ricci_flat=(True, PAPER),
            kahler=(False, PAPER, "no Kahler metric exists for this J"),
        ),
    )
    return CatalogEntry(
        "g8_b",
        "8-dimensional SKT algebra with J-invariant abelian nilradical and [U,JU] != 0",
        L,
        params=dict(p),
        structures=[s],
        nilradical=_indices(1, 6),
        nilradical_verdict=Expect("IS_NILRADICAL", PAPER),
        unimodular=Expect(True, DERIVED, "ad e7, ad e8 are rotations"),
    )


def _extension_entry(name, desc, base, thetas, nil, nil_prov, params, extra_flags=None):
    H = skt_extension(ExtensionSpec(base, tuple(thetas)), name=name)
    flags = dict(
        integrable=Expect(True, PAPER),
        compatible=Expect(True, TRIVIAL),
        skt=Expect(True, PAPER),
    )
    flags.update(extra_flags or {})
    s = StructureSpec("J", H.J, H.g, flags)
    return CatalogEntry(
        name,
        desc,
        H.algebra,
        letter="f",
        params=dict(params),
        structures=[s],
        nilradical=nil,
        nilradical_verdict=Expect("IS_NILRADICAL", nil_prov),
        unimodular=Expect(True, DERIVED, "theta consists of rotations"),
    )


_S1_NIL = (1, 2, 3, 4, 5, 6, 8)  # theta(JU) = 0 makes f8 central


def _s_single(name, rho, gamma, delta, p, label):
    a = p["a"]
    base = family_base(rho, gamma, delta)
    theta = [rotation_block_theta(6, {0: a, 1: -a}), Endomorphism.zero(6)]
    return _extension_entry(
        name,
        f"extension of {label} by one rotation pair",
        base,
        theta,
        _S1_NIL,
        DERIVED,
        p,
    )


def _s1(p):
    _nonzero(p, "a", "delta")
    return _s_single("s1", 0, 0, p["delta"], p, "h2")


def _s2(p):
    _nonzero(p, "a")
    return _s_single("s2", 0, 0, 0, p, "h8")


def _s3(p):
    _nonzero(p, "a")
    if 4 * p["delta"] ** 2 <= 3:
        raise ValueError("s3 needs 4 delta^2 > 3")
    return _s_single("s3", 1, Fraction(1, 2), p["delta"], p, "h2")


def _s4(p):
    _nonzero(p, "a")
    return _s_single("s4", 1, Fraction(1, 2), sqrt(3) / 2, p, "h4")


def _s5(p):
    _nonzero(p, "a")
    if 4 * p["delta"] ** 2 >= 3:
        raise ValueError("s5 needs 4 delta^2 < 3")
    return _s_single("s5", 1, Fraction(1, 2), p["delta"], p, "h5")


def _s_double(name, delta, p, label):
    _nonzero(p, "a", "b")
    base = family_base(0, 0, delta)
    theta = [rotation_block_theta(6, {0: p["a"]}), rotation_block_theta(6, {1: p["b"]})]
    extra = dict(
        balanced=Expect(False, PAPER, "no balanced metric for this J"),
        kahler=Expect(False, DERIVED, "Kahler would be balanced"),
        chern_ricci_flat=Expect(True, PAPER, "J-invariant codimension-2 nilradical"),
    )
    return _extension_entry(
        name,
        f"extension of {label} by two commuting rotations, nilradical {label}",
        base,
        theta,
        _indices(1, 6),
        PAPER,
        p,
        extra,
    )


def _s6(p):
    _nonzero(p, "delta")
    return _s_double("s6", p["delta"], p, "h2")


def _s7(p):
    return _s_double("s7", 0, p, "h8")


def _s8(p) -> CatalogEntry:
    L = parse_structure("(e23, e27, -e37, e57+e48, -e47+e58, -2*e68, 0, 0)")
    J = _J(8, {1: 2, 3: 7, 4: 5, 6: 8})
    s = StructureSpec(
        "J",
        J,
        _I(8),
        _flags(
            integrable=(True, PAPER),
            compatible=(True, TRIVIAL),
            skt=(True, PAPER),
            kahler=(False, PAPER, "not balanced, hence not Kahler"),
            balanced=(False, PAPER),
            chern_ricci_flat=(False, PAPER),
        ),
        {
            "fundamental_form": Expect("e12+e37+e45+e68", PAPER),
            "bismut_torsion": Expect("-e123-2*e456", PAPER),
            "chern_lee": Expect("e3+e6+e7", PAPER),
            "chern_ricci": Expect("-e37-2*e68", PAPER),
        },
    )
    return CatalogEntry(
        "s8",
        "8-dimensional SKT algebra whose nilradical h8 is not J-invariant",
        L,
        structures=[s],
        nilradical=_indices(1, 6),
        nilradical_verdict=Expect("IS_NILRADICAL", PAPER),
        unimodular=Expect(True, PAPER),
    )


def _g2n(n):
    def build(p) -> CatalogEntry:
        _nonzero(p, "b", "c", "c2")
        L = g2n_family(n, p["b"], p["c"], p["c2"])
        N = 2 * n
        Ip, Im = g2n_split_pair(n)
        structures = []
        for lbl, I, sgn in (("I+", Ip, ""), ("I-", Im, "-")):
            structures.append(
                StructureSpec(
                    lbl,
                    I,
                    _I(N),
                    _flags(integrable=(True, PAPER), compatible=(True, TRIVIAL), skt=(True, PAPER)),
                    {"dc_form": Expect(f"{sgn}e123" if N < 10 else f"{sgn}[1,2,3]", PAPER)},
                )
            )
        gk = [GKSpec("I+/I-", Ip, Im, _I(N), Expect("GK_SPLIT", PAPER))]
        if n >= 5:
            Kp, Km = g2n_nonsplit_pair(n)
            gk.append(
                GKSpec(
                    "I'+/I'-",
                    Kp,
                    Km,
                    _I(N),
                    Expect("GK_NONSPLIT", PAPER, "I'- maps e5 to +e6, matching the stated fundamental form"),
                )
            )
        return CatalogEntry(
            f"g2n_n{n}",
            f"{N}-dimensional member of the g^(2n)_(b,c,c') family",
            L,
            params=dict(p),
            structures=structures,
            gk=gk,
            nilradical=_indices(1, N - 2),
            nilradical_verdict=Expect("IS_NILRADICAL", PAPER),
            unimodular=Expect(True, DERIVED, "trace ad e_(2n-1) = -1 + 1/2 + 1/2"),
        )

    return build


def _flat_torus(p) -> CatalogEntry:
    L = LieAlgebra.abelian(6)
    L.name = "flat_torus"
    J = standard_structure(6)
    all_true = {
        k: Expect(True, TRIVIAL)
        for k in ("integrable", "compatible", "kahler", "skt", "balanced", "chern_ricci_flat")
    }
    s = StructureSpec("J", J, _I(6), all_true, {"dc_form": Expect("0", TRIVIAL)})
    return CatalogEntry(
        "flat_torus",
        "abelian R^6 with the standard Kahler structure",
        L,
        structures=[s],
        gk=[GKSpec("J/-J", J, -J, _I(6), Expect("GK_SPLIT", TRIVIAL))],
        nilradical=_indices(1, 6),
        nilradical_verdict=Expect("IS_NILRADICAL", TRIVIAL),
        unimodular=Expect(True, TRIVIAL),
    )


def _aff_x_aff(p) -> CatalogEntry:
    L = parse_structure("(e12, 0, e34, 0)")
    L.name = "aff_x_aff"
    s = StructureSpec(
        "J",
        _J(4, {1: 2, 3: 4}),
        _I(4),
        _flags(
            integrable=(True, DERIVED),
            compatible=(True, TRIVIAL),
            kahler=(True, DERIVED, "d(e12+e34) = 0"),
            skt=(True, DERIVED, "Kahler"),
            balanced=(True, DERIVED, "Kahler"),
        ),
        {"lee_form": Expect("0", DERIVED, "balanced")},
    )
    return CatalogEntry(
        "aff_x_aff",
        "aff(R) + aff(R), a non-unimodular Kahler algebra",
        L,
        structures=[s],
        nilradical=(1, 3),
        nilradical_verdict=Expect("IS_NILRADICAL", DERIVED),
        unimodular=Expect(False, DERIVED, "trace ad e2 = 1"),
    )


def _nil6(name, rho, gamma, delta, label, skt_expect):
    def build(p) -> CatalogEntry:
        base = family_base(rho, gamma, delta)
        L = base.algebra
        L.name = name
        s = StructureSpec(
            "J",
            base.J,
            base.g,
            _flags(integrable=(True, PAPER), compatible=(True, TRIVIAL), skt=skt_expect),
        )
        return CatalogEntry(
            name,
            f"six-dimensional nilpotent family member ({label})",
            L,
            structures=[s],
            nilradical=_indices(1, 6),
            nilradical_verdict=Expect("IS_NILRADICAL", TRIVIAL),
            unimodular=Expect(True, TRIVIAL, "nilpotent"),
        )

    return build


_ONE = Fraction(1)

_REGISTRY: dict[str, tuple[dict[str, Scalar], Callable[[dict], CatalogEntry]]] = {
    "tau30_x_tau30": ({}, _tau30_x_tau30),
    "g5_35_R": ({}, _g5_35_R),
    "s3_remark": ({}, _s3_remark),
    "g8_b": ({"b": _ONE}, _g8_b),
    "s1": ({"a": _ONE, "delta": _ONE}, _s1),
    "s2": ({"a": _ONE}, _s2),
    "s3": ({"a": _ONE, "delta": _ONE}, _s3),
    "s4": ({"a": _ONE}, _s4),
    "s5": ({"a": _ONE, "delta": Fraction(1, 2)}, _s5),
    "s6": ({"a": _ONE, "b": _ONE, "delta": _ONE}, _s6),
    "s7": ({"a": _ONE, "b": _ONE}, _s7),
    "s8": ({}, _s8),
    "g2n_n3": ({"b": _ONE, "c": _ONE, "c2": _ONE}, _g2n(3)),
    "g2n_n4": ({"b": _ONE, "c": _ONE, "c2": _ONE}, _g2n(4)),
    "g2n_n5": ({"b": _ONE, "c": _ONE, "c2": _ONE}, _g2n(5)),
    "flat_torus": ({}, _flat_torus),
    "aff_x_aff": ({}, _aff_x_aff),
    "nil6_h2": ({}, _nil6("nil6_h2", 0, 0, 1, "h2", Expect(True, PAPER))),
    "nil6_h8": ({}, _nil6("nil6_h8", 0, 0, 0, "h8", Expect(True, PAPER))),
    "nil6_h4": ({}, _nil6("nil6_h4", 1, Fraction(1, 2), sqrt(3) / 2, "h4", Expect(True, PAPER))),
    "nil6_h5": ({}, _nil6("nil6_h5", 1, Fraction(1, 2), Fraction(1, 2), "h5", Expect(True, PAPER))),
    "nil6_off_table": (
        {},
        _nil6(
            "nil6_off_table",
            1,
            0,
            0,
            "rho=1, gamma=0, delta=0",
            Expect(False, DERIVED, "rho^2 - 2 gamma != 0; independent CE oracle"),
        ),
    ),
}


def catalog_list() -> list[str]:
    return sorted(_REGISTRY)


def catalog_defaults(name: str) -> dict[str, Scalar]:
    if name not in _REGISTRY:
        raise UnknownEntry(f"unknown catalog entry {name!r}")
    return dict(_REGISTRY[name][0])


def catalog_entry(name: str, params: Mapping[str, object] | None = None) -> CatalogEntry:
    if name not in _REGISTRY:
        raise UnknownEntry(f"unknown catalog entry {name!r}")
    defaults, build = _REGISTRY[name]
    p = dict(defaults)
    for k, v in (params or {}).items():
        if k not in defaults:
            raise ValueError(f"entry {name!r} has no parameter {k!r} (known: {sorted(defaults)})")
        p[k] = parse_scalar(v) if isinstance(v, str) else as_scalar(v)
    entry = build(p)
    entry.algebra.name = name
    entry.params = p
    return entry


def _mismatch(where: str, expected, computed, exp: Expect, witness=None) -> dict:
    out = {
        "where": where,
        "expected": expected,
        "computed": computed,
        "provenance": exp.provenance.value,
    }
    if witness is not None:
        out["witness"] = witness
    return out


def catalog_check(name: str, params: Mapping[str, object] | None = None) -> CatalogResult:
    """Recompute every expected value of an entry; mismatches list the witness."""
    entry = catalog_entry(name, params)
    L = entry.algebra
    report = build_report(L, entry.hermitian_file(), entry.nilradical, name=name)
    res = CatalogResult(name, report)
    if not report["jacobi"]:
        res.mismatches.append({"where": "jacobi", "expected": True, "computed": False})
    if entry.unimodular is not None and report["unimodular"] != entry.unimodular.value:
        res.mismatches.append(
            _mismatch("unimodular", entry.unimodular.value, report["unimodular"], entry.unimodular)
        )
    if entry.nilradical_verdict is not None:
        got = report["nilradical"]["verdict"]
        if got != entry.nilradical_verdict.value:
            res.mismatches.append(
                _mismatch("nilradical", entry.nilradical_verdict.value, got, entry.nilradical_verdict)
            )
    for spec, rep in zip(entry.structures, report["structures"]):
        for flag, exp in spec.flags.items():
            if rep[flag] != exp.value:
                res.mismatches.append(
                    _mismatch(
                        f"{spec.label}.{flag}", exp.value, rep[flag], exp, rep["witnesses"].get(flag)
                    )
                )
        if spec.tensors:
            H = HermitianData(L, spec.J, spec.g, label=spec.label)
            for qty, exp in spec.tensors.items():
                got = TENSORS[qty](H)
                want = parse_form(exp.value, L.n) if exp.value != "0" else None
                if (want is None and not got.is_zero()) or (want is not None and got != want):
                    res.mismatches.append(
                        _mismatch(f"{spec.label}.{qty}", exp.value, format_form(got), exp)
                    )
    for spec, rep in zip(entry.gk, report["gk"]):
        if rep["verdict"] != spec.verdict.value:
            res.mismatches.append(
                _mismatch(f"{spec.label}.gk", spec.verdict.value, rep["verdict"], spec.verdict)
            )
    return res


def _check_one(name: str) -> CatalogResult:
    return catalog_check(name)


def catalog_check_all(names=None, workers: int | None = None) -> list[CatalogResult]:
    """Check several entries (default: all) in parallel; results sorted by name."""
    names = sorted(names or catalog_list())
    if workers == 1 or len(names) <= 1:
        results = [_check_one(n) for n in names]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_check_one, names))
    return sorted(results, key=lambda r: r.name)
