import random
from fractions import Fraction

import pytest

from helpers import (
    all_catalog_structures,
    d_by_evaluation,
    fundamental_form_by_evaluation,
    torsion_by_evaluation,
)
from sktlie.catalog import catalog_entry
from sktlie.constructions import family_base, standard_structure
from sktlie.dsl import parse_form, parse_structure
from sktlie.errors import NotCodim2, NotCompatible, NotIntegrable, NotInvariant
from sktlie.hermitian import (
    ComplexStructure,
    GKVerdict,
    HermitianData,
    Metric,
    abelian_skt_conditions,
    bismut_torsion,
    center_obstruction,
    center_obstruction_vectors,
    chern_lee,
    chern_ricci,
    codim2_frame,
    dc_form,
    fundamental_form,
    hj_decomposition,
    integrability_defect,
    is_balanced,
    is_generalized_kahler,
    is_integrable,
    is_kahler,
    is_skt,
    lee_form,
    nijenhuis,
    property_report,
)
from sktlie.liealg import LieAlgebra, Subspace
from sktlie.linalg import Endomorphism, kernel
from sktlie.randomized import (
    random_abelian_codim2,
    random_commuting_family,
    random_compatible_metric,
    random_complex_structure,
    random_invariant_codim2,
)

STRUCTURES = all_catalog_structures()
IDS = [f"{n}:{lab}" for n, lab, _ in STRUCTURES]


def span(n, one_based):
    return Subspace.span_of_basis(n, [i - 1 for i in one_based])


# -- oracle comparisons on the catalog ---------------------------------------


@pytest.mark.parametrize("name,label,H", STRUCTURES, ids=IDS)
def test_torsion_matches_oracle(name, label, H):
    assert is_integrable(H.algebra, H.J)
    assert fundamental_form(H) == fundamental_form_by_evaluation(H.J.J, H.g.g)
    c = torsion_by_evaluation(H.algebra, H.J.J, H.g.g)
    assert bismut_torsion(H) == c
    assert is_skt(H) == d_by_evaluation(H.algebra, c).is_zero()


@pytest.mark.parametrize("name,label,H", STRUCTURES, ids=IDS)
def test_structural_identities(name, label, H):
    assert bismut_torsion(H) == -dc_form(H)
    rho = chern_ricci(H)
    assert H.algebra.ce_differential(rho).is_zero()
    if is_kahler(H):
        assert is_skt(H) and is_balanced(H)
    assert is_balanced(H) == lee_form(H).is_zero()


def test_off_table_member_is_not_skt_by_oracle():
    H = catalog_entry("nil6_off_table").hermitian()
    c = torsion_by_evaluation(H.algebra, H.J.J, H.g.g)
    assert not d_by_evaluation(H.algebra, c).is_zero()
    assert not is_skt(H)


def test_s8_golden_tensors():
    H = catalog_entry("s8").hermitian()
    n = 8
    assert bismut_torsion(H) == parse_form("-e123-2*e456", n)
    assert chern_lee(H) == parse_form("e3+e6+e7", n)
    assert chern_ricci(H) == parse_form("-e37-2*e68", n)
    assert not lee_form(H).is_zero()
    rep = property_report(H.algebra, H.J, H.g, "J")
    assert rep["skt"] and not rep["chern_ricci_flat"]
    assert rep.witnesses["chern_ricci_flat"] == {"component": [3, 7], "coefficient": "-1"}


def test_flat_and_abelian_examples():
    H = catalog_entry("flat_torus").hermitian()
    assert lee_form(H).is_zero() and chern_ricci(H).is_zero()
    A = LieAlgebra.abelian(4)
    J = standard_structure(4)
    assert chern_ricci(A, J).is_zero()


def test_property_report_witness_for_non_integrable():
    L = catalog_entry("g5_35_R").algebra
    J = ComplexStructure.from_pairs(6, {1: 2, 3: 4, 5: 6})
    assert nijenhuis(L, J)
    rep = property_report(L, J, Metric.identity(6), "bad")
    assert rep["integrable"] is False
    assert set(rep.witnesses["integrable"]) == {"component", "coefficient"}
    with pytest.raises(NotIntegrable):
        chern_lee(L, J)


# -- random compatible structures on R^6 -------------------------------------


SIX_DIM = ["tau30_x_tau30", "g5_35_R", "nil6_h2", "nil6_h8", "nil6_h4", "nil6_h5", "flat_torus"]


def random_six_dim_structures(count, seed):
    """Half abelian with a random J, half catalog algebras with their J; random metric."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        if i % 2 == 0:
            L = LieAlgebra.abelian(6)
            J = random_complex_structure(rng, 6)
        else:
            e = catalog_entry(SIX_DIM[(i // 2) % len(SIX_DIM)])
            L, J = e.algebra, e.structures[0].J
        g = random_compatible_metric(rng, J.J)
        out.append(HermitianData(L, J, g))
    return out


@pytest.mark.parametrize("H", random_six_dim_structures(20, 11))
def test_gk_with_minus_j_iff_kahler(H):
    res = is_generalized_kahler(H.algebra, H.J, -H.J, H.g)
    assert (res.verdict is GKVerdict.GK_SPLIT) == is_kahler(H)
    assert res.verdict is not GKVerdict.GK_NONSPLIT


def test_gk_minus_j_covers_both_outcomes():
    verdicts = {
        is_kahler(H) for H in random_six_dim_structures(20, 11)
    }
    assert verdicts == {True, False}


@pytest.mark.parametrize("H", random_six_dim_structures(20, 23))
def test_lee_form_vanishes_iff_balanced(H):
    assert lee_form(H).is_zero() == is_balanced(H)


def test_lee_form_non_unimodular():
    H = catalog_entry("aff_x_aff").hermitian()
    assert is_balanced(H) and lee_form(H).is_zero()
    rng = random.Random(5)
    seen = set()
    for _ in range(10):
        g = random_compatible_metric(rng, H.J.J)
        K = HermitianData(H.algebra, H.J, g)
        seen.add(is_balanced(K))
        assert lee_form(K).is_zero() == is_balanced(K)
    assert False in seen


def test_incompatible_metric_rejected():
    g = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    g[0][0] = Fraction(2)
    with pytest.raises(NotCompatible):
        HermitianData(LieAlgebra.abelian(4), standard_structure(4), Metric(Endomorphism(g)))


# -- structure relative to an ideal ------------------------------------------


def test_hj_decomposition_examples():
    e = catalog_entry("g5_35_R")
    d = hj_decomposition(e.algebra, e.structures[0].J, span(6, [1, 2, 3, 4]))
    assert not d.invariant and d.h_J.dim == 2 and d.hJ_is_ideal
    e = catalog_entry("tau30_x_tau30")
    assert hj_decomposition(e.algebra, e.structures[0].J, span(6, [1, 2, 3, 4])).invariant
    J = random_complex_structure(random.Random(1), 4)
    A = LieAlgebra.abelian(4)
    assert hj_decomposition(A, J, A.whole()).invariant


def test_nijenhuis_nonzero_for_naive_j():
    L = catalog_entry("g5_35_R").algebra
    assert nijenhuis(L, ComplexStructure.from_pairs(6, {1: 2, 3: 4, 5: 6}))
    assert not nijenhuis(L, catalog_entry("g5_35_R").structures[0].J)


@pytest.mark.parametrize("name", ["g8_b", "tau30_x_tau30"])
def test_abelian_nilradical_examples(name):
    e = catalog_entry(name)
    H = e.hermitian()
    h = span(e.n, e.nilradical)
    assert integrability_defect(H.algebra, H.J, h, H.g).is_zero()
    assert abelian_skt_conditions(H.algebra, H.J, H.g, h)
    assert is_skt(H)


def test_frame_errors():
    e = catalog_entry("tau30_x_tau30")
    with pytest.raises(NotCodim2):
        codim2_frame(e.algebra, e.structures[0].J, span(6, [1, 2]))
    g = catalog_entry("g5_35_R")
    with pytest.raises(NotInvariant):
        codim2_frame(g.algebra, g.structures[0].J, span(6, [1, 2, 3, 4]))


INVARIANT = [random_invariant_codim2(random.Random(100 + i)) for i in range(50)]


@pytest.mark.parametrize("inst", INVARIANT)
def test_chern_ricci_flat_on_invariant_codim2(inst):
    H = inst.hermitian
    assert inst.h.image(H.J.J) == inst.h
    assert integrability_defect(inst.algebra, H.J, inst.h, H.g).is_zero()
    assert chern_ricci(H).is_zero()


def obstruction_instances():
    rng = random.Random(31)
    out = []
    for i in range(30):
        out.append(random_abelian_codim2(rng) if i % 3 == 0 else random_invariant_codim2(rng, "abelian4"))
    return out


@pytest.mark.parametrize("inst", obstruction_instances())
def test_center_obstruction_matches_oracle(inst):
    L, J, g = inst.algebra, inst.J.J, inst.g.g
    ddc = d_by_evaluation(L, torsion_by_evaluation(L, J, g))
    vals = center_obstruction(L, J, g, inst.h)
    vecs = center_obstruction_vectors(L, J, g, inst.h)
    assert vals and len(vals) == len(vecs)
    for v, w in zip(vals, vecs):
        assert v == ddc(*w)


def abelian_instances():
    rng = random.Random(47)
    return [random_abelian_codim2(rng, skew=(i % 2 == 0)) for i in range(30)]


@pytest.mark.parametrize("inst", abelian_instances())
def test_abelian_skt_conditions_iff_skt(inst):
    H = inst.hermitian
    assert abelian_skt_conditions(inst.algebra, H.J, H.g, inst.h) == is_skt(H)


def test_abelian_instances_cover_both_outcomes():
    assert {is_skt(i.hermitian) for i in abelian_instances()} == {True, False}


# -- balanced through the ideal -----------------------------------------------


def _traceless_j_derivations(h: LieAlgebra, Jh: Endomorphism):
    n = h.n
    rows = h.derivation_equations()
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[i * n + k] += Jh.rows[k][j]
                row[k * n + j] -= Jh.rows[i][k]
            rows.append(row)
    rows.append([Fraction(1) if a == b else Fraction(0) for a in range(n) for b in range(n)])
    sols = kernel(rows, n * n)
    return [Endomorphism([list(s[a * n:(a + 1) * n]) for a in range(n)]) for s in sols]


def test_balanced_descends_to_the_ideal():
    """Unimodular with [U, JU] = 0: balanced on g iff balanced on h."""
    from sktlie.liealg import semidirect_product
    from sktlie.nilradical import verify_nilradical

    rng = random.Random(2)
    checked = 0
    for i in range(40):
        base = family_base(*[(0, 0, 1), (0, 0, 0), (1, Fraction(1, 2), Fraction(1, 2))][i % 3])
        h, Jh = base.algebra, base.J.J
        space = _traceless_j_derivations(h, Jh)
        if not space:
            continue
        A, B = random_commuting_family(rng, space, 2, 2)
        L = semidirect_product(h, [A, B])
        hs = Subspace.span_of_basis(8, range(6))
        if not L.is_unimodular() or not verify_nilradical(L, hs).ok:
            continue
        gh = random_compatible_metric(rng, Jh) if i % 2 else Metric.identity(6)
        J = Endomorphism.block_diag(Jh, standard_structure(2).J)
        g = Endomorphism.block_diag(gh.g, Endomorphism.identity(2))
        H = HermitianData(L, J, g)
        f = codim2_frame(L, J, hs, g)
        assert all(x == 0 for x in L.bracket(f.U, f.JU))
        assert is_balanced(H) == is_balanced(HermitianData(h, Jh, gh))
        checked += 1
    assert checked >= 10


# -- generalized Kahler with invariant nilradical -----------------------------


def gk_invariant_attempts():
    """Catalog GK pairs plus randomized (J, J') pairs flipping one block of J."""
    out = []
    for name in ("tau30_x_tau30", "g5_35_R", "g8_b", "s3_remark"):
        e = catalog_entry(name)
        for gk in e.gk:
            out.append((e.algebra, gk.Jp.J, gk.Jm.J, gk.g.g, span(e.n, e.nilradical)))
    rng = random.Random(9)
    for _ in range(20):
        inst = random_invariant_codim2(rng, "abelian4")
        # abelian4 instances use the standard J on h
        Jm = Endomorphism.block_diag(standard_structure(4).J, -standard_structure(2).J)
        out.append((inst.algebra, inst.J.J, Jm, Endomorphism.identity(6), inst.h))
    return out


def test_gk_with_invariant_nilradical_is_kahler():
    tested = 0
    for L, Jp, Jm, g, h in gk_invariant_attempts():
        if not (h.image(Jp) == h and h.image(Jm) == h):
            continue
        if not is_generalized_kahler(L, Jp, Jm, g).ok:
            continue
        assert is_kahler(HermitianData(L, Jp, g))
        tested += 1
    assert tested >= 1


def test_catalog_gk_pairs_verify():
    for name in ("tau30_x_tau30", "g5_35_R", "s3_remark", "g2n_n3", "g2n_n5"):
        e = catalog_entry(name)
        for gk in e.gk:
            assert is_generalized_kahler(e.algebra, gk.Jp, gk.Jm, gk.g).verdict.value == gk.verdict.value


def test_not_gk_reasons():
    e = catalog_entry("g5_35_R")
    J = e.structures[0].J
    bad = ComplexStructure.from_pairs(6, {1: 2, 3: 4, 5: 6})
    res = is_generalized_kahler(e.algebra, J, bad, Metric.identity(6))
    assert not res.ok and "integrable" in res.reason
    # (J, J) with nonzero torsion cannot satisfy c+ = -c-
    H = catalog_entry("s8").hermitian()
    res = is_generalized_kahler(H.algebra, H.J, H.J, H.g)
    assert res.verdict is GKVerdict.NOT_GK and res.reason == "c+ != -c-"
    # a Kahler (J, J) pair is degenerate but passes every condition
    tau = parse_structure("(-f25, f15, -f46, f36, 0, 0)")
    Jt = catalog_entry("tau30_x_tau30").structures[0].J
    assert is_generalized_kahler(tau, Jt, Jt, Metric.identity(6)).verdict is GKVerdict.GK_SPLIT
