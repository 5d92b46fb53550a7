import pytest

from sktlie.catalog import catalog_entry
from sktlie.dsl import parse_structure
from sktlie.constructions import standard_structure
from sktlie.errors import NotIntegrable
from sktlie.hermitian import ComplexStructure, HermitianData, fundamental_form, is_kahler, is_skt
from sktlie.linalg import is_positive_definite
from sktlie.search import (
    SearchStatus,
    in_solution_space,
    kahler_metric_search,
    metric_of_form,
    metric_search,
    skt_metric_search,
    solution_space,
)

# sl(2, C) as a real algebra with J = multiplication by i: every closed
# 2-form is exact and of type (2,0)+(0,2), so no (1,1)-form qualifies.
SL2C = "(-e35+e46, -e36-e45, -2*e13+2*e24, -2*e14-2*e23, 2*e15-2*e26, 2*e16+2*e25)"

SKT_ENTRIES = ["tau30_x_tau30", "g5_35_R", "s8", "g8_b", "s6", "s1", "nil6_h2", "g2n_n4", "s3_remark"]


@pytest.mark.parametrize("name", SKT_ENTRIES)
def test_skt_search_found_and_reverified(name):
    e = catalog_entry(name)
    J = e.structures[0].J
    out = skt_metric_search(e.algebra, J, budget=512, seed=0)
    assert out.status is SearchStatus.FOUND
    H = HermitianData(e.algebra, J, out.metric)
    assert is_positive_definite(out.metric)
    assert fundamental_form(H) == out.omega
    assert is_skt(H)
    assert out.attempts <= 512 and out.kernel_dim == len(solution_space(e.algebra, J, "skt"))


@pytest.mark.parametrize("name", ["tau30_x_tau30", "flat_torus", "aff_x_aff"])
def test_kahler_search_found_and_reverified(name):
    e = catalog_entry(name)
    J = e.structures[0].J
    out = kahler_metric_search(e.algebra, J, seed=0)
    assert out.found
    assert is_kahler(HermitianData(e.algebra, J, out.metric))


@pytest.mark.parametrize("name", ["g5_35_R", "g8_b", "s8"])
def test_kahler_search_never_found_where_excluded(name):
    e = catalog_entry(name)
    out = kahler_metric_search(e.algebra, e.structures[0].J, budget=256, seed=3)
    assert out.status in (SearchStatus.UNKNOWN, SearchStatus.EMPTY_LINEAR)


def test_shipped_metrics_lie_in_solution_space():
    from helpers import all_catalog_structures

    for name, label, H in all_catalog_structures():
        omega = fundamental_form(H)
        assert in_solution_space(H.algebra, H.J, omega, "skt") == is_skt(H), (name, label)
        assert in_solution_space(H.algebra, H.J, omega, "kahler") == is_kahler(H), (name, label)


def test_empty_linear():
    L = parse_structure(SL2C)
    J = standard_structure(6)
    for kind in ("skt", "kahler"):
        out = metric_search(L, J, kind)
        assert out.status is SearchStatus.EMPTY_LINEAR
        assert out.kernel_dim == 0 and out.attempts == 0


def test_seeded_runs_reproduce():
    e = catalog_entry("g8_b")
    J = e.structures[0].J
    a = kahler_metric_search(e.algebra, J, budget=64, seed=5)
    b = kahler_metric_search(e.algebra, J, budget=64, seed=5)
    assert a == b
    s1 = skt_metric_search(e.algebra, J, seed=1)
    assert s1 == skt_metric_search(e.algebra, J, seed=1)


def test_metric_of_form_inverts_fundamental_form():
    H = catalog_entry("s8").hermitian()
    assert metric_of_form(fundamental_form(H), H.J) == H.g.g


def test_errors():
    e = catalog_entry("g5_35_R")
    bad = ComplexStructure.from_pairs(6, {1: 2, 3: 4, 5: 6})
    with pytest.raises(NotIntegrable):
        solution_space(e.algebra, bad)
    with pytest.raises(ValueError):
        solution_space(e.algebra, e.structures[0].J, "balanced")


def test_to_json():
    e = catalog_entry("tau30_x_tau30")
    out = skt_metric_search(e.algebra, e.structures[0].J).to_json()
    assert out["status"] == "FOUND" and "omega" in out and len(out["g"]) == 6
