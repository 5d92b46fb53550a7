import json
from fractions import Fraction

import pytest

from sktlie.catalog import (
    Provenance,
    UnknownEntry,
    catalog_check,
    catalog_check_all,
    catalog_defaults,
    catalog_entry,
    catalog_list,
)
from sktlie.dsl import parse_document
from sktlie.hermitian_io import dump_hermitian, load_hermitian

NAMES = catalog_list()


def test_listing_is_sorted_and_complete():
    assert NAMES == sorted(NAMES)
    for required in (
        "tau30_x_tau30", "g5_35_R", "s3_remark", "g8_b", "s8", "flat_torus",
        "s1", "s2", "s3", "s4", "s5", "s6", "s7", "g2n_n3", "g2n_n4", "g2n_n5",
    ):
        assert required in NAMES


@pytest.mark.parametrize("name", NAMES)
def test_entry_matches_expectations(name):
    res = catalog_check(name)
    assert res.ok, res.mismatches
    assert res.report["jacobi"]


@pytest.mark.parametrize("name", NAMES)
def test_every_expectation_has_provenance(name):
    exps = list(catalog_entry(name).expectations())
    assert exps
    for where, e in exps:
        assert isinstance(e.provenance, Provenance), where


@pytest.mark.parametrize("name", NAMES)
def test_defaults_are_nonzero(name):
    for k, v in catalog_defaults(name).items():
        assert v != 0, k


@pytest.mark.parametrize("name", NAMES)
def test_export_round_trip(name):
    e = catalog_entry(name)
    text = e.to_dsl()
    doc = parse_document(text)
    assert doc.to_text() == text
    assert doc.algebra().structure_constants() == e.algebra.structure_constants()
    data = json.loads(json.dumps(e.hermitian_json()))
    again = load_hermitian(data, e.n)
    assert dump_hermitian(again) == data
    assert [s[1] for s in again.structures] == [s.J for s in e.structures]
    assert [s[2] for s in again.structures] == [s.g for s in e.structures]


@pytest.mark.parametrize(
    "name,params",
    [
        ("s1", {"a": "2", "delta": "3/2"}),
        ("s6", {"a": "-1", "b": "3", "delta": "1/3"}),
        ("g2n_n5", {"b": "2", "c": "-1/2", "c2": "3"}),
        ("g2n_n3", {"b": "5", "c": "1/7", "c2": "-2"}),
        ("g8_b", {"b": "-3/4"}),
    ],
)
def test_parameter_overrides(name, params):
    res = catalog_check(name, params)
    assert res.ok, res.mismatches
    entry = catalog_entry(name, params)
    for k, v in params.items():
        assert entry.params[k] == Fraction(v)


def test_bad_parameters():
    with pytest.raises(UnknownEntry):
        catalog_entry("no_such_entry")
    with pytest.raises(ValueError):
        catalog_entry("s1", {"zeta": "1"})
    with pytest.raises(ValueError):
        catalog_entry("g2n_n3", {"b": "0"})


def test_check_all_parallel_is_sorted_and_ok():
    results = catalog_check_all(workers=2)
    assert [r.name for r in results] == NAMES
    assert all(r.ok for r in results)


def test_mismatch_reports_witness():
    e = catalog_entry("s8")
    spec = e.structures[0]
    assert spec.flags["chern_ricci_flat"].value is False
    res = catalog_check("s8")
    rep = res.report["structures"][0]
    assert rep["witnesses"]["chern_ricci_flat"] == {"component": [3, 7], "coefficient": "-1"}
