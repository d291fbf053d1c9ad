"""Packaged tables: builders, shipped data files, loaders."""

import json
import pathlib

import pytest

from supertrop.core_order import check_semiring_axioms
from supertrop.fixtures import (
    BUILDERS,
    TABLE_BUILDERS,
    chain_monoid,
    data_dir,
    fixture_names,
    load_supertropical,
    load_table,
    tg_chain_table,
    truncation_fixture,
    write_data,
    z2_fixture,
    z4_fixture,
)
from supertrop.supertropical import check_supertropical_axioms, finite_from_table


def test_fixture_names_are_stable():
    assert fixture_names() == (
        "bool_ghost", "trunc2", "trunc3", "trunc3_quotient", "z2", "z4",
        "tg_chain4",
    )


def test_builders_match_the_shipped_files(tmp_path):
    write_data(tmp_path)
    for name in fixture_names():
        rebuilt = (tmp_path / f"{name}.json").read_bytes()
        shipped = (data_dir() / f"{name}.json").read_bytes()
        assert rebuilt == shipped, name


def test_shipped_documents_load():
    for name in sorted(BUILDERS):
        u = load_supertropical(name)
        assert check_supertropical_axioms(u.table).ok, name
    for name in sorted(TABLE_BUILDERS):
        assert check_semiring_axioms(load_table(name)).ok, name


def test_truncation_shape():
    t = truncation_fixture(2)
    assert t.names == ("0", "1", "th", "e", "e*th")
    u = finite_from_table(t)
    # tangible overflow lands on the top ghost
    th = t.index("th")
    assert u.mul(th, th) == t.index("e*th")
    assert u.is_ghost(u.mul(th, th))


def test_z_fixture_shapes():
    assert z2_fixture().names == ("0", "1", "g", "e")
    assert z4_fixture().names == ("0", "1", "i", "i^2", "i^3", "e")
    t = tg_chain_table(2)
    assert t.names == ("0", "1", "th")
    g = chain_monoid(3)
    assert len(g.domain.elements) == 3


def test_loader_rejects_unknown_names():
    with pytest.raises(KeyError):
        load_supertropical("nope")


def test_data_files_are_valid_json():
    for name in fixture_names():
        doc = json.loads((data_dir() / f"{name}.json").read_text())
        assert doc["names"][0] == "0"
