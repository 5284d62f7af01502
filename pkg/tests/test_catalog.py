"""Catalog integrity: names, diagrams, restricted profiles, classification."""

from __future__ import annotations

import json
from collections import Counter

import pytest

from satake.catalog import (
    catalog,
    classification_to_json,
    classify,
    lookup,
    normalize_name,
)
from satake.diagram import validate
from satake.errors import UnknownRealFormError
from satake.involution import restricted_roots


class TestCatalogBuild:
    def test_entry_count_at_default_bound(self, full_catalog):
        assert len(full_catalog) == 205

    def test_every_diagram_validates(self, full_catalog):
        bad = [rec.name for rec in full_catalog if not validate(rec.diagram).ok]
        assert bad == []

    def test_names_unique_after_normalization(self, full_catalog):
        keys = [normalize_name(n) for rec in full_catalog for n in rec.names]
        assert len(keys) == len(set(keys))

    def test_rank_bound_filters(self):
        small = catalog(2)
        names = {rec.name for rec in small}
        assert "sl(2,R)" in names and "so(2,3)" in names and "g2(2)" in names
        assert all(t.rank <= 2 for rec in small for t in rec.diagram.types)
        with pytest.raises(UnknownRealFormError):
            lookup("f4(4)", rank_bound=2)

    def test_bad_bound(self):
        with pytest.raises(ValueError):
            catalog(0)

    def test_caching_returns_same_tuple(self):
        assert catalog(8) is catalog(8)


class TestLookup:
    def test_every_name_resolves_to_its_record(self, full_catalog):
        for rec in full_catalog:
            for name in rec.names:
                assert lookup(name) is rec

    @pytest.mark.parametrize(
        "variant,primary",
        [
            ("SU(2, 1)", "su(2,1)"),
            (" so*(8) ", "so*(8)"),
            ("SL(2,r)", "sl(2,R)"),
            ("sp(1)", "su(2)"),
            ("EII", "e6(2)"),
            ("e7(-133)", "e7"),
            ("u*(4,H)", "so*(8)"),
            ("sl(2,C) as real", "sl(2,C)"),
            ("so(6,2)", "so(2,6)"),
        ],
    )
    def test_synonyms_and_normalization(self, variant, primary):
        assert lookup(variant).name == primary

    def test_parentheses_are_significant(self):
        with pytest.raises(UnknownRealFormError):
            lookup("su21")

    def test_unknown_name_suggests(self):
        with pytest.raises(UnknownRealFormError) as exc:
            lookup("su(19)")
        assert exc.value.suggestions
        assert exc.value.name == "su(19)"

    def test_doubled_record_shape(self):
        rec = lookup("sl(2,C) as real")
        assert rec.text == "A1xA1 black= arrows=1:2"
        assert [str(t) for t in rec.diagram.types] == ["A1", "A1"]
        assert rec.diagram.is_doubled


# Frozen profiles: (restricted type, {multiplicity: count of positive
# restricted roots with it}).  Entries cross-checked by dimension counts.
RESTRICTED_PROFILES = {
    "sl(2,R)": ("A1", {1: 1}),
    "su(2,1)": ("BC1", {2: 1, 1: 1}),
    "su(2,2)": ("B2", {2: 2, 1: 2}),
    "su(3,1)": ("BC1", {4: 1, 1: 1}),
    "su*(4)": ("A1", {4: 1}),
    "su*(6)": ("A2", {4: 3}),
    "so(2,3)": ("B2", {1: 4}),
    "so(1,7)": ("A1", {6: 1}),
    "so(2,6)": ("B2", {1: 2, 4: 2}),
    "so*(8)": ("B2", {1: 2, 4: 2}),
    "so*(10)": ("BC2", {4: 4, 1: 2}),
    "sp(4,R)": ("B2", {1: 4}),
    "sp(1,2)": ("BC1", {4: 1, 3: 1}),
    "sp(2,2)": ("B2", {3: 2, 4: 2}),
    "e6(6)": ("E6", {1: 36}),
    "e6(2)": ("F4", {1: 12, 2: 12}),
    "e6(-14)": ("BC2", {6: 2, 8: 2, 1: 2}),
    "e6(-26)": ("A2", {8: 3}),
    "e7(7)": ("E7", {1: 63}),
    "e7(-5)": ("F4", {1: 12, 4: 12}),
    "e7(-25)": ("C3", {1: 3, 8: 6}),
    "e8(8)": ("E8", {1: 120}),
    "e8(-24)": ("F4", {1: 12, 8: 12}),
    "f4(4)": ("F4", {1: 24}),
    "f4(-20)": ("BC1", {8: 1, 7: 1}),
    "g2(2)": ("G2", {1: 6}),
    "sl(2,C)": ("A1", {2: 1}),
    "sp(4,C)": ("B2", {2: 4}),
    "su(4)": (None, {}),
    "so(9)": (None, {}),
}


@pytest.mark.parametrize("name", sorted(RESTRICTED_PROFILES))
def test_restricted_profiles(name):
    label, hist = RESTRICTED_PROFILES[name]
    rr = restricted_roots(lookup(name).diagram)
    assert rr.label == label
    assert dict(Counter(rr.multiplicity.values())) == hist


class TestClassification:
    def test_row_shape(self, full_catalog):
        table = classify()
        assert table.rank_bound == 8
        assert len(table.rows) == len(full_catalog)
        by_name = {row.name: row for row in table.rows}
        assert by_name["sl(3,R)"].is_identity
        assert by_name["sl(3,R)"].automorphism == "identity"
        assert by_name["su(3,1)"].automorphism == "(1 3)"
        assert not by_name["su(3,1)"].is_identity
        assert by_name["so(2,6)"].is_identity
        assert by_name["e6(2)"].automorphism == "(1 6)(3 5)"

    def test_doubled_rows_never_identity(self, full_catalog):
        table = classify()
        doubled = {rec.name for rec in full_catalog if rec.diagram.is_doubled}
        for row in table.rows:
            if row.name in doubled:
                assert not row.is_identity

    def test_json_is_deterministic_and_loadable(self):
        a = classification_to_json(classify())
        b = classification_to_json(classify())
        assert a == b
        payload = json.loads(a)
        assert payload["rank_bound"] == 8
        assert len(payload["real_forms"]) == 205
        row = payload["real_forms"][0]
        assert set(row) == {"name", "diagram", "automorphism", "is_identity"}
