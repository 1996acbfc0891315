import pytest

from tripleplane.classify import (
    Bucket,
    CANNED_BOUNDS,
    EnumerationBounds,
    NONMINIMAL_OR_SMALL_PG_ROWS,
    NOT_GENERAL_TYPE_ROWS,
    TABLE1_ROWS,
    admissibility_label,
    enumerate_records,
    paper_table,
)
from tripleplane.cli import OutputFormat, render_records


def _keys(records, *buckets):
    wanted = set(buckets) if buckets else set(Bucket)
    return [(r.data.d, r.data.c) for r in records if r.bucket in wanted]


def test_not_general_type_rows_exact():
    bounds = EnumerationBounds(d_min=0, d_max=1, c_max=4, split_a_max=3, pluri_max=12)
    got = _keys(enumerate_records(bounds), Bucket.NOT_GENERAL_TYPE)
    expected = sorted((d, c) for (_, _, _, _, d, c, _) in NOT_GENERAL_TYPE_ROWS)
    assert sorted(got) == expected
    assert len(expected) == 11


def test_table1_rows_exact():
    bounds = EnumerationBounds(d_min=0, d_max=2, c_max=5, split_a_max=5, pluri_max=12)
    got = _keys(
        enumerate_records(bounds), Bucket.NOT_GENERAL_TYPE, Bucket.GENERAL_TYPE_NON_MINIMAL
    )
    expected = sorted((d, c) for (_, _, _, _, d, c) in TABLE1_ROWS)
    assert sorted(got) == expected
    assert len(expected) == 13


def test_empty_bounds():
    bounds = EnumerationBounds(d_min=0, d_max=0, c_max=0, split_a_max=0, pluri_max=12)
    assert enumerate_records(bounds) == ()


def test_bounds_validation():
    with pytest.raises(ValueError):
        EnumerationBounds(d_min=1, d_max=0, c_max=2, split_a_max=2)
    with pytest.raises(ValueError):
        EnumerationBounds(d_min=0, d_max=1, c_max=-1, split_a_max=2)


def test_records_are_sorted_and_bucketed():
    records = enumerate_records(CANNED_BOUNDS)
    keys = [(r.data.d, r.data.c) for r in records]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    for record in records:
        assert record.status.is_admissible
        assert record.bucket in Bucket


def test_split_data_only_enumerated_at_d_zero():
    records = enumerate_records(CANNED_BOUNDS)
    for record in records:
        if record.data.is_split:
            assert record.data.d == 0


def test_determinism_byte_identical():
    bounds = EnumerationBounds(d_min=0, d_max=2, c_max=4, split_a_max=4, pluri_max=6)
    first = render_records(list(enumerate_records(bounds)), OutputFormat.JSON)
    enumerate_records.cache_clear()
    second = render_records(list(enumerate_records(bounds)), OutputFormat.JSON)
    assert first == second


def test_bound_stability():
    canned = enumerate_records(CANNED_BOUNDS)
    larger = enumerate_records(
        EnumerationBounds(d_min=0, d_max=4, c_max=10, split_a_max=10, pluri_max=12)
    )
    for bucket in (Bucket.NOT_GENERAL_TYPE, Bucket.GENERAL_TYPE_NON_MINIMAL):
        assert sorted(_keys(canned, bucket)) == sorted(_keys(larger, bucket))
    small_pg = {
        (r.data.d, r.data.c)
        for r in larger
        if r.bucket is Bucket.MINIMAL_GENERAL_TYPE_SMALL_PG
    }
    expected = {(d, c) for (_, _, _, _, m, d, c, _) in NONMINIMAL_OR_SMALL_PG_ROWS if m}
    assert small_pg == expected


def test_paper_tables_reproduce():
    for table, rows in [
        ("table1", 13),
        ("not_general_type", 11),
        ("nonminimal_or_small_pg", 12),
    ]:
        diff = paper_table(table)
        assert diff.ok, diff.lines
        assert diff.matched == rows


def test_paper_table_rejects_unknown_id():
    with pytest.raises(ValueError):
        paper_table("table2")


def test_admissibility_labels():
    records = {
        (r.data.d, r.data.c): admissibility_label(r)
        for r in enumerate_records(CANNED_BOUNDS)
    }
    assert records[(0, (3, 2, 0))] == "gg (split)"
    assert records[(1, (2, 1, 1))] == "gg"
    assert records[(1, (2, 2, 1))] == "✓"
    assert records[(1, (3, 3, 2))] == "✓"
