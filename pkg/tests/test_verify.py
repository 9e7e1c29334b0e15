"""The cross-validation harness itself: registry, divergence, reporting."""

import json

import pytest

from trinom import verify
from trinom.errors import UnknownRoute
from trinom.verify import (
    ROUTES,
    ConsistencyReport,
    Route,
    first_divergence,
    route_rows,
    run_all,
)

from frozen import A_ROWS, B_ROWS, CENTRAL_A


def test_registry_shape():
    assert set(r.kind for r in ROUTES.values()) == {"a", "b"}
    assert ROUTES["oracle-a"].k_cap is None
    assert ROUTES["central-a"].k_cap == 0
    assert ROUTES["central-diff-a"].k_cap == 4


def test_route_rows_full_and_capped():
    assert route_rows("pascal-a", 12) == A_ROWS
    assert route_rows("pascal-b", 12) == B_ROWS
    assert route_rows("central-a", 5) == [[1], [1], [3], [7], [19], [51]]
    diff_rows = route_rows("central-diff-a", 8)
    for n, row in enumerate(diff_rows):
        assert row == A_ROWS[n][: min(n, 4) + 1]


def test_route_rows_unknown():
    with pytest.raises(UnknownRoute):
        route_rows("no-such-route", 5)


def test_first_divergence_agreeing_routes():
    for other in ("pascal-a", "column-a", "descending-a", "central-diff-a"):
        assert first_divergence("oracle-a", other, 40) is None
    for other in ("from-a-b", "pascal-b", "four-term-b", "descending-b"):
        assert first_divergence("oracle-b", other, 40) is None


def test_first_divergence_errors():
    with pytest.raises(UnknownRoute):
        first_divergence("oracle-a", "nope", 10)
    with pytest.raises(ValueError):
        first_divergence("oracle-a", "oracle-b", 10)


def test_first_divergence_catches_injected_corruption():
    def broken(n_max):
        rows = [list(r) for r in route_rows("pascal-a", n_max)]
        if n_max >= 6:
            rows[6][2] += 1
        return rows

    ROUTES["injected-a"] = Route("a", None, broken)
    try:
        assert first_divergence("oracle-a", "injected-a", 12) == (6, 2)
        assert first_divergence("injected-a", "oracle-a", 4) is None
    finally:
        del ROUTES["injected-a"]


def test_run_all_small():
    report = run_all(12)
    assert report.ok()
    assert report.table_match == {"a": True, "b": True}
    names = [c.name for c in report.checks]
    assert "table-a" in names
    assert "dimension-count" in names
    assert any(n.startswith("agree:") for n in names)


def test_run_all_rejects_small_max_n():
    with pytest.raises(ValueError):
        run_all(9)
    with pytest.raises(ValueError):
        run_all(12, max_k_edge=-1)


def test_expected_failure_is_documented_with_witness():
    report = run_all(12)
    variant = next(c for c in report.checks if c.name == "b4-fourth-difference-variant")
    assert variant.expected_fail
    assert not variant.passed
    assert variant.ok()
    assert variant.witness == (5, 4)
    assert "-32" in variant.detail and "4" in variant.detail
    corrected = next(c for c in report.checks if c.name == "b4-fourth-difference")
    assert corrected.passed and not corrected.expected_fail


def test_run_all_flags_injected_disagreement():
    def broken(n_max):
        rows = [list(r) for r in route_rows("pascal-b", n_max)]
        if n_max >= 9:
            rows[9][1] -= 2
        return rows

    ROUTES["injected-b"] = Route("b", None, broken)
    try:
        report = run_all(12)
        assert not report.ok()
        bad = [c for c in report.failures() if "injected-b" in c.name]
        assert bad
        assert all(c.witness == (9, 1) for c in bad)
    finally:
        del ROUTES["injected-b"]


def test_xpass_counts_as_failure():
    report = ConsistencyReport(10, 5)
    report.table_match["a"] = True
    report.add("real-pass", True)
    report.add("known-bad", True, expected_fail=True)  # should have failed
    assert not report.ok()
    assert [c.name for c in report.failures()] == ["known-bad"]


def test_report_to_dict_is_json_clean():
    report = run_all(12)
    blob = json.dumps(report.to_dict())
    data = json.loads(blob)
    assert data["ok"] is True
    assert data["max_n"] == "12"
    variant = next(
        c for c in data["checks"] if c["name"] == "b4-fourth-difference-variant"
    )
    assert variant["expected_fail"] is True
    assert variant["witness"] == ["5", "4"]
    assert data["table_match"] == {"a": True, "b": True}
    assert data["notes"]


def test_reference_tables_transcription():
    # The harness's embedded tables and the test suite's frozen tables were
    # transcribed independently; they must agree.
    assert verify.REFERENCE_A == A_ROWS[:11]
    assert verify.REFERENCE_B == B_ROWS[:11]
    assert [r[0] for r in verify.REFERENCE_A] == CENTRAL_A[:11]
