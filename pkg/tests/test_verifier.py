"""Identity verification runs, report structure, and serialization round-trips."""

import json

import pytest

from skewlog import (
    GridSpec,
    IdentityId,
    Verdict,
    parse_report,
    verify_identity,
)
from skewlog.verifier import identity_catalog, serialize_report


def test_single_identity_run():
    recs = verify_identity(IdentityId.EQ15)
    assert len(recs) == 1
    rec = recs[0]
    assert rec.verdict is Verdict.PASS
    assert rec.residual == pytest.approx(abs(rec.lhs - rec.rhs), abs=1e-18)
    assert rec.residual <= rec.tolerance


def test_grid_identity_run():
    recs = verify_identity(IdentityId.EQ13)
    assert len(recs) >= 4
    for rec in recs:
        assert rec.verdict is Verdict.PASS
        assert rec.identity is IdentityId.EQ13
        assert rec.params  # every record carries its evaluation point


def test_custom_grid_and_skip():
    # a point outside the series domain must be reported as SKIPPED, not FAIL
    recs = verify_identity(IdentityId.EQ13, grid=GridSpec(t_values=(0.5, 1.5)))
    verdicts = {v.verdict for v in recs}
    assert Verdict.PASS in verdicts
    assert Verdict.SKIPPED in verdicts
    skipped = [r for r in recs if r.verdict is Verdict.SKIPPED]
    assert all(r.residual == 0.0 for r in skipped)
    assert all(r.note for r in skipped)


def test_custom_tolerance_can_fail():
    recs = verify_identity(IdentityId.EQ13, tolerance=1e-18)
    assert any(r.verdict is Verdict.FAIL for r in recs)


def test_records_are_deterministic():
    a = verify_identity(IdentityId.EQ20)
    b = verify_identity(IdentityId.EQ20)
    assert a == b


def test_full_report_all_pass(full_report):
    assert full_report.records
    # summary is keyed by identity, with verdict counts inside
    counts = {}
    for rec in full_report.records:
        per = counts.setdefault(rec.identity.name, {"PASS": 0, "FAIL": 0, "SKIPPED": 0})
        per[rec.verdict.name] += 1
    assert counts == full_report.summary
    assert all(per["FAIL"] == 0 for per in full_report.summary.values())


def test_full_report_covers_every_identity(full_report):
    seen = {rec.identity for rec in full_report.records}
    assert seen == set(IdentityId)


def test_report_metadata_and_notes(full_report):
    assert "tolerances" in full_report.metadata
    assert "version" in full_report.metadata
    # the three documented catalog corrections ship as notes with evidence
    assert len(full_report.notes) == 3
    joined = " ".join(full_report.notes)
    assert "corrected" in joined


def test_json_round_trip(full_report):
    blob = serialize_report(full_report, "json")
    parsed = json.loads(blob)
    assert set(parsed) == {"metadata", "notes", "records", "summary"}
    restored = parse_report(blob, "json")
    assert restored.records == full_report.records
    assert restored.summary == full_report.summary
    assert restored.notes == full_report.notes


def test_json_is_stable(full_report):
    a = serialize_report(full_report, "json")
    b = serialize_report(full_report, "json")
    assert a == b


def test_csv_round_trip(full_report):
    blob = serialize_report(full_report, "csv")
    lines = blob.decode().splitlines()
    assert lines[0] == "identity,params,lhs,rhs,residual,tolerance,verdict"
    assert len(lines) == len(full_report.records) + 1
    restored = parse_report(blob, "csv")
    assert len(restored.records) == len(full_report.records)
    for orig, back in zip(full_report.records, restored.records):
        assert back.identity == orig.identity
        assert back.lhs == orig.lhs  # %.17g survives the double round-trip
        assert back.rhs == orig.rhs
        assert back.verdict == orig.verdict
    assert restored.summary == full_report.summary


def test_unknown_format_rejected(full_report):
    with pytest.raises(ValueError):
        serialize_report(full_report, "xml")
    with pytest.raises(ValueError):
        parse_report(b"{}", "xml")


def test_identity_catalog_covers_enum():
    cat = identity_catalog()
    assert len(cat) == len(IdentityId)
