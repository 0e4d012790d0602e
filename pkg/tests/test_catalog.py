import pytest

from hopfwit.catalog import EXISTS, NOT_EXISTS, catalog_run, entries


@pytest.fixture(scope="module")
def report():
    return catalog_run()


REQUIRED = [
    "kC2/QQ", "kC2/GF2", "kC2/GF3", "kC2/GF5", "kC3/QQ", "kC3/GF3", "kS3/GF2", "kS3/GF5",
    "H4/QQ", "H4/GF3", "Q(sqrt2)/Q", "F2(u)/F2(u^2)", "flip(k,kC2,k)/QQ", "flip(k,k,kC2)/QQ",
    "relHopf(kC2,kC2)/QQ", "relHopf(H4,H4)/QQ", "YD(kC2)/QQ", "[kC2,kC2]/QQ", "[H4,H4]/QQ",
]


def test_entries_sorted_and_complete():
    names = [e.name for e in entries()]
    assert names == sorted(names)
    assert len(set(names)) == len(names)
    for n in REQUIRED:
        assert n in names


def test_all_rows_pass(report):
    bad = [r for r in report.rows if not r["pass"]]
    assert not bad, bad
    assert report.passed and report.witnesses > 50


def test_deterministic(report):
    again = catalog_run()
    assert again.rows == report.rows


def row(report, entry, solver):
    return next(r for r in report.rows if r["entry"] == entry and r["solver"] == solver)


def test_expected_outcomes(report):
    assert row(report, "kC2/QQ", "integral")["outcome"] == EXISTS
    assert row(report, "kC2/QQ", "casimir")["outcome"] == EXISTS
    assert row(report, "kC2/GF2", "integral")["outcome"] == NOT_EXISTS
    assert row(report, "kC2/GF2", "casimir")["outcome"] == NOT_EXISTS
    assert row(report, "kC2/GF2", "agreement:integral~casimir")["outcome"] == "agree"
    assert row(report, "kS3/GF3", "integral")["outcome"] == NOT_EXISTS
    assert row(report, "kS3/GF5", "integral")["outcome"] == EXISTS
    assert row(report, "F2(u)/F2(u^2)", "casimir")["outcome"] == NOT_EXISTS
    assert row(report, "F2(u)/F2(u^2)", "every test monic of L-spaces splits")["pass"]


def test_filter():
    rep = catalog_run("H4/")
    assert {r["entry"] for r in rep.rows} == {"H4/QQ", "H4/GF3"}
    assert catalog_run("no-such-entry").rows == []


def test_report_json_shape(report):
    js = report.to_json()
    assert js["pass"] is True
    assert all(set(r) == {"entry", "solver", "outcome", "expected", "pass"} for r in js["rows"])
