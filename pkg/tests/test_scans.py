"""Tests for interval scans and gap detection."""

import pytest

from levellab.classify import Classification, Status
from levellab.errors import HypothesisError
from levellab.macaulay import HVector
from levellab.scans import Gap, find_gaps, scan_gic, scan_ic


def stub(status):
    return Classification(HVector((1,)), status)


L = Status.LEVEL
N = Status.NONLEVEL
U = Status.UNKNOWN


def test_find_gaps_synthetic():
    def gaps(statuses, start=1):
        values = range(start, start + len(statuses))
        return find_gaps(values, [stub(s) for s in statuses])

    assert gaps([L, U, L]) == (Gap((2,), "unknown"),)
    assert gaps([L, N, L]) == (Gap((2,), "nonlevel"),)
    assert gaps([L, U, N, U, L]) == (Gap((2, 3, 4), "nonlevel"),)
    # runs touching either end are not bracketed, hence not gaps
    assert gaps([U, L, L]) == ()
    assert gaps([L, U, U]) == ()
    assert gaps([L, U, L, N, L]) == (Gap((2,), "unknown"), Gap((4,), "nonlevel"))
    assert gaps([L, L, L]) == ()
    assert gaps([]) == ()


def test_scan_ic_all_level():
    report = scan_ic(HVector.parse("1,3,6,3"), 2, range(3, 7))
    assert report.degrees == (2,)
    assert report.values == (3, 4, 5, 6)
    assert all(c.status is Status.LEVEL for c in report.classifications)
    assert report.gaps == ()
    assert report.by_value()[4].h == (1, 3, 4, 3)


def test_scan_ic_single_point():
    report = scan_ic(HVector.parse("1,3,6,3"), 2, [6])
    assert report.values == (6,)
    assert report.classifications[0].status is Status.LEVEL
    assert report.gaps == ()


def test_scan_ic_validation():
    base = HVector.parse("1,3,6,3")
    with pytest.raises(ValueError):
        scan_ic(base, 0, [3])
    with pytest.raises(ValueError):
        scan_ic(base, 4, [3])
    with pytest.raises(ValueError):
        scan_ic(base, 2, [0, 3])


def test_scan_gic_middle_entry():
    report = scan_gic(HVector.parse("1,3,3,3,1"), 2, range(3, 7))
    # even socle degree, i == e - i: exactly one entry moves
    assert report.degrees == (2,)
    assert all(c.status is Status.LEVEL for c in report.classifications)
    assert all(c.certificate.kind == "criterion" for c in report.classifications)
    assert report.gaps == ()


def test_scan_gic_symmetric_pair():
    report = scan_gic(HVector.parse("1,3,6,7,7,6,3,1"), 3, range(7, 11))
    assert report.degrees == (3, 4)
    assert report.by_value()[9].h == (1, 3, 6, 9, 9, 6, 3, 1)
    assert all(c.status is Status.LEVEL for c in report.classifications)
    assert report.gaps == ()


def test_scan_gic_hypotheses():
    with pytest.raises(HypothesisError):
        scan_gic(HVector.parse("1,3,6,10,4"), 2, [6])
    with pytest.raises(HypothesisError):
        scan_gic(HVector.parse("1,2,2,1,1"), 2, [2])
    base = HVector.parse("1,3,3,3,1")
    with pytest.raises(ValueError):
        scan_gic(base, 0, [3])
    with pytest.raises(ValueError):
        scan_gic(base, 4, [3])


def test_scan_reports_nonlevel_gap(monkeypatch):
    def fake_classify(h, budget=None, *, master_seed=0, prime=0,
                      exact_rational=False):
        v = h[2]
        if v in (3, 7):
            return Classification(h, Status.LEVEL)
        if v == 5:
            return Classification(h, Status.NONLEVEL, condition="stub")
        return Classification(h, Status.UNKNOWN)

    monkeypatch.setattr("levellab.scans.classify", fake_classify)
    report = scan_ic(HVector.parse("1,3,6,3"), 2, range(3, 8))
    assert report.gaps == (Gap((4, 5, 6), "nonlevel"),)
    assert report.by_value()[5].status is Status.NONLEVEL
