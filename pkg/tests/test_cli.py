"""End-to-end tests of the command line interface via main()."""

import io

import pytest

from levellab.classify import Certificate, Classification, Status
from levellab.cli import main
from levellab.store import STORE_ENV


@pytest.fixture(autouse=True)
def no_ambient_store(monkeypatch):
    monkeypatch.delenv(STORE_ENV, raising=False)


def run(argv):
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


def test_expand():
    code, text = run(["expand", "25", "2"])
    assert code == 0
    assert text == "25 = C(7,2)+C(4,1)\n"


def test_bound_rules():
    code, text = run(["bound", "upper", "25", "2"])
    assert (code, text) == (0, "66\n")
    code, text = run(["bound", "bg", "25", "2"])
    assert (code, text) == (0, "7\n")
    code, text = run(["bound", "ci", "25", "2", "10"])
    assert (code, text) == (0, "7..10\n")
    code, text = run(["bound", "ci", "2", "2", "1"])
    assert code == 0
    assert text.startswith("infeasible")


def test_bound_ci_needs_variable_count(capsys):
    code, text = run(["bound", "ci", "25", "2"])
    assert code == 1
    assert text == ""
    assert "error:" in capsys.readouterr().err


def test_osequence_and_si():
    assert run(["osequence", "1,3,6,10"]) == (0, "ok\n")
    code, text = run(["osequence", "1,3,5,8,8,5,3,1"])
    assert code == 0
    assert text.startswith("violation:")

    assert run(["si", "1,3,5,7,7,5,3,1"]) == (0, "ok\n")
    assert run(["si", "1,3,6,10,4"]) == (0, "violation: not symmetric\n")
    code, text = run(["si", "1,3,6,5,6,3,1"])
    assert (code, text) == (0, "violation: first half is not differentiable\n")


def test_classify_outputs():
    code, text = run(["classify", "1,3,6,9,3"])
    assert code == 0
    assert "status: level" in text
    assert "certificate: construction" in text
    assert "ranks: 1,3,6,9,3" in text

    code, text = run(["classify", "1,3,6,10,3"])
    assert code == 0
    assert "status: nonlevel" in text
    assert "condition: ci-range" in text

    code, text = run(["classify", "1,5,4,5"])
    assert code == 0
    assert "status: unknown" in text
    assert "note:" in text


def test_construct_powers():
    code, text = run(["construct", "powers", "3", "5", "5"])
    assert code == 0
    assert text.startswith("# h: 1,3,5,5,3,1\n# seed: ")
    assert "ring r=3 e=5" in text


def test_construct_is_deterministic():
    first = run(["construct", "compressed", "3", "4", "2", "--seed", "11"])
    second = run(["construct", "compressed", "3", "4", "2", "--seed", "11"])
    assert first == second
    third = run(["construct", "compressed", "3", "4", "2", "--seed", "12"])
    assert third != first


def test_file_pipeline(tmp_path):
    module_file = str(tmp_path / "module.txt")
    code, text = run(["construct", "socle3", "3", "--parts", "3,3"])
    assert code == 0
    assert text.startswith("# h: 1,3,6,2\n")
    with open(module_file, "w", encoding="utf-8") as fh:
        fh.write(text)

    code, text = run(["hvec", module_file])
    assert code == 0
    assert "h: 1,3,6,2" in text
    assert "type: 2" in text

    code, text = run(["augment", module_file, "--count", "1"])
    assert code == 0
    assert text.startswith("# h: 1,3,6,3\n")
    bigger_file = str(tmp_path / "bigger.txt")
    with open(bigger_file, "w", encoding="utf-8") as fh:
        fh.write(text)

    code, text = run(["truncate", bigger_file, "--to", "2"])
    assert code == 0
    assert text.startswith("# h: 1,3,6\n")

    code, text = run(["quotient", bigger_file, "--type", "1"])
    assert code == 0
    assert text.startswith("# h: 1,")


def test_quotient_type_too_large(tmp_path, capsys):
    code, text = run(["construct", "socle3", "3", "--parts", "3,3"])
    module_file = str(tmp_path / "module.txt")
    with open(module_file, "w", encoding="utf-8") as fh:
        fh.write(text)
    code, text = run(["quotient", module_file, "--type", "9"])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_missing_file_is_io_error(capsys):
    code, text = run(["hvec", "/nonexistent/module.txt"])
    assert code == 1
    assert "error: io:" in capsys.readouterr().err


def test_scan_store_verify_report(tmp_path):
    store = str(tmp_path / "store.jsonl")
    code, text = run(["scan-ic", "1,3,6,3", "--at", "2",
                      "--from", "3", "--to", "6", "--store", store])
    assert code == 0
    assert "base: 1,3,6,3  degrees: 2" in text
    assert "value 3: level" in text
    assert "gaps: none" in text

    code, text = run(["verify", store])
    assert (code, text) == (0, "verified 4 records\n")

    code, text = run(["report", store])
    assert code == 0
    assert "records: 4" in text
    assert "level: 4  nonlevel: 0  unknown: 0" in text
    assert "family r=3 e=3: 4" in text


def test_verify_without_store_fails(capsys):
    code, text = run(["verify"])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        run(["classify", "1,x,3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["bound"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run([])
    assert exc.value.code == 2


def test_nonprime_modulus_rejected(capsys):
    code, text = run(["expand", "25", "2", "--prime", "10"])
    assert code == 1
    assert "error: value: 10 is not prime" in capsys.readouterr().err


def test_nonlevel_gap_exits_4(monkeypatch):
    def fake_classify(h, budget=None, *, master_seed=0, prime=0,
                      exact_rational=False):
        v = h[2]
        if v in (3, 7):
            cert = Certificate(kind="criterion", criterion="stub", detail="stub")
            return Classification(h, Status.LEVEL, certificate=cert)
        if v == 5:
            return Classification(h, Status.NONLEVEL, condition="stub",
                                  detail="stub")
        return Classification(h, Status.UNKNOWN)

    monkeypatch.setattr("levellab.scans.classify", fake_classify)
    code, text = run(["scan-ic", "1,3,6,3", "--at", "2",
                      "--from", "3", "--to", "7"])
    assert code == 4
    assert "gap: 4..6 kind=nonlevel" in text
    assert "value 5: nonlevel (stub)" in text
