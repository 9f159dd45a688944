import json
import subprocess
import sys

import pytest

from cycgroups.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_census_text(capsys):
    code, out, _ = run(capsys, "census", "D(12)")
    assert code == 0
    assert "|C(G)| = 10   deficiency = 2" in out


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "Z(2) x Z(4)", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["cyclic_total"] == 6 and data["deficiency"] == 2 and data["order"] == 8
    assert [r["d"] for r in data["rows"]] == [1, 2, 4, 8]
    assert [r["count"] for r in data["rows"]] == [1, 3, 2, 0]


def test_census_presentation(capsys):
    code, out, _ = run(capsys, "census", "P< a,b | a^4, b^2, b a b a >", "--json")
    assert code == 0 and json.loads(out)["cyclic_total"] == 7


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "deficiency", "--k", "2", "--max-order", "12"],
        ["verify", "deficiency", "--k", "1", "--max-order", "8"],
        ["verify", "identities", "--max-order", "8"],
        ["verify", "case1", "--m", "4"],
        ["verify", "case2", "--max-m", "3"],
        ["verify", "sylow-core"],
    ],
)
def test_verify_passes(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert "verdict: PASS" in out
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0 and json.loads(out)["verdict"] == "pass"


def test_verify_failure_exit_code(capsys, monkeypatch):
    from cycgroups import theorems

    monkeypatch.setitem(theorems.EXPECTED, 1, [("Z3", "Z(3)")])
    code, out, _ = run(capsys, "verify", "deficiency", "--k", "1", "--max-order", "8")
    assert code == 1 and "verdict: FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["census", "Q(12)"],
        ["census", "Z(3) x"],
        ["census", "Z(64) x Z(2)"],
        ["census", "P< a | a^ >"],
        ["coset-enum", "< a | a^3"],
        ["enumerate", "--order", "17"],
        ["enumerate", "--order", "20", "--method", "catalog"],
        ["verify", "case2", "--max-m", "0"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code in (2, 3)
    assert err.startswith("error:")


def test_parse_error_codes(capsys):
    assert run(capsys, "census", "Q(12)")[0] == 2
    assert run(capsys, "census", "Z(64) x Z(2)")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["verify", "deficiency", "--k", "5"])
    assert e.value.code == 2
    capsys.readouterr()


def test_resource_limits(capsys, monkeypatch):
    import cycgroups.smallgroups as sg

    monkeypatch.setattr(sg, "_oracle_cache", {})
    code, _, err = run(capsys, "coset-enum", "< a,b | a^2, b^3 >", "--max-cosets", "100")
    assert code == 3 and "error:" in err
    code, _, _ = run(capsys, "coset-enum", "< a,b | a^8, b^8, b^-1 a b a, a^4 b^-4 >", "--max-cosets", "10")
    assert code == 3
    code, _, _ = run(capsys, "enumerate", "--order", "8", "--node-budget", "10")
    assert code == 3
    code, _, _ = run(capsys, "verify", "case2", "--max-m", "5")
    assert code == 3
    code, _, _ = run(capsys, "census", "P< a | a^65 >")
    assert code == 3


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "8", "--json")
    data = json.loads(out)
    assert code == 0 and data["exhaustive"] and len(data["groups"]) == 5
    assert sorted(g["deficiency"] for g in data["groups"]) == [0, 1, 2, 3, 4]
    code, out, _ = run(capsys, "enumerate", "--order", "32", "--method", "catalog")
    assert code == 0 and "partial list" in out


def test_iso(capsys):
    code, out, _ = run(capsys, "iso", "Z(6)", "Z(2) x Z(3)")
    assert code == 0 and out.startswith("isomorphic")
    code, out, _ = run(capsys, "iso", "D(8)", "Q(8)", "--json")
    assert code == 1 and json.loads(out) == {"isomorphic": False, "witness": None}


def test_coset_enum(capsys):
    code, out, _ = run(capsys, "coset-enum", "< a,b | a^3, b^2, a b a b >", "--json")
    data = json.loads(out)
    assert code == 0 and data["order"] == 6 and len(data["table"]) == 6
    assert data["generators"] == ["a", "b"]
    assert all(len(r) == 4 for r in data["table"])
    code, out, _ = run(capsys, "coset-enum", "< a | a^5 >")
    assert out.splitlines()[0].startswith("order 5")


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "cycgroups", "census", "S(3)", "--json"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and json.loads(r.stdout)["cyclic_total"] == 5
    r = subprocess.run([sys.executable, "-m", "cycgroups", "census", "X(3)"], capture_output=True, text=True)
    assert r.returncode == 2
