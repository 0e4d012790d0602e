import json

import pytest

from hopfwit.cli import run
from hopfwit.entwine import entwining_yetter_drinfeld
from hopfwit.exactfield import GF, QQ, FieldSpec, spec_to_json
from hopfwit.fuzz import make_rng, random_module_map, random_summand
from hopfwit.serialize import dump
from hopfwit.strucalg import cyclic_group_table, group_algebra, sweedler_h4


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)
    kc2 = group_algebra(cyclic_group_table(2), QQ())
    return {
        "dir": tmp_path,
        "write": write,
        "kc2_q": write("kc2_q.json", dump(kc2)),
        "kc2_gf2": write("kc2_gf2.json", dump(group_algebra(cyclic_group_table(2), GF(2)))),
        "h4_q": write("h4_q.json", dump(sweedler_h4(QQ()))),
        "rh": write("rh.json", {"construction": "relative-hopf", "L": dump(kc2)}),
        "yd": write("yd.json", {"construction": "yetter-drinfeld", "L": dump(kc2)}),
    }


def test_solve_integral(files, capsys):
    out = str(files["dir"] / "t.json")
    assert run(["solve", "integral", "--input", files["kc2_q"], "--out", out]) == 0
    w = json.load(open(out))
    assert w["tag"] == "NormalizedIntegral" and w["verified"] is True
    assert w["data"]["entries"] == [["1/2"], ["1/2"]]
    assert run(["verify", "integral", "--input", files["kc2_q"], "--witness", out]) == 0


def test_solve_no_witness(files, capsys):
    assert run(["solve", "integral", "--input", files["kc2_gf2"]]) == 1
    assert "NoWitness" in capsys.readouterr().out


def test_check_hopf(files, capsys):
    assert run(["check", "hopf", "--input", files["h4_q"]]) == 0
    assert run(["check", "hopf", "--input", files["h4_q"], "--json"]) == 0
    out = capsys.readouterr().out
    assert '"pass": true' in out


def test_check_failure_exit_1(files):
    H = group_algebra(cyclic_group_table(2), QQ())
    obj = dump(H)
    obj["unit"] = ["0", "0"]
    assert run(["check", "algebra", "--input", files["write"]("bad.json", obj)]) == 1


@pytest.mark.parametrize("kind, key", [
    ("integral", "kc2_q"), ("dual-integral", "kc2_q"), ("casimir", "kc2_q"),
    ("theta", "rh"), ("theta", "yd"), ("cocasimir", "yd"), ("total-integral", "kc2_q"),
    ("cointegral", "kc2_q"), ("quantum-integral", "kc2_q"),
])
def test_solve_then_verify_round_trip(files, kind, key):
    out = str(files["dir"] / f"{kind}.json")
    assert run(["solve", kind, "--input", files[key], "--out", out]) == 0
    assert run(["verify", kind, "--input", files[key], "--witness", out]) == 0


def test_verify_refuses_other_context(files, capsys):
    out = str(files["dir"] / "t.json")
    run(["solve", "integral", "--input", files["kc2_q"], "--out", out])
    assert run(["verify", "integral", "--input", files["h4_q"], "--witness", out]) == 2
    err = capsys.readouterr().err
    assert "ContextMismatch" in err and len(err.strip().splitlines()) == 1


def test_transport_chain(files):
    d = files["dir"]
    run(["solve", "integral", "--input", files["kc2_q"], "--out", str(d / "t.json")])
    assert run(["transport", "--direction", "integral->idempotent", "--input", files["kc2_q"],
                "--witness", str(d / "t.json"), "--out", str(d / "e.json")]) == 0
    assert run(["verify", "casimir", "--input", files["kc2_q"],
                "--witness", str(d / "e.json")]) == 0
    run(["solve", "theta", "--input", files["rh"], "--out", str(d / "th.json")])
    assert run(["transport", "--direction", "theta->totalintegral", "--input", files["rh"],
                "--witness", str(d / "th.json"), "--out", str(d / "phi.json")]) == 0
    assert run(["verify", "total-integral", "--input", files["kc2_q"],
                "--witness", str(d / "phi.json")]) == 0


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["solve"],
    ["solve", "integral"],
    ["solve", "integral", "--input", "/nonexistent.json"],
    ["transport", "--direction", "up", "--input", "x", "--witness", "y"],
    ["deform", "--map", "/nonexistent.json"],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2
    err = capsys.readouterr().err
    assert len(err.strip().splitlines()) == 1


def test_malformed_json(files, capsys):
    p = files["dir"] / "broken.json"
    p.write_text("{")
    assert run(["check", "hopf", "--input", str(p)]) == 2
    p.write_text(json.dumps({"field": {"kind": "GFp", "p": 4}, "dim": 1}))
    assert run(["check", "hopf", "--input", str(p)]) == 2
    assert len(capsys.readouterr().err.strip().splitlines()) == 2


def test_deform_fieldext(files, capsys):
    spec = spec_to_json(FieldSpec.extension(FieldSpec.rationals(), ["-2", "0", "1"]))
    d = files["write"]("k.json", spec)
    g = files["write"]("g.json", {"f": [[1, 0], [0, -1]]})
    out = str(files["dir"] / "p.json")
    assert run(["deform", "--fieldext", d, "--map", g, "--out", out]) == 0
    assert json.load(open(out))["entries"] == [["0", "0"], ["0", "0"]]
    q = files["write"]("q.json", spec_to_json(FieldSpec.rationals()))
    assert run(["deform", "--fieldext", q, "--map", g]) == 2


def test_deform_theta(files):
    F = QQ()
    e = entwining_yetter_drinfeld(group_algebra(cyclic_group_table(2), F))
    rng = make_rng("cli-deform")
    M, _, _ = random_summand(e, rng)
    N, _, _ = random_summand(e, rng)
    g = random_module_map(M, N, rng)
    d = files["dir"]
    run(["solve", "theta", "--input", files["yd"], "--out", str(d / "th.json")])
    gm = files["write"]("gm.json", {"M": dump(M), "N": dump(N), "g": dump(g)})
    out = str(d / "pg.json")
    assert run(["deform", "--theta", str(d / "th.json"), "--input", files["yd"],
                "--map", gm, "--out", out]) == 0
    assert json.load(open(out))["rows"] == N.dim


def test_catalog_json(files, capsys):
    assert run(["catalog", "--filter", "kC2/QQ", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows and all(set(r) == {"entry", "solver", "outcome", "expected", "pass"} for r in rows)
    assert all(r["pass"] for r in rows)
