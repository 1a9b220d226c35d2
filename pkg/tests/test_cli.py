import json
import subprocess
import sys

import pytest

from drinfeld import GF, SkewPoly, TModuleMorphism, io, new_drinfeld
from drinfeld.cli import main, run


@pytest.fixture
def files(tmp_path):
    F2 = GF(2, theta=1)
    C = new_drinfeld(F2, [1, 1])
    out = {}

    def put(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        out[name] = str(path)

    put("carlitz.json", io.tmodule_to_json(C))
    put("f.json", io.morphism_to_json(TModuleMorphism(C, C, [[SkewPoly.tau(F2)]])))
    put("zero.json", io.morphism_to_json(TModuleMorphism(C, C, [[SkewPoly(F2)]])))
    F4 = GF(2, 2, q=2, theta=2)
    E = new_drinfeld(F4, [2, 1, 1])
    put("rank2.json", io.tmodule_to_json(E))
    put("c4.json", io.tmodule_to_json(new_drinfeld(F4, [2, 1])))
    put("motive.json", io.motive_to_json(__import__("drinfeld").motive_of(E)))
    put("shtuka.json", {"ring": F4.to_json(), "n": 2, "F": [[0, 0], [0, 1]]})
    (tmp_path / "broken.json").write_text("{")
    out["broken.json"] = str(tmp_path / "broken.json")
    return out


def test_torsion_example(files):
    code, rep = run(["torsion", "--module", files["carlitz.json"], "--ideal", "t"])
    assert code == 0
    assert len(rep["points"]) == 2
    assert rep["module"] == {"rank": 1, "over": "F_2[t]/(t)"}


def test_dual_example(files):
    code, rep = run(["dual", "--map", files["f.json"]])
    assert code == 0
    assert (rep["a"], rep["s"], rep["verified"]) == ("t + 1", 1, True)
    assert rep["s_minimal"] is True


def test_selfcheck():
    code, rep = run(["selfcheck", "--seed", "7"])
    assert code == 0 and rep["ok"] and rep["passed"] == rep["total"] > 0


def test_exit_codes(files):
    assert run(["dual", "--map", files["zero.json"]])[0] == 1
    assert run(["kernel", "--map", files["zero.json"]])[0] == 1
    code, rep = run(["torsion", "--module", files["broken.json"], "--ideal", "t"])
    assert code == 2 and rep["error"] == "MalformedInput"
    assert run(["torsion", "--module", files["carlitz.json"]])[0] == 2
    assert run(["nonsense"])[0] == 2
    assert run(["torsion", "--module", "/nonexistent.json", "--ideal", "t"])[0] == 2
    assert run(["torsion", "--module", files["carlitz.json"], "--ideal", "t", "--bogus"])[0] == 2


def test_other_commands(files):
    code, rep = run(["validate", "--module", files["rank2.json"]])
    assert code == 0 and rep["rank"] == 2
    code, rep = run(["validate", "--shtuka", files["shtuka.json"]])
    assert code == 0 and rep == {"kind": "fin_shtuka", "n": 2, "etale": False, "nilpotent": False}
    code, rep = run(["motive", "--module", files["rank2.json"]])
    assert code == 0 and (rep["rank"], rep["dimension"]) == (2, 1)
    code, rep = run(["inverse", "--motive", files["motive.json"]])
    assert code == 0 and io.tmodule_from_json(rep["module"]).rank == 2
    code, rep = run(["inverse", "--module", files["rank2.json"]])
    assert code == 0 and rep["verified"]
    code, rep = run(["isogeny-check", "--map", files["f.json"]])
    assert code == 0 and rep["agree"] and rep["separable"] is False and rep["coker_dim"] == 1
    code, rep = run(["kernel", "--map", files["f.json"]])
    assert code == 0 and rep["count"] == 1 and rep["coker_dim"] == 1
    code, rep = run(["isogenous", "--module", files["c4.json"], "--module2", files["rank2.json"]])
    assert code == 0 and rep == {"isogenous": False, "map": None}
    code, rep = run(["frobenius", "--module", files["carlitz.json"], "--l", "2"])
    assert code == 0 and rep["pi"] == [[[[1], [], [1]]]] and rep["central"]
    code, rep = run(["local", "--module", files["carlitz.json"], "--prime", "t+1", "--precision", "4"])
    assert code == 0 and rep["order_exponents"] == [1, 2, 3, 4] and rep["omega_dim"] == 1 and rep["formal"]


def test_schema_flag(capsys):
    assert main(["--schema"]) == 0
    schemas = json.loads(capsys.readouterr().out)
    assert {"tmodule", "motive", "fin_shtuka", "local_shtuka", "dual_certificate"} <= set(schemas)


def test_emitted_objects_reparse(files):
    _, rep = run(["inverse", "--module", files["rank2.json"]])
    assert io.morphism_from_json(rep["isomorphism"]).target == io.tmodule_from_json(rep["module"])
    _, rep = run(["local", "--module", files["carlitz.json"], "--prime", "t+1", "--precision", "3"])
    L = io.local_from_json(rep["local_shtuka"])
    assert io.local_to_json(L) == rep["local_shtuka"]


def test_deterministic_bytes(files):
    cmd = [sys.executable, "-m", "drinfeld.cli", "torsion", "--module", files["rank2.json"], "--ideal", "t+1"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["count"] == 4
