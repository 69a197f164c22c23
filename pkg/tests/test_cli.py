import io as stdio
import json
import subprocess
import sys

import pytest

from partialhopf import corpus, io
from partialhopf.cli import run
from partialhopf.errors import InputError
from partialhopf.groupoid import groupoid_algebra, pair_groupoid
from partialhopf.paction import ground_field_action


def call(*argv):
    buf = stdio.StringIO()
    code = run(list(argv), stdout=buf)
    text = buf.getvalue()
    fields = dict(line.split(": ", 1) for line in text.splitlines() if ": " in line and not line.startswith("  "))
    return code, fields, text


@pytest.fixture()
def files(tmp_path):
    G = pair_groupoid(2)
    H = groupoid_algebra(G)
    out = {}

    def put(name, obj):
        path = tmp_path / f"{name}.json"
        io.dump_json(obj, path)
        out[name] = str(path)

    put("wha", io.wha_to_dict(H))
    bad = io.wha_to_dict(H)
    bad["antipode"] = [["1" if i == j else "0" for j in range(4)] for i in range(4)]
    put("bad_wha", bad)
    put("groupoid", io.groupoid_to_dict(G))
    put("z2z2", io.groupoid_to_dict(corpus.groupoids()["Z2+Z2"]))
    put("action", io.action_to_dict(ground_field_action(H, (1, 0, 0, 0))))
    put("gaction", io.groupoid_action_to_dict(corpus.groupoid_actions()["pair2/Q4-partial"]))
    put("broken", {"dim": 2})
    return out


def test_verify_wha(files):
    code, f, _ = call("verify-wha", "--input", files["wha"])
    assert code == 0 and f["status"] == "pass" and f["is_hopf"] == "false"


def test_corrupted_antipode_fails_with_itemized_axiom(files):
    code, f, text = call("verify-wha", "--input", files["bad_wha"])
    assert code == 1 and f["status"] == "fail"
    assert "weak_hopf: antipode_eps_L" in text


def test_groupoid_algebra_output_verifies(files, tmp_path):
    out = tmp_path / "H.json"
    code, f, _ = call("groupoid-algebra", "--input", files["groupoid"], "--out", str(out))
    assert code == 0
    assert io.wha_from_dict(json.loads(out.read_text())) == groupoid_algebra(pair_groupoid(2))
    assert call("verify-wha", "--input", str(out))[0] == 0


def test_classify_ground(files):
    code, f, _ = call("classify-ground", "--input", files["groupoid"])
    assert code == 0 and (f["count"], f["global_count"], f["oracle.agrees"]) == ("2", "0", "true")
    code, f, _ = call("classify-ground", "--input", files["z2z2"])
    assert (f["count"], f["global_count"]) == ("4", "2")
    code, f, _ = call("classify-ground", "--input", files["z2z2"], "--oracle-bound", "2")
    assert code == 0 and f["oracle"] == "skipped (bound)"


def test_check_paction(files):
    code, f, _ = call("check-paction", "--input", files["action"], "--emit-tables")
    assert code == 0 and (f["symmetric"], f["global"]) == ("true", "false")
    assert "act.g12[0]" in f


def test_smash_dims(files):
    code, f, _ = call("smash", "--input", files["action"])
    assert code == 0
    assert (f["dim_ambient"], f["dim_smash"], f["dim_partial_smash"]) == ("4", "2", "1")
    assert f["right_unit_failures"] == "[1#g12]"


def test_globalize(files):
    code, f, _ = call("globalize", "--input", files["action"])
    assert code == 0 and (f["dim_B"], f["is_minimal"], f["is_ideal"]) == ("2", "true", "true")


def test_morita(files):
    code, f, _ = call("morita", "--input", files["action"])
    assert code == 0 and (f["surjective_round"], f["surjective_square"]) == ("true", "true")
    assert (f["dim_partial_smash"], f["dim_smash_B"], f["dim_M"], f["dim_N"]) == ("1", "4", "2", "2")


def test_roundtrip(files):
    code, f, _ = call("roundtrip", "--input", files["gaction"])
    assert code == 0
    assert f["groupoid_roundtrip_exact"] == f["algebra_roundtrip_exact"] == "true"


def test_unreadable_input(files, tmp_path):
    code, f, text = call("verify-wha", "--input", files["broken"])
    assert code == 2 and "InputError" in text
    assert call("smash", "--input", str(tmp_path / "missing.json"))[0] == 2


def test_reports_are_deterministic(files):
    for cmd, key in [("verify-wha", "wha"), ("classify-ground", "groupoid"), ("smash", "action"),
                     ("globalize", "action"), ("morita", "action"), ("roundtrip", "gaction")]:
        assert call(cmd, "-i", files[key], "--emit-tables")[2] == call(cmd, "-i", files[key], "--emit-tables")[2]


def test_module_entry_point(files):
    r = subprocess.run([sys.executable, "-m", "partialhopf", "smash", "--input", files["action"]],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "status: pass" in r.stdout


def test_json_roundtrips(whas, symmetric_actions):
    for H in whas.values():
        assert io.wha_from_dict(json.loads(io.dump_json(io.wha_to_dict(H)))) == H
    for p in symmetric_actions.values():
        assert io.action_from_dict(json.loads(io.dump_json(io.action_to_dict(p)))) == p
    for pga in corpus.groupoid_actions().values():
        assert io.groupoid_action_from_dict(io.groupoid_action_to_dict(pga)) == pga


def test_rationals_are_written_as_strings():
    A = io.algebra_from_dict({"dim": 1, "mult": [[0, 0, 0, "1/2"]], "unit": ["2"]})
    d = io.algebra_to_dict(A)
    assert d["mult"] == [[0, 0, 0, "1/2"]] and d["unit"] == ["2"]
    with pytest.raises(InputError):
        io.algebra_from_dict({"dim": 1, "mult": [[0, 0, 0, "x"]]})
