import contextlib
import io
import json
import os
import subprocess
import sys

import pytest

from adframe import (adframe_to_json, build_ado, lattice_to_json,
                     space_to_json, subset_lattice)
from adframe.cli import main, render_dot

from helpers import CHAIN3, SIERPINSKI


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def payloads(tmp_path):
    paths = {}

    def dump(name, doc):
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(doc))
        paths[name] = str(p)

    dump("space", space_to_json(SIERPINSKI))
    dump("lattice", lattice_to_json(subset_lattice(CHAIN3, "opens")))
    frame_doc = adframe_to_json(build_ado(SIERPINSKI))
    dump("frame", frame_doc)
    broken_laws = dict(frame_doc)
    broken_laws["tot"] = [p for p in frame_doc["tot"] if p != [2, 2]]
    dump("lawless", broken_laws)
    dump("bad_topology", {"points": 3, "opens": [[], [0], [1], [0, 1, 2]],
                          "leq": []})
    paths["garbage"] = str(tmp_path / "garbage.json")
    (tmp_path / "garbage.json").write_text("{nope")
    return paths


# ---------------------------------------------------------------------------
# validate


def test_validate_each_payload_kind(payloads):
    for name, kind in (("space", "space"), ("lattice", "lattice"),
                       ("frame", "adframe")):
        code, out, _ = run_cli("validate", "--in", payloads[name])
        assert code == 0
        assert json.loads(out)["kind"] == kind


def test_validate_lawless_frame_exits_one(payloads):
    code, out, _ = run_cli("validate", "--in", payloads["lawless"])
    assert code == 1
    doc = json.loads(out)
    assert doc["ok"] is False
    assert any(f["law"].startswith("tot") for f in doc["failures"])


def test_malformed_inputs_exit_two(payloads):
    for path in (payloads["bad_topology"], payloads["garbage"], "/no/such.json"):
        code, _, err = run_cli("validate", "--in", path)
        assert code == 2
        assert err.strip().startswith("error:")


# ---------------------------------------------------------------------------
# construction verbs


def test_ado_output_roundtrips(payloads, tmp_path):
    out_path = str(tmp_path / "frame_out.json")
    code, _, _ = run_cli("ado", "--in", payloads["space"], "--variant", "both",
                         "--out", out_path)
    assert code == 0
    doc = json.loads(open(out_path).read())
    assert doc["variant"] == "both"
    code, out, _ = run_cli("validate", "--in", out_path)
    assert code == 0 and json.loads(out)["ok"] is True
    # no stray temp files from the atomic write
    assert [f for f in os.listdir(tmp_path) if f.startswith(".adframe-")] == []


def test_adpt_accepts_space_or_frame(payloads):
    code_a, out_a, _ = run_cli("adpt", "--in", payloads["space"])
    code_b, out_b, _ = run_cli("adpt", "--in", payloads["frame"])
    assert code_a == code_b == 0
    assert json.loads(out_a)["points"] == json.loads(out_b)["points"]
    assert json.loads(out_a)["points"] == [{"x": [2], "s": [1, 2]},
                                           {"x": [1, 2], "s": [2]}]


def test_ads_and_sobrify_shapes(payloads):
    code, out, _ = run_cli("ads", "--in", payloads["space"], "--variant", "up")
    assert code == 0
    assert len(json.loads(out)["pairs"]) == 2
    code, out, _ = run_cli("sobrify", "--in", payloads["space"])
    assert code == 0
    assert json.loads(out)["unit"] == [0, 1]


def test_construction_verbs_need_space_payload(payloads):
    code, _, err = run_cli("ads", "--in", payloads["lattice"])
    assert code == 2 and "space payload" in err


# ---------------------------------------------------------------------------
# check and sweep


def test_check_emits_ndjson_records():
    code, out, _ = run_cli("check", "--id", "IDEMPOTENT", "--sweep", "n=2")
    assert code == 0
    records = [json.loads(line) for line in out.strip().splitlines()]
    assert len(records) == 48
    assert {r["verdict"] for r in records} == {"pass"}
    assert set(records[0]) == {"id", "instance", "verdict", "witness", "ms"}


def test_check_expected_fail_still_exits_zero():
    code, out, _ = run_cli("check", "--id", "CEX-ADS", "--sweep", "n=2")
    assert code == 0
    verdicts = {json.loads(l)["verdict"] for l in out.strip().splitlines()}
    assert verdicts == {"expected-fail"}


def test_check_with_payload_file(payloads):
    code, out, _ = run_cli("check", "--id", "IDEMPOTENT", "--in",
                           payloads["frame"])
    assert code == 0
    assert json.loads(out.strip().splitlines()[0])["verdict"] == "pass"


def test_check_usage_errors():
    code, _, err = run_cli("check", "--id", "NOPE", "--sweep", "n=1")
    assert code == 2 and "known ids" in err
    code, _, err = run_cli("check", "--id", "ADO-VALID", "--sweep", "bogus")
    assert code == 2
    code, _, err = run_cli("check", "--id", "ADO-VALID", "--sweep", "count=3")
    assert code == 2  # n is required


def test_check_budget_exit_code():
    code, out, err = run_cli("check", "--id", "ADS-ISO", "--sweep", "n=3",
                             "--budget-ms", "1")
    assert code == 1
    assert "budget" in err


def test_sweep_all_checks_smallest_size():
    code, out, _ = run_cli("sweep", "--sweep", "n=1", "--seed", "0")
    assert code == 0
    records = [json.loads(line) for line in out.strip().splitlines()]
    assert {r["verdict"] for r in records} <= {"pass", "skip", "expected-fail"}
    assert len({r["id"] for r in records}) >= 15


def test_sweep_can_filter_to_one_id():
    code, out, _ = run_cli("sweep", "--id", "ADO-VALID", "--sweep", "n=2")
    assert code == 0
    assert {json.loads(l)["id"] for l in out.strip().splitlines()} == {"ADO-VALID"}


# ---------------------------------------------------------------------------
# render


def test_render_space_condenses_order_classes(payloads, tmp_path):
    cyclic = space_to_json(SIERPINSKI)
    cyclic["leq"] = [[0, 1], [1, 0]]
    p = tmp_path / "cyclic.json"
    p.write_text(json.dumps(cyclic))
    code, out, _ = run_cli("render", "--in", str(p))
    assert code == 0
    assert out.startswith("digraph pretop")
    assert '"0,1"' in out  # the two-element class renders as one node


def test_render_lattice_and_frame(payloads):
    code, out, _ = run_cli("render", "--in", payloads["lattice"])
    assert code == 0 and "digraph lattice" in out
    code, out, _ = run_cli("render", "--in", payloads["frame"])
    assert code == 0
    for color in ("red", "blue", "darkgreen", "orange"):
        assert f"color={color}" in out
    assert "cluster_o" in out and "cluster_l" in out


def test_render_too_large_exits_two(tmp_path, monkeypatch):
    import adframe.cli as cli_mod
    assert cli_mod.RENDER_NODE_CAP == 256
    monkeypatch.setattr(cli_mod, "RENDER_NODE_CAP", 3)
    p = tmp_path / "small.json"
    p.write_text(json.dumps(lattice_to_json(subset_lattice(CHAIN3, "opens"))))
    code, _, err = run_cli("render", "--in", str(p))
    assert code == 2
    assert "caps at 3" in err


def test_render_dot_is_importable_api():
    text = render_dot(SIERPINSKI)
    assert "rankdir=BT" in text


# ---------------------------------------------------------------------------
# the installed entry point


def test_module_entry_point_subprocess(payloads):
    proc = subprocess.run(
        [sys.executable, "-m", "adframe.cli", "validate", "--in",
         payloads["space"]],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ok"] is True
