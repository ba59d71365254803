import json
import os
import subprocess
import sys

from bnseries.cli import iter_sweep, main, run


def invoke(argv, stdin=None, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run(
        [sys.executable, "-m", "bnseries.cli", *argv],
        input=stdin,
        capture_output=True,
        text=True,
        env=full_env,
    )
    return proc


def test_check_payload():
    response, code = run({"command": "check", "params": {"g": 4, "r": 1, "d": 3}})
    assert code == 0
    assert response["status"] == "ok"
    assert response["payload"] == {"nonempty": True, "rho": 0}


def test_rho_command():
    response, code = run({"command": "rho", "params": {"g": 3, "r": 1, "d": 3}})
    assert (response["payload"], code) == ({"rho": 1}, 0)


def test_chain_build_and_verify_roundtrip():
    response, code = run({"command": "chain", "params": {"g": 3, "r": 1, "d": 3}})
    assert code == 0
    witness = response["payload"]
    assert len(witness["components"]) == 3
    verified, code = run(
        {
            "command": "chain",
            "params": {"g": 3, "r": 1, "d": 3, "verify": True, "witness": witness},
        }
    )
    assert code == 0
    assert verified["payload"] == {"valid": True, "violations": []}


def test_chain_verify_detects_tampering():
    response, _ = run({"command": "chain", "params": {"g": 2, "r": 1, "d": 3}})
    witness = response["payload"]
    witness["components"][0]["rho"] += 1
    verified, code = run(
        {
            "command": "chain",
            "params": {"g": 2, "r": 1, "d": 3, "verify": True, "witness": witness},
        }
    )
    assert code == 0
    assert not verified["payload"]["valid"]
    assert verified["payload"]["violations"]


def test_chain_empty_status():
    response, code = run(
        {"command": "chain", "params": {"g": 1, "r": 1, "d": 2, "alpha1": "0,1", "alpha2": "0,1"}}
    )
    assert code == 0
    assert response["status"] == "empty"
    assert response["payload"]["rho"] == -1


def test_invalid_alpha_is_exit_1():
    response, code = run(
        {"command": "check", "params": {"g": 2, "r": 1, "d": 3, "alpha1": "1,0"}}
    )
    assert code == 1
    assert response["status"] == "error"
    assert response["diagnostics"]


def test_unknown_command_is_exit_1():
    response, code = run({"command": "frobnicate", "params": {}})
    assert code == 1
    assert response["status"] == "error"


def test_strata_command():
    response, code = run({"command": "strata", "params": {"r": 1, "d": 3, "gy": 1, "gz": 2}})
    assert code == 0
    payload = response["payload"]
    assert payload["count"] == 6
    assert payload["glued_rho"] == 1
    assert payload["nonempty"]
    witness = next(e for e in payload["strata"] if e["alpha_y"] == [1, 1])
    assert witness["expected_dim"] == 1
    assert witness["y_nonempty"] and witness["z_nonempty"]


def test_realize_commands():
    response, code = run(
        {"command": "realize", "params": {"genus": 0, "r": 1, "d": 3, "a1": "0,2", "a2": "0,1"}}
    )
    assert code == 0
    assert response["payload"]["basis"] == [[1, 0, 1, 0], [0, 0, 1, 1]]
    assert response["payload"]["vanishing_at_p1"] == [0, 2]
    response, code = run(
        {"command": "realize", "params": {"genus": 1, "r": 1, "d": 2, "a1": "0,2", "a2": "0,2"}}
    )
    assert code == 0
    assert response["status"] == "empty"


def test_oracle_verify_commands():
    response, code = run(
        {"command": "oracle-verify", "params": {"genus": 0, "r": 0, "d": 2, "a1": "1", "a2": "1"}}
    )
    assert code == 0
    assert response["payload"]["agree"]
    assert response["payload"]["richardson_dim"] == 0
    response, code = run(
        {
            "command": "oracle-verify",
            "params": {"genus": 1, "r": 1, "d": 3, "alpha1": "1,2", "alpha2": "0,0"},
        }
    )
    assert code == 0
    assert response["payload"]["agree"]
    assert response["payload"]["generality_ok"]


def test_sweep_streams_grid_in_order():
    points = list(iter_sweep({"g_max": 1, "r_max": 1, "d_max": 2}))
    assert [p["params"]["g"] for p in points] == sorted(p["params"]["g"] for p in points)
    fail = next(p for p in points if p["params"] == {"g": 1, "r": 1, "d": 1, "alpha1": [0, 0], "alpha2": [0, 0]})
    assert fail["payload"] == {"nonempty": False, "rho": -1}


def test_cli_process_roundtrip_and_determinism():
    build = invoke(["chain", "--g", "3", "--r", "1", "--d", "3"])
    assert build.returncode == 0
    build2 = invoke(["chain", "--g", "3", "--r", "1", "--d", "3"])
    assert build.stdout == build2.stdout  # byte-identical responses
    verify = invoke(
        ["chain", "--g", "3", "--r", "1", "--d", "3", "--verify"], stdin=build.stdout
    )
    assert verify.returncode == 0
    assert json.loads(verify.stdout)["payload"]["valid"]


def test_cli_witness_file(tmp_path):
    build = invoke(["chain", "--g", "2", "--r", "1", "--d", "3"])
    witness = json.loads(build.stdout)["payload"]
    path = tmp_path / "witness.json"
    path.write_text(json.dumps(witness))
    verify = invoke(
        ["chain", "--g", "2", "--r", "1", "--d", "3", "--verify", "--witness-file", str(path)]
    )
    assert verify.returncode == 0
    assert json.loads(verify.stdout)["payload"]["valid"]


def test_cli_malformed_flag_value():
    proc = invoke(["check", "--g", "2", "--r", "1", "--d", "3", "--alpha1", "1,0"])
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["status"] == "error"


def test_cli_json_request():
    proc = invoke(["--json", '{"command":"rho","params":{"g":3,"r":1,"d":3}}'])
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"] == {"rho": 1}
    proc = invoke(["--json", "not json"])
    assert proc.returncode == 1


def test_cli_sweep_jsonl():
    proc = invoke(["sweep", "--g-max", "0", "--r-max", "1", "--d-max", "2"])
    assert proc.returncode == 0
    lines = [json.loads(line) for line in proc.stdout.splitlines()]
    assert len(lines) == 5
    assert all("params" in line and "payload" in line for line in lines)


def test_enum_budget_env_var():
    proc = invoke(
        ["oracle-verify", "--genus", "0", "--r", "1", "--d", "5", "--a1", "0,1", "--a2", "0,1"],
        env={"BN_ENUM_BUDGET": "10"},
    )
    assert proc.returncode == 2
    body = json.loads(proc.stdout)
    assert body["status"] == "error"
    assert any("InfeasibleSize" in d for d in body["diagnostics"])


def test_main_returns_exit_code(capsys):
    assert main(["check", "--g", "4", "--r", "1", "--d", "3"]) == 0
    out = capsys.readouterr().out
    assert json.loads(out)["payload"]["nonempty"]
