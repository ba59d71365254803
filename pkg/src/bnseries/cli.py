"""Command-line interface with JSON input/output and machine-readable exit codes.

Commands: rho, check, strata, chain (build / --verify), realize, oracle-verify,
sweep.  Every response is a single JSON document

    {"status": "ok" | "empty" | "error", "payload": ..., "diagnostics": [...]}

except sweep, which streams one JSON object per grid point.  Exit codes:
0 = decided (ok or empty), 1 = invalid input, 2 = internal failure such as
an exhausted enumeration budget.  Any command can also be driven by a single
request document via --json.  All output is byte-deterministic.
"""

import argparse
import json
import sys
from typing import Iterator

from .chains import (
    ConstructionFailed,
    build_chain,
    chain_violations,
    witness_from_dict,
    witness_to_dict,
)
from .core import BNProblem, VanishingSeq, all_ram_seqs, nonempty_criterion, problem, rho
from .oracle import (
    InfeasibleSize,
    NoFit,
    count_series,
    dim_fit,
    ec_descriptor_scan,
    ec_order_diff,
    load_fixture,
    profile_complementary,
)
from .realize import classify_g1_vanishing, g0_vanishing_check, realize_g0, realize_g1, richardson_dim
from .strata import (
    TwoComponentProblem,
    component_problems,
    enumerate_refined_strata,
    fiber_dim_bound,
    glued_problem,
    stratum_expected_dim,
)


class InvalidRequest(ValueError):
    """Malformed request: bad JSON, unknown command, or invalid parameters."""


def _parse_seq(value, what: str) -> tuple[int, ...]:
    if isinstance(value, str):
        parts = [s for s in value.replace(" ", "").split(",") if s]
    elif isinstance(value, (list, tuple)):
        parts = list(value)
    else:
        raise InvalidRequest(f"{what} must be a comma-separated list of integers")
    try:
        return tuple(int(x) for x in parts)
    except (TypeError, ValueError) as exc:
        raise InvalidRequest(f"{what} must contain integers: {exc}") from exc


def _get_int(params: dict, key: str, minimum: int | None = None) -> int:
    if key not in params or params[key] is None:
        raise InvalidRequest(f"missing required parameter '{key}'")
    try:
        value = int(params[key])
    except (TypeError, ValueError) as exc:
        raise InvalidRequest(f"parameter '{key}' must be an integer") from exc
    if minimum is not None and value < minimum:
        raise InvalidRequest(f"parameter '{key}' must be >= {minimum}")
    return value


def _build_problem(params: dict) -> BNProblem:
    g = _get_int(params, "g", 0)
    r = _get_int(params, "r", 0)
    d = _get_int(params, "d", 0)
    alpha1 = params.get("alpha1")
    alpha2 = params.get("alpha2")
    try:
        return problem(
            g,
            r,
            d,
            None if alpha1 is None else _parse_seq(alpha1, "alpha1"),
            None if alpha2 is None else _parse_seq(alpha2, "alpha2"),
        )
    except ValueError as exc:
        raise InvalidRequest(str(exc)) from exc


def _vanishing(params: dict, key: str, r: int, d: int) -> VanishingSeq:
    if key not in params or params[key] is None:
        raise InvalidRequest(f"missing required parameter '{key}'")
    entries = _parse_seq(params[key], key)
    try:
        seq = VanishingSeq(entries, d)
    except ValueError as exc:
        raise InvalidRequest(str(exc)) from exc
    if seq.r != r:
        raise InvalidRequest(f"'{key}' must have length r+1 = {r + 1}")
    return seq


def _cmd_rho(params: dict):
    p = _build_problem(params)
    return "ok", {"rho": rho(p)}


def _cmd_check(params: dict):
    p = _build_problem(params)
    return "ok", {"nonempty": nonempty_criterion(p), "rho": rho(p)}


def _cmd_strata(params: dict):
    r = _get_int(params, "r", 0)
    d = _get_int(params, "d", 0)
    if r > d:
        raise InvalidRequest("need r <= d")
    with_problem = params.get("gy") is not None or params.get("gz") is not None
    two = None
    if with_problem:
        gy = _get_int(params, "gy", 0)
        gz = _get_int(params, "gz", 0)
        base = _build_problem({**params, "g": gy + gz})
        two = TwoComponentProblem(gy, gz, r, d, base.alpha1, base.alpha2)
    strata = []
    for s in enumerate_refined_strata(r, d):
        entry = {
            "alpha_y": list(s.alpha_y.entries),
            "alpha_z": list(s.alpha_z.entries),
            "refined": s.refined,
            "fiber_bound": fiber_dim_bound(s),
        }
        if two is not None:
            p_y, p_z = component_problems(two, s)
            entry["expected_dim"] = stratum_expected_dim(two, s)
            entry["y_nonempty"] = nonempty_criterion(p_y)
            entry["z_nonempty"] = nonempty_criterion(p_z)
        strata.append(entry)
    payload = {"r": r, "d": d, "count": len(strata), "strata": strata}
    if two is not None:
        payload["glued_rho"] = rho(glued_problem(two))
        payload["nonempty"] = any(e["y_nonempty"] and e["z_nonempty"] for e in strata)
    return "ok", payload


def _cmd_chain(params: dict):
    p = _build_problem(params)
    if params.get("verify"):
        witness_data = params.get("witness")
        if witness_data is None:
            raise InvalidRequest("verify mode needs a 'witness' object")
        if isinstance(witness_data, dict) and "payload" in witness_data:
            witness_data = witness_data["payload"]
        try:
            w = witness_from_dict(witness_data)
        except ValueError as exc:
            raise InvalidRequest(str(exc)) from exc
        violations = chain_violations(w, p)
        return "ok", {"valid": not violations, "violations": violations}
    w = build_chain(p)
    if w is None:
        return "empty", {"nonempty": False, "rho": rho(p)}
    return "ok", witness_to_dict(w)


def _cmd_realize(params: dict):
    genus = _get_int(params, "genus", 0)
    r = _get_int(params, "r", 0)
    d = _get_int(params, "d", 0)
    if genus not in (0, 1):
        raise InvalidRequest("realize supports genus 0 or 1")
    if r > d:
        raise InvalidRequest("need r <= d")
    a1 = _vanishing(params, "a1", r, d)
    a2 = _vanishing(params, "a2", r, d)
    if genus == 0:
        series = realize_g0(r, d, a1, a2)
        if series is None:
            return "empty", {"genus": 0}
        at0, at_inf = g0_vanishing_check(series)
        return "ok", {
            "genus": 0,
            "d": d,
            "basis": [list(row) for row in series.basis],
            "vanishing_at_p1": list(at0.entries),
            "vanishing_at_p2": list(at_inf.entries),
        }
    bundle = realize_g1(r, d, a1, a2)
    if bundle is None:
        return "empty", {"genus": 1}
    return "ok", {
        "genus": 1,
        "descriptor": {
            "kind": "special" if bundle.is_special else "generic",
            "a": bundle.a,
            "d": d,
        },
        "vanishing_p1": list(classify_g1_vanishing(bundle, 1).entries),
        "vanishing_p2": list(classify_g1_vanishing(bundle, 2).entries),
    }


def _cmd_oracle_verify(params: dict):
    genus = _get_int(params, "genus", 0)
    if genus == 0:
        r = _get_int(params, "r", 0)
        d = _get_int(params, "d", 0)
        if r > d:
            raise InvalidRequest("need r <= d")
        a1 = _vanishing(params, "a1", r, d)
        a2 = _vanishing(params, "a2", r, d)
        expected = richardson_dim(d, a1, a2)
        profile = profile_complementary(d + 1)
        counts = [[q, count_series(q, profile, r, a1.entries, a2.entries)] for q in (2, 3, 4)]
        if expected is None:
            agree = all(n == 0 for _, n in counts)
            payload = {
                "genus": 0,
                "richardson_dim": None,
                "counts": counts,
                "fitted_dim": None,
                "agree": agree,
            }
            return "empty", payload
        try:
            fitted = dim_fit(counts)
        except NoFit:
            fitted = "nofit"
        return "ok", {
            "genus": 0,
            "richardson_dim": expected,
            "counts": counts,
            "fitted_dim": fitted,
            "agree": fitted == expected,
        }
    if genus == 1:
        p = _build_problem({**params, "g": 1})
        fixture = params.get("fixture", "general")
        try:
            model = load_fixture(str(fixture))
        except KeyError as exc:
            raise InvalidRequest(f"unknown fixture {fixture!r}") from exc
        order = ec_order_diff(model)
        scan = ec_descriptor_scan(model, p)
        generality_ok = order > p.d
        payload = {
            "genus": 1,
            "fixture": fixture,
            "order_diff": order,
            "generality_ok": generality_ok,
            "criterion": nonempty_criterion(p),
            "oracle_nonempty": scan["nonempty"],
            "descriptors": [
                {
                    "bundle": e["bundle"],
                    "counts": [list(c) for c in e["counts"]],
                    "dim": e["dim"],
                    "nonempty": e["nonempty"],
                }
                for e in scan["descriptors"]
            ],
        }
        if generality_ok:
            payload["agree"] = payload["criterion"] == payload["oracle_nonempty"]
        return ("ok" if scan["nonempty"] else "empty"), payload
    raise InvalidRequest("oracle-verify supports genus 0 or 1")


def iter_sweep(params: dict) -> Iterator[dict]:
    """One result object per grid point, in grid order."""
    g_max = _get_int(params, "g_max", 0)
    r_max = _get_int(params, "r_max", 0)
    d_max = _get_int(params, "d_max", 0)
    command = params.get("command", "check")
    if command not in ("check", "chain"):
        raise InvalidRequest("sweep command must be 'check' or 'chain'")
    alphas = params.get("alphas", "zero")
    if alphas not in ("zero", "all"):
        raise InvalidRequest("alphas must be 'zero' or 'all'")
    handler = _cmd_check if command == "check" else _cmd_chain
    for g in range(g_max + 1):
        for d in range(d_max + 1):
            for r in range(min(r_max, d) + 1):
                if alphas == "zero":
                    pairs = [((0,) * (r + 1), (0,) * (r + 1))]
                else:
                    seqs = [s.entries for s in all_ram_seqs(r, d)]
                    pairs = [(s1, s2) for s1 in seqs for s2 in seqs]
                for a1, a2 in pairs:
                    point = {"g": g, "r": r, "d": d, "alpha1": list(a1), "alpha2": list(a2)}
                    status, payload = handler(
                        {"g": g, "r": r, "d": d, "alpha1": a1, "alpha2": a2}
                    )
                    yield {"params": point, "status": status, "payload": payload}


def _cmd_sweep(params: dict):
    return "ok", {"points": list(iter_sweep(params))}


_HANDLERS = {
    "rho": _cmd_rho,
    "check": _cmd_check,
    "strata": _cmd_strata,
    "chain": _cmd_chain,
    "realize": _cmd_realize,
    "oracle-verify": _cmd_oracle_verify,
    "sweep": _cmd_sweep,
}


def run(request: dict) -> tuple[dict, int]:
    """Execute a request document; returns (response, exit_code)."""
    try:
        if not isinstance(request, dict):
            raise InvalidRequest("request must be a JSON object")
        command = request.get("command")
        if command not in _HANDLERS:
            raise InvalidRequest(f"unknown command {command!r}")
        params = request.get("params", {})
        if not isinstance(params, dict):
            raise InvalidRequest("params must be a JSON object")
        status, payload = _HANDLERS[command](params)
        return {"status": status, "payload": payload, "diagnostics": []}, 0
    except (ConstructionFailed, InfeasibleSize, NoFit) as exc:
        return (
            {
                "status": "error",
                "payload": {},
                "diagnostics": [f"{type(exc).__name__}: {exc}"],
            },
            2,
        )
    except (InvalidRequest, ValueError) as exc:
        return {"status": "error", "payload": {}, "diagnostics": [str(exc)]}, 1
    except Exception as exc:  # internal failure, still machine readable
        return (
            {
                "status": "error",
                "payload": {},
                "diagnostics": [f"{type(exc).__name__}: {exc}"],
            },
            2,
        )


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidRequest(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="bnseries", description=__doc__)
    parser.add_argument(
        "--json",
        metavar="REQUEST",
        help="full request document as a JSON string, or '-' to read stdin",
    )
    sub = parser.add_subparsers(dest="cmd")

    def add(name, **flags):
        sp = sub.add_parser(name)
        for flag, kwargs in flags.items():
            sp.add_argument(f"--{flag.replace('_', '-')}", **kwargs)
        return sp

    for name in ("rho", "check"):
        add(
            name,
            g={"type": int},
            r={"type": int},
            d={"type": int},
            alpha1={"type": str},
            alpha2={"type": str},
        )
    add(
        "strata",
        r={"type": int},
        d={"type": int},
        gy={"type": int},
        gz={"type": int},
        alpha1={"type": str},
        alpha2={"type": str},
    )
    chain = add(
        "chain",
        g={"type": int},
        r={"type": int},
        d={"type": int},
        alpha1={"type": str},
        alpha2={"type": str},
        witness_file={"type": str, "help": "witness JSON path, or '-' for stdin"},
    )
    chain.add_argument("--verify", action="store_true")
    add(
        "realize",
        genus={"type": int},
        r={"type": int},
        d={"type": int},
        a1={"type": str},
        a2={"type": str},
    )
    add(
        "oracle-verify",
        genus={"type": int},
        r={"type": int},
        d={"type": int},
        a1={"type": str},
        a2={"type": str},
        alpha1={"type": str},
        alpha2={"type": str},
        fixture={"type": str, "default": "general"},
    )
    add(
        "sweep",
        g_max={"type": int},
        r_max={"type": int},
        d_max={"type": int},
        command={"type": str, "default": "check"},
        alphas={"type": str, "default": "zero"},
    )
    return parser


def _request_from_args(args) -> dict:
    if args.json is not None:
        text = sys.stdin.read() if args.json == "-" else args.json
        try:
            request = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidRequest(f"request is not valid JSON: {exc}") from exc
        return request
    if args.cmd is None:
        raise InvalidRequest("no command given (see --help)")
    params = {
        k: v
        for k, v in vars(args).items()
        if k not in ("cmd", "json") and v is not None and v is not False
    }
    if args.cmd == "chain" and params.pop("witness_file", None) is not None:
        path = args.witness_file
        try:
            text = sys.stdin.read() if path == "-" else open(path).read()
        except OSError as exc:
            raise InvalidRequest(f"cannot read witness file: {exc}") from exc
        try:
            params["witness"] = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidRequest(f"witness is not valid JSON: {exc}") from exc
    elif args.cmd == "chain" and getattr(args, "verify", False) and "witness" not in params:
        try:
            params["witness"] = json.loads(sys.stdin.read())
        except json.JSONDecodeError as exc:
            raise InvalidRequest(f"witness is not valid JSON: {exc}") from exc
    return {"command": args.cmd, "params": params}


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        request = _request_from_args(args)
    except InvalidRequest as exc:
        print(_dump({"status": "error", "payload": {}, "diagnostics": [str(exc)]}))
        return 1
    if isinstance(request, dict) and request.get("command") == "sweep":
        try:
            for line in iter_sweep(request.get("params", {})):
                print(_dump(line))
            return 0
        except (ConstructionFailed, InfeasibleSize, NoFit) as exc:
            print(
                _dump(
                    {
                        "status": "error",
                        "payload": {},
                        "diagnostics": [f"{type(exc).__name__}: {exc}"],
                    }
                )
            )
            return 2
        except (InvalidRequest, ValueError) as exc:
            print(_dump({"status": "error", "payload": {}, "diagnostics": [str(exc)]}))
            return 1
    response, code = run(request)
    print(_dump(response))
    return code


if __name__ == "__main__":
    sys.exit(main())
