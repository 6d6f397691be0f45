#!/usr/bin/env python3
"""Golden tests for the srmatch command-line tool: byte-stable reports,
exit-code contract, generator/verifier round-trips, determinism."""

import os
import subprocess
import sys
import tempfile

CLI = os.environ["SRMATCH_CLI"]
DATA = os.environ["SRMATCH_TEST_DATA"]

failures = 0


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, input=stdin)


def check(name, ok, extra=""):
    global failures
    print(("ok" if ok else "FAIL") + f": {name}" + (f" -- {extra}" if extra and not ok else ""))
    if not ok:
        failures += 1


def expect(name, result, code, stdout=None, stdout_contains=None):
    ok = result.returncode == code
    if ok and stdout is not None:
        ok = result.stdout == stdout
    if ok and stdout_contains is not None:
        ok = all(s in result.stdout for s in stdout_contains)
    check(name, ok, f"rc={result.returncode} out={result.stdout!r} err={result.stderr!r}")


def data(name):
    return os.path.join(DATA, name)


# solve -------------------------------------------------------------------
expect("solve single instance", run("solve", data("path3.sri")), 0,
       stdout="verdict: stable\nmatching:\n1 2\ncost: 2\n")
expect("solve unsolvable exits 2", run("solve", data("triangle.sri")), 2,
       stdout="verdict: unsolvable\n")
expect("solve rejects ties", run("solve", data("tied_triangle.srti")), 1)
expect("solve json", run("solve", data("path3.sri"), "--json"), 0,
       stdout_contains=['"verdict": "stable"', '"cost": 2'])

# enumerate ---------------------------------------------------------------
expect("enumerate four cycle", run("enumerate", data("four_cycle.sri")), 0,
       stdout="verdict: ok\ncount: 2\nmatching 1:\n1 2\n3 4\nmatching 2:\n1 4\n2 3\n")
expect("enumerate empty exits 2", run("enumerate", data("triangle.sri")), 2,
       stdout="verdict: ok\ncount: 0\n")
expect("enumerate cap errors", run("enumerate", data("four_cycle.sri"), "--cap", "1"), 1)

# egal --------------------------------------------------------------------
expect("egal exact four cycle", run("egal", data("four_cycle.sri"), "--mode", "exact"), 0,
       stdout="verdict: stable\nmatching:\n1 2\n3 4\ncost: 6\n")
expect("egal exact unsolvable exits 2",
       run("egal", data("triangle.sri"), "--mode", "exact"), 2)
expect("egal approx guarantee line",
       run("egal", data("four_cycle.sri"), "--mode", "approx", "--d", "3"), 0,
       stdout="verdict: stable\nmatching:\n1 2\n3 4\ncost: 6\nguarantee: 9/7\n")
expect("egal approx with oracle",
       run("egal", data("four_cycle.sri"), "--mode", "approx", "--d", "3", "--oracle"), 0,
       stdout_contains=["oracle-cost: 6", "ratio: 1", "count12-output: 2"])

# minbp -------------------------------------------------------------------
expect("minbp tied triangle", run("minbp", data("tied_triangle.srti"), "--mode", "auto"), 0,
       stdout="verdict: ok\nbp: 1\nmatching:\n1 3\n".replace("bp: 1", "bp: 0"))
expect("minbp strict triangle brute", run("minbp", data("triangle.sri"), "--mode", "brute"), 0,
       stdout_contains=["bp: 1"])
expect("minbp kmax verdict", run("minbp", data("triangle.sri"), "--mode", "brute",
                                 "--kmax", "0"), 2,
       stdout="verdict: none-within-kmax\nkmax: 0\n")

# solvable ----------------------------------------------------------------
expect("solvable tied triangle", run("solvable", data("tied_triangle.srti")), 0,
       stdout="verdict: stable\nmatching:\n1 3\n")
expect("solvable strict triangle", run("solvable", data("triangle.sri")), 2,
       stdout="verdict: unsolvable\n")
r = run("solvable", data("four_cycle.sri"), "--budget", "1")
expect("solvable budget timeout", r, 1, stdout_contains=["verdict: timeout", "nodes:"])

# gen / verify ------------------------------------------------------------
with tempfile.TemporaryDirectory() as tmp:
    prefix = os.path.join(tmp, "k4_bundle.sri")
    r = run("gen", "vc", "--graph", data("k4.graph"), "--k", "3", "--out", prefix)
    expect("gen vc writes bundle", r, 0, stdout="K'=121\n")
    check("gen vc sidecar exists", os.path.exists(prefix + ".map"))
    head = open(prefix).readline()
    check("gen vc header comment", head == "# K' = 121\n", head)

    r = run("verify", "reduction", prefix, "--witness", data("k4_cover.witness"))
    expect("verify vc witness", r, 0, stdout_contains=[
        "ok: witness is a vertex cover",
        "ok: cover matching is stable",
        "ok: cost equals 7m + 19n + |C| = 121",
        "ok: cover -> matching -> cover round-trip",
    ])

    bad = os.path.join(tmp, "bad.witness")
    with open(bad, "w") as f:
        f.write("1 2\n")
    expect("verify rejects non-cover", run("verify", "reduction", prefix, "--witness", bad), 1)

    sat_prefix = os.path.join(tmp, "sat_bundle.srti")
    r = run("gen", "sat", "--cnf", data("dup_clause.cnf"), "--out", sat_prefix)
    expect("gen sat agent count", r, 0, stdout="agents=92\n")
    r = run("verify", "reduction", sat_prefix, "--witness", data("dup_clause.witness"))
    expect("verify sat witness", r, 0, stdout_contains=[
        "ok: witness satisfies the formula",
        "ok: witness matching is stable",
        "ok: witness matching is perfect",
        "ok: assignment -> matching -> assignment round-trip",
    ])

    amp_prefix = os.path.join(tmp, "amp_bundle.srti")
    r = run("gen", "sat", "--cnf", data("dup_clause.cnf"), "--copies", "2",
            "--out", amp_prefix)
    expect("gen amplified agent count", r, 0, stdout="agents=187\n")
    r = run("verify", "reduction", amp_prefix, "--witness", data("dup_clause.witness"))
    expect("verify amplified witness", r, 0,
           stdout_contains=["ok: amplified witness has exactly 1 blocking edge"])

    # solvable on the generated bundle file
    expect("solvable on sat bundle", run("solvable", sat_prefix), 0,
           stdout_contains=["verdict: stable"])

# gen to stdout -----------------------------------------------------------
r = run("gen", "vc", "--graph", data("k4.graph"), "--k", "0")
expect("gen vc stdout", r, 0, stdout_contains=["# K' = 118", "sri 72"])

# random ------------------------------------------------------------------
r1 = run("random", "--n", "8", "--d", "3", "--ties", "0.4", "--seed", "7")
r2 = run("random", "--n", "8", "--d", "3", "--ties", "0.4", "--seed", "7")
r3 = run("random", "--n", "8", "--d", "3", "--ties", "0.4", "--seed", "8")
check("random deterministic per seed", r1.stdout == r2.stdout and r1.returncode == 0)
check("random varies with seed", r1.stdout != r3.stdout)

# determinism of reports across runs ---------------------------------------
a = run("enumerate", data("four_cycle.sri"), "--json")
b = run("enumerate", data("four_cycle.sri"), "--json")
check("byte-identical reports", a.stdout == b.stdout and a.stdout != "")

# usage errors --------------------------------------------------------------
expect("usage error exits 64", run("egal", data("four_cycle.sri")), 64)
expect("unknown subcommand exits 64", run("frobnicate"), 64)
expect("missing file exits 1", run("solve", os.path.join(DATA, "nope.sri")), 1)

print(f"{failures} failures")
sys.exit(1 if failures else 0)
