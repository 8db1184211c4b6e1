#!/usr/bin/env python3
"""End-to-end checks of the lrckit command line: exit codes, JSON payloads,
and byte-level determinism."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]
failures = 0


def run(*args, expect=0):
    global failures
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        failures += 1
        print(f"FAIL {' '.join(args)}: exit {proc.returncode} != {expect}\n{proc.stderr}")
    return proc


def check(cond, what):
    global failures
    if not cond:
        failures += 1
        print(f"FAIL {what}")
    else:
        print(f"ok   {what}")


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    code1 = tmp / "code1.json"
    code2 = tmp / "code2.json"

    # construct + verify the identical-sets instance
    run("construct", "--q", "7", "--r", "3", "--delta", "3", "--v", "1", "--w", "5",
        "--design", "identical", "--out", str(code1))
    doc = json.loads(code1.read_text())
    check(doc["alphas"] == [5, 6] and doc["sets"][0] == [0, 1, 2, 3, 4],
          "construct picks sets {0..4} and alphas {5,6}")
    proc = run("verify", str(code1))
    cert = json.loads(proc.stdout)
    check(cert["d"] == 5 and cert["optimal"] and cert["locality_ok"] and cert["mds_partition_ok"],
          "verify certifies the [25,13] code optimal (exit 0)")

    # determinism: identical invocations give identical bytes
    run("construct", "--q", "7", "--r", "3", "--delta", "3", "--v", "1", "--w", "5",
        "--design", "identical", "--out", str(code2))
    check(code1.read_bytes() == code2.read_bytes(), "construct output is byte-identical across runs")

    # sunflower instance with n > q
    sun = tmp / "sun.json"
    run("construct", "--q", "13", "--r", "2", "--delta", "2", "--v", "1", "--w", "5",
        "--design", "sunflower", "--out", str(sun))
    cert = json.loads(run("verify", str(sun)).stdout)
    check(cert["n"] == 15 and cert["d"] == 3 and cert["optimal"], "sunflower [15,9] verifies optimal")

    # encode / decode round trip with mixed erasures
    word = run("encode", str(code1), "--info", "1,2,3,4,5,6,0,1,2,3,4,5,6").stdout.strip()
    symbols = word.split(",")
    check(len(symbols) == 25, "encode emits an n-symbol word")
    symbols[2] = "_"
    symbols[11] = "_"
    decoded = run("decode", str(code1), "--word", ",".join(symbols)).stdout.strip()
    check(decoded == word, "decode restores the two erased symbols")

    # unrecoverable pattern: erase a full repair set plus more than d-1 total
    bad = ["_"] * 25
    run("decode", str(code1), "--word", ",".join(bad), expect=1)
    check(True, "decoding an all-erased word exits 1")

    # bounds report includes the delta=2 length bound value 274
    rep = json.loads(run("bounds", "--q", "13", "--r", "2", "--delta", "2", "--k", "9", "--d", "5").stdout)
    val = {b["name"]: b for b in rep["bounds"]}
    check(val["length_bound_delta2"]["applicable"] and val["length_bound_delta2"]["value"] == 274,
          "bounds reports the delta=2 length bound 274")

    # designs: emit + check
    fam = tmp / "lines.json"
    run("designs", "--kind", "affine-plane", "--p", "5", "--out", str(fam))
    lines = json.loads(fam.read_text())
    check(lines["ground_size"] == 25 and len(lines["blocks"]) == 30, "affine-plane design emitted")
    chk = json.loads(run("designs", "check", "--in", str(fam), "--mu", "2", "--delta", "2",
                         "--packing", "2").stdout)
    check(chk["mu_condition"]["pass"] and chk["packing"]["pass"], "design checkers pass on the affine plane")

    # reduce: delta, then m2; puncture on the sunflower code is rejected (d <= r+delta)
    red = tmp / "reduced.json"
    run("reduce", str(code1), "--mode", "delta", "--out", str(red))
    rdoc = json.loads(red.read_text())
    check(len(rdoc["G"][0]) == 20 and rdoc["delta"] == 2, "delta reduction emits a [20,13] code")
    m2 = json.loads(run("reduce", str(red), "--mode", "m2").stdout)
    check(m2["rows"] == 2 and m2["cols"] == 15, "m2 reduction emits a 2x15 parity matrix")
    run("reduce", str(sun), "--mode", "puncture", expect=2)
    check(True, "puncture reduction rejects d <= r+delta with exit 2")

    # a valid but non-optimal code exits 1: two repetition pairs read as an
    # (r=2, delta=2) code fall short of the distance bound
    subopt = tmp / "subopt.json"
    subopt.write_text(json.dumps({
        "q": 7, "p": 7, "m": 1, "r": 2, "delta": 2, "v": 0, "w": 2,
        "alphas": [], "sets": [],
        "G": [[1, 0, 1, 0], [0, 1, 0, 1]],
        "H": [[6, 0, 1, 0], [0, 6, 0, 1]],
        "repair_sets": [[0, 2], [1, 3]],
        "claimed_d": 2,
    }))
    cert = json.loads(run("verify", str(subopt), expect=1).stdout)
    check(cert["d"] == 2 and cert["singleton_bound"] == 3 and not cert["optimal"],
          "non-optimal code verifies with exit 1")

    # wrong info length exits 2
    run("encode", str(code1), "--info", "1,2,3", expect=2)
    check(True, "wrong info length exits 2")

    # malformed JSON exits 2
    bad_file = tmp / "bad.json"
    bad_file.write_text("{not json")
    run("verify", str(bad_file), expect=2)
    check(True, "malformed JSON exits 2")

    # invalid parameters exit 2
    run("construct", "--q", "6", "--r", "2", "--delta", "2", "--v", "1", "--w", "2",
        "--design", "identical", expect=2)
    check(True, "non-prime-power q exits 2")

if failures:
    print(f"{failures} CLI check(s) failed")
    sys.exit(1)
print("all CLI checks passed")
