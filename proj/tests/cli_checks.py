#!/usr/bin/env python3
"""End-to-end checks of the CLI: output formats, exit codes, determinism."""

import csv
import io
import json
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
failures = []


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        failures.append(
            f"{args}: exit {proc.returncode}, wanted {expect}; stderr: {proc.stderr.strip()}"
        )
    return proc


def run_raw(*args):
    return subprocess.run([BIN, *args], capture_output=True).stdout


def check(cond, what):
    if not cond:
        failures.append(what)


# published twin counts come back exactly, with the misprints flagged
p = run("table", "--id", "3")
rows = list(csv.DictReader(io.StringIO(p.stdout)))
check(
    [r["n_twin"] for r in rows]
    == ["3", "15", "135", "1485", "22275", "378675", "7952175",
        "214708725", "6226553025", "217929355875"],
    "table 3 n_twin column",
)
check(all(r["schema_version"] == "1" for r in rows), "schema_version on every row")
agree = {r["k"]: r for r in rows}
check(agree["11"]["n_twin_agree"] == "discrepant", "k=11 twin count flags the misprint")
check(agree["5"]["rho_agree"] == "discrepant", "k=5 rho flags the misprint")
check(agree["12"]["n_twin_agree"] == "equal", "k=12 twin count agrees")

# bounds row arrives as json numbers
p = run("bounds", "--l", "5", "--format", "json")
doc = json.loads(p.stdout)
row = doc["rows"][0]
check(row["k"] == 15 and row["bound_floor"] == 43 and row["actual"] == 74,
      f"bounds l=5 values: {row}")
check(
    isinstance(row["k"], int) and isinstance(row["bound_floor"], int)
    and isinstance(row["actual"], int),
    "bounds l=5 number typing",
)
check(doc["schema_version"] == "1" and doc["command"] == "bounds", "bounds envelope")

# three twin pairs at level 3
p = run("generate", "--k", "3", "--twins")
rows = list(csv.DictReader(io.StringIO(p.stdout)))
check(
    [(r["low"], r["high"]) for r in rows] == [("11", "13"), ("17", "19"), ("29", "31")],
    "level-3 twins",
)

# composite survivors of level 4 get the asterisk
p = run("generate", "--k", "4", "--mark-composites")
rows = list(csv.DictReader(io.StringIO(p.stdout)))
flagged = {r["value"] for r in rows if r["flag"] == "*"}
check(flagged == {"121", "143", "169", "187", "209"},
      f"level-4 composite flags: {sorted(flagged)}")
check(len(rows) == 48, "level-4 survivor count")

# --limit truncates without changing the leading rows (11 is out at level 5:
# it carries the factor P_5)
p = run("generate", "--k", "5", "--limit", "4")
rows = list(csv.DictReader(io.StringIO(p.stdout)))
check([r["value"] for r in rows] == ["13", "17", "19", "23"], "limited level-5 prefix")

# provenance carries the table-1 misprint
p = run("table", "--id", "1", "--format", "json")
doc = json.loads(p.stdout)
check(doc["provenance"].get("table1", {}).get("k=7.pi_minus_k") == "discrepant",
      "table-1 provenance")

# usage errors exit 2, help exits 0
run("table", expect=2)
run("frobnicate", expect=2)
run("generate", "--k", "3", "--twins", "--mark-composites", expect=2)
run("--help", expect=0)

# out-of-range requests exit 3
run("find-twin-above", "--n", "1000000", expect=3)
run("counts", "--k", "99", expect=3)

# tree formats
p = run("tree", "--to-k", "3")
check(
    p.stdout.splitlines() == ["(5,7)@2", "  (11,13)@3", "  (17,19)@3", "  (29,31)@3"],
    "tree text",
)
p = run("tree", "--to-k", "3", "--format", "dot")
check(
    p.stdout.startswith("digraph twins {") and '"(5,7)@2" -> "(17,19)@3";' in p.stdout,
    "tree dot",
)

# identical invocations with a warm cache are byte-identical
with tempfile.TemporaryDirectory() as d:
    args = ("table", "--id", "bounds", "--cache-dir", d, "--format", "json")
    run(*args)  # warm the cache
    a = run_raw(*args)
    b = run_raw(*args)
    check(a == b and a, "determinism with warm cache")

if failures:
    for f in failures:
        print("FAIL:", f)
    sys.exit(1)
print("cli checks passed")
